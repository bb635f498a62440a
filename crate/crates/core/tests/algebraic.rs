#![allow(clippy::needless_range_loop)]

mod common;

use common::{dense_triangle_matrix, random_suite, reference_triangles};
use tricent::algebraic::{
    adjacency_matrix, build_triangle_matrix, tc_algebraic, triangle_identities, SparseMatrix,
};
use tricent::fixtures::Fixture;
use tricent::{triangle_centrality, Graph};

fn check_identities(g: &Graph) -> SparseMatrix {
    let t = build_triangle_matrix(g);
    let r = reference_triangles(g);
    assert!(t.is_symmetric());
    let (per_vertex, total) = triangle_identities(&t).unwrap();
    assert_eq!(per_vertex, r.per_vertex);
    assert_eq!(total, r.total);
    for v in 0..g.n() {
        assert_eq!(t.row_pattern(v), r.neighbors[v].as_slice());
        assert!(t.row(v).all(|(u, x)| x > 0 && g.has_edge(v, u)));
    }
    t
}

#[test]
fn matches_dense_product_on_small_graphs() {
    for g in random_suite(200, 32, &[0.1, 0.3, 0.6, 0.9], 3) {
        let t = check_identities(&g);
        let dense = dense_triangle_matrix(&g);
        for i in 0..g.n() {
            for j in 0..g.n() {
                assert_eq!(t.get(i, j), dense[i][j]);
            }
        }
    }
}

#[test]
fn identities_on_fixtures() {
    for f in Fixture::ALL {
        check_identities(&f.graph());
    }
    let (_, total) = triangle_identities(&build_triangle_matrix(&Fixture::Karate.graph())).unwrap();
    assert_eq!(total, 45);
}

#[test]
fn scores_match_combinatorial() {
    for f in Fixture::ALL {
        let g = f.graph();
        let c = tc_algebraic(&adjacency_matrix(&g), &build_triangle_matrix(&g)).unwrap();
        let tc = triangle_centrality(&g);
        assert_eq!(c.triangles, tc.triangles);
        for (a, b) in c.scores.iter().zip(&tc.scores) {
            assert!((a - b).abs() <= 1e-12);
        }
    }
    let g = Fixture::WorkedExample.graph();
    let c = tc_algebraic(&adjacency_matrix(&g), &build_triangle_matrix(&g)).unwrap();
    assert_eq!(c.scores[g.vertex("v").unwrap()], 1.0);
}

#[test]
fn coordinate_dump_is_one_based() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let text = build_triangle_matrix(&g).to_coordinate_text();
    assert_eq!(text, "1 2 1\n1 3 1\n2 1 1\n2 3 1\n3 1 1\n3 2 1\n");
}
