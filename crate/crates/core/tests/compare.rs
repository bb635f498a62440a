mod common;

use num_rational::Ratio;
use tricent::centrality::{CentralityVector, Method};
use tricent::compare::*;
use tricent::fixtures::{erdos_renyi, Fixture};
use tricent::{triangle_centrality, Graph};

fn rank_of_a(f: Fixture, c: fn(&Graph) -> CentralityVector) -> usize {
    let g = f.graph();
    let r = rank_vertices(&c(&g), DEFAULT_TIE_EPS);
    r.rank[g.vertex("a").unwrap()]
}

fn ev(g: &Graph) -> CentralityVector {
    eigenvector_centrality(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

fn pr(g: &Graph) -> CentralityVector {
    pagerank(g, DEFAULT_DAMPING, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

#[test]
fn vertex_a_ranks() {
    use Fixture::*;
    let graphs = [
        HubOfTriangles,
        BridgedSixCliques,
        StarAndTriangles,
        CliqueWithBranches,
    ];
    // Columns: TC, BC, CC, DC, EV, PR.
    let expected = [
        [1, 1, 1, 1, 1, 7],
        [1, 1, 1, 25, 25, 25],
        [1, 2, 1, 2, 2, 2],
        [1, 2, 2, 2, 1, 2],
    ];
    for (f, want) in graphs.into_iter().zip(expected) {
        let got = [
            rank_of_a(f, triangle_centrality),
            rank_of_a(f, betweenness_centrality),
            rank_of_a(f, closeness_centrality),
            rank_of_a(f, degree_centrality),
            rank_of_a(f, ev),
            rank_of_a(f, pr),
        ];
        assert_eq!(got, want, "{}", f.name());
    }
}

#[test]
fn iterative_measures_normalised() {
    for seed in 0..20 {
        let g = erdos_renyi(40, 0.15, seed);
        let p = pr(&g);
        assert!(p.converged);
        assert!((p.scores.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
        let e = ev(&g);
        assert!(e.scores.iter().all(|&x| x >= 0.0));
        let norm = e.scores.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn ranking_is_scale_invariant() {
    for f in Fixture::ALL {
        let tc = triangle_centrality(&f.graph());
        let mut scaled = tc.clone();
        for s in scaled.scores.iter_mut() {
            *s *= 7.5;
        }
        let (a, b) = (rank_vertices(&tc, 1e-9), rank_vertices(&scaled, 1e-9));
        assert_eq!(a.order, b.order);
        assert_eq!(a.groups, b.groups);
    }
}

#[test]
fn jaccard_symmetry_and_range() {
    let g = Fixture::Dolphins.graph();
    let rankings: Vec<Ranking> = std::iter::once(triangle_centrality(&g))
        .chain(classical_measures(&g))
        .map(|c| rank_vertices(&c, DEFAULT_TIE_EPS))
        .collect();
    for a in &rankings {
        assert_eq!(top_k_jaccard(a, a, 10).unwrap(), Ratio::from_integer(1));
        for b in &rankings {
            let j = top_k_jaccard(a, b, 10).unwrap();
            assert_eq!(j, top_k_jaccard(b, a, 10).unwrap());
            assert!(j <= Ratio::from_integer(1));
        }
    }
}

#[test]
fn dot_matrix_over_bundled_graphs() {
    let per_graph: Vec<Vec<Ranking>> = [
        Fixture::Borgatti,
        Fixture::Karate,
        Fixture::Dolphins,
        Fixture::Hijackers,
    ]
    .into_iter()
    .map(|f| {
        let g = f.graph();
        std::iter::once(triangle_centrality(&g))
            .chain(classical_measures(&g))
            .map(|c| rank_vertices(&c, DEFAULT_TIE_EPS))
            .collect()
    })
    .collect();
    let report = agreement_dot_matrix(&per_graph).unwrap();
    assert_eq!(report.measures[0], Method::Triangle);
    // Triangle centrality stands alone on karate.
    assert!(report.dots[0][1].iter().all(|&b| !b));
    assert!(report.empty_rows[0] >= 1);
    for i in 0..report.measures.len() {
        for j in 0..report.measures.len() {
            assert_eq!(report.similarity[i][j], report.similarity[j][i]);
        }
    }
}
