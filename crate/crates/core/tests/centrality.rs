#![allow(clippy::needless_range_loop)]

mod common;

use common::{complete, max_abs_diff, random_suite, reference_tc, reference_tc_exact};
use num_rational::Ratio;
use tricent::algebraic::triangle_centrality_algebraic;
use tricent::centrality::{closed_form_tc, FamilyParams, GraphFamily, Role};
use tricent::compare::{rank_vertices, DEFAULT_TIE_EPS};
use tricent::fixtures::{
    bridged_cliques, clique, clique_chain, clique_ring, disjoint_cliques, single_triangle,
    FamilyGraph, Fixture,
};
use tricent::mapreduce::run_mapreduce_tc;
use tricent::parallel::{parallel_triangle_centrality, ParallelConfig};
use tricent::{triangle_centrality, triangle_centrality_basic, Graph};

fn all_implementations(g: &Graph) -> Vec<Vec<f64>> {
    let mut out = vec![
        triangle_centrality(g).scores,
        triangle_centrality_basic(g).scores,
        triangle_centrality_algebraic(g).scores,
        run_mapreduce_tc(g).unwrap().0.scores,
    ];
    for w in [1, 2, 4, 8] {
        let cfg = ParallelConfig::with_chunk(w, 3).unwrap();
        out.push(parallel_triangle_centrality(g, &cfg).0.scores);
    }
    out
}

fn check_equivalence(g: &Graph) {
    let expected = reference_tc(g);
    let main = triangle_centrality(g).scores;
    for scores in all_implementations(g) {
        assert!(max_abs_diff(&scores, &expected) <= 1e-12);
    }
    for w in [1, 2, 4, 8] {
        let cfg = ParallelConfig::with_chunk(w, 1).unwrap();
        let par = parallel_triangle_centrality(g, &cfg).0.scores;
        assert!(par
            .iter()
            .zip(&main)
            .all(|(a, b)| a.to_bits() == b.to_bits()));
    }
    assert!(main.iter().all(|&s| (0.0..=1.0).contains(&s)));
}

#[test]
fn implementations_agree_on_random_graphs() {
    for g in random_suite(200, 64, &[0.1, 0.3, 0.6], 5) {
        check_equivalence(&g);
    }
}

#[test]
fn implementations_agree_on_fixtures() {
    for f in Fixture::ALL {
        check_equivalence(&f.graph());
    }
}

fn check_family(f: &FamilyGraph) {
    let tc = triangle_centrality(&f.graph);
    let exact = reference_tc_exact(&f.graph);
    for v in 0..f.graph.n() {
        let params = FamilyParams {
            p: f.p as u64,
            k: f.k as u64,
            role: f.roles[v],
        };
        let expected = closed_form_tc(f.family, params).unwrap();
        assert_eq!(
            exact[v], expected,
            "{:?} p={} k={} vertex {v}",
            f.family, f.p, f.k
        );
        let as_f64 = *expected.numer() as f64 / *expected.denom() as f64;
        assert!((tc.scores[v] - as_f64).abs() <= 1e-12);
    }
}

#[test]
fn family_closed_forms() {
    for k in 3..=8 {
        check_family(&clique(k).unwrap());
        for p in 1..=6 {
            check_family(&bridged_cliques(p, k).unwrap());
            check_family(&disjoint_cliques(p, k).unwrap());
            if p >= 3 {
                check_family(&clique_chain(p, k).unwrap());
            }
            if p >= 4 {
                check_family(&clique_ring(p, k).unwrap());
            }
        }
    }
    for pendants in 0..=5 {
        check_family(&single_triangle(pendants));
    }
}

#[test]
fn three_clique_ring_has_extra_triangle() {
    for k in 3..=8 {
        let f = clique_ring(3, k).unwrap();
        let exact = reference_tc_exact(&f.graph);
        let r = common::reference_triangles(&f.graph);
        assert_eq!(r.total, 3 * (k * (k - 1) * (k - 2) / 6) as u64 + 1);
        let joiner = f.roles.iter().position(|&x| x == Role::RingJoiner).unwrap();
        let params = FamilyParams {
            p: 3,
            k: k as u64,
            role: Role::RingJoiner,
        };
        let stated = closed_form_tc(GraphFamily::CliqueRing, params).unwrap();
        assert_ne!(exact[joiner], stated);
    }
}

#[test]
fn worked_example() {
    let g = Fixture::WorkedExample.graph();
    let tc = triangle_centrality(&g);
    assert_eq!(tc.scores[g.vertex("v").unwrap()], 1.0);
}

#[test]
fn bridged_six_cliques_values() {
    let g = Fixture::BridgedSixCliques.graph();
    let tc = triangle_centrality(&g);
    let a = g.vertex("a").unwrap();
    assert_eq!(tc.scores[a], 0.5);
    for v in (0..g.n()).filter(|&v| v != a) {
        assert_eq!(tc.scores[v], 0.25);
    }
    assert_eq!(reference_tc_exact(&g)[a], Ratio::new(1, 2));
}

#[test]
fn cliques_all_one() {
    for k in 3..=6 {
        assert!(triangle_centrality(&complete(k))
            .scores
            .iter()
            .all(|&s| s == 1.0));
    }
}

fn top_two(g: &Graph) -> (String, String) {
    let r = rank_vertices(&triangle_centrality(g), DEFAULT_TIE_EPS);
    (
        g.label(r.order[0]).to_string(),
        g.label(r.order[1]).to_string(),
    )
}

#[test]
fn case_study_leaders() {
    assert_eq!(top_two(&Fixture::Karate.graph()).0, "14");
    assert_eq!(top_two(&Fixture::Dolphins.graph()).0, "15");
    assert_eq!(top_two(&Fixture::Borgatti.graph()).0, "d");
    assert_eq!(
        top_two(&Fixture::Hijackers.graph()),
        ("38".to_string(), "35".to_string())
    );
    let k = Fixture::Karate.graph();
    assert_eq!(triangle_centrality_basic(&k).argmax(), k.vertex("14"));
}

#[test]
fn vertex_a_leads_every_small_example() {
    for f in [
        Fixture::HubOfTriangles,
        Fixture::BridgedSixCliques,
        Fixture::StarAndTriangles,
        Fixture::CliqueWithBranches,
    ] {
        let g = f.graph();
        let r = rank_vertices(&triangle_centrality(&g), DEFAULT_TIE_EPS);
        assert_eq!(r.rank[g.vertex("a").unwrap()], 1, "{}", f.name());
    }
}
