//! Reference computations written straight from the definitions, sharing no
//! code with the library beyond the `Graph` container.

#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::Ratio;
use tricent::fixtures::erdos_renyi;
use tricent::Graph;

pub fn dense_adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            a[v][u] = true;
        }
    }
    a
}

pub struct Reference {
    pub per_vertex: Vec<u64>,
    pub total: u64,
    /// Sorted triangle neighbors of each vertex.
    pub neighbors: Vec<Vec<usize>>,
}

/// `Δ(v)` counts edges among the neighbors of `v`; `u` is a triangle
/// neighbor of `v` when they share a neighbor.
pub fn reference_triangles(g: &Graph) -> Reference {
    let a = dense_adjacency(g);
    let n = g.n();
    let mut per_vertex = vec![0u64; n];
    let mut neighbors = vec![Vec::new(); n];
    for v in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&u| a[v][u]).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if a[x][y] {
                    per_vertex[v] += 1;
                }
            }
        }
        for &u in &nb {
            if (0..n).any(|w| a[v][w] && a[u][w]) {
                neighbors[v].push(u);
            }
        }
    }
    let total = per_vertex.iter().sum::<u64>() / 3;
    Reference {
        per_vertex,
        total,
        neighbors,
    }
}

/// Exact triangle centrality from the definition; all zero without triangles.
pub fn reference_tc_exact(g: &Graph) -> Vec<Ratio<u64>> {
    let r = reference_triangles(g);
    (0..g.n())
        .map(|v| {
            if r.total == 0 {
                return Ratio::from_integer(0);
            }
            let core: u64 =
                r.per_vertex[v] + r.neighbors[v].iter().map(|&u| r.per_vertex[u]).sum::<u64>();
            let rest: u64 = g
                .neighbors(v)
                .iter()
                .filter(|u| !r.neighbors[v].contains(u))
                .map(|&u| r.per_vertex[u])
                .sum();
            (Ratio::new(core, 3) + Ratio::from_integer(rest)) / Ratio::from_integer(r.total)
        })
        .collect()
}

pub fn reference_tc(g: &Graph) -> Vec<f64> {
    reference_tc_exact(g)
        .into_iter()
        .map(|x| *x.numer() as f64 / *x.denom() as f64)
        .collect()
}

/// `A²∘A` by dense multiplication.
pub fn dense_triangle_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let a = dense_adjacency(g);
    let n = g.n();
    let mut t = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if a[i][j] {
                t[i][j] = (0..n).filter(|&k| a[i][k] && a[k][j]).count() as i64;
            }
        }
    }
    t
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `count` seeded random graphs with `n ≤ max_n`, cycling densities.
pub fn random_suite(count: usize, max_n: usize, densities: &[f64], seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 1 + (i * 7 + 3) % max_n;
            let p = densities[i % densities.len()];
            erdos_renyi(n, p, seed.wrapping_mul(1_000_003).wrapping_add(i as u64))
        })
        .collect()
}

pub fn complete(k: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            e.push((u, v));
        }
    }
    Graph::from_edges(k, &e).unwrap()
}
