//! Triangle centrality scores and closed forms for structured graph families.
//!
//! For a vertex `v` with triangle count `Δ(v)`, let the core sum `x` be `Δ(v)`
//! plus the counts of its triangle neighbors, and `y` the counts of its other
//! neighbors. Then `TC(v) = (x/3 + y) / Δ(G)`, evaluated here as the integer
//! ratio `(x + 3y) / (3 Δ(G))` with a single floating-point division.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedAdjacency};
use crate::triangle::{
    hash_neighbor_pair_tri_neighbors, triangle_neighbor, TriangleMarks, TriangleNeighborhood,
    TriangleStats,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Array-based triangle neighbor marking.
    Triangle,
    /// Hash-based neighbor pairing.
    TriangleBasic,
    TriangleAlgebraic,
    TriangleParallel,
    TriangleMapReduce,
    Degree,
    Closeness,
    Betweenness,
    Eigenvector,
    PageRank,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Triangle => "tc",
            Method::TriangleBasic => "tc-basic",
            Method::TriangleAlgebraic => "tc-algebraic",
            Method::TriangleParallel => "tc-parallel",
            Method::TriangleMapReduce => "tc-mapreduce",
            Method::Degree => "degree",
            Method::Closeness => "closeness",
            Method::Betweenness => "betweenness",
            Method::Eigenvector => "eigenvector",
            Method::PageRank => "pagerank",
        }
    }
}

/// Per-vertex scores from one centrality measure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralityVector {
    pub method: Method,
    pub scores: Vec<f64>,
    /// Triangle total used as the normaliser, for triangle measures.
    pub triangles: Option<u64>,
    /// Set when the graph has no triangles; all triangle scores are then 0.
    pub triangle_free: bool,
    /// False when an iterative measure stopped at its iteration limit.
    pub converged: bool,
}

impl CentralityVector {
    pub(crate) fn plain(method: Method, scores: Vec<f64>) -> CentralityVector {
        CentralityVector {
            method,
            scores,
            triangles: None,
            triangle_free: false,
            converged: true,
        }
    }

    /// Builds triangle scores from per-vertex core sums (`x`, which includes
    /// `Δ(v)`) and neighborhood sums (`s`, over all neighbors).
    pub(crate) fn from_sums(
        method: Method,
        per_vertex: &[u64],
        total: u64,
        core: &[u64],
        all: &[u64],
    ) -> CentralityVector {
        let scores = if total == 0 {
            vec![0.0; per_vertex.len()]
        } else {
            let denom = (3 * total) as f64;
            (0..per_vertex.len())
                .map(|v| {
                    let x = core[v];
                    let y = all[v] + per_vertex[v] - x;
                    (x + 3 * y) as f64 / denom
                })
                .collect()
        };
        CentralityVector {
            method,
            scores,
            triangles: Some(total),
            triangle_free: total == 0,
            converged: true,
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Vertex with the highest score, lowest id among ties.
    pub fn argmax(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (v, &s) in self.scores.iter().enumerate() {
            if best.is_none_or(|b| s > self.scores[b]) {
                best = Some(v);
            }
        }
        best
    }
}

fn neighbor_sums(g: &Graph, per_vertex: &[u64]) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&u| per_vertex[u]).sum())
        .collect()
}

/// Scores from explicit triangle-neighbor lists.
pub fn tc_from_triangles(
    g: &Graph,
    stats: &TriangleStats,
    nbh: &TriangleNeighborhood,
    method: Method,
) -> CentralityVector {
    let dv = &stats.per_vertex;
    let core: Vec<u64> = (0..g.n())
        .map(|v| dv[v] + nbh.neighbors(v).iter().map(|&u| dv[u]).sum::<u64>())
        .collect();
    CentralityVector::from_sums(method, dv, stats.total, &core, &neighbor_sums(g, dv))
}

/// Scores straight from marks: each marked slot `(v, u)` adds `Δ(u)` to the
/// core sum of `v` and `Δ(v)` to that of `u`.
pub fn tc_from_marks(
    g: &Graph,
    adj: &OrderedAdjacency,
    stats: &TriangleStats,
    marks: &TriangleMarks,
) -> CentralityVector {
    let dv = &stats.per_vertex;
    let mut core = dv.clone();
    for v in 0..g.n() {
        for u in marks.marked(adj, v) {
            core[v] += dv[u];
            core[u] += dv[v];
        }
    }
    CentralityVector::from_sums(
        Method::Triangle,
        dv,
        stats.total,
        &core,
        &neighbor_sums(g, dv),
    )
}

pub fn triangle_centrality(g: &Graph) -> CentralityVector {
    let adj = OrderedAdjacency::new(g);
    let out = triangle_neighbor(&adj);
    tc_from_marks(g, &adj, &out.stats, &out.marks)
}

/// Reference path using hash-based neighbor pairing for detection.
pub fn triangle_centrality_basic(g: &Graph) -> CentralityVector {
    let adj = OrderedAdjacency::new(g);
    let (stats, nbh) =
        hash_neighbor_pair_tri_neighbors(g, &adj).expect("pairing flag prevents duplicates");
    tc_from_triangles(g, &stats, &nbh, Method::TriangleBasic)
}

/// Graph families with a closed-form triangle centrality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// A single clique `K_k`.
    Clique,
    /// A vertex adjacent to one vertex in each of `p` disjoint copies of `K_k`.
    BridgedCliques,
    /// `p` disjoint copies of `K_k`, possibly attached to triangle-free parts.
    DisjointCliques,
    /// `p ≥ 3` copies of `K_k` in a path, consecutive copies sharing a vertex.
    CliqueChain,
    /// `p ≥ 3` copies of `K_k` in a cycle, consecutive copies sharing a vertex.
    /// The closed form is exact for `p ≥ 4`; with three copies the joiners
    /// close an extra triangle and the true values differ.
    CliqueRing,
    /// Exactly one triangle; its vertices' other neighbors touch no triangle.
    SingleTriangle,
}

/// Position of a vertex within a generated family graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    CliqueMember,
    /// The vertex joining the cliques of [`GraphFamily::BridgedCliques`].
    Bridge,
    /// A shared vertex with no end clique on either side.
    InnerJoiner,
    /// A shared vertex belonging to the first or last clique of a chain.
    EndJoiner,
    /// A non-shared vertex of a clique with two shared vertices.
    InnerMember,
    /// A non-shared vertex of the first or last clique of a chain.
    EndMember,
    RingJoiner,
    RingMember,
    TriangleVertex,
    /// A neighbor of a triangle vertex outside the triangle.
    TriangleNeighbor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub p: u64,
    pub k: u64,
    pub role: Role,
}

/// Exact triangle centrality of a role vertex in a family graph.
pub fn closed_form_tc(family: GraphFamily, params: FamilyParams) -> Result<Ratio<u64>> {
    let FamilyParams { p, k, role } = params;
    let bad = |why: &str| {
        Err(Error::invalid(format!(
            "{family:?} with p={p}, k={k}, role {role:?}: {why}"
        )))
    };
    if family != GraphFamily::SingleTriangle && k < 3 {
        return bad("cliques need k >= 3");
    }
    let pk = p * k;
    let r = |num: u64| Ok(Ratio::new(num, pk));
    match (family, role) {
        (GraphFamily::Clique, Role::CliqueMember) => Ok(Ratio::from_integer(1)),
        (GraphFamily::BridgedCliques, Role::Bridge) if p >= 1 => Ok(Ratio::new(3, k)),
        (GraphFamily::BridgedCliques | GraphFamily::DisjointCliques, Role::CliqueMember)
            if p >= 1 =>
        {
            Ok(Ratio::new(1, p))
        }
        (GraphFamily::CliqueChain, _) if p < 3 => bad("chains need p >= 3"),
        (GraphFamily::CliqueChain, Role::InnerJoiner) if p >= 4 => r(2 * k + 2),
        (GraphFamily::CliqueChain, Role::InnerJoiner) => bad("no inner joiner when p = 3"),
        (GraphFamily::CliqueChain, Role::EndJoiner) => r(2 * k + 1),
        (GraphFamily::CliqueChain, Role::InnerMember) => r(k + 2),
        (GraphFamily::CliqueChain, Role::EndMember) => r(k + 1),
        (GraphFamily::CliqueRing, _) if p < 3 => bad("rings need p >= 3"),
        (GraphFamily::CliqueRing, Role::RingJoiner) => r(2 * k + 2),
        (GraphFamily::CliqueRing, Role::RingMember) => r(k + 2),
        (GraphFamily::SingleTriangle, Role::TriangleVertex | Role::TriangleNeighbor) => {
            Ok(Ratio::from_integer(1))
        }
        _ => bad("role does not occur in this family"),
    }
}
