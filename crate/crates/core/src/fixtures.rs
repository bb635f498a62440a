//! Generated graph families with known triangle centrality, the small example
//! graphs, and the bundled social-network edge lists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::centrality::{GraphFamily, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_edge_list;

/// A generated graph with the role of every vertex.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub family: GraphFamily,
    pub p: usize,
    pub k: usize,
    pub graph: Graph,
    pub roles: Vec<Role>,
}

/// Accumulates vertices and edges; vertex `i` is labelled `i + 1`.
#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn finish(self, family: GraphFamily, p: usize, k: usize) -> FamilyGraph {
        let labels = (1..=self.roles.len()).map(|i| i.to_string()).collect();
        let graph = Graph::with_labels(labels, &self.edges).expect("builder ids are in range");
        FamilyGraph {
            family,
            p,
            k,
            graph,
            roles: self.roles,
        }
    }
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(what.to_string()))
    }
}

/// `K_k`, labelled `1..k`.
pub fn clique(k: usize) -> Result<FamilyGraph> {
    need(k >= 1, "clique needs k >= 1")?;
    let mut b = Builder::default();
    let members: Vec<usize> = (0..k).map(|_| b.vertex(Role::CliqueMember)).collect();
    b.clique(&members);
    Ok(b.finish(GraphFamily::Clique, 1, k))
}

/// `p` disjoint copies of `K_k`.
pub fn disjoint_cliques(p: usize, k: usize) -> Result<FamilyGraph> {
    need(p >= 1 && k >= 1, "disjoint cliques need p >= 1 and k >= 1")?;
    let mut b = Builder::default();
    for _ in 0..p {
        let members: Vec<usize> = (0..k).map(|_| b.vertex(Role::CliqueMember)).collect();
        b.clique(&members);
    }
    Ok(b.finish(GraphFamily::DisjointCliques, p, k))
}

/// Vertex `1` adjacent to one vertex of each of `p` disjoint copies of `K_k`.
pub fn bridged_cliques(p: usize, k: usize) -> Result<FamilyGraph> {
    need(p >= 1 && k >= 1, "bridged cliques need p >= 1 and k >= 1")?;
    let mut b = Builder::default();
    let bridge = b.vertex(Role::Bridge);
    for _ in 0..p {
        let members: Vec<usize> = (0..k).map(|_| b.vertex(Role::CliqueMember)).collect();
        b.clique(&members);
        b.edges.push((bridge, members[0]));
    }
    Ok(b.finish(GraphFamily::BridgedCliques, p, k))
}

/// `p ≥ 3` copies of `K_k` in a path; consecutive copies share one vertex.
pub fn clique_chain(p: usize, k: usize) -> Result<FamilyGraph> {
    need(p >= 3 && k >= 3, "clique chain needs p >= 3 and k >= 3")?;
    let mut b = Builder::default();
    let joiners: Vec<usize> = (1..p)
        .map(|t| {
            let role = if t == 1 || t == p - 1 {
                Role::EndJoiner
            } else {
                Role::InnerJoiner
            };
            b.vertex(role)
        })
        .collect();
    for i in 0..p {
        let mut members = Vec::with_capacity(k);
        if i > 0 {
            members.push(joiners[i - 1]);
        }
        if i + 1 < p {
            members.push(joiners[i]);
        }
        let role = if i == 0 || i == p - 1 {
            Role::EndMember
        } else {
            Role::InnerMember
        };
        while members.len() < k {
            members.push(b.vertex(role));
        }
        b.clique(&members);
    }
    Ok(b.finish(GraphFamily::CliqueChain, p, k))
}

/// `p ≥ 3` copies of `K_k` in a cycle; consecutive copies share one vertex.
pub fn clique_ring(p: usize, k: usize) -> Result<FamilyGraph> {
    need(p >= 3 && k >= 3, "clique ring needs p >= 3 and k >= 3")?;
    let mut b = Builder::default();
    let joiners: Vec<usize> = (0..p).map(|_| b.vertex(Role::RingJoiner)).collect();
    for i in 0..p {
        let mut members = vec![joiners[(i + p - 1) % p], joiners[i]];
        while members.len() < k {
            members.push(b.vertex(Role::RingMember));
        }
        b.clique(&members);
    }
    Ok(b.finish(GraphFamily::CliqueRing, p, k))
}

/// One triangle whose vertices each carry `pendants` leaves.
pub fn single_triangle(pendants: usize) -> FamilyGraph {
    let mut b = Builder::default();
    let tri: Vec<usize> = (0..3).map(|_| b.vertex(Role::TriangleVertex)).collect();
    b.clique(&tri);
    for &t in &tri {
        for _ in 0..pendants {
            let leaf = b.vertex(Role::TriangleNeighbor);
            b.edges.push((t, leaf));
        }
    }
    b.finish(GraphFamily::SingleTriangle, 1, 3)
}

/// Erdős–Rényi `G(n, p)` from a fixed seed.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    Graph::with_labels(labels, &edges).expect("ids are in range")
}

/// Bundled graphs, read from edge lists shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Borgatti's 19-vertex example network with letter labels.
    Borgatti,
    /// Zachary's karate club, 34 members.
    Karate,
    /// Lusseau's Doubtful Sound dolphins, 62 animals.
    Dolphins,
    /// Krebs' 9/11 hijacker network, 62 people.
    Hijackers,
    /// Hub `a` on three triangles, every triangle vertex with four leaves.
    HubOfTriangles,
    /// `a` between a large star and small triangles.
    StarAndTriangles,
    /// `a` inside a five-clique with a triangle branch and a star branch.
    CliqueWithBranches,
    /// Vertex `v` whose triangle neighbors `a`, `b`, `c` hold all its
    /// triangles, plus a non-triangle neighbor `d` on a separate triangle.
    WorkedExample,
    /// Vertex `a` bridging four copies of `K_6`.
    BridgedSixCliques,
}

impl Fixture {
    pub const ALL: [Fixture; 9] = [
        Fixture::Borgatti,
        Fixture::Karate,
        Fixture::Dolphins,
        Fixture::Hijackers,
        Fixture::HubOfTriangles,
        Fixture::BridgedSixCliques,
        Fixture::StarAndTriangles,
        Fixture::CliqueWithBranches,
        Fixture::WorkedExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Borgatti => "borgatti",
            Fixture::Karate => "karate",
            Fixture::Dolphins => "dolphins",
            Fixture::Hijackers => "hijackers",
            Fixture::HubOfTriangles => "fig1a",
            Fixture::BridgedSixCliques => "fig1b",
            Fixture::StarAndTriangles => "fig1c",
            Fixture::CliqueWithBranches => "fig1d",
            Fixture::WorkedExample => "fig3",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Edge-list text; `None` for generated fixtures.
    pub fn source(self) -> Option<&'static str> {
        Some(match self {
            Fixture::Borgatti => include_str!("../fixtures/borgatti.txt"),
            Fixture::Karate => include_str!("../fixtures/karate.txt"),
            Fixture::Dolphins => include_str!("../fixtures/dolphins.txt"),
            Fixture::Hijackers => include_str!("../fixtures/hijackers.txt"),
            Fixture::HubOfTriangles => include_str!("../fixtures/fig1a.txt"),
            Fixture::StarAndTriangles => include_str!("../fixtures/fig1c.txt"),
            Fixture::CliqueWithBranches => include_str!("../fixtures/fig1d.txt"),
            Fixture::WorkedExample => include_str!("../fixtures/fig3.txt"),
            Fixture::BridgedSixCliques => return None,
        })
    }

    pub fn graph(self) -> Graph {
        match self.source() {
            Some(text) => parse_edge_list(text).expect("bundled fixtures parse"),
            None => bridged_six_cliques(),
        }
    }
}

/// Four copies of `K_6` (vertices `1..24`) each joined to `a` by one edge.
fn bridged_six_cliques() -> Graph {
    let mut edges = Vec::new();
    for c in 0..4 {
        let members: Vec<String> = (1..=6).map(|i| (6 * c + i).to_string()).collect();
        for (i, u) in members.iter().enumerate() {
            for v in &members[i + 1..] {
                edges.push((u.clone(), v.clone()));
            }
        }
        edges.push(("a".to_string(), members[0].clone()));
    }
    Graph::from_labeled_edges(&edges)
}
