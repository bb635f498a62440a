//! Triangle counting and triangle-neighborhood discovery.
//!
//! A triangle neighbor of `v` is a neighbor `u` such that the edge `{v, u}`
//! lies on at least one triangle. All routines here work off the degree-ordered
//! [`OrderedAdjacency`]; each triangle is found once from its lowest-ordered
//! vertex unless stated otherwise.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedAdjacency};

/// Triangle counts per vertex and in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleStats {
    pub per_vertex: Vec<u64>,
    pub total: u64,
    /// Triangles through each edge, aligned with
    /// [`OrderedAdjacency::neighbor_array`] so both orientations of an edge
    /// carry the same count.
    pub per_edge: Option<Vec<u64>>,
}

impl TriangleStats {
    fn zeroed(n: usize) -> TriangleStats {
        TriangleStats {
            per_vertex: vec![0; n],
            total: 0,
            per_edge: None,
        }
    }

    fn record(&mut self, v: usize, u: usize, w: usize) {
        self.per_vertex[v] += 1;
        self.per_vertex[u] += 1;
        self.per_vertex[w] += 1;
        self.total += 1;
    }

    pub fn is_triangle_free(&self) -> bool {
        self.total == 0
    }
}

/// One flag per slot of [`OrderedAdjacency::neighbor_array`]. Only slots in
/// the higher part of a list are ever set; a set slot says the edge it names
/// is on some triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleMarks {
    bits: Vec<bool>,
}

impl TriangleMarks {
    pub fn new(slots: usize) -> TriangleMarks {
        TriangleMarks {
            bits: vec![false; slots],
        }
    }

    pub fn get(&self, slot: usize) -> bool {
        self.bits[slot]
    }

    pub fn set(&mut self, slot: usize) {
        self.bits[slot] = true;
    }

    /// Higher neighbors of `v` whose slot is marked.
    pub fn marked<'a>(
        &'a self,
        adj: &'a OrderedAdjacency,
        v: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        adj.higher_range(v)
            .filter(move |&s| self.bits[s])
            .map(move |s| adj.neighbor_array()[s])
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// Sorted triangle-neighbor list of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleNeighborhood {
    lists: Vec<Vec<usize>>,
}

impl TriangleNeighborhood {
    /// Sorts each list; duplicates are a caller bug and are rejected.
    fn from_lists(mut lists: Vec<Vec<usize>>) -> Result<TriangleNeighborhood> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::internal(format!(
                    "vertex {v} received a triangle neighbor twice"
                )));
            }
        }
        Ok(TriangleNeighborhood { lists })
    }

    /// Expands marks into symmetric lists: each marked slot `(v, u)` puts `u`
    /// in the list of `v` and `v` in the list of `u`.
    pub fn from_marks(adj: &OrderedAdjacency, marks: &TriangleMarks) -> TriangleNeighborhood {
        let mut lists = vec![Vec::new(); adj.n()];
        for v in 0..adj.n() {
            for u in marks.marked(adj, v) {
                lists[v].push(u);
                lists[u].push(v);
            }
        }
        TriangleNeighborhood::from_lists(lists).expect("each edge owns one slot")
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, u: usize) -> bool {
        self.lists[v].binary_search(&u).is_ok()
    }

    /// One line per vertex, `label: neighbor neighbor ...`.
    pub fn dump(&self, g: &Graph) -> String {
        let mut s = String::new();
        for (v, l) in self.lists.iter().enumerate() {
            s.push_str(g.label(v));
            s.push(':');
            for &u in l {
                let _ = write!(s, " {}", g.label(u));
            }
            s.push('\n');
        }
        s
    }
}

/// Work done by the merge-based intersections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MergeWork {
    /// Element comparisons across all two-pointer merges.
    pub comparisons: u64,
    /// Triangles reported by the merges.
    pub detections: u64,
}

#[derive(Clone, Debug)]
pub struct TriangleNeighborOutput {
    pub stats: TriangleStats,
    pub marks: TriangleMarks,
    pub work: MergeWork,
}

/// Intersects the higher lists of `v` and `u`, calling `hit(l, r, w)` with the
/// slot of `w` in each list. Returns the number of comparisons made.
#[inline]
pub(crate) fn merge_higher<F: FnMut(usize, usize, usize)>(
    adj: &OrderedAdjacency,
    v: usize,
    u: usize,
    mut hit: F,
) -> u64 {
    let (rv, ru) = (adj.higher_range(v), adj.higher_range(u));
    let nb = adj.neighbor_array();
    let (mut i, mut j) = (rv.start, ru.start);
    let mut comparisons = 0;
    while i < rv.end && j < ru.end {
        comparisons += 1;
        let (a, b) = (nb[i], nb[j]);
        if a < b {
            i += 1;
        } else if b < a {
            j += 1;
        } else {
            hit(i, j, a);
            i += 1;
            j += 1;
        }
    }
    comparisons
}

/// Runs the marking kernel for one low vertex `v`. For each triangle
/// `(v, u, w)` ordered low to high it calls `found(u, w, slot_vu, slot_vw,
/// slot_uw)`.
#[inline]
pub(crate) fn visit_low_vertex<F: FnMut(usize, usize, usize, usize, usize)>(
    adj: &OrderedAdjacency,
    v: usize,
    work: &mut MergeWork,
    mut found: F,
) {
    let nb = adj.neighbor_array();
    for i in adj.higher_range(v) {
        let u = nb[i];
        let mut detections = 0;
        work.comparisons += merge_higher(adj, v, u, |l, r, w| {
            detections += 1;
            found(u, w, i, l, r);
        });
        work.detections += detections;
    }
}

/// Counts triangles and marks triangle edges using only arrays.
///
/// Each triangle is reported once by intersecting the higher lists of its two
/// lowest vertices. Per-edge triangle counts are filled for both orientations.
pub fn triangle_neighbor(adj: &OrderedAdjacency) -> TriangleNeighborOutput {
    let n = adj.n();
    let slots = adj.neighbor_array().len();
    let mut stats = TriangleStats::zeroed(n);
    let mut marks = TriangleMarks::new(slots);
    let mut per_edge = vec![0u64; slots];
    let mut work = MergeWork::default();
    for v in 0..n {
        visit_low_vertex(adj, v, &mut work, |u, w, vu, vw, uw| {
            marks.set(vu);
            marks.set(vw);
            marks.set(uw);
            per_edge[vu] += 1;
            per_edge[vw] += 1;
            per_edge[uw] += 1;
            stats.record(v, u, w);
        });
    }
    mirror_edge_counts(adj, &mut per_edge);
    stats.per_edge = Some(per_edge);
    TriangleNeighborOutput { stats, marks, work }
}

/// Copies each higher-slot count onto the opposite orientation of the edge.
pub(crate) fn mirror_edge_counts(adj: &OrderedAdjacency, per_edge: &mut [u64]) {
    let nb = adj.neighbor_array();
    for v in 0..adj.n() {
        let r = adj.range(v);
        for s in adj.higher_range(v).end..r.end {
            let u = nb[s];
            let back = adj
                .higher_slot(u, v)
                .expect("lower neighbor lists v as higher");
            per_edge[s] = per_edge[back];
        }
    }
}

pub fn materialize_triangle_neighbors(
    adj: &OrderedAdjacency,
    marks: &TriangleMarks,
) -> TriangleNeighborhood {
    TriangleNeighborhood::from_marks(adj, marks)
}

/// Variant that keeps marks local to each vertex, so no vertex writes state
/// owned by another. Every triangle is intersected from both orientations of
/// its low-middle edge, hence counts are accumulated doubled and halved.
pub fn triangle_neighbor_alt(
    adj: &OrderedAdjacency,
) -> Result<(TriangleStats, TriangleNeighborhood)> {
    let n = adj.n();
    let nb = adj.neighbor_array();
    let mut doubled = vec![0u64; n];
    let mut doubled_total = 0u64;
    let mut lists = vec![Vec::new(); n];
    for v in 0..n {
        let hr = adj.higher_range(v);
        let mut local = vec![false; hr.len()];
        for s in adj.range(v) {
            let u = nb[s];
            let p = if s < hr.end { Some(s - hr.start) } else { None };
            let mut hit_any = false;
            merge_higher(adj, v, u, |l, _, w| {
                hit_any = true;
                doubled[v] += 1;
                doubled[u] += 1;
                doubled[w] += 1;
                doubled_total += 1;
                let i = l - hr.start;
                if !local[i] {
                    local[i] = true;
                    lists[v].push(w);
                    lists[w].push(v);
                }
            });
            if let Some(p) = p {
                if hit_any && !local[p] {
                    local[p] = true;
                    lists[v].push(u);
                    lists[u].push(v);
                }
            }
        }
    }
    if !doubled_total.is_multiple_of(2) || doubled.iter().any(|d| !d.is_multiple_of(2)) {
        return Err(Error::internal("doubled triangle counts are odd"));
    }
    let stats = TriangleStats {
        per_vertex: doubled.into_iter().map(|d| d / 2).collect(),
        total: doubled_total / 2,
        per_edge: None,
    };
    Ok((stats, TriangleNeighborhood::from_lists(lists)?))
}

fn edge_set(g: &Graph) -> HashSet<(usize, usize)> {
    g.edges().collect()
}

fn has(edges: &HashSet<(usize, usize)>, a: usize, b: usize) -> bool {
    edges.contains(&(a.min(b), a.max(b)))
}

/// Counts triangles by testing every pair of higher neighbors against a hash
/// set of edges.
pub fn hash_neighbor_pair_count(g: &Graph, adj: &OrderedAdjacency) -> TriangleStats {
    let edges = edge_set(g);
    let mut stats = TriangleStats::zeroed(g.n());
    for v in 0..g.n() {
        let hi = adj.higher(v);
        for (a, &u) in hi.iter().enumerate() {
            for &w in &hi[a + 1..] {
                if has(&edges, u, w) {
                    stats.record(v, u, w);
                }
            }
        }
    }
    stats
}

/// Hash-based neighbor pairing: for each higher neighbor `u` of `v`, scans all
/// of `N(v)` for a common neighbor. Counts use only the ordering where `u`
/// precedes `w`, so each triangle is counted once; the edge `{v, u}` is paired
/// on its first common neighbor of any order.
pub fn hash_neighbor_pair_tri_neighbors(
    g: &Graph,
    adj: &OrderedAdjacency,
) -> Result<(TriangleStats, TriangleNeighborhood)> {
    let edges = edge_set(g);
    let order = adj.order();
    let mut stats = TriangleStats::zeroed(g.n());
    let mut lists = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        for &u in adj.higher(v) {
            let mut paired = false;
            for &w in g.neighbors(v) {
                if w == u || !has(&edges, u, w) {
                    continue;
                }
                if order.precedes(u, w) {
                    stats.record(v, u, w);
                }
                if !paired {
                    paired = true;
                    lists[v].push(u);
                    lists[u].push(v);
                }
            }
        }
    }
    Ok((stats, TriangleNeighborhood::from_lists(lists)?))
}

/// Intersects higher-neighbor hash sets, probing the smaller set against the
/// larger, and inserts all three pairs of each triangle into per-vertex sets.
pub fn hash_intersection_tri_neighbors(adj: &OrderedAdjacency) -> TriangleNeighborhood {
    let n = adj.n();
    let higher: Vec<HashSet<usize>> = (0..n)
        .map(|v| adj.higher(v).iter().copied().collect())
        .collect();
    let mut sets: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for v in 0..n {
        for &u in adj.higher(v) {
            let (small, large) = if higher[v].len() <= higher[u].len() {
                (&higher[v], &higher[u])
            } else {
                (&higher[u], &higher[v])
            };
            let common: Vec<usize> = small
                .iter()
                .copied()
                .filter(|w| large.contains(w))
                .collect();
            for w in common {
                sets[u].insert(v);
                sets[w].insert(v);
                sets[w].insert(u);
                sets[v].insert(u);
                sets[u].insert(w);
                sets[v].insert(w);
            }
        }
    }
    let lists = sets.into_iter().map(|s| s.into_iter().collect()).collect();
    TriangleNeighborhood::from_lists(lists).expect("sets hold no duplicates")
}

/// Largest graph the cubic oracle accepts.
pub const BRUTE_FORCE_LIMIT: usize = 256;

/// Cubic-time reference: checks every vertex triple against an adjacency
/// matrix.
pub fn brute_force_triangles(g: &Graph) -> Result<(TriangleStats, TriangleNeighborhood)> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut adj = vec![false; n * n];
    for (u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut stats = TriangleStats::zeroed(n);
    let mut tri_nb = vec![false; n * n];
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a * n + b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a * n + c] && adj[b * n + c] {
                    stats.record(a, b, c);
                    for (x, y) in [(a, b), (a, c), (b, c)] {
                        tri_nb[x * n + y] = true;
                        tri_nb[y * n + x] = true;
                    }
                }
            }
        }
    }
    let lists = (0..n)
        .map(|v| (0..n).filter(|&u| tri_nb[v * n + u]).collect())
        .collect();
    Ok((stats, TriangleNeighborhood::from_lists(lists)?))
}
