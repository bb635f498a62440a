//! Compressed sparse row graphs, the degree-based vertex order and the
//! higher/lower partition of each adjacency list.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Range;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Simple undirected graph in CSR form.
///
/// Vertices are dense `0..n` ids. Ids follow the order of the external labels,
/// so comparing two ids is the same as comparing their labels. Each adjacency
/// list is sorted by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    labels: Vec<String>,
}

/// How external labels are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelOrder {
    /// Every label parses as an integer; labels compare by value.
    Numeric,
    /// Labels compare as byte strings.
    Lexicographic,
}

impl LabelOrder {
    pub fn detect<S: AsRef<str>>(labels: &[S]) -> LabelOrder {
        if labels.iter().all(|l| l.as_ref().parse::<i64>().is_ok()) {
            LabelOrder::Numeric
        } else {
            LabelOrder::Lexicographic
        }
    }

    pub fn compare(self, a: &str, b: &str) -> Ordering {
        match self {
            LabelOrder::Numeric => {
                let x: i64 = a.parse().unwrap_or(i64::MAX);
                let y: i64 = b.parse().unwrap_or(i64::MAX);
                x.cmp(&y).then_with(|| a.cmp(b))
            }
            LabelOrder::Lexicographic => a.cmp(b),
        }
    }
}

impl Graph {
    /// Builds a graph over ids `0..n` labelled `"0".."n-1"`.
    ///
    /// Duplicate edges and self-loops are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph::with_labels(labels, edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`.
    ///
    /// The labels must already be strictly increasing in their detected
    /// [`LabelOrder`], so that id order and label order agree.
    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = labels.len();
        let order = LabelOrder::detect(&labels);
        if labels
            .windows(2)
            .any(|w| order.compare(&w[0], &w[1]) != Ordering::Less)
        {
            return Err(Error::invalid("labels are not strictly increasing"));
        }
        let mut pairs = Vec::with_capacity(edges.len() * 2);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Graph {
            offsets,
            neighbors,
            labels,
        })
    }

    /// Builds a graph from edges between arbitrary labels.
    ///
    /// Vertices are every label that appears, including endpoints of dropped
    /// self-loops.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Graph {
        let mut labels: Vec<String> = edges
            .iter()
            .flat_map(|(a, b)| [a.as_ref().to_string(), b.as_ref().to_string()])
            .collect();
        let order = LabelOrder::detect(&labels);
        labels.sort_by(|a, b| order.compare(a, b));
        labels.dedup();
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let ids: Vec<(usize, usize)> = edges
            .iter()
            .map(|(a, b)| (index[a.as_ref()], index[b.as_ref()]))
            .collect();
        Graph::with_labels(labels, &ids).expect("labels sorted and ids in range")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbor_array(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_order(&self) -> LabelOrder {
        LabelOrder::detect(&self.labels)
    }

    /// Looks up the id carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        let order = self.label_order();
        self.labels
            .binary_search_by(|l| order.compare(l, label))
            .ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Edges by external label; rebuilding from this list reproduces the graph
    /// as long as there are no isolated vertices.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.edges()
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// The total order π: by degree, ties broken by label order (equivalently id).
#[derive(Clone, Debug)]
pub struct VertexOrder {
    rank: Vec<usize>,
}

impl VertexOrder {
    pub fn new(g: &Graph) -> VertexOrder {
        let mut by_rank: Vec<usize> = (0..g.n()).collect();
        by_rank.sort_by_key(|&v| (g.degree(v), v));
        let mut rank = vec![0; g.n()];
        for (r, &v) in by_rank.iter().enumerate() {
            rank[v] = r;
        }
        VertexOrder { rank }
    }

    /// Position of `v` in the order.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// True when `u` comes before `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }
}

/// Adjacency lists split so that each list starts with the neighbors that come
/// later in the vertex order (sorted by id), followed by the earlier ones in no
/// particular order.
#[derive(Clone, Debug)]
pub struct OrderedAdjacency {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    split: Vec<usize>,
    order: VertexOrder,
}

impl OrderedAdjacency {
    pub fn new(g: &Graph) -> OrderedAdjacency {
        let order = VertexOrder::new(g);
        let mut neighbors = g.neighbor_array().to_vec();
        let offsets = g.offsets().to_vec();
        let mut split = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let (start, end) = (offsets[v], offsets[v + 1]);
            // Two pointers meet in the middle, swapping earlier-ordered
            // neighbors to the back.
            let (mut i, mut j) = (start, end);
            while i < j {
                if order.precedes(v, neighbors[i]) {
                    i += 1;
                } else {
                    j -= 1;
                    neighbors.swap(i, j);
                }
            }
            neighbors[start..i].sort_unstable();
            split.push(i);
        }
        OrderedAdjacency {
            offsets,
            neighbors,
            split,
            order,
        }
    }

    pub fn n(&self) -> usize {
        self.split.len()
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn order(&self) -> &VertexOrder {
        &self.order
    }

    /// Neighbors of `v` later in the order, sorted by id.
    pub fn higher(&self, v: usize) -> &[usize] {
        &self.neighbors[self.higher_range(v)]
    }

    /// Neighbors of `v` earlier in the order, unsorted.
    pub fn lower(&self, v: usize) -> &[usize] {
        &self.neighbors[self.split[v]..self.offsets[v + 1]]
    }

    /// All neighbors of `v`, higher ones first.
    pub fn all(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Slots of the higher neighbors of `v` within [`Self::neighbor_array`].
    pub fn higher_range(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.split[v]
    }

    /// Slots of all neighbors of `v` within [`Self::neighbor_array`].
    pub fn range(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn neighbor_array(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn max_higher_degree(&self) -> usize {
        (0..self.n())
            .map(|v| self.higher(v).len())
            .max()
            .unwrap_or(0)
    }

    /// Slot holding `v` inside the higher list of `u`, if `v` is there.
    pub fn higher_slot(&self, u: usize, v: usize) -> Option<usize> {
        self.higher(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.offsets[u] + i)
    }
}

/// Mean over edges of the smaller endpoint degree.
pub fn average_degeneracy(g: &Graph) -> Result<Ratio<u64>> {
    if g.m() == 0 {
        return Err(Error::Undefined(
            "average degeneracy of an edgeless graph".into(),
        ));
    }
    let total: u64 = g
        .edges()
        .map(|(u, v)| g.degree(u).min(g.degree(v)) as u64)
        .sum();
    Ok(Ratio::new(total, g.m() as u64))
}
