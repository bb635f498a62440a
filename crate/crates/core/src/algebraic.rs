//! Sparse-matrix form of triangle centrality.
//!
//! The triangle matrix `T = A²∘A` has `t(i, j)` equal to the number of
//! triangles through edge `{i, j}`. It is filled from triangle enumeration, not
//! by a general sparse product. Scores are `C = (3A − 2Ť + I)·y / k` with
//! `y = T·1`, `k = 1ᵀy` and `Ť` the 0/1 pattern of `T`.
//!
//! Matrix values are `i64`; the final division is the only floating-point step.

use std::fmt::Write as _;

use crate::centrality::{CentralityVector, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedAdjacency};
use crate::triangle::triangle_neighbor;

/// Square matrix in compressed row form with sorted column indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    n: usize,
    row_offsets: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<i64>,
}

impl SparseMatrix {
    /// Builds from `(row, col, value)` triples; zero values are dropped and
    /// repeated coordinates are summed.
    pub fn from_triples(n: usize, mut triples: Vec<(usize, usize, i64)>) -> Result<SparseMatrix> {
        if let Some(&(i, j, _)) = triples.iter().find(|&&(i, j, _)| i >= n || j >= n) {
            return Err(Error::invalid(format!("entry ({i}, {j}) outside {n}x{n}")));
        }
        triples.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_offsets = vec![0; n + 1];
        let mut cols = Vec::with_capacity(triples.len());
        let mut values: Vec<i64> = Vec::with_capacity(triples.len());
        let mut last: Option<(usize, usize)> = None;
        for (i, j, x) in triples {
            if last == Some((i, j)) {
                *values.last_mut().unwrap() += x;
                continue;
            }
            last = Some((i, j));
            row_offsets[i + 1] += 1;
            cols.push(j);
            values.push(x);
        }
        for i in 0..n {
            row_offsets[i + 1] += row_offsets[i];
        }
        let mut m = SparseMatrix {
            n,
            row_offsets,
            cols,
            values,
        };
        m.drop_zeros();
        Ok(m)
    }

    fn drop_zeros(&mut self) {
        if self.values.iter().all(|&x| x != 0) {
            return;
        }
        let mut offsets = vec![0; self.n + 1];
        let (mut cols, mut values) = (Vec::new(), Vec::new());
        for i in 0..self.n {
            for (j, x) in self.row(i) {
                if x != 0 {
                    cols.push(j);
                    values.push(x);
                }
            }
            offsets[i + 1] = cols.len();
        }
        self.row_offsets = offsets;
        self.cols = cols;
        self.values = values;
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix {
            n,
            row_offsets: (0..=n).collect(),
            cols: (0..n).collect(),
            values: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Nonzeros of row `i` as `(col, value)`, columns ascending.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let r = self.row_offsets[i]..self.row_offsets[i + 1];
        self.cols[r.clone()]
            .iter()
            .copied()
            .zip(self.values[r].iter().copied())
    }

    pub fn row_pattern(&self, i: usize) -> &[usize] {
        &self.cols[self.row_offsets[i]..self.row_offsets[i + 1]]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        let r = self.row_offsets[i]..self.row_offsets[i + 1];
        match self.cols[r.clone()].binary_search(&j) {
            Ok(p) => self.values[r.start + p],
            Err(_) => 0,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| self.row(i).all(|(j, x)| self.get(j, i) == x))
    }

    /// Same pattern with every value set to 1.
    pub fn pattern(&self) -> SparseMatrix {
        SparseMatrix {
            values: vec![1; self.values.len()],
            ..self.clone()
        }
    }

    /// Linear combination `Σ cᵢ·Mᵢ` of equally sized matrices.
    pub fn combine(terms: &[(i64, &SparseMatrix)]) -> Result<SparseMatrix> {
        let n = terms.first().map_or(0, |(_, m)| m.n);
        if terms.iter().any(|(_, m)| m.n != n) {
            return Err(Error::invalid("matrix dimensions differ"));
        }
        let triples = terms
            .iter()
            .flat_map(|&(c, m)| (0..n).flat_map(move |i| m.row(i).map(move |(j, x)| (i, j, c * x))))
            .collect();
        SparseMatrix::from_triples(n, triples)
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).map(|(j, a)| a * x[j]).sum())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).map(|(_, x)| x).sum())
            .collect()
    }

    /// Coordinate text, one `i j value` line per nonzero with 1-based indices.
    pub fn to_coordinate_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for (j, x) in self.row(i) {
                let _ = writeln!(s, "{} {} {}", i + 1, j + 1, x);
            }
        }
        s
    }
}

pub fn adjacency_matrix(g: &Graph) -> SparseMatrix {
    SparseMatrix {
        n: g.n(),
        row_offsets: g.offsets().to_vec(),
        cols: g.neighbor_array().to_vec(),
        values: vec![1; g.neighbor_array().len()],
    }
}

/// Builds `T = A²∘A` from per-edge triangle counts.
pub fn build_triangle_matrix(g: &Graph) -> SparseMatrix {
    let adj = OrderedAdjacency::new(g);
    let out = triangle_neighbor(&adj);
    let per_edge = out.stats.per_edge.expect("per-edge counts always filled");
    let nb = adj.neighbor_array();
    let mut triples = Vec::new();
    for v in 0..g.n() {
        for s in adj.range(v) {
            if per_edge[s] > 0 {
                triples.push((v, nb[s], per_edge[s] as i64));
            }
        }
    }
    SparseMatrix::from_triples(g.n(), triples).expect("indices come from the graph")
}

pub fn tc_algebraic(a: &SparseMatrix, t: &SparseMatrix) -> Result<CentralityVector> {
    let n = a.n();
    if t.n() != n {
        return Err(Error::invalid(
            "adjacency and triangle matrices differ in size",
        ));
    }
    for i in 0..n {
        if t.row(i).any(|(j, _)| a.get(i, j) == 0) {
            return Err(Error::invalid(format!(
                "triangle matrix row {i} leaves the edge set"
            )));
        }
    }
    let ident = SparseMatrix::identity(n);
    let t_pattern = t.pattern();
    let x = SparseMatrix::combine(&[(3, a), (-2, &t_pattern), (1, &ident)])?;
    let y = t.row_sums();
    let k: i64 = y.iter().sum();
    let xy = x.mul_vec(&y);
    let scores = if k == 0 {
        vec![0.0; n]
    } else {
        xy.iter().map(|&num| num as f64 / k as f64).collect()
    };
    if k % 6 != 0 {
        return Err(Error::internal(
            "triangle matrix total is not a multiple of six",
        ));
    }
    Ok(CentralityVector {
        method: Method::TriangleAlgebraic,
        scores,
        triangles: Some((k / 6) as u64),
        triangle_free: k == 0,
        converged: true,
    })
}

/// Recovers `(Δ(v) for all v, Δ(G))` from half row sums and a sixth of the
/// total.
pub fn triangle_identities(t: &SparseMatrix) -> Result<(Vec<u64>, u64)> {
    let mut per_vertex = Vec::with_capacity(t.n());
    let mut total = 0i64;
    for (i, s) in t.row_sums().into_iter().enumerate() {
        if s < 0 || s % 2 != 0 {
            return Err(Error::internal(format!("row {i} of T sums to {s}")));
        }
        per_vertex.push((s / 2) as u64);
        total += s;
    }
    if total % 6 != 0 {
        return Err(Error::internal(format!(
            "T sums to {total}, not a multiple of six"
        )));
    }
    Ok((per_vertex, (total / 6) as u64))
}

/// Full algebraic pipeline from a graph.
pub fn triangle_centrality_algebraic(g: &Graph) -> CentralityVector {
    let a = adjacency_matrix(g);
    let t = build_triangle_matrix(g);
    tc_algebraic(&a, &t).expect("matrices built from the same graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(k: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                e.push((u, v));
            }
        }
        Graph::from_edges(k, &e).unwrap()
    }

    #[test]
    fn k3_matrix_and_scores() {
        let g = complete(3);
        let t = build_triangle_matrix(&g);
        assert_eq!(t.nnz(), 6);
        assert!((0..3).all(|i| t.row(i).all(|(_, x)| x == 1)));
        let a = adjacency_matrix(&g);
        let x =
            SparseMatrix::combine(&[(3, &a), (-2, &t.pattern()), (1, &SparseMatrix::identity(3))])
                .unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| x.get(i, j) == 1)));
        assert_eq!(t.row_sums(), vec![2, 2, 2]);
        let c = tc_algebraic(&a, &t).unwrap();
        assert_eq!(c.scores, vec![1.0; 3]);
        assert_eq!(c.triangles, Some(1));
    }

    #[test]
    fn k4_identities() {
        let t = build_triangle_matrix(&complete(4));
        assert!((0..4).all(|i| t.row(i).all(|(_, x)| x == 2)));
        assert_eq!(triangle_identities(&t).unwrap(), (vec![3; 4], 4));
        assert!(t.is_symmetric());
    }

    #[test]
    fn triangle_free_is_flagged() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = triangle_centrality_algebraic(&g);
        assert!(c.triangle_free);
        assert_eq!(c.scores, vec![0.0; 3]);
    }

    #[test]
    fn rejects_pattern_outside_adjacency() {
        let g = complete(3);
        let bogus = SparseMatrix::from_triples(3, vec![(0, 0, 2)]).unwrap();
        assert!(tc_algebraic(&adjacency_matrix(&g), &bogus).is_err());
    }

    #[test]
    fn odd_row_sum_is_internal_error() {
        let t = SparseMatrix::from_triples(2, vec![(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(matches!(triangle_identities(&t), Err(Error::Internal(_))));
    }

    #[test]
    fn triples_merge_and_drop_zeros() {
        let m = SparseMatrix::from_triples(2, vec![(1, 0, 2), (0, 1, 1), (1, 0, -2), (0, 1, 4)])
            .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(0, 1), 5);
        assert_eq!(m.to_coordinate_text(), "1 2 5\n");
    }
}
