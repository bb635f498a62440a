//! Classical centralities, deterministic ranking and the agreement statistics
//! used to compare measures.

use std::collections::{HashSet, VecDeque};
use std::ops::Range;

use num_rational::Ratio;

use crate::centrality::{CentralityVector, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;
pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_TIE_EPS: f64 = 1e-9;
pub const DEFAULT_TOP_K: usize = 10;

pub fn degree_centrality(g: &Graph) -> CentralityVector {
    let scores = (0..g.n()).map(|v| g.degree(v) as f64).collect();
    CentralityVector::plain(Method::Degree, scores)
}

/// Hop distances from `s`; unreachable vertices are `usize::MAX`.
fn bfs(g: &Graph, s: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
    dist.fill(usize::MAX);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
}

/// `(c − 1) / Σ d(v, u)` over the `c` vertices of the component of `v`;
/// isolated vertices score 0.
pub fn closeness_centrality(g: &Graph) -> CentralityVector {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let scores = (0..n)
        .map(|v| {
            bfs(g, v, &mut dist, &mut queue);
            let (mut reached, mut total) = (0usize, 0usize);
            for &d in &dist {
                if d != usize::MAX {
                    reached += 1;
                    total += d;
                }
            }
            if total == 0 {
                0.0
            } else {
                (reached - 1) as f64 / total as f64
            }
        })
        .collect();
    CentralityVector::plain(Method::Closeness, scores)
}

/// Brandes' accumulation over every source, halved because each unordered
/// pair is counted from both ends.
pub fn betweenness_centrality(g: &Graph) -> CentralityVector {
    let n = g.n();
    let mut bc = vec![0.0; n];
    let mut stack = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        stack.clear();
        for p in preds.iter_mut() {
            p.clear();
        }
        sigma.fill(0.0);
        dist.fill(usize::MAX);
        delta.fill(0.0);
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    for x in bc.iter_mut() {
        *x /= 2.0;
    }
    CentralityVector::plain(Method::Betweenness, bc)
}

/// Power iteration with 2-norm normalisation. Returns the vector and whether
/// successive iterates came within `tol`.
fn power_iterate(g: &Graph, shift: f64, tol: f64, max_iter: usize) -> (Vec<f64>, bool) {
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iter {
        for v in 0..n {
            next[v] = shift * x[v] + g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>();
        }
        let norm = next.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            return (x, false);
        }
        let mut diff = 0.0f64;
        for v in 0..n {
            next[v] /= norm;
            diff = diff.max((next[v] - x[v]).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if diff < tol {
            return (x, true);
        }
    }
    (x, false)
}

/// Principal eigenvector of the adjacency matrix. If plain iteration fails to
/// settle (for instance on bipartite graphs, where it oscillates) it is rerun
/// once on `A + I`, which has the same eigenvectors.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iter: usize) -> CentralityVector {
    let (mut x, mut ok) = power_iterate(g, 0.0, tol, max_iter);
    if !ok {
        (x, ok) = power_iterate(g, 1.0, tol, max_iter);
    }
    let mut c = CentralityVector::plain(Method::Eigenvector, x);
    c.converged = ok;
    c
}

/// PageRank with damping `d`; dangling vertices spread their mass uniformly.
pub fn pagerank(g: &Graph, d: f64, tol: f64, max_iter: usize) -> CentralityVector {
    let n = g.n();
    let mut x = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    let mut converged = n == 0;
    for _ in 0..max_iter {
        if n == 0 {
            break;
        }
        let dangling: f64 = (0..n).filter(|&v| g.degree(v) == 0).map(|v| x[v]).sum();
        let base = (1.0 - d) / n as f64 + d * dangling / n as f64;
        let mut diff = 0.0f64;
        for v in 0..n {
            let inflow: f64 = g
                .neighbors(v)
                .iter()
                .map(|&u| x[u] / g.degree(u) as f64)
                .sum();
            next[v] = base + d * inflow;
            diff = diff.max((next[v] - x[v]).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if diff < tol {
            converged = true;
            break;
        }
    }
    let mut c = CentralityVector::plain(Method::PageRank, x);
    c.converged = converged;
    c
}

/// Vertices ordered best first, with tie groups and competition ranks.
#[derive(Clone, Debug, PartialEq)]
pub struct Ranking {
    pub method: Method,
    /// Vertices best first; ids ascend within a tie group.
    pub order: Vec<usize>,
    /// 1-based competition rank of each vertex.
    pub rank: Vec<usize>,
    pub scores: Vec<f64>,
    /// Position ranges in `order` of each tie group.
    pub groups: Vec<Range<usize>>,
}

impl Ranking {
    /// Vertices sharing the best rank.
    pub fn top_group(&self) -> &[usize] {
        self.groups.first().map_or(&[], |r| &self.order[r.clone()])
    }

    pub fn top(&self) -> Option<usize> {
        self.order.first().copied()
    }

    pub fn top_k(&self, k: usize) -> &[usize] {
        &self.order[..k.min(self.order.len())]
    }
}

/// Sorts by score descending. A score within `eps` (relative) of the first
/// score of the current group joins that group.
pub fn rank_vertices(c: &CentralityVector, eps: f64) -> Ranking {
    let n = c.scores.len();
    let s = &c.scores;
    let mut by_score: Vec<usize> = (0..n).collect();
    by_score.sort_by(|&a, &b| s[b].total_cmp(&s[a]).then(a.cmp(&b)));
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        let split = i == n || {
            let (lead, x) = (s[by_score[start]], s[by_score[i]]);
            lead - x > eps * lead.abs().max(x.abs())
        };
        if split {
            groups.push(start..i);
            start = i;
        }
    }
    let mut rank = vec![0; n];
    for g in &groups {
        by_score[g.clone()].sort_unstable();
        for &v in &by_score[g.clone()] {
            rank[v] = g.start + 1;
        }
    }
    Ranking {
        method: c.method,
        order: by_score,
        rank,
        scores: c.scores.clone(),
        groups,
    }
}

/// Jaccard index of the two top-`k` sets. Tie groups crossing the cut are
/// truncated in id order.
pub fn top_k_jaccard(r1: &Ranking, r2: &Ranking, k: usize) -> Result<Ratio<usize>> {
    let n = r1.order.len();
    if r2.order.len() != n {
        return Err(Error::invalid("rankings cover different vertex sets"));
    }
    if n < k || k == 0 {
        return Err(Error::invalid(format!(
            "top-{k} needs at least {k} vertices, have {n}"
        )));
    }
    let a: HashSet<usize> = r1.top_k(k).iter().copied().collect();
    let common = r2.top_k(k).iter().filter(|v| a.contains(v)).count();
    Ok(Ratio::new(common, 2 * k - common))
}

/// Picks the measure whose top-`k` set is most similar to that of
/// `rankings[target]`. Ties go to the measure ranking the target's first
/// vertex higher, walking down the target's list while tied or absent; any
/// remaining tie goes to the earliest measure. `None` when every similarity is
/// zero.
pub fn best_jaccard_match(rankings: &[Ranking], target: usize, k: usize) -> Result<Option<usize>> {
    let mut best = Ratio::from_integer(0);
    let mut tied: Vec<usize> = Vec::new();
    for (j, r) in rankings.iter().enumerate() {
        if j == target {
            continue;
        }
        let jac = top_k_jaccard(&rankings[target], r, k)?;
        if jac > best {
            best = jac;
            tied = vec![j];
        } else if jac == best && jac > Ratio::from_integer(0) {
            tied.push(j);
        }
    }
    if tied.len() <= 1 {
        return Ok(tied.first().copied());
    }
    for &x in rankings[target].top_k(k) {
        let positions: Vec<Option<usize>> = tied
            .iter()
            .map(|&j| rankings[j].top_k(k).iter().position(|&y| y == x))
            .collect();
        let Some(best_pos) = positions.iter().flatten().min().copied() else {
            continue;
        };
        let keep: Vec<usize> = tied
            .iter()
            .zip(&positions)
            .filter(|(_, p)| **p == Some(best_pos))
            .map(|(&j, _)| j)
            .collect();
        tied = keep;
        if tied.len() == 1 {
            break;
        }
    }
    Ok(tied.first().copied())
}

/// Agreement on the most central vertex across graphs and measures. Two
/// measures agree on a graph when their top tie groups share a vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct AgreementReport {
    pub measures: Vec<Method>,
    /// `dots[i][g][j]`: measures `i` and `j` agree on graph `g` (`i != j`).
    pub dots: Vec<Vec<Vec<bool>>>,
    /// `similarity[i][j]`: graphs on which `i` and `j` agree.
    pub similarity: Vec<Vec<usize>>,
    /// Share of possible dots set in each measure's matrix.
    pub percent_agreement: Vec<f64>,
    /// Graphs where the measure agrees with no other measure.
    pub empty_rows: Vec<usize>,
    /// Graphs where the measure agrees with every other measure.
    pub full_rows: Vec<usize>,
}

pub fn agreement_dot_matrix(per_graph: &[Vec<Ranking>]) -> Result<AgreementReport> {
    let measures: Vec<Method> = per_graph
        .first()
        .map(|rs| rs.iter().map(|r| r.method).collect())
        .unwrap_or_default();
    let mm = measures.len();
    for rs in per_graph {
        if rs.iter().map(|r| r.method).ne(measures.iter().copied()) {
            return Err(Error::invalid(
                "every graph needs the same measures in the same order",
            ));
        }
    }
    let agree = |rs: &[Ranking], i: usize, j: usize| {
        let a = rs[i].top_group();
        rs[j].top_group().iter().any(|v| a.contains(v))
    };
    let dots: Vec<Vec<Vec<bool>>> = (0..mm)
        .map(|i| {
            per_graph
                .iter()
                .map(|rs| (0..mm).map(|j| j != i && agree(rs, i, j)).collect())
                .collect()
        })
        .collect();
    let similarity = (0..mm)
        .map(|i| {
            (0..mm)
                .map(|j| dots[i].iter().filter(|row| row[j]).count())
                .collect()
        })
        .collect();
    let possible = per_graph.len() * mm.saturating_sub(1);
    let percent_agreement = dots
        .iter()
        .map(|d| {
            let set = d.iter().flatten().filter(|&&b| b).count();
            if possible == 0 {
                0.0
            } else {
                100.0 * set as f64 / possible as f64
            }
        })
        .collect();
    let count_rows = |full: bool| -> Vec<usize> {
        (0..mm)
            .map(|i| {
                dots[i]
                    .iter()
                    .filter(|row| {
                        let set = row.iter().filter(|&&b| b).count();
                        if full {
                            set == mm - 1
                        } else {
                            set == 0
                        }
                    })
                    .count()
            })
            .collect()
    };
    let empty_rows = count_rows(false);
    let full_rows = count_rows(true);
    Ok(AgreementReport {
        measures,
        dots,
        similarity,
        percent_agreement,
        empty_rows,
        full_rows,
    })
}

/// The five classical measures with default parameters, in a fixed order.
pub fn classical_measures(g: &Graph) -> Vec<CentralityVector> {
    vec![
        betweenness_centrality(g),
        closeness_centrality(g),
        degree_centrality(g),
        eigenvector_centrality(g, DEFAULT_TOL, DEFAULT_MAX_ITER),
        pagerank(g, DEFAULT_DAMPING, DEFAULT_TOL, DEFAULT_MAX_ITER),
    ]
}
