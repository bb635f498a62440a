//! In-process simulation of a four-round MapReduce triangle centrality job.
//!
//! Each round maps a multiset of records, groups them by key (an in-memory
//! sort standing in for the shuffle) and reduces each group. No state is kept
//! between rounds except the triangle total, which is aggregated after round 3
//! and handed to every round-4 reducer.
//!
//! Communication is metered in 64-bit words: every key or value field is one
//! word.

use crate::centrality::{CentralityVector, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const WORD_BITS: u64 = 64;

/// Width of the widest record, a degree-annotated edge of four words.
pub const RECORD_WIDTH_BITS: u64 = 4 * WORD_BITS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Vertex(usize),
    /// Unordered vertex pair, stored with the smaller id first.
    Pair(usize, usize),
}

impl Key {
    pub fn pair(a: usize, b: usize) -> Key {
        Key::Pair(a.min(b), a.max(b))
    }

    fn fields(self) -> u64 {
        match self {
            Key::Vertex(_) => 1,
            Key::Pair(..) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    /// A neighbor, or a witness vertex closing a wedge.
    Vertex(usize),
    /// Marks that the pair key is an edge.
    Zero,
    /// A neighbor, flagged when the connecting edge is on a triangle.
    Flagged {
        vertex: usize,
        on_triangle: bool,
    },
    /// A triangle count, flagged when it belongs to the core of the key vertex.
    Count {
        triangles: u64,
        core: bool,
    },
    Score(f64),
}

impl Value {
    fn fields(self) -> u64 {
        match self {
            Value::Vertex(_) | Value::Zero | Value::Score(_) => 1,
            Value::Flagged { .. } | Value::Count { .. } => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Record {
    pub key: Key,
    pub value: Value,
}

impl Record {
    fn new(key: Key, value: Value) -> Record {
        Record { key, value }
    }

    fn fields(&self) -> u64 {
        self.key.fields() + self.value.fields()
    }
}

/// Input record `⟨(v, d(v)), (u, d(u))⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnnotatedEdge {
    pub v: usize,
    pub dv: usize,
    pub u: usize,
    pub du: usize,
}

/// Both orientations of every edge, annotated with endpoint degrees.
pub fn annotated_edges(g: &Graph) -> Vec<AnnotatedEdge> {
    (0..g.n())
        .flat_map(|v| {
            g.neighbors(v).iter().map(move |&u| AnnotatedEdge {
                v,
                dv: g.degree(v),
                u,
                du: g.degree(u),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RoundStats {
    pub round: usize,
    pub records_in: u64,
    pub map_out: u64,
    pub reduce_out: u64,
    /// Side-channel records delivered alongside the round's input.
    pub broadcast: u64,
    /// Map output, reduce output and broadcast, in bits.
    pub bits: u64,
}

impl RoundStats {
    fn new(round: usize, records_in: usize, map_out: &[Record], reduce_out: &[Record]) -> Self {
        let words: u64 = map_out.iter().chain(reduce_out).map(Record::fields).sum();
        RoundStats {
            round,
            records_in: records_in as u64,
            map_out: map_out.len() as u64,
            reduce_out: reduce_out.len() as u64,
            broadcast: 0,
            bits: words * WORD_BITS,
        }
    }
}

/// Sorts by key and hands each group's values to `reduce`.
fn shuffle_reduce<F>(mut records: Vec<Record>, mut reduce: F) -> Result<Vec<Record>>
where
    F: FnMut(Key, &[Value], &mut Vec<Record>) -> Result<()>,
{
    records.sort_by_key(|r| r.key);
    let mut out = Vec::new();
    let mut values = Vec::new();
    let mut i = 0;
    while i < records.len() {
        let key = records[i].key;
        values.clear();
        while i < records.len() && records[i].key == key {
            values.push(records[i].value);
            i += 1;
        }
        reduce(key, &values, &mut out)?;
    }
    Ok(out)
}

fn check_degrees(input: &[AnnotatedEdge]) -> Result<()> {
    let n = input.iter().map(|e| e.v.max(e.u) + 1).max().unwrap_or(0);
    let mut degree: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![0usize; n];
    for e in input {
        for (x, dx) in [(e.v, e.dv), (e.u, e.du)] {
            match degree[x] {
                Some(d) if d != dx => {
                    return Err(Error::invalid(format!(
                        "vertex {x} annotated with degrees {d} and {dx}"
                    )))
                }
                _ => degree[x] = Some(dx),
            }
        }
        seen[e.v] += 1;
    }
    for (x, d) in degree.iter().enumerate() {
        if let Some(d) = *d {
            if seen[x] != d {
                return Err(Error::invalid(format!(
                    "vertex {x} annotated with degree {d} but has {} edges",
                    seen[x]
                )));
            }
        }
    }
    Ok(())
}

/// Round 1: orient edges from lower to higher order and emit every edge as a
/// pair marked `0`, plus every pair of higher neighbors with its witness.
pub fn mr_round1(input: &[AnnotatedEdge]) -> Result<(Vec<Record>, RoundStats)> {
    check_degrees(input)?;
    let mapped: Vec<Record> = input
        .iter()
        .filter(|e| (e.dv, e.v) < (e.du, e.u))
        .map(|e| Record::new(Key::Vertex(e.v), Value::Vertex(e.u)))
        .collect();
    let out = shuffle_reduce(mapped.clone(), |key, values, out| {
        let Key::Vertex(v) = key else {
            return Err(Error::internal("round 1 expects vertex keys"));
        };
        let mut higher: Vec<usize> = values
            .iter()
            .map(|x| match x {
                Value::Vertex(u) => Ok(*u),
                _ => Err(Error::internal("round 1 expects vertex values")),
            })
            .collect::<Result<_>>()?;
        higher.sort_unstable();
        for &u in &higher {
            out.push(Record::new(Key::pair(v, u), Value::Zero));
        }
        for (i, &u) in higher.iter().enumerate() {
            for &w in &higher[i + 1..] {
                out.push(Record::new(Key::pair(u, w), Value::Vertex(v)));
            }
        }
        Ok(())
    })?;
    let stats = RoundStats::new(1, input.len(), &mapped, &out);
    Ok((out, stats))
}

/// Round 2: a pair that is an edge and has witnesses yields six flagged
/// records per witness, one per directed triangle edge.
pub fn mr_round2(records: Vec<Record>) -> Result<(Vec<Record>, RoundStats)> {
    let records_in = records.len();
    let mapped = records;
    let out = shuffle_reduce(mapped.clone(), |key, values, out| {
        let Key::Pair(u, w) = key else {
            return Err(Error::internal("round 2 expects pair keys"));
        };
        if !values.contains(&Value::Zero) {
            return Ok(());
        }
        for value in values {
            if let Value::Vertex(v) = *value {
                for (a, b) in [(v, u), (u, v), (v, w), (w, v), (u, w), (w, u)] {
                    out.push(Record::new(
                        Key::Vertex(a),
                        Value::Flagged {
                            vertex: b,
                            on_triangle: true,
                        },
                    ));
                }
            }
        }
        Ok(())
    })?;
    let stats = RoundStats::new(2, records_in, &mapped, &out);
    Ok((out, stats))
}

/// Round 3: adds every directed edge with flag 0, then each vertex learns its
/// triangle count (half its flagged records) and sends it to its neighbors,
/// flagged for triangle neighbors, and to itself.
///
/// Also returns the triangle total for the side channel.
pub fn mr_round3(
    records: Vec<Record>,
    edges: &[AnnotatedEdge],
) -> Result<(Vec<Record>, RoundStats, u64)> {
    let records_in = records.len() + edges.len();
    let mut mapped = records;
    mapped.extend(edges.iter().map(|e| {
        Record::new(
            Key::Vertex(e.v),
            Value::Flagged {
                vertex: e.u,
                on_triangle: false,
            },
        )
    }));
    let mut sum = 0u64;
    let out = shuffle_reduce(mapped.clone(), |key, values, out| {
        let Key::Vertex(v) = key else {
            return Err(Error::internal("round 3 expects vertex keys"));
        };
        let mut neighbors = Vec::with_capacity(values.len());
        let mut flagged = 0u64;
        for value in values {
            match *value {
                Value::Flagged {
                    vertex,
                    on_triangle,
                } => {
                    flagged += on_triangle as u64;
                    neighbors.push((vertex, on_triangle));
                }
                _ => return Err(Error::internal("round 3 expects flagged values")),
            }
        }
        if !flagged.is_multiple_of(2) {
            return Err(Error::internal(format!(
                "vertex {v} received {flagged} triangle records"
            )));
        }
        let triangles = flagged / 2;
        sum += triangles;
        // Sort so a flagged copy of a neighbor precedes its unflagged one.
        neighbors.sort_unstable_by_key(|&(u, f)| (u, !f));
        neighbors.dedup_by_key(|&mut (u, _)| u);
        for (u, on_triangle) in neighbors {
            out.push(Record::new(
                Key::Vertex(u),
                Value::Count {
                    triangles,
                    core: on_triangle,
                },
            ));
        }
        out.push(Record::new(
            Key::Vertex(v),
            Value::Count {
                triangles,
                core: true,
            },
        ));
        Ok(())
    })?;
    if !sum.is_multiple_of(3) {
        return Err(Error::internal(
            "vertex triangle counts do not sum to a multiple of 3",
        ));
    }
    let stats = RoundStats::new(3, records_in, &mapped, &out);
    Ok((out, stats, sum / 3))
}

/// Round 4: each vertex adds up core and non-core counts and emits its score.
pub fn mr_round4(
    records: Vec<Record>,
    triangles: u64,
    n: usize,
) -> Result<(CentralityVector, RoundStats)> {
    let records_in = records.len();
    let mapped = records;
    let mut receivers = 0u64;
    let out = shuffle_reduce(mapped.clone(), |key, values, out| {
        let Key::Vertex(v) = key else {
            return Err(Error::internal("round 4 expects vertex keys"));
        };
        receivers += 1;
        let (mut x, mut y) = (0u64, 0u64);
        for value in values {
            match *value {
                Value::Count { triangles, core } if core => x += triangles,
                Value::Count { triangles, .. } => y += triangles,
                _ => return Err(Error::internal("round 4 expects count values")),
            }
        }
        let score = if triangles == 0 {
            0.0
        } else {
            (x + 3 * y) as f64 / (3 * triangles) as f64
        };
        out.push(Record::new(Key::Vertex(v), Value::Score(score)));
        Ok(())
    })?;
    let mut stats = RoundStats::new(4, records_in, &mapped, &out);
    stats.broadcast = receivers;
    stats.bits += receivers * WORD_BITS;

    let mut scores = vec![0.0; n];
    for r in out {
        if let (Key::Vertex(v), Value::Score(s)) = (r.key, r.value) {
            if v >= n {
                return Err(Error::internal(format!("score for unknown vertex {v}")));
            }
            scores[v] = s;
        }
    }
    let tc = CentralityVector {
        method: Method::TriangleMapReduce,
        scores,
        triangles: Some(triangles),
        triangle_free: triangles == 0,
        converged: true,
    };
    Ok((tc, stats))
}

/// Chains the four rounds.
pub fn run_mapreduce_tc(g: &Graph) -> Result<(CentralityVector, [RoundStats; 4])> {
    let edges = annotated_edges(g);
    let (r1, s1) = mr_round1(&edges)?;
    let (r2, s2) = mr_round2(r1)?;
    let (r3, s3, triangles) = mr_round3(r2, &edges)?;
    let (tc, s4) = mr_round4(r3, triangles, g.n())?;
    Ok((tc, [s1, s2, s3, s4]))
}

pub fn total_bits(stats: &[RoundStats]) -> u64 {
    stats.iter().map(|s| s.bits).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_labeled_edges(&[("1", "2"), ("1", "3"), ("2", "3")])
    }

    #[test]
    fn round1_on_triangle() {
        let (out, stats) = mr_round1(&annotated_edges(&k3())).unwrap();
        let expected = vec![
            Record::new(Key::Pair(0, 1), Value::Zero),
            Record::new(Key::Pair(0, 2), Value::Zero),
            Record::new(Key::Pair(1, 2), Value::Vertex(0)),
            Record::new(Key::Pair(1, 2), Value::Zero),
        ];
        assert_eq!(out, expected);
        assert_eq!(stats.records_in, 6);
        assert_eq!(stats.map_out, 3);
        assert_eq!(stats.reduce_out, 4);
    }

    #[test]
    fn open_wedges_emit_nothing() {
        let path = Graph::from_labeled_edges(&[("1", "2"), ("2", "3")]);
        let (r1, _) = mr_round1(&annotated_edges(&path)).unwrap();
        assert!(mr_round2(r1).unwrap().0.is_empty());

        let square = Graph::from_labeled_edges(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]);
        let (r1, _) = mr_round1(&annotated_edges(&square)).unwrap();
        assert!(r1.contains(&Record::new(Key::Pair(1, 3), Value::Vertex(0))));
        let (r2, _) = mr_round2(r1).unwrap();
        assert!(r2.is_empty());
    }

    #[test]
    fn triangle_rounds() {
        let g = k3();
        let edges = annotated_edges(&g);
        let (r1, _) = mr_round1(&edges).unwrap();
        let (r2, s2) = mr_round2(r1).unwrap();
        assert_eq!(s2.reduce_out, 6);
        let (r3, s3, total) = mr_round3(r2, &edges).unwrap();
        assert_eq!(total, 1);
        assert_eq!(s3.reduce_out, 9);
        assert!(r3.iter().all(|r| r.value
            == Value::Count {
                triangles: 1,
                core: true
            }));
        let (tc, s4) = mr_round4(r3, total, 3).unwrap();
        assert_eq!(tc.scores, vec![1.0; 3]);
        assert_eq!(s4.broadcast, 3);
    }

    #[test]
    fn inconsistent_degrees_rejected() {
        let mut edges = annotated_edges(&k3());
        edges[0].dv += 1;
        assert!(matches!(mr_round1(&edges), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn odd_triangle_records_rejected() {
        let stray = vec![Record::new(
            Key::Vertex(0),
            Value::Flagged {
                vertex: 1,
                on_triangle: true,
            },
        )];
        assert!(matches!(mr_round3(stray, &[]), Err(Error::Internal(_))));
    }

    #[test]
    fn edgeless_graph_runs_four_rounds() {
        let g = Graph::from_edges(3, &[]).unwrap();
        let (tc, stats) = run_mapreduce_tc(&g).unwrap();
        assert!(tc.triangle_free);
        assert_eq!(
            stats.iter().map(|s| s.round).collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        assert_eq!(total_bits(&stats), 0);
    }
}
