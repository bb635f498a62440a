//! Multi-threaded triangle centrality with deterministic results.
//!
//! Work runs in phases: triangle detection over chunks of low vertices, then
//! core sums, then neighborhood sums and scores. Workers write only to private
//! buffers, which are merged on the calling thread in worker order, so output
//! is bitwise identical for every worker count.

use std::fmt;
use std::ops::Range;
use std::thread;
use std::time::{Duration, Instant};

use crate::centrality::{CentralityVector, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedAdjacency};
use crate::triangle::{visit_low_vertex, MergeWork, TriangleMarks, TriangleStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelConfig {
    workers: usize,
    /// Vertices per chunk; chunks are dealt round-robin to workers.
    chunk: usize,
}

impl ParallelConfig {
    pub fn new(workers: usize) -> Result<ParallelConfig> {
        ParallelConfig::with_chunk(workers, 256)
    }

    pub fn with_chunk(workers: usize, chunk: usize) -> Result<ParallelConfig> {
        if workers == 0 {
            return Err(Error::invalid("worker count must be at least 1"));
        }
        if chunk == 0 {
            return Err(Error::invalid("chunk size must be at least 1"));
        }
        Ok(ParallelConfig { workers, chunk })
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn chunk(&self) -> usize {
        self.chunk
    }
}

impl Default for ParallelConfig {
    fn default() -> ParallelConfig {
        let workers = thread::available_parallelism().map_or(1, |n| n.get());
        ParallelConfig::new(workers).expect("available parallelism is positive")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    /// Pairs of higher neighbors covered, plus merge comparisons.
    pub pair_tests: u64,
    pub triangles_detected: u64,
    pub merge_comparisons: u64,
    pub phase_times: Vec<(&'static str, Duration)>,
}

/// Work counters set against the `m·√(2m)` bound.
#[derive(Clone, Debug)]
pub struct WorkReport {
    pub counters: WorkCounters,
    pub m: usize,
    /// `pair_tests / (m·√(2m))`; zero for an edgeless graph.
    pub pair_test_ratio: f64,
    /// `merge_comparisons / (m·√(2m))`.
    pub comparison_ratio: f64,
}

pub fn work_report(counters: &WorkCounters, g: &Graph) -> WorkReport {
    let m = g.m();
    let bound = m as f64 * (2.0 * m as f64).sqrt();
    let ratio = |x: u64| if bound > 0.0 { x as f64 / bound } else { 0.0 };
    WorkReport {
        counters: counters.clone(),
        m,
        pair_test_ratio: ratio(counters.pair_tests),
        comparison_ratio: ratio(counters.merge_comparisons),
    }
}

impl fmt::Display for WorkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.counters;
        writeln!(f, "edges\t{}", self.m)?;
        writeln!(f, "triangles_detected\t{}", c.triangles_detected)?;
        writeln!(f, "pair_tests\t{}", c.pair_tests)?;
        writeln!(f, "merge_comparisons\t{}", c.merge_comparisons)?;
        writeln!(f, "pair_tests/(m*sqrt(2m))\t{:.6}", self.pair_test_ratio)?;
        writeln!(f, "comparisons/(m*sqrt(2m))\t{:.6}", self.comparison_ratio)?;
        for (name, t) in &c.phase_times {
            writeln!(f, "time_{name}\t{:.6}s", t.as_secs_f64())?;
        }
        Ok(())
    }
}

/// Chunks of `0..n` owned by worker `w`.
fn chunks_of(cfg: &ParallelConfig, n: usize, w: usize) -> impl Iterator<Item = Range<usize>> {
    let step = cfg.chunk * cfg.workers;
    let chunk = cfg.chunk;
    (w * chunk..n)
        .step_by(step)
        .map(move |s| s..(s + chunk).min(n))
}

/// Runs `job` once per worker and returns results in worker order.
fn run_workers<T, F>(cfg: &ParallelConfig, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if cfg.workers == 1 {
        return vec![job(0)];
    }
    let job = &job;
    thread::scope(|s| {
        let handles: Vec<_> = (0..cfg.workers).map(|w| s.spawn(move || job(w))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

struct DetectBuffer {
    per_vertex: Vec<u64>,
    total: u64,
    marked: Vec<usize>,
    work: MergeWork,
    pairs: u64,
}

/// Detects triangles on all workers and merges counts and marks.
pub fn parallel_triangle_neighbor(
    adj: &OrderedAdjacency,
    cfg: &ParallelConfig,
) -> (TriangleStats, TriangleMarks, WorkCounters) {
    let n = adj.n();
    let buffers = run_workers(cfg, |w| {
        let mut buf = DetectBuffer {
            per_vertex: vec![0; n],
            total: 0,
            marked: Vec::new(),
            work: MergeWork::default(),
            pairs: 0,
        };
        for range in chunks_of(cfg, n, w) {
            for v in range {
                let h = adj.higher(v).len() as u64;
                buf.pairs += h * h.saturating_sub(1) / 2;
                visit_low_vertex(adj, v, &mut buf.work, |u, wv, vu, vw, uw| {
                    buf.per_vertex[v] += 1;
                    buf.per_vertex[u] += 1;
                    buf.per_vertex[wv] += 1;
                    buf.total += 1;
                    buf.marked.extend([vu, vw, uw]);
                });
            }
        }
        buf
    });

    let mut per_vertex = vec![0u64; n];
    let mut marks = TriangleMarks::new(adj.neighbor_array().len());
    let mut counters = WorkCounters::default();
    let mut total = 0;
    for buf in buffers {
        for (acc, x) in per_vertex.iter_mut().zip(&buf.per_vertex) {
            *acc += x;
        }
        total += buf.total;
        for s in buf.marked {
            marks.set(s);
        }
        counters.triangles_detected += buf.work.detections;
        counters.merge_comparisons += buf.work.comparisons;
        counters.pair_tests += buf.pairs + buf.work.comparisons;
    }
    let stats = TriangleStats {
        per_vertex,
        total,
        per_edge: None,
    };
    (stats, marks, counters)
}

/// Triangle centrality on `cfg.workers()` threads.
pub fn parallel_triangle_centrality(
    g: &Graph,
    cfg: &ParallelConfig,
) -> (CentralityVector, WorkCounters) {
    let n = g.n();
    let start = Instant::now();
    let adj = OrderedAdjacency::new(g);
    let ordered = start.elapsed();

    let start = Instant::now();
    let (stats, marks, mut counters) = parallel_triangle_neighbor(&adj, cfg);
    let detect = start.elapsed();
    let dv = &stats.per_vertex;

    // Core sums: marked slots push to both endpoints, so collect per worker.
    let start = Instant::now();
    let partial = run_workers(cfg, |w| {
        let mut core = vec![0u64; n];
        for range in chunks_of(cfg, n, w) {
            for v in range {
                for u in marks.marked(&adj, v) {
                    core[v] += dv[u];
                    core[u] += dv[v];
                }
            }
        }
        core
    });
    let mut core = dv.clone();
    for part in partial {
        for (acc, x) in core.iter_mut().zip(&part) {
            *acc += x;
        }
    }
    let core_time = start.elapsed();

    // Neighborhood sums only read shared data, so each worker fills its own
    // chunks and the results are scattered back.
    let start = Instant::now();
    let partial = run_workers(cfg, |w| {
        chunks_of(cfg, n, w)
            .map(|range| {
                let sums: Vec<u64> = range
                    .clone()
                    .map(|v| g.neighbors(v).iter().map(|&u| dv[u]).sum())
                    .collect();
                (range, sums)
            })
            .collect::<Vec<_>>()
    });
    let mut all = vec![0u64; n];
    for (range, sums) in partial.into_iter().flatten() {
        all[range].copy_from_slice(&sums);
    }
    let tc = CentralityVector::from_sums(Method::TriangleParallel, dv, stats.total, &core, &all);
    let finish = start.elapsed();

    counters.phase_times = vec![
        ("order", ordered),
        ("detect", detect),
        ("core_sum", core_time),
        ("finalize", finish),
    ];
    (tc, counters)
}
