use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tricent::algebraic::triangle_centrality_algebraic;
use tricent::centrality::CentralityVector;
use tricent::compare::{
    best_jaccard_match, classical_measures, rank_vertices, top_k_jaccard, Ranking, DEFAULT_TIE_EPS,
    DEFAULT_TOP_K,
};
use tricent::fixtures::{self, Fixture};
use tricent::io::{read_edge_list, write_edge_list};
use tricent::mapreduce::{run_mapreduce_tc, total_bits, RECORD_WIDTH_BITS};
use tricent::parallel::{parallel_triangle_centrality, work_report, ParallelConfig, WorkCounters};
use tricent::{triangle_centrality, triangle_centrality_basic, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tc",
    version,
    about = "Triangle centrality for undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score every vertex and print `label<TAB>score` by rank.
    Compute {
        #[arg(long, value_enum, default_value_t = Algo::Main)]
        algo: Algo,
        /// Worker threads for `--algo parallel`.
        #[arg(long, env = "TC_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        /// Print graph statistics and timings to standard error.
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Edge list file, or `-` for standard input.
        input: PathBuf,
    },
    /// Rank vertices under triangle centrality and five classical measures.
    Compare {
        #[arg(long, default_value_t = DEFAULT_TOP_K)]
        k: usize,
        input: PathBuf,
    },
    /// Run the four-round MapReduce simulation; round statistics go to standard error.
    Mapreduce { input: PathBuf },
    /// Write a generated or bundled graph as an edge list.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Vertex count (clique, random).
        #[arg(long)]
        n: Option<usize>,
        /// Number of cliques.
        #[arg(long)]
        p: Option<usize>,
        /// Clique size.
        #[arg(long)]
        k: Option<usize>,
        /// Leaves hung on each triangle vertex.
        #[arg(long)]
        pendants: Option<usize>,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.1)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time every algorithm on each edge list and report triangle totals.
    Bench {
        #[arg(long, env = "TC_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Main,
    Basic,
    Algebraic,
    Parallel,
    Mapreduce,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Clique,
    Disjoint,
    Bridge,
    Chain,
    Ring,
    Triangle,
    Random,
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig3,
    Borgatti,
    Karate,
    Dolphins,
    Hijackers,
}

/// An error tagged with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<tricent::Error>() {
            Some(tricent::Error::Io(_) | tricent::Error::Parse { .. }) => EXIT_IO,
            Some(tricent::Error::Internal(_)) => EXIT_INTERNAL,
            Some(_) => EXIT_USAGE,
            None if error.downcast_ref::<io::Error>().is_some() => EXIT_IO,
            None => EXIT_USAGE,
        };
        Failure { code, error }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

impl From<tricent::Error> for Failure {
    fn from(e: tricent::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn internal(error: anyhow::Error) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        error,
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if is_broken_pipe(&f.error) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("tc: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Compute {
            algo,
            threads,
            stats,
            format,
            input,
        } => {
            let g = load(&input)?;
            let start = Instant::now();
            let (tc, counters) = score(&g, algo, threads)?;
            let elapsed = start.elapsed();
            write_scores(out, &g, &tc, format)?;
            if stats {
                eprintln!("vertices\t{}", g.n());
                eprintln!("edges\t{}", g.m());
                eprintln!("triangles\t{}", tc.triangles.unwrap_or(0));
                eprintln!("time\t{:.6}s", elapsed.as_secs_f64());
                if let Some(counters) = counters {
                    eprint!("{}", work_report(&counters, &g));
                }
            }
            Ok(())
        }
        Command::Compare { k, input } => compare(out, &load(&input)?, k),
        Command::Mapreduce { input } => {
            let g = load(&input)?;
            let (tc, rounds) = run_mapreduce_tc(&g).map_err(|e| internal(e.into()))?;
            write_scores(out, &g, &tc, Format::Tsv)?;
            eprintln!("round\trecords_in\tmap_out\treduce_out\tbroadcast\tbits");
            for r in &rounds {
                eprintln!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.round, r.records_in, r.map_out, r.reduce_out, r.broadcast, r.bits
                );
            }
            let bound = g.m() as f64 * ((2 * g.m()) as f64).sqrt() * RECORD_WIDTH_BITS as f64;
            eprintln!("total_bits\t{}", total_bits(&rounds));
            eprintln!("m*sqrt(2m)*w\t{bound:.0}");
            Ok(())
        }
        Command::Gen {
            family,
            n,
            p,
            k,
            pendants,
            prob,
            seed,
        } => {
            let g = generate(family, n, p, k, pendants, prob, seed)?;
            write_edge_list(&g, out)?;
            Ok(())
        }
        Command::Bench { threads, files } => bench(out, &files, threads),
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let g = if path.as_os_str() == "-" {
        read_edge_list(io::stdin().lock()).context("reading standard input")?
    } else {
        let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
        read_edge_list(BufReader::new(file))
            .with_context(|| format!("reading {}", path.display()))?
    };
    Ok(g)
}

fn config(threads: Option<u32>) -> Result<ParallelConfig, Failure> {
    Ok(match threads {
        Some(t) => ParallelConfig::new(t as usize)?,
        None => ParallelConfig::default(),
    })
}

/// Scores with the chosen algorithm; the parallel path also returns its work counters.
fn score(
    g: &Graph,
    algo: Algo,
    threads: Option<u32>,
) -> Result<(CentralityVector, Option<WorkCounters>), Failure> {
    Ok(match algo {
        Algo::Main => (triangle_centrality(g), None),
        Algo::Basic => (triangle_centrality_basic(g), None),
        Algo::Algebraic => (triangle_centrality_algebraic(g), None),
        Algo::Parallel => {
            let (tc, counters) = parallel_triangle_centrality(g, &config(threads)?);
            (tc, Some(counters))
        }
        Algo::Mapreduce => (run_mapreduce_tc(g).map_err(|e| internal(e.into()))?.0, None),
    })
}

fn write_scores(out: &mut impl Write, g: &Graph, c: &CentralityVector, format: Format) -> Outcome {
    let r = rank_vertices(c, DEFAULT_TIE_EPS);
    match format {
        Format::Tsv => {
            for &v in &r.order {
                writeln!(out, "{}\t{:?}", g.label(v), c.scores[v])?;
            }
        }
        Format::Json => {
            let scores: Vec<_> = r
                .order
                .iter()
                .map(|&v| json!({"label": g.label(v), "score": c.scores[v], "rank": r.rank[v]}))
                .collect();
            let doc = json!({
                "method": c.method,
                "vertices": g.n(),
                "edges": g.m(),
                "triangles": c.triangles,
                "scores": scores,
            });
            serde_json::to_writer_pretty(&mut *out, &doc).context("writing JSON")?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn labels(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(",")
}

fn compare(out: &mut impl Write, g: &Graph, k: usize) -> Outcome {
    if k == 0 {
        return Err(anyhow!("--k must be at least 1").into());
    }
    let rankings: Vec<Ranking> = std::iter::once(triangle_centrality(g))
        .chain(classical_measures(g))
        .map(|c| rank_vertices(&c, DEFAULT_TIE_EPS))
        .collect();
    if g.n() == 0 {
        return Ok(());
    }
    let k = k.min(g.n());
    let leader = rankings[0].order[0];
    writeln!(out, "measure\ttop\trank_of_tc_leader\tjaccard_top{k}")?;
    for r in &rankings {
        let j = top_k_jaccard(&rankings[0], r, k)?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}/{}",
            r.method.name(),
            labels(g, r.top_group()),
            r.rank[leader],
            j.numer(),
            j.denom()
        )?;
    }
    if let Some(best) = best_jaccard_match(&rankings, 0, k)? {
        writeln!(out, "closest_to_tc\t{}", rankings[best].method.name())?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    n: Option<usize>,
    p: Option<usize>,
    k: Option<usize>,
    pendants: Option<usize>,
    prob: f64,
    seed: u64,
) -> Result<Graph, Failure> {
    let need = |x: Option<usize>, flag: &str| x.with_context(|| format!("--{flag} is required"));
    let fixture = |f: Fixture| Ok(f.graph());
    let built = match family {
        Family::Clique => fixtures::clique(need(n, "n")?)?,
        Family::Disjoint => fixtures::disjoint_cliques(need(p, "p")?, need(k, "k")?)?,
        Family::Bridge => fixtures::bridged_cliques(need(p, "p")?, need(k, "k")?)?,
        Family::Chain => fixtures::clique_chain(need(p, "p")?, need(k, "k")?)?,
        Family::Ring => fixtures::clique_ring(need(p, "p")?, need(k, "k")?)?,
        Family::Triangle => fixtures::single_triangle(pendants.unwrap_or(0)),
        Family::Random => {
            if !(0.0..=1.0).contains(&prob) {
                return Err(anyhow!("--prob must lie in [0, 1]").into());
            }
            return Ok(fixtures::erdos_renyi(need(n, "n")?, prob, seed));
        }
        Family::Fig1a => return fixture(Fixture::HubOfTriangles),
        Family::Fig1b => return fixture(Fixture::BridgedSixCliques),
        Family::Fig1c => return fixture(Fixture::StarAndTriangles),
        Family::Fig1d => return fixture(Fixture::CliqueWithBranches),
        Family::Fig3 => return fixture(Fixture::WorkedExample),
        Family::Borgatti => return fixture(Fixture::Borgatti),
        Family::Karate => return fixture(Fixture::Karate),
        Family::Dolphins => return fixture(Fixture::Dolphins),
        Family::Hijackers => return fixture(Fixture::Hijackers),
    };
    Ok(built.graph)
}

fn bench(out: &mut impl Write, files: &[PathBuf], threads: Option<u32>) -> Outcome {
    let algos = [
        ("main", Algo::Main),
        ("basic", Algo::Basic),
        ("algebraic", Algo::Algebraic),
        ("parallel", Algo::Parallel),
        ("mapreduce", Algo::Mapreduce),
    ];
    writeln!(out, "file\tvertices\tedges\talgorithm\ttriangles\tseconds")?;
    for path in files {
        let g = match load(path) {
            Ok(g) => g,
            Err(f) if f.code == EXIT_IO => {
                eprintln!("tc: skipping {}: {:#}", path.display(), f.error);
                continue;
            }
            Err(f) => return Err(f),
        };
        let mut reference: Option<Vec<f64>> = None;
        for (name, algo) in algos {
            let start = Instant::now();
            let (tc, _) = score(&g, algo, threads)?;
            let secs = start.elapsed().as_secs_f64();
            writeln!(
                out,
                "{}\t{}\t{}\t{name}\t{}\t{secs:.6}",
                path.display(),
                g.n(),
                g.m(),
                tc.triangles.unwrap_or(0)
            )?;
            match &reference {
                None => reference = Some(tc.scores),
                Some(r) => {
                    let diff = r
                        .iter()
                        .zip(&tc.scores)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max);
                    if diff > 1e-12 {
                        return Err(internal(anyhow!(
                            "{}: {name} scores differ from main by {diff}",
                            path.display()
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}
