//! `coremine` — core mining over multilayer, temporal, and signed edge
//! lists. One subcommand per task; every command writes line-delimited
//! records in a deterministic order, so equal invocations diff clean.
//!
//! Exit codes: 0 success, 1 usage, 2 data or parameter error, 3 resource
//! cap exceeded.

use std::fmt;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coremine::apps::{
    community_search, densest_subgraph, quasi_clique_enumerate, quasi_clique_prune,
    CommunityQuery, QuasiCliqueParams,
};
use coremine::multilayer::{
    collapse_distinct_sets, decompose_all, decompose_naive, filter_maximal, maximal_cores,
    MultilayerCore, DEFAULT_CORE_CAP,
};
use coremine::records;
use coremine::signed::{
    brute_force_polarity, default_max_iter, generate_planted, leading_eigenvector, polarity,
    round_deterministic, round_randomized, Assignment, PlantedParams, DEFAULT_TOL,
};
use coremine::synth::{random_multilayer, random_signed, random_temporal};
use coremine::temporal::{
    filter_maximal_spans, maximal_span_cores, span_cores_all, span_cores_naive, span_statistics,
    SpanCore,
};
use coremine::{
    parse_multilayer, parse_signed, parse_temporal, Error, LabelMap, MultilayerGraph, SignedGraph,
    TemporalGraph, VertexSet,
};

const FORMAT_HELP: &str = "\
Input formats (one edge per line, `#` comments, blank lines skipped):
  multilayer  `u v layer`   e.g.  alice bob friends
  temporal    `u v t`       e.g.  alice bob 3       (t a non-negative integer)
  signed      `u v sign`    e.g.  alice bob +1      (sign: +1, -1, + or -)

Examples:
  coremine ml-cores --input g.mlg --vertices
  coremine ml-maximal --input g.mlg --naive
  coremine ml-densest --input g.mlg --beta 1
  coremine ml-qc-prune --input g.mlg --gamma 0.8 --min-size 3 --min-sup 0.5 --enumerate
  coremine ml-community --input g.mlg --query alice --beta 1
  coremine span-cores --input g.tgs
  coremine span-maximal --input g.tgs
  coremine span-stats --input g.tgs
  coremine polarity --input g.sgn --algo rand --trials 32 --seed 7
  coremine gen-planted --n 100 --size1 15 --size2 15 --p-in 0.9 --p-out 0.9 --noise 0.01 --seed 1
  coremine gen-random --kind multilayer --n 30 --layers 3 --p 0.2 --seed 7

The COREMINE_THREADS environment variable sets the default worker count;
--threads overrides it. Output is identical for every thread count.";

#[derive(Parser)]
#[command(name = "coremine", version, about = "Core mining for multilayer, temporal, and signed graphs", after_long_help = FORMAT_HELP)]
struct Cli {
    /// Worker threads (default: COREMINE_THREADS, else all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Write records here instead of standard output
    #[arg(long, short, global = true)]
    output: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Edge-list file to read
    #[arg(long, short)]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// All non-empty multilayer cores, level-major then lexicographic
    MlCores {
        #[command(flatten)]
        input: InputArg,
        /// Use the per-vector reference route instead of the lattice walk
        #[arg(long)]
        naive: bool,
        /// Include vertex labels in each record
        #[arg(long)]
        vertices: bool,
        /// Abort after this many records
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
        /// Keep only maximal generating vectors per distinct vertex set
        #[arg(long)]
        distinct_sets: bool,
    },
    /// Multilayer cores with componentwise-maximal vectors
    MlMaximal {
        #[command(flatten)]
        input: InputArg,
        /// Filter the full reference decomposition instead of the search
        #[arg(long)]
        naive: bool,
        /// Include vertex labels in each record
        #[arg(long)]
        vertices: bool,
        /// Abort after this many records (naive route only)
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
    },
    /// Densest core under the layer trade-off delta_beta
    MlDensest {
        #[command(flatten)]
        input: InputArg,
        /// Layer trade-off exponent (0 = best single layer)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        /// Abort after visiting this many cores
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
    },
    /// Candidate vertices for frequent cross-layer quasi-cliques
    MlQcPrune {
        #[command(flatten)]
        input: InputArg,
        /// Required degree fraction inside the set, in (0, 1]
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        /// Smallest quasi-clique size of interest
        #[arg(long, default_value_t = 3)]
        min_size: u32,
        /// Fraction of layers that must qualify, in (0, 1]
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        min_sup: f64,
        /// Also enumerate the quasi-cliques inside the pruned set
        #[arg(long)]
        enumerate: bool,
    },
    /// Best community containing the query vertices
    MlCommunity {
        #[command(flatten)]
        input: InputArg,
        /// Query vertex labels (repeatable)
        #[arg(long, required = true, num_args = 1..)]
        query: Vec<String>,
        /// Layer trade-off exponent (0 = best single layer)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        /// Abort after visiting this many cores
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
    },
    /// All span-cores of a temporal graph, sorted by (ts, te, k)
    SpanCores {
        #[command(flatten)]
        input: InputArg,
        /// Decompose every interval from scratch instead of sweeping
        #[arg(long)]
        naive: bool,
        /// Abort after this many records
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
    },
    /// Span-cores maximal in both order and span
    SpanMaximal {
        #[command(flatten)]
        input: InputArg,
        /// Filter the full reference decomposition instead of the staircase
        #[arg(long)]
        naive: bool,
        /// Abort after this many records
        #[arg(long, default_value_t = DEFAULT_CORE_CAP)]
        cap: usize,
    },
    /// Span-length histogram and per-order maxima of the maximal span-cores
    SpanStats {
        #[command(flatten)]
        input: InputArg,
    },
    /// Two polarized communities in a signed graph
    Polarity {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Algo::Det)]
        algo: Algo,
        /// Randomized rounding attempts (rand only)
        #[arg(long, default_value_t = 32)]
        trials: usize,
        /// Base seed for the randomized trials
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Eigensolver residual tolerance
        #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
        tol: f64,
        /// Eigensolver iteration budget (default scales with the graph)
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Synthetic signed graph with two planted opposed camps
    GenPlanted {
        /// Total vertices, camps plus neutral background
        #[arg(long)]
        n: usize,
        /// Vertices in the positive camp
        #[arg(long)]
        size1: usize,
        /// Vertices in the negative camp
        #[arg(long)]
        size2: usize,
        /// Positive-edge probability inside each camp
        #[arg(long, allow_negative_numbers = true)]
        p_in: f64,
        /// Negative-edge probability between the camps
        #[arg(long, allow_negative_numbers = true)]
        p_out: f64,
        /// Random-sign edge probability on pairs touching neutral vertices
        #[arg(long, allow_negative_numbers = true)]
        noise: f64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Prepend the ground-truth assignment as comment lines
        #[arg(long)]
        truth: bool,
    },
    /// Erdős–Rényi multilayer, temporal, or signed graph
    GenRandom {
        /// Which graph flavor to emit
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Layers (multilayer) or timestamps (temporal); ignored for signed
        #[arg(long, default_value_t = 1)]
        layers: usize,
        /// Edge probability per pair (and per layer/timestamp)
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Prefix sweep of the leading eigenvector
    Det,
    /// Best of several randomized roundings
    Rand,
    /// Exhaustive optimum (small graphs only)
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Multilayer,
    Temporal,
    Signed,
}

/// Data errors exit 2, resource-cap errors exit 3.
enum Failure {
    Data(String),
    Resource(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Data(m) | Failure::Resource(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::GuardExceeded { .. } => {
                Failure::Resource(e.to_string())
            }
            _ => Failure::Data(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("cannot read {path}: {e}")))
}

fn load_multilayer(path: &str) -> Result<MultilayerGraph, Failure> {
    parse_multilayer(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn load_temporal(path: &str) -> Result<TemporalGraph, Failure> {
    parse_temporal(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn load_signed(path: &str) -> Result<SignedGraph, Failure> {
    parse_signed(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn resolve_query(labels: &LabelMap, query: &[String]) -> Result<VertexSet, Failure> {
    let mut ids = Vec::with_capacity(query.len());
    for label in query {
        match labels.get(label) {
            Some(id) => ids.push(id),
            None => {
                return Err(Failure::Data(
                    Error::UnknownVertex {
                        label: label.clone(),
                    }
                    .to_string(),
                ))
            }
        }
    }
    Ok(VertexSet::from_unsorted(ids))
}

fn core_lines(labels: &LabelMap, cores: &[MultilayerCore], vertices: bool) -> Vec<String> {
    cores
        .iter()
        .map(|c| records::to_line(&records::core_record(labels, c, vertices)))
        .collect()
}

fn span_lines(labels: &LabelMap, cores: &[SpanCore]) -> Vec<String> {
    cores
        .iter()
        .map(|c| records::to_line(&records::span_record(labels, c)))
        .collect()
}

fn run(command: Command) -> Result<Vec<String>, Failure> {
    match command {
        Command::MlCores {
            input,
            naive,
            vertices,
            cap,
            distinct_sets,
        } => {
            let g = load_multilayer(&input.input)?;
            let mut cores = if naive {
                decompose_naive(&g, cap)?
            } else {
                decompose_all(&g, cap)?
            };
            if distinct_sets {
                cores = collapse_distinct_sets(&cores);
            }
            Ok(core_lines(g.labels(), &cores, vertices))
        }
        Command::MlMaximal {
            input,
            naive,
            vertices,
            cap,
        } => {
            let g = load_multilayer(&input.input)?;
            let cores = if naive {
                filter_maximal(&decompose_naive(&g, cap)?)
            } else {
                maximal_cores(&g)
            };
            Ok(core_lines(g.labels(), &cores, vertices))
        }
        Command::MlDensest { input, beta, cap } => {
            let g = load_multilayer(&input.input)?;
            let res = densest_subgraph(&g, beta, cap)?;
            Ok(vec![records::to_line(&records::densest_record(
                g.labels(),
                g.layer_labels(),
                &res,
                beta,
            ))])
        }
        Command::MlQcPrune {
            input,
            gamma,
            min_size,
            min_sup,
            enumerate,
        } => {
            let g = load_multilayer(&input.input)?;
            let params = QuasiCliqueParams {
                gamma,
                min_size,
                min_sup,
            };
            let pruned = quasi_clique_prune(&g, &params)?;
            let mut lines = vec![records::to_line(&records::set_record(g.labels(), &pruned))];
            if enumerate {
                for s in quasi_clique_enumerate(&g, &params, &pruned)? {
                    lines.push(records::to_line(&records::set_record(g.labels(), &s)));
                }
            }
            Ok(lines)
        }
        Command::MlCommunity {
            input,
            query,
            beta,
            cap,
        } => {
            let g = load_multilayer(&input.input)?;
            let q = CommunityQuery {
                query: resolve_query(g.labels(), &query)?,
                beta,
            };
            let res = community_search(&g, &q, cap)?;
            Ok(vec![records::to_line(&records::community_record(
                g.labels(),
                g.layer_labels(),
                &res,
                beta,
            ))])
        }
        Command::SpanCores { input, naive, cap } => {
            let g = load_temporal(&input.input)?;
            let cores = if naive {
                span_cores_naive(&g, cap)?
            } else {
                span_cores_all(&g, cap)?
            };
            Ok(span_lines(g.labels(), &cores))
        }
        Command::SpanMaximal { input, naive, cap } => {
            let g = load_temporal(&input.input)?;
            let cores = if naive {
                filter_maximal_spans(&span_cores_naive(&g, cap)?)
            } else {
                maximal_span_cores(&g)
            };
            Ok(span_lines(g.labels(), &cores))
        }
        Command::SpanStats { input } => {
            let g = load_temporal(&input.input)?;
            let maximal = maximal_span_cores(&g);
            let stats = span_statistics(&maximal);
            Ok(vec![records::to_line(&records::span_stats_record(
                maximal.len(),
                &stats,
            ))])
        }
        Command::Polarity {
            input,
            algo,
            trials,
            seed,
            tol,
            max_iter,
        } => {
            let g = load_signed(&input.input)?;
            if algo == Algo::Brute {
                let part = brute_force_polarity(&g)?;
                return Ok(vec![records::to_line(&records::polarity_record(
                    g.labels(),
                    &part,
                    None,
                    None,
                ))]);
            }
            let budget = max_iter.unwrap_or_else(|| default_max_iter(g.vertex_count()));
            let spectral = leading_eigenvector(&g, tol, budget)?;
            let (part, used_seed) = match algo {
                Algo::Det => (round_deterministic(&g, &spectral)?, None),
                Algo::Rand => (round_randomized(&g, &spectral, trials, seed)?, Some(seed)),
                Algo::Brute => unreachable!(),
            };
            Ok(vec![records::to_line(&records::polarity_record(
                g.labels(),
                &part,
                Some(spectral.lambda1),
                used_seed,
            ))])
        }
        Command::GenPlanted {
            n,
            size1,
            size2,
            p_in,
            p_out,
            noise,
            seed,
            truth,
        } => {
            let (g, assignment) = generate_planted(&PlantedParams {
                n,
                size1,
                size2,
                p_in,
                p_out,
                noise,
                seed,
            })?;
            let mut lines = Vec::new();
            if truth {
                lines.extend(truth_comments(g.labels(), &assignment, &g));
            }
            lines.extend(g.write().lines().map(str::to_owned));
            Ok(lines)
        }
        Command::GenRandom {
            kind,
            n,
            layers,
            p,
            seed,
        } => {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                return Err(Failure::Data(format!(
                    "edge probability must lie in [0, 1], got {p}"
                )));
            }
            if n == 0 || layers == 0 {
                return Err(Failure::Data(
                    "n and layers must be at least 1".to_owned(),
                ));
            }
            let text = match kind {
                Kind::Multilayer => random_multilayer(n, layers, p, seed).write(),
                Kind::Temporal => random_temporal(n, layers, p, seed).write(),
                Kind::Signed => random_signed(n, p, seed).write(),
            };
            Ok(text.lines().map(str::to_owned).collect())
        }
    }
}

/// Ground truth as comment lines so the file stays parseable; the recovered
/// polarity is included for quick eyeballing.
fn truth_comments(labels: &LabelMap, truth: &Assignment, g: &SignedGraph) -> Vec<String> {
    let mut lines = vec!["# planted ground truth (vertex sign)".to_owned()];
    for (u, &s) in truth.as_slice().iter().enumerate() {
        if s != 0 {
            lines.push(format!("# truth {} {}", labels.label(u as u32), s));
        }
    }
    if truth.is_valid() {
        if let Ok(p) = polarity(g, truth) {
            lines.push(format!("# truth polarity {p}"));
        }
    }
    lines
}

fn write_lines(output: Option<&str>, lines: &[String]) -> Result<(), Failure> {
    let body = if lines.is_empty() {
        String::new()
    } else {
        format!("{}\n", lines.join("\n"))
    };
    match output {
        Some(path) => fs::write(path, body)
            .map_err(|e| Failure::Data(format!("cannot write {path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Data(format!("cannot write output: {e}")))
        }
    }
}

#[cfg(feature = "parallel")]
fn with_thread_budget<T: Send>(threads: Option<u64>, f: impl FnOnce() -> T + Send) -> T {
    let budget = threads.or_else(|| {
        std::env::var("COREMINE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
            .filter(|&n| n >= 1)
    });
    match budget {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_thread_budget<T>(_threads: Option<u64>, f: impl FnOnce() -> T) -> T {
    f()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match with_thread_budget(cli.threads, || run(cli.command)) {
        Ok(lines) => match write_lines(cli.output.as_deref(), &lines) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Failure::Data(_) => 2,
                Failure::Resource(_) => 3,
            })
        }
    }
}
