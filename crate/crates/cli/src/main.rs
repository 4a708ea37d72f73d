//! Command-line frontend: constructors, measurements, and verification
//! harnesses for scripts and CI.
//!
//! Exit codes: 0 success or confirmation, 1 verification found violations,
//! 2 usage or format errors.

mod lang;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lang::{parse_family, FamilyParams};
use spectough::enumerate::{enumerate_each, EnumerateOpts};
use spectough::graph6::Graph6Reader;
use spectough::partitions::{coarsest_equitable, quotient, Partition};
use spectough::spectral::{eig_max_small, eigen_report};
use spectough::structure::{
    hamiltonian_cycle, hamiltonian_cycle_through, is_hamiltonian_connected, toughness_with_cap,
    TOUGHNESS_DEFAULT_CAP,
};
use spectough::verify::{
    sample_dense_stream, verify_brouwer_gu, verify_cycle_lemmas, verify_lemma_2_2,
    verify_spectral_bounds, verify_thm_1_1, verify_thm_1_2, verify_thm_1_3, VerificationReport,
};
use spectough::{write_graph6, Graph, Result};
use std::io::{BufRead, BufReader, Write};

#[derive(Parser)]
#[command(
    name = "spectough",
    about = "Spectral radius, toughness, and hamiltonicity toolkit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Inline family: join:/union: over K<n> and <k>K<n>, or a named family
    /// (complete, mgraph, kplus3, extremal-1tough, extremal-ttough,
    /// not-ttough, split, lemma36) with its parameter flags.
    #[arg(long)]
    family: Option<String>,
    /// Read graph6 lines from this file ("-" for standard input). With no
    /// family and no stream, standard input is read.
    #[arg(long)]
    stream: Option<String>,
    /// Family parameter: vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter: minimum degree.
    #[arg(long)]
    delta: Option<usize>,
    /// Family parameter: toughness target.
    #[arg(long)]
    t: Option<usize>,
    /// Family parameter: component count.
    #[arg(long)]
    c: Option<usize>,
    /// Family parameter: join block size.
    #[arg(long)]
    s: Option<usize>,
    /// Family parameter: comma-separated clique part sizes, nonincreasing.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
}

impl InputArgs {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            n: self.n,
            delta: self.delta,
            t: self.t,
            c: self.c,
            s: self.s,
            parts: self.parts.clone(),
        }
    }

    /// Resolve to a list of graphs (single constructed family or a graph6
    /// stream read eagerly).
    fn graphs(&self) -> std::result::Result<Vec<Graph>, CliError> {
        if let Some(expr) = &self.family {
            if self.stream.is_some() {
                return Err(CliError::usage("give either --family or --stream, not both"));
            }
            let g = parse_family(expr, &self.params()).map_err(CliError::usage)?;
            return Ok(vec![g]);
        }
        let reader: Box<dyn BufRead> = match self.stream.as_deref() {
            Some("-") | None => Box::new(BufReader::new(std::io::stdin())),
            Some(path) => Box::new(BufReader::new(
                std::fs::File::open(path).map_err(|e| CliError::usage(format!("{path}: {e}")))?,
            )),
        };
        Graph6Reader::new(reader)
            .collect::<Result<Vec<_>>>()
            .map_err(CliError::format)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Tsv,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family or inline expression and print it as graph6.
    Construct {
        #[command(flatten)]
        input: InputArgs,
        /// Output form (graph6 is the only supported value).
        #[arg(long, default_value = "graph6")]
        out: String,
    },
    /// Print spectral data: rho, lambda2, lambdaN, lambda.
    Spectral {
        #[command(flatten)]
        input: InputArgs,
        /// Decimal places for numeric output.
        #[arg(long, default_value_t = 5)]
        precision: usize,
    },
    /// Exact toughness with a witnessing cut set.
    Toughness {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex-count cap for the exponential enumeration.
        #[arg(long, default_value_t = TOUGHNESS_DEFAULT_CAP)]
        cap: usize,
    },
    /// Hamiltonian cycle search, optionally through forced edges.
    Hamilton {
        #[command(flatten)]
        input: InputArgs,
        /// Forced edges as "u-v,u-v".
        #[arg(long)]
        through: Option<String>,
        /// Decide hamiltonian-connectivity instead of a single cycle.
        #[arg(long)]
        connected: bool,
    },
    /// Quotient matrix of a partition (coarsest equitable by default).
    Quotient {
        #[command(flatten)]
        input: InputArgs,
        /// Explicit partition as "0,1|2,3|4".
        #[arg(long)]
        partition: Option<String>,
    },
    /// Run a verification harness.
    Verify {
        /// Claim: thm1.1, thm1.2, thm1.3, lemma2.2, bounds, brouwer-gu,
        /// cycles.
        claim: String,
        #[command(flatten)]
        input: InputArgs,
        /// Sample this many dense random graphs instead of reading a stream
        /// (requires --n).
        #[arg(long)]
        random: Option<usize>,
        /// Trial count for sampled claims (lemma2.2, cycles).
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// RNG seed for sampled runs.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads for stream processing.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all graphs on n vertices up to isomorphism as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        /// Keep only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Keep only graphs with this minimum degree or more.
        #[arg(long)]
        mindeg: Option<usize>,
        /// Prune graphs with any degree above this.
        #[arg(long)]
        maxdeg: Option<usize>,
        /// Shorthand for --mindeg D --maxdeg D.
        #[arg(long)]
        regular: Option<usize>,
    },
}

struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn format(err: spectough::Error) -> CliError {
        CliError {
            message: err.to_string(),
            code: 2,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

fn run(cli: Cli) -> std::result::Result<i32, CliError> {
    match cli.command {
        Command::Construct { input, out } => {
            if out != "graph6" {
                return Err(CliError::usage(format!("unsupported --out '{out}'")));
            }
            for g in input.graphs()? {
                println!("{}", write_graph6(&g).map_err(CliError::format)?);
            }
            Ok(0)
        }
        Command::Spectral { input, precision } => {
            for g in input.graphs()? {
                let report = eigen_report(&g).map_err(CliError::format)?;
                let p = precision;
                let lambda2 = report
                    .lambda2()
                    .map(|x| format!("{x:.p$}"))
                    .unwrap_or_else(|| "-".into());
                let lambda = report
                    .lambda_abs()
                    .map(|x| format!("{x:.p$}"))
                    .unwrap_or_else(|| "-".into());
                println!(
                    "n={} m={} rho={:.p$} lambda2={} lambdaN={:.p$} lambda={}",
                    g.n(),
                    g.edge_count(),
                    report.rho(),
                    lambda2,
                    report.lambda_min(),
                    lambda,
                );
            }
            Ok(0)
        }
        Command::Toughness { input, cap } => {
            for g in input.graphs()? {
                let cert = toughness_with_cap(&g, cap).map_err(CliError::format)?;
                let witness = cert
                    .witness
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "toughness={} witness={} components={}",
                    cert.value, witness, cert.components
                );
            }
            Ok(0)
        }
        Command::Hamilton {
            input,
            through,
            connected,
        } => {
            let forced = match &through {
                None => Vec::new(),
                Some(spec) => parse_edge_list(spec).map_err(CliError::usage)?,
            };
            for g in input.graphs()? {
                if connected {
                    println!("hamiltonian-connected={}", is_hamiltonian_connected(&g));
                    continue;
                }
                let cycle = if forced.is_empty() {
                    hamiltonian_cycle(&g)
                } else {
                    hamiltonian_cycle_through(&g, &forced)
                }
                .map_err(CliError::format)?;
                match cycle {
                    Some(c) => println!(
                        "cycle={}",
                        c.vertices
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    None => println!("none"),
                }
            }
            Ok(0)
        }
        Command::Quotient { input, partition } => {
            for g in input.graphs()? {
                let pi = match &partition {
                    Some(spec) => parse_partition(spec).map_err(CliError::usage)?,
                    None => coarsest_equitable(&g),
                };
                let q = quotient(&g, &pi).map_err(CliError::format)?;
                let cells = pi
                    .cells()
                    .iter()
                    .map(|c| {
                        c.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect::<Vec<_>>()
                    .join("|");
                println!("cells={cells}");
                for row in q.matrix().rows() {
                    println!(
                        "row={}",
                        row.iter()
                            .map(|x| format!("{x}"))
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                }
                println!("equitable={}", q.is_equitable());
                let dominant = eig_max_small(q.matrix()).map_err(CliError::format)?;
                println!("eig_max={dominant:.5}");
            }
            Ok(0)
        }
        Command::Verify {
            claim,
            input,
            random,
            trials,
            seed,
            jobs,
            format,
        } => {
            let report = run_verify(&claim, &input, random, trials, seed, jobs)?;
            emit_report(&report, format);
            Ok(report.exit_code())
        }
        Command::Gen {
            n,
            connected,
            mindeg,
            maxdeg,
            regular,
        } => {
            let mut opts = EnumerateOpts::all(n);
            opts.connected = connected;
            opts.min_degree = regular.or(mindeg);
            opts.max_degree = regular.or(maxdeg);
            if n > spectough::enumerate::MAX_ENUM_N {
                return Err(CliError::usage(format!(
                    "gen supports n <= {}",
                    spectough::enumerate::MAX_ENUM_N
                )));
            }
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            enumerate_each(opts, |view| {
                let g = view.to_graph();
                let line = write_graph6(&g).expect("enumeration stays below graph6 cap");
                writeln!(out, "{line}").expect("stdout");
            });
            Ok(0)
        }
    }
}

fn run_verify(
    claim: &str,
    input: &InputArgs,
    random: Option<usize>,
    trials: usize,
    seed: u64,
    jobs: usize,
) -> std::result::Result<VerificationReport, CliError> {
    // sampled claims first: they generate their own instances
    match claim {
        "lemma2.2" => return Ok(verify_lemma_2_2(trials, seed)),
        "cycles" => return Ok(verify_cycle_lemmas(trials, seed)),
        _ => {}
    }
    let run_with = |stream: Box<dyn Iterator<Item = Result<Graph>>>| match claim {
        "thm1.1" => {
            let delta = input
                .delta
                .ok_or_else(|| CliError::usage("thm1.1 requires --delta"))?;
            verify_thm_1_1(stream, delta, jobs).map_err(CliError::format)
        }
        "thm1.2" => verify_thm_1_2(stream, jobs).map_err(CliError::format),
        "thm1.3" => {
            let t = input
                .t
                .ok_or_else(|| CliError::usage("thm1.3 requires --t"))?;
            verify_thm_1_3(stream, t, jobs).map_err(CliError::format)
        }
        "bounds" => verify_spectral_bounds(stream, jobs).map_err(CliError::format),
        "brouwer-gu" => verify_brouwer_gu(stream, jobs).map_err(CliError::format),
        other => Err(CliError::usage(format!("unknown claim '{other}'"))),
    };
    if let Some(count) = random {
        let n = input
            .n
            .ok_or_else(|| CliError::usage("--random requires --n"))?;
        return run_with(Box::new(sample_dense_stream(n, count, seed)));
    }
    if let Some(expr) = &input.family {
        let g = parse_family(expr, &input.params()).map_err(CliError::usage)?;
        return run_with(Box::new(std::iter::once(Ok(g))));
    }
    let reader: Box<dyn BufRead> = match input.stream.as_deref() {
        Some("-") | None => Box::new(BufReader::new(std::io::stdin())),
        Some(path) => Box::new(BufReader::new(
            std::fs::File::open(path).map_err(|e| CliError::usage(format!("{path}: {e}")))?,
        )),
    };
    run_with(Box::new(Graph6Reader::new(reader)))
}

fn emit_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Text => println!("{report}"),
        Format::Tsv => {
            for rec in report.records() {
                println!("{}", rec.tsv_line());
            }
            eprintln!("{report}");
        }
        Format::JsonLines => {
            for rec in report.records() {
                println!("{}", serde_json::to_string(rec).expect("serializable"));
            }
            let summary = serde_json::json!({
                "claim": report.claim,
                "examined": report.graphs_examined,
                "hypothesis_satisfying": report.hypothesis_satisfying,
                "tested": report.tested_above_threshold,
                "confirmations": report.confirmations,
                "equality": report.equality_cases.len(),
                "ambiguous": report.ambiguous.len(),
                "violations": report.violations.len(),
                "vacuous": report.vacuous,
            });
            println!("{summary}");
        }
    }
}

/// "u-v,u-v" edge list.
fn parse_edge_list(spec: &str) -> std::result::Result<Vec<(usize, usize)>, String> {
    spec.split(',')
        .map(|tok| {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| format!("bad edge '{tok}': expected u-v"))?;
            let u = a
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex '{a}' in edge '{tok}'"))?;
            let v = b
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex '{b}' in edge '{tok}'"))?;
            Ok((u, v))
        })
        .collect()
}

/// "0,1|2,3|4" partition cells.
fn parse_partition(spec: &str) -> std::result::Result<Partition, String> {
    let cells: std::result::Result<Vec<Vec<usize>>, String> = spec
        .split('|')
        .map(|cell| {
            cell.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad vertex '{tok}' in partition"))
                })
                .collect()
        })
        .collect();
    Partition::new(cells?).map_err(|e| e.to_string())
}
