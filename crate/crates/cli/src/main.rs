//! `signless` — spectra, bounds, enumeration, verification, audits and
//! extremal search over small graphs, with machine-readable output.
//!
//! Exit codes: 0 success (and no violations), 1 bound violations found,
//! 2 usage or input errors.

use std::io::{BufRead, Write};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use signless::spectral::{eigen_sym, signless_laplacian};
use signless::{
    audit_proof, check_graph, extremal_slack, from_graph6, verify_bound, BoundKind, EnumSpec,
    Error, Graph,
};

#[derive(Parser)]
#[command(
    name = "signless",
    version,
    about = "Signless Laplacian spectra and bounds over small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signless Laplacian spectrum of a graph
    Spectrum {
        /// graph6 string, or `-` to read newline-delimited graph6 from stdin
        graph6: String,
        /// Include the orthonormal eigenvectors in the output
        #[arg(long)]
        vectors: bool,
        /// Relative eigensolver tolerance
        #[arg(long, default_value_t = signless::DEFAULT_EIGEN_TOL)]
        tol: f64,
    },
    /// Evaluate every bound of the toolkit on a graph
    Bounds {
        /// graph6 string, or `-` to read newline-delimited graph6 from stdin
        graph6: String,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Exhaustively verify a bound over all isomorphism classes
    Verify {
        #[arg(long, value_enum)]
        bound: BoundArg,
        /// Vertex count or inclusive range, e.g. `7` or `6..9`
        #[arg(long, value_parser = parse_order_range)]
        n: OrderRange,
        /// Restrict to connected graphs
        #[arg(long)]
        connected: bool,
        /// Absolute slack tolerance: slack below -tol is a violation
        #[arg(long, default_value_t = signless::DEFAULT_SLACK_TOL)]
        tol: f64,
        #[arg(long)]
        m_min: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        /// Worker count; summaries are identical for any value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Audit the inequality chain on the critical regime m >= (n-1)(n-2)/2 + 1
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = signless::DEFAULT_SLACK_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Stream one graph6 representative per isomorphism class
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        m_min: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        /// Print only the class count
        #[arg(long)]
        count_only: bool,
    },
    /// Minimum-slack witness among connected classes with exactly m edges
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        bound: BoundArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Theorem,
    Conjecture,
}

impl From<BoundArg> for BoundKind {
    fn from(b: BoundArg) -> BoundKind {
        match b {
            BoundArg::Theorem => BoundKind::Theorem,
            BoundArg::Conjecture => BoundKind::Conjecture,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum OutFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
struct OrderRange {
    lo: usize,
    hi: usize,
}

fn parse_order_range(s: &str) -> Result<OrderRange, String> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("bad vertex count `{t}`"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => OrderRange {
            lo: parse(a)?,
            hi: parse(b.trim_start_matches('='))?,
        },
        None => {
            let n = parse(s)?;
            OrderRange { lo: n, hi: n }
        }
    };
    if range.lo > range.hi {
        return Err("empty range".into());
    }
    Ok(range)
}

/// Envelope every JSON document is wrapped in. All volatile data lives in
/// the `timestamp` field, so identical inputs produce byte-identical output
/// apart from it.
#[derive(Serialize)]
struct OutputRecord<'a, T: Serialize> {
    command: &'a str,
    params: serde_json::Value,
    version: &'a str,
    timestamp: Timestamp,
    result: T,
}

#[derive(Serialize)]
struct Timestamp {
    unix_ms: u128,
    elapsed_s: f64,
}

fn emit<T: Serialize>(command: &str, params: serde_json::Value, started: Instant, result: T) {
    let record = OutputRecord {
        command,
        params,
        version: env!("CARGO_PKG_VERSION"),
        timestamp: Timestamp {
            unix_ms: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_millis())
                .unwrap_or(0),
            elapsed_s: started.elapsed().as_secs_f64(),
        },
        result,
    };
    print_line(&serde_json::to_string(&record).expect("serializable record"));
}

/// Write one line to stdout; when a downstream consumer closes the pipe,
/// stop quietly instead of panicking.
fn print_line(line: &str) {
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    if let Err(e) = writeln!(w, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("signless: error: {e}");
        std::process::exit(2);
    }
}

fn fail(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("signless: error: {err}");
    ExitCode::from(2)
}

/// Resolve a graph6 argument: either inline or `-` for stdin lines.
fn input_graphs(arg: &str) -> Result<Vec<(String, Graph)>, Error> {
    if arg == "-" {
        let stdin = std::io::stdin();
        let mut graphs = Vec::new();
        for line in stdin.lock().lines() {
            let line = line.map_err(|_| Error::InvalidInput("could not read stdin"))?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            graphs.push((text.to_owned(), from_graph6(text)?));
        }
        Ok(graphs)
    } else {
        Ok(vec![(arg.to_owned(), from_graph6(arg)?)])
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => fail(err),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Spectrum {
            graph6,
            vectors,
            tol,
        } => {
            let started = Instant::now();
            for (text, graph) in input_graphs(&graph6)? {
                let spectrum = eigen_sym(&signless_laplacian::<f64>(&graph), tol)?;
                let spectrum = if vectors {
                    spectrum
                } else {
                    spectrum.without_vectors()
                };
                emit(
                    "spectrum",
                    json!({ "graph6": text, "vectors": vectors, "tol": tol }),
                    started,
                    spectrum,
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { graph6, out } => {
            let started = Instant::now();
            let inputs = input_graphs(&graph6)?;
            match out {
                OutFormat::Json => {
                    for (text, graph) in inputs {
                        let report = check_graph(&graph, signless::DEFAULT_EIGEN_TOL)?;
                        emit("bounds", json!({ "graph6": text }), started, report);
                    }
                }
                OutFormat::Csv => {
                    print_line(
                        "graph6,n,m,r,k,qn,q1,conj_bound,conj_slack,thm_bound,thm_slack,\
                         merris_upper,full_degree_lower,near_full_applicable,near_full_lower,complete_graph",
                    );
                    for (text, graph) in inputs {
                        let b = check_graph(&graph, signless::DEFAULT_EIGEN_TOL)?;
                        print_line(&format!(
                            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                            text,
                            b.n,
                            b.m,
                            b.r,
                            b.k,
                            b.qn,
                            b.q1,
                            b.conj_bound,
                            b.conj_slack,
                            b.thm_bound,
                            b.thm_slack,
                            b.merris_upper,
                            b.full_degree_lower,
                            b.near_full_applicable,
                            b.near_full_lower.map(|v| v.to_string()).unwrap_or_default(),
                            b.complete_graph,
                        ));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            bound,
            n,
            connected,
            tol,
            m_min,
            m_max,
            jobs,
            out,
        } => {
            let kind: BoundKind = bound.into();
            let started = Instant::now();
            let mut any_violation = false;
            if matches!(out, OutFormat::Csv) {
                print_line("n,graph6,qn,bound,slack");
            }
            for order in n.lo..=n.hi {
                let spec = EnumSpec::new(order, connected).with_edge_window(m_min, m_max);
                let run = verify_bound(&spec, kind, tol, jobs)?;
                any_violation |= !run.violations.is_empty();
                match out {
                    OutFormat::Json => emit(
                        "verify",
                        json!({
                            "bound": kind.as_str(),
                            "n": order,
                            "connected": connected,
                            "tol": tol,
                            "m_min": m_min,
                            "m_max": m_max,
                            "jobs": jobs,
                        }),
                        started,
                        &run,
                    ),
                    OutFormat::Csv => {
                        for v in &run.violations {
                            print_line(&format!(
                                "{},{},{},{},{}",
                                order, v.graph6, v.qn, v.bound, v.slack
                            ));
                        }
                    }
                }
            }
            Ok(if any_violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Audit { n, tol, out } => {
            let started = Instant::now();
            let audits = audit_proof(n, tol)?;
            match out {
                OutFormat::Json => {
                    emit(
                        "audit",
                        json!({ "n": n, "tol": tol }),
                        started,
                        json!({ "n": n, "audits": audits }),
                    );
                }
                OutFormat::Csv => {
                    print_line("graph6,r,k,check,lhs,rhs,passed");
                    for audit in &audits {
                        for c in &audit.checks {
                            print_line(&format!(
                                "{},{},{},{},{},{},{}",
                                audit.graph6, audit.r, audit.k, c.id, c.lhs, c.rhs, c.passed
                            ));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            connected,
            m_min,
            m_max,
            count_only,
        } => {
            let spec = EnumSpec::new(n, connected).with_edge_window(m_min, m_max);
            let count = if count_only {
                signless::enumerate_graphs(&spec, |_| {})?
            } else {
                signless::enumerate_graphs(&spec, |g| {
                    let line = signless::to_graph6(g).expect("n <= 10 encodes");
                    print_line(&line);
                })?
            };
            if count_only {
                print_line(&count.to_string());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal { n, m, bound } => {
            let kind: BoundKind = bound.into();
            let started = Instant::now();
            let (min_slack, witness) = extremal_slack(n, m, kind)?;
            emit(
                "extremal",
                json!({ "n": n, "m": m, "bound": kind.as_str() }),
                started,
                json!({ "n": n, "m": m, "bound": kind.as_str(), "min_slack": min_slack, "witness_graph6": witness }),
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
