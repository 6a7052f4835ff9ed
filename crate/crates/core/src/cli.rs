//! The `burning` command line.
//!
//! Exit codes: 0 success, 1 a coverage check failed, 2 usage, parse or I/O
//! error, 3 instance too large for a cap or time budget.

use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::bounds_report;
use crate::construction::{plan, verify_plan_analytic, verify_plan_exhaustive};
use crate::error::Error;
use crate::graph::{
    exact_burning_number_with, verify_schedule, Burning, ExplicitGraph, SolverConfig,
};
use crate::hamming::{materialize, HammingParams, DEFAULT_MATERIALIZE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "burning",
    version,
    about = "Burning numbers of graphs and bounds for Hamming graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form bounds and exact certificates for H(n, q).
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Constant-word burning schedule for H(n, q), optionally verified.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        q: u32,
        #[arg(long, value_enum, default_value_t = VerifyMode::Analytic)]
        verify: VerifyMode,
        /// Vertex cap for exhaustive verification.
        #[arg(long, default_value_t = DEFAULT_MATERIALIZE_CAP)]
        cap: usize,
    },
    /// Exact burning number and a witness schedule.
    Exact {
        /// path:N | cycle:N | complete:N | hamming:N,Q | file:PATH
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        limit: Option<usize>,
        /// Run the search on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a graph in edge-list format.
    Export {
        #[arg(long)]
        graph: GraphSpec,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    None,
    Analytic,
    Exhaustive,
}

/// One-token graph description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Hamming(u32, u32),
    File(String),
}

fn parse_number<T: FromStr>(text: &str, column: usize) -> Result<T, Error> {
    text.parse().map_err(|_| Error::Parse {
        line: 1,
        column,
        message: format!("`{text}` is not a valid number"),
    })
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self, Error> {
        let (kind, arg) = spec.split_once(':').ok_or(Error::Parse {
            line: 1,
            column: spec.len() + 1,
            message: "expected `kind:argument`".into(),
        })?;
        let col = kind.len() + 2;
        match kind {
            "path" => Ok(GraphSpec::Path(parse_number(arg, col)?)),
            "cycle" => Ok(GraphSpec::Cycle(parse_number(arg, col)?)),
            "complete" => Ok(GraphSpec::Complete(parse_number(arg, col)?)),
            "hamming" => {
                let (n, q) = arg.split_once(',').ok_or(Error::Parse {
                    line: 1,
                    column: col + arg.len(),
                    message: "expected `hamming:N,Q`".into(),
                })?;
                Ok(GraphSpec::Hamming(
                    parse_number(n, col)?,
                    parse_number(q, col + n.len() + 1)?,
                ))
            }
            "file" if !arg.is_empty() => Ok(GraphSpec::File(arg.to_string())),
            "file" => Err(Error::Parse {
                line: 1,
                column: col,
                message: "missing file path".into(),
            }),
            _ => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown graph kind `{kind}`"),
            }),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<ExplicitGraph, Error> {
        match self {
            GraphSpec::Path(n) => Ok(ExplicitGraph::path(*n)),
            GraphSpec::Cycle(n) => Ok(ExplicitGraph::cycle(*n)),
            GraphSpec::Complete(n) => Ok(ExplicitGraph::complete(*n)),
            GraphSpec::Hamming(n, q) => {
                materialize(HammingParams::new(*n, *q)?, DEFAULT_MATERIALIZE_CAP)
            }
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                ExplicitGraph::parse_edge_list(&text)
            }
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Input(_) | Error::Parse { .. } | Error::Io { .. } => EXIT_USAGE,
        Error::Resource(_) | Error::Budget(_) => EXIT_RESOURCE,
    }
}

#[derive(Serialize)]
struct ConstructOutput<'a> {
    plan: crate::construction::PlanJson<'a>,
    verify: VerifyMode,
    /// Unburned word count, as a decimal string.
    uncovered: Option<String>,
    covered: Option<bool>,
}

#[derive(Serialize)]
struct ExactOutput<'a> {
    graph: &'a str,
    vertices: usize,
    burning_number: Option<usize>,
    exceeds_limit: Option<usize>,
    witness: Option<&'a [usize]>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("output types serialize");
    writeln!(out, "{text}").map_err(|e| Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    })
}

fn write_text(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    })
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Bounds { n, q, json } => {
            let report = bounds_report(*n, *q)?;
            if *json {
                json_line(out, &report)?;
            } else {
                let mut text = format!("H({n}, {q}), p = {}\n", report.p);
                if let Some(exact) = report.alon_exact {
                    text.push_str(&format!("  exact (hypercube)   {exact}\n"));
                }
                text.push_str(&format!("  upper bound         {}\n", report.upper));
                text.push_str(&format!(
                    "  lower bound         {} (beta > {:.4})\n",
                    report.lower_int, report.lower_real
                ));
                let b_star = report.b_star.map_or("-".into(), |b| b.to_string());
                text.push_str(&format!("  b*                  {b_star}\n"));
                text.push_str(&format!(
                    "  volume certificate  {}\n",
                    if report.volume_certificate_ok {
                        "ok"
                    } else {
                        "fails"
                    }
                ));
                let tail = match report.tail_le_inv_n {
                    Some(true) => "ok",
                    Some(false) => "fails",
                    None => "n/a",
                };
                text.push_str(&format!("  tail <= 1/n         {tail}\n"));
                write_text(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct { n, q, verify, cap } => {
            let params = HammingParams::new(*n, *q)?;
            let plan = plan(params);
            let (uncovered, covered) = match verify {
                VerifyMode::None => (None, None),
                VerifyMode::Analytic => {
                    let missed = verify_plan_analytic(&plan);
                    let ok = missed == num_bigint::BigUint::from(0u32);
                    (Some(missed.to_string()), Some(ok))
                }
                VerifyMode::Exhaustive => {
                    let ok = verify_plan_exhaustive(&plan, *cap)?;
                    let graph = materialize(params, *cap)?;
                    let missed = if ok {
                        0
                    } else {
                        uncovered_vertices(&graph, &plan)?
                    };
                    (Some(missed.to_string()), Some(ok))
                }
            };
            json_line(
                out,
                &ConstructOutput {
                    plan: plan.to_json(),
                    verify: *verify,
                    uncovered,
                    covered,
                },
            )?;
            Ok(if covered == Some(false) {
                EXIT_FALSIFIED
            } else {
                EXIT_OK
            })
        }
        Command::Exact {
            graph,
            limit,
            sequential,
            json,
        } => {
            let g = graph.build()?;
            let config = SolverConfig {
                parallel: !sequential,
                ..SolverConfig::default()
            };
            let result = exact_burning_number_with(&g, *limit, &config)?;
            let name = spec_label(graph);
            let output = match &result {
                Burning::Exact { number, witness } => {
                    if !verify_schedule(&g, witness)?.covers() {
                        return Ok(EXIT_FALSIFIED);
                    }
                    ExactOutput {
                        graph: &name,
                        vertices: g.vertex_count(),
                        burning_number: Some(*number),
                        exceeds_limit: None,
                        witness: Some(witness.sources()),
                    }
                }
                Burning::ExceedsLimit { limit } => ExactOutput {
                    graph: &name,
                    vertices: g.vertex_count(),
                    burning_number: None,
                    exceeds_limit: Some(*limit),
                    witness: None,
                },
            };
            if *json {
                json_line(out, &output)?;
            } else {
                let text = match &result {
                    Burning::Exact { number, witness } => format!(
                        "graph: {name} ({} vertices)\nburning number: {number}\nwitness: {witness}\n",
                        g.vertex_count()
                    ),
                    Burning::ExceedsLimit { limit } => format!(
                        "graph: {name} ({} vertices)\nburning number exceeds {limit}\n",
                        g.vertex_count()
                    ),
                };
                write_text(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Export { graph } => {
            write_text(out, &graph.build()?.to_edge_list())?;
            Ok(EXIT_OK)
        }
    }
}

fn uncovered_vertices(
    graph: &ExplicitGraph,
    plan: &crate::construction::ConstructionPlan,
) -> Result<usize, Error> {
    let sources = plan
        .sources()
        .iter()
        .map(|w| w.encode(plan.params.q))
        .collect();
    let schedule = crate::graph::BurningSchedule::new(sources)?;
    Ok(verify_schedule(graph, &schedule)?.uncovered_count())
}

fn spec_label(spec: &GraphSpec) -> String {
    match spec {
        GraphSpec::Path(n) => format!("path:{n}"),
        GraphSpec::Cycle(n) => format!("cycle:{n}"),
        GraphSpec::Complete(n) => format!("complete:{n}"),
        GraphSpec::Hamming(n, q) => format!("hamming:{n},{q}"),
        GraphSpec::File(p) => format!("file:{p}"),
    }
}
