//! The `monopos` command line.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use monopos::families::{generate, predict_for_spec, FamilySpec, PredictedValue};
use monopos::io::{emit_graph6, parse_graph_text};
use monopos::paths::{all_intervals_with_budget, enumerate_induced_paths, monophonic_hull, InducedPathQuery, PathAggregate, QueryMode, DEFAULT_BUDGET};
use monopos::position::{
    brute_force_position, compute_parameter, parameter_suite, Outcome, Parameter, ParameterReport, PathMode, SolverOptions,
    DEFAULT_NODE_LIMIT,
};
use monopos::reduction::{reduce_clique_to_mp, verify_reduction};
use monopos::{Error, Graph, VertexSet};
use serde::Serialize;

use crate::checks::manifest;
use crate::report::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECKS_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "monopos", version, about = "Exact monophonic and general position computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SolveArgs {
    /// Path mode for position parameters: mono, geo or geo2.
    #[arg(long, default_value = "mono")]
    pub mode: PathMode,

    /// Require the position set to be independent.
    #[arg(long)]
    pub independent: bool,

    /// Refuse graphs with more vertices than this.
    #[arg(long)]
    pub cap: Option<usize>,

    /// Branch-and-bound node limit.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute parameters of a graph (graph6 or edge list; '-' for stdin).
    Compute {
        input: PathBuf,
        /// Parameters to compute (comma separated), or 'all'. Defaults to the
        /// position parameter selected by --mode and --independent.
        #[arg(long = "param", value_delimiter = ',')]
        params: Vec<String>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Generate a family member and print it with its predicted values.
    Family {
        /// Family spec, e.g. "half_wheel:4" or "random_tree:10:seed=3".
        spec: String,
        /// Seed for random families when the spec has none.
        #[arg(long)]
        seed: Option<u64>,
        /// Also write <name>.g6 and <name>.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// Check ids to run (repeatable); all checks when omitted.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Suite seeds (repeatable).
        #[arg(long = "seed")]
        seeds: Vec<u64>,
        /// Write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Zero the timing fields so reports compare byte for byte.
        #[arg(long)]
        no_timing: bool,
        /// List the check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Build the clique-to-position reduction for (G, k) and verify it.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Write the product graph as graph6 to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Brute-force position number by subset enumeration.
    Oracle {
        input: PathBuf,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Monophonic intervals, induced-path counts and hulls.
    Paths {
        input: PathBuf,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        /// Comma separated vertex set whose monophonic hull is printed.
        #[arg(long, value_delimiter = ',')]
        hull: Option<Vec<usize>>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_BAD_INPUT,
            CliError::Limit(_) => EXIT_LIMIT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Limit(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            CliError::Limit(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|e| io_err(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    }
    Ok(parse_graph_text(&text)?)
}

fn check_cap(g: &Graph, cap: Option<usize>) -> Result<(), CliError> {
    match cap {
        Some(cap) if g.order() > cap => Err(Error::CapExceeded {
            what: "--cap",
            order: g.order(),
            cap,
        }
        .into()),
        _ => Ok(()),
    }
}

fn options(s: &SolveArgs) -> SolverOptions {
    SolverOptions {
        require_independent: s.independent,
        node_limit: s.node_limit,
        ..SolverOptions::default()
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn report_line(r: &ParameterReport) -> String {
    format!(
        "{} = {}  witness {:?}  ({:?}, {} expansions, {:.1} ms)\n",
        r.parameter, r.value, r.witness, r.method, r.expansions, r.ms
    )
}

/// Runs a parsed command, writing results to `out`. Returns the exit code
/// for completed runs (0, or 1 when verification fails).
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match cli.command {
        Command::Compute { input, params, solve } => {
            let g = read_graph(&input)?;
            check_cap(&g, solve.cap)?;
            let opts = options(&solve);
            if params.iter().any(|p| p == "all") {
                let suite = parameter_suite(&g, &opts)?;
                match cli.format {
                    Format::Json => json(&suite),
                    Format::Text => suite
                        .values()
                        .zip(suite.keys())
                        .map(|(o, p)| match o {
                            Outcome::Value(r) => report_line(r),
                            Outcome::Skipped { reason } => format!("{p} skipped: {reason}\n"),
                        })
                        .collect(),
                }
            } else {
                let params: Vec<Parameter> = if params.is_empty() {
                    vec![Parameter::for_position(solve.mode, solve.independent)]
                } else {
                    params.iter().map(|p| p.parse()).collect::<Result<_, _>>()?
                };
                let reports = params
                    .iter()
                    .map(|&p| compute_parameter(&g, p, &opts))
                    .collect::<Result<Vec<_>, _>>()?;
                match cli.format {
                    Format::Json => json(&reports),
                    Format::Text => reports.iter().map(report_line).collect(),
                }
            }
        }
        Command::Family { spec, seed, out: dir } => {
            let mut spec: FamilySpec = spec.parse()?;
            if spec.seed.is_none() && spec.family.is_random() {
                spec.seed = seed;
            }
            let generated = generate(&spec)?;
            let predictions = match predict_for_spec(&spec) {
                Ok(p) => p,
                Err(Error::Domain(_)) => Vec::new(),
                Err(e) => return Err(e.into()),
            };
            let meta = FamilyMeta {
                spec: spec.to_string(),
                order: generated.graph.order(),
                size: generated.graph.edge_count(),
                graph6: emit_graph6(&generated.graph),
                roles: generated.roles.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                predictions,
            };
            if let Some(dir) = dir {
                let name: String = meta
                    .spec
                    .chars()
                    .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
                    .collect();
                std::fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
                let g6 = dir.join(format!("{name}.g6"));
                std::fs::write(&g6, format!("{}\n", meta.graph6)).map_err(|e| io_err(&g6, e))?;
                let side = dir.join(format!("{name}.json"));
                std::fs::write(&side, json(&meta)).map_err(|e| io_err(&side, e))?;
            }
            match cli.format {
                Format::Json => json(&meta),
                Format::Text => {
                    let mut s = format!("{}\n", meta.graph6);
                    let _ = writeln!(s, "# {} (order {}, size {})", meta.spec, meta.order, meta.size);
                    for p in &meta.predictions {
                        let _ = writeln!(s, "# {} = {} [{}]", p.parameter, p.value, p.tag);
                    }
                    s
                }
            }
        }
        Command::Verify {
            checks,
            seeds,
            out: file,
            no_timing,
            list,
        } => {
            if list {
                let s: String = manifest().iter().map(|d| format!("{}\t{}\n", d.id, d.corpus)).collect();
                out.write_all(s.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))?;
                return Ok(EXIT_OK);
            }
            let mut report = run_suite(&checks, &seeds)?;
            if no_timing {
                report = report.without_timing();
            }
            if let Some(file) = file {
                std::fs::write(&file, report.to_json()).map_err(|e| io_err(&file, e))?;
            }
            let s = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            out.write_all(s.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_CHECKS_FAILED });
        }
        Command::Reduce { input, k, emit } => {
            let g = read_graph(&input)?;
            let inst = reduce_clique_to_mp(&g, k)?;
            let verdict = verify_reduction(&inst)?;
            let product = emit_graph6(&inst.product);
            if let Some(path) = emit {
                std::fs::write(&path, format!("{product}\n")).map_err(|e| io_err(&path, e))?;
            }
            let s = match cli.format {
                Format::Json => json(&ReduceOutput {
                    product: product.clone(),
                    verdict: verdict.clone(),
                    holds: verdict.holds(),
                }),
                Format::Text => format!(
                    "product {product}\nk' = {}\nomega(G) = {}, mp(G') = {}, omega(G') = {}\nclique answer {}, position answer {}\nidentity {}\n",
                    verdict.k_prime,
                    verdict.omega_source,
                    verdict.mp_product,
                    verdict.omega_product,
                    verdict.clique_answer,
                    verdict.mp_answer,
                    if verdict.holds() { "holds" } else { "FAILS" }
                ),
            };
            out.write_all(s.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))?;
            return Ok(if verdict.holds() { EXIT_OK } else { EXIT_CHECKS_FAILED });
        }
        Command::Oracle { input, solve } => {
            let g = read_graph(&input)?;
            check_cap(&g, solve.cap)?;
            let r = brute_force_position(&g, solve.mode, &options(&solve))?;
            match cli.format {
                Format::Json => json(&r),
                Format::Text => report_line(&r),
            }
        }
        Command::Paths { input, from, to, hull } => {
            let g = read_graph(&input)?;
            let mut rows: Vec<PathsRow> = Vec::new();
            if let (Some(u), Some(v)) = (from, to) {
                g.check_vertex(u)?;
                g.check_vertex(v)?;
                let verts = enumerate_induced_paths(&g, &InducedPathQuery::new(u, v, QueryMode::CollectVertices))?;
                let count = enumerate_induced_paths(&g, &InducedPathQuery::new(u, v, QueryMode::CountOnly))?;
                let (PathAggregate::Vertices(set), PathAggregate::Count(c)) = (verts.aggregate, count.aggregate) else {
                    return Err(CliError::Internal("unexpected query aggregate".into()));
                };
                rows.push(PathsRow::Interval {
                    u,
                    v,
                    interval: set.to_vec(),
                    induced_paths: Some(c),
                });
            } else if hull.is_none() {
                let iv = all_intervals_with_budget(&g, DEFAULT_BUDGET)?;
                for u in 0..g.order() {
                    for v in u + 1..g.order() {
                        rows.push(PathsRow::Interval {
                            u,
                            v,
                            interval: iv.get(u, v).to_vec(),
                            induced_paths: None,
                        });
                    }
                }
            }
            if let Some(h) = hull {
                for &v in &h {
                    g.check_vertex(v)?;
                }
                let set = VertexSet::from_vertices(g.order(), h.iter().copied());
                let (closure, rounds) = monophonic_hull(&g, &set)?;
                rows.push(PathsRow::Hull {
                    set: set.to_vec(),
                    hull: closure.to_vec(),
                    rounds,
                });
            }
            match cli.format {
                Format::Json => json(&rows),
                Format::Text => rows
                    .iter()
                    .map(|r| match r {
                        PathsRow::Interval {
                            u,
                            v,
                            interval,
                            induced_paths,
                        } => match induced_paths {
                            Some(c) => format!("K[{u},{v}] = {interval:?}  ({c} induced paths)\n"),
                            None => format!("K[{u},{v}] = {interval:?}\n"),
                        },
                        PathsRow::Hull { set, hull, rounds } => format!("hull {set:?} = {hull:?}  ({rounds} rounds)\n"),
                    })
                    .collect(),
            }
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FamilyMeta {
    spec: String,
    order: usize,
    size: usize,
    graph6: String,
    roles: std::collections::BTreeMap<String, Vec<usize>>,
    predictions: Vec<PredictedValue>,
}

#[derive(Serialize)]
struct ReduceOutput {
    product: String,
    verdict: monopos::reduction::ReductionVerdict,
    holds: bool,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum PathsRow {
    Interval {
        u: usize,
        v: usize,
        interval: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        induced_paths: Option<u64>,
    },
    Hull {
        set: Vec<usize>,
        hull: Vec<usize>,
        rounds: usize,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<i32, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("monopos").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let r = run(cli, &mut out);
        (r, String::from_utf8(out).unwrap())
    }

    #[test]
    fn family_text_and_json() {
        let (r, s) = run_args(&["family", "half_wheel:4"]);
        assert_eq!(r.unwrap(), 0);
        assert!(s.contains("# mp = 2") && s.contains("# gp = 4"));
        let (r, s) = run_args(&["--format", "json", "family", "G_abl:3,5,2"]);
        assert_eq!(r.unwrap(), 0);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["order"], 8);
    }

    #[test]
    fn error_codes() {
        let (r, _) = run_args(&["family", "half_wheel:1"]);
        assert_eq!(r.unwrap_err().exit_code(), EXIT_BAD_INPUT);
        let (r, _) = run_args(&["compute", "/no/such/file"]);
        assert_eq!(r.unwrap_err().exit_code(), EXIT_BAD_INPUT);
        assert_eq!(CliError::from(Error::LimitExceeded { what: "x", limit: 1 }).exit_code(), EXIT_LIMIT);
    }

    #[test]
    fn list_checks() {
        let (r, s) = run_args(&["verify", "--list"]);
        assert_eq!(r.unwrap(), 0);
        assert_eq!(s.lines().count(), manifest().len());
    }
}
