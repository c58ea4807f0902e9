//! The `turan` command line. [`run`] is the whole program minus process
//! plumbing, so it can be driven in-process.

use crate::gadget::{build_blowup_gadget, build_np_gadget, choose_scale, per_missing_edge_km_count};
use crate::graph::{self, parse_weighted_graph, write_graph, write_weighted_graph, Graph, WeightedGraph};
use crate::matching::{ex_matchings, max_edges_bounded_degree, max_matching};
use crate::oracle::{exact_ex_hom_with, exact_ex_with, OracleConfig, DEFAULT_NODE_BUDGET};
use crate::pattern::{count_copies, parse_pattern, ForbiddenFamily, PatternSpec};
use crate::pipeline::{approx_ex_with, certify, ApproxConfig, Route, PIPELINE_NODE_BUDGET};
use crate::rational::{self, format_rational, parse_rational, Rational};
use crate::regularity::{
    build_partition_graph, check_regular_exact, check_regular_witness, refine_partition_with, RefineConfig,
    DEFAULT_K_CAP, EXACT_LIMIT,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "turan", version, about = "Generalized Turán numbers ex(G, T, F)")]
pub struct Cli {
    /// Seed for every random choice (random graphs, self-test instances).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the exact search; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Copies of T in G.
    Count {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "T")]
        t: String,
    },
    /// ex(G, T, F) by branch and bound.
    Exact(ExactArgs),
    /// ex_hom(W, T, F) on a weighted graph.
    Exhom(ExactArgs),
    /// Additive approximation with an F-free certificate.
    Approx(ApproxArgs),
    /// Largest subgraph of maximum degree at most t.
    StarMaxEdges {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        t: usize,
    },
    /// Most copies of kK2 in a subgraph of maximum degree 1.
    MatchingCopies {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
    },
    /// Regularity checks and partitions.
    #[command(subcommand)]
    Regularity(RegularityCommand),
    /// Reduction gadget hosts.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Quick internal consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file, pattern shorthand (K5, C7, @file) or random:<n>:<p>.
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    #[arg(long = "T")]
    pub t: String,
    /// Comma-separated forbidden patterns.
    #[arg(long)]
    pub forbid: String,
    /// Search nodes before giving up.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RouteArg {
    Auto,
    Regularity,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    #[arg(long = "T")]
    pub t: String,
    #[arg(long)]
    pub forbid: String,
    #[arg(long)]
    pub eps: String,
    #[arg(long, default_value_t = DEFAULT_K_CAP)]
    pub k_cap: usize,
    /// Edit budget as a fraction of n²; defaults to eps.
    #[arg(long)]
    pub budget: Option<String>,
    /// Density threshold for the partition graph.
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long)]
    pub min_classes: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    pub route: RouteArg,
    /// Search nodes for the exact route before switching to regularity.
    #[arg(long, default_value_t = PIPELINE_NODE_BUDGET)]
    pub node_budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Exact,
    Witness,
}

#[derive(Debug, Subcommand)]
pub enum RegularityCommand {
    /// Is the pair (A, B) eps-regular?
    Check {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated 1-indexed vertices.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        eps: String,
        #[arg(long, value_enum, default_value = "witness")]
        method: Method,
    },
    /// Regular partition after edge deletions, with its partition graph.
    Partition {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        min_classes: Option<usize>,
        #[arg(long)]
        budget: Option<String>,
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value_t = DEFAULT_K_CAP)]
        k_cap: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// G plus k − 3 joined independent sets of size s.
    Np {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Set size; the smallest adequate power of two when omitted.
        #[arg(long)]
        s: Option<usize>,
        /// Write the host here and parameters to `<out>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow-ups of T minus an edge's endpoints attached to every edge of G.
    Blowup {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "T")]
        t: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

/// A report in both renderings.
struct Report {
    json: Value,
    text: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                let mut value = report.json;
                value
                    .as_object_mut()
                    .expect("reports are objects")
                    .insert("schemaVersion".into(), json!(SCHEMA_VERSION));
                let mut s = serde_json::to_string_pretty(&value).expect("serialisable");
                s.push('\n');
                s
            } else {
                report.text
            };
            let code = if report_failed(&stdout, cli.json) { EXIT_FAILURE } else { EXIT_OK };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => {
            Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
        Err(Failure::Compute(msg)) => {
            Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

/// Only the self-test reports failure through its body.
fn report_failed(stdout: &str, json: bool) -> bool {
    if json {
        stdout.contains("\"selftestPassed\": false")
    } else {
        stdout.starts_with("selftest FAILED")
    }
}

fn load_graph(arg: &str, seed: u64) -> Result<Graph, Failure> {
    if let Some(rest) = arg.strip_prefix("random:") {
        let (n, p) = rest.split_once(':').ok_or_else(|| usage(format!("expected random:<n>:<p>, got {arg}")))?;
        let n: usize = n.parse().map_err(|_| usage(format!("bad vertex count in {arg}")))?;
        let p = parse_rational(p).map_err(usage)?;
        if p < rational::ratio(0, 1) || p > rational::ratio(1, 1) {
            return Err(usage(format!("edge probability {p} outside [0, 1]")));
        }
        return Ok(graph::random_graph(n, rational::to_f64(&p), seed));
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
        return graph::parse_graph(&text).map_err(|e| usage(format!("{arg}: {e}")));
    }
    parse_pattern(arg).map_err(usage)
}

fn load_weighted(arg: &str, seed: u64) -> Result<WeightedGraph, Failure> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
        return parse_weighted_graph(&text).map_err(|e| usage(format!("{arg}: {e}")));
    }
    load_graph(arg, seed).map(|g| WeightedGraph::from_graph(&g))
}

fn load_pattern(text: &str) -> Result<PatternSpec, Failure> {
    parse_pattern(text).map(PatternSpec::new).map_err(usage)
}

fn load_family(text: &str) -> Result<ForbiddenFamily, Failure> {
    ForbiddenFamily::parse(text).map_err(usage)
}

fn load_rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(usage)
}

fn load_vertices(text: &str, n: usize) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| {
            let v: usize = s.trim().parse().map_err(|_| usage(format!("bad vertex `{s}`")))?;
            if v == 0 || v > n {
                return Err(usage(format!("vertex {v} out of range 1..={n}")));
            }
            Ok(v - 1)
        })
        .collect()
}

fn one_indexed(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn oracle(cli: &Cli, node_budget: u64) -> OracleConfig {
    OracleConfig { node_budget, threads: cli.threads.max(1) }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Count { graph, t } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let count = count_copies(&g, &load_pattern(t)?);
            Ok(Report { json: json!({ "count": count }), text: format!("count {count}\n") })
        }
        Command::Exact(args) => {
            let g = load_graph(&args.graph.graph, cli.seed)?;
            let (t, fam) = (load_pattern(&args.t)?, load_family(&args.forbid)?);
            let found = exact_ex_with(&g, &t, &fam, &oracle(cli, args.node_budget)).map_err(compute)?;
            let witness = write_graph(&found.witness);
            Ok(Report {
                json: json!({ "value": found.value, "witness": witness, "nodesExplored": found.nodes_explored }),
                text: format!("value {}\nnodes {}\n{witness}", found.value, found.nodes_explored),
            })
        }
        Command::Exhom(args) => {
            let w = load_weighted(&args.graph.graph, cli.seed)?;
            let (t, fam) = (load_pattern(&args.t)?, load_family(&args.forbid)?);
            let found = exact_ex_hom_with(&w, &t, &fam, &oracle(cli, args.node_budget)).map_err(compute)?;
            let value = format_rational(&found.value);
            let witness = write_weighted_graph(&found.witness);
            Ok(Report {
                json: json!({ "value": value, "witness": witness, "nodesExplored": found.nodes_explored }),
                text: format!("value {value}\nnodes {}\n{witness}", found.nodes_explored),
            })
        }
        Command::Approx(args) => approx(cli, args),
        Command::StarMaxEdges { graph, t } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let found = max_edges_bounded_degree(&g, *t).map_err(compute)?;
            let witness = write_graph(&found.witness);
            Ok(Report {
                json: json!({ "value": found.value, "witness": witness }),
                text: format!("value {}\n{witness}", found.value),
            })
        }
        Command::MatchingCopies { graph, k } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let value = ex_matchings(&g, *k);
            let nu = max_matching(&g).len();
            Ok(Report {
                json: json!({ "value": value, "matchingNumber": nu }),
                text: format!("value {value}\nmatching_number {nu}\n"),
            })
        }
        Command::Regularity(cmd) => regularity(cli, cmd),
        Command::Gadget(cmd) => gadget(cli, cmd),
        Command::Selftest => Ok(selftest(cli.seed)),
    }
}

fn approx(cli: &Cli, args: &ApproxArgs) -> Result<Report, Failure> {
    let g = load_graph(&args.graph.graph, cli.seed)?;
    let (t, fam) = (load_pattern(&args.t)?, load_family(&args.forbid)?);
    let eps = load_rational(&args.eps)?;
    let config = ApproxConfig {
        k_cap: args.k_cap,
        budget: args.budget.as_deref().map(load_rational).transpose()?,
        d: args.d.as_deref().map(load_rational).transpose()?,
        min_classes: args.min_classes,
        route: match args.route {
            RouteArg::Auto => Route::Auto,
            RouteArg::Regularity => Route::Regularity,
        },
        oracle: oracle(cli, args.node_budget),
    };
    let report = approx_ex_with(&g, &t, &fam, &eps, &config).map_err(compute)?;
    let certified = certify(&report, &fam, &t);
    let value = serde_json::to_value(&report).expect("serialisable");
    let text = format!(
        "estimate {}\nlower_bound_count {}\nedits_applied {}\nk {}\nfast_path {}\ncertified {certified}\n{}",
        format_rational(&report.estimate),
        report.lower_bound_count,
        report.edits_applied,
        report.k,
        report.fast_path,
        write_graph(&report.certificate)
    );
    Ok(Report { json: value, text })
}

fn regularity(cli: &Cli, cmd: &RegularityCommand) -> Result<Report, Failure> {
    match cmd {
        RegularityCommand::Check { graph, a, b, eps, method } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let (a, b) = (load_vertices(a, g.n())?, load_vertices(b, g.n())?);
            let eps = load_rational(eps)?;
            let verdict = match method {
                Method::Exact => check_regular_exact(&g, &a, &b, &eps),
                Method::Witness => check_regular_witness(&g, &a, &b, &eps),
            }
            .map_err(usage)?;
            let witness = verdict.witness.as_ref().map(|w| {
                json!({ "a": one_indexed(&w.a), "b": one_indexed(&w.b), "deviation": format_rational(&w.deviation) })
            });
            let mut text = format!("regular {}\nlevel {}\n", verdict.regular, format_rational(&verdict.level));
            if let Some(w) = &verdict.witness {
                text += &format!(
                    "witness_a {:?}\nwitness_b {:?}\ndeviation {}\n",
                    one_indexed(&w.a),
                    one_indexed(&w.b),
                    format_rational(&w.deviation)
                );
            }
            Ok(Report {
                json: json!({
                    "regular": verdict.regular,
                    "witness": witness,
                    "level": format_rational(&verdict.level),
                    "relaxedLevel": verdict.relaxed_level.as_ref().map(format_rational),
                }),
                text,
            })
        }
        RegularityCommand::Partition { graph, eps, min_classes, budget, d, k_cap } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let eps = load_rational(eps)?;
            let budget = budget.as_deref().map(load_rational).transpose()?.unwrap_or_else(|| eps.clone());
            let l = min_classes.unwrap_or_else(|| rational::ceil_to_usize(&eps.recip()).unwrap_or(1)).clamp(1, *k_cap);
            let edited =
                refine_partition_with(&g, &eps, l, &budget, &RefineConfig { k_cap: *k_cap }).map_err(compute)?;
            let d = d.as_deref().map(load_rational).transpose()?.unwrap_or_else(|| eps.clone());
            let pg =
                build_partition_graph(&edited.g_star, &edited.partition, &edited.achieved_eps, &d).map_err(compute)?;
            let classes: Vec<Vec<usize>> = edited.partition.classes().iter().map(|c| one_indexed(c)).collect();
            let exceptional = one_indexed(edited.partition.exceptional());
            let weighted = write_weighted_graph(&pg.w);
            let text = format!(
                "k {}\nedits_applied {}\nachieved_eps {}\nexceptional {exceptional:?}\n{}partition_graph\n{weighted}",
                edited.partition.k(),
                edited.edits_applied,
                format_rational(&edited.achieved_eps),
                classes.iter().enumerate().map(|(i, c)| format!("class {} {c:?}\n", i + 1)).collect::<String>(),
            );
            Ok(Report {
                json: json!({
                    "k": edited.partition.k(),
                    "classes": classes,
                    "exceptional": exceptional,
                    "editsApplied": edited.edits_applied,
                    "zeroedPairs": edited.zeroed_pairs,
                    "achievedEps": format_rational(&edited.achieved_eps),
                    "d": format_rational(&d),
                    "partitionGraph": weighted,
                    "gStar": write_graph(&edited.g_star),
                }),
                text,
            })
        }
    }
}

fn write_host(out: &Option<PathBuf>, host: &str, params: &Value) -> Result<(), Failure> {
    if let Some(path) = out {
        let mut sidecar = path.clone().into_os_string();
        sidecar.push(".json");
        std::fs::write(path, host).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let mut text = serde_json::to_string_pretty(params).expect("serialisable");
        text.push('\n');
        std::fs::write(&sidecar, text).map_err(|e| usage(format!("{}: {e}", PathBuf::from(&sidecar).display())))?;
    }
    Ok(())
}

fn gadget(cli: &Cli, cmd: &GadgetCommand) -> Result<Report, Failure> {
    match cmd {
        GadgetCommand::Np { graph, m, k, s, out } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let s = match s {
                Some(s) => *s,
                None => choose_scale(&g, *m, *k).map_err(usage)?,
            };
            let gad = build_np_gadget(&g, *m, *k, s).map_err(usage)?;
            let host = write_graph(&gad.host);
            let params = json!({
                "kind": "np",
                "n": g.n(),
                "m": m,
                "k": k,
                "r": gad.params.r,
                "s": s,
                "perMissingEdge": per_missing_edge_km_count(*m, gad.params.r, s),
                "uSets": gad.u_sets.iter().map(|u| one_indexed(u)).collect::<Vec<_>>(),
            });
            write_host(out, &host, &params)?;
            let mut value = params;
            value["host"] = json!(host);
            Ok(Report { json: value, text: host })
        }
        GadgetCommand::Blowup { graph, t, s, out } => {
            let g = load_graph(&graph.graph, cli.seed)?;
            let t = parse_pattern(t).map_err(usage)?;
            let gad = build_blowup_gadget(&g, &t, *s).map_err(usage)?;
            let host = write_graph(&gad.host);
            let params = json!({
                "kind": "blowup",
                "n": g.n(),
                "t": t.n(),
                "s": s,
                "removedEdge": [gad.removed_edge.0 + 1, gad.removed_edge.1 + 1],
                "attachMap": gad.attach_map,
                "perEdgeSets": gad.per_edge_sets.iter().map(|sets| sets.iter().map(|x| one_indexed(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            write_host(out, &host, &params)?;
            let mut value = params;
            value["host"] = json!(host);
            Ok(Report { json: value, text: host })
        }
    }
}

fn selftest(seed: u64) -> Report {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let k2 = PatternSpec::new(graph::complete(2));
    let k3 = ForbiddenFamily::single(graph::complete(3)).expect("nonempty");
    let exact = |g: &Graph, t: &PatternSpec, f: &ForbiddenFamily| {
        exact_ex_with(g, t, f, &OracleConfig::default()).map(|r| r.value).ok()
    };

    checks.push(("mantel", (3..=6).all(|n| exact(&graph::complete(n), &k2, &k3) == Some((n * n / 4) as u64))));
    let k4 = ForbiddenFamily::single(graph::complete(4)).expect("nonempty");
    checks.push((
        "triangles-without-k4",
        exact(&graph::complete(5), &PatternSpec::new(graph::complete(3)), &k4) == Some(4),
    ));

    let star_ok = (0..5).all(|i| {
        let g = graph::random_graph(7, 0.5, seed.wrapping_add(i));
        (1..=2).all(|t| {
            let fam = ForbiddenFamily::single(graph::star(t + 1)).expect("nonempty");
            max_edges_bounded_degree(&g, t).ok().map(|r| r.value) == exact(&g, &k2, &fam)
        })
    });
    checks.push(("bounded-degree-vs-oracle", star_ok));

    let gad_ok = build_np_gadget(&graph::complete(4), 3, 5, 2)
        .map(|gad| gad.copies_through_inner_edge((0, 1), 3) == per_missing_edge_km_count(3, 2, 2))
        .unwrap_or(false);
    checks.push(("gadget-count", gad_ok));

    let g = graph::random_graph(12, 0.5, seed);
    let (a, b): (Vec<usize>, Vec<usize>) = ((0..6).collect(), (6..12).collect());
    let eps = rational::ratio(1, 3);
    let reg_ok = match (check_regular_exact(&g, &a, &b, &eps), check_regular_witness(&g, &a, &b, &eps)) {
        (Ok(ex), Ok(wi)) => {
            a.len() <= EXACT_LIMIT
                && (!ex.regular || wi.witness.is_none())
                && wi.witness.is_none_or(|w| crate::regularity::witness_is_valid(&g, &a, &b, &eps, &w))
        }
        _ => false,
    };
    checks.push(("regularity-consistency", reg_ok));

    let approx_ok =
        approx_ex_with(&graph::random_graph(10, 0.5, seed), &k2, &k3, &rational::ratio(1, 2), &ApproxConfig::default())
            .map(|r| certify(&r, &k3, &k2))
            .unwrap_or(false);
    checks.push(("approx-certificate", approx_ok));

    let passed = checks.iter().all(|c| c.1);
    let mut text = String::from(if passed { "selftest ok\n" } else { "selftest FAILED\n" });
    for (name, ok) in &checks {
        text += &format!("{} {name}\n", if *ok { "pass" } else { "FAIL" });
    }
    Report {
        json: json!({
            "selftestPassed": passed,
            "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "passed": ok })).collect::<Vec<_>>(),
        }),
        text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("turan").chain(args.iter().copied()))
    }

    #[test]
    fn count_on_shorthand() {
        let out = run_args(&["--json", "count", "--graph", "K4", "--T", "K3"]);
        assert_eq!(out.code, EXIT_OK);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["count"], 4);
        assert_eq!(v["schemaVersion"], SCHEMA_VERSION);
    }

    #[test]
    fn exact_reports_witness() {
        let out = run_args(&["exact", "--graph", "K4", "--T", "K2", "--forbid", "K3", "--json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["value"], 4);
        let w = graph::parse_graph(v["witness"].as_str().unwrap()).unwrap();
        assert_eq!(w.edge_count(), 4);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["count", "--graph", "K4"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["count", "--graph", "Q9", "--T", "K2"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["count", "--graph", "/no/such/file", "--T", "K2"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(&["approx", "--graph", "K4", "--T", "K2", "--forbid", "K3", "--eps", "x"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn budget_exhaustion_exits_three() {
        let out = run_args(&["exact", "--graph", "K8", "--T", "K2", "--forbid", "K3", "--node-budget", "3"]);
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stderr.contains("budget"));
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn random_graphs_follow_the_seed() {
        let a = run_args(&["--seed", "5", "count", "--graph", "random:10:1/2", "--T", "K3"]);
        let b = run_args(&["--seed", "5", "count", "--graph", "random:10:1/2", "--T", "K3"]);
        assert_eq!(a, b);
        assert_eq!(
            a.stdout,
            format!("count {}\n", count_copies(&graph::random_graph(10, 0.5, 5), &PatternSpec::parse("K3").unwrap()))
        );
    }

    #[test]
    fn gadget_writes_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        let host = dir.path().join("host.col");
        let out = run_args(&[
            "gadget",
            "np",
            "--graph",
            "K3",
            "--m",
            "2",
            "--k",
            "4",
            "--s",
            "2",
            "--out",
            host.to_str().unwrap(),
        ]);
        assert_eq!(out.code, EXIT_OK);
        let g = graph::parse_graph(&std::fs::read_to_string(&host).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 9));
        let side: Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("host.col.json")).unwrap()).unwrap();
        assert_eq!(side["r"], 1);
    }

    #[test]
    fn selftest_passes() {
        let out = run_args(&["selftest"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    }
}
