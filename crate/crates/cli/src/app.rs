use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pointpart::bounds::bound_formulas;
use pointpart::coloring::{chi_t_with, SolverConfig};
use pointpart::constructions::{complete, cycle, dirac_join, gallai_dirac, hajos_join, k3t, s_clique, s_cycle, HajosSpec};
use pointpart::criticality::{brooks_equality_classify, is_critical_with, low_vertex_analysis, BrooksClass};
use pointpart::decomposition::decompose_with;
use pointpart::enumeration::{enumerate_critical, EnumerationConfig, DEFAULT_NODE_BUDGET};
use pointpart::Multigraph;
use serde_json::{json, Value};

use crate::error::{exit, CliError};
use crate::format::{parse_graph, write_graph};
use crate::json;
use crate::suites::{run_suite, Context, Params, Suite};

/// Environment variable holding the default search budget.
pub const BUDGET_ENV: &str = "POINTPART_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "pointpart", version, about = "Point partition numbers of multigraphs")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration and per-edge checks.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Search node budget (also read from POINTPART_BUDGET).
    #[arg(long, global = true, value_name = "NODES")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TArg {
    /// Degeneracy parameter, at least 1.
    #[arg(long)]
    t: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum JoinKind {
    Dirac,
    Hajos,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    SClique,
    SCycle,
    K3t,
    GallaiDirac,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Point partition number and an optimal colouring.
    Chi {
        /// Graph file; `-` or nothing reads standard input.
        file: Option<String>,
        #[command(flatten)]
        t: TArg,
    },
    /// Whether the graph is chi_t-critical, with per-edge witnesses.
    CheckCritical {
        file: Option<String>,
        #[command(flatten)]
        t: TArg,
        /// Add the low vertex and Brooks-type analyses.
        #[arg(long)]
        structure: bool,
    },
    /// Factors of the t-complement decomposition.
    Decompose {
        file: Option<String>,
        #[command(flatten)]
        t: TArg,
    },
    /// The t-complement.
    Complement {
        file: Option<String>,
        #[command(flatten)]
        t: TArg,
    },
    /// Dirac or Hajos l-join of two graphs.
    Join {
        kind: JoinKind,
        /// First graph file (`-` for standard input).
        first: String,
        /// Second graph file (`-` for standard input).
        second: String,
        /// Number of parallel edges joined or deleted.
        #[arg(long)]
        l: u32,
        /// Hajos: deleted pair u1 v1 in the first graph (1-indexed).
        #[arg(long)]
        u1: Option<usize>,
        #[arg(long)]
        v1: Option<usize>,
        /// Hajos: deleted pair u2 v2 in the second graph; v2 merges into v1.
        #[arg(long)]
        u2: Option<usize>,
        #[arg(long)]
        v2: Option<usize>,
    },
    /// Build a graph from a named family.
    Construct {
        family: Family,
        /// complete K, cycle N, s-clique S N, s-cycle S N, k3t T, gallai-dirac K Y1.
        params: Vec<usize>,
    },
    /// All chi_t-critical graphs of order n up to isomorphism.
    Enumerate {
        #[arg(long)]
        t: u32,
        /// Point partition number of the members.
        #[arg(long)]
        k: u32,
        /// Order of the members.
        #[arg(long)]
        n: usize,
        /// Multiplicity cap (default t).
        #[arg(long)]
        m: Option<u32>,
        /// Print only the edge-minimal members.
        #[arg(long)]
        ext_only: bool,
    },
    /// Reference values for the least size of a critical graph.
    Bounds {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Class parameters; every suite except joins needs all three.
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
    },
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: exit::PASS }
    }
}

fn read_source(path: Option<&str>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        None | Some("-") => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        }
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.into(), source })?;
        }
    }
    Ok(text)
}

fn read_graph(path: Option<&str>) -> Result<Multigraph, CliError> {
    let name = path.unwrap_or("-");
    parse_graph(&read_source(path)?).map_err(|e| match e {
        CliError::Parse { line, message } => CliError::usage(format!("{name}: line {line}: {message}")),
        other => other,
    })
}

fn positive_t(t: u32) -> Result<u32, CliError> {
    if t == 0 {
        return Err(CliError::usage("--t must be at least 1"));
    }
    Ok(t)
}

fn graph_output(g: &Multigraph) -> Output {
    Output::ok(write_graph(g), json::document("graph", json!({ "graph": json::graph(g) })))
}

fn cmd_chi(g: &Multigraph, t: u32, ctx: &Context) -> Result<Output, CliError> {
    let r = chi_t_with(g, positive_t(t)?, &ctx.solver)?;
    let colors = json::coloring(&r.witness);
    let mut text = format!("chi_t = {}\n", r.k);
    if g.order() > 0 {
        let list: Vec<String> = colors.as_array().unwrap().iter().map(Value::to_string).collect();
        writeln!(text, "coloring: {}", list.join(" ")).unwrap();
    }
    let doc = json::document(
        "chi",
        json!({"t": t, "n": g.order(), "chi_t": r.k, "coloring": colors, "nodes": r.nodes}),
    );
    Ok(Output::ok(text, doc))
}

fn cmd_check_critical(g: &Multigraph, t: u32, structure: bool, ctx: &Context) -> Result<Output, CliError> {
    let r = is_critical_with(g, positive_t(t)?, &ctx.solver)?;
    let mut text = if r.is_critical {
        format!("critical, k = {}\n", r.k)
    } else {
        format!("not critical, k = {}\n", r.k)
    };
    if let Some((u, v)) = r.failing_edge {
        writeln!(text, "deleting one edge between {} and {} keeps chi_t = {}", u + 1, v + 1, r.k).unwrap();
    }
    writeln!(text, "vertex-critical: {}", if r.is_vertex_critical { "yes" } else { "no" }).unwrap();
    let witnesses: Vec<Value> = r
        .edge_witnesses
        .iter()
        .map(|w| json!({"edge": json::pair(w.u, w.v), "coloring": json::coloring(&w.coloring)}))
        .collect();
    let mut body = json!({
        "t": t,
        "k": r.k,
        "critical": r.is_critical,
        "vertex_critical": r.is_vertex_critical,
        "failing_edge": r.failing_edge.map(|(u, v)| json::pair(u, v)),
        "edge_witnesses": witnesses,
    });
    let mut violation = false;
    if structure {
        if r.is_critical && g.order() > 0 {
            let low = low_vertex_analysis(g, t)?;
            let blocks: Vec<Value> = low
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "vertices": json::vertex_set(b.vertices),
                        "shape": b.shape,
                        "matches": b.matches,
                    })
                })
                .collect();
            violation |= low.has_violation();
            writeln!(text, "low vertices: {}", json::vertex_set(low.low)).unwrap();
            for b in &low.blocks {
                writeln!(text, "  block {}: {}", json::vertex_set(b.vertices), b.shape).unwrap();
            }
            body["low_vertex"] = json!({
                "low": json::vertex_set(low.low),
                "high": json::vertex_set(low.high),
                "blocks": blocks,
                "violation": low.has_violation(),
            });
        }
        if g.order() > 0 && g.is_connected() {
            let b = brooks_equality_classify(g, t)?;
            violation |= b.class == BrooksClass::Violation;
            writeln!(text, "brooks bound {}: {}", b.bound, b.class).unwrap();
            let mut brooks = json!(b.class);
            brooks["bound"] = json!(b.bound);
            body["brooks"] = brooks;
        }
    }
    let mut out = Output::ok(text, json::document("criticality", body));
    if violation {
        out.code = exit::VIOLATION;
    }
    Ok(out)
}

fn cmd_decompose(g: &Multigraph, t: u32, ctx: &Context) -> Result<Output, CliError> {
    let r = decompose_with(g, positive_t(t)?, &ctx.solver)?;
    let mut text = format!("{} factors, p = {}, q = {}\n", r.factors.len(), r.p, r.q);
    let mut factors = Vec::new();
    for f in &r.factors {
        let critical = if f.critical { "critical" } else { "not critical" };
        writeln!(text, "factor {}: n = {}, chi_t = {}, {critical}", json::vertex_set(f.vertices), f.n, f.k).unwrap();
        factors.push(json!({
            "vertices": json::vertex_set(f.vertices),
            "n": f.n,
            "chi_t": f.k,
            "critical": f.critical,
            "graph": json::graph(&f.graph),
        }));
    }
    let doc = json::document(
        "decomposition",
        json!({"t": t, "p": r.p, "q": r.q, "indecomposable": r.is_indecomposable(), "factors": factors}),
    );
    Ok(Output::ok(text, doc))
}

fn one_based(name: &str, v: Option<usize>, g: &Multigraph) -> Result<usize, CliError> {
    let v = v.ok_or_else(|| CliError::usage(format!("hajos join needs --{name}")))?;
    if v == 0 || v > g.order() {
        return Err(CliError::usage(format!("--{name} {v} is outside 1..={}", g.order())));
    }
    Ok(v - 1)
}

fn cmd_join(
    kind: JoinKind,
    first: &str,
    second: &str,
    l: u32,
    ends: [Option<usize>; 4],
) -> Result<Output, CliError> {
    if first == "-" && second == "-" {
        return Err(CliError::usage("at most one operand can come from standard input"));
    }
    let g1 = read_graph(Some(first))?;
    let g2 = read_graph(Some(second))?;
    let h = match kind {
        JoinKind::Dirac => dirac_join(&g1, &g2, l)?,
        JoinKind::Hajos => {
            if l == 0 {
                return Err(CliError::usage("hajos join needs --l >= 1"));
            }
            let spec = HajosSpec {
                u1: one_based("u1", ends[0], &g1)?,
                v1: one_based("v1", ends[1], &g1)?,
                u2: one_based("u2", ends[2], &g2)?,
                v2: one_based("v2", ends[3], &g2)?,
                g1,
                g2,
                l,
            };
            hajos_join(&spec)?
        }
    };
    Ok(graph_output(&h))
}

fn cmd_construct(family: Family, params: &[usize]) -> Result<Output, CliError> {
    let (name, arity) = match family {
        Family::Complete => ("complete <k>", 1),
        Family::Cycle => ("cycle <n>", 1),
        Family::SClique => ("s-clique <s> <n>", 2),
        Family::SCycle => ("s-cycle <s> <n>", 2),
        Family::K3t => ("k3t <t>", 1),
        Family::GallaiDirac => ("gallai-dirac <k> <|Y1|>", 2),
    };
    if params.len() != arity {
        return Err(CliError::usage(format!("usage: construct {name}")));
    }
    let small = |x: usize| u32::try_from(x).map_err(|_| CliError::usage(format!("{x} is too large")));
    let g = match family {
        Family::Complete => complete(params[0])?,
        Family::Cycle => cycle(params[0])?,
        Family::SClique => s_clique(small(params[0])?, params[1])?,
        Family::SCycle => s_cycle(small(params[0])?, params[1])?,
        Family::K3t => k3t(small(params[0])?)?,
        Family::GallaiDirac => gallai_dirac(params[0], params[1])?,
    };
    Ok(graph_output(&g))
}

fn cmd_enumerate(t: u32, k: u32, n: usize, m: Option<u32>, ext_only: bool, ctx: &Context) -> Result<Output, CliError> {
    let config = EnumerationConfig { m, ..ctx.enumeration };
    let r = enumerate_critical(positive_t(t)?, k, n, &config)?;
    let mut text = format!("Cri_{t}({k},{n}) with multiplicity at most {}: {} graphs\n", r.m, r.graphs.len());
    match r.ext {
        Some(e) => writeln!(text, "ext = {e}, {} extremal", r.extremal.len()).unwrap(),
        None => writeln!(text, "the class is empty").unwrap(),
    }
    let shown = if ext_only { &r.extremal } else { &r.graphs };
    for (i, g) in shown.iter().enumerate() {
        write!(text, "\n# {} of {}, {} edges\n{}", i + 1, shown.len(), g.edge_count(), write_graph(g)).unwrap();
    }
    let mut body = json!({
        "t": t,
        "k": k,
        "n": n,
        "m": r.m,
        "count": r.graphs.len(),
        "ext": r.ext,
        "extremal": json::graphs(&r.extremal),
        "nodes": r.nodes,
    });
    if !ext_only {
        body["graphs"] = json::graphs(&r.graphs);
    }
    Ok(Output::ok(text, json::document("enumeration", body)))
}

fn cmd_bounds(t: u32, k: u32, n: u32) -> Result<Output, CliError> {
    let b = bound_formulas(t, k, n)?;
    let ky = b.kostochka_yancey.map(|r| r.to_string());
    let mut text = format!("t = {t}, k = {k}, n = {n}, p = {}\n", b.p);
    writeln!(text, "trivial          {}", b.trivial).unwrap();
    let rows = [
        ("kostochka_yancey", ky.clone()),
        ("theorem_8_5", b.theorem_8_5.map(|v| v.to_string())),
        ("theorem_b", b.theorem_b.map(|v| v.to_string())),
        ("gallai", b.gallai.map(|v| v.to_string())),
    ];
    for (name, value) in &rows {
        writeln!(text, "{name:<16} {}", value.as_deref().unwrap_or("-")).unwrap();
    }
    let doc = json::document(
        "bounds",
        json!({
            "t": t,
            "k": k,
            "n": n,
            "p": b.p,
            "trivial": b.trivial.to_string(),
            "kostochka_yancey": ky,
            "theorem_8_5": b.theorem_8_5,
            "theorem_b": b.theorem_b,
            "gallai": b.gallai,
        }),
    );
    Ok(Output::ok(text, doc))
}

fn cmd_verify(suite: Suite, t: Option<u32>, k: Option<u32>, n: Option<usize>, ctx: &Context) -> Result<Output, CliError> {
    let params = match (t, k, n) {
        (None, None, None) => None,
        (Some(t), Some(k), Some(n)) => Some(Params { t, k, n }),
        _ => return Err(CliError::usage("give all of --t, --k and --n, or none")),
    };
    let report = run_suite(suite, params, ctx)?;
    let code = if report.passed() { exit::PASS } else { exit::VIOLATION };
    Ok(Output { text: report.to_text(), json: report.to_json(), code })
}

fn context(budget: Option<u64>) -> Result<Context, CliError> {
    let budget = match budget {
        Some(b) => Some(b),
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => Some(s.trim().parse().map_err(|_| CliError::usage(format!("{BUDGET_ENV} must be a node count, got {s:?}")))?),
            Err(_) => None,
        },
    };
    Ok(Context {
        enumeration: EnumerationConfig { m: None, node_budget: budget.unwrap_or(DEFAULT_NODE_BUDGET) },
        solver: SolverConfig { node_budget: budget },
    })
}

fn dispatch(command: Command, ctx: &Context) -> Result<Output, CliError> {
    match command {
        Command::Chi { file, t } => cmd_chi(&read_graph(file.as_deref())?, t.t, ctx),
        Command::CheckCritical { file, t, structure } => {
            cmd_check_critical(&read_graph(file.as_deref())?, t.t, structure, ctx)
        }
        Command::Decompose { file, t } => cmd_decompose(&read_graph(file.as_deref())?, t.t, ctx),
        Command::Complement { file, t } => {
            let g = read_graph(file.as_deref())?;
            Ok(graph_output(&g.t_complement(positive_t(t.t)?)?))
        }
        Command::Join { kind, first, second, l, u1, v1, u2, v2 } => cmd_join(kind, &first, &second, l, [u1, v1, u2, v2]),
        Command::Construct { family, params } => cmd_construct(family, &params),
        Command::Enumerate { t, k, n, m, ext_only } => cmd_enumerate(t, k, n, m, ext_only, ctx),
        Command::Bounds { t, k, n } => cmd_bounds(t, k, n),
        Command::Verify { suite, t, k, n } => cmd_verify(suite, t, k, n, ctx),
    }
}

fn execute(cli: Cli) -> Result<Output, CliError> {
    let ctx = context(cli.budget)?;
    match cli.jobs {
        Some(0) => Err(CliError::usage("--jobs must be at least 1")),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::usage(format!("cannot start {jobs} workers: {e}")))?;
            pool.install(|| dispatch(cli.command, &ctx))
        }
        None => dispatch(cli.command, &ctx),
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::INPUT } else { exit::PASS };
        }
    };
    let as_json = cli.json;
    match execute(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if as_json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"))
            } else {
                write!(stdout, "{}", out.text)
            };
            // A closed pipe is not worth a different exit code.
            let _ = written.and_then(|_| stdout.flush());
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
