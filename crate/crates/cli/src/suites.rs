//! Verification suites behind `pointpart verify`.
//!
//! Class suites enumerate `Cri_t(k, n)` and test a structural statement on
//! every member. The `joins` suite works on a fixed operand pool instead.
//! Requests beyond the enumeration envelope are refused.

use std::fmt::Write as _;

use clap::ValueEnum;
use pointpart::bounds::bound_formulas;
use pointpart::coloring::{chi_t_with, extreme_coloring, SolverConfig};
use pointpart::constructions::{complete, cycle, dirac_join, gallai_dirac, hajos_join, s_clique, HajosSpec};
use pointpart::criticality::{brooks_equality_classify, is_critical_given_k, is_critical_with, low_vertex_analysis, BrooksClass};
use pointpart::decomposition::{check_theorem_7_1, check_theorem_a, factor_sets, Verdict};
use pointpart::enumeration::{enumerate_critical, verify_theorem_8_5, EnumerationConfig, EnumerationResult};
use pointpart::Multigraph;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::write_graph;
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "theoremA")]
    TheoremA,
    #[value(name = "theoremB")]
    TheoremB,
    #[value(name = "brooks")]
    Brooks,
    #[value(name = "lowvertex")]
    LowVertex,
    #[value(name = "extreme")]
    Extreme,
    #[value(name = "thm71")]
    Thm71,
    #[value(name = "thm85")]
    Thm85,
    #[value(name = "joins")]
    Joins,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremA => "theoremA",
            Suite::TheoremB => "theoremB",
            Suite::Brooks => "brooks",
            Suite::LowVertex => "lowvertex",
            Suite::Extreme => "extreme",
            Suite::Thm71 => "thm71",
            Suite::Thm85 => "thm85",
            Suite::Joins => "joins",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub t: u32,
    pub k: u32,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Context {
    pub enumeration: EnumerationConfig,
    pub solver: SolverConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub witness: Option<Multigraph>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into(), witness: None }
    }

    fn with_witness(mut self, g: Option<Multigraph>) -> Self {
        self.witness = g;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub params: Option<Params>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub data: Value,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                    "witness": c.witness.as_ref().map(json::graph),
                })
            })
            .collect();
        json::document(
            "verification",
            json!({
                "suite": self.suite.name(),
                "params": self.params.map(|p| json!({"t": p.t, "k": p.k, "n": p.n})),
                "passed": self.passed(),
                "checks": checks,
                "notes": self.notes,
                "data": self.data,
            }),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}", self.suite.name());
        if let Some(p) = self.params {
            write!(out, " (t={}, k={}, n={})", p.t, p.k, p.n).unwrap();
        }
        out.push('\n');
        for c in &self.checks {
            writeln!(out, "{}  {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            if let Some(w) = &c.witness {
                for line in write_graph(w).lines() {
                    writeln!(out, "      {line}").unwrap();
                }
            }
        }
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "result: {verdict} ({} checks)", self.checks.len()).unwrap();
        out
    }
}

/// Largest order the class suites enumerate for a given `t`.
pub fn max_order(t: u32) -> usize {
    match t {
        1 => 8,
        2 => 6,
        3 => 5,
        _ => 4,
    }
}

pub fn check_envelope(p: Params) -> Result<(), CliError> {
    if p.t == 0 || p.k == 0 || p.n == 0 {
        return Err(CliError::usage("t, k and n must all be at least 1"));
    }
    if p.n > max_order(p.t) {
        return Err(CliError::usage(format!(
            "n = {} is outside the verification envelope for t = {} (n <= {})",
            p.n,
            p.t,
            max_order(p.t)
        )));
    }
    Ok(())
}

pub fn critical_class(p: Params, ctx: &Context) -> Result<EnumerationResult, CliError> {
    check_envelope(p)?;
    Ok(enumerate_critical(p.t, p.k, p.n, &ctx.enumeration)?)
}

/// Short name for common shapes, otherwise order and size.
pub fn describe(g: &Multigraph) -> String {
    let n = g.order();
    let s = g.max_mult();
    if n == 0 {
        return "the empty graph".into();
    }
    if n == 1 {
        return "K_1".into();
    }
    let prefix = if s == 1 { String::new() } else { s.to_string() };
    if g.is_uniform_clique(s) {
        return format!("{prefix}K_{n}");
    }
    let uniform = g.pairs().all(|(_, _, m)| m == s);
    if n >= 3 && uniform && g.is_connected() && (0..n).all(|v| g.neighbors(v).len() == 2) {
        return format!("{prefix}C_{n}");
    }
    format!("a graph with {n} vertices and {} edges", g.edge_count())
}

/// Like [`describe`], but names a Dirac `t`-join by its factors, with the
/// `K_1` factors collected into one `tK_a`.
pub fn describe_join(g: &Multigraph, t: u32) -> pointpart::Result<String> {
    let sets = factor_sets(g, t)?;
    if sets.len() < 2 {
        return Ok(describe(g));
    }
    let points = sets.iter().filter(|s| s.len() == 1).count();
    let mut parts = Vec::new();
    if points > 0 {
        parts.push(describe(&s_clique(t, points)?));
    }
    for set in sets.iter().filter(|s| s.len() > 1) {
        parts.push(describe(&g.induced_subgraph(*set)?.0));
    }
    Ok(parts.join(" join "))
}

fn describe_all(gs: &[Multigraph], t: u32) -> pointpart::Result<String> {
    if gs.is_empty() {
        return Ok("none".into());
    }
    Ok(gs.iter().map(|g| describe_join(g, t)).collect::<pointpart::Result<Vec<_>>>()?.join(", "))
}

/// Runs `test` on every graph; `Some(message)` marks a violation.
pub fn property<F>(name: &str, graphs: &[Multigraph], test: F) -> Result<Check, CliError>
where
    F: Fn(&Multigraph) -> pointpart::Result<Option<String>> + Sync,
{
    let outcomes: Vec<Option<String>> = graphs.par_iter().map(&test).collect::<pointpart::Result<_>>()?;
    let failures: Vec<(usize, String)> =
        outcomes.into_iter().enumerate().filter_map(|(i, o)| o.map(|m| (i, m))).collect();
    Ok(match failures.first() {
        None => Check::new(name, true, format!("{} graphs, no violations", graphs.len())),
        Some((i, message)) => Check::new(
            name,
            false,
            format!("{} of {} graphs fail; first: {message}", failures.len(), graphs.len()),
        )
        .with_witness(Some(graphs[*i].clone())),
    })
}

fn verdict_message(v: Verdict) -> Option<String> {
    match v {
        Verdict::Holds => None,
        Verdict::Violation(m) => Some(m),
    }
}

/// Critical graphs of order at most `2k - 2` have at least two factors.
pub fn theorem_a_check(graphs: &[Multigraph], t: u32) -> Result<Check, CliError> {
    property("critical graphs with n <= 2k-2 are t-decomposable", graphs, |g| {
        Ok(verdict_message(check_theorem_a(g, t)?.verdict))
    })
}

pub fn brooks_check(graphs: &[Multigraph], t: u32) -> Result<Check, CliError> {
    property("chi_t <= ceil(Delta/t) + 1, equality only in the three families", graphs, |g| {
        let r = brooks_equality_classify(g, t)?;
        Ok((r.class == BrooksClass::Violation).then(|| format!("chi_t = {}, bound = {}", r.k, r.bound)))
    })
}

pub fn low_vertex_check(graphs: &[Multigraph], t: u32) -> Result<Check, CliError> {
    property("every block of the low vertex subgraph has an allowed shape", graphs, |g| {
        let r = low_vertex_analysis(g, t)?;
        Ok(r.blocks.iter().find(|b| b.matches.is_empty()).map(|b| {
            let vs: Vec<usize> = b.vertices.iter().map(|v| v + 1).collect();
            format!("block {vs:?} matches no shape")
        }))
    })
}

pub fn theorem_7_1_check(graphs: &[Multigraph], t: u32) -> Result<Check, CliError> {
    property("p >= 3k-2n and 2p+q >= 5k-3n, with equality exactly for the listed shapes", graphs, |g| {
        Ok(verdict_message(check_theorem_7_1(g, t)?.verdict))
    })
}

/// For critical graphs with a connected `t`-complement, every vertex is the
/// only singleton class of some optimal colouring.
pub fn extreme_check(graphs: &[Multigraph], t: u32) -> Result<Check, CliError> {
    let mut eligible = Vec::new();
    for g in graphs {
        if g.t_complement(t)?.is_connected() {
            eligible.push(g.clone());
        }
    }
    let mut check = property("each vertex is the only singleton of some optimal colouring", &eligible, |g| {
        for v in 0..g.order() {
            let c = extreme_coloring(g, t, v)?;
            let single = c.singletons();
            if single.len() != 1 {
                return Ok(Some(format!("vertex {} needs {} singleton classes", v + 1, single.len())));
            }
        }
        Ok(None)
    })?;
    check.detail = format!("{} (of {} members, the rest have a disconnected t-complement)", check.detail, graphs.len());
    Ok(check)
}

pub fn run_suite(suite: Suite, params: Option<Params>, ctx: &Context) -> Result<SuiteReport, CliError> {
    if suite == Suite::Joins {
        if params.is_some() {
            return Err(CliError::usage("the joins suite uses a fixed operand pool and takes no --t/--k/--n"));
        }
        let (checks, products) = joins_suite(ctx)?;
        let notes = vec![format!("{} critical graphs built from joins", products.len())];
        return Ok(SuiteReport { suite, params, checks, notes, data: json!({"products": products.len()}) });
    }
    let p = params.ok_or_else(|| CliError::usage(format!("suite {} needs --t, --k and --n", suite.name())))?;
    if suite == Suite::Thm85 {
        return thm85_suite(p, ctx);
    }
    if suite == Suite::TheoremB {
        return theorem_b_suite(p, ctx);
    }
    let class = critical_class(p, ctx)?;
    let graphs = &class.graphs;
    let check = match suite {
        Suite::TheoremA => theorem_a_check(graphs, p.t)?,
        Suite::Brooks => brooks_check(graphs, p.t)?,
        Suite::LowVertex => low_vertex_check(graphs, p.t)?,
        Suite::Extreme => extreme_check(graphs, p.t)?,
        Suite::Thm71 => theorem_7_1_check(graphs, p.t)?,
        Suite::TheoremB | Suite::Thm85 | Suite::Joins => unreachable!(),
    };
    let notes = vec![format!("Cri_{}({},{}) has {} members", p.t, p.k, p.n, graphs.len())];
    Ok(SuiteReport { suite, params, checks: vec![check], notes, data: json!({"class_size": graphs.len()}) })
}

fn same_set(a: &[Multigraph], b: &[Multigraph]) -> Result<bool, CliError> {
    let labels = |gs: &[Multigraph]| -> pointpart::Result<Vec<_>> {
        let mut v = gs.iter().map(|g| g.canonical_form()).collect::<pointpart::Result<Vec<_>>>()?;
        v.sort();
        v.dedup();
        Ok(v)
    };
    Ok(labels(a)? == labels(b)?)
}

/// `tK_a ⊞^t h`, with `tK_0 ⊞^t h = h`.
fn clique_join(t: u32, a: usize, h: &Multigraph) -> pointpart::Result<Multigraph> {
    if a == 0 {
        Ok(h.clone())
    } else {
        dirac_join(&s_clique(t, a)?, h, t)
    }
}

fn theorem_b_suite(p: Params, ctx: &Context) -> Result<SuiteReport, CliError> {
    let Params { t, k, n } = p;
    let gap = n as i64 - k as i64;
    if gap < 1 || gap > k as i64 - 1 {
        return Err(CliError::usage(format!("suite theoremB needs 1 <= n - k <= k - 1 (got k={k}, n={n})")));
    }
    let pp = gap as usize;
    let class = critical_class(p, ctx)?;
    let bounds = bound_formulas(t, k, n as u32)?;
    let mut checks = Vec::new();
    let mut notes = vec![
        format!("Cri_{t}({k},{n}) has {} members", class.graphs.len()),
        match class.ext {
            Some(e) => format!("ext = {e}, extremal = {}", describe_all(&class.extremal, t)?),
            None => "the class is empty".into(),
        },
    ];
    let ext = class.ext.map(|e| e as i64);
    let trivial_ok = ext.is_none_or(|e| num_ge(e, *bounds.trivial.numer(), *bounds.trivial.denom()));
    checks.push(Check::new(
        "ext_t(k,n) >= t(k-1)n/2",
        trivial_ok,
        format!("ext = {}, bound = {}", show(ext), bounds.trivial),
    ));
    if let Some(value) = bounds.theorem_b {
        checks.push(Check::new(
            "ext_t(k,n) = t C(n,2) - (t/2)(2p+1)p",
            ext == Some(value),
            format!("ext = {}, formula = {value}", show(ext)),
        ));
        let expected = clique_join(t, k as usize - pp - 1, &s_clique(t / 2, 2 * pp + 1)?)?;
        checks.push(Check::new(
            "Ext_t(k,n) = {tK_(k-p-1) join (t/2)K_(2p+1)}",
            same_set(&class.extremal, std::slice::from_ref(&expected))?,
            format!("found {}, expected {}", describe_all(&class.extremal, t)?, describe_join(&expected, t)?),
        ));
    }
    if let Some(value) = bounds.gallai {
        checks.push(Check::new(
            "ext_1(k,n) = C(n,2) - (p^2+1)",
            ext == Some(value),
            format!("ext = {}, formula = {value}", show(ext)),
        ));
    }
    if let Some(ky) = bounds.kostochka_yancey {
        checks.push(Check::new(
            "ext_1(k,n) >= ((k+1)(k-2)n - k(k-3)) / (2(k-1))",
            ext.is_none_or(|e| num_ge(e, *ky.numer(), *ky.denom())),
            format!("ext = {}, bound = {ky}", show(ext)),
        ));
    }
    if pp + 1 == k as usize && k >= 3 {
        let mut dg: Vec<Multigraph> = Vec::new();
        for y1 in 1..=k as usize - 2 {
            let g = gallai_dirac(k as usize, y1)?.inflate(t);
            if !dg.iter().any(|h| h.is_isomorphic(&g).unwrap_or(false)) {
                dg.push(g);
            }
        }
        let inside = dg.iter().filter(|g| class.extremal.iter().any(|h| h.is_isomorphic(g).unwrap_or(false))).count();
        if t == 1 {
            checks.push(Check::new(
                "Ext_1(k,2k-1) is the Dirac-Gallai family",
                same_set(&class.extremal, &dg)?,
                format!("found {}, family has {} members", class.extremal.len(), dg.len()),
            ));
        } else if t % 2 == 1 {
            notes.push(format!(
                "t*DG({k}): {inside} of {} members are extremal (reported only)",
                dg.len()
            ));
        }
    }
    if t % 2 == 1 && t >= 3 {
        notes.push(odd_t_conjecture(p, pp, &class, ctx)?);
    }
    let data = json!({
        "class_size": class.graphs.len(),
        "ext": class.ext,
        "extremal": json::graphs(&class.extremal),
    });
    Ok(SuiteReport { suite: Suite::TheoremB, params: Some(p), checks, notes, data })
}

fn odd_t_conjecture(p: Params, pp: usize, class: &EnumerationResult, ctx: &Context) -> Result<String, CliError> {
    let small = Params { t: p.t, k: pp as u32 + 1, n: 2 * pp + 1 };
    if small.n > max_order(p.t) {
        return Ok(format!(
            "odd t: Ext_{}({},{}) is outside the envelope, conjectured form not compared",
            small.t, small.k, small.n
        ));
    }
    let base = critical_class(small, ctx)?;
    let predicted: Vec<Multigraph> = base
        .extremal
        .iter()
        .map(|h| clique_join(p.t, p.k as usize - pp - 1, h))
        .collect::<pointpart::Result<_>>()?;
    let agree = same_set(&class.extremal, &predicted)?;
    Ok(format!(
        "odd t: Ext_t(k,n) {} tK_(k-p-1) join Ext_t(p+1,2p+1) (reported only)",
        if agree { "agrees with" } else { "differs from" }
    ))
}

fn num_ge(e: i64, numer: i64, denom: i64) -> bool {
    e * denom >= numer
}

fn show(ext: Option<i64>) -> String {
    ext.map_or_else(|| "none".into(), |e| e.to_string())
}

fn thm85_suite(p: Params, ctx: &Context) -> Result<SuiteReport, CliError> {
    check_envelope(p)?;
    let r = verify_theorem_8_5(p.t, p.k, p.n, &ctx.enumeration)?;
    let witness = match &r.verdict {
        Verdict::Holds => None,
        Verdict::Violation(_) => r.checked.iter().find(|(_, e)| *e < r.bound).map(|(g, _)| g.clone()),
    };
    let detail = match &r.verdict {
        Verdict::Holds if r.checked.is_empty() => format!("no member qualifies, holds vacuously (bound {})", r.bound),
        Verdict::Holds => format!("{} members checked against e >= {}", r.checked.len(), r.bound),
        Verdict::Violation(m) => m.clone(),
    };
    let check = Check::new(
        "e(G) >= t C(n,2) - t p^2 without a dominating K_1 or critical 2-factor",
        r.verdict.holds(),
        detail,
    )
    .with_witness(witness);
    let notes = vec![format!(
        "Cri_{}({},{}) has {} members, {} without such a factor",
        p.t,
        p.k,
        p.n,
        r.class_size,
        r.checked.len()
    )];
    let data = json!({"class_size": r.class_size, "qualifying": r.checked.len(), "bound": r.bound});
    Ok(SuiteReport { suite: Suite::Thm85, params: Some(p), checks: vec![check], notes, data })
}

/// Operand pool for the Dirac join checks: critical graphs of order at most
/// 5 and a few non-critical graphs.
fn dirac_pool(t: u32, ctx: &Context) -> Result<Vec<Multigraph>, CliError> {
    let mut pool = Vec::new();
    for n in 1..=5 {
        for k in 1..=n as u32 {
            pool.extend(enumerate_critical(t, k, n, &ctx.enumeration)?.graphs);
        }
    }
    pool.push(Multigraph::from_simple_edges(3, &[(0, 1), (1, 2)])?);
    pool.push(cycle(4)?);
    pool.push(complete(4)?.delete_edge(0, 1)?);
    pool.push(Multigraph::from_simple_edges(4, &[(0, 1), (0, 2), (0, 3)])?);
    pool.push(Multigraph::from_simple_edges(4, &[(0, 1), (2, 3)])?);
    pool.push(Multigraph::from_simple_edges(3, &[(0, 1)])?);
    Ok(pool)
}

struct Operand {
    g: Multigraph,
    k: u32,
    critical: bool,
}

fn analyse(g: Multigraph, t: u32, solver: &SolverConfig) -> pointpart::Result<Operand> {
    let k = chi_t_with(&g, t, solver)?.k;
    let critical = is_critical_given_k(&g, t, k, solver)?;
    Ok(Operand { g, k, critical })
}

/// All join checks, and the critical graphs the joins produced with their `t`.
pub fn joins_suite(ctx: &Context) -> Result<(Vec<Check>, Vec<(u32, Multigraph)>), CliError> {
    let solver = &ctx.solver;
    let mut checks = Vec::new();
    let mut products: Vec<(u32, Multigraph)> = Vec::new();

    for t in [1, 2] {
        let pool: Vec<Operand> = dirac_pool(t, ctx)?
            .into_par_iter()
            .map(|g| analyse(g, t, solver))
            .collect::<pointpart::Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..pool.len())
            .flat_map(|i| (i..pool.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| pool[i].g.order() + pool[j].g.order() <= 8)
            .collect();
        let joined: Vec<(Operand, usize, usize)> = pairs
            .par_iter()
            .map(|&(i, j)| Ok((analyse(dirac_join(&pool[i].g, &pool[j].g, t)?, t, solver)?, i, j)))
            .collect::<pointpart::Result<_>>()?;
        let additive = joined.iter().find(|(h, i, j)| h.k != pool[*i].k + pool[*j].k);
        checks.push(
            Check::new(
                format!("Dirac {t}-join adds chi_{t}"),
                additive.is_none(),
                format!("{} operand pairs", joined.len()),
            )
            .with_witness(additive.map(|(h, _, _)| h.g.clone())),
        );
        let equivalent = joined.iter().find(|(h, i, j)| h.critical != (pool[*i].critical && pool[*j].critical));
        checks.push(
            Check::new(
                format!("Dirac {t}-join is critical iff both operands are"),
                equivalent.is_none(),
                format!(
                    "{} operand pairs, {} with both operands critical",
                    joined.len(),
                    joined.iter().filter(|(h, _, _)| h.critical).count()
                ),
            )
            .with_witness(equivalent.map(|(h, _, _)| h.g.clone())),
        );
        products.extend(joined.into_iter().filter(|(h, _, _)| h.critical).map(|(h, _, _)| (t, h.g)));
    }

    // Hajós 1-joins at t = 2, operands from Cri_2(2) and Cri_2(3).
    let mut operands: Vec<(u32, Multigraph)> = (2..=8).map(|n| cycle(n).map(|c| (2, c))).collect::<pointpart::Result<_>>()?;
    for n in 3..=5 {
        operands.extend(enumerate_critical(2, 3, n, &ctx.enumeration)?.graphs.into_iter().map(|g| (3, g)));
    }
    let mut specs = Vec::new();
    for (i, (k1, g1)) in operands.iter().enumerate() {
        for (k2, g2) in &operands[i..] {
            if k1 != k2 || g1.order() + g2.order() > 10 {
                continue;
            }
            let (u1, v1, _) = g1.pairs().next().expect("critical graphs have edges");
            let mut ends: Vec<(usize, usize)> = vec![];
            for (u, v, _) in [g2.pairs().next(), g2.pairs().last()].into_iter().flatten() {
                if !ends.contains(&(u, v)) {
                    ends.push((u, v));
                }
            }
            for (u2, v2) in ends {
                specs.push((*k1, HajosSpec { g1: g1.clone(), u1, v1, g2: g2.clone(), u2, v2, l: 1 }));
            }
        }
    }
    let k5 = complete(5)?;
    let k5_spec = HajosSpec { g1: k5.clone(), u1: 0, v1: 1, g2: k5, u2: 0, v2: 1, l: 1 };
    let hajos = hajos_checks("Hajos 1-join", 2, specs, solver, &mut products)?;
    checks.extend(hajos);

    let h = hajos_join(&k5_spec)?;
    let report = is_critical_with(&h, 2, solver)?;
    checks.push(
        Check::new(
            "K_5 Hajos-joined with K_5 lies in Cri_2(3,9)",
            report.is_critical && report.k == 3 && h.order() == 9,
            format!("order {}, chi_2 = {}, critical = {}", h.order(), report.k, report.is_critical),
        )
        .with_witness((!report.is_critical).then(|| h.clone())),
    );
    if report.is_critical {
        products.push((2, h));
    }

    // Hajós 2-joins at t = 2 over Cri_2(3) graphs with a doubled pair.
    let doubled: Vec<(Multigraph, usize, usize)> = operands
        .iter()
        .filter(|(k, _)| *k == 3)
        .filter_map(|(_, g)| g.pairs().find(|p| p.2 == 2).map(|(u, v, _)| (g.clone(), u, v)))
        .collect();
    let mut specs = Vec::new();
    for (i, (g1, u1, v1)) in doubled.iter().enumerate() {
        for (g2, u2, v2) in &doubled[i..] {
            if g1.order() + g2.order() <= 10 {
                specs.push((3, HajosSpec { g1: g1.clone(), u1: *u1, v1: *v1, g2: g2.clone(), u2: *u2, v2: *v2, l: 2 }));
            }
        }
    }
    checks.extend(hajos_checks("Hajos 2-join", 2, specs, solver, &mut products)?);

    let base = dirac_join(&complete(1)?, &complete(3)?, 2)?;
    let fixture = hajos_join(&HajosSpec { g1: base.clone(), u1: 1, v1: 0, g2: base, u2: 1, v2: 0, l: 2 })?;
    let report = is_critical_with(&fixture, 2, solver)?;
    checks.push(
        Check::new(
            "2-join of two copies of K_1 join K_3 lies in Cri_2(3)",
            report.is_critical && report.k == 3,
            format!("order {}, chi_2 = {}, critical = {}", fixture.order(), report.k, report.is_critical),
        )
        .with_witness((!report.is_critical).then(|| fixture.clone())),
    );

    let verdicts: Vec<Option<String>> = products
        .par_iter()
        .map(|(t, g)| Ok(verdict_message(check_theorem_a(g, *t)?.verdict)))
        .collect::<pointpart::Result<_>>()?;
    let failure = verdicts.iter().position(Option::is_some);
    let theorem_a = Check::new(
        "critical join products with n <= 2k-2 are t-decomposable",
        failure.is_none(),
        format!("{} graphs", products.len()),
    )
    .with_witness(failure.map(|i| products[i].1.clone()));
    checks.push(theorem_a);
    Ok((checks, products))
}

fn hajos_checks(
    label: &str,
    t: u32,
    specs: Vec<(u32, HajosSpec)>,
    solver: &SolverConfig,
    products: &mut Vec<(u32, Multigraph)>,
) -> Result<Vec<Check>, CliError> {
    struct Outcome {
        k: u32,
        h: Multigraph,
        chi: u32,
        critical: bool,
        edges_ok: bool,
    }
    let outcomes: Vec<Outcome> = specs
        .par_iter()
        .map(|(k, spec)| {
            let h = hajos_join(spec)?;
            let edges_ok = h.edge_count() + spec.l as u64 == spec.g1.edge_count() + spec.g2.edge_count()
                && h.order() + 1 == spec.g1.order() + spec.g2.order();
            let chi = chi_t_with(&h, t, solver)?.k;
            let critical = chi == *k && is_critical_given_k(&h, t, chi, solver)?;
            Ok(Outcome { k: *k, h, chi, critical, edges_ok })
        })
        .collect::<pointpart::Result<_>>()?;
    let count = outcomes.len();
    let bad_chi = outcomes.iter().find(|o| o.chi != o.k);
    let bad_crit = outcomes.iter().find(|o| !o.critical);
    let bad_edges = outcomes.iter().find(|o| !o.edges_ok);
    let checks = vec![
        Check::new(format!("{label} keeps chi_{t}"), bad_chi.is_none(), format!("{count} joins"))
            .with_witness(bad_chi.map(|o| o.h.clone())),
        Check::new(format!("{label} of critical graphs is critical"), bad_crit.is_none(), format!("{count} joins"))
            .with_witness(bad_crit.map(|o| o.h.clone())),
        Check::new(format!("{label} has e1 + e2 - l edges and n1 + n2 - 1 vertices"), bad_edges.is_none(), format!("{count} joins"))
            .with_witness(bad_edges.map(|o| o.h.clone())),
    ];
    products.extend(outcomes.into_iter().filter(|o| o.critical).map(|o| (t, o.h)));
    Ok(checks)
}
