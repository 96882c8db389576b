//! Factorization through the `t`-complement.
//!
//! `G` is the Dirac `t`-join of the subgraphs induced by the components of
//! its `t`-complement, and of nothing finer: a cross pair of multiplicity `t`
//! is exactly a non-edge of the complement. These factors are reported in
//! canonical order together with the census `(p, q)`.
//!
//! The census counts factors rather than `t`-dominating subgraphs. A
//! `t`-dominating subgraph is a union of factors. One in `Cri_t(1)` is `K_1`,
//! a single factor. One in `Cri_t(2)` made of two or more factors has `χ_t`
//! summing to 2 over them, so it is `tK_2`, of order 2. Hence those of order
//! at least 3 are single factors too.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{chi_t_with, SolverConfig};
use crate::constructions::{dirac_join_all, k3t};
use crate::criticality::is_critical_given_k;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    /// Vertices of the factor, as indices of `G`.
    pub vertices: VertexSet,
    /// `G[vertices]`, re-indexed in increasing vertex order.
    pub graph: Multigraph,
    pub k: u32,
    pub n: usize,
    pub critical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub t: u32,
    pub factors: Vec<Factor>,
    /// Factors in `Cri_t(1)`, i.e. `K_1`.
    pub p: usize,
    /// Critical factors with `χ_t = 2` and order at least 3.
    pub q: usize,
}

impl DecompositionReport {
    /// Whether `G` is `t`-indecomposable (at most one factor).
    pub fn is_indecomposable(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Dirac `t`-join of the factors; isomorphic to the input graph.
    pub fn rejoin(&self) -> Result<Multigraph> {
        dirac_join_all(self.factors.iter().map(|f| &f.graph), self.t)
    }
}

/// Factor vertex sets: components of the `t`-complement.
pub fn factor_sets(g: &Multigraph, t: u32) -> Result<Vec<VertexSet>> {
    if t == 0 {
        return Err(Error::ZeroT);
    }
    Ok(g.t_complement(t)?.components())
}

pub fn decompose(g: &Multigraph, t: u32) -> Result<DecompositionReport> {
    decompose_with(g, t, &SolverConfig::default())
}

pub fn decompose_with(g: &Multigraph, t: u32, config: &SolverConfig) -> Result<DecompositionReport> {
    let sets = factor_sets(g, t)?;
    let mut factors: Vec<(crate::multigraph::CanonicalLabel, Factor)> = sets
        .into_par_iter()
        .map(|vertices| {
            let (graph, _) = g.induced_subgraph(vertices)?;
            let k = chi_t_with(&graph, t, config)?.k;
            let critical = is_critical_given_k(&graph, t, k, config)?;
            let label = graph.canonical_form_bounded(graph.order())?;
            Ok((label, Factor { vertices, n: graph.order(), graph, k, critical }))
        })
        .collect::<Result<_>>()?;
    factors.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.vertices.cmp(&b.1.vertices)));
    let factors: Vec<Factor> = factors.into_iter().map(|(_, f)| f).collect();
    let p = factors.iter().filter(|f| f.n == 1).count();
    let q = factors.iter().filter(|f| f.critical && f.k == 2 && f.n >= 3).count();
    Ok(DecompositionReport { t, factors, p, q })
}

/// `(p, q)`: factors isomorphic to `K_1`, and factors with `χ_t = 2` and
/// order at least 3.
pub fn t_dominating_census(g: &Multigraph, t: u32) -> Result<(usize, usize)> {
    let config = SolverConfig::default();
    let sets = factor_sets(g, t)?;
    let p = sets.iter().filter(|s| s.len() == 1).count();
    let mut q = 0;
    for s in sets.iter().filter(|s| s.len() >= 3) {
        let (h, _) = g.induced_subgraph(*s)?;
        if chi_t_with(&h, t, &config)?.k == 2 {
            q += 1;
        }
    }
    Ok((p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violation(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        *self == Verdict::Holds
    }
}

fn require_critical(g: &Multigraph, t: u32) -> Result<u32> {
    let config = SolverConfig::default();
    let k = chi_t_with(g, t, &config)?.k;
    if !is_critical_given_k(g, t, k, &config)? {
        return Err(Error::NotCritical);
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub n: usize,
    pub k: u32,
    pub factor_count: usize,
    /// `n <= 2k - 2`.
    pub hypothesis: bool,
    pub verdict: Verdict,
}

/// A critical graph of order at most `2χ_t - 2` must be `t`-decomposable.
pub fn check_theorem_a(g: &Multigraph, t: u32) -> Result<TheoremAReport> {
    let k = require_critical(g, t)?;
    let n = g.order();
    let factor_count = factor_sets(g, t)?.len();
    let hypothesis = n + 2 <= 2 * k as usize;
    let verdict = if hypothesis && factor_count < 2 {
        Verdict::Violation(format!("order {n} <= 2k-2 = {} but the graph is t-indecomposable", 2 * k as i64 - 2))
    } else {
        Verdict::Holds
    };
    Ok(TheoremAReport { n, k, factor_count, hypothesis, verdict })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem71Report {
    pub n: usize,
    pub k: u32,
    pub p: usize,
    pub q: usize,
    /// `3k - 2n`.
    pub bound_a: i64,
    /// `5k - 3n`.
    pub bound_b: i64,
    pub equality_a: bool,
    pub equality_b: bool,
    /// Every factor other than `K_1` is `K_3(t)`.
    pub shape_a: bool,
    /// Every factor with `χ_t = 2` is `K_3(t)` and every factor with
    /// `χ_t >= 3` lies in `Cri_t(3, 5)`.
    pub shape_b: bool,
    pub verdict: Verdict,
}

/// Checks `p >= 3k - 2n` and `2p + q >= 5k - 3n` on a critical graph, and that
/// equality holds exactly for the factor shapes that characterize it.
///
/// With no factor besides `K_1` (that is, `G = tK_k`), equality in the first
/// inequality holds for every `t`, including `t = 1`; the shape test is then
/// vacuously true.
pub fn check_theorem_7_1(g: &Multigraph, t: u32) -> Result<Theorem71Report> {
    let k = require_critical(g, t)?;
    let n = g.order();
    let report = decompose(g, t)?;
    let (p, q) = (report.p, report.q);
    let k3 = if t >= 2 { Some(k3t(t)?) } else { None };
    let is_k3t = |f: &Factor| -> Result<bool> {
        match &k3 {
            Some(h) => f.graph.is_isomorphic(h),
            None => Ok(false),
        }
    };
    let mut shape_a = true;
    let mut shape_b = true;
    for f in report.factors.iter().filter(|f| f.n > 1) {
        let triangle = is_k3t(f)?;
        shape_a &= triangle;
        shape_b &= if f.k == 2 { triangle } else { f.k == 3 && f.n == 5 };
    }
    let bound_a = 3 * k as i64 - 2 * n as i64;
    let bound_b = 5 * k as i64 - 3 * n as i64;
    let (p_i, q_i) = (p as i64, q as i64);
    let equality_a = p_i == bound_a;
    let equality_b = 2 * p_i + q_i == bound_b;
    let verdict = if p_i < bound_a {
        Verdict::Violation(format!("p = {p} < 3k - 2n = {bound_a}"))
    } else if 2 * p_i + q_i < bound_b {
        Verdict::Violation(format!("2p + q = {} < 5k - 3n = {bound_b}", 2 * p_i + q_i))
    } else if equality_a != shape_a {
        Verdict::Violation(format!("equality in p >= 3k - 2n is {equality_a} but the K_3(t) shape test is {shape_a}"))
    } else if equality_b != shape_b {
        Verdict::Violation(format!("equality in 2p + q >= 5k - 3n is {equality_b} but the shape test is {shape_b}"))
    } else {
        Verdict::Holds
    };
    Ok(Theorem71Report { n, k, p, q, bound_a, bound_b, equality_a, equality_b, shape_a, shape_b, verdict })
}
