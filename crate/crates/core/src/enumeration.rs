//! Exhaustive generation of `Cri_t(k, n)` up to isomorphism.
//!
//! Multiplicities are assigned to the pairs `(0,1), (0,2), .., (n-2,n-1)` in
//! lexicographic order. When row `i` is complete the degree of vertex `i` is
//! final, so the search enforces `d(0) >= d(1) >= ..` (every isomorphism
//! class has such a labelling) and `d(i) >= t(k-1)`, and prunes any vertex
//! whose degree can no longer reach `t(k-1)` or already exceeds its
//! predecessor's. Multiplicities are capped at `min(m, t)`, since critical
//! graphs have `μ <= t`.
//!
//! Leaves are filtered cheapest first: connectivity, no cut vertex when
//! `t <= 2`, isomorphism dedup by canonical label, then exact solves.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{colorable, SolverConfig};
use crate::criticality::is_critical_given_k;
use crate::decomposition::{t_dominating_census, Verdict};
use crate::error::{Error, Result};
use crate::multigraph::{CanonicalLabel, Multigraph};

/// Default node budget for one enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Largest order the enumerator accepts; canonical labels are computed up to it.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    /// Multiplicity cap; `None` means `t`.
    pub m: Option<u32>,
    pub node_budget: u64,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { m: None, node_budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub t: u32,
    pub k: u32,
    pub n: usize,
    pub m: u32,
    /// Canonical representatives, sorted by canonical label.
    pub graphs: Vec<Multigraph>,
    /// Least edge count, `None` for an empty class.
    pub ext: Option<u64>,
    /// Members attaining `ext`, in the same order.
    pub extremal: Vec<Multigraph>,
    /// Search nodes spent.
    pub nodes: u64,
}

fn check_params(t: u32, n: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroT);
    }
    if n == 0 {
        return Err(Error::OutOfRange("enumeration needs n >= 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CanonicalBound { order: n, bound: MAX_ENUMERATION_ORDER });
    }
    Ok(())
}

/// Whether `g` lies in `Cri_t(k)`, given that it is connected.
fn in_class(g: &Multigraph, t: u32, k: u32) -> Result<bool> {
    let config = SolverConfig::default();
    if k >= 1 && colorable(g, t, k as usize - 1, &config)?.is_some() {
        return Ok(false);
    }
    // With χ_t >= k, (k-1)-colourable edge deletions force χ_t = k.
    is_critical_given_k(g, t, k, &config)
}

struct Budget<'a> {
    spent: &'a AtomicU64,
    limit: u64,
    pending: u64,
}

impl Budget<'_> {
    const BATCH: u64 = 1 << 12;

    fn tick(&mut self) -> Result<()> {
        self.pending += 1;
        if self.pending == Self::BATCH {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.spent.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total > self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        Ok(())
    }
}

struct Search<'a> {
    t: u32,
    k: u32,
    n: usize,
    cap: u32,
    dmin: u32,
    pairs: &'a [(usize, usize)],
    forced: &'a [u32],
    g: Multigraph,
    partial: Vec<u32>,
    remaining: Vec<u32>,
    degree: Vec<u32>,
    budget: Budget<'a>,
    seen: HashSet<CanonicalLabel>,
    found: Vec<(CanonicalLabel, Multigraph)>,
}

impl Search<'_> {
    fn vertex_ok(&self, v: usize, row: usize) -> bool {
        if self.partial[v] + self.cap * self.remaining[v] < self.dmin {
            return false;
        }
        row == 0 || self.partial[v] <= self.degree[row - 1]
    }

    fn row_done(&mut self, i: usize) -> bool {
        let d = self.partial[i];
        self.degree[i] = d;
        (i + 1..self.n).all(|w| self.partial[w] <= d)
    }

    fn run(&mut self, idx: usize) -> Result<()> {
        if idx == self.pairs.len() {
            return self.leaf();
        }
        let (i, j) = self.pairs[idx];
        let (lo, hi) = match self.forced.get(idx) {
            Some(&m) => (m, m),
            None => (0, self.cap),
        };
        self.remaining[i] -= 1;
        self.remaining[j] -= 1;
        for m in lo..=hi {
            self.budget.tick()?;
            self.partial[i] += m;
            self.partial[j] += m;
            self.g.set_mult_raw(i, j, m);
            let ok = self.vertex_ok(i, i) && self.vertex_ok(j, i) && (j + 1 < self.n || self.row_done(i));
            if ok {
                self.run(idx + 1)?;
            }
            self.partial[i] -= m;
            self.partial[j] -= m;
        }
        self.g.set_mult_raw(i, j, 0);
        self.remaining[i] += 1;
        self.remaining[j] += 1;
        Ok(())
    }

    fn leaf(&mut self) -> Result<()> {
        let g = &self.g;
        if g.min_degree().unwrap_or(0) < self.dmin || !g.is_connected() {
            return Ok(());
        }
        if self.t <= 2 && self.n >= 3 && !g.cut_vertices().is_empty() {
            return Ok(());
        }
        let (label, canon) = g.canonical_pair(MAX_ENUMERATION_ORDER)?;
        if !self.seen.insert(label.clone()) {
            return Ok(());
        }
        if in_class(&canon, self.t, self.k)? {
            self.found.push((label, canon));
        }
        Ok(())
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn finish(t: u32, k: u32, n: usize, m: u32, found: BTreeMap<CanonicalLabel, Multigraph>, nodes: u64) -> EnumerationResult {
    let graphs: Vec<Multigraph> = found.into_values().collect();
    let ext = graphs.iter().map(Multigraph::edge_count).min();
    let extremal = graphs.iter().filter(|g| Some(g.edge_count()) == ext).cloned().collect();
    EnumerationResult { t, k, n, m, graphs, ext, extremal, nodes }
}

/// `Cri_t(k, n) ∩ MG_m` up to isomorphism. Work is split over the current
/// rayon pool by the multiplicities of the first few pairs; the result does
/// not depend on the number of workers.
pub fn enumerate_critical(t: u32, k: u32, n: usize, config: &EnumerationConfig) -> Result<EnumerationResult> {
    check_params(t, n)?;
    let m = config.m.unwrap_or(t);
    let cap = m.min(t);
    let pairs = pair_list(n);
    let split = pairs.len().min(3);
    let prefixes: Vec<Vec<u32>> = (0..(cap as usize + 1).pow(split as u32))
        .map(|mut code| {
            (0..split)
                .map(|_| {
                    let x = (code % (cap as usize + 1)) as u32;
                    code /= cap as usize + 1;
                    x
                })
                .collect()
        })
        .collect();
    let spent = AtomicU64::new(0);
    let parts: Vec<Vec<(CanonicalLabel, Multigraph)>> = prefixes
        .par_iter()
        .map(|forced| {
            let mut s = Search {
                t,
                k,
                n,
                cap,
                dmin: t * k.saturating_sub(1),
                pairs: &pairs,
                forced,
                g: Multigraph::new(n)?,
                partial: vec![0; n],
                remaining: vec![n as u32 - 1; n],
                degree: vec![0; n],
                budget: Budget { spent: &spent, limit: config.node_budget, pending: 0 },
                seen: HashSet::new(),
                found: Vec::new(),
            };
            s.run(0)?;
            s.budget.flush()?;
            Ok(s.found)
        })
        .collect::<Result<_>>()?;
    let found: BTreeMap<CanonicalLabel, Multigraph> = parts.into_iter().flatten().collect();
    Ok(finish(t, k, n, m, found, spent.load(Ordering::Relaxed)))
}

/// Reference enumerator: every multiplicity assignment with entries in
/// `0..=m`, filtered only at the end. Refuses more than `max_leaves` leaves.
pub fn enumerate_critical_naive(t: u32, k: u32, n: usize, m: u32, max_leaves: u64) -> Result<EnumerationResult> {
    check_params(t, n)?;
    let pairs = pair_list(n);
    let base = m as u64 + 1;
    let leaves = base.checked_pow(pairs.len() as u32).filter(|&l| l <= max_leaves);
    let Some(leaves) = leaves else {
        return Err(Error::BudgetExceeded(max_leaves));
    };
    let found: BTreeMap<CanonicalLabel, Multigraph> = (0..leaves)
        .into_par_iter()
        .map(|mut code| {
            let mut g = Multigraph::new(n)?;
            for &(u, v) in &pairs {
                g.set_mult(u, v, (code % base) as u32)?;
                code /= base;
            }
            if !g.is_connected() {
                return Ok(None);
            }
            let chi = crate::coloring::chi_t(&g, t)?.0;
            if chi != k || !is_critical_given_k(&g, t, k, &SolverConfig::default())? {
                return Ok(None);
            }
            Ok(Some(g.canonical_pair(MAX_ENUMERATION_ORDER)?))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(finish(t, k, n, m, found, leaves))
}

/// `ext_t(k, n, m)` and the extremal graphs; `None` for an empty class.
pub fn ext(t: u32, k: u32, n: usize, config: &EnumerationConfig) -> Result<(Option<u64>, Vec<Multigraph>)> {
    let r = enumerate_critical(t, k, n, config)?;
    Ok((r.ext, r.extremal))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem85Report {
    pub t: u32,
    pub k: u32,
    pub n: usize,
    /// `t C(n,2) - t p^2`.
    pub bound: u64,
    /// Size of `Cri_t(k, n)`.
    pub class_size: usize,
    /// Members with census `(0, 0)` and their edge counts.
    pub checked: Vec<(Multigraph, u64)>,
    pub verdict: Verdict,
}

/// Edge bound for members of `Cri_t(k, n)` without a `t`-dominating
/// subgraph in `Cri_t(1) ∪ Cri_t(2)`, where `n = k + p`, `2 <= p <= k-2`.
pub fn verify_theorem_8_5(t: u32, k: u32, n: usize, config: &EnumerationConfig) -> Result<Theorem85Report> {
    let p = n as i64 - k as i64;
    if p < 2 || p > k as i64 - 2 {
        return Err(Error::OutOfRange(format!("needs 2 <= n - k <= k - 2 (got k={k}, n={n})")));
    }
    let r = enumerate_critical(t, k, n, config)?;
    let bound = (t as u64) * (n * (n - 1) / 2) as u64 - t as u64 * (p * p) as u64;
    let mut checked = Vec::new();
    for g in &r.graphs {
        if t_dominating_census(g, t)? == (0, 0) {
            checked.push((g.clone(), g.edge_count()));
        }
    }
    let verdict = match checked.iter().find(|(_, e)| *e < bound) {
        Some((g, e)) => Verdict::Violation(format!("{g:?} has {e} edges, below {bound}")),
        None => Verdict::Holds,
    };
    Ok(Theorem85Report { t, k, n, bound, class_size: r.graphs.len(), checked, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, dirac_join, s_clique};

    fn class(t: u32, k: u32, n: usize) -> Vec<Multigraph> {
        enumerate_critical(t, k, n, &EnumerationConfig::default()).unwrap().graphs
    }

    fn same_class(got: &[Multigraph], expected: &[Multigraph]) -> bool {
        let mut a: Vec<_> = got.iter().map(|g| g.canonical_form().unwrap()).collect();
        let mut b: Vec<_> = expected.iter().map(|g| g.canonical_form().unwrap()).collect();
        a.sort();
        b.sort();
        a == b
    }

    #[test]
    fn uniform_cliques_are_alone() {
        for t in 1..=3 {
            for k in 1..=4 {
                assert!(same_class(&class(t, k, k as usize), &[s_clique(t, k as usize).unwrap()]));
            }
        }
    }

    #[test]
    fn cycles() {
        for n in 2..=5 {
            assert!(same_class(&class(2, 2, n), &[cycle(n).unwrap()]));
        }
        for n in 3..=6 {
            let expected: Vec<Multigraph> = if n % 2 == 1 { vec![cycle(n).unwrap()] } else { vec![] };
            assert!(same_class(&class(1, 3, n), &expected));
        }
    }

    #[test]
    fn one_above_clique_order() {
        let g = dirac_join(&complete(1).unwrap(), &complete(3).unwrap(), 2).unwrap();
        let r = enumerate_critical(2, 3, 4, &EnumerationConfig::default()).unwrap();
        assert!(same_class(&r.graphs, &[g]));
        assert_eq!(r.ext, Some(9));
        for k in 3..=4 {
            let r = enumerate_critical(1, k, k as usize + 1, &EnumerationConfig::default()).unwrap();
            assert!(r.graphs.is_empty() && r.ext.is_none());
        }
    }

    #[test]
    fn critical_triangles() {
        // (a, t-a, t-a) with 1 <= a <= t/2; only a = t/2 (or (t-1)/2) is K_3(t).
        for t in 2..=5u32 {
            let expected: Vec<Multigraph> = (1..=t / 2)
                .map(|a| Multigraph::from_edges(3, &[(0, 1, a), (0, 2, t - a), (1, 2, t - a)]).unwrap())
                .collect();
            assert!(same_class(&class(t, 2, 3), &expected), "t={t}");
            assert!(class(t, 2, 3).iter().any(|g| g.is_isomorphic(&crate::constructions::k3t(t).unwrap()).unwrap()));
        }
        let slow = enumerate_critical_naive(4, 2, 3, 4, 1000).unwrap();
        assert_eq!(slow.graphs, class(4, 2, 3));
    }

    #[test]
    fn pruned_matches_naive() {
        for (t, k, n) in [(1, 3, 5), (1, 4, 5), (2, 2, 4), (2, 3, 4), (2, 3, 5), (3, 2, 3), (3, 3, 4), (1, 2, 4)] {
            let fast = enumerate_critical(t, k, n, &EnumerationConfig::default()).unwrap();
            let slow = enumerate_critical_naive(t, k, n, t, 10_000_000).unwrap();
            assert_eq!(fast.graphs, slow.graphs, "t={t} k={k} n={n}");
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let a = one.install(|| enumerate_critical(2, 3, 5, &EnumerationConfig::default()).unwrap());
        let b = enumerate_critical(2, 3, 5, &EnumerationConfig::default()).unwrap();
        assert_eq!(a.graphs, b.graphs);
    }

    #[test]
    fn budget_and_parameter_errors() {
        let tight = EnumerationConfig { m: None, node_budget: 10 };
        assert_eq!(enumerate_critical(2, 3, 5, &tight).unwrap_err(), Error::BudgetExceeded(10));
        assert!(enumerate_critical(2, 3, 0, &EnumerationConfig::default()).is_err());
        assert!(enumerate_critical_naive(2, 3, 6, 2, 1000).is_err());
        assert!(verify_theorem_8_5(2, 3, 5, &EnumerationConfig::default()).is_err());
    }

    #[test]
    fn multiplicity_cap() {
        // With m = 1 at t = 2, only simple graphs remain: K_3 but not 2K_2.
        let cfg = EnumerationConfig { m: Some(1), ..Default::default() };
        assert!(enumerate_critical(2, 2, 2, &cfg).unwrap().graphs.is_empty());
        assert_eq!(enumerate_critical(2, 2, 3, &cfg).unwrap().graphs.len(), 1);
    }
}
