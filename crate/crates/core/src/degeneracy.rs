//! Membership in `SD_t`, the strictly `t`-degenerate graphs, by peeling.
//!
//! A graph is strictly `t`-degenerate iff repeatedly deleting a vertex of
//! current degree at most `t - 1` empties it. Only the threshold matters, so
//! the bucket queue collapses to one ordered set of removable vertices;
//! popping its minimum gives the smallest-index tie break.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// Witness for (non-)membership in `SD_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelCertificate {
    pub verdict: bool,
    /// Elimination order; complete iff `verdict`.
    pub order: Vec<usize>,
    /// The `t`-core: the largest vertex set inducing minimum degree `>= t`.
    /// Empty iff `verdict`.
    pub core: VertexSet,
}

fn check_t(t: u32) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroT)
    } else {
        Ok(())
    }
}

/// Peels `G[set]` and returns the certificate. Vertex indices stay those of `g`.
pub fn peel_within(g: &Multigraph, t: u32, set: VertexSet) -> PeelCertificate {
    let mut degree = vec![0u32; g.order()];
    let mut removable = BTreeSet::new();
    for v in set {
        degree[v] = g.degree_into(v, set);
        if degree[v] < t {
            removable.insert(v);
        }
    }
    let mut left = set;
    let mut order = Vec::with_capacity(set.len());
    while let Some(v) = removable.pop_first() {
        left.remove(v);
        order.push(v);
        for u in left {
            let m = g.mult(u, v);
            if m > 0 {
                let was_high = degree[u] >= t;
                degree[u] -= m;
                if was_high && degree[u] < t {
                    removable.insert(u);
                }
            }
        }
    }
    PeelCertificate { verdict: left.is_empty(), order, core: left }
}

/// Decides `G ∈ SD_t`.
pub fn strictly_t_degenerate(g: &Multigraph, t: u32) -> Result<PeelCertificate> {
    check_t(t)?;
    Ok(peel_within(g, t, g.vertices()))
}

/// Verdict only, without allocating a certificate. `t >= 1` is assumed.
pub(crate) fn is_sd_within(g: &Multigraph, t: u32, set: VertexSet) -> bool {
    let mut left = set;
    loop {
        let low = left.iter().find(|&v| g.degree_into(v, left) < t);
        match low {
            Some(v) => left.remove(v),
            None => return left.is_empty(),
        }
    }
}

/// Incremental `SD_t` check for a growing vertex set, used when a colouring
/// search adds vertices to a class one at a time.
///
/// Adding `v` to a strictly `t`-degenerate set keeps it so when `v` has fewer
/// than `t` edges into the enlarged set (peel `v` first). Adding anything to a
/// set that is not strictly `t`-degenerate keeps it that way. Only the
/// remaining case re-peels.
#[derive(Debug, Clone)]
pub struct IncrementalPeel<'a> {
    g: &'a Multigraph,
    t: u32,
    set: VertexSet,
    verdict: bool,
}

impl<'a> IncrementalPeel<'a> {
    pub fn new(g: &'a Multigraph, t: u32) -> Result<Self> {
        check_t(t)?;
        Ok(IncrementalPeel { g, t, set: VertexSet::EMPTY, verdict: true })
    }

    pub fn set(&self) -> VertexSet {
        self.set
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }

    /// Whether `set ∪ {v}` would be strictly `t`-degenerate.
    pub fn would_accept(&self, v: usize) -> bool {
        accepts(self.g, self.t, self.set, self.verdict, v)
    }

    /// Adds `v` and returns the new verdict.
    pub fn add(&mut self, v: usize) -> bool {
        self.verdict = self.would_accept(v);
        self.set.insert(v);
        self.verdict
    }

    /// Full certificate for the current set.
    pub fn certificate(&self) -> PeelCertificate {
        peel_within(self.g, self.t, self.set)
    }
}

/// Whether `set ∪ {v}` is in `SD_t`, given the verdict for `set`.
#[inline]
pub(crate) fn accepts(g: &Multigraph, t: u32, set: VertexSet, set_ok: bool, v: usize) -> bool {
    if !set_ok {
        return false;
    }
    if set.contains(v) || g.degree_into(v, set) < t {
        return true;
    }
    is_sd_within(g, t, set.with(v))
}

/// Peeling certificate of `G`, computed by feeding vertices one at a time
/// through [`IncrementalPeel`]; the verdict always agrees with
/// [`strictly_t_degenerate`].
pub fn peel_order_greedy(g: &Multigraph, t: u32) -> Result<PeelCertificate> {
    let mut inc = IncrementalPeel::new(g, t)?;
    for v in 0..g.order() {
        inc.add(v);
    }
    if inc.verdict() {
        Ok(inc.certificate())
    } else {
        // Certificates are canonical, so defer to the full peel for the core.
        Ok(peel_within(g, t, g.vertices()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, s_clique};

    /// Definition: some non-empty induced subgraph has minimum degree >= t.
    fn brute_sd(g: &Multigraph, t: u32) -> bool {
        let n = g.order();
        (1u64..1 << n).all(|bits| {
            let s = VertexSet::from_bits(bits);
            s.iter().any(|v| g.degree_into(v, s) < t)
        })
    }

    fn check_certificate(g: &Multigraph, t: u32, c: &PeelCertificate) {
        if c.verdict {
            let mut left = g.vertices();
            assert_eq!(c.order.len(), g.order());
            for &v in &c.order {
                assert!(g.degree_into(v, left) < t);
                left.remove(v);
            }
            assert!(c.core.is_empty());
        } else {
            assert!(!c.core.is_empty());
            assert!(c.core.iter().all(|v| g.degree_into(v, c.core) >= t));
        }
    }

    #[test]
    fn examples() {
        let c = strictly_t_degenerate(&complete(3).unwrap(), 2).unwrap();
        assert!(!c.verdict);
        assert_eq!(c.core, VertexSet::full(3));

        let p = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = strictly_t_degenerate(&p, 2).unwrap();
        assert!(c.verdict);
        assert_eq!(c.order, vec![0, 1, 2]);

        for t in 1..5 {
            assert!(!strictly_t_degenerate(&s_clique(t, 2).unwrap(), t).unwrap().verdict);
        }
        assert!(strictly_t_degenerate(&Multigraph::new(4).unwrap(), 1).unwrap().verdict);
        let e = strictly_t_degenerate(&Multigraph::empty(), 3).unwrap();
        assert!(e.verdict && e.order.is_empty());
        assert_eq!(strictly_t_degenerate(&p, 0).unwrap_err(), Error::ZeroT);
        assert_eq!(peel_order_greedy(&p, 0).unwrap_err(), Error::ZeroT);
    }

    #[test]
    fn core_is_t_core() {
        // Triangle with a pendant path: the 2-core is the triangle.
        let g = Multigraph::from_simple_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let c = strictly_t_degenerate(&g, 2).unwrap();
        assert_eq!(c.core.to_vec(), vec![0, 1, 2]);
        assert_eq!(c.order, vec![4, 3]);
    }

    #[test]
    fn incremental_examples() {
        // Third mutually adjacent vertex on a 2-path closes a triangle.
        let k3 = complete(3).unwrap();
        let mut inc = IncrementalPeel::new(&k3, 2).unwrap();
        assert!(inc.add(0));
        assert!(inc.add(1));
        assert!(!inc.add(2));

        // Isolated vertices never change the verdict.
        let g = Multigraph::from_simple_edges(4, &[(0, 1)]).unwrap();
        let mut inc = IncrementalPeel::new(&g, 1).unwrap();
        assert!(inc.add(2));
        assert!(inc.add(0));
        assert!(!inc.add(1));
        assert!(!inc.add(3));

        // C_4 edge by edge.
        let mut g = Multigraph::new(4).unwrap();
        let mut verdicts = Vec::new();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            g.add_edges(u, v, 1).unwrap();
            verdicts.push(peel_order_greedy(&g, 2).unwrap().verdict);
        }
        assert_eq!(verdicts, vec![true, true, true, false]);
        assert_eq!(g, cycle(4).unwrap());
    }

    #[test]
    fn exhaustive_oracle_equivalence() {
        // All multigraphs with n <= 5 and multiplicities <= 2.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let total = 3usize.pow(pairs.len() as u32);
            for code in 0..total {
                let mut g = Multigraph::new(n).unwrap();
                let mut c = code;
                for &(u, v) in &pairs {
                    g.set_mult(u, v, (c % 3) as u32).unwrap();
                    c /= 3;
                }
                for t in 1..=3 {
                    let expected = brute_sd(&g, t);
                    let cert = strictly_t_degenerate(&g, t).unwrap();
                    assert_eq!(cert.verdict, expected, "{g:?} t={t}");
                    check_certificate(&g, t, &cert);
                    assert_eq!(peel_order_greedy(&g, t).unwrap().verdict, expected);
                    if expected {
                        assert!(strictly_t_degenerate(&g, t + 1).unwrap().verdict);
                    }
                }
            }
        }
    }
}
