//! Enumeration of optimal colourings, one per class partition, and
//! `v`-extreme colourings.
//!
//! Vertices are coloured in index order and a vertex may only open the next
//! unused colour, so every partition appears once, coloured by the rank of
//! its least vertex.

use std::ops::ControlFlow;

use super::solver::chi_t;
use super::Coloring;
use crate::degeneracy::accepts;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// Node budget for one enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

struct Walk<'a, F> {
    g: &'a Multigraph,
    t: u32,
    k: usize,
    classes: Vec<VertexSet>,
    assignment: Vec<u32>,
    nodes: u64,
    budget: u64,
    visit: F,
}

impl<F: FnMut(&Coloring) -> ControlFlow<()>> Walk<'_, F> {
    fn run(&mut self, v: usize) -> Result<ControlFlow<()>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let n = self.g.order();
        if v == n {
            if self.classes.len() == self.k {
                return Ok((self.visit)(&Coloring::new(self.assignment.clone(), self.t)));
            }
            return Ok(ControlFlow::Continue(()));
        }
        // Every remaining vertex could at best open one more class.
        if self.classes.len() + (n - v) < self.k {
            return Ok(ControlFlow::Continue(()));
        }
        for i in 0..self.classes.len() {
            if accepts(self.g, self.t, self.classes[i], true, v) {
                self.classes[i].insert(v);
                self.assignment[v] = i as u32 + 1;
                let flow = self.run(v + 1)?;
                self.classes[i].remove(v);
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(VertexSet::singleton(v));
            self.assignment[v] = self.classes.len() as u32;
            let flow = self.run(v + 1)?;
            self.classes.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Calls `visit` on each optimal colouring (one per partition) until it
/// breaks, and returns `χ_t(G)`. Colourings are visited in lexicographic
/// order of their normalized assignment.
pub fn for_each_optimal_coloring<F>(g: &Multigraph, t: u32, budget: u64, visit: F) -> Result<u32>
where
    F: FnMut(&Coloring) -> ControlFlow<()>,
{
    let (k, _) = chi_t(g, t)?;
    let mut walk = Walk {
        g,
        t,
        k: k as usize,
        classes: Vec::with_capacity(k as usize),
        assignment: vec![0; g.order()],
        nodes: 0,
        budget,
        visit,
    };
    let _ = walk.run(0)?;
    Ok(k)
}

/// All optimal colourings, one per partition, within the default budget.
pub fn enumerate_optimal_colorings(g: &Multigraph, t: u32) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    for_each_optimal_coloring(g, t, DEFAULT_ENUMERATION_BUDGET, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// An optimal colouring with `v` in a singleton class and as few singleton
/// classes as possible.
pub fn extreme_coloring(g: &Multigraph, t: u32, v: usize) -> Result<Coloring> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let (k, _) = chi_t(g, t)?;
    let (k_minus, _) = chi_t(&g.delete_vertex(v)?, t)?;
    if k_minus >= k {
        return Err(Error::NoExtremeColoring(v));
    }
    let mut best: Option<(usize, Coloring)> = None;
    for_each_optimal_coloring(g, t, DEFAULT_ENUMERATION_BUDGET, |c| {
        let single = c.singletons();
        if single.contains(v) && best.as_ref().is_none_or(|(s, _)| single.len() < *s) {
            best = Some((single.len(), c.clone()));
            if single.len() == 1 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    // χ_t(G - v) < χ_t(G) guarantees an optimal colouring isolating v.
    Ok(best.expect("an optimal colouring with v isolated exists").1)
}
