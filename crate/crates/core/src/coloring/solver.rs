//! Exact `χ_t` by branch and bound.
//!
//! The decision procedure [`colorable`] assigns vertices most-constrained
//! first: at every node it counts, for each uncoloured vertex, the classes it
//! could still join without leaving `SD_t`, and branches on a vertex with the
//! fewest options. A vertex may open at most one new class, which removes the
//! colour-permutation symmetry. The only pruning is infeasibility of the
//! partial assignment.
//!
//! [`chi_t_with`] solves each component separately, seeds the incumbent with
//! the greedy colouring, caps connected components by the Brooks-type bound,
//! then tightens the colour count one step at a time until the decision
//! procedure fails.

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::degeneracy::{accepts, is_sd_within};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Abort with [`Error::BudgetExceeded`] after this many search nodes.
    pub node_budget: Option<u64>,
}

impl SolverConfig {
    pub fn with_budget(budget: u64) -> Self {
        SolverConfig { node_budget: Some(budget) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    pub k: u32,
    pub witness: Coloring,
    /// Search nodes spent.
    pub nodes: u64,
}

struct Counter {
    nodes: u64,
    budget: Option<u64>,
}

impl Counter {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(Error::BudgetExceeded(b)),
            _ => Ok(()),
        }
    }
}

fn check_t(t: u32) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroT)
    } else {
        Ok(())
    }
}

/// Greedy `SD_t`-colouring: each vertex, in index order, joins the first
/// class that stays strictly `t`-degenerate, or opens a new one.
pub fn greedy_coloring(g: &Multigraph, t: u32) -> Result<Coloring> {
    check_t(t)?;
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut assignment = vec![0; g.order()];
    for v in 0..g.order() {
        let slot = classes.iter().position(|&c| accepts(g, t, c, true, v));
        let slot = slot.unwrap_or_else(|| {
            classes.push(VertexSet::EMPTY);
            classes.len() - 1
        });
        classes[slot].insert(v);
        assignment[v] = slot as u32 + 1;
    }
    Ok(Coloring::new(assignment, t))
}

/// Number of colours used by [`greedy_coloring`]; an upper bound on `χ_t`.
pub fn greedy_upper_bound(g: &Multigraph, t: u32) -> Result<u32> {
    Ok(greedy_coloring(g, t)?.color_count() as u32)
}

/// `⌈Δ/t⌉ + 1` for a connected non-empty graph.
pub fn brooks_upper_bound(g: &Multigraph, t: u32) -> Result<u32> {
    check_t(t)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.max_degree().unwrap().div_ceil(t) + 1)
}

struct Search<'a> {
    g: &'a Multigraph,
    t: u32,
    k: usize,
    classes: Vec<VertexSet>,
    color: Vec<usize>,
    uncolored: VertexSet,
    counter: &'a mut Counter,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    fn options(&self, v: usize) -> (usize, bool) {
        // Feasible existing classes as a bitmask, and whether a new class is allowed.
        let mut mask = 0usize;
        for (i, &c) in self.classes.iter().enumerate() {
            if accepts(self.g, self.t, c, true, v) {
                mask |= 1 << i;
            }
        }
        (mask, self.classes.len() < self.k)
    }

    fn run(&mut self) -> Result<bool> {
        self.counter.tick()?;
        if self.uncolored.is_empty() {
            return Ok(true);
        }
        // Most constrained vertex; ties go to higher degree into uncoloured
        // vertices, then to the smaller index.
        let mut best: Option<(usize, u32, usize, usize, bool)> = None;
        for v in self.uncolored {
            let (mask, fresh) = self.options(v);
            let count = mask.count_ones() as usize + fresh as usize;
            if count == 0 {
                return Ok(false);
            }
            let deg = self.g.degree_into(v, self.uncolored);
            let better = match best {
                None => true,
                Some((c, d, _, _, _)) => count < c || (count == c && deg > d),
            };
            if better {
                best = Some((count, deg, v, mask, fresh));
            }
        }
        let (_, _, v, mask, fresh) = best.unwrap();
        self.uncolored.remove(v);
        for i in 0..self.classes.len() {
            if mask >> i & 1 == 1 {
                self.classes[i].insert(v);
                self.color[v] = i;
                if self.run()? {
                    return Ok(true);
                }
                self.classes[i].remove(v);
            }
        }
        if fresh {
            self.classes.push(VertexSet::singleton(v));
            self.color[v] = self.classes.len() - 1;
            if self.run()? {
                return Ok(true);
            }
            self.classes.pop();
        }
        self.color[v] = NONE;
        self.uncolored.insert(v);
        Ok(false)
    }
}

fn colorable_counted(g: &Multigraph, t: u32, k: usize, counter: &mut Counter) -> Result<Option<Coloring>> {
    if g.is_empty() {
        return Ok(Some(Coloring::new(Vec::new(), t)));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search {
        g,
        t,
        k,
        classes: Vec::with_capacity(k),
        color: vec![NONE; g.order()],
        uncolored: g.vertices(),
        counter,
    };
    if s.run()? {
        let assignment = s.color.iter().map(|&c| c as u32 + 1).collect();
        Ok(Some(Coloring::new(assignment, t)))
    } else {
        Ok(None)
    }
}

/// An `SD_t`-colouring with at most `k` colours, if one exists.
pub fn colorable(g: &Multigraph, t: u32, k: usize, config: &SolverConfig) -> Result<Option<Coloring>> {
    check_t(t)?;
    let mut counter = Counter { nodes: 0, budget: config.node_budget };
    colorable_counted(g, t, k, &mut counter)
}

fn chi_connected(g: &Multigraph, t: u32, counter: &mut Counter) -> Result<(u32, Coloring)> {
    if is_sd_within(g, t, g.vertices()) {
        return Ok((1, Coloring::new(vec![1; g.order()], t)));
    }
    let greedy = greedy_coloring(g, t)?;
    let mut best_k = greedy.color_count();
    let mut best = greedy;
    let cap = brooks_upper_bound(g, t)? as usize;
    if cap < best_k {
        best = colorable_counted(g, t, cap, counter)?
            .expect("the Brooks-type bound always admits a colouring");
        best_k = best.color_count();
    }
    while best_k > 2 {
        match colorable_counted(g, t, best_k - 1, counter)? {
            Some(c) => {
                best_k = c.color_count();
                best = c;
            }
            None => break,
        }
    }
    Ok((best_k as u32, best))
}

/// `χ_t(G)` with a witness colouring using exactly `χ_t(G)` colours.
pub fn chi_t(g: &Multigraph, t: u32) -> Result<(u32, Coloring)> {
    let r = chi_t_with(g, t, &SolverConfig::default())?;
    Ok((r.k, r.witness))
}

pub fn chi_t_with(g: &Multigraph, t: u32, config: &SolverConfig) -> Result<ChiResult> {
    check_t(t)?;
    let mut counter = Counter { nodes: 0, budget: config.node_budget };
    let mut assignment = vec![0; g.order()];
    let mut k = 0;
    for comp in g.components() {
        let (h, map) = g.induced_subgraph(comp)?;
        let (kc, c) = chi_connected(&h, t, &mut counter)?;
        k = k.max(kc);
        for (i, &v) in map.iter().enumerate() {
            assignment[v] = c.assignment[i];
        }
    }
    Ok(ChiResult { k, witness: Coloring::new(assignment, t), nodes: counter.nodes })
}
