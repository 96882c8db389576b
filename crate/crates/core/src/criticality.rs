//! `χ_t`-criticality, vertex-criticality, critical subgraphs, and the
//! low-vertex and Brooks-type structure checks.
//!
//! For `k >= 2`, `G` is critical iff `δ(G) >= 1` and deleting any single edge
//! lowers `χ_t`. Deleting one parallel edge gives the same multigraph whichever
//! edge of the bundle is named, so one solve per adjacent pair suffices.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{chi_t_with, colorable, Coloring, SolverConfig};
use crate::degeneracy::is_sd_within;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// A `(k-1)`-colouring of `G - e` for one edge `e` of the pair `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub u: usize,
    pub v: usize,
    pub coloring: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: u32,
    pub is_critical: bool,
    pub is_vertex_critical: bool,
    /// One entry per adjacent pair whose single-edge deletion lowers `χ_t`,
    /// in lexicographic pair order.
    pub edge_witnesses: Vec<EdgeWitness>,
    /// Least pair whose single-edge deletion keeps `χ_t`.
    pub failing_edge: Option<(usize, usize)>,
}

fn check_t(t: u32) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroT)
    } else {
        Ok(())
    }
}

fn chi(g: &Multigraph, t: u32, config: &SolverConfig) -> Result<u32> {
    Ok(chi_t_with(g, t, config)?.k)
}

/// Full criticality report with the default solver configuration.
pub fn is_critical(g: &Multigraph, t: u32) -> Result<CriticalityReport> {
    is_critical_with(g, t, &SolverConfig::default())
}

/// Full criticality report. Per-pair solves run on the current rayon pool.
pub fn is_critical_with(g: &Multigraph, t: u32, config: &SolverConfig) -> Result<CriticalityReport> {
    check_t(t)?;
    let k = chi(g, t, config)?;
    let pairs: Vec<(usize, usize, u32)> = g.pairs().collect();
    let outcomes: Vec<Option<Coloring>> = if k >= 2 {
        pairs
            .par_iter()
            .map(|&(u, v, _)| colorable(&g.delete_edge(u, v)?, t, k as usize - 1, config))
            .collect::<Result<_>>()?
    } else {
        vec![None; pairs.len()]
    };
    let mut edge_witnesses = Vec::new();
    let mut failing_edge = None;
    for (&(u, v, _), outcome) in pairs.iter().zip(outcomes) {
        match outcome {
            Some(coloring) => edge_witnesses.push(EdgeWitness { u, v, coloring }),
            None => {
                failing_edge.get_or_insert((u, v));
            }
        }
    }
    let critical = match k {
        0 => true,
        1 => g.order() == 1,
        _ => g.min_degree().is_some_and(|d| d >= 1) && failing_edge.is_none(),
    };
    let vertex_critical = critical || is_vertex_critical_with(g, t, config)?;
    Ok(CriticalityReport { k, is_critical: critical, is_vertex_critical: vertex_critical, edge_witnesses, failing_edge })
}

/// Criticality verdict for a graph already known to have `χ_t(G) = k`,
/// stopping at the first pair that fails. Single-threaded.
pub fn is_critical_given_k(g: &Multigraph, t: u32, k: u32, config: &SolverConfig) -> Result<bool> {
    check_t(t)?;
    match k {
        0 => return Ok(g.is_empty()),
        1 => return Ok(g.order() == 1),
        _ => {}
    }
    if g.min_degree().is_none_or(|d| d == 0) {
        return Ok(false);
    }
    for (u, v, _) in g.pairs() {
        if colorable(&g.delete_edge(u, v)?, t, k as usize - 1, config)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether deleting any vertex lowers `χ_t`.
pub fn is_vertex_critical(g: &Multigraph, t: u32) -> Result<bool> {
    is_vertex_critical_with(g, t, &SolverConfig::default())
}

pub fn is_vertex_critical_with(g: &Multigraph, t: u32, config: &SolverConfig) -> Result<bool> {
    check_t(t)?;
    let k = chi(g, t, config)?;
    let lowered: Vec<bool> = (0..g.order())
        .into_par_iter()
        .map(|v| Ok(chi(&g.delete_vertex(v)?, t, config)? < k))
        .collect::<Result<_>>()?;
    Ok(lowered.into_iter().all(|b| b))
}

/// A critical subgraph with the same `χ_t`: single edges are deleted in
/// lexicographic pair order while `χ_t` stays put, then isolated vertices in
/// decreasing index order while `χ_t` stays put.
///
/// One pass suffices: an edge kept because its deletion lowered `χ_t` still
/// lowers it in every later, smaller subgraph.
pub fn critical_subgraph(g: &Multigraph, t: u32) -> Result<Multigraph> {
    check_t(t)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let config = SolverConfig::default();
    let k = chi(g, t, &config)?;
    let mut h = g.clone();
    let pairs: Vec<(usize, usize, u32)> = g.pairs().collect();
    for (u, v, _) in pairs {
        while h.mult(u, v) > 0 {
            let smaller = h.delete_edge(u, v)?;
            if colorable(&smaller, t, k as usize - 1, &config)?.is_some() {
                break;
            }
            h = smaller;
        }
    }
    for v in (0..h.order()).rev() {
        if h.degree(v) == 0 && h.order() > 1 {
            let smaller = h.delete_vertex(v)?;
            if chi(&smaller, t, &config)? == k {
                h = smaller;
            }
        }
    }
    Ok(h)
}

/// One of the four block shapes allowed in the low vertex subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BlockShape {
    /// `sK_n` with `1 <= s <= t`; a single vertex is reported with `s = 1`.
    SkN { s: u32, n: usize },
    /// `sC_n` with `1 <= s <= t` and `n >= 3` odd.
    SCOdd { s: u32, n: usize },
    ConnectedTRegular,
    /// Strictly `t`-degenerate with maximum degree at most `t`.
    SdtLowDegree,
    /// None of the above.
    Violation,
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockShape::SkN { s, n } => write!(f, "{s}K_{n}"),
            BlockShape::SCOdd { s, n } => write!(f, "{s}C_{n}"),
            BlockShape::ConnectedTRegular => f.write_str("connected t-regular"),
            BlockShape::SdtLowDegree => f.write_str("SD_t with maximum degree at most t"),
            BlockShape::Violation => f.write_str("VIOLATION"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockClassification {
    /// Vertices of the block, as indices of `G`.
    pub vertices: VertexSet,
    /// First matching shape in the order `sK_n`, `sC_n`, `t`-regular, `SD_t`.
    pub shape: BlockShape,
    /// Every matching shape, same order.
    pub matches: Vec<BlockShape>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowVertexReport {
    pub k: u32,
    /// Vertices of degree exactly `t(k-1)`.
    pub low: VertexSet,
    pub high: VertexSet,
    pub blocks: Vec<BlockClassification>,
}

impl LowVertexReport {
    pub fn has_violation(&self) -> bool {
        self.blocks.iter().any(|b| b.shape == BlockShape::Violation)
    }
}

fn uniform_mult(b: &Multigraph) -> Option<u32> {
    let mut ms = b.pairs().map(|p| p.2);
    let first = ms.next()?;
    ms.all(|m| m == first).then_some(first)
}

/// All shapes that `b` (a connected graph) takes, in the listed order.
pub fn block_shapes(b: &Multigraph, t: u32) -> Vec<BlockShape> {
    let n = b.order();
    let mut out = Vec::new();
    if n == 1 {
        out.push(BlockShape::SkN { s: 1, n: 1 });
    } else if let Some(s) = uniform_mult(b).filter(|&s| s <= t && b.is_uniform_clique(s)) {
        out.push(BlockShape::SkN { s, n });
    }
    if n >= 3 && n % 2 == 1 && b.is_connected() && (0..n).all(|v| b.neighbors(v).len() == 2) {
        if let Some(s) = uniform_mult(b).filter(|&s| s <= t) {
            out.push(BlockShape::SCOdd { s, n });
        }
    }
    if n >= 1 && b.is_connected() && b.degrees().iter().all(|&d| d == t) {
        out.push(BlockShape::ConnectedTRegular);
    }
    if is_sd_within(b, t, b.vertices()) && b.max_degree().unwrap_or(0) <= t {
        out.push(BlockShape::SdtLowDegree);
    }
    out
}

/// Low and high vertices of a critical graph and the shape of every block of
/// its low vertex subgraph.
pub fn low_vertex_analysis(g: &Multigraph, t: u32) -> Result<LowVertexReport> {
    check_t(t)?;
    let config = SolverConfig::default();
    let k = chi(g, t, &config)?;
    if !is_critical_given_k(g, t, k, &config)? {
        return Err(Error::NotCritical);
    }
    let target = t * k.saturating_sub(1);
    let low: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == target).collect();
    let high = g.vertices().difference(low);
    let mut blocks = Vec::new();
    if !low.is_empty() {
        let (sub, map) = g.induced_subgraph(low)?;
        for block in sub.blocks()? {
            let (b, _) = sub.induced_subgraph(block)?;
            let matches = block_shapes(&b, t);
            let shape = matches.first().copied().unwrap_or(BlockShape::Violation);
            let vertices = block.iter().map(|i| map[i]).collect();
            blocks.push(BlockClassification { vertices, shape, matches });
        }
    }
    Ok(LowVertexReport { k, low, high, blocks })
}

/// Outcome of comparing `χ_t(G)` with `⌈Δ/t⌉ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum BrooksClass {
    /// Equality with `G = sK_{(t/s)p+1}`, `s | t`, `χ_t(G) = p + 1`.
    SkForm { s: u32, p: u32 },
    /// Equality with `G = tC_n`, `n >= 3` odd, `χ_t(G) = 3`.
    TCOdd { n: usize },
    /// Equality with `G` connected, `t`-regular and `χ_t(G) = 2`.
    TRegularK2,
    StrictInequality,
    /// The bound fails, or equality holds outside the three families.
    Violation,
}

impl fmt::Display for BrooksClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrooksClass::SkForm { s, p } => write!(f, "equality, {s}K_n with chi_t = {}", p + 1),
            BrooksClass::TCOdd { n } => write!(f, "equality, tC_{n}"),
            BrooksClass::TRegularK2 => f.write_str("equality, connected t-regular with chi_t = 2"),
            BrooksClass::StrictInequality => f.write_str("strict inequality"),
            BrooksClass::Violation => f.write_str("VIOLATION"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrooksReport {
    pub k: u32,
    pub bound: u32,
    pub class: BrooksClass,
}

/// Checks the Brooks-type bound on a connected graph and names the equality
/// family, taking the first that fits.
pub fn brooks_equality_classify(g: &Multigraph, t: u32) -> Result<BrooksReport> {
    let bound = crate::coloring::brooks_upper_bound(g, t)?;
    let k = chi(g, t, &SolverConfig::default())?;
    let n = g.order();
    let class = if k > bound {
        BrooksClass::Violation
    } else if k < bound {
        BrooksClass::StrictInequality
    } else {
        let s = if n == 1 { Some(t) } else { uniform_mult(g).filter(|&s| g.is_uniform_clique(s)) };
        match s {
            Some(s) if s <= t && t % s == 0 && (n - 1) % (t / s) as usize == 0 && k as usize == (n - 1) / (t / s) as usize + 1 => {
                BrooksClass::SkForm { s, p: k - 1 }
            }
            _ if k == 3
                && n >= 3
                && n % 2 == 1
                && uniform_mult(g) == Some(t)
                && (0..n).all(|v| g.neighbors(v).len() == 2) =>
            {
                BrooksClass::TCOdd { n }
            }
            _ if k == 2 && g.degrees().iter().all(|&d| d == t) => BrooksClass::TRegularK2,
            _ => BrooksClass::Violation,
        }
    };
    Ok(BrooksReport { k, bound, class })
}
