//! Canonical labelling by individualization and refinement.
//!
//! The label is the lexicographically smallest lower-triangle multiplicity
//! code over all vertex orders reachable in the search tree. Cells of the
//! ordered partition are split by label-independent signatures, so the set of
//! reachable leaves is an isomorphism invariant and so is its minimum. Twins
//! (vertices whose transposition is an automorphism) are branched on once.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Multigraph;

/// Default order limit for canonicalization.
pub const DEFAULT_CANON_BOUND: usize = 10;

/// Byte string identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

type Partition = Vec<Vec<usize>>;

fn signature(g: &Multigraph, v: usize, cells: &Partition) -> Vec<u32> {
    let mut sig = Vec::with_capacity(g.order() + cells.len());
    for cell in cells {
        let start = sig.len();
        sig.extend(cell.iter().filter(|&&u| u != v).map(|&u| g.mult(v, u)));
        sig[start..].sort_unstable();
        // Separator keeps cell boundaries unambiguous.
        sig.push(u32::MAX);
    }
    sig
}

fn refine(g: &Multigraph, mut cells: Partition) -> Partition {
    loop {
        let before = cells.len();
        let mut next = Vec::with_capacity(g.order());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut tagged: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(g, v, &cells), v)).collect();
            tagged.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..tagged.len() {
                if i > 0 && tagged[i].0 != tagged[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(tagged[i].1);
            }
            next.push(group);
        }
        cells = next;
        if cells.len() == before {
            return cells;
        }
    }
}

fn twins(g: &Multigraph, a: usize, b: usize) -> bool {
    (0..g.order()).all(|x| x == a || x == b || g.mult(a, x) == g.mult(b, x))
}

fn code(g: &Multigraph, order: &[usize]) -> Vec<u32> {
    let mut c = Vec::with_capacity(order.len() * order.len() / 2);
    for i in 1..order.len() {
        for j in 0..i {
            c.push(g.mult(order[j], order[i]));
        }
    }
    c
}

struct Search<'a> {
    g: &'a Multigraph,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let c = code(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| c < *b) {
                self.best = Some((c, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&w| twins(self.g, v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }
}

/// Vertex at each canonical position.
pub(super) fn canonical_order(g: &Multigraph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut s = Search { g, best: None };
    s.descend(vec![(0..g.order()).collect()]);
    s.best.expect("search reaches at least one leaf").1
}

pub(super) fn canonical_label(g: &Multigraph) -> CanonicalLabel {
    label_of(g, &canonical_order(g))
}

/// Label of the vertex order `order`.
pub(super) fn label_of(g: &Multigraph, order: &[usize]) -> CanonicalLabel {
    let mut bytes = Vec::with_capacity(1 + g.order() * g.order() / 2);
    bytes.push(g.order() as u8);
    for m in code(g, order) {
        if m < 255 {
            bytes.push(m as u8);
        } else {
            bytes.push(255);
            bytes.extend_from_slice(&m.to_be_bytes());
        }
    }
    CanonicalLabel(bytes)
}
