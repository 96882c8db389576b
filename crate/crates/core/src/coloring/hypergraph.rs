//! Class hypergraphs `H(φ)` and `H(φ_1, φ_2)`, and recombination of two
//! colourings along a closed set.

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Hypergraph on `0..n` whose edges are colour classes of size at least two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassHypergraph {
    pub n: usize,
    /// Distinct edges, sorted.
    pub edges: Vec<VertexSet>,
}

impl ClassHypergraph {
    /// Largest number of edges through one vertex.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.edges.iter().filter(|e| e.contains(v)).count()).max().unwrap_or(0)
    }

    /// Vertices in no edge.
    pub fn isolated(&self) -> VertexSet {
        let covered = self.edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
        VertexSet::full(self.n).difference(covered)
    }

    /// Vertex sets of the components, ordered by least element. Isolated
    /// vertices form singleton components.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            loop {
                let grown = self
                    .edges
                    .iter()
                    .filter(|e| !e.is_disjoint(comp))
                    .fold(comp, |a, &e| a.union(e));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.components().into_iter().find(|c| c.contains(v)).unwrap_or_default()
    }
}

/// `H(φ_1)`, or `H(φ_1, φ_2)` when a second colouring is given.
pub fn class_hypergraph(phi1: &Coloring, phi2: Option<&Coloring>) -> Result<ClassHypergraph> {
    let n = phi1.len();
    let mut edges: Vec<VertexSet> = phi1.classes();
    if let Some(phi2) = phi2 {
        if phi2.len() != n {
            return Err(Error::ColoringSize { got: phi2.len(), expected: n });
        }
        edges.extend(phi2.classes());
    }
    edges.retain(|e| e.len() >= 2);
    edges.sort();
    edges.dedup();
    Ok(ClassHypergraph { n, edges })
}

/// `φ_1|_X ∪ φ_2|_X̄`, with the two sides on disjoint colour sets.
///
/// Colours of `φ_1` on `X` are kept. A colour of `φ_2` on `X̄` is kept when it
/// does not clash with one used on `X`, and is otherwise moved to the
/// smallest colour free on both sides. So `X = V` returns `φ_1` and `X = ∅`
/// returns `φ_2` unchanged.
pub fn recombine(phi1: &Coloring, phi2: &Coloring, x: VertexSet) -> Result<Coloring> {
    let n = phi1.len();
    if phi2.len() != n {
        return Err(Error::ColoringSize { got: phi2.len(), expected: n });
    }
    if x.max().is_some_and(|v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: x.max().unwrap(), order: n });
    }
    if !phi1.is_closed(x) {
        return Err(Error::NotClosed("first colouring"));
    }
    if !phi2.is_closed(x) {
        return Err(Error::NotClosed("second colouring"));
    }
    let xbar = x.complement(n);
    let inside: std::collections::BTreeSet<u32> = x.iter().map(|v| phi1.color(v)).collect();
    let outside: std::collections::BTreeSet<u32> = xbar.iter().map(|v| phi2.color(v)).collect();
    let mut taken: std::collections::BTreeSet<u32> = inside.union(&outside).copied().collect();
    let mut map = std::collections::HashMap::new();
    for &c in &outside {
        let target = if inside.contains(&c) {
            let fresh = (1..).find(|d| !taken.contains(d)).unwrap();
            taken.insert(fresh);
            fresh
        } else {
            c
        };
        map.insert(c, target);
    }
    let assignment = (0..n)
        .map(|v| if x.contains(v) { phi1.color(v) } else { map[&phi2.color(v)] })
        .collect();
    Ok(Coloring::new(assignment, phi1.t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn singletons_give_no_edges() {
        let phi = Coloring::new(vec![1, 2, 3, 4], 1);
        let h = class_hypergraph(&phi, None).unwrap();
        assert!(h.edges.is_empty());
        assert_eq!(h.isolated(), VertexSet::full(4));
        assert_eq!(h.components().len(), 4);
    }

    #[test]
    fn same_coloring_twice() {
        let phi = Coloring::new(vec![1, 1, 2, 2, 3], 2);
        let a = class_hypergraph(&phi, None).unwrap();
        let b = class_hypergraph(&phi, Some(&phi)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.max_degree(), 1);
    }

    #[test]
    fn swapped_c4_colorings() {
        // Forest 2-colourings of C_4 that differ by moving vertex 2.
        let phi1 = Coloring::new(vec![1, 1, 1, 2], 2);
        let phi2 = Coloring::new(vec![1, 1, 2, 2], 2);
        let h = class_hypergraph(&phi1, Some(&phi2)).unwrap();
        assert_eq!(h.edges, vec![set(&[0, 1]), set(&[0, 1, 2]), set(&[2, 3])]);
        assert_eq!(h.components(), vec![set(&[0, 1, 2, 3])]);
        assert!(h.isolated().is_empty());
        assert_eq!(h.max_degree(), 2);
        assert!(class_hypergraph(&phi1, Some(&Coloring::new(vec![1], 2))).is_err());
    }

    #[test]
    fn recombine_extremes() {
        let phi1 = Coloring::new(vec![1, 1, 2, 3], 1);
        let phi2 = Coloring::new(vec![2, 3, 1, 1], 1);
        assert_eq!(recombine(&phi1, &phi2, VertexSet::full(4)).unwrap(), phi1);
        assert_eq!(recombine(&phi1, &phi2, VertexSet::EMPTY).unwrap(), phi2);
        let mixed = recombine(&phi1, &phi2, set(&[0, 1])).unwrap();
        assert_eq!(mixed.classes(), vec![set(&[0, 1]), set(&[2, 3])]);
        assert_eq!(recombine(&phi1, &phi2, set(&[0])).unwrap_err(), Error::NotClosed("first colouring"));
        assert_eq!(recombine(&phi1, &phi2, set(&[2])).unwrap_err(), Error::NotClosed("second colouring"));
    }
}
