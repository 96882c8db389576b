//! `SD_t`-colourings: representation, validation, exact `χ_t`, optimal-colouring
//! enumeration, and the class-hypergraph machinery behind extreme colourings.

mod enumerate;
mod hypergraph;
mod solver;

use serde::{Deserialize, Serialize};

pub use enumerate::{
    enumerate_optimal_colorings, extreme_coloring, for_each_optimal_coloring, DEFAULT_ENUMERATION_BUDGET,
};
pub use hypergraph::{class_hypergraph, recombine, ClassHypergraph};
pub use solver::{
    brooks_upper_bound, chi_t, chi_t_with, colorable, greedy_coloring, greedy_upper_bound, ChiResult, SolverConfig,
};

use crate::degeneracy::is_sd_within;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// A colouring `φ: V → {1, 2, ...}` checked against the parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    /// Colour of each vertex; colours start at 1.
    pub assignment: Vec<u32>,
    pub t: u32,
}

impl Coloring {
    pub fn new(assignment: Vec<u32>, t: u32) -> Self {
        Coloring { assignment, t }
    }

    /// Colour `i + 1` for each class `classes[i]`.
    pub fn from_classes(n: usize, classes: &[VertexSet], t: u32) -> Result<Self> {
        let mut assignment = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                assignment[v] = i as u32 + 1;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == 0) {
            return Err(Error::Uncolored(v));
        }
        Ok(Coloring { assignment, t })
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    /// `Γ_φ`, sorted.
    pub fn used_colors(&self) -> Vec<u32> {
        let mut c = self.assignment.clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// `c(φ)`.
    pub fn color_count(&self) -> usize {
        self.used_colors().len()
    }

    /// `X_φ`: the non-empty colour classes, by increasing colour.
    pub fn classes(&self) -> Vec<VertexSet> {
        self.used_colors()
            .into_iter()
            .map(|c| self.class_of_color(c))
            .collect()
    }

    pub fn class_of_color(&self, c: u32) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// `I(φ)`: vertices that are alone in their class.
    pub fn singletons(&self) -> VertexSet {
        self.classes()
            .into_iter()
            .filter(|c| c.len() == 1)
            .fold(VertexSet::EMPTY, VertexSet::union)
    }

    /// Every non-empty class lies inside `set` or misses it.
    pub fn is_closed(&self, set: VertexSet) -> bool {
        self.classes().into_iter().all(|c| c.is_subset(set) || c.is_disjoint(set))
    }

    /// Renumbers colours by first occurrence, so equal partitions compare equal.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                let next = map.len() as u32 + 1;
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { assignment, t: self.t }
    }

    pub fn same_partition(&self, other: &Coloring) -> bool {
        self.normalized().assignment == other.normalized().assignment
    }

    /// Restriction to `set`, re-indexed in increasing vertex order.
    pub fn restrict(&self, set: VertexSet) -> Coloring {
        Coloring { assignment: set.iter().map(|v| self.assignment[v]).collect(), t: self.t }
    }
}

/// Whether `φ` is an `SD_t`-colouring of `G`: every class induces a strictly
/// `t`-degenerate subgraph.
pub fn validate(g: &Multigraph, coloring: &Coloring, t: u32) -> Result<bool> {
    if t == 0 {
        return Err(Error::ZeroT);
    }
    if coloring.len() != g.order() {
        return Err(Error::ColoringSize { got: coloring.len(), expected: g.order() });
    }
    if let Some(v) = coloring.assignment.iter().position(|&c| c == 0) {
        return Err(Error::Uncolored(v));
    }
    Ok(coloring.classes().into_iter().all(|c| is_sd_within(g, t, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, s_clique};

    #[test]
    fn validate_examples() {
        let k3 = complete(3).unwrap();
        assert!(!validate(&k3, &Coloring::new(vec![1, 1, 1], 2), 2).unwrap());
        assert!(validate(&k3, &Coloring::new(vec![1, 1, 2], 2), 2).unwrap());
        for t in 1..4 {
            let g = s_clique(t, 2).unwrap();
            assert!(!validate(&g, &Coloring::new(vec![1, 1], t), t).unwrap());
            assert!(validate(&g, &Coloring::new(vec![1, 2], t), t).unwrap());
        }
        assert!(matches!(
            validate(&k3, &Coloring::new(vec![1, 2], 2), 2),
            Err(Error::ColoringSize { got: 2, expected: 3 })
        ));
        assert_eq!(validate(&k3, &Coloring::new(vec![1, 0, 2], 2), 2), Err(Error::Uncolored(1)));
    }

    #[test]
    fn derived_views() {
        let phi = Coloring::new(vec![3, 1, 3, 7, 1, 5], 2);
        assert_eq!(phi.used_colors(), vec![1, 3, 5, 7]);
        assert_eq!(phi.color_count(), 4);
        assert_eq!(phi.singletons().to_vec(), vec![3, 5]);
        assert_eq!(phi.normalized().assignment, vec![1, 2, 1, 3, 2, 4]);
        assert!(phi.is_closed([1, 4, 3].into_iter().collect()));
        assert!(!phi.is_closed([1, 3, 2].into_iter().collect()));
        assert_eq!(phi.restrict([0, 3, 5].into_iter().collect()).assignment, vec![3, 7, 5]);
    }
}
