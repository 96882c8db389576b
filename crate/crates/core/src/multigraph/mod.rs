//! Loopless multigraphs stored as a dense symmetric multiplicity matrix.
//!
//! Vertices are the indices `0..n`. The pair `(u, v)` carries a multiplicity
//! `mult(u, v)`; the diagonal is always zero. Every operation is a pure
//! function returning a new graph.

mod blocks;
mod canon;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use canon::{CanonicalLabel, DEFAULT_CANON_BOUND};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order; vertex sets are single machine words.
pub const MAX_VERTICES: usize = 64;

/// Loopless multigraph on vertices `0..n`, stored as a dense symmetric
/// multiplicity matrix.
///
/// Serializes as `{"n": .., "edges": [[u, v, mult], ..]}` with `u < v`, pairs
/// in lexicographic order and zero multiplicities omitted.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl From<Multigraph> for GraphRepr {
    fn from(g: Multigraph) -> Self {
        GraphRepr { n: g.n, edges: g.pairs().collect() }
    }
}

impl TryFrom<GraphRepr> for Multigraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Multigraph::from_edges(r.n, &r.edges)
    }
}

/// `(δ, Δ, μ)` of a non-empty graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min_degree: u32,
    pub max_degree: u32,
    pub max_mult: u32,
}

impl Multigraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: n, max: MAX_VERTICES });
        }
        Ok(Multigraph { n, mult: vec![0; n * n] })
    }

    pub fn empty() -> Self {
        Multigraph::default()
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Repeated pairs add up.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Multigraph::new(n)?;
        for &(u, v, m) in edges {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }

    /// Simple graph from an edge list.
    pub fn from_simple_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n)?;
        for &(u, v) in edges {
            g.add_edges(u, v, 1)?;
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    pub fn set_mult(&mut self, u: usize, v: usize, m: u32) -> Result<()> {
        self.check_pair(u, v)?;
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
        Ok(())
    }

    pub fn add_edges(&mut self, u: usize, v: usize, m: u32) -> Result<()> {
        self.check_pair(u, v)?;
        let cur = self.mult[u * self.n + v];
        self.set_mult(u, v, cur + m)
    }

    /// Unchecked write used by hot loops that already validated indices.
    pub(crate) fn set_mult_raw(&mut self, u: usize, v: usize, m: u32) {
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `μ(u, v)`; zero on the diagonal.
    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.mult[v * self.n..(v + 1) * self.n]
    }

    /// Pairs `u < v` with positive multiplicity, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let m = self.mult(u, v);
                (m > 0).then_some((u, v, m))
            })
        })
    }

    pub fn edge_count(&self) -> u64 {
        self.pairs().map(|(_, _, m)| m as u64).sum()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.row(v).iter().sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Number of edges from `v` into `set` (`v` itself contributes nothing).
    #[inline]
    pub fn degree_into(&self, v: usize, set: VertexSet) -> u32 {
        let row = self.row(v);
        set.iter().map(|u| row[u]).sum()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(u, _)| u)
            .collect()
    }

    /// `(δ, Δ, μ)`, or `None` for the empty graph.
    pub fn degree_stats(&self) -> Option<DegreeStats> {
        if self.n == 0 {
            return None;
        }
        let degrees = self.degrees();
        Some(DegreeStats {
            min_degree: *degrees.iter().min().unwrap(),
            max_degree: *degrees.iter().max().unwrap(),
            max_mult: self.max_mult(),
        })
    }

    /// `μ(G)`; zero for graphs with fewer than two vertices.
    pub fn max_mult(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<u32> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, order: self.n }),
            _ => Ok(()),
        }
    }

    /// `G[X]`, re-indexed in increasing vertex order. The second component maps
    /// new indices back to the original ones.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Multigraph, Vec<usize>)> {
        self.check_set(set)?;
        let map = set.to_vec();
        let k = map.len();
        let mut h = Multigraph { n: k, mult: vec![0; k * k] };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                h.set_mult_raw(i, j, self.mult(u, v));
            }
        }
        Ok((h, map))
    }

    /// `G - v`, re-indexed.
    pub fn delete_vertex(&self, v: usize) -> Result<Multigraph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.induced_subgraph(self.vertices().without(v))?.0)
    }

    /// `G - e` for a single edge `e` joining `u` and `v`: one parallel edge goes.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        self.check_pair(u, v)?;
        let m = self.mult(u, v);
        if m == 0 {
            return Err(Error::NoEdge(u, v));
        }
        let mut h = self.clone();
        h.set_mult_raw(u, v, m - 1);
        Ok(h)
    }

    /// Removes `count` parallel edges between `u` and `v`.
    pub fn delete_edges(&self, u: usize, v: usize, count: u32) -> Result<Multigraph> {
        self.check_pair(u, v)?;
        let m = self.mult(u, v);
        if m < count {
            return Err(Error::NoEdge(u, v));
        }
        let mut h = self.clone();
        h.set_mult_raw(u, v, m - count);
        Ok(h)
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of `G[set]`.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut left = set;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.neighbors(v).intersection(left).difference(comp);
                comp = comp.union(fresh);
                frontier = frontier.union(fresh);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected here; callers that need
    /// non-emptiness check it separately.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        self.components_within(set).len() <= 1
    }

    /// The blocks of `G`: maximal subgraphs without a separating vertex.
    pub fn blocks(&self) -> Result<Vec<VertexSet>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(blocks::blocks(self))
    }

    /// Separating vertices of `G`.
    pub fn cut_vertices(&self) -> VertexSet {
        blocks::cut_vertices(self)
    }

    /// `G^t`: the pairwise complement up to multiplicity `t`.
    pub fn t_complement(&self, t: u32) -> Result<Multigraph> {
        if let Some((u, v, m)) = self.pairs().find(|&(_, _, m)| m > t) {
            return Err(Error::MultiplicityAboveCap { u, v, mult: m, cap: t });
        }
        let mut h = Multigraph { n: self.n, mult: vec![0; self.n * self.n] };
        for u in 0..self.n {
            for v in u + 1..self.n {
                h.set_mult_raw(u, v, t - self.mult(u, v));
            }
        }
        Ok(h)
    }

    /// `tG`: every multiplicity scaled by `t`.
    pub fn inflate(&self, t: u32) -> Multigraph {
        Multigraph { n: self.n, mult: self.mult.iter().map(|m| m * t).collect() }
    }

    /// Disjoint union with `other`, whose vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Result<Multigraph> {
        self.dirac_join(other, 0)
    }

    /// Disjoint union plus multiplicity `l` on every cross pair.
    pub fn dirac_join(&self, other: &Multigraph, l: u32) -> Result<Multigraph> {
        let n = self.n + other.n;
        let mut g = Multigraph::new(n)?;
        for (u, v, m) in self.pairs() {
            g.set_mult_raw(u, v, m);
        }
        for (u, v, m) in other.pairs() {
            g.set_mult_raw(self.n + u, self.n + v, m);
        }
        if l > 0 {
            for u in 0..self.n {
                for v in 0..other.n {
                    g.set_mult_raw(u, self.n + v, l);
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Multigraph> {
        let mut seen = VertexSet::EMPTY;
        if perm.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "permutation of length {} for a graph of order {}",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::OutOfRange("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut h = Multigraph { n: self.n, mult: vec![0; self.n * self.n] };
        for (u, v, m) in self.pairs() {
            h.set_mult_raw(perm[u], perm[v], m);
        }
        Ok(h)
    }

    /// True if every pair of distinct vertices has multiplicity exactly `s`.
    pub fn is_uniform_clique(&self, s: u32) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.mult(u, v) == s))
    }

    /// True if every pair inside `set` has multiplicity exactly `t`.
    pub fn is_t_fold_clique(&self, set: VertexSet, t: u32) -> bool {
        set.iter().all(|u| set.iter().all(|v| u == v || self.mult(u, v) == t))
    }

    pub fn canonical_form(&self) -> Result<CanonicalLabel> {
        self.canonical_form_bounded(DEFAULT_CANON_BOUND)
    }

    pub fn canonical_form_bounded(&self, bound: usize) -> Result<CanonicalLabel> {
        if self.n > bound {
            return Err(Error::CanonicalBound { order: self.n, bound });
        }
        Ok(canon::canonical_label(self))
    }

    /// The representative of this graph's isomorphism class whose matrix is
    /// the canonical label.
    pub fn canonical_graph(&self) -> Result<Multigraph> {
        Ok(self.canonical_pair(DEFAULT_CANON_BOUND)?.1)
    }

    /// Canonical label and canonical representative from a single search.
    pub fn canonical_pair(&self, bound: usize) -> Result<(CanonicalLabel, Multigraph)> {
        if self.n > bound {
            return Err(Error::CanonicalBound { order: self.n, bound });
        }
        let order = canon::canonical_order(self);
        let mut perm = vec![0; self.n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        Ok((canon::label_of(self, &order), self.permute(&perm)?))
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}; ", self.n)?;
        let mut first = true;
        for (u, v, m) in self.pairs() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{m}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, k3t, s_clique};

    fn path3() -> Multigraph {
        Multigraph::from_simple_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, map) = s_clique(2, 3).unwrap().induced_subgraph([0, 1].into_iter().collect()).unwrap();
        assert_eq!(h, s_clique(2, 2).unwrap());
        assert_eq!(map, vec![0, 1]);

        let c5 = cycle(5).unwrap();
        let (same, map) = c5.induced_subgraph(c5.vertices()).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (p, _) = c5.induced_subgraph([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p, path3());
        assert_eq!(p.edge_count(), 2);

        let err = c5.induced_subgraph([0, 7].into_iter().collect()).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 7, order: 5 });
    }

    #[test]
    fn delete_edge_removes_one_parallel_edge() {
        let g = s_clique(3, 2).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(g.mult(0, 1), 2);

        let p = complete(3).unwrap().delete_edge(0, 2).unwrap();
        assert_eq!(p, path3());

        // K_3(3) has multiplicities {1, 2, 2}; thin a double pair.
        let k = k3t(3).unwrap();
        let (u, v, _) = k.pairs().find(|&(_, _, m)| m == 2).unwrap();
        let mut ms: Vec<u32> = k.delete_edge(u, v).unwrap().pairs().map(|p| p.2).collect();
        ms.sort();
        assert_eq!(ms, vec![1, 1, 2]);

        assert_eq!(path3().delete_edge(0, 2).unwrap_err(), Error::NoEdge(0, 2));
    }

    #[test]
    fn degree_stats_examples() {
        let s = s_clique(2, 4).unwrap().degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.max_mult), (6, 6, 2));
        let s = cycle(5).unwrap().degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.max_mult), (2, 2, 1));
        let k = k3t(3).unwrap();
        let mut d = k.degrees();
        d.sort();
        assert_eq!(d, vec![3, 3, 4]);
        let s = k.degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.max_mult), (3, 4, 2));
        assert!(Multigraph::empty().degree_stats().is_none());
    }

    #[test]
    fn components_examples() {
        assert_eq!(s_clique(3, 4).unwrap().components().len(), 1);
        let g = cycle(3).unwrap().disjoint_union(&cycle(4).unwrap()).unwrap();
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert!(Multigraph::empty().components().is_empty());
    }

    #[test]
    fn t_complement_examples() {
        let g = s_clique(2, 4).unwrap();
        assert_eq!(g.t_complement(2).unwrap(), Multigraph::new(4).unwrap());
        assert_eq!(Multigraph::new(4).unwrap().t_complement(3).unwrap(), s_clique(3, 4).unwrap());
        let c = cycle(5).unwrap().t_complement(2).unwrap();
        assert_eq!(c.edge_count(), 15);
        assert_eq!(c.mult(0, 1), 1);
        assert_eq!(c.mult(0, 2), 2);
        assert!(matches!(
            s_clique(3, 3).unwrap().t_complement(2),
            Err(Error::MultiplicityAboveCap { .. })
        ));
    }

    #[test]
    fn inflation_examples() {
        let g = complete(4).unwrap().inflate(2);
        assert_eq!(g, s_clique(2, 4).unwrap());
        assert_eq!(g.edge_count(), 12);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.inflate(1), c5);
        let g = c5.inflate(3);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 6));
    }

    #[test]
    fn rejects_loops_and_oversize() {
        assert_eq!(Multigraph::new(3).unwrap().add_edges(1, 1, 1).unwrap_err(), Error::Loop(1));
        assert!(matches!(Multigraph::new(65), Err(Error::TooManyVertices { .. })));
    }
}
