//! Statements about critical graphs, checked on every member of the
//! enumerated classes.

use pointpart::coloring::{class_hypergraph, enumerate_optimal_colorings};
use pointpart::criticality::{critical_subgraph, is_critical, is_vertex_critical};
use pointpart::decomposition::{check_theorem_7_1, check_theorem_a, decompose, t_dominating_census};
use pointpart::enumeration::{enumerate_critical, EnumerationConfig};
use pointpart::{chi_t, Multigraph, VertexSet};
use rayon::prelude::*;

/// `(t, graph)` for every critical graph with `t <= 3` and `n <= max_n(t)`.
fn critical_graphs(max_n: impl Fn(u32) -> usize) -> Vec<(u32, Multigraph)> {
    let config = EnumerationConfig::default();
    let mut out = Vec::new();
    for t in 1..=3 {
        for n in 1..=max_n(t) {
            for k in 1..=n as u32 {
                let r = enumerate_critical(t, k, n, &config).unwrap();
                out.extend(r.graphs.into_iter().map(|g| (t, g)));
            }
        }
    }
    out
}

fn small() -> Vec<(u32, Multigraph)> {
    critical_graphs(|t| if t == 3 { 4 } else { 5 })
}

fn all_multigraphs(n: usize, mu: u32) -> impl Iterator<Item = Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = (mu as u64 + 1).pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut g = Multigraph::new(n).unwrap();
        for &(u, v) in &pairs {
            g.set_mult(u, v, (code % (mu as u64 + 1)) as u32).unwrap();
            code /= mu as u64 + 1;
        }
        g
    })
}

#[test]
fn degree_multiplicity_and_connectivity() {
    let graphs = critical_graphs(|t| [0, 7, 6, 5][t as usize]);
    assert!(graphs.len() > 50);
    graphs.par_iter().for_each(|(t, g)| {
        let k = chi_t(g, *t).unwrap().0;
        assert!(g.min_degree().unwrap() >= t * (k - 1), "{g:?}");
        assert!(g.max_mult() <= *t);
        assert!(g.is_connected());
        if *t <= 2 {
            assert!(g.cut_vertices().is_empty(), "{g:?}");
        }
    });
}

#[test]
fn colourings_after_deleting_a_vertex() {
    // Every class of a (k-1)-colouring of G - v receives at least t edges from v.
    critical_graphs(|t| if t == 3 { 5 } else { 6 }).par_iter().for_each(|(t, g)| {
        let k = chi_t(g, *t).unwrap().0;
        for v in 0..g.order() {
            let h = g.delete_vertex(v).unwrap();
            let others: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
            for phi in enumerate_optimal_colorings(&h, *t).unwrap() {
                assert_eq!(phi.color_count() as u32, k - 1);
                for class in phi.classes() {
                    let into: u32 = class.iter().map(|i| g.mult(v, others[i])).sum();
                    assert!(into >= *t, "{g:?} v={v}");
                }
            }
        }
    });
}

#[test]
fn colourings_after_deleting_an_edge() {
    // In a (k-1)-colouring of G - e, the ends of e share a class and are
    // joined by fewer than t edges.
    critical_graphs(|t| if t == 3 { 5 } else { 6 }).par_iter().for_each(|(t, g)| {
        let k = chi_t(g, *t).unwrap().0;
        for (u, v, _) in g.pairs() {
            let h = g.delete_edge(u, v).unwrap();
            assert!(h.mult(u, v) < *t);
            for phi in enumerate_optimal_colorings(&h, *t).unwrap() {
                assert_eq!(phi.color_count() as u32, k - 1);
                assert_eq!(phi.color(u), phi.color(v), "{g:?} e={u}{v}");
            }
        }
    });
}

#[test]
fn singleton_classes_form_a_t_fold_clique() {
    small().par_iter().for_each(|(t, g)| {
        for phi in enumerate_optimal_colorings(g, *t).unwrap() {
            assert!(g.is_t_fold_clique(phi.singletons(), *t), "{g:?}");
        }
    });
}

#[test]
fn singletons_of_two_colourings_are_linked() {
    // v1 alone in φ1, v2 alone in φ2, μ(v1, v2) < t: same component of H(φ1, φ2).
    small().par_iter().for_each(|(t, g)| {
        let colourings = enumerate_optimal_colorings(g, *t).unwrap();
        for a in &colourings {
            for b in &colourings {
                let h = class_hypergraph(a, Some(b)).unwrap();
                assert!(h.max_degree() <= 2);
                for v1 in a.singletons().iter() {
                    for v2 in b.singletons().iter() {
                        if v1 != v2 && g.mult(v1, v2) < *t {
                            assert!(h.component_of(v1).contains(v2), "{g:?} {a:?} {b:?}");
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn critical_subgraphs() {
    for t in 1..=2 {
        for n in 1..=4 {
            let graphs: Vec<Multigraph> = all_multigraphs(n, t).collect();
            graphs.par_iter().for_each(|g| {
                let k = chi_t(g, t).unwrap().0;
                let h = critical_subgraph(g, t).unwrap();
                assert_eq!(chi_t(&h, t).unwrap().0, k);
                assert!(is_critical(&h, t).unwrap().is_critical, "{g:?} gave {h:?}");
                // A vertex-critical graph has no critical subgraph on fewer vertices.
                if is_vertex_critical(g, t).unwrap() {
                    assert_eq!(h.order(), n, "{g:?} gave {h:?}");
                }
            });
        }
    }
}

/// `(p, q)` straight from the definitions: `t`-dominating subgraphs that are
/// `K_1`, and those with `χ_t = 2` on at least three vertices. `G` itself
/// counts, as `G ⊞ ∅`.
fn census_brute_force(g: &Multigraph, t: u32) -> (usize, usize) {
    let n = g.order();
    let all = VertexSet::full(n);
    let (mut p, mut q) = (0, 0);
    for bits in 1..1u64 << n {
        let x = VertexSet::from_bits(bits);
        let rest = all.difference(x);
        if !x.iter().all(|u| rest.iter().all(|v| g.mult(u, v) == t)) {
            continue;
        }
        let h = g.induced_subgraph(x).unwrap().0;
        if x.len() == 1 {
            p += 1;
        } else if x.len() >= 3 && chi_t(&h, t).unwrap().0 == 2 && is_critical(&h, t).unwrap().is_critical {
            q += 1;
        }
    }
    (p, q)
}

#[test]
fn census_matches_definition() {
    small().par_iter().for_each(|(t, g)| {
        assert_eq!(t_dominating_census(g, *t).unwrap(), census_brute_force(g, *t), "{g:?}");
        let report = decompose(g, *t).unwrap();
        assert_eq!((report.p, report.q), census_brute_force(g, *t));
    });
}

#[test]
fn factors_are_critical_and_add_up() {
    small().par_iter().for_each(|(t, g)| {
        let k = chi_t(g, *t).unwrap().0;
        let report = decompose(g, *t).unwrap();
        assert!(report.factors.iter().all(|f| f.critical));
        assert_eq!(report.factors.iter().map(|f| f.k).sum::<u32>(), k);
        assert!(report.rejoin().unwrap().is_isomorphic(g).unwrap());
    });
}

#[test]
fn theorem_a_and_census_bounds_hold() {
    critical_graphs(|t| [0, 7, 6, 5][t as usize]).par_iter().for_each(|(t, g)| {
        assert!(check_theorem_a(g, *t).unwrap().verdict.holds(), "{g:?}");
        let r = check_theorem_7_1(g, *t).unwrap();
        assert!(r.verdict.holds(), "t={t} {g:?}: {r:?}");
    });
}

#[test]
fn blocks_beyond_t_two() {
    // The block formula for χ_t needs t <= 2. Two triangles sharing vertex 1
    // are each in SD_3, but together every vertex has degree at least 3.
    let g = Multigraph::from_edges(5, &[(0, 1, 1), (0, 4, 2), (1, 4, 1), (1, 2, 1), (1, 3, 1), (2, 3, 2)]).unwrap();
    let blocks = g.blocks().unwrap();
    assert_eq!(blocks.len(), 2);
    for b in blocks {
        assert_eq!(chi_t(&g.induced_subgraph(b).unwrap().0, 3).unwrap().0, 1);
    }
    assert_eq!(g.min_degree(), Some(3));
    assert_eq!(chi_t(&g, 3).unwrap().0, 2);
}
