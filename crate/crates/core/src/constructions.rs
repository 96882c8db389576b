//! Named families and the Dirac and Hajós joins.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// `K_k`.
pub fn complete(k: usize) -> Result<Multigraph> {
    s_clique(1, k)
}

/// `C_n` for `n >= 2`; `C_2` is a double edge.
pub fn cycle(n: usize) -> Result<Multigraph> {
    s_cycle(1, n)
}

/// `sK_n`: every pair joined by `s` parallel edges.
pub fn s_clique(s: u32, n: usize) -> Result<Multigraph> {
    if s == 0 {
        return Err(Error::OutOfRange("clique multiplicity must be at least 1".into()));
    }
    let mut g = Multigraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_mult_raw(u, v, s);
        }
    }
    Ok(g)
}

/// `sC_n`, with consecutive vertices `i, i+1 (mod n)` joined by `s` edges.
pub fn s_cycle(s: u32, n: usize) -> Result<Multigraph> {
    if s == 0 || n < 2 {
        return Err(Error::OutOfRange(format!("cycle needs s >= 1 and n >= 2 (got s={s}, n={n})")));
    }
    let mut g = Multigraph::new(n)?;
    for i in 0..n {
        g.add_edges(i, (i + 1) % n, s)?;
    }
    Ok(g)
}

/// `K_3(t)`: `(t/2)K_3` for even `t`, `((t+1)/2)K_3` minus one edge for odd
/// `t`. The thinned pair is `(0, 1)`.
pub fn k3t(t: u32) -> Result<Multigraph> {
    if t < 2 {
        return Err(Error::OutOfRange(format!("K_3(t) needs t >= 2 (got {t})")));
    }
    if t % 2 == 0 {
        s_clique(t / 2, 3)
    } else {
        s_clique(t.div_ceil(2), 3)?.delete_edge(0, 1)
    }
}

/// A member of the Dirac–Gallai family `DG(k)`, split by `|Y_1| = y1`.
///
/// Vertex layout: `X = 0..k-2`, `Y_1`, `Y_2`, then `v_1`, `v_2`.
pub fn gallai_dirac(k: usize, y1: usize) -> Result<Multigraph> {
    if k < 3 || y1 < 1 || y1 > k - 2 {
        return Err(Error::OutOfRange(format!("DG(k) needs k >= 3 and 1 <= |Y1| <= k-2 (got k={k}, |Y1|={y1})")));
    }
    let x = 0..k - 2;
    let y = k - 2..2 * k - 3;
    let y_1 = k - 2..k - 2 + y1;
    let y_2 = k - 2 + y1..2 * k - 3;
    let (v1, v2) = (2 * k - 3, 2 * k - 2);
    let mut g = Multigraph::new(2 * k - 1)?;
    for part in [x.clone(), y] {
        for u in part.clone() {
            for v in part.clone().filter(|&v| v > u) {
                g.set_mult_raw(u, v, 1);
            }
        }
    }
    for (hub, side) in [(v1, y_1), (v2, y_2)] {
        for u in x.clone().chain(side) {
            g.set_mult_raw(hub, u, 1);
        }
    }
    Ok(g)
}

/// `G_1 ⊞^l G_2`. Vertices of `g1` keep their indices; those of `g2` follow.
pub fn dirac_join(g1: &Multigraph, g2: &Multigraph, l: u32) -> Result<Multigraph> {
    g1.dirac_join(g2, l)
}

/// Dirac join of a whole list, left to right.
pub fn dirac_join_all<'a>(parts: impl IntoIterator<Item = &'a Multigraph>, l: u32) -> Result<Multigraph> {
    parts.into_iter().try_fold(Multigraph::empty(), |acc, g| acc.dirac_join(g, l))
}

/// Operands of a Hajós `l`-join `(G_1, u_1, v_1, E_1) ∇^l (G_2, u_2, v_2, E_2)`.
///
/// The deleted sets `E_i` are any `l` parallel edges of the `(u_i, v_i)`
/// bundle; parallel edges are indistinguishable, so only their number matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HajosSpec {
    pub g1: Multigraph,
    pub u1: usize,
    pub v1: usize,
    pub g2: Multigraph,
    pub u2: usize,
    pub v2: usize,
    pub l: u32,
}

/// Hajós `l`-join. Numbering: `G_1` as is, then `G_2` without `v_2`, which
/// is merged into `v_1`.
pub fn hajos_join(spec: &HajosSpec) -> Result<Multigraph> {
    let HajosSpec { g1, u1, v1, g2, u2, v2, l } = spec;
    let (u1, v1, u2, v2, l) = (*u1, *v1, *u2, *v2, *l);
    for (g, u, v) in [(g1, u1, v1), (g2, u2, v2)] {
        for w in [u, v] {
            if w >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: w, order: g.order() });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if g.mult(u, v) < l {
            return Err(Error::OutOfRange(format!(
                "pair ({u}, {v}) has multiplicity {} < l = {l}",
                g.mult(u, v)
            )));
        }
    }
    let h1 = g1.delete_edges(u1, v1, l)?;
    let h2 = g2.delete_edges(u2, v2, l)?;
    let n1 = g1.order();
    let index = |w: usize| -> usize {
        match w.cmp(&v2) {
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Greater => n1 + w - 1,
        }
    };
    let mut g = Multigraph::new(n1 + g2.order() - 1)?;
    for (a, b, m) in h1.pairs() {
        g.set_mult_raw(a, b, m);
    }
    for (a, b, m) in h2.pairs() {
        g.add_edges(index(a), index(b), m)?;
    }
    g.add_edges(u1, index(u2), l)?;
    Ok(g)
}
