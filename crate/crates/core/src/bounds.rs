//! Reference values for `ext_t(k, n)`, the least edge count of a critical
//! graph in `Cri_t(k, n)`. Pure arithmetic; fields outside a formula's
//! stated range are `None`.

use num_rational::Ratio;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFormulas {
    pub t: u32,
    pub k: u32,
    pub n: u32,
    /// `n - k`.
    pub p: i64,
    /// `t(k-1)n / 2`, from `δ >= t(k-1)`.
    pub trivial: Ratio<i64>,
    /// `((k+1)(k-2)n - k(k-3)) / (2(k-1))` for `t = 1`, `n >= k >= 4`, `n != k+1`.
    pub kostochka_yancey: Option<Ratio<i64>>,
    /// `t C(n,2) - t p^2` for `2 <= p <= k-2`; a lower bound only for graphs
    /// with no `t`-dominating subgraph in `Cri_t(1) ∪ Cri_t(2)`.
    pub theorem_8_5: Option<i64>,
    /// `t C(n,2) - (t/2)(2p+1)p` for even `t` and `1 <= p <= k-1`.
    pub theorem_b: Option<i64>,
    /// `C(n,2) - (p^2+1)` for `t = 1` and `2 <= p <= k-1`.
    pub gallai: Option<i64>,
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub fn bound_formulas(t: u32, k: u32, n: u32) -> Result<BoundFormulas> {
    if t == 0 {
        return Err(Error::ZeroT);
    }
    if k == 0 || n == 0 {
        return Err(Error::OutOfRange(format!("k and n must be positive (got k={k}, n={n})")));
    }
    let (ti, ki, ni) = (t as i64, k as i64, n as i64);
    let p = ni - ki;
    let trivial = Ratio::new(ti * (ki - 1) * ni, 2);
    let kostochka_yancey = (t == 1 && n >= k && k >= 4 && n != k + 1)
        .then(|| Ratio::new((ki + 1) * (ki - 2) * ni - ki * (ki - 3), 2 * (ki - 1)));
    let theorem_8_5 = (2 <= p && p <= ki - 2).then(|| ti * choose2(ni) - ti * p * p);
    let theorem_b = (t % 2 == 0 && 1 <= p && p <= ki - 1).then(|| ti * choose2(ni) - ti / 2 * (2 * p + 1) * p);
    let gallai = (t == 1 && 2 <= p && p <= ki - 1).then(|| choose2(ni) - (p * p + 1));
    Ok(BoundFormulas { t, k, n, p, trivial, kostochka_yancey, theorem_8_5, theorem_b, gallai })
}
