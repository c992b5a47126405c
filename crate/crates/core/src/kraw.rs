//! Exact Krawtchouk and Lloyd polynomials.
//!
//! `K_t^h(x, m) = sum_j (-1)^j (h-1)^(t-j) C(x, j) C(m-x, t-j)` and
//! `Psi_k^h(x, m) = sum_{t <= k} K_t^h(x, m)`, evaluated in checked `i64`
//! arithmetic. Only `h = 3` is used by the rest of the crate.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Rows of the cached Pascal triangle. `C(64, 32) < 2^63`.
const PASCAL_ROWS: usize = 65;

fn pascal() -> &'static [[i64; PASCAL_ROWS]] {
    static TABLE: OnceLock<Vec<[i64; PASCAL_ROWS]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![[0i64; PASCAL_ROWS]; PASCAL_ROWS];
        for n in 0..PASCAL_ROWS {
            rows[n][0] = 1;
            for k in 1..=n {
                rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
        }
        rows
    })
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    assert!((n as usize) < PASCAL_ROWS, "binomial table holds n < {PASCAL_ROWS}");
    pascal()[n as usize][k as usize]
}

fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrawParams {
    pub t: usize,
    pub x: usize,
    pub m: usize,
    pub h: i64,
}

impl KrawParams {
    pub fn new(t: usize, x: usize, m: usize, h: i64) -> Result<KrawParams> {
        if m == 0 || m >= PASCAL_ROWS {
            return Err(Error::InvalidParams(format!("m = {m} outside 1..{PASCAL_ROWS}")));
        }
        if t > m || x > m {
            return Err(Error::InvalidParams(format!(
                "need 0 <= t, x <= m (t = {t}, x = {x}, m = {m})"
            )));
        }
        if h < 2 {
            return Err(Error::InvalidParams(format!("alphabet size h = {h} must be >= 2")));
        }
        Ok(KrawParams { t, x, m, h })
    }

    /// Ternary parameters.
    pub fn ternary(t: usize, x: usize, m: usize) -> Result<KrawParams> {
        KrawParams::new(t, x, m, 3)
    }
}

pub fn krawtchouk(p: &KrawParams) -> Result<i64> {
    let (t, x, m) = (p.t as i64, p.x as i64, p.m as i64);
    let mut acc = 0i64;
    for j in 0..=t {
        let term = checked_pow(p.h - 1, (t - j) as u32)?
            .checked_mul(binomial(x, j))
            .and_then(|v| v.checked_mul(binomial(m - x, t - j)))
            .ok_or(Error::Overflow("krawtchouk term"))?;
        acc = if j % 2 == 0 { acc.checked_add(term) } else { acc.checked_sub(term) }
            .ok_or(Error::Overflow("krawtchouk sum"))?;
    }
    Ok(acc)
}

/// Ternary Lloyd polynomial `Psi_k(x, m)`.
pub fn lloyd(k: usize, x: usize, m: usize) -> Result<i64> {
    KrawParams::ternary(k, x, m)?;
    (0..=k).try_fold(0i64, |acc, t| {
        let kt = krawtchouk(&KrawParams::ternary(t, x, m)?)?;
        acc.checked_add(kt).ok_or(Error::Overflow("lloyd sum"))
    })
}

/// `2^j * C(m, j)`, the size of the weight-`j` sphere in F_3^m.
pub fn sphere(m: usize, j: usize) -> i64 {
    binomial(m as i64, j as i64) << j
}

/// `sum_{j = lo}^{hi} 2^j C(m, j)`; empty when `lo > hi`.
pub fn sphere_sum(m: usize, lo: usize, hi: usize) -> i64 {
    (lo..=hi).map(|j| sphere(m, j)).sum()
}

/// Dense `K_t(x, m)` / `Psi_k(x, m)` lookup for one ternary `m`.
#[derive(Debug, Clone)]
pub struct KrawTable {
    m: usize,
    k: Vec<i64>,
    psi: Vec<i64>,
}

impl KrawTable {
    pub fn new(m: usize) -> Result<KrawTable> {
        let n = m + 1;
        let mut k = vec![0i64; n * n];
        let mut psi = vec![0i64; n * n];
        for x in 0..=m {
            let mut run = 0i64;
            for t in 0..=m {
                let v = krawtchouk(&KrawParams::ternary(t, x, m)?)?;
                run = run.checked_add(v).ok_or(Error::Overflow("lloyd sum"))?;
                k[t * n + x] = v;
                psi[t * n + x] = run;
            }
        }
        Ok(KrawTable { m, k, psi })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn k(&self, t: usize, x: usize) -> i64 {
        self.k[t * (self.m + 1) + x]
    }

    #[inline]
    pub fn psi(&self, k: usize, x: usize) -> i64 {
        self.psi[k * (self.m + 1) + x]
    }
}

/// Exhaustive checks of the Krawtchouk and Lloyd identities used by the
/// weight-ball construction. Each returns a description of the first failure.
pub mod identities {
    use super::*;
    use crate::gf3::{dot_planes, planes_of, pow3, weight_table};
    use crate::spectrum::EisensteinInt;

    type Check = std::result::Result<(), String>;

    fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
        if ok {
            Ok(())
        } else {
            Err(msg())
        }
    }

    /// `Psi_k(x, m) = K_k(x - 1, m - 1)` for `1 <= x <= m`, `1 <= k <= m - 1`.
    pub fn lloyd_shift(m: usize) -> Check {
        let (tab, prev) = (KrawTable::new(m).map_err(|e| e.to_string())?, KrawTable::new(m - 1).map_err(|e| e.to_string())?);
        for x in 1..=m {
            for k in 1..m {
                ensure(tab.psi(k, x) == prev.k(k, x - 1), || format!("Psi_{k}({x}, {m}) != K_{k}({}, {})", x - 1, m - 1))?;
            }
        }
        Ok(())
    }

    /// `K_t(0, m) = 2^t C(m, t)`.
    pub fn origin_value(m: usize) -> Check {
        let tab = KrawTable::new(m).map_err(|e| e.to_string())?;
        for t in 0..=m {
            ensure(tab.k(t, 0) == sphere(m, t), || format!("K_{t}(0, {m}) != 2^{t} C({m}, {t})"))?;
        }
        Ok(())
    }

    /// `|Psi_k(x, m)| <= 2^k C(m - 1, k)` for `1 <= x <= m`, `1 <= k <= m - 1`,
    /// with equality at `x = 1`.
    pub fn lloyd_bound(m: usize) -> Check {
        let tab = KrawTable::new(m).map_err(|e| e.to_string())?;
        for k in 1..m {
            let bound = sphere(m - 1, k);
            ensure(tab.psi(k, 1) == bound, || format!("Psi_{k}(1, {m}) != 2^{k} C({}, {k})", m - 1))?;
            for x in 1..=m {
                ensure(tab.psi(k, x).abs() <= bound, || format!("|Psi_{k}({x}, {m})| > 2^{k} C({}, {k})", m - 1))?;
            }
        }
        Ok(())
    }

    /// `sum_{wt(v) = t} zeta^(w.v) = K_t(wt(w), m)` for every `w` and `t`,
    /// summed in `Z[zeta_3]`.
    pub fn sphere_character_sums(m: usize) -> Check {
        let tab = KrawTable::new(m).map_err(|e| e.to_string())?;
        let wt = weight_table(m);
        let n = pow3(m);
        let planes: Vec<(u32, u32)> = (0..n).map(|v| planes_of(v, m)).collect();
        let bad = crate::par::map_range(n, |w| {
            let mut acc = vec![EisensteinInt::ZERO; m + 1];
            for (v, &vp) in planes.iter().enumerate() {
                let t = wt[v] as usize;
                acc[t] = acc[t] + EisensteinInt::zeta_pow(dot_planes(planes[w], vp).value() as i64);
            }
            let i = wt[w] as usize;
            (0..=m).find(|&t| acc[t] != EisensteinInt::new(tab.k(t, i), 0)).map(|t| (w, t, acc[t]))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((w, t, got)) => Err(format!("sphere sum at w index {w}, t = {t} is {got}")),
        }
    }

    /// `2^k C(m, k) > sum_{j < k} 2^j C(m, j)` for `2 <= k <= (m - 1) / 2`.
    pub fn shell_dominance(m: usize) -> Check {
        for k in 2..=(m - 1) / 2 {
            ensure(sphere(m, k) > sphere_sum(m, 1, k - 1), || format!("shell {k} does not dominate at m = {m}"))?;
        }
        Ok(())
    }

    /// `sum_{j=1}^{k} 2^j C(m, j) != -2 (Psi_k(i, m) - 1)` for
    /// `2 <= k <= (m - 1) / 2`, `1 <= i <= m`.
    pub fn ball_avoidance(m: usize) -> Check {
        let tab = KrawTable::new(m).map_err(|e| e.to_string())?;
        for k in 2..=(m - 1) / 2 {
            let lhs = sphere_sum(m, 1, k);
            for i in 1..=m {
                ensure(lhs != -2 * (tab.psi(k, i) - 1), || format!("ball sum hits -2(Psi_{k}({i}, {m}) - 1)"))?;
            }
        }
        Ok(())
    }
}
