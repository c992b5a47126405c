//! Character sums of functions F_3^m -> F_3 over the Eisenstein integers.
//!
//! For a function `F` and shift `w` the transform is
//! `F^(w) = sum_x zeta^(F(x) - w.x)` with `zeta = exp(2 pi i / 3)`. Since
//! `1 + zeta + zeta^2 = 0`, the value is determined by (and determines) the
//! value counts `N_lambda(w) = #{x : F(x) - w.x = lambda}`:
//!
//! ```text
//! F^(w) = (N0 - N2) + (N1 - N2) zeta
//! ```
//!
//! Everything here is exact. Real parts are reported doubled (`2 Re = 2a - b`)
//! so they stay integral.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf3::{check_dim, dot_planes, planes_of, pow3, weight_table, Trit, TritVector};
use crate::par;

/// `a + b*zeta` with `zeta^2 = -1 - zeta`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { a: 0, b: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };
    pub const ZETA: EisensteinInt = EisensteinInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt { a, b }
    }

    /// `zeta^k` for any integer `k`.
    pub const fn zeta_pow(k: i64) -> EisensteinInt {
        match k.rem_euclid(3) {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(0, 1),
            _ => EisensteinInt::new(-1, -1),
        }
    }

    #[inline]
    pub fn mul_zeta(self) -> EisensteinInt {
        EisensteinInt::new(-self.b, self.a - self.b)
    }

    #[inline]
    pub fn mul_zeta2(self) -> EisensteinInt {
        EisensteinInt::new(self.b - self.a, -self.a)
    }

    /// Complex conjugate, `zeta -> zeta^2`.
    pub fn conj(self) -> EisensteinInt {
        EisensteinInt::new(self.a - self.b, -self.b)
    }

    /// `|z|^2 = a^2 - ab + b^2`.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// `2 Re(z) = 2a - b`.
    #[inline]
    pub fn re_doubled(self) -> i64 {
        2 * self.a - self.b
    }
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    #[inline]
    fn add(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    #[inline]
    fn sub(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: EisensteinInt) -> EisensteinInt {
        let bb = self.b * o.b;
        EisensteinInt::new(self.a * o.a - bb, self.a * o.b + o.a * self.b - bb)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ζ", self.a, self.b)
    }
}

/// A total function F_3^m -> F_3, tabulated in index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryFunction {
    m: usize,
    table: Vec<Trit>,
}

impl TernaryFunction {
    pub fn new(m: usize, table: Vec<Trit>) -> Result<TernaryFunction> {
        check_dim("function table", m)?;
        if table.len() != pow3(m) {
            return Err(Error::InvalidParams(format!(
                "function table for m = {m} needs {} entries, got {}",
                pow3(m),
                table.len()
            )));
        }
        Ok(TernaryFunction { m, table })
    }

    pub fn zero(m: usize) -> Result<TernaryFunction> {
        check_dim("function table", m)?;
        Ok(TernaryFunction { m, table: vec![Trit::ZERO; pow3(m)] })
    }

    /// Tabulates `f(index)` over every index of F_3^m.
    pub fn from_fn(m: usize, f: impl Fn(usize) -> Trit + Sync + Send) -> Result<TernaryFunction> {
        check_dim("function table", m)?;
        Ok(TernaryFunction { m, table: par::map_range(pow3(m), f) })
    }

    /// The linear functional `x -> c.x`.
    pub fn linear(c: &TritVector) -> Result<TernaryFunction> {
        let cp = c.planes();
        let m = c.dim();
        TernaryFunction::from_fn(m, move |x| dot_planes(cp, planes_of(x, m)))
    }

    /// A uniformly random function with `F(0) = 0`.
    pub fn random_vanishing<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<TernaryFunction> {
        check_dim("function table", m)?;
        let mut table: Vec<Trit> = (0..pow3(m)).map(|_| Trit::reduce(rng.gen_range(0..3))).collect();
        table[0] = Trit::ZERO;
        Ok(TernaryFunction { m, table })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn eval(&self, idx: usize) -> Trit {
        self.table[idx]
    }

    pub fn eval_vec(&self, x: &TritVector) -> Result<Trit> {
        if x.dim() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: x.dim() });
        }
        Ok(self.table[x.index() as usize])
    }

    pub fn table(&self) -> &[Trit] {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|t| t.is_zero())
    }

    /// `u*self + r*other`.
    pub fn combine(&self, u: Trit, other: &TernaryFunction, r: Trit) -> Result<TernaryFunction> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch { left: self.m, right: other.m });
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&x, &y)| u * x + r * y)
            .collect();
        Ok(TernaryFunction { m: self.m, table })
    }

    pub fn neg(&self) -> TernaryFunction {
        TernaryFunction { m: self.m, table: self.table.iter().map(|&t| -t).collect() }
    }

    /// Serialises to the two-line table format: `m=<m>` then `3^m` digits.
    pub fn to_table_text(&self) -> String {
        let mut s = String::with_capacity(self.table.len() + 8);
        s.push_str(&format!("m={}\n", self.m));
        s.extend(self.table.iter().map(|t| char::from(b'0' + t.value())));
        s.push('\n');
        s
    }

    /// Parses the table format written by [`TernaryFunction::to_table_text`].
    pub fn parse_table_text(text: &str) -> Result<TernaryFunction> {
        let mut all = TernaryFunction::parse_many(text)?;
        match all.len() {
            1 => Ok(all.pop().unwrap()),
            n => Err(Error::Parse { line: 1, msg: format!("expected one function table, found {n}") }),
        }
    }

    /// Parses consecutive tables (used for `f` and `g` emitted together).
    pub fn parse_many(text: &str) -> Result<Vec<TernaryFunction>> {
        let mut out = Vec::new();
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        while let Some((ln, header)) = lines.next() {
            let m: usize = header
                .strip_prefix("m=")
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| Error::Parse { line: ln, msg: format!("expected `m=<int>`, got `{header}`") })?;
            check_dim("function table", m).map_err(|e| Error::Parse { line: ln, msg: e.to_string() })?;
            let (ln, body) = lines
                .next()
                .ok_or_else(|| Error::Parse { line: ln + 1, msg: "missing table line".into() })?;
            if body.len() != pow3(m) {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {} digits, found {}", pow3(m), body.len()),
                });
            }
            let table = body
                .bytes()
                .map(|c| match c {
                    b'0'..=b'2' => Ok(Trit::reduce((c - b'0') as i64)),
                    _ => Err(Error::Parse { line: ln, msg: format!("invalid digit `{}`", c as char) }),
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(TernaryFunction { m, table });
        }
        Ok(out)
    }
}

impl fmt::Debug for TernaryFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryFunction(m={}, ", self.m)?;
        for t in self.table.iter().take(32) {
            write!(f, "{t}")?;
        }
        if self.table.len() > 32 {
            write!(f, "...")?;
        }
        write!(f, ")")
    }
}

/// Per-shift value counts of `F(x) - w.x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSpectrum {
    m: usize,
    counts: Vec<[u32; 3]>,
}

impl CountSpectrum {
    fn from_values(m: usize, values: &[EisensteinInt]) -> CountSpectrum {
        let total = pow3(m) as i64;
        let counts = values
            .iter()
            .map(|z| {
                let rem = total - z.a - z.b;
                assert!(rem % 3 == 0, "transform value {z} is inconsistent with 3^{m} points");
                let n2 = rem / 3;
                let (n0, n1) = (z.a + n2, z.b + n2);
                assert!(n0 >= 0 && n1 >= 0 && n2 >= 0, "negative count recovered from {z}");
                assert_eq!(n0 + n1 + n2, total);
                [n0 as u32, n1 as u32, n2 as u32]
            })
            .collect();
        CountSpectrum { m, counts }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(N0, N1, N2)` at shift index `w`.
    #[inline]
    pub fn counts(&self, w: usize) -> [u32; 3] {
        self.counts[w]
    }

    pub fn all_counts(&self) -> &[[u32; 3]] {
        &self.counts
    }

    pub fn transform_value(&self, w: usize) -> EisensteinInt {
        let [n0, n1, n2] = self.counts[w].map(i64::from);
        EisensteinInt::new(n0 - n2, n1 - n2)
    }

    /// `2 Re F^(w) = 2 N0 - N1 - N2`.
    #[inline]
    pub fn real_doubled(&self, w: usize) -> i64 {
        let [n0, n1, n2] = self.counts[w].map(i64::from);
        2 * n0 - n1 - n2
    }

    pub fn real_doubled_table(&self) -> Vec<i64> {
        (0..self.counts.len()).map(|w| self.real_doubled(w)).collect()
    }

    /// `sum_w |F^(w)|^2`; equals `3^(2m)` for every function.
    pub fn parseval_sum(&self) -> i64 {
        (0..self.counts.len()).map(|w| self.transform_value(w).norm()).sum()
    }

    /// Shift of a linear functional coinciding with `F`, if any.
    pub fn linear_witness(&self) -> Option<usize> {
        let full = 2 * pow3(self.m) as i64;
        (0..self.counts.len()).find(|&w| self.real_doubled(w) == full)
    }

    /// Doubled real parts grouped by the Hamming weight of the shift:
    /// `result[i]` maps each value taken on weight-`i` shifts to its frequency.
    pub fn weight_classes(&self) -> Vec<BTreeMap<i64, u64>> {
        let wt = weight_table(self.m);
        let mut out = vec![BTreeMap::new(); self.m + 1];
        for (w, &i) in wt.iter().enumerate() {
            *out[i as usize].entry(self.real_doubled(w)).or_insert(0) += 1;
        }
        out
    }
}

/// Largest dimension accepted by [`transform_naive`].
pub const NAIVE_MAX_DIM: usize = 10;

/// Direct O(9^m) evaluation of every count.
pub fn transform_naive(f: &TernaryFunction) -> Result<CountSpectrum> {
    let m = f.dim();
    if m > NAIVE_MAX_DIM {
        return Err(Error::Capacity { what: "naive transform", m, max: NAIVE_MAX_DIM });
    }
    let n = pow3(m);
    let planes: Vec<(u32, u32)> = (0..n).map(|x| planes_of(x, m)).collect();
    let counts = par::map_range(n, |w| {
        let wp = planes[w];
        let mut c = [0u32; 3];
        for (x, &xp) in planes.iter().enumerate() {
            let lambda = f.eval(x) - dot_planes(wp, xp);
            c[lambda.value() as usize] += 1;
        }
        c
    });
    Ok(CountSpectrum { m, counts })
}

/// Transform values `F^(w)` for every `w` by a radix-3 decimation over the
/// digits of `x`, O(m 3^m) ring operations.
pub fn transform_values(f: &TernaryFunction) -> Vec<EisensteinInt> {
    let m = f.dim();
    let n = pow3(m);
    let mut buf: Vec<EisensteinInt> = f
        .table()
        .iter()
        .map(|t| EisensteinInt::zeta_pow(t.value() as i64))
        .collect();

    // (y0, y1, y2) -> (y0 + y1 + y2, y0 + y1 z^2 + y2 z, y0 + y1 z + y2 z^2)
    let butterfly = |y0: &mut EisensteinInt, y1: &mut EisensteinInt, y2: &mut EisensteinInt| {
        let (a, b, c) = (*y0, *y1, *y2);
        *y0 = a + b + c;
        *y1 = a + b.mul_zeta2() + c.mul_zeta();
        *y2 = a + b.mul_zeta() + c.mul_zeta2();
    };

    let mut stride = 1usize;
    for _ in 0..m {
        let block = 3 * stride;
        let run = |chunk: &mut [EisensteinInt]| {
            let (lo, rest) = chunk.split_at_mut(stride);
            let (mid, hi) = rest.split_at_mut(stride);
            for ((y0, y1), y2) in lo.iter_mut().zip(mid.iter_mut()).zip(hi.iter_mut()) {
                butterfly(y0, y1, y2);
            }
        };
        if n / block >= 4 * par::current_num_threads() {
            par::for_each_chunk_mut(&mut buf, block, |_, chunk| run(chunk));
        } else {
            // few wide blocks: split each one across workers instead
            for chunk in buf.chunks_mut(block) {
                let (lo, rest) = chunk.split_at_mut(stride);
                let (mid, hi) = rest.split_at_mut(stride);
                par::zip3_mut(lo, mid, hi, butterfly);
            }
        }
        stride = block;
    }
    buf
}

/// Count spectrum via the fast transform.
pub fn transform(f: &TernaryFunction) -> Result<CountSpectrum> {
    check_dim("transform", f.dim())?;
    Ok(CountSpectrum::from_values(f.dim(), &transform_values(f)))
}

/// `2 Re F^(w)` read off a spectrum.
pub fn real_doubled(s: &CountSpectrum, w: usize) -> i64 {
    s.real_doubled(w)
}

/// True iff `F` coincides with no linear functional `x -> w.x`.
pub fn is_linear_coset_free(f: &TernaryFunction) -> Result<bool> {
    Ok(transform(f)?.linear_witness().is_none())
}
