//! Arithmetic and enumeration for vectors over F_3.
//!
//! A vector of F_3^m is identified with its base-3 little-endian index
//! `sum digits[i] * 3^i`. That index fixes the global enumeration order used by
//! function tables, spectra and the coordinate order of codewords.
//!
//! [`TritVector`] stores its digits as two bit-planes (`ones`, `twos`), which makes
//! weight, negation, addition and inner products branch-free popcount operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported dimension. Dense tables hold `3^MAX_DIM` entries.
pub const MAX_DIM: usize = 16;

/// `3^m` as a `usize`.
#[inline]
pub const fn pow3(m: usize) -> usize {
    let mut r = 1usize;
    let mut i = 0;
    while i < m {
        r *= 3;
        i += 1;
    }
    r
}

pub(crate) fn check_dim(what: &'static str, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams(format!("{what}: dimension must be positive")));
    }
    if m > MAX_DIM {
        return Err(Error::Capacity { what, m, max: MAX_DIM });
    }
    Ok(())
}

/// An element of F_3.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(transparent)]
#[serde(try_from = "u8", into = "u8")]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);
    pub const ALL: [Trit; 3] = [Trit::ZERO, Trit::ONE, Trit::TWO];

    /// Returns `None` unless `v < 3`.
    pub const fn new(v: u8) -> Option<Trit> {
        if v < 3 {
            Some(Trit(v))
        } else {
            None
        }
    }

    /// Reduces any integer mod 3.
    pub const fn reduce(v: i64) -> Trit {
        Trit(v.rem_euclid(3) as u8)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The canonical signed representative in {-1, 0, 1}.
    pub const fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
}

impl TryFrom<u8> for Trit {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        Trit::new(v).ok_or_else(|| Error::InvalidParams(format!("{v} is not an element of F_3")))
    }
}

impl From<Trit> for u8 {
    fn from(t: Trit) -> u8 {
        t.0
    }
}

impl fmt::Debug for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Trit {
    type Output = Trit;
    #[inline]
    fn add(self, rhs: Trit) -> Trit {
        let s = self.0 + rhs.0;
        Trit(if s >= 3 { s - 3 } else { s })
    }
}

impl Sub for Trit {
    type Output = Trit;
    #[inline]
    fn sub(self, rhs: Trit) -> Trit {
        self + (-rhs)
    }
}

impl Neg for Trit {
    type Output = Trit;
    #[inline]
    fn neg(self) -> Trit {
        Trit(if self.0 == 0 { 0 } else { 3 - self.0 })
    }
}

impl Mul for Trit {
    type Output = Trit;
    #[inline]
    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

/// An element of F_3^m, `1 <= m <= MAX_DIM`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TritVector {
    m: u8,
    ones: u32,
    twos: u32,
}

impl TritVector {
    pub fn zero(m: usize) -> Result<TritVector> {
        check_dim("vector", m)?;
        Ok(TritVector { m: m as u8, ones: 0, twos: 0 })
    }

    /// The `i`-th standard basis vector.
    pub fn unit(i: usize, m: usize) -> Result<TritVector> {
        check_dim("vector", m)?;
        if i >= m {
            return Err(Error::InvalidParams(format!("coordinate {i} out of range for m = {m}")));
        }
        Ok(TritVector { m: m as u8, ones: 1 << i, twos: 0 })
    }

    pub fn from_index(idx: u64, m: usize) -> Result<TritVector> {
        check_dim("vector", m)?;
        if idx >= pow3(m) as u64 {
            return Err(Error::IndexOutOfRange { idx, m });
        }
        let (ones, twos) = planes_of(idx as usize, m);
        Ok(TritVector { m: m as u8, ones, twos })
    }

    pub fn from_digits(digits: &[Trit]) -> Result<TritVector> {
        let m = digits.len();
        check_dim("vector", m)?;
        let mut v = TritVector { m: m as u8, ones: 0, twos: 0 };
        for (i, d) in digits.iter().enumerate() {
            match d.0 {
                1 => v.ones |= 1 << i,
                2 => v.twos |= 1 << i,
                _ => {}
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m as usize
    }

    pub fn index(&self) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.dim()).rev() {
            idx = idx * 3 + self.digit(i).0 as u64;
        }
        idx
    }

    #[inline]
    pub fn digit(&self, i: usize) -> Trit {
        Trit(((self.ones >> i) & 1) as u8 | ((((self.twos >> i) & 1) as u8) << 1))
    }

    pub fn digits(&self) -> Vec<Trit> {
        (0..self.dim()).map(|i| self.digit(i)).collect()
    }

    /// Bit-planes `(ones, twos)`: bit `i` is set in `ones` iff digit `i` is 1.
    #[inline]
    pub fn planes(&self) -> (u32, u32) {
        (self.ones, self.twos)
    }

    #[inline]
    pub fn hamming_weight(&self) -> usize {
        (self.ones | self.twos).count_ones() as usize
    }

    fn same_dim(&self, other: &TritVector) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    pub fn dot(&self, other: &TritVector) -> Result<Trit> {
        self.same_dim(other)?;
        Ok(dot_planes(self.planes(), other.planes()))
    }

    pub fn checked_add(&self, other: &TritVector) -> Result<TritVector> {
        self.same_dim(other)?;
        let (ones, twos) = add_planes(self.planes(), other.planes());
        Ok(TritVector { m: self.m, ones, twos })
    }

    pub fn checked_sub(&self, other: &TritVector) -> Result<TritVector> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> TritVector {
        TritVector { m: self.m, ones: self.twos, twos: self.ones }
    }

    pub fn scale(&self, c: Trit) -> TritVector {
        match c.0 {
            0 => TritVector { m: self.m, ones: 0, twos: 0 },
            1 => *self,
            _ => self.neg(),
        }
    }
}

impl fmt::Debug for TritVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.digit(i))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for TritVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn index_to_vector(idx: u64, m: usize) -> Result<TritVector> {
    TritVector::from_index(idx, m)
}

pub fn vector_to_index(v: &TritVector) -> u64 {
    v.index()
}

/// Bit-planes of the vector with index `idx`.
#[inline]
pub fn planes_of(mut idx: usize, m: usize) -> (u32, u32) {
    let (mut ones, mut twos) = (0u32, 0u32);
    for i in 0..m {
        match idx % 3 {
            1 => ones |= 1 << i,
            2 => twos |= 1 << i,
            _ => {}
        }
        idx /= 3;
    }
    (ones, twos)
}

/// Inner product of two plane-encoded vectors.
#[inline]
pub fn dot_planes((a1, a2): (u32, u32), (b1, b2): (u32, u32)) -> Trit {
    // 1*1 = 2*2 = 1 and 1*2 = 2*1 = 2 (mod 3)
    let ones = (a1 & b1).count_ones() + (a2 & b2).count_ones();
    let twos = (a1 & b2).count_ones() + (a2 & b1).count_ones();
    Trit(((ones + 2 * twos) % 3) as u8)
}

/// Componentwise sum of two plane-encoded vectors.
#[inline]
pub fn add_planes((a1, a2): (u32, u32), (b1, b2): (u32, u32)) -> (u32, u32) {
    let a0 = !(a1 | a2);
    let b0 = !(b1 | b2);
    let s1 = (a1 & b0) | (a0 & b1) | (a2 & b2);
    let s2 = (a2 & b0) | (a0 & b2) | (a1 & b1);
    (s1, s2)
}

/// `table[idx]` = index of `-v` where `v` has index `idx`.
pub fn negation_table(m: usize) -> Vec<u32> {
    let mut out = vec![0u32; pow3(m)];
    let mut p = 1usize;
    for _ in 0..m {
        // entries below p already hold the negation of the low digits
        for j in 0..p {
            out[p + j] = out[j] + 2 * p as u32;
            out[2 * p + j] = out[j] + p as u32;
        }
        p *= 3;
    }
    out
}

/// `table[idx]` = Hamming weight of the vector with index `idx`.
pub fn weight_table(m: usize) -> Vec<u8> {
    let mut out = vec![0u8; pow3(m)];
    let mut p = 1usize;
    for _ in 0..m {
        for j in 0..p {
            out[p + j] = out[j] + 1;
            out[2 * p + j] = out[j] + 1;
        }
        p *= 3;
    }
    out
}

/// Fills `out[b]` with the index of `a + b` (`negate_b = false`) or `a - b`
/// (`negate_b = true`) for every `b` in F_3^m, in O(3^m).
pub fn translate_into(a: usize, m: usize, negate_b: bool, out: &mut [u32]) {
    debug_assert_eq!(out.len(), pow3(m));
    out[0] = a as u32;
    let mut rest = a;
    let mut p = 1usize;
    for _ in 0..m {
        let ak = (rest % 3) as i64;
        rest /= 3;
        for t in 1..3i64 {
            let step = if negate_b { -t } else { t };
            let delta = ((ak + step).rem_euclid(3) - ak) * p as i64;
            let (lo, hi) = out.split_at_mut(t as usize * p);
            for (dst, src) in hi[..p].iter_mut().zip(&lo[..p]) {
                *dst = (*src as i64 + delta) as u32;
            }
        }
        p *= 3;
    }
}

/// Number of vectors of Hamming weight `i` in F_3^m: `2^i * C(m, i)`.
pub fn sphere_size(m: usize, i: usize) -> u64 {
    if i > m {
        return 0;
    }
    let mut c = 1u64;
    for j in 0..i {
        c = c * (m - j) as u64 / (j + 1) as u64;
    }
    c << i
}
