//! The two-function ternary code
//!
//! ```text
//! C(f, g) = { (u f(x) + r g(x) + v.x) for x in F_3^m \ {0} : u, r in F_3, v in F_3^m }
//! ```
//!
//! A [`CodeSpec`] holds `f`, `g` and the spectra of the family
//! `{f, g, f+g, f-g}`. Every other combination `u f + r g` is plus or minus one
//! of those four, and `Re(-F)^(w) = Re F^(-w)`, so four transforms answer every
//! weight and complete-weight question about the code without materialising it.
//!
//! Coordinates are ordered by ascending index `1..3^m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf3::{dot_planes, negation_table, planes_of, pow3, Trit, TritVector};
use crate::par;
use crate::spectrum::{transform, CountSpectrum, TernaryFunction};

/// Members of the family `{f, g, f+g, f-g}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Member {
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "f+g")]
    FPlusG,
    #[serde(rename = "f-g")]
    FMinusG,
}

impl Member {
    pub const ALL: [Member; 4] = [Member::F, Member::G, Member::FPlusG, Member::FMinusG];

    /// `(u, r)` with `member = u f + r g`.
    pub const fn coeffs(self) -> (Trit, Trit) {
        match self {
            Member::F => (Trit::ONE, Trit::ZERO),
            Member::G => (Trit::ZERO, Trit::ONE),
            Member::FPlusG => (Trit::ONE, Trit::ONE),
            Member::FMinusG => (Trit::ONE, Trit::TWO),
        }
    }

    pub const fn slot(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Member::F => "f",
            Member::G => "g",
            Member::FPlusG => "f+g",
            Member::FMinusG => "f-g",
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolves `u f + r g` to `(member, negated)`; `None` for `(0, 0)`.
pub const fn classify(u: Trit, r: Trit) -> Option<(Member, bool)> {
    match (u.value(), r.value()) {
        (0, 0) => None,
        (1, 0) => Some((Member::F, false)),
        (2, 0) => Some((Member::F, true)),
        (0, 1) => Some((Member::G, false)),
        (0, 2) => Some((Member::G, true)),
        (1, 1) => Some((Member::FPlusG, false)),
        (2, 2) => Some((Member::FPlusG, true)),
        (1, 2) => Some((Member::FMinusG, false)),
        _ => Some((Member::FMinusG, true)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `F` is identically zero.
    ZeroFunction,
    /// `F(0) != 0`.
    NonzeroAtOrigin,
    /// `F(x) = w.x` for the witness shift `w`.
    Linear,
}

/// Which family member broke which hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisViolation {
    pub member: Member,
    pub kind: ViolationKind,
    /// Shift index of the coinciding linear functional, for [`ViolationKind::Linear`].
    pub witness: Option<u64>,
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::ZeroFunction => write!(f, "{} is the zero function", self.member),
            ViolationKind::NonzeroAtOrigin => write!(f, "{}(0) != 0", self.member),
            ViolationKind::Linear => write!(
                f,
                "{} coincides with the linear functional of shift index {}",
                self.member,
                self.witness.unwrap_or_default()
            ),
        }
    }
}

/// Parameters `(u, r, v)` of one codeword, `v` given by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodewordParams {
    pub u: u8,
    pub r: u8,
    pub v: u64,
}

impl CodewordParams {
    pub fn new(u: Trit, r: Trit, v: u64) -> CodewordParams {
        CodewordParams { u: u.value(), r: r.value(), v }
    }

    pub fn trits(&self) -> (Trit, Trit) {
        (Trit::reduce(self.u as i64), Trit::reduce(self.r as i64))
    }
}

/// A validated code: `f`, `g` and the spectra of `{f, g, f+g, f-g}`.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    m: usize,
    members: [TernaryFunction; 4],
    spectra: [CountSpectrum; 4],
    neg: Vec<u32>,
}

/// Largest dimension for which codewords may be materialised.
pub const MATERIALIZE_MAX_DIM: usize = 10;

pub fn validate(m: usize, f: TernaryFunction, g: TernaryFunction) -> Result<CodeSpec> {
    if f.dim() != m || g.dim() != m {
        return Err(Error::DimensionMismatch { left: m, right: if f.dim() != m { f.dim() } else { g.dim() } });
    }
    CodeSpec::validate(f, g)
}

impl CodeSpec {
    /// Checks the hypotheses on every member of `{f, g, f+g, f-g}` in that order
    /// and builds the four spectra.
    pub fn validate(f: TernaryFunction, g: TernaryFunction) -> Result<CodeSpec> {
        let m = f.dim();
        if g.dim() != m {
            return Err(Error::DimensionMismatch { left: m, right: g.dim() });
        }
        let sum = f.combine(Trit::ONE, &g, Trit::ONE)?;
        let diff = f.combine(Trit::ONE, &g, Trit::TWO)?;
        let members = [f, g, sum, diff];
        let mut spectra = Vec::with_capacity(4);
        for (member, func) in Member::ALL.into_iter().zip(&members) {
            let fail = |kind, witness| Error::Hypothesis(HypothesisViolation { member, kind, witness });
            if func.is_zero() {
                return Err(fail(ViolationKind::ZeroFunction, None));
            }
            if !func.eval(0).is_zero() {
                return Err(fail(ViolationKind::NonzeroAtOrigin, None));
            }
            let s = transform(func)?;
            if let Some(w) = s.linear_witness() {
                return Err(fail(ViolationKind::Linear, Some(w as u64)));
            }
            spectra.push(s);
        }
        let spectra: [CountSpectrum; 4] = spectra.try_into().expect("four spectra");
        Ok(CodeSpec { m, members, spectra, neg: negation_table(m) })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn f(&self) -> &TernaryFunction {
        &self.members[0]
    }

    pub fn g(&self) -> &TernaryFunction {
        &self.members[1]
    }

    pub fn member(&self, which: Member) -> &TernaryFunction {
        &self.members[which.slot()]
    }

    pub fn spectrum(&self, which: Member) -> &CountSpectrum {
        &self.spectra[which.slot()]
    }

    pub fn length(&self) -> u64 {
        pow3(self.m) as u64 - 1
    }

    pub(crate) fn negation(&self) -> &[u32] {
        &self.neg
    }

    /// `2 Re sum_{x in F_3^m} zeta^(u f(x) + r g(x) + v.x)`.
    pub fn codeword_re_doubled(&self, u: Trit, r: Trit, v: usize) -> i64 {
        match classify(u, r) {
            None if v == 0 => 2 * pow3(self.m) as i64,
            None => 0,
            Some((member, false)) => self.spectra[member.slot()].real_doubled(self.neg[v] as usize),
            Some((member, true)) => self.spectra[member.slot()].real_doubled(v),
        }
    }

    /// Value counts `(t0, t1, t2)` of codeword `(u, r, v)` over the `3^m - 1`
    /// nonzero coordinates.
    pub fn codeword_counts(&self, u: Trit, r: Trit, v: usize) -> [u64; 3] {
        let n = pow3(self.m) as u64;
        // the origin always carries value 0 and is not a coordinate
        let [n0, n1, n2] = match classify(u, r) {
            None if v == 0 => [n, 0, 0],
            None => [n / 3; 3],
            Some((member, false)) => self.spectra[member.slot()].counts(self.neg[v] as usize).map(u64::from),
            Some((member, true)) => {
                let [c0, c1, c2] = self.spectra[member.slot()].counts(v).map(u64::from);
                [c0, c2, c1]
            }
        };
        [n0 - 1, n1, n2]
    }

    fn weight_at(&self, u: Trit, r: Trit, v: usize) -> u64 {
        let re = self.codeword_re_doubled(u, r, v);
        assert!(re % 3 == 0, "2 Re = {re} is not divisible by 3 at (u={u}, r={r}, v={v})");
        let w = 2 * pow3(self.m - 1) as i64 - re / 3;
        assert!(w >= 0, "negative weight at (u={u}, r={r}, v={v})");
        w as u64
    }

    /// Hamming weight of codeword `(u, r, v)` from the stored spectra.
    pub fn weight_of(&self, u: Trit, r: Trit, v: &TritVector) -> Result<u64> {
        if v.dim() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: v.dim() });
        }
        Ok(self.weight_at(u, r, v.index() as usize))
    }

    pub fn weight_of_index(&self, u: Trit, r: Trit, v: u64) -> Result<u64> {
        if v >= pow3(self.m) as u64 {
            return Err(Error::IndexOutOfRange { idx: v, m: self.m });
        }
        Ok(self.weight_at(u, r, v as usize))
    }

    /// Weight distribution over all `3^(m+2)` parameter triples.
    pub fn weight_distribution(&self) -> WeightDistribution {
        let entries = par::fold_range(
            pow3(self.m),
            BTreeMap::new,
            |mut acc, v| {
                for u in Trit::ALL {
                    for r in Trit::ALL {
                        *acc.entry(self.weight_at(u, r, v)).or_insert(0u64) += 1;
                    }
                }
                acc
            },
            merge_counts,
        );
        WeightDistribution { entries }
    }

    /// Complete weight enumerator over all `3^(m+2)` parameter triples.
    pub fn cwe(&self) -> CompleteWeightEnumerator {
        let terms = par::fold_range(
            pow3(self.m),
            BTreeMap::new,
            |mut acc, v| {
                for u in Trit::ALL {
                    for r in Trit::ALL {
                        *acc.entry(self.codeword_counts(u, r, v)).or_insert(0u64) += 1;
                    }
                }
                acc
            },
            merge_counts,
        );
        CompleteWeightEnumerator { terms }
    }

    /// Dimension certified by counting parameter triples of weight zero: the
    /// map `(u, r, v) -> codeword` is injective iff only `(0, 0, 0)` has weight 0.
    pub fn dimension(&self) -> usize {
        let zeros = par::fold_range(
            pow3(self.m),
            || 0u64,
            |acc, v| {
                let mut acc = acc;
                for u in Trit::ALL {
                    for r in Trit::ALL {
                        if self.weight_at(u, r, v) == 0 {
                            acc += 1;
                        }
                    }
                }
                acc
            },
            |a, b| a + b,
        );
        // the kernel of a linear map has 3^k elements
        let mut k = 0;
        let mut z = zeros;
        while z > 1 {
            assert!(z % 3 == 0, "kernel size {zeros} is not a power of 3");
            z /= 3;
            k += 1;
        }
        self.m + 2 - k
    }

    /// Writes out codeword `(u, r, v)` in coordinate order.
    pub fn materialize(&self, u: Trit, r: Trit, v: &TritVector) -> Result<Codeword> {
        if self.m > MATERIALIZE_MAX_DIM {
            return Err(Error::Capacity { what: "codeword materialisation", m: self.m, max: MATERIALIZE_MAX_DIM });
        }
        if v.dim() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: v.dim() });
        }
        let word = self.word(u, r, v);
        let cw = Codeword { params: CodewordParams::new(u, r, v.index()), word };
        let expected = self.weight_of(u, r, v)?;
        assert_eq!(cw.weight(), expected, "materialised weight disagrees with spectra");
        Ok(cw)
    }

    pub(crate) fn word(&self, u: Trit, r: Trit, v: &TritVector) -> Vec<Trit> {
        let (f, g) = (self.f(), self.g());
        let vp = v.planes();
        (1..pow3(self.m))
            .map(|x| u * f.eval(x) + r * g.eval(x) + dot_planes(vp, planes_of(x, self.m)))
            .collect()
    }
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    if a.len() < b.len() {
        return merge_counts(b, a);
    }
    for (k, c) in b {
        *a.entry(k).or_insert(0) += c;
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub params: CodewordParams,
    pub word: Vec<Trit>,
}

impl Codeword {
    pub fn weight(&self) -> u64 {
        self.word.iter().filter(|t| !t.is_zero()).count() as u64
    }
}

/// Multiset of codeword weights.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub entries: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> WeightDistribution {
        let mut entries = BTreeMap::new();
        for (w, c) in pairs {
            if c > 0 {
                *entries.entry(w).or_insert(0) += c;
            }
        }
        WeightDistribution { entries }
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn count(&self, weight: u64) -> u64 {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    pub fn min_nonzero(&self) -> Option<u64> {
        self.entries.keys().copied().find(|&w| w > 0)
    }

    pub fn max(&self) -> Option<u64> {
        self.entries.keys().next_back().copied().filter(|&w| w > 0)
    }
}

/// Multiset of exponent triples `(t0, t1, t2)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteWeightEnumerator {
    pub terms: BTreeMap<[u64; 3], u64>,
}

impl CompleteWeightEnumerator {
    pub fn from_terms(terms: impl IntoIterator<Item = ([u64; 3], u64)>) -> CompleteWeightEnumerator {
        let mut out = BTreeMap::new();
        for (t, c) in terms {
            if c > 0 {
                *out.entry(t).or_insert(0) += c;
            }
        }
        CompleteWeightEnumerator { terms: out }
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Weight distribution implied by the enumerator (`weight = t1 + t2`).
    pub fn weight_distribution(&self) -> WeightDistribution {
        WeightDistribution::from_pairs(self.terms.iter().map(|(t, &c)| (t[1] + t[2], c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tf(m: usize, digits: &str) -> TernaryFunction {
        TernaryFunction::parse_table_text(&format!("m={m}\n{digits}")).unwrap()
    }

    pub(crate) fn random_spec(m: usize, rng: &mut ChaCha8Rng) -> CodeSpec {
        loop {
            let f = TernaryFunction::random_vanishing(m, rng).unwrap();
            let g = TernaryFunction::random_vanishing(m, rng).unwrap();
            if let Ok(s) = CodeSpec::validate(f, g) {
                return s;
            }
        }
    }

    fn hypothesis(e: Error) -> HypothesisViolation {
        match e {
            Error::Hypothesis(h) => h,
            other => panic!("expected a hypothesis violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_equal_functions() {
        let f = tf(2, "011200120");
        let h = hypothesis(CodeSpec::validate(f.clone(), f).unwrap_err());
        assert_eq!(h.member, Member::FMinusG);
        assert_eq!(h.kind, ViolationKind::ZeroFunction);
    }

    #[test]
    fn rejects_nonzero_origin() {
        let h = hypothesis(CodeSpec::validate(tf(2, "111200120"), tf(2, "001000000")).unwrap_err());
        assert_eq!(h, HypothesisViolation { member: Member::F, kind: ViolationKind::NonzeroAtOrigin, witness: None });
    }

    #[test]
    fn rejects_linear_member_with_witness() {
        // g = x_1, f nonlinear: g itself is the linear functional e_1 (index 1)
        let g = TernaryFunction::linear(&TritVector::unit(0, 2).unwrap()).unwrap();
        let h = hypothesis(CodeSpec::validate(tf(2, "011000000"), g).unwrap_err());
        assert_eq!(h.member, Member::G);
        assert_eq!(h.kind, ViolationKind::Linear);
        assert_eq!(h.witness, Some(1));
    }

    #[test]
    fn rejects_dimension_mismatch() {
        assert!(matches!(
            validate(2, tf(2, "011000000"), tf(1, "012")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn simple_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let spec = random_spec(4, &mut rng);
        let zero = TritVector::zero(4).unwrap();
        assert_eq!(spec.weight_of(Trit::ZERO, Trit::ZERO, &zero).unwrap(), 0);
        for v in 1..81 {
            assert_eq!(spec.weight_of_index(Trit::ZERO, Trit::ZERO, v).unwrap(), 54);
        }
        assert!(spec.weight_of_index(Trit::ONE, Trit::ZERO, 81).is_err());
        let wd = spec.weight_distribution();
        assert_eq!(wd.count(0), 1);
        assert!(wd.count(54) >= 80);
        assert_eq!(wd.total(), 729);
        assert_eq!(spec.dimension(), 6);
    }

    #[test]
    fn simplex_word_and_function_word() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let spec = random_spec(2, &mut rng);
        let e1 = TritVector::unit(0, 2).unwrap();
        let cw = spec.materialize(Trit::ZERO, Trit::ZERO, &e1).unwrap();
        let expect: Vec<Trit> = (1..9).map(|x| Trit::reduce((x % 3) as i64)).collect();
        assert_eq!(cw.word, expect);
        let zero = TritVector::zero(2).unwrap();
        let fw = spec.materialize(Trit::ONE, Trit::ZERO, &zero).unwrap();
        assert_eq!(fw.word, spec.f().table()[1..].to_vec());
    }

    #[test]
    fn counts_and_weights_agree_with_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for m in 2..=5 {
            let spec = random_spec(m, &mut rng);
            for v in 0..pow3(m) {
                let vv = TritVector::from_index(v as u64, m).unwrap();
                for u in Trit::ALL {
                    for r in Trit::ALL {
                        let w = spec.word(u, r, &vv);
                        let mut c = [0u64; 3];
                        for t in &w {
                            c[t.value() as usize] += 1;
                        }
                        assert_eq!(spec.codeword_counts(u, r, v), c);
                        assert_eq!(spec.weight_of(u, r, &vv).unwrap(), c[1] + c[2]);
                    }
                }
            }
        }
    }

    #[test]
    fn linearity_of_materialisation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for m in 2..=3 {
            let spec = random_spec(m, &mut rng);
            let n = pow3(m) as u64;
            let params: Vec<(Trit, Trit, TritVector)> = Trit::ALL
                .iter()
                .flat_map(|&u| Trit::ALL.iter().map(move |&r| (u, r)))
                .flat_map(|(u, r)| (0..n).map(move |v| (u, r, TritVector::from_index(v, m).unwrap())))
                .collect();
            for (u1, r1, v1) in &params {
                let a = spec.materialize(*u1, *r1, v1).unwrap();
                for (u2, r2, v2) in params.iter().step_by(5) {
                    let b = spec.materialize(*u2, *r2, v2).unwrap();
                    let s = spec.materialize(*u1 + *u2, *r1 + *r2, &v1.checked_add(v2).unwrap()).unwrap();
                    let sum: Vec<Trit> = a.word.iter().zip(&b.word).map(|(&x, &y)| x + y).collect();
                    assert_eq!(sum, s.word);
                }
            }
        }
    }

    #[test]
    fn cwe_marginals_match_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for m in 2..=6 {
            let spec = random_spec(m, &mut rng);
            let cwe = spec.cwe();
            assert_eq!(cwe.total(), 9 * pow3(m) as u64);
            for t in cwe.terms.keys() {
                assert_eq!(t.iter().sum::<u64>(), pow3(m) as u64 - 1);
            }
            assert_eq!(cwe.weight_distribution(), spec.weight_distribution());
            assert_eq!(cwe.terms[&[pow3(m) as u64 - 1, 0, 0]], 1);
        }
    }

    #[test]
    fn materialise_capacity() {
        let f = TernaryFunction::from_fn(11, |x| Trit::reduce((x.count_ones() % 3) as i64)).unwrap();
        let spec = CodeSpec {
            m: 11,
            members: [f.clone(), f.clone(), f.clone(), f.clone()],
            spectra: std::array::from_fn(|_| transform(&f).unwrap()),
            neg: negation_table(11),
        };
        let v = TritVector::zero(11).unwrap();
        assert!(matches!(spec.materialize(Trit::ONE, Trit::ZERO, &v), Err(Error::Capacity { .. })));
    }
}
