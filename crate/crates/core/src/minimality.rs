//! Minimality certificates for `C(f, g)`.
//!
//! Three certifiers live here:
//!
//! * [`is_minimal_bruteforce`] materialises one codeword per projective class
//!   and tests support inclusion for every ordered pair. It never looks at a
//!   spectrum and serves as ground truth for small `m`.
//! * [`theorem2_check`] evaluates the spectral criterion. With
//!   `R(c) = 2 Re sum_x zeta^(c(x))` over all of `F_3^m`, the covering identity
//!   `wt(a+b) + wt(a-b) = 2 wt(a) - wt(b)` becomes
//!   `R(a+b) + R(a-b) - 2 R(a) + R(b) = 2 * 3^m`. Splitting the pair `(a, b)`
//!   by function part gives three sweeps:
//!   - `(1)-first`: `R_F(v1) + R_F(v2) - 2 R_F(v3)` with `v1 + v2 + v3 = 0`,
//!     both codewords built from `F` (or `b` a simplex word);
//!   - `(1)-second`: `R_F(v1) + R_F(v2) + R_F(v3)`, `a` a simplex word;
//!   - `(2)`: `R_{F1+F2}(v1+v2) + R_{F1-F2}(v1-v2) - 2 R_{F1}(v1) + R_{F2}(v2)`
//!     for the 12 ordered pairs of distinct members.
//!
//!   Here `R_F(w)` is the doubled real part of `F^(w)`. Pairs of simplex words
//!   never cover each other since that subcode has one nonzero weight.
//! * [`ashikhmin_barg`], the sufficient ratio test.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::code::{CodeSpec, CodewordParams, Member};
use crate::error::{Error, Result};
use crate::gf3::{pow3, translate_into, Trit, TritVector};
use crate::par;

/// `Supp(b) ⊆ Supp(a)`.
///
/// Also evaluates the weight identity
/// `sum_{c in F_3^*} wt(a + c b) = 2 wt(a) - wt(b)` and panics if the two
/// disagree.
pub fn covers(a: &[Trit], b: &[Trit]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { left: a.len(), right: b.len() });
    }
    let direct = a.iter().zip(b).all(|(x, y)| y.is_zero() || !x.is_zero());
    let wt = |it: &mut dyn Iterator<Item = Trit>| it.filter(|t| !t.is_zero()).count() as i64;
    let lhs = wt(&mut a.iter().zip(b).map(|(&x, &y)| x + y)) + wt(&mut a.iter().zip(b).map(|(&x, &y)| x - y));
    let rhs = 2 * wt(&mut a.iter().copied()) - wt(&mut b.iter().copied());
    assert_eq!(direct, lhs == rhs, "support inclusion and the weight identity disagree");
    Ok(direct)
}

/// Lemma-free form of the ratio test for `p = 3`: `wmin / wmax > 2/3`.
///
/// Expects `0 < wmin <= wmax`.
pub fn ashikhmin_barg(wmin: u64, wmax: u64) -> bool {
    debug_assert!(0 < wmin && wmin <= wmax);
    3 * wmin > 2 * wmax
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CoverOracle,
    Theorem2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "(1)-first")]
    OneFirst,
    #[serde(rename = "(1)-second")]
    OneSecond,
    #[serde(rename = "(2)")]
    Two,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::OneFirst, Condition::OneSecond, Condition::Two];

    pub const fn label(self) -> &'static str {
        match self {
            Condition::OneFirst => "(1)-first",
            Condition::OneSecond => "(1)-second",
            Condition::Two => "(2)",
        }
    }
}

/// A violation record. `covering` is the codeword pair `(a, b)` with `b ⪯ a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Cover { a: CodewordParams, b: CodewordParams },
    Theorem2 {
        condition: Condition,
        functions: Vec<Member>,
        vectors: Vec<u64>,
        covering: [CodewordParams; 2],
    },
}

impl Witness {
    /// The covering pair `(a, b)`, `b ⪯ a`.
    pub fn covering_pair(&self) -> (CodewordParams, CodewordParams) {
        match self {
            Witness::Cover { a, b } => (*a, *b),
            Witness::Theorem2 { covering, .. } => (covering[0], covering[1]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: Condition,
    /// `None` when the sweep was skipped after an earlier witness.
    pub holds: Option<bool>,
    /// Violations seen; a lower bound unless the policy is exhaustive.
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub method: Method,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<ConditionReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StopPolicy {
    /// Stop everything at the first violation.
    #[default]
    FirstOverall,
    /// Run every condition, each stopping at its own first violation.
    FirstPerCondition,
    /// Count every violation, keeping at most `max_witnesses` records.
    Exhaustive { max_witnesses: usize },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub stop: StopPolicy,
    pub deadline: Option<Instant>,
}

/// Largest dimension accepted by [`is_minimal_bruteforce`].
pub const BRUTEFORCE_MAX_DIM: usize = 5;

/// Support-inclusion test over all ordered pairs of projective classes.
pub fn is_minimal_bruteforce(spec: &CodeSpec) -> Result<MinimalityVerdict> {
    let m = spec.m();
    if m > BRUTEFORCE_MAX_DIM {
        return Err(Error::Capacity { what: "brute-force minimality", m, max: BRUTEFORCE_MAX_DIM });
    }
    let n = pow3(m) as u64;
    // one representative per class: first nonzero entry of (u, r, v) equals 1
    let mut reps = Vec::new();
    for u in Trit::ALL {
        for r in Trit::ALL {
            for v in 0..n {
                let lead = if !u.is_zero() {
                    u
                } else if !r.is_zero() {
                    r
                } else if v > 0 {
                    TritVector::from_index(v, m)?.digits().into_iter().find(|t| !t.is_zero()).unwrap()
                } else {
                    continue;
                };
                if lead == Trit::ONE {
                    reps.push(CodewordParams::new(u, r, v));
                }
            }
        }
    }
    let words = (n as usize - 1).div_ceil(64);
    let supports: Vec<Vec<u64>> = par::map_range(reps.len(), |i| {
        let p = reps[i];
        let (u, r) = p.trits();
        let v = TritVector::from_index(p.v, m).expect("index in range");
        let mut bits = vec![0u64; words];
        for (x, t) in spec.word(u, r, &v).iter().enumerate() {
            if !t.is_zero() {
                bits[x / 64] |= 1 << (x % 64);
            }
        }
        bits
    });
    let weights: Vec<u32> = supports.iter().map(|s| s.iter().map(|w| w.count_ones()).sum()).collect();

    let best = AtomicUsize::new(usize::MAX);
    let found = par::map_range(reps.len(), |i| {
        if best.load(Ordering::Relaxed) < i {
            return None;
        }
        let sa = &supports[i];
        for (j, sb) in supports.iter().enumerate() {
            if j == i || weights[j] > weights[i] {
                continue;
            }
            if sa.iter().zip(sb).all(|(x, y)| y & !x == 0) {
                best.fetch_min(i, Ordering::Relaxed);
                return Some(Witness::Cover { a: reps[i], b: reps[j] });
            }
        }
        None
    });
    let witnesses: Vec<Witness> = found.into_iter().flatten().take(1).collect();
    Ok(MinimalityVerdict { minimal: witnesses.is_empty(), method: Method::CoverOracle, witnesses, conditions: Vec::new() })
}

fn coeff_slot(u: Trit, r: Trit) -> usize {
    3 * u.value() as usize + r.value() as usize
}

fn member_params(member: Member, v: u64) -> CodewordParams {
    let (u, r) = member.coeffs();
    CodewordParams::new(u, r, v)
}

fn vec_sub(a: u64, b: u64, m: usize) -> u64 {
    let a = TritVector::from_index(a, m).expect("index in range");
    let b = TritVector::from_index(b, m).expect("index in range");
    a.checked_sub(&b).expect("same dimension").index()
}

struct Sweep<'a> {
    opts: &'a CheckOptions,
    n: usize,
    keep: usize,
    completed: AtomicU64,
    total: u64,
}

impl Sweep<'_> {
    fn exhaustive(&self) -> bool {
        matches!(self.opts.stop, StopPolicy::Exhaustive { .. })
    }

    /// Runs `step(outer, witnesses, count)` over `0..n`. In first-witness
    /// modes `step` should return as soon as it records a violation; the
    /// lowest violating outer index wins so the result is deterministic.
    fn run<F>(&self, step: F) -> Result<(Vec<Witness>, u64)>
    where
        F: Fn(usize, &mut Vec<Witness>, &mut u64) + Sync + Send,
    {
        let best = AtomicUsize::new(usize::MAX);
        let expired = AtomicBool::new(false);
        let exhaustive = self.exhaustive();
        let parts = par::map_range(self.n, |i| {
            let mut ws = Vec::new();
            let mut cnt = 0u64;
            if expired.load(Ordering::Relaxed) || (!exhaustive && best.load(Ordering::Relaxed) < i) {
                return (ws, cnt);
            }
            if self.opts.deadline.is_some_and(|d| Instant::now() > d) {
                expired.store(true, Ordering::Relaxed);
                return (ws, cnt);
            }
            step(i, &mut ws, &mut cnt);
            if cnt > 0 && !exhaustive {
                best.fetch_min(i, Ordering::Relaxed);
            }
            self.completed.fetch_add(1, Ordering::Relaxed);
            (ws, cnt)
        });
        if expired.load(Ordering::Relaxed) {
            return Err(Error::Budget { completed: self.completed.load(Ordering::Relaxed), total: self.total });
        }
        let mut witnesses = Vec::new();
        let mut count = 0;
        for (ws, c) in parts {
            if !exhaustive && c > 0 {
                return Ok((ws.into_iter().take(1).collect(), 1));
            }
            count += c;
            witnesses.extend(ws.into_iter().take(self.keep.saturating_sub(witnesses.len())));
        }
        Ok((witnesses, count))
    }
}

/// Spectral minimality criterion; see the module documentation.
///
/// Condition (1) visits unordered pairs `v1 < v2`, so each triple is met once
/// per choice of `v3`; violation counts are over those visits.
pub fn theorem2_check(spec: &CodeSpec, opts: &CheckOptions) -> Result<MinimalityVerdict> {
    let m = spec.m();
    let n = pow3(m);
    let target = 2 * n as i64;
    let neg = spec.negation();
    let keep = match opts.stop {
        StopPolicy::Exhaustive { max_witnesses } => max_witnesses,
        _ => 1,
    };
    let sweep = Sweep { opts, n, keep, completed: AtomicU64::new(0), total: 3 * n as u64 };
    let stop_early = !sweep.exhaustive();

    // R_F(w) for the four members
    let re: Vec<Vec<i64>> = Member::ALL.iter().map(|&mb| spec.spectrum(mb).real_doubled_table()).collect();
    // R(u f + r g + v.x) for every (u, r) class, indexed by v
    let cr: Vec<Vec<i64>> = (0..9)
        .map(|s| {
            let (u, r) = (Trit::reduce(s as i64 / 3), Trit::reduce(s as i64 % 3));
            (0..n).map(|v| spec.codeword_re_doubled(u, r, v)).collect()
        })
        .collect();

    // condition (1): outer v1, inner v2 > v1, v3 = -v1 - v2
    let one = |second: bool| {
        sweep.run(|v1, ws, cnt| {
            let mut v3 = vec![0u32; n];
            translate_into(neg[v1] as usize, m, true, &mut v3);
            for (slot, &mb) in Member::ALL.iter().enumerate() {
                let r = &re[slot];
                let r1 = r[v1];
                for v2 in v1 + 1..n {
                    let w3 = v3[v2] as usize;
                    let s = r1 + r[v2];
                    let hit = if second { s + r[w3] == target } else { s - 2 * r[w3] == target };
                    if !hit {
                        continue;
                    }
                    *cnt += 1;
                    if ws.len() < keep {
                        let covering = if second {
                            let a = vec_sub(v2 as u64, w3 as u64, m);
                            [CodewordParams::new(Trit::ZERO, Trit::ZERO, a), member_params(mb, neg[w3] as u64)]
                        } else {
                            [member_params(mb, neg[w3] as u64), member_params(mb, neg[v2] as u64)]
                        };
                        ws.push(Witness::Theorem2 {
                            condition: if second { Condition::OneSecond } else { Condition::OneFirst },
                            functions: vec![mb],
                            vectors: vec![v1 as u64, v2 as u64, w3 as u64],
                            covering,
                        });
                    }
                    if stop_early {
                        return;
                    }
                }
            }
        })
    };

    // condition (2): outer a, inner b; vectors reported as v1 = -a, v2 = -b
    let pairs: Vec<(Member, Member)> = Member::ALL
        .iter()
        .flat_map(|&a| Member::ALL.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    let slots: Vec<[usize; 4]> = pairs
        .iter()
        .map(|&(m1, m2)| {
            let ((u1, r1), (u2, r2)) = (m1.coeffs(), m2.coeffs());
            [coeff_slot(u1 + u2, r1 + r2), coeff_slot(u1 - u2, r1 - r2), coeff_slot(u1, r1), coeff_slot(u2, r2)]
        })
        .collect();
    let two = || {
        sweep.run(|a, ws, cnt| {
            let mut add = vec![0u32; n];
            let mut sub = vec![0u32; n];
            translate_into(a, m, false, &mut add);
            translate_into(a, m, true, &mut sub);
            for (&(m1, m2), s) in pairs.iter().zip(&slots) {
                let (cs, cd, c2) = (&cr[s[0]], &cr[s[1]], &cr[s[3]]);
                let base = target + 2 * cr[s[2]][a];
                for b in 0..n {
                    if cs[add[b] as usize] + cd[sub[b] as usize] + c2[b] != base {
                        continue;
                    }
                    *cnt += 1;
                    if ws.len() < keep {
                        ws.push(Witness::Theorem2 {
                            condition: Condition::Two,
                            functions: vec![m1, m2],
                            vectors: vec![neg[a] as u64, neg[b] as u64],
                            covering: [member_params(m1, a as u64), member_params(m2, b as u64)],
                        });
                    }
                    if stop_early {
                        return;
                    }
                }
            }
        })
    };

    let mut witnesses = Vec::new();
    let mut conditions = Vec::new();
    for cond in Condition::ALL {
        if opts.stop == StopPolicy::FirstOverall && !witnesses.is_empty() {
            conditions.push(ConditionReport { condition: cond, holds: None, violations: 0 });
            continue;
        }
        let (ws, count) = match cond {
            Condition::OneFirst => one(false)?,
            Condition::OneSecond => one(true)?,
            Condition::Two => two()?,
        };
        conditions.push(ConditionReport { condition: cond, holds: Some(count == 0), violations: count });
        witnesses.extend(ws);
    }
    if sweep.exhaustive() {
        witnesses.truncate(keep);
    }
    let minimal = conditions.iter().all(|c| c.holds != Some(false));
    Ok(MinimalityVerdict { minimal, method: Method::Theorem2, witnesses, conditions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::TernaryFunction;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(v: &[u8]) -> Vec<Trit> {
        v.iter().map(|&x| Trit::new(x).unwrap()).collect()
    }

    fn random_spec(m: usize, rng: &mut ChaCha8Rng) -> CodeSpec {
        loop {
            let f = TernaryFunction::random_vanishing(m, rng).unwrap();
            let g = TernaryFunction::random_vanishing(m, rng).unwrap();
            if let Ok(s) = CodeSpec::validate(f, g) {
                return s;
            }
        }
    }

    fn word(spec: &CodeSpec, p: CodewordParams) -> Vec<Trit> {
        let (u, r) = p.trits();
        spec.materialize(u, r, &TritVector::from_index(p.v, spec.m()).unwrap()).unwrap().word
    }

    fn confirm(spec: &CodeSpec, w: &Witness) {
        let (a, b) = w.covering_pair();
        let (wa, wb) = (word(spec, a), word(spec, b));
        assert!(wb.iter().any(|x| !x.is_zero()), "{w:?}: b is zero");
        let scaled: Vec<Trit> = wa.iter().map(|&x| x * Trit::TWO).collect();
        assert!(wb != wa && wb != scaled, "{w:?}: b is a multiple of a");
        assert!(covers(&wa, &wb).unwrap(), "{w:?}: no covering");
    }

    #[test]
    fn covers_examples() {
        assert!(covers(&t(&[1, 0, 2]), &t(&[0, 0, 0])).unwrap());
        assert!(covers(&t(&[1, 2, 2]), &t(&[1, 2, 2])).unwrap());
        assert!(!covers(&t(&[1, 0, 2]), &t(&[0, 1, 0])).unwrap());
        assert!(covers(&t(&[1, 0, 2]), &t(&[2, 0, 0])).unwrap());
        assert!(covers(&t(&[1]), &t(&[1, 2])).is_err());
    }

    #[test]
    fn weight_identity_agrees_exhaustively_on_length_four() {
        let all: Vec<Vec<Trit>> = (0..81u64)
            .map(|i| TritVector::from_index(i, 4).unwrap().digits())
            .collect();
        for a in &all {
            for b in &all {
                covers(a, b).unwrap();
            }
        }
    }

    proptest! {
        #[test]
        fn covers_is_a_preorder(
            a in proptest::collection::vec(0u8..3, 40),
            b in proptest::collection::vec(0u8..3, 40),
            c in proptest::collection::vec(0u8..3, 40),
        ) {
            let (a, b, c) = (t(&a), t(&b), t(&c));
            prop_assert!(covers(&a, &a).unwrap());
            if covers(&a, &b).unwrap() && covers(&b, &c).unwrap() {
                prop_assert!(covers(&a, &c).unwrap());
            }
            if covers(&a, &b).unwrap() && covers(&b, &a).unwrap() {
                prop_assert!(a.iter().zip(&b).all(|(x, y)| x.is_zero() == y.is_zero()));
            }
        }

        #[test]
        fn sparse_words_agree(a in proptest::collection::vec(0u8..3, 200), mask in proptest::collection::vec(any::<bool>(), 200)) {
            let a = t(&a);
            let b: Vec<Trit> = a.iter().zip(&mask).map(|(&x, &keep)| if keep { x * Trit::TWO } else { Trit::ZERO }).collect();
            prop_assert!(covers(&a, &b).unwrap());
        }
    }

    #[test]
    fn ratio_test_examples() {
        assert!(!ashikhmin_barg(834, 14226));
        assert!(ashikhmin_barg(7, 7));
        assert!(!ashikhmin_barg(2, 3));
        assert!(ashikhmin_barg(3, 4));
    }

    #[test]
    fn bruteforce_capacity() {
        let f = TernaryFunction::from_fn(6, |x| Trit::reduce((x.count_ones() % 3) as i64)).unwrap();
        let g = TernaryFunction::from_fn(6, |x| if x % 7 == 3 { Trit::ONE } else { Trit::ZERO }).unwrap();
        let spec = CodeSpec::validate(f, g).unwrap();
        assert!(matches!(is_minimal_bruteforce(&spec), Err(Error::Capacity { .. })));
    }

    #[test]
    fn simplex_words_are_pairwise_incomparable() {
        for m in 1..=4 {
            let n = pow3(m) as u64;
            let words: Vec<Vec<Trit>> = (1..n)
                .map(|v| {
                    let vp = TritVector::from_index(v, m).unwrap();
                    (1..n).map(|x| vp.dot(&TritVector::from_index(x, m).unwrap()).unwrap()).collect()
                })
                .collect();
            for (i, a) in words.iter().enumerate() {
                for (j, b) in words.iter().enumerate() {
                    let prop = b == a || *b == a.iter().map(|&x| x * Trit::TWO).collect::<Vec<_>>();
                    assert_eq!(covers(a, b).unwrap(), prop, "m={m} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn oracles_agree_on_random_specs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut seen = [0usize; 2];
        for m in 2..=4 {
            for _ in 0..40 {
                let spec = random_spec(m, &mut rng);
                let brute = is_minimal_bruteforce(&spec).unwrap();
                let spectral = theorem2_check(&spec, &CheckOptions::default()).unwrap();
                assert_eq!(brute.minimal, spectral.minimal, "m={m}: {brute:?} vs {spectral:?}");
                seen[usize::from(brute.minimal)] += 1;
                for w in brute.witnesses.iter().chain(&spectral.witnesses) {
                    confirm(&spec, w);
                }
            }
        }
        assert!(seen[0] > 0 && seen[1] > 0, "both verdicts should occur: {seen:?}");
    }

    #[test]
    fn both_sides_of_the_criterion_occur_at_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let opts = CheckOptions { stop: StopPolicy::FirstPerCondition, deadline: None };
        let (mut minimal, mut only_two) = (false, false);
        for _ in 0..2000 {
            let spec = random_spec(3, &mut rng);
            let v = theorem2_check(&spec, &opts).unwrap();
            let holds: Vec<bool> = v.conditions.iter().map(|c| c.holds.unwrap()).collect();
            let brute = is_minimal_bruteforce(&spec).unwrap();
            assert_eq!(brute.minimal, v.minimal);
            if v.minimal {
                minimal = true;
            } else if holds[0] && holds[1] {
                // only condition (2) fails: the covering pair mixes two members
                only_two = true;
                assert!(matches!(&v.witnesses[0], Witness::Theorem2 { condition: Condition::Two, .. }));
                confirm(&spec, &v.witnesses[0]);
                confirm(&spec, &brute.witnesses[0]);
            }
            if minimal && only_two {
                return;
            }
        }
        panic!("seed did not produce both cases (minimal: {minimal}, condition-(2)-only: {only_two})");
    }

    #[test]
    fn exhaustive_witnesses_are_genuine() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let opts = CheckOptions { stop: StopPolicy::Exhaustive { max_witnesses: 10_000 }, deadline: None };
        for m in 2..=3 {
            for _ in 0..10 {
                let spec = random_spec(m, &mut rng);
                let v = theorem2_check(&spec, &opts).unwrap();
                let total: u64 = v.conditions.iter().map(|c| c.violations).sum();
                assert_eq!(total as usize, v.witnesses.len().min(total as usize));
                for w in &v.witnesses {
                    confirm(&spec, w);
                }
                let per = theorem2_check(&spec, &CheckOptions { stop: StopPolicy::FirstPerCondition, deadline: None }).unwrap();
                for (a, b) in per.conditions.iter().zip(&v.conditions) {
                    assert_eq!(a.holds, b.holds);
                }
                assert_eq!(per.minimal, v.minimal);
            }
        }
    }

    #[test]
    fn deadline_in_the_past_reports_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = random_spec(4, &mut rng);
        let opts = CheckOptions { stop: StopPolicy::FirstOverall, deadline: Some(Instant::now()) };
        std::thread::sleep(std::time::Duration::from_millis(2));
        match theorem2_check(&spec, &opts) {
            Err(Error::Budget { completed, total }) => assert!(completed < total),
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = MinimalityVerdict {
            minimal: false,
            method: Method::Theorem2,
            witnesses: vec![Witness::Theorem2 {
                condition: Condition::Two,
                functions: vec![Member::F, Member::FMinusG],
                vectors: vec![1, 2],
                covering: [CodewordParams { u: 1, r: 0, v: 2 }, CodewordParams { u: 1, r: 2, v: 1 }],
            }],
            conditions: vec![],
        };
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains(r#""condition":"(2)""#) && s.contains(r#""functions":["f","f-g"]"#), "{s}");
        assert_eq!(serde_json::from_str::<MinimalityVerdict>(&s).unwrap(), v);
    }
}
