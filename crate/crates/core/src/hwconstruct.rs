//! Weight-ball construction.
//!
//! With `wt` the Hamming weight on `F_3^m` and `2 <= k1 < k1 + 1 < k2 <= (m-1)/2`:
//!
//! ```text
//! A = {1 <= wt < k1}   B = {wt = k1}   C = {k1 < wt < k2}   D = {wt = k2}
//! f = 1 on A ∪ C ∪ D        g = 1 on B ∪ C,  2 on D
//! ```
//!
//! Both functions depend on `wt(x)` only, so every spectrum is constant on
//! weight shells and reduces to Lloyd polynomials. This module holds the
//! resulting closed forms; [`crate::code`] is the independent check.

use serde::{Deserialize, Serialize};

use crate::code::{CodeSpec, CompleteWeightEnumerator, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf3::{pow3, weight_table, Trit, MAX_DIM};
use crate::kraw::{binomial, sphere, sphere_sum, KrawTable};
use crate::minimality::{ashikhmin_barg, theorem2_check, CheckOptions, Condition, MinimalityVerdict, StopPolicy};
use crate::par;
use crate::spectrum::TernaryFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HWParams {
    pub m: usize,
    pub k1: usize,
    pub k2: usize,
}

/// `2 <= k1`, `k1 + 1 < k2 <= (m-1)/2`, `m >= 9`.
pub fn admissible(m: usize, k1: usize, k2: usize) -> bool {
    m >= 9 && k1 >= 2 && k1 + 1 < k2 && k2 <= (m - 1) / 2
}

impl HWParams {
    pub fn new(m: usize, k1: usize, k2: usize) -> Result<HWParams> {
        if !admissible(m, k1, k2) {
            return Err(Error::InvalidParams(format!(
                "(m, k1, k2) = ({m}, {k1}, {k2}) needs m >= 9 and 2 <= k1 < k1 + 1 < k2 <= floor((m - 1) / 2)"
            )));
        }
        if m > MAX_DIM {
            return Err(Error::Capacity { what: "weight-ball construction", m, max: MAX_DIM });
        }
        Ok(HWParams { m, k1, k2 })
    }

    /// Every admissible triple with `m` in `ms`, ordered by `(m, k1, k2)`.
    pub fn window(ms: impl IntoIterator<Item = usize>) -> Vec<HWParams> {
        let mut out = Vec::new();
        for m in ms {
            for k2 in 0..m {
                for k1 in 0..k2 {
                    if admissible(m, k1, k2) && m <= MAX_DIM {
                        out.push(HWParams { m, k1, k2 });
                    }
                }
            }
        }
        out.sort_by_key(|p| (p.m, p.k1, p.k2));
        out
    }

    /// `|A|`.
    pub fn a(&self) -> i64 {
        sphere_sum(self.m, 1, self.k1 - 1)
    }

    /// `|B|`.
    pub fn b(&self) -> i64 {
        sphere(self.m, self.k1)
    }

    /// `|C|`.
    pub fn c(&self) -> i64 {
        sphere_sum(self.m, self.k1 + 1, self.k2 - 1)
    }

    /// `|D|`.
    pub fn d(&self) -> i64 {
        sphere(self.m, self.k2)
    }

    /// Nonzero vectors outside `A ∪ B ∪ C ∪ D`.
    pub fn e(&self) -> i64 {
        pow3(self.m) as i64 - 1 - self.a() - self.b() - self.c() - self.d()
    }

    /// `(alpha, beta, gamma, delta)` at shell weight `i`.
    pub fn greek(&self, tab: &KrawTable, i: usize) -> GreekTriple {
        let psi = |k| tab.psi(k, i);
        GreekTriple {
            alpha: psi(self.k1 - 1) - 1,
            beta: psi(self.k1) - psi(self.k1 - 1),
            gamma: psi(self.k2 - 1) - psi(self.k1),
            delta: psi(self.k2) - psi(self.k2 - 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreekTriple {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

pub fn build_fg(p: &HWParams) -> Result<(TernaryFunction, TernaryFunction)> {
    let HWParams { m, k1, k2 } = *p;
    let wt = weight_table(m);
    let f = TernaryFunction::from_fn(m, |x| {
        let w = wt[x] as usize;
        if w >= 1 && w <= k2 && w != k1 {
            Trit::ONE
        } else {
            Trit::ZERO
        }
    })?;
    let g = TernaryFunction::from_fn(m, |x| match wt[x] as usize {
        w if w == k2 => Trit::TWO,
        w if w >= k1 && w < k2 => Trit::ONE,
        _ => Trit::ZERO,
    })?;
    Ok((f, g))
}

/// Validated code for `p`.
pub fn build_spec(p: &HWParams) -> Result<CodeSpec> {
    let (f, g) = build_fg(p)?;
    CodeSpec::validate(f, g)
}

fn to_u64(v: i64, what: &str) -> u64 {
    u64::try_from(v).unwrap_or_else(|_| panic!("negative {what}: {v}"))
}

/// Offsets `s` of the four shell families of nonzero weight:
/// `weight = 2 * 3^(m-1) + s`, listed for f, g, f+g, f-g.
fn shell_offsets(g: &GreekTriple) -> [(i64, i64, i64); 4] {
    let GreekTriple { alpha, beta, gamma, delta } = *g;
    // (s; x, y): counts (3^(m-1) - 1 - s, 3^(m-1) + x, 3^(m-1) + y), x + y = s
    [
        (alpha + gamma + delta, alpha + gamma + delta, 0),
        (beta + gamma + delta, beta + gamma, delta),
        (alpha + beta + gamma, alpha + beta, gamma),
        (alpha + beta + delta, alpha, beta + delta),
    ]
}

/// Table of weights and frequencies.
pub fn closed_form_weight_distribution(p: &HWParams) -> Result<WeightDistribution> {
    let m = p.m;
    let n = pow3(m) as i64;
    let base = 2 * pow3(m - 1) as i64;
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let mut rows: Vec<(i64, i64)> = vec![
        (0, 1),
        (base, n - 1),
        (a + c + d, 2),
        (b + c + d, 2),
        (a + b + c, 2),
        (a + b + d, 2),
    ];
    let tab = KrawTable::new(m)?;
    for i in 1..=m {
        let mult = 2 * sphere(m, i);
        for (s, _, _) in shell_offsets(&p.greek(&tab, i)) {
            rows.push((base + s, mult));
        }
    }
    Ok(WeightDistribution::from_pairs(rows.into_iter().map(|(w, c)| (to_u64(w, "weight"), to_u64(c, "count")))))
}

/// Complete weight enumerator as a flat multiset of `(t0, t1, t2)`.
pub fn closed_form_cwe(p: &HWParams) -> Result<CompleteWeightEnumerator> {
    let m = p.m;
    let n = pow3(m) as i64;
    let t = pow3(m - 1) as i64;
    let (a, b, c, d, e) = (p.a(), p.b(), p.c(), p.d(), p.e());
    let mut terms: Vec<([i64; 3], i64)> = vec![([n - 1, 0, 0], 1), ([t - 1, t, t], n - 1)];
    // v = 0: one (N0, N1, N2) per member, mirrored for the negated member
    for [t0, t1, t2] in [
        [b + e, a + c + d, 0],
        [a + e, b + c, d],
        [d + e, a + b, c],
        [c + e, a, b + d],
    ] {
        terms.push(([t0, t1, t2], 1));
        terms.push(([t0, t2, t1], 1));
    }
    let tab = KrawTable::new(m)?;
    for i in 1..=m {
        let mult = sphere(m, i);
        for (s, x, y) in shell_offsets(&p.greek(&tab, i)) {
            terms.push(([t - 1 - s, t + x, t + y], mult));
            terms.push(([t - 1 - s, t + y, t + x], mult));
        }
    }
    Ok(CompleteWeightEnumerator::from_terms(
        terms.into_iter().map(|(tr, c)| (tr.map(|v| to_u64(v, "exponent")), to_u64(c, "multiplicity"))),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Report {
    pub wmin: u64,
    pub wmax: u64,
    pub ab_satisfied: bool,
    pub ratio_le_two_thirds: bool,
}

pub fn theorem4_report(p: &HWParams) -> Theorem4Report {
    let HWParams { m, k1, k2 } = *p;
    let (mi, k1i, k2i) = (m as i64, k1 as i64, k2 as i64);
    let wmin = sphere_sum(m, 1, k2 - 1);
    let wmax = pow3(m) as i64 - pow3(m - 1) as i64 + (binomial(mi - 1, k2i) << k2)
        - (binomial(mi - 1, k1i - 1) << (k1 - 1));
    let lhs = 3 * wmin;
    let rhs = 4 * pow3(m - 1) as i64 + (binomial(mi - 1, k2i) << (k2 + 1)) - (binomial(mi - 1, k1i - 1) << k1);
    let ratio_le_two_thirds = lhs <= rhs;
    let (wmin, wmax) = (to_u64(wmin, "wmin"), to_u64(wmax, "wmax"));
    let ab_satisfied = ashikhmin_barg(wmin, wmax);
    assert_eq!(ratio_le_two_thirds, !ab_satisfied, "the two ratio predicates disagree");
    Theorem4Report { wmin, wmax, ab_satisfied, ratio_le_two_thirds }
}

/// Per-condition outcome of the spectral criterion on the built code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaChecks {
    /// Triple sums `R(v1) + R(v2) + R(v3)` avoid the target.
    pub lemma6: bool,
    /// `R(v1) + R(v2) - 2 R(v3)` avoids the target.
    pub lemma7: bool,
    /// The mixed-member sums avoid the target.
    pub lemma8: bool,
    pub verdict: MinimalityVerdict,
}

pub fn lemma_checks(p: &HWParams, deadline: Option<std::time::Instant>) -> Result<LemmaChecks> {
    let spec = build_spec(p)?;
    let verdict = theorem2_check(&spec, &CheckOptions { stop: StopPolicy::FirstPerCondition, deadline })?;
    let holds = |c: Condition| {
        verdict.conditions.iter().find(|r| r.condition == c).and_then(|r| r.holds).unwrap_or(false)
    };
    Ok(LemmaChecks {
        lemma6: holds(Condition::OneSecond),
        lemma7: holds(Condition::OneFirst),
        lemma8: holds(Condition::Two),
        verdict,
    })
}

/// Doubled real parts of the four member spectra on a weight-`i` shift, from
/// Lloyd polynomials: `2 * 3^m - 3 |Supp F|` at `i = 0`, `-3 s_i` otherwise.
pub fn closed_form_member_re(p: &HWParams, i: usize) -> Result<[i64; 4]> {
    let m = p.m;
    let n = pow3(m) as i64;
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let supports = [a + c + d, b + c + d, a + b + c, a + b + d];
    if i == 0 {
        return Ok(supports.map(|s| 2 * n - 3 * s));
    }
    let tab = KrawTable::new(m)?;
    let offs = shell_offsets(&p.greek(&tab, i));
    // weight 2*3^(m-1) + s  <=>  2 Re = -3 s
    Ok(offs.map(|(s, _, _)| -3 * s))
}

/// Largest `m` for which [`check_shell_spectra`] runs.
pub const SHELL_CHECK_MAX_DIM: usize = 13;

/// Compares every member spectrum of the built code with
/// [`closed_form_member_re`] on one shift per weight shell.
pub fn check_shell_spectra(p: &HWParams) -> Result<()> {
    if p.m > SHELL_CHECK_MAX_DIM {
        return Err(Error::Capacity { what: "shell spectrum check", m: p.m, max: SHELL_CHECK_MAX_DIM });
    }
    let spec = build_spec(p)?;
    let wt = weight_table(p.m);
    let bad = par::map_range(pow3(p.m), |w| {
        let expect = closed_form_member_re(p, wt[w] as usize).ok()?;
        let got: Vec<i64> = crate::code::Member::ALL.iter().map(|&mb| spec.spectrum(mb).real_doubled(w)).collect();
        (got != expect).then_some(w)
    });
    match bad.into_iter().flatten().next() {
        None => Ok(()),
        Some(w) => Err(Error::InvalidParams(format!("shell spectra disagree at shift index {w}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    fn p924() -> HWParams {
        HWParams::new(9, 2, 4).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(HWParams::new(7, 2, 3).is_err());
        assert!(HWParams::new(9, 2, 3).is_err());
        assert!(HWParams::new(9, 1, 3).is_err());
        assert!(HWParams::new(9, 2, 5).is_err());
        assert!(HWParams::new(8, 2, 4).is_err());
        assert!(HWParams::new(17, 2, 4).is_err());
        let w: Vec<(usize, usize, usize)> = HWParams::window(9..=11).iter().map(|p| (p.m, p.k1, p.k2)).collect();
        assert_eq!(w, vec![(9, 2, 4), (10, 2, 4), (11, 2, 4), (11, 2, 5), (11, 3, 5)]);
    }

    #[test]
    fn set_sizes_at_nine() {
        let p = p924();
        assert_eq!((p.a(), p.b(), p.c(), p.d(), p.e()), (18, 144, 672, 2016, 16832));
        let (f, g) = build_fg(&p).unwrap();
        let wt = weight_table(9);
        let mut sizes = [0usize; 4];
        for x in 0..pow3(9) {
            match (f.eval(x).value(), g.eval(x).value()) {
                (1, 0) if wt[x] < 2 => sizes[0] += 1,
                (0, 1) => sizes[1] += 1,
                (1, 1) => sizes[2] += 1,
                (1, 2) => sizes[3] += 1,
                (0, 0) => {}
                other => panic!("unexpected values {other:?} at weight {}", wt[x]),
            }
        }
        assert_eq!(sizes, [18, 144, 672, 2016]);
        assert!(f.eval(0).is_zero() && g.eval(0).is_zero());
        // weight k1 = 2: e.g. (1, 1, 0, ..., 0)
        assert_eq!((f.eval(4), g.eval(4)), (Trit::ZERO, Trit::ONE));
    }

    #[test]
    fn sums_and_telescoping() {
        for p in HWParams::window(9..=16) {
            assert_eq!(p.a() + p.b() + p.c() + p.d() + p.e(), pow3(p.m) as i64 - 1);
            assert!(p.e() >= 0);
            let tab = KrawTable::new(p.m).unwrap();
            for i in 1..=p.m {
                let g = p.greek(&tab, i);
                assert_eq!(g.alpha + g.beta + g.gamma + g.delta, tab.psi(p.k2, i) - 1);
            }
            let cwe = closed_form_cwe(&p).unwrap();
            assert_eq!(cwe.total(), 9 * pow3(p.m) as u64);
            for t in cwe.terms.keys() {
                assert_eq!(t.iter().sum::<u64>(), pow3(p.m) as u64 - 1);
            }
            assert_eq!(cwe.weight_distribution(), closed_form_weight_distribution(&p).unwrap());
        }
    }

    #[test]
    fn example_parameters() {
        let p = p924();
        let wd = closed_form_weight_distribution(&p).unwrap();
        assert_eq!(wd.min_nonzero(), Some(834));
        assert_eq!(wd.max(), Some(14226));
        assert!(wd.count(13122) >= 19682);
        let r = theorem4_report(&p);
        assert_eq!(r, Theorem4Report { wmin: 834, wmax: 14226, ab_satisfied: false, ratio_le_two_thirds: true });
        let cwe = closed_form_cwe(&p).unwrap();
        assert_eq!(cwe.terms[&[16976, 2706, 0]], 1);
        assert_eq!(cwe.terms[&[6560, 6561, 6561]], 19682);
        assert_eq!(cwe, golden::example1_cwe());
    }

    #[test]
    fn report_extremes_match_distribution() {
        for p in HWParams::window(9..=16) {
            let wd = closed_form_weight_distribution(&p).unwrap();
            let r = theorem4_report(&p);
            assert_eq!((wd.min_nonzero(), wd.max()), (Some(r.wmin), Some(r.wmax)), "{p:?}");
            assert_eq!(r.ab_satisfied, 3 * r.wmin > 2 * r.wmax);
        }
    }

    #[test]
    fn transform_path_at_nine() {
        let p = p924();
        let spec = build_spec(&p).unwrap();
        assert_eq!(spec.dimension(), 11);
        assert_eq!(spec.weight_distribution(), closed_form_weight_distribution(&p).unwrap());
        assert_eq!(spec.cwe(), closed_form_cwe(&p).unwrap());
        use crate::gf3::TritVector;
        let zero = TritVector::zero(9).unwrap();
        assert_eq!(spec.weight_of(Trit::ONE, Trit::ONE, &zero).unwrap(), 834);
        check_shell_spectra(&p).unwrap();
    }

    #[test]
    fn sum_member_shell_formula() {
        // 2 Re (f+g)^(w) = -3 Psi_{k2-1}(i, m) + 3 on every nonzero shell
        for p in HWParams::window(9..=16) {
            let tab = KrawTable::new(p.m).unwrap();
            for i in 1..=p.m {
                let re = closed_form_member_re(&p, i).unwrap();
                assert_eq!(re[2], -3 * tab.psi(p.k2 - 1, i) + 3);
            }
        }
    }
}
