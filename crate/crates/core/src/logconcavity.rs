//! Sequence operators and exact decision procedures for the log-concavity
//! family of inequalities on `p_A(n, k)`.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotic::{almkvist_head, bell_bound_f, bell_product};
use crate::cnt::{qp_from_cnt, CntOptions};
use crate::criteria::{gcd_condition, predict_r_logconcave};
use crate::error::{Error, Result};
use crate::exact::{ceil_to_int, int_rat, rat, rat_to_string, BigRat};
use crate::partition::{p_series, PartSpec, PartitionFunction};
use crate::poly::Poly;
use crate::quasipoly::lhat_qp;
use crate::threshold::{positivity_analysis, ResidueObstruction};

/// A finite stretch `w_start, w_{start+1}, ...` of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqWindow {
    pub start: u64,
    pub values: Vec<BigRat>,
}

impl SeqWindow {
    pub fn new(start: u64, values: Vec<BigRat>) -> Self {
        SeqWindow { start, values }
    }

    pub fn from_ints(start: u64, values: &[i64]) -> Self {
        SeqWindow { start, values: values.iter().map(|&v| rat(v)).collect() }
    }

    pub fn from_bigints(start: u64, values: &[BigInt]) -> Self {
        SeqWindow { start, values: values.iter().map(int_rat).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `w_i` by absolute index.
    pub fn at(&self, i: u64) -> Option<&BigRat> {
        i.checked_sub(self.start).and_then(|off| self.values.get(off as usize))
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            return Err(Error::WindowTooShort { needed, have: self.len() });
        }
        Ok(())
    }

    fn require_positive(&self) -> Result<()> {
        match self.values.iter().position(|v| !v.is_positive()) {
            Some(i) => Err(Error::PositivityRequired(format!(
                "w_{} = {} is not positive",
                self.start + i as u64,
                rat_to_string(&self.values[i])
            ))),
            None => Ok(()),
        }
    }
}

/// `(w_{i+1}^2 - w_i w_{i+2})_i`, same starting index.
pub fn lhat_seq(w: &SeqWindow) -> Result<SeqWindow> {
    w.require(3)?;
    let values = w.values.windows(3).map(|t| &t[1] * &t[1] - &t[0] * &t[2]).collect();
    Ok(SeqWindow { start: w.start, values })
}

/// `(w_{i+1} / w_i)_i`.
pub fn r_ratio(w: &SeqWindow) -> Result<SeqWindow> {
    w.require(2)?;
    w.require_positive()?;
    let values = w.values.windows(2).map(|t| &t[1] / &t[0]).collect();
    Ok(SeqWindow { start: w.start, values })
}

/// `(w_i w_{i+2} / w_{i+1}^2)_i`.
pub fn r2_ratio(w: &SeqWindow) -> Result<SeqWindow> {
    w.require(3)?;
    w.require_positive()?;
    let values = w.values.windows(3).map(|t| &t[0] * &t[2] / (&t[1] * &t[1])).collect();
    Ok(SeqWindow { start: w.start, values })
}

/// The expanded 2-log-concavity inequality at `n`, using `w_n..=w_{n+4}`.
pub fn two_log_inequality(w: &SeqWindow, n: u64) -> Result<bool> {
    let get = |i: u64| w.at(n + i).ok_or(Error::WindowTooShort { needed: 5, have: w.len() });
    let (w0, w1, w2, w3, w4) = (get(0)?, get(1)?, get(2)?, get(3)?, get(4)?);
    let w2sq = w2 * w2;
    let value = &w2sq * &w2sq - rat(2) * w1 * &w2sq * w3 + w1 * w1 * w2 * w4 + w0 * w2 * w3 * w3
        - w0 * &w2sq * w4;
    Ok(value.is_positive())
}

fn lhat_ints(w: &[BigInt]) -> Vec<BigInt> {
    w.windows(3).map(|t| &t[1] * &t[1] - &t[0] * &t[2]).collect()
}

pub fn strong_check_with(pf: &PartitionFunction, m: u64, n: i64) -> Result<bool> {
    let m = m as i64;
    let mid = pf.value(n)?;
    Ok(&mid * &mid > pf.value(n + m)? * pf.value(n - m)?)
}

/// `p_A(n,k)^2 > p_A(n+m,k) p_A(n-m,k)`, negative arguments counting as 0.
pub fn strong_check(spec: &PartSpec, m: u64, n: i64) -> Result<bool> {
    strong_check_with(&PartitionFunction::new(spec.clone()), m, n)
}

/// `d = (1/k) prod_{i=1}^k (1 + i D k)`.
pub fn d_hat(spec: &PartSpec) -> BigRat {
    BigRat::new(bell_product(spec), BigInt::from(spec.k()))
}

/// Both branch conditions for the strong bound: the stated `2d >= 3m^3` and
/// the `2d^2 >= 3m^6` used when deriving it.
pub fn thm1_branches(spec: &PartSpec, m: u64) -> (bool, bool) {
    let d = d_hat(spec);
    let m3 = rat(m as i64).pow(3);
    let stated = rat(2) * &d >= rat(3) * &m3;
    let derived = rat(2) * &d * &d >= rat(3) * &m3 * &m3;
    (stated, derived)
}

fn check_log3_hypotheses(spec: &PartSpec) -> Result<()> {
    let k = spec.k();
    if k < 4 {
        return Err(Error::HypothesisViolated(format!("k = {k} < 4")));
    }
    if let Some(w) = gcd_condition(spec, k - 2)?.witness {
        return Err(Error::HypothesisViolated(format!(
            "the {}-multisubset {:?} has gcd divisible by {}",
            k - 2,
            w.multisubset,
            w.prime
        )));
    }
    Ok(())
}

/// Index from which ordinary log-concavity is guaranteed: `ceil((2/k) prod (1 + i D k))`.
pub fn log3_bound(spec: &PartSpec) -> Result<BigInt> {
    check_log3_hypotheses(spec)?;
    Ok(ceil_to_int(&(rat(2) * d_hat(spec))))
}

/// Index from which the gap-`m` inequality is guaranteed.
pub fn thm1_bound(spec: &PartSpec, m: u64) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain("gap m must be positive".into()));
    }
    if m == 1 {
        return log3_bound(spec);
    }
    check_log3_hypotheses(spec)?;
    let (stated, _) = thm1_branches(spec, m);
    Ok(if stated { ceil_to_int(&d_hat(spec)) } else { BigInt::from(3 * m) })
}

fn integral_arg(x: &BigRat, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Integrality(format!("{what} = {} is not an integer", rat_to_string(x))));
    }
    x.to_integer().to_i64().ok_or_else(|| Error::Domain(format!("{what} out of range")))
}

fn check_uv(u: &BigRat, v: &BigRat) -> Result<()> {
    if !(v.is_positive() && u > v) {
        return Err(Error::Domain(format!("need u > v > 0, got u = {}, v = {}", rat_to_string(u), rat_to_string(v))));
    }
    Ok(())
}

pub fn ratio_check_with(pf: &PartitionFunction, u: &BigRat, v: &BigRat, n: u64) -> Result<bool> {
    check_uv(u, v)?;
    let n = rat(n as i64);
    let mid = integral_arg(&(u * &n), "un")?;
    let hi = integral_arg(&((u + v) * &n), "(u+v)n")?;
    let lo = integral_arg(&((u - v) * &n), "(u-v)n")?;
    let m = pf.value(mid)?;
    Ok(&m * &m > pf.value(hi)? * pf.value(lo)?)
}

/// `p_A(un,k)^2 > p_A((u+v)n,k) p_A((u-v)n,k)`.
pub fn ratio_check(spec: &PartSpec, u: &BigRat, v: &BigRat, n: u64) -> Result<bool> {
    ratio_check_with(&PartitionFunction::new(spec.clone()), u, v, n)
}

/// `ceil(4u/(k v^2) prod (1 + i D k))`.
pub fn cor3_bound(spec: &PartSpec, u: &BigRat, v: &BigRat) -> Result<BigInt> {
    check_uv(u, v)?;
    let k = spec.k();
    if k < 2 {
        return Err(Error::HypothesisViolated("k >= 2 required".into()));
    }
    if spec.gcd() != 1 {
        return Err(Error::HypothesisViolated(format!("gcd of the parts is {}", spec.gcd())));
    }
    let b = int_rat(&bell_product(spec));
    Ok(ceil_to_int(&(rat(4) * u / (rat(k as i64) * v * v) * b)))
}

/// Sign of `(n^2-1)^a p(n)^2 - n^{2a} p(n+1) p(n-1)` from the three values.
pub fn delta_alpha_sign_values(prev: &BigInt, mid: &BigInt, next: &BigInt, alpha: &BigRat, n: u64) -> Result<Ordering> {
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} < 2")));
    }
    if alpha.is_negative() {
        return Err(Error::Domain("alpha must be nonnegative".into()));
    }
    let p = alpha.numer().to_u32().ok_or_else(|| Error::Domain("alpha numerator too large".into()))?;
    let q = alpha.denom().to_u32().ok_or_else(|| Error::Domain("alpha denominator too large".into()))?;
    let nn = BigInt::from(n);
    let lhs = (&nn * &nn - 1u32).pow(p) * mid.pow(2 * q);
    let rhs = nn.pow(2 * p) * (next * prev).pow(q);
    Ok(lhs.cmp(&rhs))
}

pub fn delta_alpha_sign_with(pf: &PartitionFunction, alpha: &BigRat, n: u64) -> Result<Ordering> {
    let n_i = n as i64;
    delta_alpha_sign_values(&pf.value(n_i - 1)?, &pf.value(n_i)?, &pf.value(n_i + 1)?, alpha, n)
}

/// Exact sign of the scaled log-concavity difference at `n >= 2`.
pub fn delta_alpha_sign(spec: &PartSpec, alpha: &BigRat, n: u64) -> Result<Ordering> {
    delta_alpha_sign_with(&PartitionFunction::new(spec.clone()), alpha, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    #[serde(rename = "holds-from-N")]
    HoldsFromN,
    FailsInfinitelyOften,
    UnknownAtHorizon,
}

/// A non-positive value of the inequality at level `level`, argument `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub level: usize,
    pub n: u64,
    /// `None` when the exact value is not a rational (fractional scaling exponent).
    #[serde(serialize_with = "ser_opt_rat")]
    pub value: Option<BigRat>,
}

fn ser_opt_rat<S: serde::Serializer>(x: &Option<BigRat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&rat_to_string(v)),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub verdict: Verdict,
    pub threshold_n: Option<u64>,
    pub last_violation: Option<Violation>,
    pub obstruction: Option<ResidueObstruction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub method: String,
    pub verdict: Verdict,
    pub threshold_n: Option<u64>,
    pub witness: Option<Violation>,
    pub horizon: Option<u64>,
    /// Residue classes examined by the symbolic method.
    pub residues: Option<u64>,
    pub levels: Vec<LevelReport>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn merge(property: String, method: &str, horizon: Option<u64>, levels: Vec<LevelReport>) -> Self {
        let worst = |v: Verdict| levels.iter().filter(|l| l.verdict == v).max_by_key(|l| l.last_violation.as_ref().map(|w| w.n));
        let (verdict, witness_level) = if let Some(l) = worst(Verdict::FailsInfinitelyOften) {
            (Verdict::FailsInfinitelyOften, Some(l))
        } else if let Some(l) = worst(Verdict::UnknownAtHorizon) {
            (Verdict::UnknownAtHorizon, Some(l))
        } else {
            (Verdict::HoldsFromN, None)
        };
        let threshold_n = match verdict {
            Verdict::HoldsFromN => levels.iter().filter_map(|l| l.threshold_n).max().or(Some(0)),
            _ => None,
        };
        CheckReport {
            property,
            method: method.into(),
            verdict,
            threshold_n,
            witness: witness_level.and_then(|l| l.last_violation.clone()),
            horizon,
            residues: None,
            levels,
            notes: Vec::new(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report JSON is always serializable")
    }
}

/// `max(1000, 6 * period * (r + 1))`: twice the closing tail a verdict needs.
pub fn default_horizon(spec: &PartSpec, r: usize) -> u64 {
    1000u64.max(6 * spec.lcm() * (r as u64 + 1))
}

/// Classifies a window `[start, horizon]` given the sorted violating arguments.
///
/// Violations persisting in each of the last three period-length blocks are
/// read as infinitely many; any other violation inside the closing tail of
/// length `tail` leaves the window inconclusive.
fn classify_window(
    level: usize,
    violations: &[(u64, Option<BigRat>)],
    horizon: u64,
    period: u64,
    tail: u64,
) -> LevelReport {
    let last = violations.last().map(|(n, v)| Violation { level, n: *n, value: v.clone() });
    let Some(lv) = &last else {
        return LevelReport { level, verdict: Verdict::HoldsFromN, threshold_n: Some(0), last_violation: None, obstruction: None };
    };
    if lv.n + tail < horizon {
        return LevelReport { level, verdict: Verdict::HoldsFromN, threshold_n: Some(lv.n + 1), last_violation: last, obstruction: None };
    }
    let persistent = (0..3u64).all(|b| {
        let hi = horizon.saturating_sub(b * period);
        let lo = hi.saturating_sub(period - 1);
        violations.iter().any(|(n, _)| *n >= lo && *n <= hi)
    });
    let verdict = if persistent { Verdict::FailsInfinitelyOften } else { Verdict::UnknownAtHorizon };
    LevelReport { level, verdict, threshold_n: None, last_violation: last, obstruction: None }
}

fn window_tail(period: u64, r: usize) -> u64 {
    (3 * period * (r as u64 + 1)).max(10)
}

/// The integer sequences `L^j p_A(., k)` for `j = 1..=r` over `[0, horizon]`.
pub fn lhat_levels(spec: &PartSpec, r: usize, horizon: u64) -> Vec<Vec<BigInt>> {
    let len = horizon as usize + 2 * r + 1;
    let mut cur: Vec<BigInt> = p_series(spec, len - 1).into_iter().map(BigInt::from).collect();
    let mut levels = Vec::with_capacity(r);
    for _ in 0..r {
        cur = lhat_ints(&cur);
        levels.push(cur.clone());
    }
    for level in levels.iter_mut() {
        level.truncate(horizon as usize + 1);
    }
    levels
}

/// Window check of the first `r` iterates of `L` on `p_A(., k)`.
pub fn r_logconcave_empirical(spec: &PartSpec, r: usize, horizon: u64) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let period = spec.lcm();
    let tail = window_tail(period, r);
    let levels = lhat_levels(spec, r, horizon)
        .into_par_iter()
        .enumerate()
        .map(|(j, seq)| {
            let violations: Vec<(u64, Option<BigRat>)> = seq
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_positive())
                .map(|(n, v)| (n as u64, Some(int_rat(v))))
                .collect();
            classify_window(j + 1, &violations, horizon, period, tail)
        })
        .collect();
    Ok(CheckReport::merge(format!("r-log-concave({r})"), "empirical", Some(horizon), levels))
}

/// Certified minimal `N` from the exact quasi-polynomial of every level.
pub fn r_logconcave_threshold(spec: &PartSpec, r: usize, options: &CntOptions) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let mut qp = qp_from_cnt(spec, options)?;
    let mut levels = Vec::with_capacity(r);
    for j in 1..=r {
        qp = lhat_qp(&qp);
        let analysis = positivity_analysis(&qp);
        let verdict = if analysis.threshold.is_some() { Verdict::HoldsFromN } else { Verdict::FailsInfinitelyOften };
        let last_violation = analysis.last_nonpositive.map(|n| Violation {
            level: j,
            n,
            value: Some(qp.eval(n as i64).expect("nonnegative argument")),
        });
        levels.push(LevelReport { level: j, verdict, threshold_n: analysis.threshold, last_violation, obstruction: analysis.obstruction });
    }
    let mut report = CheckReport::merge(format!("r-log-concave({r})"), "symbolic", None, levels);
    report.residues = Some(qp.period());
    let prediction = predict_r_logconcave(spec, r);
    let agrees = prediction.verdict == (report.verdict == Verdict::HoldsFromN);
    if !agrees {
        report.notes.push(format!(
            "criterion {} ({}) disagrees with the symbolic verdict",
            if prediction.verdict { "holds" } else { "fails" },
            prediction.condition
        ));
    }
    Ok(report)
}

/// Window check of `p(n)^2 > p(n+m) p(n-m)` for `0 <= n <= horizon`.
pub fn strong_empirical(spec: &PartSpec, m: u64, horizon: u64) -> Result<CheckReport> {
    if m == 0 {
        return Err(Error::Domain("gap m must be positive".into()));
    }
    let vals: Vec<BigInt> = p_series(spec, (horizon + m) as usize).into_iter().map(BigInt::from).collect();
    let at = |i: i64| if i < 0 { BigInt::zero() } else { vals[i as usize].clone() };
    let violations: Vec<(u64, Option<BigRat>)> = (0..=horizon)
        .into_par_iter()
        .filter_map(|n| {
            let n_i = n as i64;
            let d = at(n_i) * at(n_i) - at(n_i + m as i64) * at(n_i - m as i64);
            (!d.is_positive()).then(|| (n, Some(int_rat(&d))))
        })
        .collect();
    let level = classify_window(1, &violations, horizon, spec.lcm(), window_tail(spec.lcm(), 1));
    let property = if m == 1 { "log-concave".to_string() } else { format!("strong-log-concave({m})") };
    let mut report = CheckReport::merge(property, "empirical", Some(horizon), vec![level]);
    if m >= 2 && spec.k() >= 4 {
        let (stated, derived) = thm1_branches(spec, m);
        if stated != derived {
            report.notes.push(format!("gap {m} falls between the branch conditions 2d >= 3m^3 and 2d^2 >= 3m^6"));
        }
    }
    Ok(report)
}

/// `Delta^alpha(n)` when `alpha` is an integer, otherwise `None` (irrational in general).
fn delta_alpha_value(prev: &BigInt, mid: &BigInt, next: &BigInt, alpha: &BigRat, n: u64) -> Option<BigRat> {
    if !alpha.is_integer() {
        return None;
    }
    let a = alpha.to_integer().to_u32()?;
    let nn = BigInt::from(n);
    Some(int_rat(&((&nn * &nn - 1u32).pow(a) * mid * mid - nn.pow(2 * a) * next * prev)))
}

/// Signs of the scaled difference for `2 <= n <= horizon`, as `(n, sign, exact value if rational)`.
pub fn delta_alpha_table(spec: &PartSpec, alpha: &BigRat, from: u64, horizon: u64) -> Result<Vec<(u64, Ordering, Option<BigRat>)>> {
    let from = from.max(2);
    let vals: Vec<BigInt> = p_series(spec, horizon as usize + 1).into_iter().map(BigInt::from).collect();
    (from..=horizon)
        .into_par_iter()
        .map(|n| {
            let i = n as usize;
            let s = delta_alpha_sign_values(&vals[i - 1], &vals[i], &vals[i + 1], alpha, n)?;
            Ok((n, s, delta_alpha_value(&vals[i - 1], &vals[i], &vals[i + 1], alpha, n)))
        })
        .collect()
}

/// Window check of `Delta^alpha(n) > 0` for `2 <= n <= horizon`.
pub fn scaled_empirical(spec: &PartSpec, alpha: &BigRat, horizon: u64) -> Result<CheckReport> {
    let table = delta_alpha_table(spec, alpha, 2, horizon)?;
    let violations: Vec<(u64, Option<BigRat>)> =
        table.into_iter().filter(|(_, s, _)| *s != Ordering::Greater).map(|(n, _, v)| (n, v)).collect();
    let level = classify_window(1, &violations, horizon, spec.lcm(), window_tail(spec.lcm(), 1));
    let mut report = CheckReport::merge(format!("scaled-log-concave({})", rat_to_string(alpha)), "empirical", Some(horizon), vec![level]);
    if report.verdict == Verdict::HoldsFromN {
        report.threshold_n = report.threshold_n.map(|n| n.max(2));
    }
    Ok(report)
}

/// Exact values of the inequality left-hand side over a window, for sign tables.
pub fn lhat_table(spec: &PartSpec, level: usize, horizon: u64) -> Vec<(u64, BigRat)> {
    lhat_levels(spec, level, horizon)
        .pop()
        .unwrap_or_default()
        .into_iter()
        .enumerate()
        .map(|(n, v)| (n as u64, int_rat(&v)))
        .collect()
}

/// The expanded 2-log-concavity expression with `p_A` replaced by the lower
/// and upper polynomial bounds `head -+ F n^{k-8}`, cleared of denominators.
///
/// Returns the numerator polynomial; its positive leading coefficient is
/// what certifies eventual 2-log-concavity. For `k >= 8` no clearing is needed;
/// for `k = 7` the bound term is `F/n` and the expression is multiplied by
/// `n (n+1)^2 (n+2)^4 (n+3)^2 (n+4)`.
pub fn prop41_combination(spec: &PartSpec) -> Result<Poly> {
    let k = spec.k();
    if k < 7 {
        return Err(Error::HypothesisViolated(format!("k = {k} < 7")));
    }
    let head = almkvist_head(spec, k - 6)?.poly();
    let f_const = bell_bound_f(spec);
    // with h_i = n + i and e = F n^{k-8}: f = head - e, g = head + e
    let (lower, upper, scale): (Vec<Poly>, Vec<Poly>, Vec<u32>) = if k >= 8 {
        let e = Poly::monomial(f_const, k - 8);
        let lo = &head - &e;
        let up = &head + &e;
        let shifted = |p: &Poly| (0..5).map(|i| p.shift(&rat(i))).collect::<Vec<_>>();
        (shifted(&lo), shifted(&up), vec![0; 5])
    } else {
        // multiply f(n+i) by (n+i): (n+i) head(n+i) -+ F
        let x = Poly::from_ints(&[0, 1]);
        let nh = &x * &head;
        let lo = &nh - &Poly::constant(f_const.clone());
        let up = &nh + &Poly::constant(f_const);
        let shifted = |p: &Poly| (0..5).map(|i| p.shift(&rat(i))).collect::<Vec<_>>();
        (shifted(&lo), shifted(&up), vec![1, 2, 4, 2, 1])
    };
    // each term is a product of four factors; pad to the common multiplier
    let term = |polys: &[Poly], idx: [usize; 4]| -> Poly {
        let mut counts = [0u32; 5];
        let mut acc = Poly::constant(rat(1));
        for i in idx {
            acc = &acc * &polys[i];
            counts[i] += 1;
        }
        for (i, &c) in counts.iter().enumerate() {
            let missing = scale[i] - c.min(scale[i]);
            if missing > 0 {
                acc = &acc * &Poly::from_ints(&[i as i64, 1]).pow(missing);
            }
        }
        acc
    };
    let mut total = term(&lower, [2, 2, 2, 2]);
    total = &total - &term(&upper, [1, 2, 2, 3]).scale(&rat(2));
    total = &total + &term(&lower, [1, 1, 2, 4]);
    total = &total + &term(&lower, [0, 2, 3, 3]);
    total = &total - &term(&upper, [0, 2, 2, 4]);
    Ok(total)
}

/// An ordering against zero as -1, 0 or 1.
pub fn sign_of_ordering(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Like [`crate::exact::sign_of`] for big integers.
pub fn int_sign(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
