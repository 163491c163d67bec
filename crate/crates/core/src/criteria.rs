//! The gcd-multisubset predicate and the iff-style predictions built on it.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use crate::cnt::CntOptions;
use crate::error::{Error, Result};
use crate::exact::{rat, rat_to_string, BigRat};
use crate::logconcavity::{r_logconcave_empirical, r_logconcave_threshold, CheckReport, Verdict};
use crate::partition::PartSpec;

/// A size-`j` selection of entries all divisible by `prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub multisubset: Vec<u64>,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdCheck {
    pub j: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Whether every `j` entries of the tuple (counted with multiplicity) have gcd 1.
///
/// This fails exactly when some prime divides at least `j` entries; the
/// witness is the first `j` entries divisible by the smallest such prime.
pub fn gcd_condition(spec: &PartSpec, j: usize) -> Result<GcdCheck> {
    let k = spec.k();
    if j == 0 || j > k {
        return Err(Error::Domain(format!("multisubset size {j} outside 1..={k}")));
    }
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &a in spec.parts() {
        for p in prime_factors(a) {
            by_prime.entry(p).or_default().push(a);
        }
    }
    let witness = by_prime.into_iter().find(|(_, v)| v.len() >= j).map(|(prime, mut v)| {
        v.truncate(j);
        Witness { multisubset: v, prime }
    });
    Ok(GcdCheck { j, holds: witness.is_none(), witness })
}

/// Exhaustive check over all size-`j` index subsets.
pub fn gcd_condition_bruteforce(spec: &PartSpec, j: usize) -> bool {
    fn rec(parts: &[u64], start: usize, left: usize, acc: u64) -> bool {
        if left == 0 {
            return acc == 1;
        }
        (start..=parts.len() - left).all(|i| rec(parts, i + 1, left - 1, num_integer::gcd(acc, parts[i])))
    }
    rec(spec.parts(), 0, j, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    EventuallyLogConcave,
    EventuallyStrongLogConcave,
    ScaledLogConcave(BigRat),
    RLogConcave(usize),
}

impl Property {
    pub fn name(&self) -> String {
        match self {
            Property::EventuallyLogConcave => "eventually-log-concave".into(),
            Property::EventuallyStrongLogConcave => "eventually-strong-log-concave".into(),
            Property::ScaledLogConcave(a) => format!("scaled-log-concave({})", rat_to_string(a)),
            Property::RLogConcave(r) => format!("r-log-concave({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PredictionWitness {
    Multisubset(Vec<u64>),
    Inequality(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub property: String,
    pub verdict: bool,
    /// Which criterion decided the verdict.
    pub rule: String,
    pub condition: String,
    pub witness: Option<PredictionWitness>,
}

impl Prediction {
    fn new(property: &Property, verdict: bool, rule: &str, condition: String, witness: Option<PredictionWitness>) -> Self {
        Prediction { property: property.name(), verdict, rule: rule.into(), condition, witness }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("prediction JSON is always serializable")
    }

    pub fn multisubset_witness(&self) -> Option<&[u64]> {
        match &self.witness {
            Some(PredictionWitness::Multisubset(v)) => Some(v),
            _ => None,
        }
    }
}

fn gcd_prediction(property: &Property, spec: &PartSpec, j: usize) -> Prediction {
    let check = gcd_condition(spec, j).expect("size within range");
    match check.witness {
        None => Prediction::new(property, true, "gcd-multisubset", format!("every {j}-multisubset has gcd 1"), None),
        Some(w) => Prediction::new(
            property,
            false,
            "gcd-multisubset",
            format!("{} divides {j} entries", w.prime),
            Some(PredictionWitness::Multisubset(w.multisubset)),
        ),
    }
}

fn log_concave_like(property: Property, spec: &PartSpec) -> Prediction {
    let k = spec.k();
    if spec.all_ones() {
        return if k >= 2 {
            Prediction::new(&property, true, "ones-sequence", format!("parts all equal 1 and k = {k} >= 2"), None)
        } else {
            Prediction::new(&property, false, "ones-sequence", "k >= 2".into(), Some(PredictionWitness::Inequality("k = 1 < 2".into())))
        };
    }
    if k < 4 {
        return Prediction::new(
            &property,
            false,
            "gcd-multisubset",
            "k >= 4 when parts are not all 1".into(),
            Some(PredictionWitness::Inequality(format!("k = {k} < 4"))),
        );
    }
    gcd_prediction(&property, spec, k - 2)
}

pub fn predict_eventually_logconcave(spec: &PartSpec) -> Prediction {
    log_concave_like(Property::EventuallyLogConcave, spec)
}

pub fn predict_strong(spec: &PartSpec) -> Prediction {
    log_concave_like(Property::EventuallyStrongLogConcave, spec)
}

pub fn predict_scaled(spec: &PartSpec, alpha: &BigRat) -> Prediction {
    let property = Property::ScaledLogConcave(alpha.clone());
    let k = spec.k();
    let bound = alpha + rat(1);
    if rat(k as i64) <= bound {
        return Prediction::new(
            &property,
            false,
            "scaled-degree",
            "k > alpha + 1".into(),
            Some(PredictionWitness::Inequality(format!("k = {k} <= alpha + 1 = {}", rat_to_string(&bound)))),
        );
    }
    if k <= 3 {
        return if spec.all_ones() {
            Prediction::new(&property, true, "scaled-degree", format!("parts all equal 1 and k = {k} > alpha + 1"), None)
        } else {
            Prediction::new(
                &property,
                false,
                "scaled-degree",
                "parts all equal 1 when k <= 3".into(),
                Some(PredictionWitness::Inequality(format!("k = {k} <= 3 with parts {spec}"))),
            )
        };
    }
    gcd_prediction(&property, spec, k - 2)
}

pub fn predict_r_logconcave(spec: &PartSpec, r: usize) -> Prediction {
    let property = Property::RLogConcave(r);
    let k = spec.k();
    if k > 2 * r {
        return gcd_prediction(&property, spec, k - 2 * r);
    }
    if spec.all_ones() {
        return match k {
            1 => Prediction::new(&property, false, "ones-sequence", "k >= 2".into(), Some(PredictionWitness::Inequality("k = 1".into()))),
            2 if r <= 1 => Prediction::new(&property, true, "ones-sequence", "k = 2 and r = 1".into(), None),
            2 => Prediction::new(
                &property,
                false,
                "ones-sequence",
                "r <= 1 when k = 2".into(),
                Some(PredictionWitness::Inequality(format!("k = 2 and r = {r} > 1"))),
            ),
            _ => Prediction::new(&property, true, "ones-sequence", format!("k = {k} >= 3"), None),
        };
    }
    Prediction::new(
        &property,
        false,
        "outside-theorem-scope",
        "k > 2r".into(),
        Some(PredictionWitness::Inequality(format!("k = {k} <= 2r = {}", 2 * r))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyRlogClass {
    Never,
    AtMostOne,
    AllR,
}

/// Asymptotic r-log-concavity of a polynomial sequence by its degree.
pub fn polynomial_rlog_class(degree: usize, leading: &BigRat) -> PolyRlogClass {
    if !leading.is_positive() {
        return PolyRlogClass::Never;
    }
    match degree {
        0 => PolyRlogClass::Never,
        1 => PolyRlogClass::AtMostOne,
        _ => PolyRlogClass::AllR,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub prediction: Prediction,
    pub empirical: CheckReport,
    pub symbolic: Option<CheckReport>,
    pub symbolic_error: Option<String>,
    pub certified_n: Option<u64>,
    pub agree: bool,
    pub discrepancy: Option<String>,
}

/// Runs the prediction against the empirical window and, within budget, the
/// symbolic threshold. The empirical horizon is widened past a certified `N`.
pub fn crosscheck(spec: &PartSpec, r: usize, horizon: u64, options: &CntOptions) -> Result<CrosscheckReport> {
    let prediction = predict_r_logconcave(spec, r);
    let (symbolic, symbolic_error) = match r_logconcave_threshold(spec, r, options) {
        Ok(rep) => (Some(rep), None),
        Err(e @ Error::BudgetExceeded { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let certified_n = symbolic.as_ref().and_then(|s| s.threshold_n);
    let horizon = match certified_n {
        Some(n) => horizon.max(n + 2 * r as u64 + 3 * spec.lcm() * (r as u64 + 1)),
        None => horizon,
    };
    let empirical = r_logconcave_empirical(spec, r, horizon)?;
    let mut discrepancy = None;
    if let Some(sym) = &symbolic {
        let sym_holds = sym.verdict == Verdict::HoldsFromN;
        if sym_holds != prediction.verdict && prediction.rule != "outside-theorem-scope" {
            discrepancy = Some(format!("prediction {} but symbolic verdict {:?}", prediction.verdict, sym.verdict));
        } else if sym_holds && (empirical.verdict != Verdict::HoldsFromN || empirical.threshold_n != certified_n) {
            discrepancy = Some(format!(
                "symbolic N = {:?} but empirical {:?} with N = {:?}",
                certified_n, empirical.verdict, empirical.threshold_n
            ));
        }
    } else if prediction.verdict && empirical.verdict == Verdict::FailsInfinitelyOften {
        discrepancy = Some("prediction true but the window fails persistently".into());
    }
    Ok(CrosscheckReport {
        prediction,
        empirical,
        symbolic,
        symbolic_error,
        certified_n,
        agree: discrepancy.is_none(),
        discrepancy,
    })
}
