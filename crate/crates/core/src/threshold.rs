//! Exact "eventually positive from N" decisions for quasi-polynomials.
//!
//! Each residue row is bounded above by root bounds computed in exact
//! arithmetic, then the last non-positive lattice point below the bound is
//! located by bisection, discarding sub-intervals that Descartes' rule of
//! signs proves root-free.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{ceil_to_int, floor_to_int, rat, BigRat};
use crate::poly::{integer_form, Poly};
use crate::quasipoly::QuasiPolynomial;

/// Integer polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    /// Positive rescaling of a rational polynomial to integer coefficients.
    pub fn from_poly(p: &Poly) -> Self {
        let (ints, _) = integer_form(p.coeffs());
        IntPoly(ints)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(x + c)`.
    pub fn taylor_shift(&self, c: &BigInt) -> IntPoly {
        let mut a = self.0.clone();
        let n = a.len();
        if c.is_zero() || n < 2 {
            return IntPoly(a);
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        IntPoly(a)
    }

    /// `p(s x)`.
    pub fn scale_var(&self, s: &BigInt) -> IntPoly {
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            out.push(c * &pow);
            pow *= s;
        }
        IntPoly(out)
    }

    pub fn reversed(&self) -> IntPoly {
        IntPoly(self.0.iter().rev().cloned().collect())
    }

    pub fn sign_variations(&self) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for c in &self.0 {
            let s = c.sign();
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Upper bound on the Descartes count of roots in the open interval `(lo, hi)`.
    pub fn roots_in_open_interval_bound(&self, lo: &BigInt, hi: &BigInt) -> usize {
        let r = self.taylor_shift(lo).scale_var(&(hi - lo));
        r.reversed().taylor_shift(&BigInt::one()).sign_variations()
    }
}

/// Upper bound `B` with every real root of `p` strictly below `B`
/// (minimum of the Cauchy and Fujiwara bounds).
pub fn root_upper_bound(p: &Poly) -> BigRat {
    let d = p.degree().expect("nonzero polynomial");
    if d == 0 {
        return rat(0);
    }
    let lead = p.coeff(d);
    let ratios: Vec<BigRat> = (0..d).map(|j| (p.coeff(j) / &lead).abs()).collect();
    let cauchy = rat(1) + ratios.iter().max().cloned().unwrap_or_else(|| rat(0));
    // Fujiwara: 2 max_i |a_{d-i}/a_d|^(1/i), with the constant term halved.
    let mut fuji = BigInt::zero();
    for i in 1..=d {
        let mut r = ratios[d - i].clone();
        if i == d {
            r /= rat(2);
        }
        if r.is_zero() {
            continue;
        }
        let ceil = ceil_to_int(&r).to_biguint().expect("nonnegative");
        let root = ceil.nth_root(i as u32);
        let root = if root.pow(i as u32) == ceil { root } else { root + BigUint::one() };
        let root = BigInt::from(root);
        if root > fuji {
            fuji = root;
        }
    }
    let fujiwara = rat(2) * BigRat::from_integer(fuji) + rat(1);
    if fujiwara < cauchy {
        fujiwara
    } else {
        cauchy
    }
}

/// Largest integer `t` in `[lo, hi]` with `q(t) <= 0`.
fn last_nonpositive(q: &IntPoly, lo: &BigInt, hi: &BigInt) -> Option<BigInt> {
    if lo > hi {
        return None;
    }
    let width = hi - lo;
    if width <= BigInt::from(16) {
        let mut t = hi.clone();
        while &t >= lo {
            if !q.eval(&t).is_positive() {
                return Some(t);
            }
            t -= 1;
        }
        return None;
    }
    if q.roots_in_open_interval_bound(lo, hi) == 0 {
        // constant sign strictly inside (lo, hi)
        if !q.eval(hi).is_positive() {
            return Some(hi.clone());
        }
        let inner = hi - 1;
        if !q.eval(&inner).is_positive() {
            return Some(inner);
        }
        return if q.eval(lo).is_positive() { None } else { Some(lo.clone()) };
    }
    let mid: BigInt = (lo + hi) / 2;
    last_nonpositive(q, &(&mid + 1), hi).or_else(|| last_nonpositive(q, lo, &mid))
}

/// Why a quasi-polynomial is not eventually positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueObstruction {
    pub residue: u64,
    /// `None` when the row is identically zero.
    pub degree: Option<usize>,
    #[serde(with = "crate::exact::rat_serde")]
    pub leading: BigRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    /// Minimal `N` with `f(n) > 0` for all `n >= N`.
    pub threshold: Option<u64>,
    /// Largest `n` with `f(n) <= 0` when a threshold exists.
    pub last_nonpositive: Option<u64>,
    pub obstruction: Option<ResidueObstruction>,
}

fn row_last_nonpositive(row: &Poly, residue: u64, period: u64) -> Option<u64> {
    let bound = root_upper_bound(row);
    let t_hi = floor_to_int(&((bound - rat(residue as i64)) / rat(period as i64)));
    if t_hi.is_negative() {
        return None;
    }
    // t-variable: n = period * t + residue
    let q = IntPoly::from_poly(&row.compose_linear(&rat(period as i64), &rat(residue as i64)));
    last_nonpositive(&q, &BigInt::zero(), &t_hi).map(|t| {
        let t = t.to_u64().expect("threshold exceeds u64");
        t * period + residue
    })
}

/// Exact minimal positivity threshold with the witness that decided it.
pub fn positivity_analysis(qp: &QuasiPolynomial) -> PositivityReport {
    for (r, row) in qp.rows().iter().enumerate() {
        let lead = row.leading().cloned().unwrap_or_else(|| rat(0));
        if !lead.is_positive() {
            return PositivityReport {
                threshold: None,
                last_nonpositive: None,
                obstruction: Some(ResidueObstruction { residue: r as u64, degree: row.degree(), leading: lead }),
            };
        }
    }
    let period = qp.period();
    let last = qp
        .rows()
        .par_iter()
        .enumerate()
        .map(|(r, row)| row_last_nonpositive(row, r as u64, period))
        .reduce(|| None, |a, b| a.max(b));
    PositivityReport {
        threshold: Some(last.map_or(0, |n| n + 1)),
        last_nonpositive: last,
        obstruction: None,
    }
}

/// Minimal `N >= 0` with `qp(n) > 0` for every `n >= N`, if one exists.
pub fn qp_positivity_threshold(qp: &QuasiPolynomial) -> Option<u64> {
    positivity_analysis(qp).threshold
}
