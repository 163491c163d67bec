//! Residue-independent head of `p_A(n, k)` and the explicit two-sided bound.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::criteria::gcd_condition;
use crate::error::{Error, Result};
use crate::exact::{factorial, int_rat, rat, ratio, BigRat};
use crate::partition::PartSpec;
use crate::poly::Poly;

fn series_mul(a: &[BigRat], b: &[BigRat], len: usize) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_recip(a: &[BigRat], len: usize) -> Vec<BigRat> {
    let inv0 = a[0].recip();
    let mut out = vec![BigRat::zero(); len];
    out[0] = inv0.clone();
    for n in 1..len {
        let mut acc = BigRat::zero();
        for i in 1..=n.min(a.len() - 1) {
            acc += &a[i] * &out[n - i];
        }
        out[n] = -acc * &inv0;
    }
    out
}

/// Taylor coefficients `sigma_0..=sigma_{m_max}` in `t` of
/// `prod_i (x_i t/2) / sinh(x_i t/2)`.
pub fn sigma_coeffs(values: &[u64], m_max: usize) -> Vec<BigRat> {
    let len = m_max + 1;
    let mut acc = vec![BigRat::zero(); len];
    acc[0] = BigRat::one();
    for &x in values {
        // sinh(u)/u = sum u^{2i} / (2i+1)!, with u = x t / 2
        let half = ratio(x as i64, 2);
        let mut sinhc = vec![BigRat::zero(); len];
        let mut u_pow = BigRat::one();
        // fact = (e+1)!
        let mut fact = BigRat::one();
        for e in 0..len {
            if e > 0 {
                u_pow *= &half;
                fact *= rat(e as i64 + 1);
            }
            if e % 2 == 0 {
                sinhc[e] = &u_pow / &fact;
            }
        }
        let factor = series_recip(&sinhc, len);
        acc = series_mul(&acc, &factor, len);
    }
    acc
}

/// Power sums `s_i = a_1^i + ... + a_k^i`.
pub fn power_sum(values: &[u64], i: u32) -> BigInt {
    values.iter().map(|&a| BigInt::from(a).pow(i)).sum()
}

/// Top coefficients `c_{k-1}, ..., c_{j-1}` of `p_A(n, k)` together with the
/// constant `F` of the two-sided bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AsymptoticHead {
    /// Descending: `coeffs[0] = c_{k-1}`, last entry `c_{j-1}`.
    #[serde(with = "crate::exact::rat_serde::vec")]
    pub coeffs: Vec<BigRat>,
    pub cut_index: usize,
    #[serde(with = "crate::exact::rat_serde")]
    pub error_bound_f: BigRat,
}

impl AsymptoticHead {
    /// The head as a polynomial in `n` (terms of degree `>= j - 1`).
    pub fn poly(&self) -> Poly {
        let top = self.cut_index - 1 + self.coeffs.len() - 1;
        let mut coeffs = vec![BigRat::zero(); top + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[top - i] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Coefficient of `n^d`, zero outside the head.
    pub fn coeff(&self, d: usize) -> BigRat {
        self.poly().coeff(d)
    }
}

/// The full Almkvist sum `(1/prod a_i) sum_{i=0}^{k-j} sigma_i (n + sigma/2)^{k-1-i} / (k-1-i)!`.
pub fn almkvist_sum(spec: &PartSpec, j: usize) -> Poly {
    let k = spec.k();
    let sigmas = sigma_coeffs(spec.parts(), k - j);
    let shift = ratio(spec.sum() as i64, 2);
    let mut total = Poly::zero();
    for (i, s) in sigmas.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let d = k - 1 - i;
        let fact = int_rat(&BigInt::from(factorial(d as u64)));
        total = &total + &Poly::binomial_power(&shift, d).scale(&(s / fact));
    }
    total.scale(&int_rat(&BigInt::from(spec.product())).recip())
}

pub fn almkvist_head(spec: &PartSpec, j: usize) -> Result<AsymptoticHead> {
    let k = spec.k();
    if j == 0 || j > k {
        return Err(Error::Domain(format!("cut index {j} outside 1..={k}")));
    }
    let check = gcd_condition(spec, j)?;
    if let Some(w) = check.witness {
        return Err(Error::HypothesisViolated(format!(
            "the {j}-multisubset {:?} has gcd {} > 1",
            w.multisubset, w.prime
        )));
    }
    let full = almkvist_sum(spec, j);
    let coeffs = (j - 1..k).rev().map(|d| full.coeff(d)).collect();
    Ok(AsymptoticHead { coeffs, cut_index: j, error_bound_f: bell_bound_f(spec) })
}

/// `F = prod_{i=1}^{k} (1 + i D k) / (k! prod a_i)`.
pub fn bell_bound_f(spec: &PartSpec) -> BigRat {
    let k = spec.k() as u64;
    let d = spec.lcm();
    let num: BigInt = (1..=k).map(|i| BigInt::from(1 + i * d * k)).product();
    let den = BigInt::from(factorial(k)) * BigInt::from(spec.product());
    BigRat::new(num, den)
}

/// `prod_{i=1}^{k} (1 + i D k)`, shared by several bounds.
pub fn bell_product(spec: &PartSpec) -> BigInt {
    let k = spec.k() as u64;
    let d = spec.lcm();
    (1..=k).map(|i| BigInt::from(1 + i * d * k)).product()
}
