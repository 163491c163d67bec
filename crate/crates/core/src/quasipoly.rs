//! Quasi-polynomials: functions `n -> sum_j c_j(n mod M) n^j`.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat, rat_to_string, BigRat};
use crate::poly::Poly;

/// A quasi-polynomial of period `M`: one polynomial row per residue class.
///
/// Row `r` is the polynomial that agrees with the function at every
/// `n >= 0` with `n mod M = r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiPolynomial {
    period: u64,
    rows: Vec<Poly>,
}

impl QuasiPolynomial {
    pub fn new(rows: Vec<Poly>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Domain("a quasi-polynomial needs at least one residue row".into()));
        }
        Ok(QuasiPolynomial { period: rows.len() as u64, rows })
    }

    pub fn from_poly(p: Poly) -> Self {
        QuasiPolynomial { period: 1, rows: vec![p] }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Tight degree: the largest row degree, 0 when identically zero.
    pub fn degree(&self) -> usize {
        self.rows.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Poly::is_zero)
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    pub fn row(&self, residue: u64) -> &Poly {
        &self.rows[(residue % self.period) as usize]
    }

    /// `c[r][j]`, the coefficient of `n^j` on residue `r`.
    pub fn coeff(&self, residue: u64, j: usize) -> BigRat {
        self.row(residue).coeff(j)
    }

    pub fn eval(&self, n: i64) -> Result<BigRat> {
        if n < 0 {
            return Err(Error::Domain(format!("quasi-polynomial evaluated at negative argument {n}")));
        }
        Ok(self.row(n as u64).eval_int(n))
    }

    fn combine(&self, other: &Self, op: impl Fn(&Poly, &Poly) -> Poly + Sync) -> Self {
        let period = self.period.lcm(&other.period);
        let rows = (0..period)
            .into_par_iter()
            .map(|r| op(self.row(r), other.row(r)))
            .collect();
        QuasiPolynomial { period, rows }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        QuasiPolynomial { period: self.period, rows: self.rows.iter().map(|p| p.scale(c)).collect() }
    }

    /// `n -> f(n + t)`: rows rotate by `t` and are re-expanded around `n + t`.
    pub fn shift(&self, t: i64) -> Self {
        if t == 0 {
            return self.clone();
        }
        let m = self.period as i64;
        let tr = rat(t);
        let rows = (0..m)
            .into_par_iter()
            .map(|r| self.row((r + t).rem_euclid(m) as u64).shift(&tr))
            .collect();
        QuasiPolynomial { period: self.period, rows }
    }

    /// The same function written over a multiple of its period.
    pub fn with_period(&self, period: u64) -> Result<Self> {
        if period == 0 || period % self.period != 0 {
            return Err(Error::Domain(format!("{period} is not a multiple of the period {}", self.period)));
        }
        Ok(QuasiPolynomial { period, rows: (0..period).map(|r| self.row(r).clone()).collect() })
    }

    /// Per residue: degree and leading coefficient, `None` for a zero row.
    pub fn leading_coefficients(&self) -> Vec<Option<(usize, BigRat)>> {
        self.rows
            .iter()
            .map(|p| p.degree().map(|d| (d, p.coeff(d))))
            .collect()
    }

    pub fn to_json(&self) -> QuasiPolynomialJson {
        let degree = self.degree();
        let coeffs = self
            .rows
            .iter()
            .map(|p| (0..=degree).map(|j| rat_to_string(&p.coeff(j))).collect())
            .collect();
        QuasiPolynomialJson { period: self.period, degree, coeffs }
    }

    pub fn from_json(json: &QuasiPolynomialJson) -> Result<Self> {
        if json.period == 0 || json.coeffs.len() as u64 != json.period {
            return Err(Error::Parse(format!(
                "expected {} residue rows, found {}",
                json.period,
                json.coeffs.len()
            )));
        }
        let mut rows = Vec::with_capacity(json.coeffs.len());
        for row in &json.coeffs {
            if row.len() != json.degree + 1 {
                return Err(Error::Parse(format!(
                    "row has {} coefficients, expected {}",
                    row.len(),
                    json.degree + 1
                )));
            }
            let coeffs = row.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
            rows.push(Poly::new(coeffs));
        }
        let qp = QuasiPolynomial { period: json.period, rows };
        if qp.degree() != json.degree && !qp.is_zero() {
            return Err(Error::Parse(format!(
                "declared degree {} is not tight (actual {})",
                json.degree,
                qp.degree()
            )));
        }
        Ok(qp)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("quasi-polynomial JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: QuasiPolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}

/// `(w_{n+1})^2 - w_n w_{n+2}` as a quasi-polynomial in `n`.
pub fn lhat_qp(qp: &QuasiPolynomial) -> QuasiPolynomial {
    let m = qp.period();
    let one = rat(1);
    let two = rat(2);
    let rows = (0..m)
        .into_par_iter()
        .map(|r| {
            let next = qp.row(r + 1).shift(&one);
            let after = qp.row(r + 2).shift(&two);
            &(&next * &next) - &(qp.row(r) * &after)
        })
        .collect();
    QuasiPolynomial { period: m, rows }
}

/// Applies [`lhat_qp`] `times` times.
pub fn lhat_qp_iter(qp: &QuasiPolynomial, times: usize) -> QuasiPolynomial {
    (0..times).fold(qp.clone(), |acc, _| lhat_qp(&acc))
}

/// Wire form: coefficients as `num/den` strings, one array per residue.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuasiPolynomialJson {
    pub period: u64,
    pub degree: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, p) in self.rows.iter().enumerate() {
            writeln!(f, "n = {r} (mod {}): {p}", self.period)?;
        }
        Ok(())
    }
}
