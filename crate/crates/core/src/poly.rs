//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{binomial, int_rat, rat, BigRat};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * n^d`
    pub fn monomial(c: BigRat, d: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `n^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigRat {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRat {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(n + t)`, by binomial expansion of every power.
    pub fn shift(&self, t: &BigRat) -> Poly {
        if t.is_zero() || self.is_zero() {
            return self.clone();
        }
        // Horner in the shifted variable: p(n+t) = (...((a_d)(n+t) + a_{d-1})(n+t) ...)
        let step = Poly::new(vec![t.clone(), BigRat::one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(a n + b)`.
    pub fn compose_linear(&self, a: &BigRat, b: &BigRat) -> Poly {
        let step = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::constant(BigRat::one());
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// `(n + t)^d` expanded with exact binomials.
    pub fn binomial_power(t: &BigRat, d: usize) -> Poly {
        let mut coeffs = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let b = int_rat(&BigInt::from(binomial(d as u64, i as u64)));
            coeffs.push(b * crate::exact::rat_pow(t, (d - i) as i64));
        }
        Poly::new(coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Accumulate over a common denominator per operand to keep gcd work low.
        let (la, da) = integer_form(&self.coeffs);
        let (lb, db) = integer_form(&rhs.coeffs);
        let mut out = vec![BigInt::zero(); la.len() + lb.len() - 1];
        for (i, a) in la.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in lb.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let den = da * db;
        Poly::new(out.into_iter().map(|c| BigRat::new(c, den.clone())).collect())
    }
}

/// Writes rational coefficients as integers over one common denominator.
pub(crate) fn integer_form(coeffs: &[BigRat]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        den = num_integer::Integer::lcm(&den, c.denom());
    }
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (ints, den)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let body = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match d {
                0 => write!(f, "{body}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{body}*")?;
                    }
                    if d == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
