//! Exact scalars and the combinatorial primitives used throughout the crate.
//!
//! Every scalar is a [`BigRat`]: an arbitrary-precision rational kept in
//! lowest terms with a positive denominator. Nothing in the library rounds.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form.
pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_rat(n: &BigInt) -> BigRat {
    BigRat::from_integer(n.clone())
}

/// Canonical `num/den` rendering, always with an explicit denominator.
pub fn rat_to_string(x: &BigRat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den`, a bare integer, or a finite decimal such as `4.99`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRat::new(num, den));
    }
    parse_decimal(s)
}

/// Exact decimal conversion: the digits after the point over a power of ten.
pub fn parse_decimal(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let valid = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !valid(int_part) || !valid(frac_part) {
        return Err(Error::Parse(format!("not a decimal number: {s:?}")));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| Error::Parse(format!("not a decimal number: {s:?}")))?
    };
    if neg {
        num = -num;
    }
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    Ok(BigRat::new(num, den))
}

/// Smallest integer not below `x`.
pub fn ceil_to_int(x: &BigRat) -> BigInt {
    x.ceil().to_integer()
}

pub fn floor_to_int(x: &BigRat) -> BigInt {
    x.floor().to_integer()
}

/// Integer power by binary exponentiation; negative exponents invert.
pub fn rat_pow(base: &BigRat, exp: i64) -> BigRat {
    let mut result = BigRat::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

fn stirling_rows() -> &'static RwLock<Vec<Vec<BigUint>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<BigUint>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![BigUint::one()]]))
}

/// Row `n` of the unsigned Stirling numbers of the first kind,
/// `[n, 0], [n, 1], ..., [n, n]`.
///
/// Rows are filled by `[n+1, m] = [n, m-1] + n [n, m]` and memoized in a
/// process-wide table; readers only ever observe complete rows.
pub fn stirling1_row(n: usize) -> Vec<BigUint> {
    {
        let rows = stirling_rows().read().expect("stirling table poisoned");
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = stirling_rows().write().expect("stirling table poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is always present");
        let size = prev.len();
        let scale = BigUint::from(size - 1);
        let mut next = vec![BigUint::zero(); size + 1];
        for m in 0..=size {
            let mut v = BigUint::zero();
            if m >= 1 {
                v += &prev[m - 1];
            }
            if m < size {
                v += &scale * &prev[m];
            }
            next[m] = v;
        }
        rows.push(next);
    }
    rows[n].clone()
}

/// Coefficient of `x^m` in the rising factorial `x(x+1)...(x+n-1)`.
pub fn stirling1_unsigned(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    stirling1_row(n).swap_remove(m)
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Generalized binomial `alpha (alpha-1) ... (alpha-j+1) / j!`.
pub fn binomial_general(alpha: &BigRat, j: u64) -> BigRat {
    let mut acc = BigRat::one();
    for i in 0..j {
        acc *= alpha - rat(i as i64);
        acc /= rat(i as i64 + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn lcm_all(values: &[u64]) -> Result<BigUint> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(values
        .iter()
        .fold(BigUint::one(), |acc, &v| acc.lcm(&BigUint::from(v))))
}

pub fn gcd_all(values: &[u64]) -> Result<BigUint> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(values
        .iter()
        .fold(BigUint::zero(), |acc, &v| acc.gcd(&BigUint::from(v))))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign_of(x: &BigRat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

/// Serde helpers writing rationals as `num/den` strings.
pub mod rat_serde {
    use super::{rat_to_string, BigRat};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigRat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(x))
    }

    pub mod vec {
        use super::super::{rat_to_string, BigRat};
        use serde::ser::{SerializeSeq, Serializer};

        pub fn serialize<S: Serializer>(xs: &[BigRat], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&rat_to_string(x))?;
            }
            seq.end()
        }
    }
}
