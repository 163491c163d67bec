//! Truncated series in `n^{-1/q}` and the asymptotic pipeline for the ratio
//! sequences `R^2 L^{j-1} f`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, int_rat, rat, rat_to_string, BigRat};
use crate::poly::Poly;

/// `sum_j d_j n^{-j/q} + o(n^{-order/q})`.
///
/// Indices beyond `order` are never stored. A stored zero marks a
/// coefficient that was computed and confirmed to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    denom: u64,
    coeffs: BTreeMap<u64, BigRat>,
    order: u64,
}

impl TruncatedSeries {
    pub fn new(denom: u64, coeffs: BTreeMap<u64, BigRat>, order: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Series("grid denominator must be positive".into()));
        }
        let coeffs = coeffs.into_iter().filter(|(j, _)| *j <= order).collect();
        Ok(TruncatedSeries { denom, coeffs, order })
    }

    /// Integer grid from `(index, coefficient)` pairs.
    pub fn from_terms(terms: &[(u64, BigRat)], order: u64) -> Self {
        TruncatedSeries::new(1, terms.iter().cloned().collect(), order).expect("positive denominator")
    }

    pub fn constant(c: BigRat, order: u64) -> Self {
        Self::from_terms(&[(0, c)], order)
    }

    pub fn one(order: u64) -> Self {
        Self::constant(rat(1), order)
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRat)> {
        self.coeffs.iter().map(|(j, c)| (*j, c))
    }

    /// Coefficient of `n^{-j/q}`, zero when absent.
    pub fn coeff(&self, j: u64) -> BigRat {
        self.coeffs.get(&j).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u64> {
        self.coeffs.iter().find(|(_, c)| !c.is_zero()).map(|(j, _)| *j)
    }

    fn regrid(&self, denom: u64) -> TruncatedSeries {
        let f = denom / self.denom;
        TruncatedSeries {
            denom,
            coeffs: self.coeffs.iter().map(|(j, c)| (j * f, c.clone())).collect(),
            order: self.order * f,
        }
    }

    fn common(&self, other: &Self) -> (TruncatedSeries, TruncatedSeries) {
        let q = self.denom.lcm(&other.denom);
        (self.regrid(q), other.regrid(q))
    }

    /// Stores every index up to `order`, filling confirmed zeros.
    fn dense(denom: u64, values: Vec<BigRat>, order: u64) -> TruncatedSeries {
        let coeffs = values.into_iter().enumerate().take(order as usize + 1).map(|(j, c)| (j as u64, c)).collect();
        TruncatedSeries { denom, coeffs, order }
    }

    fn to_dense(&self) -> Vec<BigRat> {
        let mut v = vec![BigRat::zero(); self.order as usize + 1];
        for (j, c) in &self.coeffs {
            v[*j as usize] = c.clone();
        }
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let order = a.order.min(b.order);
        let mut coeffs = BTreeMap::new();
        for (j, c) in a.coeffs.iter().chain(b.coeffs.iter()) {
            if *j <= order {
                *coeffs.entry(*j).or_insert_with(BigRat::zero) += c;
            }
        }
        TruncatedSeries { denom: a.denom, coeffs, order }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|(j, x)| (*j, x * c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let va = a.valuation().unwrap_or(a.order);
        let vb = b.valuation().unwrap_or(b.order);
        let order = (a.order + vb).min(b.order + va);
        let mut coeffs = BTreeMap::new();
        for (i, x) in &a.coeffs {
            for (j, y) in &b.coeffs {
                if i + j <= order {
                    *coeffs.entry(i + j).or_insert_with(BigRat::zero) += x * y;
                }
            }
        }
        TruncatedSeries { denom: a.denom, coeffs, order }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TruncatedSeries { denom: self.denom, ..Self::one(self.order) }, |acc, _| acc.mul(self))
    }

    pub fn recip(&self) -> Result<Self> {
        let a = self.to_dense();
        if a[0].is_zero() {
            return Err(Error::Series("reciprocal needs a nonzero constant term".into()));
        }
        let inv0 = a[0].recip();
        let mut out = vec![BigRat::zero(); a.len()];
        out[0] = inv0.clone();
        for n in 1..a.len() {
            let mut acc = BigRat::zero();
            for i in 1..=n {
                acc += &a[i] * &out[n - i];
            }
            out[n] = -acc * &inv0;
        }
        Ok(Self::dense(self.denom, out, self.order))
    }

    /// Multiplies by `n^{shift/q}`; the result must have no positive powers of `n`.
    pub fn mul_power(&self, shift: i64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (j, c) in &self.coeffs {
            let nj = *j as i64 - shift;
            if nj < 0 {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::Series(format!("term n^{{{}/{}}} would grow", -nj, self.denom)));
            }
            coeffs.insert(nj as u64, c.clone());
        }
        let order = self.order as i64 - shift;
        if order < 0 {
            return Err(Error::Series("order would become negative".into()));
        }
        Ok(TruncatedSeries { denom: self.denom, coeffs, order: order as u64 })
    }

    fn without_constant(&self) -> Self {
        let mut s = self.clone();
        s.coeffs.remove(&0);
        s
    }

    pub fn log(&self) -> Result<Self> {
        if self.coeff(0) != rat(1) {
            return Err(Error::Series("logarithm needs constant term 1".into()));
        }
        let x = self.without_constant();
        let v = match x.valuation() {
            Some(v) => v,
            None => return Ok(Self::dense(self.denom, vec![BigRat::zero()], self.order)),
        };
        let mut acc = Self::dense(self.denom, vec![BigRat::zero()], self.order);
        let mut power = x.clone();
        let mut i = 1u64;
        while i * v <= self.order {
            let term = power.scale(&BigRat::new(BigInt::from(if i % 2 == 1 { 1 } else { -1 }), BigInt::from(i)));
            acc = acc.add(&term);
            power = power.mul(&x);
            i += 1;
        }
        Ok(acc)
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Series("exponential needs constant term 0".into()));
        }
        let x = self.without_constant();
        let mut acc = TruncatedSeries { denom: self.denom, ..Self::one(self.order) };
        let v = match x.valuation() {
            Some(v) => v,
            None => return Ok(acc),
        };
        let mut power = x.clone();
        let mut fact = BigInt::one();
        let mut i = 1u64;
        while i * v <= self.order {
            fact *= i;
            acc = acc.add(&power.scale(&int_rat(&fact).recip()));
            power = power.mul(&x);
            i += 1;
        }
        Ok(acc)
    }

    /// The series of `n -> s(n + t)`, each `n^{-j}` replaced by the expansion of `(n+t)^{-j}`.
    pub fn shifted(&self, t: u64) -> Result<Self> {
        if self.denom != 1 {
            return Err(Error::Series("argument shift needs the integer grid".into()));
        }
        let mut acc = Self::dense(1, vec![BigRat::zero()], self.order);
        for (j, c) in &self.coeffs {
            let term = if *j == 0 {
                Self::constant(c.clone(), self.order)
            } else {
                shift_reciprocal(t, *j, self.order)?.scale(c)
            };
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            denom: self.denom,
            terms: self.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (*j, rat_to_string(c))).collect(),
            order: self.order,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("series JSON is always serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesJson {
    pub denom: u64,
    pub terms: Vec<(u64, String)>,
    pub order: u64,
}

fn exponent(j: u64, q: u64) -> String {
    let g = j.gcd(&q);
    let (a, b) = (j / g, q / g);
    if b == 1 {
        if a == 1 {
            "n".into()
        } else {
            format!("n^{a}")
        }
    } else {
        format!("n^({a}/{b})")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let (num, den) = (a.numer(), a.denom());
            if *j == 0 {
                write!(f, "{}", if den.is_one() { num.to_string() } else { format!("{num}/{den}") })?;
            } else if den.is_one() {
                write!(f, "{num}/{}", exponent(*j, self.denom))?;
            } else {
                write!(f, "{num}/({den}*{})", exponent(*j, self.denom))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        let g = self.order.gcd(&self.denom);
        let (a, b) = (self.order / g, self.denom / g);
        if a == 0 {
            write!(f, " + o(1)")
        } else if b == 1 {
            write!(f, " + o(n^-{a})")
        } else {
            write!(f, " + o(n^-({a}/{b}))")
        }
    }
}

/// `1/(n+u)^v = sum_{i=0}^{order-v} (-1)^i C(v+i-1, i) u^i n^{-(v+i)} + o(n^{-order})`.
pub fn shift_reciprocal(u: u64, v: u64, order: u64) -> Result<TruncatedSeries> {
    if v > order {
        return Err(Error::Series(format!("exponent {v} exceeds order {order}")));
    }
    let mut coeffs = BTreeMap::new();
    let mut upow = BigInt::one();
    for i in 0..=order - v {
        let c = BigInt::from(binomial(v + i - 1, i)) * &upow;
        coeffs.insert(v + i, int_rat(&if i % 2 == 1 { -c } else { c }));
        upow *= u;
    }
    Ok(TruncatedSeries { denom: 1, coeffs, order })
}

/// Expansion of `f(n) f(n+2) / f(n+1)^2` to order `s` from the top
/// coefficients `a_l, a_{l-1}, ...` of `f`, by long division of the
/// numerator `f(n)f(n+2) - f(n+1)^2` by `f(n+1)^2` in descending powers.
///
/// When fewer than `s + 1` coefficients are given and `f` is not fully
/// specified, the certified order drops accordingly.
pub fn r2_series_of_poly(top_coeffs: &[BigRat], l: usize, s: u64) -> Result<TruncatedSeries> {
    if top_coeffs.first().is_none_or(Zero::is_zero) {
        return Err(Error::Series("leading coefficient must be nonzero".into()));
    }
    if s < 2 {
        return Err(Error::Series("order must be at least 2".into()));
    }
    if top_coeffs.len() > l + 1 {
        return Err(Error::Series(format!("{} coefficients for degree {l}", top_coeffs.len())));
    }
    let exact = top_coeffs.len() == l + 1;
    let order = if exact { s } else { s.min(top_coeffs.len() as u64 - 1) };
    let mut coeffs = vec![BigRat::zero(); l + 1];
    for (i, c) in top_coeffs.iter().enumerate() {
        coeffs[l - i] = c.clone();
    }
    let f = Poly::new(coeffs);
    let f1 = f.shift(&rat(1));
    let b_poly = &f1 * &f1;
    let c_poly = &f * &f.shift(&rat(2));
    let top = 2 * l;
    let desc = |p: &Poly, i: u64| if (i as usize) <= top { p.coeff(top - i as usize) } else { BigRat::zero() };
    let b: Vec<BigRat> = (0..=order).map(|i| desc(&b_poly, i)).collect();
    // remainder[i]: coefficient of n^{2l-i}, initially d_{2l-i,1}
    let mut rem: Vec<BigRat> = (0..=order).map(|i| desc(&c_poly, i) - &b[i as usize]).collect();
    debug_assert!(rem[0].is_zero() && rem.get(1).is_none_or(Zero::is_zero));
    let mut d = vec![BigRat::zero(); order as usize + 1];
    d[0] = rat(1);
    for v in 2..=order as usize {
        let dv = &rem[v] / &b[0];
        for i in v + 1..=order as usize {
            let t = &dv * &b[i - v];
            rem[i] -= t;
        }
        d[v] = dv;
    }
    Ok(TruncatedSeries::dense(1, d, order))
}

/// Given the expansion `t` of `R^2 w`, returns that of `R^2 L w`; two orders are consumed.
pub fn houzhang_step(t: &TruncatedSeries) -> Result<TruncatedSeries> {
    if t.denom != 1 {
        return Err(Error::Series("the step is defined on the integer grid".into()));
    }
    if t.coeff(0) != rat(1) || !t.coeff(1).is_zero() {
        return Err(Error::Series("expected 1 + m/n^2 + ...".into()));
    }
    if t.order < 4 {
        return Err(Error::Series(format!("order {} < 4", t.order)));
    }
    let m = t.coeff(2);
    if m.is_zero() {
        return Err(Error::DegenerateSecondOrder);
    }
    let order = t.order - 2;
    // w = (n^2/m)(t - 1) = 1 + ...
    let w = t.without_constant().mul_power(2)?.scale(&m.recip());
    let lw = w.log()?;
    let r2w = lw.add(&lw.shifted(2)?).sub(&lw.shifted(1)?.scale(&rat(2))).exp()?;
    // (n+1)^4 / (n^2 (n+2)^2)
    let p4 = TruncatedSeries::from_terms(&[(0, rat(1)), (1, rat(4)), (2, rat(6)), (3, rat(4)), (4, rat(1))], order);
    let inv = shift_reciprocal(2, 2, order + 2)?.mul_power(2)?;
    let factor = p4.mul(&inv);
    let t1 = t.shifted(1)?;
    let out = t1.mul(&t1).mul(&factor).mul(&r2w);
    Ok(TruncatedSeries { order, coeffs: out.coeffs.into_iter().filter(|(j, _)| *j <= order).collect(), ..out })
}

/// Expansion of `R^2 L^{j-1} f` for `f` with the given top coefficients.
pub fn r2_lhat_series(l: usize, top_coeffs: &[BigRat], j: usize, order: u64) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::Series("level must be at least 1".into()));
    }
    if order < 2 * j as u64 {
        return Err(Error::Series(format!("level {j} needs order at least {}", 2 * j)));
    }
    let mut t = r2_series_of_poly(top_coeffs, l, order)?;
    if t.order < 2 * j as u64 {
        return Err(Error::Series(format!("only {} coefficients certify order {}", top_coeffs.len(), t.order)));
    }
    for _ in 1..j {
        t = houzhang_step(&t)?;
    }
    Ok(t)
}

/// The guaranteed `r = floor(alpha_m / alpha_1)` for `t = 1 + d_1 n^{-alpha_1} + ...`
/// with `d_1 < 0` and `alpha_1 < 2`; `alpha_m` is the certified order.
pub fn houzhang_predict(t: &TruncatedSeries) -> Result<u64> {
    let (j1, d1) = t
        .terms()
        .find(|(j, c)| *j > 0 && !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .ok_or_else(|| Error::CriterionInapplicable("no non-constant term".into()))?;
    if !d1.is_negative() {
        return Err(Error::CriterionInapplicable(format!("first coefficient {} is not negative", rat_to_string(&d1))));
    }
    if j1 >= 2 * t.denom {
        return Err(Error::CriterionInapplicable(format!("first exponent {j1}/{} is not below 2", t.denom)));
    }
    Ok(t.order / j1)
}

/// `m_i = 2^{i-1} l + 2 - 2^i`.
pub fn lhat_degree(l: usize, i: u32) -> i64 {
    (1i64 << (i - 1)) * l as i64 + 2 - (1i64 << i)
}

/// Degree and leading coefficient of `L^s f` for `f = a_l n^l + ...`.
pub fn lhat_leading(l: usize, a_l: &BigRat, s: u32) -> (i64, BigRat) {
    let mut c = a_l.pow(1 << s);
    for j in 1..=s {
        c *= rat(lhat_degree(l, j)).pow(1 << (s - j));
    }
    (lhat_degree(l, s + 1), c)
}
