//! Explicit quasi-polynomial of `p_A(., k)`.
//!
//! For `D = lcm(a_1..a_k)` and index tuples `0 <= j_i < D/a_i` with
//! `S = sum a_i j_i`, the coefficient of `n^m` on residue `r` is
//!
//! ```text
//! 1/(k-1)! * sum_{S = r mod D} sum_{i=m}^{k-1} [k, i+1] (-1)^(i-m) C(i,m) D^(-i) S^(i-m)
//! ```
//!
//! with `0^0 = 1`. The tuple sum only depends on how many tuples reach each
//! value of `S`, so tuples are grouped by `S` through the product
//! `prod_i (1 + x^{a_i} + ... + x^{a_i (D/a_i - 1)})` and then by `S mod D`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int_rat, stirling1_row, BigRat};
use crate::partition::PartSpec;
use crate::poly::Poly;
use crate::quasipoly::QuasiPolynomial;

pub const DEFAULT_BUDGET: u128 = 100_000_000;
pub const BUDGET_ENV: &str = "PARTILOG_BUDGET";

/// Which Stirling column multiplies `n^i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingIndex {
    /// `[k, i+1]`, the form consistent with `C(n+k-1, k-1)`.
    Shifted,
    /// `[k, i]`, as originally printed; wrong, kept to show that it fails.
    Unshifted,
}

#[derive(Clone, Debug)]
pub struct CntOptions {
    /// Upper bound on the work units spent grouping index tuples.
    pub budget: u128,
    pub stirling: StirlingIndex,
}

impl Default for CntOptions {
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        CntOptions { budget, stirling: StirlingIndex::Shifted }
    }
}

impl CntOptions {
    pub fn with_budget(budget: u128) -> Self {
        CntOptions { budget, ..CntOptions::default() }
    }
}

/// Number of index tuples `prod D/a_i`.
pub fn tuple_count(spec: &PartSpec) -> u128 {
    let d = spec.lcm() as u128;
    spec.parts().iter().map(|&a| d / a as u128).product()
}

/// Work needed by the grouped evaluation: one pass over the `S` range per part.
pub fn grouped_work(spec: &PartSpec) -> u128 {
    let d = spec.lcm() as u128;
    let max_s: u128 = spec.parts().iter().map(|&a| d - a as u128).sum();
    (spec.k() as u128) * (max_s + 1) + (spec.k() as u128) * d
}

/// Number of tuples reaching each `S = 0..=max`.
fn tuple_sums(spec: &PartSpec) -> Vec<BigUint> {
    let d = spec.lcm() as usize;
    let mut counts = vec![BigUint::one()];
    for &a in spec.parts() {
        let a = a as usize;
        let reps = d / a;
        let new_len = counts.len() + a * (reps - 1);
        let mut next = vec![BigUint::zero(); new_len];
        // next[s] = sum_{t=0}^{reps-1} counts[s - a t], as a sliding window per residue of a
        for start in 0..a {
            let mut window = BigUint::zero();
            let mut s = start;
            while s < new_len {
                if s < counts.len() {
                    window += &counts[s];
                }
                let out = s as isize - (a * reps) as isize;
                if out >= 0 && (out as usize) < counts.len() {
                    window -= &counts[out as usize];
                }
                next[s] = window.clone();
                s += a;
            }
        }
        counts = next;
    }
    counts
}

/// `moments[r][e] = sum over tuples with S = r (mod D) of S^e`, `0^0 = 1`.
fn residue_moments(spec: &PartSpec, counts: &[(u64, BigUint)]) -> Vec<Vec<BigInt>> {
    let d = spec.lcm() as usize;
    let k = spec.k();
    let mut moments = vec![vec![BigInt::zero(); k]; d];
    for (s, count) in counts {
        let row = &mut moments[(*s as usize) % d];
        let mut power = BigInt::from(count.clone());
        let base = BigInt::from(*s);
        for slot in row.iter_mut() {
            *slot += &power;
            power *= &base;
        }
    }
    moments
}

fn assemble(spec: &PartSpec, moments: &[Vec<BigInt>], stirling: StirlingIndex) -> QuasiPolynomial {
    let k = spec.k();
    let d = spec.lcm();
    let st = stirling1_row(k);
    let inv_fact = int_rat(&BigInt::from(factorial(k as u64 - 1))).recip();
    let d_rat = int_rat(&BigInt::from(d));
    let d_inv_pow: Vec<BigRat> = (0..k)
        .scan(BigRat::one(), |acc, _| {
            let cur = acc.clone();
            *acc /= &d_rat;
            Some(cur)
        })
        .collect();
    let rows = moments
        .iter()
        .map(|mom| {
            let coeffs = (0..k)
                .map(|m| {
                    let mut c = BigRat::zero();
                    for i in m..k {
                        let idx = match stirling {
                            StirlingIndex::Shifted => i + 1,
                            StirlingIndex::Unshifted => i,
                        };
                        let mut term = BigInt::from(st[idx].clone())
                            * BigInt::from(binomial(i as u64, m as u64))
                            * &mom[i - m];
                        if (i - m) % 2 == 1 {
                            term = -term;
                        }
                        c += int_rat(&term) * &d_inv_pow[i];
                    }
                    c * &inv_fact
                })
                .collect();
            Poly::new(coeffs)
        })
        .collect();
    QuasiPolynomial::new(rows).expect("period is positive")
}

/// The quasi-polynomial of period `lcm(parts)` equal to `p_A(n, k)` for all `n >= 0`.
pub fn qp_from_cnt(spec: &PartSpec, options: &CntOptions) -> Result<QuasiPolynomial> {
    let work = grouped_work(spec);
    if work > options.budget {
        return Err(Error::BudgetExceeded { work, budget: options.budget });
    }
    let counts: Vec<(u64, BigUint)> = tuple_sums(spec)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(s, c)| (s as u64, c))
        .collect();
    let moments = residue_moments(spec, &counts);
    Ok(assemble(spec, &moments, options.stirling))
}

/// Same formula, enumerating every index tuple one by one; the budget bounds
/// the tuple count.
pub fn qp_from_cnt_enumerated(spec: &PartSpec, options: &CntOptions) -> Result<QuasiPolynomial> {
    let work = tuple_count(spec);
    if work > options.budget {
        return Err(Error::BudgetExceeded { work, budget: options.budget });
    }
    let d = spec.lcm();
    let limits: Vec<u64> = spec.parts().iter().map(|&a| d / a).collect();
    let mut idx = vec![0u64; spec.k()];
    let mut by_sum = std::collections::BTreeMap::<u64, BigUint>::new();
    loop {
        let s: u64 = idx.iter().zip(spec.parts()).map(|(j, a)| j * a).sum();
        *by_sum.entry(s).or_insert_with(BigUint::zero) += 1u32;
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                let counts: Vec<(u64, BigUint)> = by_sum.into_iter().collect();
                let moments = residue_moments(spec, &counts);
                return Ok(assemble(spec, &moments, options.stirling));
            }
            idx[pos] += 1;
            if idx[pos] < limits[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
