//! Restricted partition counts `p_A(n, k)`.
//!
//! Two independent routes are provided: the two-term recurrence on `(n, k)`
//! backed by a memo table, and the truncated expansion of the generating
//! function `prod 1/(1 - x^{a_i})`.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cnt::{qp_from_cnt, CntOptions};
use crate::error::{Error, Result};
use crate::exact::{binomial, gcd_all, lcm_all};
use crate::quasipoly::QuasiPolynomial;

/// The first `k` terms `a_1 <= a_2 <= ... <= a_k` of a weakly increasing
/// sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PartSpec {
    parts: Vec<u64>,
}

impl PartSpec {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("no parts given".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpec("parts must be weakly increasing".into()));
        }
        Ok(PartSpec { parts })
    }

    /// `k` copies of 1.
    pub fn ones(k: usize) -> Result<Self> {
        PartSpec::new(vec![1; k])
    }

    /// `1, 2, ..., k`.
    pub fn naturals(k: usize) -> Result<Self> {
        PartSpec::new((1..=k as u64).collect())
    }

    /// `1, 2, 2, 3, 3, 3, ...` truncated to `k` terms: `j` appears `j` times.
    pub fn colored_naturals(k: usize) -> Result<Self> {
        let parts = (1u64..)
            .flat_map(|j| std::iter::repeat_n(j, j as usize))
            .take(k)
            .collect();
        PartSpec::new(parts)
    }

    /// `2, 3, 3, 5, 5, 5, ...`: the `i`-th prime appears `i` times.
    pub fn colored_primes(k: usize) -> Result<Self> {
        let mut parts = Vec::with_capacity(k);
        let mut candidate = 2u64;
        let mut index = 0usize;
        while parts.len() < k {
            if is_prime(candidate) {
                index += 1;
                for _ in 0..index {
                    if parts.len() == k {
                        break;
                    }
                    parts.push(candidate);
                }
            }
            candidate += 1;
        }
        PartSpec::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The first `j` parts.
    pub fn prefix(&self, j: usize) -> Result<PartSpec> {
        PartSpec::new(self.parts[..j.min(self.parts.len())].to_vec())
    }

    /// `D = lcm(a_1, ..., a_k)`.
    pub fn lcm(&self) -> u64 {
        lcm_all(&self.parts)
            .expect("spec is nonempty")
            .try_into()
            .expect("lcm of parts exceeds u64")
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.parts)
            .expect("spec is nonempty")
            .try_into()
            .expect("gcd fits in u64")
    }

    pub fn all_ones(&self) -> bool {
        self.parts.iter().all(|&a| a == 1)
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn product(&self) -> BigUint {
        self.parts.iter().map(|&a| BigUint::from(a)).product()
    }
}

impl TryFrom<Vec<u64>> for PartSpec {
    type Error = Error;
    fn try_from(parts: Vec<u64>) -> Result<Self> {
        PartSpec::new(parts)
    }
}

impl From<PartSpec> for Vec<u64> {
    fn from(spec: PartSpec) -> Self {
        spec.parts
    }
}

impl fmt::Display for PartSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", joined.join(","))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Column-major memo of the recurrence: `values[j][n] = p_A(n, j + 1)` for
/// the parts truncated to `a_1, ..., a_{j+1}`.
///
/// The table only grows; every cell is computed once.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    spec: PartSpec,
    values: Vec<Vec<BigUint>>,
}

impl PartitionTable {
    pub fn new(spec: PartSpec) -> Self {
        let k = spec.k();
        PartitionTable { spec, values: vec![Vec::new(); k] }
    }

    pub fn spec(&self) -> &PartSpec {
        &self.spec
    }

    /// Number of arguments currently stored per column.
    pub fn len(&self) -> usize {
        self.values[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Extends every column so that arguments `0..=n_max` are available.
    pub fn grow_to(&mut self, n_max: usize) {
        let start = self.len();
        if n_max < start {
            return;
        }
        let parts = self.spec.parts().to_vec();
        for (j, &a) in parts.iter().enumerate() {
            let a = a as usize;
            for n in start..=n_max {
                let v = if j == 0 {
                    if n % a == 0 {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                } else {
                    // p(n, j) = p(n - a_j, j) + p(n, j - 1)
                    let mut v = self.values[j - 1][n].clone();
                    if n >= a {
                        v += &self.values[j][n - a];
                    }
                    v
                };
                self.values[j].push(v);
            }
        }
    }

    /// `p_A(n, j)` for `1 <= j <= k`, negative `n` giving zero.
    pub fn get(&mut self, n: i64, j: usize) -> BigUint {
        assert!(j >= 1 && j <= self.spec.k(), "column {j} out of range");
        if n < 0 {
            return BigUint::zero();
        }
        self.grow_to(n as usize);
        self.values[j - 1][n as usize].clone()
    }

    /// Stored column for the full spec, arguments `0..len()`.
    pub fn column(&self) -> &[BigUint] {
        &self.values[self.spec.k() - 1]
    }
}

/// `p_A(n, k)` by the recurrence; zero for negative `n`.
pub fn p_restricted(spec: &PartSpec, n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let mut table = PartitionTable::new(spec.clone());
    table.get(n, spec.k())
}

/// Coefficients of `prod_{i=1}^{k} 1/(1 - x^{a_i})` up to degree `n_max`.
pub fn p_series(spec: &PartSpec, n_max: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n_max + 1];
    c[0] = BigUint::one();
    for &a in spec.parts() {
        let a = a as usize;
        for n in a..=n_max {
            let prev = c[n - a].clone();
            c[n] += prev;
        }
    }
    c
}

/// `binomial(n + k - 1, k - 1)`, the count for `k` parts all equal to 1.
pub fn p_ones_closed(n: u64, k: u64) -> BigUint {
    assert!(k >= 1, "k must be positive");
    binomial(n + k - 1, k - 1)
}

/// Arguments up to this value are served from the recurrence table; larger
/// ones are evaluated through the quasi-polynomial.
pub const TABLE_LIMIT: i64 = 200_000;

/// Shared evaluator for `p_A(., k)` at arbitrary arguments.
///
/// Small arguments use a lazily grown [`PartitionTable`] (concurrent reads,
/// exclusive growth); large ones use the exact quasi-polynomial, which is
/// built on first use.
#[derive(Debug)]
pub struct PartitionFunction {
    spec: PartSpec,
    table: RwLock<PartitionTable>,
    qp: OnceLock<std::result::Result<QuasiPolynomial, Error>>,
    options: CntOptions,
}

impl PartitionFunction {
    pub fn new(spec: PartSpec) -> Self {
        Self::with_options(spec, CntOptions::default())
    }

    pub fn with_options(spec: PartSpec, options: CntOptions) -> Self {
        PartitionFunction {
            table: RwLock::new(PartitionTable::new(spec.clone())),
            spec,
            qp: OnceLock::new(),
            options,
        }
    }

    pub fn spec(&self) -> &PartSpec {
        &self.spec
    }

    pub fn quasi_polynomial(&self) -> Result<&QuasiPolynomial> {
        self.qp
            .get_or_init(|| qp_from_cnt(&self.spec, &self.options))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn value(&self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        if n <= TABLE_LIMIT {
            {
                let table = self.table.read().expect("partition table poisoned");
                if (n as usize) < table.len() {
                    return Ok(BigInt::from(table.values[self.spec.k() - 1][n as usize].clone()));
                }
            }
            let mut table = self.table.write().expect("partition table poisoned");
            return Ok(BigInt::from(table.get(n, self.spec.k())));
        }
        let v = self.quasi_polynomial()?.eval(n)?;
        debug_assert!(v.is_integer());
        Ok(v.to_integer())
    }
}
