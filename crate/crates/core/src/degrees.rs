//! Degree factors `d(n, δ, ω)` of generalized Kalman varieties.
//!
//! The degree factor is the coefficient of `h^δ ∏ t_i^(n_i - δ_i - 1)` in
//!
//! ```text
//! ∏_i  Σ_{j=0}^{n_i-1} (t̂_i + h)^(n_i-1-j) t_i^j,      t̂_i = Σ_j ω_j t_j - t_i
//! ```
//!
//! All factors have nonnegative coefficients, so the product is formed with
//! caps `t_i ≤ n_i - δ_i - 1` and `h ≤ δ` applied from the first
//! multiplication on.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{coefficient_of_product, Caps, Ring, TPoly};

/// The shape `(n, ω)` of a partially symmetric tensor space `S^ω V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorFormat {
    n: Vec<u32>,
    omega: Vec<u32>,
}

impl TensorFormat {
    pub fn new(n: Vec<u32>, omega: Vec<u32>) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::Format("at least one factor is required".into()));
        }
        if n.len() != omega.len() {
            return Err(Error::Arity {
                what: "omega",
                expected: n.len(),
                got: omega.len(),
            });
        }
        if let Some(i) = n.iter().position(|&x| x < 1) {
            return Err(Error::Format(format!("n[{i}] must be at least 1")));
        }
        if let Some(i) = omega.iter().position(|&x| x < 1) {
            return Err(Error::Format(format!("omega[{i}] must be at least 1")));
        }
        Ok(TensorFormat { n, omega })
    }

    /// `k` copies of `(n, ω)`.
    pub fn hypercubical(k: usize, n: u32, omega: u32) -> Result<Self> {
        Self::new(vec![n; k], vec![omega; k])
    }

    pub fn k(&self) -> usize {
        self.n.len()
    }

    pub fn n(&self) -> &[u32] {
        &self.n
    }

    pub fn omega(&self) -> &[u32] {
        &self.omega
    }

    /// Same format with `n[i]` replaced.
    pub fn with_n(&self, i: usize, value: u32) -> Result<Self> {
        let mut n = self.n.clone();
        n[i] = value;
        Self::new(n, self.omega.clone())
    }
}

/// Codimensions `δ_i` of the subvarieties `Z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodimVec {
    delta: Vec<u32>,
}

impl CodimVec {
    pub fn new(delta: Vec<u32>) -> Self {
        CodimVec { delta }
    }

    /// `(δ, 0, …, 0)` with `k` entries.
    pub fn leading(k: usize, delta: u32) -> Self {
        let mut d = vec![0; k];
        d[0] = delta;
        CodimVec { delta: d }
    }

    pub fn zeros(k: usize) -> Self {
        CodimVec { delta: vec![0; k] }
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn total(&self) -> u32 {
        self.delta.iter().sum()
    }

    /// Check `len = k` and `δ_i ≤ n_i - 1`.
    pub fn validate(&self, fmt: &TensorFormat) -> Result<()> {
        if self.delta.len() != fmt.k() {
            return Err(Error::Arity {
                what: "delta",
                expected: fmt.k(),
                got: self.delta.len(),
            });
        }
        for (i, (&d, &n)) in self.delta.iter().zip(fmt.n()).enumerate() {
            if d > n - 1 {
                return Err(Error::CodimOutOfRange {
                    factor: i,
                    delta: d,
                    max: n - 1,
                });
            }
        }
        Ok(())
    }
}

/// The ring `t1, …, tk, h`.
pub(crate) fn extraction_ring(k: usize) -> Arc<Ring> {
    Ring::new((1..=k).map(|i| format!("t{i}")).chain(["h".to_string()])).expect("distinct names")
}

/// The degree factor `d(n, δ, ω)`.
pub fn extract_degree(fmt: &TensorFormat, d: &CodimVec) -> Result<BigInt> {
    d.validate(fmt)?;
    let k = fmt.k();
    let ring = extraction_ring(k);
    let h = k;

    let mut target: Vec<u32> = fmt.n().iter().zip(d.delta()).map(|(n, d)| n - d - 1).collect();
    target.push(d.total());
    let caps = Caps::bounded(&target);

    let factors = (0..k)
        .map(|i| geometric_factor(&ring, fmt, i, &caps))
        .collect::<Result<Vec<_>>>()?;

    let (last, rest) = factors.split_last().expect("k >= 1");
    let mut acc = TPoly::one(&ring).with_caps(caps.clone())?;
    for f in rest {
        acc = acc.mul_capped(f, &caps)?;
        if acc.is_zero() {
            return Ok(BigInt::zero());
        }
    }
    debug_assert_eq!(target.len(), h + 1);
    Ok(coefficient_of_product(&acc, last, &target)?)
}

/// `Σ_{j<n_i} (t̂_i + h)^(n_i-1-j) t_i^j`, truncated at `caps`.
fn geometric_factor(ring: &Arc<Ring>, fmt: &TensorFormat, i: usize, caps: &Caps) -> Result<TPoly> {
    let k = fmt.k();
    let mut lin = vec![(unit(k + 1, k), BigInt::one())];
    for (j, &w) in fmt.omega().iter().enumerate() {
        let c = if j == i { w - 1 } else { w };
        if c > 0 {
            lin.push((unit(k + 1, j), BigInt::from(c)));
        }
    }
    let base = TPoly::from_terms(ring, lin)?.with_caps(caps.clone())?;

    let n = fmt.n()[i];
    let t_cap = caps.get(i).unwrap_or(u32::MAX);
    // powers[m] = base^m
    let mut powers = vec![TPoly::one(ring).with_caps(caps.clone())?];
    for m in 1..n as usize {
        let next = powers[m - 1].mul_capped(&base, caps)?;
        powers.push(next);
    }
    let mut sum = TPoly::zero(ring).with_caps(caps.clone())?;
    for j in 0..n.min(t_cap.saturating_add(1)) {
        let term = powers[(n - 1 - j) as usize].shift(i, j);
        sum = sum.checked_add(&term)?;
    }
    Ok(sum)
}

fn unit(len: usize, at: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[at] = 1;
    v
}

/// Degree of `κ_{n,ω}(Z)`: the degree factor times `∏ deg Z_i`.
pub fn kalman_degree(fmt: &TensorFormat, d: &CodimVec, deg_z: &[u64]) -> Result<BigInt> {
    if deg_z.len() != fmt.k() {
        return Err(Error::Arity {
            what: "deg-z",
            expected: fmt.k(),
            got: deg_z.len(),
        });
    }
    if let Some(i) = deg_z.iter().position(|&z| z < 1) {
        return Err(Error::Precondition(format!("deg-z[{i}] must be at least 1")));
    }
    let base = extract_degree(fmt, d)?;
    Ok(deg_z.iter().fold(base, |acc, &z| acc * BigInt::from(z)))
}

/// Closed form of the degree factor for a single factor (`k = 1`):
/// `Σ_{j=0}^{n-δ-1} C(δ+j, j) (ω-1)^j`, with `0^0 = 1`.
pub fn symmetric_degree(n: u32, delta: u32, omega: u32) -> Result<BigInt> {
    if n < 1 || omega < 1 {
        return Err(Error::Format(format!("need n >= 1 and omega >= 1, got n={n}, omega={omega}")));
    }
    if delta > n - 1 {
        return Err(Error::CodimOutOfRange {
            factor: 0,
            delta,
            max: n - 1,
        });
    }
    let w = BigInt::from(omega - 1);
    let mut power = BigInt::one();
    let mut sum = BigInt::zero();
    for j in 0..n - delta {
        sum += binomial(BigInt::from(delta + j), BigInt::from(j)) * &power;
        power *= &w;
    }
    Ok(sum)
}

/// Degree factor in the binary format `n = (2, …, 2)`, where each `δ_i` is 0
/// or 1. Evaluated by extraction.
pub fn binary_degree(omega: &[u32], d: &CodimVec) -> Result<BigInt> {
    if let Some(i) = d.delta().iter().position(|&x| x > 1) {
        return Err(Error::Precondition(format!(
            "binary format needs delta[{i}] in {{0, 1}}, got {}",
            d.delta()[i]
        )));
    }
    let fmt = TensorFormat::new(vec![2; omega.len()], omega.to_vec())?;
    extract_degree(&fmt, d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub factor: usize,
    /// `Σ_{j≠i}(n_j - 1) + δ_i + 1`, the smallest `n_i` from which the degree
    /// is constant.
    pub threshold: u32,
    /// `(n_i, d)` for `n_i` from the starting value through `probes` steps.
    pub values: Vec<(u32, BigInt)>,
    pub stable_value: BigInt,
    pub stable: bool,
}

/// Probe whether `d` stays constant as `n_i` grows, for a factor with
/// `ω_i = 1` whose dimension is at or beyond the stabilization threshold.
/// `factor` is zero-based.
pub fn check_stabilization(fmt: &TensorFormat, d: &CodimVec, factor: usize, probes: u32) -> Result<StabilizationReport> {
    d.validate(fmt)?;
    if factor >= fmt.k() {
        return Err(Error::Precondition(format!(
            "factor index {factor} out of range for k = {}",
            fmt.k()
        )));
    }
    if fmt.omega()[factor] != 1 {
        return Err(Error::Precondition(format!(
            "stabilization requires omega[{factor}] = 1, got {}",
            fmt.omega()[factor]
        )));
    }
    let others: u32 = fmt
        .n()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != factor)
        .map(|(_, &n)| n - 1)
        .sum();
    let threshold = others + d.delta()[factor] + 1;
    let start = fmt.n()[factor];
    if start < threshold {
        return Err(Error::Precondition(format!(
            "n[{factor}] = {start} is below the stabilization threshold {threshold}"
        )));
    }
    let values = (start..=start + probes)
        .map(|m| Ok((m, extract_degree(&fmt.with_n(factor, m)?, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let stable_value = values[0].1.clone();
    let stable = values.iter().all(|(_, v)| *v == stable_value);
    Ok(StabilizationReport {
        factor,
        threshold,
        values,
        stable_value,
        stable,
    })
}
