//! Totally isotropic Kalman varieties and codimensions of Kalman varieties of
//! (partially) symmetric singular tuples.
//!
//! The totally isotropic Kalman variety of a format `(n, ω)` is the dual of
//! the Segre–Veronese image of a product of quadrics. Its degree is the polar
//! class
//!
//! ```text
//! 2^k Σ_{j=0}^{N} (-1)^j (N+1-j)! Σ_{|α|=j} [ ∏_l ω_l^(n_l-2-α_l) / (n_l-2-α_l)! ]
//!                                          · [ Σ_{β ≤ α} ∏_l C(n_l, β_l) (-2)^(α_l-β_l) ]
//! ```
//!
//! with `N = Σ n_l - 2k`. Terms with `n_l - 2 - α_l < 0` vanish, so `α` only
//! ranges over `α_l ≤ n_l - 2`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::degrees::TensorFormat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicResult {
    pub degree: BigInt,
    /// `2^|J|` where `J = { j : n_j = 2 }`.
    pub components: BigInt,
    /// Dimension of the product of quadrics, `Σ n_i - 2k`.
    pub ambient_dim: u32,
}

/// Degree and number of irreducible components of the totally isotropic
/// Kalman variety.
pub fn isotropic_degree(fmt: &TensorFormat) -> Result<IsotropicResult> {
    if let Some(i) = fmt.n().iter().position(|&n| n < 2) {
        return Err(Error::Format(format!(
            "isotropic degree needs every n >= 2, got n[{i}] = {}",
            fmt.n()[i]
        )));
    }
    let k = fmt.k();
    let bounds: Vec<u32> = fmt.n().iter().map(|&n| n - 2).collect();
    let ambient_dim: u32 = bounds.iter().sum();

    let mut total = BigRational::zero();
    for j in 0..=ambient_dim {
        let mut inner = BigRational::zero();
        for alpha in compositions(j, &bounds) {
            inner += alpha_term(fmt, &alpha);
        }
        let weight = factorial(ambient_dim + 1 - j);
        let term = inner * BigRational::from_integer(weight);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total *= BigRational::from_integer(BigInt::one() << k);

    if !total.is_integer() {
        return Err(Error::Assertion(format!(
            "isotropic degree for n={:?} omega={:?} is not integral: {total}",
            fmt.n(),
            fmt.omega()
        )));
    }
    let twos = fmt.n().iter().filter(|&&n| n == 2).count();
    Ok(IsotropicResult {
        degree: total.to_integer(),
        components: BigInt::one() << twos,
        ambient_dim,
    })
}

fn alpha_term(fmt: &TensorFormat, alpha: &[u32]) -> BigRational {
    let mut weight = BigRational::one();
    for ((&n, &w), &a) in fmt.n().iter().zip(fmt.omega()).zip(alpha) {
        let e = n - 2 - a;
        weight *= BigRational::new(BigInt::from(w).pow(e), factorial(e));
    }
    // Σ over β ≤ α componentwise
    let mut beta_sum = BigInt::zero();
    for beta in boxes(alpha) {
        let mut p = BigInt::one();
        for ((&n, &a), &b) in fmt.n().iter().zip(alpha).zip(&beta) {
            p *= binomial(BigInt::from(n), BigInt::from(b)) * BigInt::from(-2).pow(a - b);
        }
        beta_sum += p;
    }
    weight * BigRational::from_integer(beta_sum)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// All `α` with `Σ α = total` and `α_l ≤ bounds[l]`.
fn compositions(total: u32, bounds: &[u32]) -> Vec<Vec<u32>> {
    fn go(rest: u32, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match bounds.split_first() {
            None => {
                if rest == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&b, tail)) => {
                let tail_max: u32 = tail.iter().sum();
                let lo = rest.saturating_sub(tail_max);
                for a in lo..=b.min(rest) {
                    cur.push(a);
                    go(rest - a, tail, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(total, bounds, &mut Vec::with_capacity(bounds.len()), &mut out);
    out
}

/// All `β` with `0 ≤ β ≤ upper` componentwise.
fn boxes(upper: &[u32]) -> Vec<Vec<u32>> {
    upper.iter().fold(vec![Vec::new()], |acc, &u| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..=u).map(move |b| {
                    let mut v = prefix.clone();
                    v.push(b);
                    v
                })
            })
            .collect()
    })
}

/// Degree of the totally isotropic Kalman variety of symmetric tensors,
/// `2 Σ_{j=0}^{n-2} (j+1)(ω-1)^j`.
pub fn isotropic_degree_symmetric(n: u32, omega: u32) -> Result<BigInt> {
    if n < 2 || omega < 1 {
        return Err(Error::Format(format!(
            "need n >= 2 and omega >= 1, got n={n}, omega={omega}"
        )));
    }
    let w = BigInt::from(omega - 1);
    let mut power = BigInt::one();
    let mut sum = BigInt::zero();
    for j in 0..=n - 2 {
        sum += BigInt::from(j + 1) * &power;
        power *= &w;
    }
    debug_assert!(sum.is_positive());
    Ok(sum * 2)
}

/// Codimension `(k-1)(n-1)` of the normalized symmetric Kalman variety in
/// `P(V^⊗k)`, `dim V = n`.
pub fn symmetric_tuple_codim(n: u32, k: u32) -> Result<u32> {
    if n < 2 || k < 1 {
        return Err(Error::Precondition(format!("need n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    Ok((k - 1) * (n - 1))
}

/// Codimension `(k-t)(n-1)` for a partition of `k` into `t` parts; only the
/// number of parts matters.
pub fn partition_tuple_codim(n: u32, k: u32, parts: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    if parts < 1 || parts > k {
        return Err(Error::Precondition(format!(
            "number of parts must lie in 1..={k}, got {parts}"
        )));
    }
    Ok((k - parts) * (n - 1))
}

/// [`partition_tuple_codim`] for an explicit partition such as `[2, 1]`.
pub fn partition_codim(n: u32, partition: &[u32]) -> Result<u32> {
    if partition.contains(&0) {
        return Err(Error::Precondition("partition parts must be positive".into()));
    }
    let k = partition.iter().sum();
    partition_tuple_codim(n, k, partition.len() as u32)
}

/// Reference data only: `(n, codim, degree)` of the normalized symmetric
/// Kalman variety of `n x n` matrices, from symbolic computation. No general
/// degree formula is known, so these are never computed here.
pub const NORMALIZED_MATRIX_REFERENCE: [(u32, u32, u32); 5] =
    [(2, 1, 1), (3, 2, 7), (4, 3, 24), (5, 4, 86), (6, 5, 314)];
