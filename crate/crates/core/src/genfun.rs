//! The rational generating function of the degree factors `d(n, δ, ω)` for
//! codimension vectors `(δ, 0, …, 0)`:
//!
//! ```text
//! Σ d(n, δ, ω) x^n y^δ  =  1/H_ω(x, y) · ∏ x_i / (1 - x_i)
//!
//! H_ω = -y x_1 ∏_{i≥2}(1 + x_i) + ∏(1 + x_i) - Σ_j ω_j x_j ∏_{i≠j}(1 + x_i)
//! ```
//!
//! `H_ω` is built both from this closed form and as `det(I - TA)` for the
//! bordered matrix `A` that arises from MacMahon's Master Theorem, and the
//! two must agree exactly.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{elementary_symmetric, Caps, PolyMatrix, Ring, TPoly};

/// The ring `x1, …, xk, y`.
pub fn series_ring(k: usize) -> Arc<Ring> {
    Ring::new((1..=k).map(|i| format!("x{i}")).chain(["y".to_string()])).expect("distinct names")
}

fn check_omega(omega: &[u32]) -> Result<()> {
    if omega.is_empty() {
        return Err(Error::Format("omega must have at least one entry".into()));
    }
    if let Some(i) = omega.iter().position(|&w| w < 1) {
        return Err(Error::Format(format!("omega[{i}] must be at least 1")));
    }
    Ok(())
}

/// `∏_{i ∉ skip} (1 + x_i)` over `x1..xk`.
fn one_plus_product(ring: &Arc<Ring>, k: usize, skip: &[usize]) -> TPoly {
    let one = TPoly::one(ring);
    (0..k)
        .filter(|i| !skip.contains(i))
        .fold(one.clone(), |acc, i| &acc * &(&one + &TPoly::var(ring, i)))
}

/// The closed-form denominator `H_ω(x, y)`.
pub fn build_h(omega: &[u32]) -> Result<TPoly> {
    check_omega(omega)?;
    let k = omega.len();
    let ring = series_ring(k);
    let y = TPoly::var(&ring, k);
    let x1 = TPoly::var(&ring, 0);

    let mut h = -(&(&y * &x1) * &one_plus_product(&ring, k, &[0]));
    h = &h + &one_plus_product(&ring, k, &[]);
    for (j, &w) in omega.iter().enumerate() {
        let t = &TPoly::var(&ring, j).scale(&BigInt::from(w)) * &one_plus_product(&ring, k, &[j]);
        h = &h - &t;
    }
    Ok(h)
}

/// The `(k+1) x (k+1)` integer matrix `A` whose rows hold the linear forms
/// `t̂_i + h` (first `k` rows) and `t_1` (last row).
pub fn macmahon_matrix(omega: &[u32]) -> Result<Vec<Vec<i64>>> {
    check_omega(omega)?;
    let k = omega.len();
    let mut a = vec![vec![0i64; k + 1]; k + 1];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = i64::from(omega[j]) - i64::from(i == j);
        }
        a[i][k] = 1;
    }
    a[k][0] = 1;
    Ok(a)
}

/// `I - diag(w) A` over `ring`, where `w` are the first `a.len()` variables.
pub fn identity_minus_ta(ring: &Arc<Ring>, a: &[Vec<i64>]) -> Result<PolyMatrix> {
    let m = a.len();
    if a.iter().any(|row| row.len() != m) {
        return Err(Error::Precondition(format!(
            "matrix must be square, got {} rows of lengths {:?}",
            m,
            a.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    if ring.nvars() < m {
        return Err(Error::Precondition(format!(
            "ring has {} variables, need {m}",
            ring.nvars()
        )));
    }
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let w = TPoly::var(ring, i);
        rows.push(
            row.iter()
                .enumerate()
                .map(|(j, &aij)| {
                    let mut e = w.scale(&BigInt::from(-aij));
                    if i == j {
                        e = &e + &TPoly::one(ring);
                    }
                    e
                })
                .collect(),
        );
    }
    Ok(PolyMatrix::from_rows(ring, rows)?)
}

/// `M = I - TA` with `T = diag(x1, …, xk, y)`.
pub fn generating_matrix(omega: &[u32]) -> Result<PolyMatrix> {
    let a = macmahon_matrix(omega)?;
    identity_minus_ta(&series_ring(omega.len()), &a)
}

/// `H_ω` computed as `det(I - TA)`.
pub fn build_h_via_determinant(omega: &[u32]) -> Result<TPoly> {
    Ok(generating_matrix(omega)?.det()?)
}

/// The two `k x k` minors of `M` met when expanding along its last row:
/// `M'` drops the first column, `M''` the last one.
pub fn last_row_minors(omega: &[u32]) -> Result<(PolyMatrix, PolyMatrix)> {
    let m = generating_matrix(omega)?;
    let k = omega.len();
    Ok((m.minor(k, 0), m.minor(k, k)))
}

/// `(-1)^k x_1 ∏_{i≥2}(1 + x_i)`, the determinant of `M'`.
pub fn det_m_prime_closed(k: usize) -> TPoly {
    let ring = series_ring(k);
    let p = &TPoly::var(&ring, 0) * &one_plus_product(&ring, k, &[0]);
    if k.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// `∏(1 + x_i) - Σ_j ω_j x_j ∏_{i≠j}(1 + x_i)`, the determinant of `M''`.
pub fn det_m_double_prime_closed(omega: &[u32]) -> Result<TPoly> {
    check_omega(omega)?;
    let k = omega.len();
    let ring = series_ring(k);
    let mut p = one_plus_product(&ring, k, &[]);
    for (j, &w) in omega.iter().enumerate() {
        let t = &TPoly::var(&ring, j).scale(&BigInt::from(w)) * &one_plus_product(&ring, k, &[j]);
        p = &p - &t;
    }
    Ok(p)
}

/// Split `H = -H1·y + H2`, returning `(H1, H2)` in the same ring.
pub fn split_h(h: &TPoly, k: usize) -> (TPoly, TPoly) {
    let ring = h.ring();
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for (e, c) in h.terms() {
        let mut e = e.as_slice().to_vec();
        match e[k] {
            0 => h2.push((e, c.clone())),
            1 => {
                e[k] = 0;
                h1.push((e, -c));
            }
            _ => unreachable!("H is linear in y"),
        }
    }
    (
        TPoly::from_terms(ring, h1).expect("same ring"),
        TPoly::from_terms(ring, h2).expect("same ring"),
    )
}

/// `H1 = x_1 Σ_{i<k} e_i(x̂_1)` and `H2 = Σ_{i≤k} (1 - ωi) e_i(x)` for equal
/// weights `ω·1`.
pub fn split_h_equal_weights(k: usize, omega: u32) -> Result<(TPoly, TPoly)> {
    check_omega(&[omega])?;
    if k == 0 {
        return Err(Error::Format("k must be at least 1".into()));
    }
    let ring = series_ring(k);
    let all: Vec<usize> = (0..k).collect();
    let rest: Vec<usize> = (1..k).collect();
    let mut h1 = TPoly::zero(&ring);
    for i in 0..k {
        h1 = &h1 + &elementary_symmetric(&ring, &rest, i)?;
    }
    let h1 = &TPoly::var(&ring, 0) * &h1;
    let mut h2 = TPoly::zero(&ring);
    for i in 0..=k {
        let coeff = BigInt::one() - BigInt::from(omega) * BigInt::from(i);
        h2 = &h2 + &elementary_symmetric(&ring, &all, i)?.scale(&coeff);
    }
    Ok((h1, h2))
}

/// A quotient `N / D` of polynomials with `D(0) = 1`, expanded as a power
/// series up to finite caps.
#[derive(Debug, Clone)]
pub struct RationalSeries {
    numerator: TPoly,
    denominator: TPoly,
    caps: Caps,
}

impl RationalSeries {
    pub fn new(numerator: TPoly, denominator: TPoly, caps: Caps) -> Result<Self> {
        if numerator.ring().names() != denominator.ring().names() {
            return Err(crate::poly::PolyError::RingMismatch(
                numerator.ring().names().join(","),
                denominator.ring().names().join(","),
            )
            .into());
        }
        if !denominator.constant_term().is_one() {
            return Err(Error::Precondition(format!(
                "denominator constant term must be 1, got {}",
                denominator.constant_term()
            )));
        }
        if caps.len() != numerator.ring().nvars() || caps.total().is_none() {
            return Err(Error::Precondition(
                "series expansion needs a finite cap for every variable".into(),
            ));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
            caps,
        })
    }

    pub fn numerator(&self) -> &TPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &TPoly {
        &self.denominator
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// `1/D = Σ_m (1 - D)^m` within the caps. `1 - D` has no constant term,
    /// so `(1 - D)^m` starts in total degree `m` and the sum is finite.
    pub fn inverse_denominator(&self) -> Result<TPoly> {
        let ring = self.denominator.ring();
        let q = (&TPoly::one(ring) - &self.denominator).with_caps(self.caps.clone())?;
        let mut acc = TPoly::one(ring).with_caps(self.caps.clone())?;
        let mut power = acc.clone();
        loop {
            power = power.mul_capped(&q, &self.caps)?;
            if power.is_zero() {
                break;
            }
            acc = acc.checked_add(&power)?;
        }
        Ok(acc)
    }

    pub fn expand(&self) -> Result<TPoly> {
        let inv = self.inverse_denominator()?;
        Ok(self.numerator.mul_capped(&inv, &self.caps)?)
    }
}

/// Series coefficients keyed by `(n, δ)`; absent keys are zero.
pub type SeriesCoefficients = BTreeMap<(Vec<u32>, u32), BigInt>;

/// `∏ x_i/(1 - x_i)` truncated at `x_caps`, as a polynomial in `x1..xk, y`.
fn shifted_geometric_numerator(ring: &Arc<Ring>, x_caps: &[u32], caps: &Caps) -> Result<TPoly> {
    let mut num = TPoly::one(ring).with_caps(caps.clone())?;
    for (i, &cap) in x_caps.iter().enumerate() {
        let mut geo = TPoly::zero(ring);
        for m in 1..=cap {
            geo = &geo + &TPoly::one(ring).shift(i, m);
        }
        num = num.mul_capped(&geo, caps)?;
    }
    Ok(num)
}

/// The generating function `[∏ x_i/(1-x_i)] / H_ω` as a [`RationalSeries`].
pub fn generating_series(omega: &[u32], x_caps: &[u32], y_cap: u32) -> Result<RationalSeries> {
    check_omega(omega)?;
    if x_caps.len() != omega.len() {
        return Err(Error::Arity {
            what: "caps",
            expected: omega.len(),
            got: x_caps.len(),
        });
    }
    let ring = series_ring(omega.len());
    let mut bounds = x_caps.to_vec();
    bounds.push(y_cap);
    let caps = Caps::bounded(&bounds);
    let num = shifted_geometric_numerator(&ring, x_caps, &caps)?;
    RationalSeries::new(num, build_h(omega)?, caps)
}

/// Coefficients of `x^n y^δ` in the generating function, for `n ≤ x_caps`
/// and `δ ≤ y_cap`. Zero coefficients are omitted.
pub fn expand_series(omega: &[u32], x_caps: &[u32], y_cap: u32) -> Result<SeriesCoefficients> {
    let k = omega.len();
    let poly = generating_series(omega, x_caps, y_cap)?.expand()?;
    Ok(poly
        .terms()
        .map(|(e, c)| {
            let e = e.as_slice();
            ((e[..k].to_vec(), e[k]), c.clone())
        })
        .collect())
}

/// MacMahon's Master Theorem on a concrete integer matrix: for every
/// `p ≤ cap`, the coefficient of `z^p` in `∏_i (Σ_j a_ij z_j)^(p_i)` equals
/// the coefficient of `w^p` in `1/det(I - diag(w) A)`.
pub fn macmahon_check(a: &[Vec<i64>], cap: &[u32]) -> Result<bool> {
    let m = a.len();
    if m == 0 || a.iter().any(|row| row.len() != m) {
        return Err(Error::Precondition("MacMahon check needs a non-empty square matrix".into()));
    }
    if cap.len() != m {
        return Err(Error::Arity {
            what: "cap",
            expected: m,
            got: cap.len(),
        });
    }

    let w_ring = Ring::new((1..=m).map(|i| format!("w{i}")))?;
    let caps = Caps::bounded(cap);
    let d = identity_minus_ta(&w_ring, a)?.det()?;
    let series = RationalSeries::new(TPoly::one(&w_ring), d, caps)?.expand()?;

    let z_ring = Ring::new((1..=m).map(|i| format!("z{i}")))?;
    let forms: Vec<TPoly> = a
        .iter()
        .map(|row| {
            TPoly::from_terms(
                &z_ring,
                row.iter().enumerate().map(|(j, &aij)| {
                    let mut e = vec![0; m];
                    e[j] = 1;
                    (e, aij)
                }),
            )
        })
        .collect::<std::result::Result<_, _>>()?;

    for p in lattice_box(cap) {
        let p_caps = Caps::bounded(&p);
        let mut prod = TPoly::one(&z_ring);
        for (form, &pi) in forms.iter().zip(&p) {
            prod = prod.mul_capped(&form.pow_capped(pi, &p_caps)?, &p_caps)?;
        }
        if prod.coefficient(&p) != series.coefficient(&p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All integer vectors `0 ≤ p ≤ upper`, in lexicographic order.
pub(crate) fn lattice_box(upper: &[u32]) -> Vec<Vec<u32>> {
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
