//! Leading-order asymptotics of `d(n·1, (δ,0,…,0), ω·1)` as `n → ∞`.
//!
//! With `m = ωk`, the coefficients of the diagonal of the generating function
//! are governed by the smooth critical point `c = (1/(m-1), …, 1/(m-1))` of
//! `F_D = H_2 · ∏(1 - x_i)`, and
//!
//! ```text
//! d ≈ (m-1)^(k-1) / [ (2π)^((k-1)/2) m^((k-2)/2) (m-2)^((3k-1)/2) ]
//!     · (m/(m-1))^δ · (m-1)^(kn) / n^((k-1)/2 - δ)
//! ```
//!
//! Valid for `k ≥ 3`, or `k = 2` with `ω ≥ 2`. The estimate is evaluated in
//! log space; exact degrees are compared through their decimal logarithm.
//!
//! For `ω = 1` the ratio exact/estimate tends to 1. For `ω ≥ 2` and `δ = 0`
//! the exact sequence settles near `ω^(-1/2)` times the estimate instead
//! (seen for `k = 2, 3` up to `n = 80`), which goes with the extra factor `ω`
//! in `-c_k ∂_k F_D(c)`; see [`critical_point_values`].
//!
//! For `δ ≥ 1` the exact sequence approaches `1/δ!` times the estimate
//! (`k = 3`, `ω = 1`, `δ ≤ 3`, `n ≤ 160`). The formula is kept as stated and
//! these limits are left to callers.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::degrees::{extract_degree, CodimVec, TensorFormat};
use crate::error::{Error, Result};
use crate::genfun::{build_h, series_ring, split_h};
use crate::poly::TPoly;

fn check_regime(k: u32, omega: u32) -> Result<()> {
    if omega < 1 {
        return Err(Error::Precondition("omega must be at least 1".into()));
    }
    if k >= 3 || (k == 2 && omega >= 2) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "hypercubical asymptotics need k >= 3, or k = 2 with omega >= 2 (got k={k}, omega={omega})"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub log10_value: f64,
    /// The estimate itself when it fits in an `f64`.
    pub value_if_representable: Option<f64>,
    /// `exact / estimate`, when an exact degree was supplied.
    pub ratio_to_exact: Option<f64>,
}

impl AsymptoticEstimate {
    fn from_log10(log10_value: f64) -> Self {
        let v = 10f64.powf(log10_value);
        AsymptoticEstimate {
            log10_value,
            value_if_representable: v.is_finite().then_some(v),
            ratio_to_exact: None,
        }
    }

    /// Attach the ratio `exact / estimate`. `exact` must be positive.
    pub fn with_exact(mut self, exact: &BigInt) -> Self {
        if exact.is_positive() {
            self.ratio_to_exact = Some(10f64.powf(log10_bigint(exact) - self.log10_value));
        }
        self
    }
}

/// Decimal logarithm of a positive big integer, from its digit count and
/// leading digits.
pub fn log10_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "log10 of a non-positive integer");
    let digits = x.to_string();
    let lead = &digits[..digits.len().min(17)];
    let mantissa: f64 = lead.parse().expect("decimal digits");
    mantissa.log10() + (digits.len() - lead.len()) as f64
}

/// Leading-order estimate of the degree factor for `n·1`, `ω·1`,
/// `(δ, 0, …, 0)`.
pub fn asymptotic_degree(k: u32, omega: u32, delta: u32, n: u32) -> Result<AsymptoticEstimate> {
    check_regime(k, omega)?;
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let m = f64::from(omega * k);
    let kf = f64::from(k);
    let log_const = (kf - 1.0) * (m - 1.0).ln()
        - (kf - 1.0) / 2.0 * (2.0 * PI).ln()
        - (kf - 2.0) / 2.0 * m.ln()
        - (3.0 * kf - 1.0) / 2.0 * (m - 2.0).ln();
    let ln = log_const + f64::from(delta) * (m / (m - 1.0)).ln() + kf * f64::from(n) * (m - 1.0).ln()
        - ((kf - 1.0) / 2.0 - f64::from(delta)) * f64::from(n).ln();
    Ok(AsymptoticEstimate::from_log10(ln / std::f64::consts::LN_10))
}

/// Exact constants at the critical point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalConstants {
    /// Common coordinate `1/(ωk-1)` of the critical point.
    pub c: BigRational,
    /// `(ωk-2)^(k-1) / (ωk)^(k-2)`.
    pub det_hessian: BigRational,
    /// `(ωk-1)^(k-δ-1) / ((ωk)^(k-δ-2) (ωk-2)^k)`.
    pub l0: BigRational,
    /// `(ωk)^(k-2) (ωk-2)^k / (ωk-1)^(2k-1)`.
    pub minus_ck_dk: BigRational,
}

fn rpow(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    let p = num_traits::pow(b, exp.unsigned_abs() as usize);
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

pub fn critical_constants(k: u32, omega: u32, delta: u32) -> Result<CriticalConstants> {
    check_regime(k, omega)?;
    let m = i64::from(omega * k);
    let k = i64::from(k);
    let d = i64::from(delta);
    Ok(CriticalConstants {
        c: rpow(m - 1, -1),
        det_hessian: rpow(m - 2, k - 1) * rpow(m, -(k - 2)),
        l0: rpow(m - 1, k - d - 1) * rpow(m, -(k - d - 2)) * rpow(m - 2, -k),
        minus_ck_dk: rpow(m, k - 2) * rpow(m - 2, k) * rpow(m - 1, -(2 * k - 1)),
    })
}

/// The leading constant `η_k · L0` with `η_k = (2π)^(-(k-1)/2) det^(-1/2)`,
/// assembled from [`critical_constants`]. It multiplies
/// `(ωk-1)^(kn) n^(δ-(k-1)/2)` in the estimate.
pub fn leading_constant_from_critical(k: u32, omega: u32, delta: u32) -> Result<f64> {
    let cc = critical_constants(k, omega, delta)?;
    let to_f = |r: &BigRational| ratio_to_f64(r);
    let eta = (2.0 * PI).powf(-(f64::from(k) - 1.0) / 2.0) / to_f(&cc.det_hessian).sqrt();
    Ok(eta * to_f(&cc.l0))
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    10f64.powf(log10_bigint(r.numer()) - log10_bigint(r.denom()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPointReport {
    pub k: u32,
    pub omega: u32,
    pub c: BigRational,
    /// `F_D(c)`, which must vanish.
    pub f_d_at_c: BigRational,
    /// `-c_k ∂_k F_D(c)` from the symbolic derivative.
    pub minus_ck_dk: BigRational,
    /// The same quantity from its closed form.
    pub minus_ck_dk_closed: BigRational,
}

/// `F_D = H_2 · ∏(1 - x_i)` for equal weights, in the ring `x1..xk, y`.
pub fn reduced_denominator(k: u32, omega: u32) -> Result<TPoly> {
    let k = k as usize;
    let h = build_h(&vec![omega; k])?;
    let (_, h2) = split_h(&h, k);
    let ring = series_ring(k);
    let one = TPoly::one(&ring);
    Ok((0..k).fold(h2, |acc, i| &acc * &(&one - &TPoly::var(&ring, i))))
}

/// `F_D(c)` and `-c_k ∂_k F_D(c)` from the symbolic `F_D`, in exact rational
/// arithmetic, next to the closed form of the latter. Nothing is asserted.
pub fn critical_point_values(k: u32, omega: u32) -> Result<CriticalPointReport> {
    if k < 2 || omega * k < 3 {
        return Err(Error::Precondition(format!(
            "critical point check needs k >= 2 and omega*k >= 3 (got k={k}, omega={omega})"
        )));
    }
    let m = i64::from(omega * k);
    let c = rpow(m - 1, -1);
    let f_d = reduced_denominator(k, omega)?;
    let mut point = vec![c.clone(); k as usize];
    point.push(BigRational::zero());

    let f_d_at_c = f_d.eval(&point)?;
    let dk = f_d.derivative(k as usize - 1).eval(&point)?;
    let minus_ck_dk = -(&c * dk);
    let closed = rpow(m, i64::from(k) - 2) * rpow(m - 2, i64::from(k)) * rpow(m - 1, -(2 * i64::from(k) - 1));
    Ok(CriticalPointReport {
        k,
        omega,
        c,
        f_d_at_c,
        minus_ck_dk,
        minus_ck_dk_closed: closed,
    })
}

impl CriticalPointReport {
    pub fn holds(&self) -> bool {
        self.f_d_at_c.is_zero() && self.minus_ck_dk == self.minus_ck_dk_closed
    }
}

/// [`critical_point_values`], failing with [`Error::Assertion`] unless
/// `F_D(c) = 0` and the symbolic derivative equals the closed form.
///
/// The symbolic derivative works out to `ω` times the closed form, so the
/// check only holds for `ω = 1`.
pub fn verify_critical_point(k: u32, omega: u32) -> Result<CriticalPointReport> {
    let r = critical_point_values(k, omega)?;
    if !r.holds() {
        return Err(Error::Assertion(format!(
            "critical point identities fail for k={k}, omega={omega}: F_D(c) = {}, \
             -c_k dF_D/dx_k (c) = {}, closed form {}",
            r.f_d_at_c, r.minus_ck_dk, r.minus_ck_dk_closed
        )));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub n: u32,
    pub exact: BigInt,
    pub estimate: AsymptoticEstimate,
}

/// Exact degree factors next to their estimates, one row per `n`. Rows are
/// computed in parallel and returned in input order.
pub fn compare_exact_asymptotic(k: u32, omega: u32, delta: u32, n_range: &[u32]) -> Result<Vec<ComparisonRow>> {
    check_regime(k, omega)?;
    n_range
        .par_iter()
        .map(|&n| {
            let fmt = TensorFormat::hypercubical(k as usize, n, omega)?;
            let exact = extract_degree(&fmt, &CodimVec::leading(k as usize, delta))?;
            let estimate = asymptotic_degree(k, omega, delta, n)?.with_exact(&exact);
            Ok(ComparisonRow { n, exact, estimate })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn regime() {
        assert!(asymptotic_degree(2, 1, 0, 5).is_err());
        assert!(asymptotic_degree(1, 5, 0, 5).is_err());
        assert!(asymptotic_degree(2, 2, 0, 5).is_ok());
        assert!(critical_constants(2, 1, 0).is_err());
    }

    #[test]
    fn known_special_cases() {
        for n in [3u32, 10, 40] {
            let nf = f64::from(n);
            let k3 = asymptotic_degree(3, 1, 0, n).unwrap();
            let expect = (2.0 / (3f64.sqrt() * PI)).log10() + nf * 8f64.log10() - nf.log10();
            assert!((k3.log10_value - expect).abs() < 1e-12);

            let k4 = asymptotic_degree(4, 1, 0, n).unwrap();
            let expect = (27.0 / (512.0 * PI * PI.sqrt())).log10() + nf * 81f64.log10() - 1.5 * nf.log10();
            assert!((k4.log10_value - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn constants() {
        let cc = critical_constants(3, 1, 0).unwrap();
        assert_eq!(cc.c, q(1, 2));
        assert_eq!(cc.l0, q(4, 3));
        assert_eq!(cc.det_hessian, q(1, 3));
        let cc = critical_constants(2, 2, 0).unwrap();
        assert_eq!(cc.minus_ck_dk, q(4, 27));
        assert_eq!(cc.c, q(1, 3));
    }

    #[test]
    fn critical_point_examples() {
        let r = verify_critical_point(3, 1).unwrap();
        assert!(r.f_d_at_c.is_zero());
        assert_eq!(r.minus_ck_dk, q(3, 32));
        verify_critical_point(4, 1).unwrap();
        // ∂_k H_2(c) = -ω (1+c)^(k-2), one factor of ω beyond the closed form
        for (k, w) in [(2, 2), (4, 2), (3, 3)] {
            let r = critical_point_values(k, w).unwrap();
            assert!(r.f_d_at_c.is_zero());
            assert_eq!(r.minus_ck_dk, &r.minus_ck_dk_closed * q(w.into(), 1));
            assert!(matches!(verify_critical_point(k, w), Err(Error::Assertion(_))));
        }
        assert_eq!(critical_point_values(2, 2).unwrap().minus_ck_dk, q(8, 27));
        assert!(verify_critical_point(1, 3).is_err());
        assert!(verify_critical_point(2, 1).is_err());
    }

    #[test]
    fn log10_of_big_integers() {
        assert!((log10_bigint(&BigInt::from(1000)) - 3.0).abs() < 1e-15);
        let big = BigInt::from(7).pow(200);
        assert!((log10_bigint(&big) - 200.0 * 7f64.log10()).abs() < 1e-9);
    }

    #[test]
    fn empty_range() {
        assert!(compare_exact_asymptotic(3, 1, 0, &[]).unwrap().is_empty());
    }
}
