//! Exact enumerative invariants of generalized Kalman varieties of partially
//! symmetric tensors.
//!
//! * [`poly`]: sparse multivariate integer polynomials with degree caps,
//!   elementary symmetric polynomials and polynomial determinants.
//! * [`degrees`]: the degree factor `d(n, δ, ω)` by coefficient extraction,
//!   its symmetric and binary specializations, and stabilization in `n_i`.
//! * [`isotropic`]: degrees of totally isotropic Kalman varieties and
//!   codimensions of Kalman varieties of symmetric singular tuples.
//! * [`genfun`]: the rational generating function of the degree factors,
//!   built two ways and expanded as a truncated power series.
//! * [`asympt`]: the leading-order estimate in the hypercubical format and
//!   the exact critical-point constants behind it.
//! * [`cli`]: output records and command drivers behind the `kalman` binary.

pub mod asympt;
pub mod cli;
pub mod degrees;
pub mod error;
pub mod genfun;
pub mod isotropic;
pub mod poly;

pub use degrees::{
    binary_degree, check_stabilization, extract_degree, kalman_degree, symmetric_degree, CodimVec,
    TensorFormat,
};
pub use error::{Error, Result};
pub use poly::{Caps, ExponentVec, PolyMatrix, Ring, TPoly};
