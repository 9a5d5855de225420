//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, optional per-variable degree caps, and small polynomial
//! matrices.
//!
//! Every polynomial lives in a [`Ring`], an ordered list of variable names.
//! Monomials are stored as [`ExponentVec`] keys of a `BTreeMap`, so iteration
//! and serialization follow lexicographic order on exponent vectors.
//!
//! Truncated multiplication drops every monomial that exceeds a cap in any
//! single variable. Because multiplication is graded by multidegree, the
//! surviving coefficients are exactly those of the untruncated product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings: [{0}] vs [{1}]")]
    RingMismatch(String, String),
    #[error("expected {expected} exponents, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("index {index} out of range (at most {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entries do not form a {rows}x{cols} grid")]
    Shape { rows: usize, cols: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// An ordered set of variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Ring>, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn describe(&self) -> String {
        self.names.join(",")
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<(), PolyError> {
    if Arc::ptr_eq(a, b) || a.names == b.names {
        Ok(())
    } else {
        Err(PolyError::RingMismatch(a.describe(), b.describe()))
    }
}

/// Exponents of a monomial, one per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVec(Vec<u32>);

impl ExponentVec {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVec(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVec(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise difference `self - other`, or `None` if any entry would
    /// go negative.
    pub fn checked_sub(&self, other: &ExponentVec) -> Option<ExponentVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVec)
    }
}

impl From<Vec<u32>> for ExponentVec {
    fn from(v: Vec<u32>) -> Self {
        ExponentVec(v)
    }
}

impl From<&[u32]> for ExponentVec {
    fn from(v: &[u32]) -> Self {
        ExponentVec(v.to_vec())
    }
}

/// Per-variable maximum exponents; `None` leaves a variable unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps(Vec<Option<u32>>);

impl Caps {
    pub fn unbounded(nvars: usize) -> Self {
        Caps(vec![None; nvars])
    }

    pub fn new(bounds: Vec<Option<u32>>) -> Self {
        Caps(bounds)
    }

    /// Every variable bounded.
    pub fn bounded(bounds: &[u32]) -> Self {
        Caps(bounds.iter().map(|&b| Some(b)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> Option<u32> {
        self.0[var]
    }

    pub fn admits(&self, exps: &[u32]) -> bool {
        self.0
            .iter()
            .zip(exps)
            .all(|(cap, &e)| cap.is_none_or(|c| e <= c))
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Caps) -> Caps {
        Caps(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| match (a, b) {
                    (Some(a), Some(b)) => Some(*a.min(b)),
                    (Some(a), None) | (None, Some(a)) => Some(*a),
                    (None, None) => None,
                })
                .collect(),
        )
    }

    /// Sum of all bounds, `None` if any variable is unbounded.
    pub fn total(&self) -> Option<u64> {
        self.0.iter().map(|c| c.map(u64::from)).sum()
    }
}

fn meet_opt(a: &Option<Caps>, b: &Option<Caps>) -> Option<Caps> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.meet(b)),
        (Some(c), None) | (None, Some(c)) => Some(c.clone()),
        (None, None) => None,
    }
}

/// A sparse polynomial with integer coefficients.
///
/// No stored coefficient is zero, and when caps are present every stored
/// exponent respects them.
#[derive(Debug, Clone)]
pub struct TPoly {
    ring: Arc<Ring>,
    caps: Option<Caps>,
    terms: BTreeMap<ExponentVec, BigInt>,
}

impl PartialEq for TPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring).is_ok() && self.terms == other.terms
    }
}

impl Eq for TPoly {}

impl TPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        TPoly {
            ring: ring.clone(),
            caps: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, ExponentVec::zeros(ring.nvars()), c)
    }

    /// The variable with index `var`.
    pub fn var(ring: &Arc<Ring>, var: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[var] = 1;
        Self::monomial(ring, ExponentVec(e), 1)
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<Ring>, exps: ExponentVec, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "monomial arity");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        TPoly {
            ring: ring.clone(),
            caps: None,
            terms,
        }
    }

    pub fn from_terms<C: Into<BigInt>>(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Result<Self, PolyError> {
        let mut acc: BTreeMap<ExponentVec, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != ring.nvars() {
                return Err(PolyError::Arity {
                    expected: ring.nvars(),
                    got: e.len(),
                });
            }
            *acc.entry(ExponentVec(e)).or_default() += c.into();
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TPoly {
            ring: ring.clone(),
            caps: None,
            terms: acc,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn caps(&self) -> Option<&Caps> {
        self.caps.as_ref()
    }

    /// Attach caps, discarding every term that violates them.
    pub fn with_caps(mut self, caps: Caps) -> Result<Self, PolyError> {
        if caps.len() != self.ring.nvars() {
            return Err(PolyError::Arity {
                expected: self.ring.nvars(),
                got: caps.len(),
            });
        }
        self.terms.retain(|e, _| caps.admits(&e.0));
        self.caps = Some(caps);
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigInt)> {
        self.terms.iter()
    }

    /// Exact coefficient of the monomial with exponents `exps`; zero when
    /// absent.
    ///
    /// Panics if `exps` does not have one entry per ring variable.
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        assert_eq!(exps.len(), self.ring.nvars(), "exponent arity");
        self.terms
            .get(&ExponentVec(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.ring.nvars()])
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVec::total_degree).max()
    }

    pub fn min_total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVec::total_degree).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    pub fn checked_add(&self, other: &TPoly) -> Result<TPoly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        let caps = meet_opt(&self.caps, &other.caps);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e, c);
        }
        if let Some(caps) = &caps {
            terms.retain(|e, _| caps.admits(&e.0));
        }
        Ok(TPoly {
            ring: self.ring.clone(),
            caps,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &TPoly) -> Result<TPoly, PolyError> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> TPoly {
        TPoly {
            ring: self.ring.clone(),
            caps: self.caps.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> TPoly {
        if s.is_zero() {
            return TPoly {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        TPoly {
            ring: self.ring.clone(),
            caps: self.caps.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiply by the monomial `var^power`, respecting the stored caps.
    pub fn shift(&self, var: usize, power: u32) -> TPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.0[var] += power;
            if self.caps.as_ref().is_none_or(|caps| caps.admits(&e.0)) {
                terms.insert(e, c.clone());
            }
        }
        TPoly {
            ring: self.ring.clone(),
            caps: self.caps.clone(),
            terms,
        }
    }

    /// Product truncated at `caps`. The stored caps of both operands are
    /// also honoured.
    pub fn mul_capped(&self, other: &TPoly, caps: &Caps) -> Result<TPoly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        if caps.len() != self.ring.nvars() {
            return Err(PolyError::Arity {
                expected: self.ring.nvars(),
                got: caps.len(),
            });
        }
        let caps = match meet_opt(&self.caps, &other.caps) {
            Some(c) => c.meet(caps),
            None => caps.clone(),
        };
        Ok(self.mul_inner(other, Some(caps)))
    }

    fn mul_inner(&self, other: &TPoly, caps: Option<Caps>) -> TPoly {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let nvars = self.ring.nvars();
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        let mut buf = vec![0u32; nvars];
        for (ea, ca) in &small.terms {
            'inner: for (eb, cb) in &large.terms {
                for v in 0..nvars {
                    let s = ea.0[v] + eb.0[v];
                    if let Some(Some(cap)) = caps.as_ref().map(|c| c.0[v]) {
                        if s > cap {
                            continue 'inner;
                        }
                    }
                    buf[v] = s;
                }
                let prod = ca * cb;
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(buf.clone(), prod);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (ExponentVec(e), c))
            .collect();
        TPoly {
            ring: self.ring.clone(),
            caps,
            terms,
        }
    }

    pub fn checked_mul(&self, other: &TPoly) -> Result<TPoly, PolyError> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.mul_inner(other, meet_opt(&self.caps, &other.caps)))
    }

    /// `self^e` truncated at `caps`, by repeated squaring.
    pub fn pow_capped(&self, mut e: u32, caps: &Caps) -> Result<TPoly, PolyError> {
        let mut result = TPoly::one(&self.ring).with_caps(caps.clone())?;
        let mut base = self.clone().with_caps(caps.clone())?;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_capped(&base, caps)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_capped(&base, caps)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, e: u32) -> TPoly {
        let caps = self
            .caps
            .clone()
            .unwrap_or_else(|| Caps::unbounded(self.ring.nvars()));
        self.pow_capped(e, &caps).expect("caps match ring")
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> TPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut d = e.clone();
            d.0[var] -= 1;
            terms.insert(d, c * BigInt::from(k));
        }
        TPoly {
            ring: self.ring.clone(),
            caps: self.caps.clone(),
            terms,
        }
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::Arity {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Re-embed into another ring whose variables are a superset of this
    /// ring's variables, matching by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<TPoly, PolyError> {
        let map = self
            .ring
            .names
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| PolyError::UnknownVariable(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut t = vec![0; target.nvars()];
                for (src, &dst) in map.iter().enumerate() {
                    t[dst] = e.0[src];
                }
                (ExponentVec(t), c.clone())
            })
            .collect();
        Ok(TPoly {
            ring: target.clone(),
            caps: None,
            terms,
        })
    }

    /// Deterministic text form: terms in ascending lexicographic order of
    /// exponent vectors, each with an explicit sign and decimal coefficient,
    /// e.g. `+1 -1*x1*y -2*x1^2`. The zero polynomial is `0`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`TPoly::to_text`].
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<TPoly, PolyError> {
        let text = text.trim();
        if text == "0" {
            return Ok(TPoly::zero(ring));
        }
        let mut terms = Vec::new();
        for tok in text.split_whitespace() {
            let (sign, rest) = match tok.as_bytes().first() {
                Some(b'+') => (1, &tok[1..]),
                Some(b'-') => (-1, &tok[1..]),
                _ => return Err(PolyError::Parse(format!("missing sign in `{tok}`"))),
            };
            let mut parts = rest.split('*');
            let coeff = parts
                .next()
                .filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| PolyError::Parse(format!("bad coefficient in `{tok}`")))?;
            let coeff = BigInt::from_str(coeff).map_err(|e| PolyError::Parse(e.to_string()))?;
            let mut exps = vec![0u32; ring.nvars()];
            for factor in parts {
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (
                        n,
                        p.parse::<u32>()
                            .map_err(|e| PolyError::Parse(format!("`{factor}`: {e}")))?,
                    ),
                    None => (factor, 1),
                };
                let v = ring
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                exps[v] += power;
            }
            terms.push((exps, coeff * sign));
        }
        TPoly::from_terms(ring, terms)
    }
}

fn add_term(terms: &mut BTreeMap<ExponentVec, BigInt>, e: &ExponentVec, c: &BigInt) {
    match terms.get_mut(e) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            if !c.is_zero() {
                terms.insert(e.clone(), c.clone());
            }
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            for (name, &k) in self.ring.names.iter().zip(&e.0) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

// Operator impls panic on ring mismatch; use the `checked_*` methods when
// the rings are not known to agree.
impl<'a> Add<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a> Sub<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a> Mul<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.neg_ref()
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.neg_ref()
    }
}

/// Truncated product of `a` and `b`.
pub fn poly_mul(a: &TPoly, b: &TPoly, caps: &Caps) -> Result<TPoly, PolyError> {
    a.mul_capped(b, caps)
}

/// Coefficient of `x^target` in `a * b` without forming the product.
pub fn coefficient_of_product(a: &TPoly, b: &TPoly, target: &[u32]) -> Result<BigInt, PolyError> {
    same_ring(&a.ring, &b.ring)?;
    if target.len() != a.ring.nvars() {
        return Err(PolyError::Arity {
            expected: a.ring.nvars(),
            got: target.len(),
        });
    }
    let target = ExponentVec(target.to_vec());
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut sum = BigInt::zero();
    for (e, c) in &small.terms {
        if let Some(rest) = target.checked_sub(e) {
            if let Some(d) = large.terms.get(&rest) {
                sum += c * d;
            }
        }
    }
    Ok(sum)
}

/// The elementary symmetric polynomial `e_i` in the variables `vars`.
/// `e_0` is 1.
pub fn elementary_symmetric(ring: &Arc<Ring>, vars: &[usize], i: usize) -> Result<TPoly, PolyError> {
    if i > vars.len() {
        return Err(PolyError::IndexOutOfRange {
            index: i,
            max: vars.len(),
        });
    }
    if let Some(&v) = vars.iter().find(|&&v| v >= ring.nvars()) {
        return Err(PolyError::IndexOutOfRange {
            index: v,
            max: ring.nvars() - 1,
        });
    }
    // e[j] after processing a prefix of `vars`
    let mut e = vec![TPoly::zero(ring); i + 1];
    e[0] = TPoly::one(ring);
    for &v in vars {
        for j in (1..=i).rev() {
            let shifted = e[j - 1].shift(v, 1);
            e[j] = &e[j] + &shifted;
        }
    }
    Ok(e.swap_remove(i))
}

/// A rectangular matrix of polynomials sharing one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<TPoly>,
}

impl PolyMatrix {
    /// Build from row-major entries.
    pub fn new(ring: &Arc<Ring>, rows: usize, cols: usize, entries: Vec<TPoly>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::Shape { rows, cols });
        }
        for p in &entries {
            same_ring(ring, &p.ring)?;
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<TPoly>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Shape { rows: r, cols: c });
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    TPoly::one(ring)
                } else {
                    TPoly::zero(ring)
                }
            })
            .collect();
        PolyMatrix {
            ring: ring.clone(),
            rows: n,
            cols: n,
            entries,
        }
    }

    /// A matrix of integer constants.
    pub fn from_integers(ring: &Arc<Ring>, rows: &[Vec<i64>]) -> Result<Self, PolyError> {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&a| TPoly::constant(ring, a)).collect())
                .collect(),
        )
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &TPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: TPoly) -> Result<(), PolyError> {
        same_ring(&self.ring, &p.ring)?;
        self.entries[r * self.cols + c] = p;
        Ok(())
    }

    /// The submatrix keeping the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Delete one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn scale_row(&self, row: usize, s: &BigInt) -> PolyMatrix {
        let mut m = self.clone();
        for c in 0..self.cols {
            m.entries[row * self.cols + c] = self.get(row, c).scale(s);
        }
        m
    }

    pub fn checked_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(PolyError::Shape {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_, _>>()?;
        PolyMatrix::new(&self.ring, self.rows, self.cols, entries)
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::Shape {
                rows: other.rows,
                cols: other.cols,
            });
        }
        same_ring(&self.ring, &other.ring)?;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut s = TPoly::zero(&self.ring);
                for k in 0..self.cols {
                    s = &s + &(self.get(r, k) * other.get(k, c));
                }
                entries.push(s);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    /// Exact determinant by Laplace expansion along successive rows,
    /// memoized on the set of columns still available.
    pub fn det(&self) -> Result<TPoly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        assert!(n < 32, "determinant expansion limited to matrices below 32x32");
        let mut memo: HashMap<u32, TPoly> = HashMap::new();
        Ok(self.det_cols(((1u64 << n) - 1) as u32, &mut memo))
    }

    fn det_cols(&self, cols: u32, memo: &mut HashMap<u32, TPoly>) -> TPoly {
        if cols == 0 {
            return TPoly::one(&self.ring);
        }
        if let Some(d) = memo.get(&cols) {
            return d.clone();
        }
        let row = self.rows - cols.count_ones() as usize;
        let mut sum = TPoly::zero(&self.ring);
        let mut position = 0;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.det_cols(cols & !(1 << c), memo);
                let term = entry * &sub;
                sum = if position % 2 == 0 {
                    &sum + &term
                } else {
                    &sum - &term
                };
            }
            position += 1;
        }
        memo.insert(cols, sum.clone());
        sum
    }
}

/// Determinant of a square polynomial matrix.
pub fn det(m: &PolyMatrix) -> Result<TPoly, PolyError> {
    m.det()
}
