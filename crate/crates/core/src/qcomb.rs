//! Gaussian binomial coefficients.
//!
//! `C(a,b)_x` is built from the q-Pascal recurrence
//! `C(a,b) = q^b C(a-1,b) + C(a-1,b-1)` on dense coefficient vectors, memoized
//! on `(a, b)`, and only then mapped onto the requested base monomial `x`.
//! No polynomial division is ever performed. A negative base exponent simply
//! yields Laurent support.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, Var};

/// Largest `a` accepted by [`qbinom_oracle`].
pub const ORACLE_CAP: i64 = 14;

/// Parameters of `C(a,b)_{var^step}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QBinSpec {
    pub a: i64,
    pub b: i64,
    pub var: Var,
    pub step: i64,
}

impl QBinSpec {
    pub fn new(a: i64, b: i64, var: Var, step: i64) -> Self {
        QBinSpec { a, b, var, step }
    }

    pub fn base(&self) -> Monomial {
        Monomial::var_pow(self.var, self.step)
    }
}

type Coeffs = Arc<Vec<BigInt>>;

fn cache() -> &'static Mutex<HashMap<(u32, u32), Coeffs>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Coeffs>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn validate(a: i64, b: i64) -> Result<()> {
    if a < 0 || b < 0 || b > a {
        return Err(Error::InvalidArgument(format!(
            "q-binomial needs a >= b >= 0, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Coefficients of `C(a,b)_q` in ascending degree; length `b(a-b)+1`.
fn pascal(a: u32, b: u32) -> Coeffs {
    if let Some(hit) = cache().lock().unwrap().get(&(a, b)) {
        return hit.clone();
    }
    let coeffs = if b == 0 || b == a {
        vec![BigInt::one()]
    } else {
        let upper = pascal(a - 1, b);
        let lower = pascal(a - 1, b - 1);
        let len = (b as usize) * ((a - b) as usize) + 1;
        let mut out = vec![BigInt::zero(); len];
        for (k, c) in upper.iter().enumerate() {
            out[k + b as usize] += c;
        }
        for (k, c) in lower.iter().enumerate() {
            out[k] += c;
        }
        out
    };
    let coeffs = Arc::new(coeffs);
    cache()
        .lock()
        .unwrap()
        .entry((a, b))
        .or_insert_with(|| coeffs.clone());
    coeffs
}

/// `C(a,b)_x` for an arbitrary Laurent monomial base `x`.
pub fn qbinom_in(a: i64, b: i64, base: Monomial) -> Result<MPoly> {
    validate(a, b)?;
    let coeffs = pascal(a as u32, b as u32);
    Ok(MPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (base.pow(k as i64).0, c.clone())),
    ))
}

/// Like [`qbinom_in`], but an out-of-range `(a, b)` gives the zero polynomial.
pub fn qbinom_or_zero(a: i64, b: i64, base: Monomial) -> MPoly {
    qbinom_in(a, b, base).unwrap_or_else(|_| MPoly::zero())
}

pub fn qbinom(spec: QBinSpec) -> Result<MPoly> {
    if spec.step == 0 {
        return Err(Error::InvalidArgument(
            "q-binomial step must be nonzero".into(),
        ));
    }
    qbinom_in(spec.a, spec.b, spec.base())
}

/// Ordinary binomial coefficient, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

/// Sum of `q^{|λ|}` over all partitions `λ` fitting in an `(a-b) x b` box,
/// by explicit enumeration.
pub fn qbinom_oracle(a: i64, b: i64) -> Result<MPoly> {
    validate(a, b)?;
    if a > ORACLE_CAP {
        return Err(Error::OracleCap { a, cap: ORACLE_CAP });
    }
    let rows = (a - b) as usize;
    let mut sizes = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    enumerate_box(rows, b, &mut parts, &mut sizes);
    Ok(MPoly::from_terms(sizes.into_iter().map(|s| ([s, 0, 0], 1))))
}

// Appends |λ| for every weakly decreasing λ with `rows` parts in 0..=max_part.
fn enumerate_box(rows: usize, max_part: i64, parts: &mut Vec<i64>, out: &mut Vec<i64>) {
    if parts.len() == rows {
        out.push(parts.iter().sum());
        return;
    }
    let cap = parts.last().copied().unwrap_or(max_part);
    for part in 0..=cap {
        parts.push(part);
        enumerate_box(rows, max_part, parts, out);
        parts.pop();
    }
}

/// Checks `C(a,b)_{x^{-1}} = x^{-b(a-b)} C(a,b)_x` with `x = q^step`.
pub fn rescale_identity_check(a: i64, b: i64, step: i64) -> Result<bool> {
    let x = Monomial::var_pow(Var::Q, step);
    let lhs = qbinom_in(a, b, x.inv())?;
    let rhs = qbinom_in(a, b, x)?.shift(x.pow(-b * (a - b)));
    Ok(lhs == rhs)
}

/// Expanded product `prod_{k=0}^{n-1} (1 + a^k b)`.
pub fn gauss_product(n: i64, a: Monomial, b: Monomial) -> MPoly {
    (0..n.max(0))
        .map(|k| MPoly::one() + MPoly::monomial(a.pow(k) * b))
        .product()
}

/// The sum side `sum_k a^{k(k-1)/2} C(n,k)_a b^k` of the Gaussian binomial theorem.
pub fn gauss_sum(n: i64, a: Monomial, b: Monomial) -> Result<MPoly> {
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let shift = a.pow(k * (k - 1) / 2) * b.pow(k);
        acc += &qbinom_in(n, k, a)?.shift(shift);
    }
    Ok(acc)
}
