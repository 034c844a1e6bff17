//! Exact Laurent polynomials in the three variables `q`, `w`, `t`.
//!
//! Every generating function in this crate is an [`MPoly`]: a sparse map from
//! exponent triples `(e_q, e_w, e_t)` to arbitrary-precision integers. Zero
//! coefficients are never stored, so structural equality is polynomial
//! equality. Terms iterate in lexicographic order of the exponent triple.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three formal variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    W,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::W, Var::T];

    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::W => 1,
            Var::T => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::W => "w",
            Var::T => "t",
        }
    }
}

/// A Laurent monomial `q^a w^b t^c` with coefficient one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [i64; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(e_q: i64, e_w: i64, e_t: i64) -> Self {
        Monomial([e_q, e_w, e_t])
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = e;
        Monomial(exps)
    }

    pub fn exp(&self, v: Var) -> i64 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn pow(self, k: i64) -> Self {
        Monomial([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

/// Assignment of a Laurent monomial to each variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Substitution([Monomial; 3]);

impl Substitution {
    pub fn identity() -> Self {
        Substitution([
            Monomial::var(Var::Q),
            Monomial::var(Var::W),
            Monomial::var(Var::T),
        ])
    }

    pub fn with(mut self, v: Var, image: Monomial) -> Self {
        self.0[v.index()] = image;
        self
    }

    fn apply(&self, exps: &[i64; 3]) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (k, image) in self.0.iter().enumerate() {
            for (slot, e) in out.iter_mut().zip(image.0.iter()) {
                *slot += exps[k] * e;
            }
        }
        out
    }
}

impl Default for Substitution {
    fn default() -> Self {
        Self::identity()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<[i64; 3], BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m.0, c.into());
        p
    }

    /// `var^e`.
    pub fn var_pow(v: Var, e: i64) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    /// Univariate polynomial `sum_k coeffs[k] * v^k`.
    pub fn from_coeffs(v: Var, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var_pow(v, k as i64).0, c.clone());
        }
        p
    }

    /// Build from `(exponents, coefficient)` pairs, merging like terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ([i64; 3], C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: [i64; 3], c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
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

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64; 3], &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e_q: i64, e_w: i64, e_t: i64) -> BigInt {
        self.terms
            .get(&[e_q, e_w, e_t])
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_at(&self, m: Monomial) -> BigInt {
        self.coeff(m.0[0], m.0[1], m.0[2])
    }

    /// Multiply by a monomial, i.e. shift every exponent.
    pub fn shift(&self, m: Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((Monomial(*e) * m).0, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn substitute(&self, assignment: &Substitution) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(assignment.apply(e), c.clone());
        }
        out
    }

    /// Replace every exponent `e` of `var` by `center - e`.
    pub fn reverse(&self, var: Var, center: i64) -> MPoly {
        let i = var.index();
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] = center - e[i];
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn eval_all_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn support_range(&self, var: Var) -> Result<(i64, i64)> {
        let i = var.index();
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next().ok_or(Error::EmptySupport)?;
        Ok(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Largest `|e_q| + |e_w| + |e_t|` over the support, zero for the zero polynomial.
    pub fn max_total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| x.abs()).sum())
            .max()
            .unwrap_or(0)
    }

    /// The variables appearing with a nonzero exponent somewhere in the support.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] != 0))
            .collect()
    }

    /// Like terms collected by the exponent of a single variable.
    pub fn coefficients_in(&self, var: Var) -> BTreeMap<i64, BigInt> {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            *out.entry(e[var.index()]).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for MPoly {
    /// Plain-text rendering, e.g. `q^3 + q^4 + q^6` or `2*q^-2*w - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|x| *x == 0);
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    x => factors.push(format!("{}^{}", v.name(), x)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;

    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;

    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;

    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, p| &acc * &p)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    e: [i64; 3],
    c: String,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(e, c)| WireTerm {
                e: *e,
                c: c.to_string(),
            })
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireTerm>::deserialize(deserializer)?;
        let mut p = MPoly::zero();
        for t in wire {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            if p.terms.contains_key(&t.e) {
                return Err(D::Error::custom(format!("duplicate exponent {:?}", t.e)));
            }
            p.add_term(t.e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var_pow(Var::Q, 1)
    }

    fn w() -> MPoly {
        MPoly::var_pow(Var::W, 1)
    }

    fn qp(e: i64) -> MPoly {
        MPoly::var_pow(Var::Q, e)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&(&q() + &MPoly::one()) + &MPoly::constant(-1), q());
        let a = &qp(2) + &w();
        let b = &qp(2) - &w();
        assert_eq!(&a + &b, MPoly::term(Monomial::new(2, 0, 0), 2));
    }

    #[test]
    fn mul_examples() {
        let one_q = &MPoly::one() + &q();
        assert_eq!(
            &one_q * &one_q,
            MPoly::from_terms([([0, 0, 0], 1), ([1, 0, 0], 2), ([2, 0, 0], 1)])
        );
        assert_eq!(&qp(-1) * &q(), MPoly::one());
        let lhs = &(&MPoly::one() + &qp(2)) * &(&MPoly::one() + &qp(3));
        assert_eq!(lhs, MPoly::one() + qp(2) + qp(3) + qp(5));
    }

    #[test]
    fn substitute_examples() {
        let qw = MPoly::monomial(Monomial::new(1, 1, 0));
        let w_to_q = Substitution::identity().with(Var::W, Monomial::var(Var::Q));
        assert_eq!(qw.substitute(&w_to_q), qp(2));

        let invert = Substitution::identity().with(Var::Q, Monomial::var_pow(Var::Q, -1));
        assert_eq!((qp(3) + qp(5)).substitute(&invert), qp(-3) + qp(-5));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(qp(3).reverse(Var::Q, 10), qp(7));
        let p = &qp(-2) + &(&w() * &qp(4));
        assert_eq!(p.reverse(Var::Q, 3).reverse(Var::Q, 3), p);
    }

    #[test]
    fn eval_coeff_examples() {
        let p = MPoly::from_terms([([0, 0, 0], 1), ([1, 0, 0], 2), ([2, 0, 0], 1)]);
        assert_eq!(p.eval_all_one(), BigInt::from(4));
        assert_eq!(MPoly::zero().eval_all_one(), BigInt::zero());

        let bm = qp(3) + qp(4) + qp(6);
        assert_eq!(bm.coeff(4, 0, 0), BigInt::one());
        assert_eq!(MPoly::one().coeff(1, 0, 0), BigInt::zero());
        assert_eq!(
            MPoly::term(Monomial::new(2, 0, 0), 2).coeff(2, 0, 0),
            BigInt::from(2)
        );
    }

    #[test]
    fn sign_and_support() {
        assert!((MPoly::one() + q()).is_nonneg());
        assert!(!(MPoly::one() - q()).is_nonneg());
        assert_eq!((qp(-2) + qp(4)).support_range(Var::Q), Ok((-2, 4)));
        assert_eq!(
            MPoly::zero().support_range(Var::Q),
            Err(Error::EmptySupport)
        );
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &q() - &q();
        assert!(p.is_zero());
        assert_eq!(p, MPoly::zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn display_text() {
        assert_eq!((qp(3) + qp(4) + qp(6)).to_string(), "q^3 + q^4 + q^6");
        assert_eq!(MPoly::zero().to_string(), "0");
        let p = MPoly::from_terms([([0, 0, 0], -1), ([-2, 1, 0], 2)]);
        assert_eq!(p.to_string(), "2*q^-2*w - 1");
    }

    #[test]
    fn json_wire_format() {
        let p = MPoly::term(Monomial::new(6, 6, 0), 1);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"e":[6,6,0],"c":"1"}]"#
        );
        let dup = r#"[{"e":[1,0,0],"c":"1"},{"e":[1,0,0],"c":"2"}]"#;
        assert!(serde_json::from_str::<MPoly>(dup).is_err());
        let bad = r#"[{"e":[1,0,0],"c":"x"}]"#;
        assert!(serde_json::from_str::<MPoly>(bad).is_err());
    }
}
