//! Closed-form generating functions attached to the rank orbits.
//!
//! Two encodings of the Čech–de Rham numbers live here on purpose. The
//! section form is assembled from the de Rham cohomology of the simple
//! modules `D_s` and the composition series of local cohomology; the intro
//! form is typed from the bivariate displays indexed intrinsically by
//! `(d_X - i, d_X - j)`. They agree after reversing both variables around
//! `d_X`, which the verification engine checks rather than assumes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::poly::{MPoly, Monomial, Substitution, Var};
use crate::qcomb::{binomial, qbinom_or_zero};

fn c2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn mono(e_q: i64, e_w: i64, e_t: i64) -> Monomial {
    Monomial::new(e_q, e_w, e_t)
}

fn q(e: i64) -> Monomial {
    Monomial::var_pow(Var::Q, e)
}

fn w(e: i64) -> Monomial {
    Monomial::var_pow(Var::W, e)
}

/// `C(a,b)_x` with the convention that an empty range contributes zero.
fn qb(a: i64, b: i64, base: Monomial) -> MPoly {
    qbinom_or_zero(a, b, base)
}

/// Orbit indices `s` summed over for the orbit closure of `O_p`.
fn summands(space: &Space, p: u32) -> Vec<i64> {
    let p = p as i64;
    match space {
        Space::Symmetric { .. } => (0..=p).filter(|s| (p - s) % 2 == 0).collect(),
        _ => (0..=p).collect(),
    }
}

fn check_proper(space: &Space, p: u32) -> Result<()> {
    space.orbit(p)?;
    if p == space.p_max() {
        return Err(Error::DenseOrbit(format!("{space}, p = {p}")));
    }
    Ok(())
}

/// Poincaré polynomial of the Borel–Moore homology of the orbit closure.
pub fn bm_poincare(space: &Space, p: u32) -> Result<MPoly> {
    space.orbit(p)?;
    if p == space.p_max() {
        return Ok(MPoly::var_pow(Var::Q, 2 * space.dim()));
    }
    let (n, m) = (space.n(), space.m());
    let pi = p as i64;
    let mut acc = MPoly::zero();
    for s in summands(space, p) {
        let k = pi - s;
        let term = match space {
            Space::General { .. } => {
                qb(n, s, q(-2))
                    * qb(n - 1 - s, k, q(2))
                    * MPoly::monomial(q(2 * s * (m + n - s) + k * (k + 2)))
            }
            Space::Skew { .. } => {
                qb(m, s, q(-4))
                    * qb(m - 1 - s, k, q(4))
                    * MPoly::monomial(q(2 * s * (2 * n - 1 - 2 * s) + k * (2 * k + 3)))
            }
            Space::Symmetric { .. } => {
                let eps = space.epsilon_p(p)?;
                qb(m + eps, s / 2, q(-4))
                    * qb((n - s - 1).div_euclid(2), k / 2, q(4))
                    * MPoly::monomial(q(s * (2 * n + 1 - s) + k * (k + 3) / 2))
            }
        };
        acc += &term;
    }
    Ok(acc)
}

/// The same Borel–Moore polynomial written with positive-step binomials only,
/// in the form obtained directly from reindexing the section form.
pub fn bm_poincare_positive_form(space: &Space, p: u32) -> Result<MPoly> {
    space.orbit(p)?;
    if p == space.p_max() {
        return Ok(MPoly::var_pow(Var::Q, 2 * space.dim()));
    }
    let (n, m, eps) = (space.n(), space.m(), space.epsilon());
    let pi = p as i64;
    let mut acc = MPoly::zero();
    for s in summands(space, p) {
        let k = pi - s;
        let term = match space {
            Space::General { .. } => {
                qb(n, s, q(2))
                    * qb(n - 1 - s, k, q(2))
                    * MPoly::monomial(q(2 * s * m + k * (k + 2)))
            }
            Space::Skew { .. } => {
                qb(m, s, q(4))
                    * qb(m - 1 - s, k, q(4))
                    * MPoly::monomial(q(2 * s * (n + eps - 1) + k * (2 * k + 3)))
            }
            Space::Symmetric { .. } => {
                let eps_p = space.epsilon_p(p)?;
                let e = 2 * c2(n + 1) + c2(k + 2) - 2 * c2(n - s + 1) - 1;
                qb(m + eps_p, s / 2, q(-4))
                    * qb((n - s - 1).div_euclid(2), k / 2, q(4))
                    * MPoly::monomial(q(e))
            }
        };
        acc += &term;
    }
    Ok(acc)
}

/// `prod_{k=0}^{count-1} (1 + q^{first + k*step})`.
fn exterior(first: i64, step: i64, count: i64) -> MPoly {
    (0..count.max(0))
        .map(|k| MPoly::one() + MPoly::monomial(q(first + k * step)))
        .product()
}

/// Poincaré polynomial of the singular cohomology of the orbit `O_p`.
pub fn orbit_cohomology(space: &Space, p: u32) -> Result<MPoly> {
    space.orbit(p)?;
    let (n, m, eps) = (space.n(), space.m(), space.epsilon());
    let pi = p as i64;
    Ok(match space {
        Space::General { .. } => qb(n, pi, q(2)) * exterior(2 * m - 2 * pi + 1, 2, pi),
        Space::Skew { .. } => qb(m, pi, q(4)) * exterior(2 * (n + eps) - 4 * pi + 1, 4, pi),
        Space::Symmetric { .. } => {
            let r = pi / 2;
            if pi % 2 == 0 {
                qb(m, r, q(4)) * exterior(2 * (n + eps) - 4 * r + 1, 4, r)
            } else {
                qb(m - 1 + eps, r, q(4))
                    * exterior(4 * m - 4 * r + 1, 4, r)
                    * exterior(2 * n - 1, 0, 1)
            }
        }
    })
}

/// Total Betti number of `O_p` in closed form.
///
/// For symmetric matrices with `p = 2r+1` the binomial is `C(m-1+ε, r)`,
/// which reduces to `C(m, r)` when `n` is odd.
pub fn total_betti(space: &Space, p: u32) -> Result<BigInt> {
    space.orbit(p)?;
    let (n, m, eps) = (space.n(), space.m(), space.epsilon());
    let pi = p as i64;
    let two = |e: i64| BigInt::one() << (e as usize);
    Ok(match space {
        Space::General { .. } => binomial(n, pi) * two(pi),
        Space::Skew { .. } => binomial(m, pi) * two(pi),
        Space::Symmetric { .. } => {
            let r = pi / 2;
            if pi % 2 == 0 {
                binomial(m, r) * two(r)
            } else {
                binomial(m - 1 + eps, r) * two(r + 1)
            }
        }
    })
}

/// De Rham cohomology of the simple equivariant module `D_s`.
pub fn derham_simple(space: &Space, s: u32) -> Result<MPoly> {
    space.orbit(s)?;
    let (n, m) = (space.n(), space.m());
    let si = s as i64;
    Ok(match space {
        Space::General { .. } => qb(n, si, q(2)).shift(q((m - si) * (n - si))),
        Space::Skew { .. } => qb(m, si, q(4)).shift(q(c2(n) - si * (2 * n - 2 * si - 1))),
        Space::Symmetric { .. } => {
            let eps = space.epsilon_p(s)?;
            qb(m + eps, si / 2, q(4)).shift(q(c2(n - si + 1)))
        }
    })
}

/// Intersection cohomology of the orbit closure of `O_s`: the de Rham
/// cohomology of `D_s` shifted down by the codimension of `O_s`.
pub fn ih_poincare(space: &Space, s: u32) -> Result<MPoly> {
    let c = space.codim_orbit(s)?;
    Ok(derham_simple(space, s)?.shift(q(-c)))
}

/// Composition-series multiplicities of local cohomology supported on the
/// closure of `O_p`: `s ↦ sum_j [H^j : D_s] w^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompSeries {
    pub entries: BTreeMap<u32, MPoly>,
}

impl CompSeries {
    pub fn entry(&self, s: u32) -> Option<&MPoly> {
        self.entries.get(&s)
    }
}

pub fn loccoh_series(space: &Space, p: u32) -> Result<CompSeries> {
    check_proper(space, p)?;
    let (n, m, eps) = (space.n(), space.m(), space.epsilon());
    let pi = p as i64;
    let mut entries = BTreeMap::new();
    for s in summands(space, p) {
        let k = pi - s;
        let entry =
            match space {
                Space::General { .. } => {
                    qb(n - 1 - s, k, w(2)).shift(w((n - pi).pow(2) + (n - s) * (m - n)))
                }
                Space::Skew { .. } => qb(m - 1 - s, k, w(4))
                    .shift(w(2 * (m - pi).pow(2) + pi - m + 2 * eps * (m - s))),
                Space::Symmetric { .. } => qb((n - s - 1).div_euclid(2), k / 2, w(-4))
                    .shift(w(1 + c2(n - s + 1) - c2(k + 2))),
            };
        entries.insert(s as u32, entry);
    }
    Ok(CompSeries { entries })
}

/// `sum_{i,j} h^i_dR(H^j(O_X)) q^i w^j` for local cohomology supported on the
/// orbit closure, assembled from [`derham_simple`] and [`loccoh_series`].
pub fn cdr_section_form(space: &Space, p: u32) -> Result<MPoly> {
    let series = loccoh_series(space, p)?;
    let mut acc = MPoly::zero();
    for (s, entry) in &series.entries {
        acc += &(&derham_simple(space, *s)? * entry);
    }
    Ok(acc)
}

/// `sum_{i,j} ρ_{i,j} q^i w^j` for the orbit closure, with the dense orbit
/// contributing the single slot `(d_X, d_X)`.
pub fn cdr_intro_form(space: &Space, p: u32) -> Result<MPoly> {
    space.orbit(p)?;
    let d = space.dim();
    if p == space.p_max() {
        return Ok(MPoly::monomial(mono(d, d, 0)));
    }
    let (n, m) = (space.n(), space.m());
    let pi = p as i64;
    let mut acc = MPoly::zero();
    for s in summands(space, p) {
        let k = pi - s;
        let term = match space {
            Space::General { .. } => {
                let e = s * (m + n - s);
                qb(n, s, q(-2))
                    * qb(n - 1 - s, k, w(2))
                    * MPoly::monomial(mono(e, e + k * (k + 2), 0))
            }
            Space::Skew { .. } => {
                let e = s * (2 * n - 1 - 2 * s);
                qb(m, s, q(-4))
                    * qb(m - 1 - s, k, w(4))
                    * MPoly::monomial(mono(e, e + k * (2 * k + 3), 0))
            }
            Space::Symmetric { .. } => {
                let eps = space.epsilon_p(p)?;
                let e = s * (2 * n + 1 - s) / 2;
                qb(m + eps, s / 2, q(-4))
                    * qb((n - s - 1).div_euclid(2), k / 2, w(4))
                    * MPoly::monomial(mono(e, e + k * (k + 3) / 2, 0))
            }
        };
        acc += &term;
    }
    Ok(acc)
}

/// Upper bound `N_p` for the total Čech–de Rham number; `1` for the dense orbit.
pub fn np_total(space: &Space, p: u32) -> Result<BigInt> {
    space.orbit(p)?;
    if p == space.p_max() {
        return Ok(BigInt::one());
    }
    Ok(cdr_section_form(space, p)?.eval_all_one())
}

/// Which weight generating function a [`WeightTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightForm {
    /// `dim Gr^W_j H^BM_i` of the orbit closure, in `q^i w^j`.
    BorelMoore,
    /// `dim Gr^W_j H^i` of the orbit, in `q^i w^j`.
    Orbit,
    /// `dim Gr^W_k H^i_dR(H^j)` of local cohomology, in `q^i w^j t^k`.
    DeRhamLocal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    pub form: WeightForm,
    pub poly: MPoly,
}

impl WeightTable {
    pub fn w_exponents_even(&self) -> bool {
        self.poly.terms().all(|(e, _)| e[1] % 2 == 0)
    }
}

fn proper_general(m: u32, n: u32, p: u32) -> Result<Space> {
    let space = Space::general(m, n)?;
    if p >= n {
        return Err(Error::InvalidArgument(format!(
            "weight generating functions need p < n, got p = {p}, n = {n}"
        )));
    }
    Ok(space)
}

/// The `s`-th summand of [`weight_bm_general`]; `s = p` is the lowest-weight piece.
pub fn weight_bm_summand(m: u32, n: u32, p: u32, s: u32) -> Result<MPoly> {
    proper_general(m, n, p)?;
    if s > p {
        return Err(Error::InvalidArgument(format!(
            "summand index {s} exceeds p = {p}"
        )));
    }
    let (m, n, pi, s) = (m as i64, n as i64, p as i64, s as i64);
    let x = mono(1, -1, 0);
    let k = pi - s;
    let shift = w(k) * x.pow(2 * s * m + k * (k + 2));
    Ok((qb(n, s, x.pow(2)) * qb(n - 1 - s, k, x.pow(2))).shift(shift))
}

pub fn weight_bm_general(m: u32, n: u32, p: u32) -> Result<WeightTable> {
    let mut acc = MPoly::zero();
    for s in 0..=p {
        acc += &weight_bm_summand(m, n, p, s)?;
    }
    Ok(WeightTable {
        form: WeightForm::BorelMoore,
        poly: acc,
    })
}

pub fn weight_orbit_general(m: u32, n: u32, p: u32) -> Result<WeightTable> {
    Space::general(m, n)?.orbit(p)?;
    let (m, n, pi) = (m as i64, n as i64, p as i64);
    let poly = qb(n, pi, mono(2, 2, 0))
        * (0..pi)
            .map(|s| MPoly::one() + MPoly::monomial(mono(2 * m - 2 * s - 1, 2 * m - 2 * s, 0)))
            .product::<MPoly>();
    Ok(WeightTable {
        form: WeightForm::Orbit,
        poly,
    })
}

pub fn weight_cdr_trivariate(m: u32, n: u32, p: u32) -> Result<WeightTable> {
    proper_general(m, n, p)?;
    let (m, n, pi) = (m as i64, n as i64, p as i64);
    let qt = mono(1, 0, 1);
    let wt = mono(0, 1, 1);
    let mut acc = MPoly::zero();
    for s in 0..=pi {
        let k = pi - s;
        let shift = Monomial::var_pow(Var::T, k)
            * qt.pow((m - s) * (n - s))
            * wt.pow((n - pi).pow(2) + (n - s) * (m - n));
        acc += &(qb(n, s, qt.pow(2)) * qb(n - 1 - s, k, wt.pow(2))).shift(shift);
    }
    Ok(WeightTable {
        form: WeightForm::DeRhamLocal,
        poly: acc,
    })
}

/// Carries the trivariate weight data of local cohomology to the weight data of
/// Borel–Moore homology through the degenerate spectral sequence: collapse
/// `w ↦ q`, reindex homological degree as `2d_X - (i+j)`, move the weight
/// variable `t` to `w`, and undo the Tate twist `(-d_X)` by shifting weights
/// down by `2d_X`.
pub fn weight_to_bm(trivariate: &MPoly, dim: i64) -> MPoly {
    let collapse = Substitution::identity().with(Var::W, Monomial::var(Var::Q));
    let rename = Substitution::identity()
        .with(Var::T, Monomial::var(Var::W))
        .with(Var::W, Monomial::ONE);
    trivariate
        .substitute(&collapse)
        .reverse(Var::Q, 2 * dim)
        .substitute(&rename)
        .shift(w(-2 * dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(exps: &[i64]) -> MPoly {
        MPoly::from_terms(exps.iter().map(|e| ([*e, 0, 0], 1)))
    }

    fn general(m: u32, n: u32) -> Space {
        Space::general(m, n).unwrap()
    }

    #[test]
    fn bm_examples() {
        assert_eq!(bm_poincare(&general(2, 2), 1).unwrap(), qs(&[3, 4, 6]));
        for x in [
            general(3, 2),
            Space::skew(5).unwrap(),
            Space::symmetric(4).unwrap(),
        ] {
            assert_eq!(bm_poincare(&x, 0).unwrap(), MPoly::one());
            let top = bm_poincare(&x, x.p_max()).unwrap();
            assert_eq!(top, MPoly::var_pow(Var::Q, 2 * x.dim()));
        }
        let sym5 = Space::symmetric(5).unwrap();
        assert_eq!(bm_poincare(&sym5, 2).unwrap(), qs(&[5, 9, 10, 14, 18]));
    }

    #[test]
    fn bm_out_of_range() {
        assert!(bm_poincare(&general(3, 2), 3).is_err());
    }

    #[test]
    fn orbit_cohomology_examples() {
        assert_eq!(
            orbit_cohomology(&general(2, 2), 1).unwrap(),
            qs(&[0, 2, 3, 5])
        );
        for x in [
            general(4, 2),
            Space::skew(4).unwrap(),
            Space::symmetric(3).unwrap(),
        ] {
            assert_eq!(orbit_cohomology(&x, 0).unwrap(), MPoly::one());
        }
        // n = 2m+1 = 7, p = 2: (1 + q^4 + q^8)(1 + q^13)
        let sym7 = Space::symmetric(7).unwrap();
        assert_eq!(
            orbit_cohomology(&sym7, 2).unwrap(),
            qs(&[0, 4, 8, 13, 17, 21])
        );
    }

    #[test]
    fn total_betti_examples() {
        assert_eq!(total_betti(&general(5, 3), 2).unwrap(), BigInt::from(12));
        assert_eq!(
            total_betti(&Space::skew(6).unwrap(), 1).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            total_betti(&Space::symmetric(5).unwrap(), 3).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn derham_simple_examples() {
        let x = general(2, 2);
        assert_eq!(derham_simple(&x, 2).unwrap(), MPoly::one());
        assert_eq!(derham_simple(&general(3, 2), 0).unwrap(), qs(&[6]));
        assert_eq!(
            derham_simple(&Space::skew(4).unwrap(), 1).unwrap(),
            qs(&[1, 5])
        );
        assert!(derham_simple(&x, 3).is_err());
    }

    #[test]
    fn loccoh_examples() {
        let series = loccoh_series(&general(2, 2), 1).unwrap();
        assert_eq!(series.entries.len(), 2);
        assert_eq!(series.entry(0), Some(&MPoly::var_pow(Var::W, 1)));
        assert_eq!(series.entry(1), Some(&MPoly::var_pow(Var::W, 1)));

        let p0 = loccoh_series(&general(4, 3), 0).unwrap();
        assert_eq!(p0.entries.len(), 1);
        assert_eq!(p0.entry(0), Some(&MPoly::var_pow(Var::W, 12)));

        let sym3 = loccoh_series(&Space::symmetric(3).unwrap(), 1).unwrap();
        assert_eq!(sym3.entries.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(sym3.entry(1), Some(&MPoly::var_pow(Var::W, 3)));

        assert!(matches!(
            loccoh_series(&general(2, 2), 2),
            Err(Error::DenseOrbit(_))
        ));
    }

    #[test]
    fn section_form_examples() {
        let x = general(3, 2);
        assert_eq!(
            cdr_section_form(&x, 0).unwrap(),
            MPoly::monomial(mono(6, 6, 0))
        );
        let expected = MPoly::from_terms([([1, 1, 0], 1), ([3, 1, 0], 1), ([4, 1, 0], 1)]);
        assert_eq!(cdr_section_form(&general(2, 2), 1).unwrap(), expected);
        assert_eq!(
            cdr_section_form(&Space::skew(4).unwrap(), 0).unwrap(),
            MPoly::monomial(mono(6, 6, 0))
        );
        assert!(cdr_section_form(&x, 2).is_err());
    }

    #[test]
    fn intro_form_examples() {
        let x = general(2, 2);
        assert_eq!(
            cdr_intro_form(&x, 2).unwrap(),
            MPoly::monomial(mono(4, 4, 0))
        );
        let expected = MPoly::from_terms([([0, 3, 0], 1), ([1, 3, 0], 1), ([3, 3, 0], 1)]);
        assert_eq!(cdr_intro_form(&x, 1).unwrap(), expected);
        let w_to_q = Substitution::identity().with(Var::W, Monomial::var(Var::Q));
        assert_eq!(
            cdr_intro_form(&x, 1).unwrap().substitute(&w_to_q),
            qs(&[3, 4, 6])
        );
    }

    #[test]
    fn np_examples() {
        for m in 3..6 {
            let x = general(m, 3);
            assert_eq!(np_total(&x, 1).unwrap(), BigInt::from(5));
            assert_eq!(np_total(&x, 0).unwrap(), BigInt::one());
            assert_eq!(np_total(&x, 3).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn ih_examples() {
        let x = general(5, 4);
        assert_eq!(ih_poincare(&x, 2).unwrap(), qs(&[0, 2, 4, 4, 6, 8]));
        for s in 0..=4 {
            let expected = qbinom_or_zero(4, s as i64, q(2));
            assert_eq!(ih_poincare(&x, s).unwrap(), expected);
        }
        assert_eq!(ih_poincare(&x, 4).unwrap(), MPoly::one());
    }

    #[test]
    fn weight_examples() {
        let bm = weight_bm_general(3, 3, 0).unwrap();
        assert_eq!(bm.poly, MPoly::one());
        assert_eq!(weight_orbit_general(3, 3, 0).unwrap().poly, MPoly::one());

        let orbit = weight_orbit_general(2, 2, 1).unwrap();
        let expected = (MPoly::one() + MPoly::monomial(mono(2, 2, 0)))
            * (MPoly::one() + MPoly::monomial(mono(3, 4, 0)));
        assert_eq!(orbit.poly, expected);
        assert!(orbit.w_exponents_even());
        assert!(weight_bm_general(2, 2, 2).is_err());
    }

    #[test]
    fn same_weight_slots() {
        let tri = weight_cdr_trivariate(4, 4, 2).unwrap().poly;
        assert_eq!(tri.coeff(12, 4, 16), BigInt::one());
        assert_eq!(tri.coeff(9, 6, 16), BigInt::one());
    }

    #[test]
    fn weight_pipeline_small() {
        let tri = weight_cdr_trivariate(2, 2, 1).unwrap().poly;
        let bm = weight_bm_general(2, 2, 1).unwrap().poly;
        assert_eq!(weight_to_bm(&tri, 4), bm);
    }
}
