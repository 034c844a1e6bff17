//! Orbit cohomology recomputed from graded presentation data.
//!
//! A presentation is a polynomial ring on even-degree generators modulo a
//! regular sequence of relations, tensored with an exterior algebra on
//! odd-degree generators. Its Poincaré polynomial is
//! `prod (1 - q^rel) / prod (1 - q^gen) * prod (1 + q^ext)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::poly::{MPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub gen_degrees: Vec<i64>,
    pub rel_degrees: Vec<i64>,
    pub ext_degrees: Vec<i64>,
}

impl Presentation {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentPresentation(msg));
        if self.gen_degrees.len() != self.rel_degrees.len() {
            return bad(format!(
                "{} generators but {} relations",
                self.gen_degrees.len(),
                self.rel_degrees.len()
            ));
        }
        for &d in self.gen_degrees.iter().chain(&self.rel_degrees) {
            if d <= 0 || d % 2 != 0 {
                return bad(format!("ring degree {d} is not positive and even"));
            }
        }
        for &d in &self.ext_degrees {
            if d <= 0 || d % 2 == 0 {
                return bad(format!("exterior degree {d} is not positive and odd"));
            }
        }
        Ok(())
    }
}

fn evens(step: i64, from: i64, to: i64) -> Vec<i64> {
    (from..=to).map(|i| step * i).collect()
}

/// Degree data of the presentation of `H^*(O_p)`.
pub fn presentation_for(space: &Space, p: u32) -> Result<Presentation> {
    space.orbit(p)?;
    let (n, m, eps) = (space.n(), space.m(), space.epsilon());
    let p = p as i64;
    let pres = match space {
        // Grassmannian part written as a complete intersection; the (m-p)
        // block appears on both sides and cancels in the Hilbert series.
        Space::General { .. } => {
            let mut gen_degrees = evens(2, 1, p);
            gen_degrees.extend(evens(2, 1, m - p));
            gen_degrees.extend(evens(2, 1, n - p));
            let mut rel_degrees = evens(2, 1, m - p);
            rel_degrees.extend(evens(2, 1, n));
            Presentation {
                gen_degrees,
                rel_degrees,
                ext_degrees: (m - p + 1..=m).map(|k| 2 * k - 1).collect(),
            }
        }
        Space::Skew { .. } => Presentation {
            gen_degrees: evens(4, 1, p),
            rel_degrees: evens(4, m - p + 1, m),
            ext_degrees: (0..p).map(|k| 2 * (n + eps) - 4 * p + 1 + 4 * k).collect(),
        },
        Space::Symmetric { .. } => {
            let r = p / 2;
            if p % 2 == 0 {
                Presentation {
                    gen_degrees: evens(4, 1, r),
                    rel_degrees: evens(4, m - r + 1, m),
                    ext_degrees: (0..r).map(|k| 2 * (n + eps) - 4 * r + 1 + 4 * k).collect(),
                }
            } else {
                let mut ext_degrees: Vec<i64> = (0..r).map(|k| 4 * m - 4 * r + 1 + 4 * k).collect();
                ext_degrees.push(2 * n - 1);
                Presentation {
                    gen_degrees: evens(4, 1, r),
                    rel_degrees: evens(4, m - r + eps, m - 1 + eps),
                    ext_degrees,
                }
            }
        }
    };
    Ok(pres)
}

fn mul_binomial(poly: &mut Vec<BigInt>, d: usize, sign: i64) {
    poly.resize(poly.len() + d, BigInt::zero());
    for k in (d..poly.len()).rev() {
        let lower = poly[k - d].clone();
        if sign < 0 {
            poly[k] -= lower;
        } else {
            poly[k] += lower;
        }
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Hilbert series of the complete-intersection quotient, by multiplying the
/// relation product with truncated geometric series and checking the result.
pub fn quotient_series(pres: &Presentation) -> Result<Vec<BigInt>> {
    pres.validate()?;
    let top: i64 = pres.rel_degrees.iter().sum::<i64>() - pres.gen_degrees.iter().sum::<i64>();
    if top < 0 {
        return Err(Error::InconsistentPresentation(format!(
            "relation degrees sum below generator degrees by {}",
            -top
        )));
    }
    let mut numer = vec![BigInt::one()];
    for &d in &pres.rel_degrees {
        mul_binomial(&mut numer, d as usize, -1);
    }
    let len = top as usize + 1;
    let mut quot = numer.clone();
    quot.resize(quot.len().max(len), BigInt::zero());
    for &d in &pres.gen_degrees {
        // multiply by 1 + q^d + q^{2d} + ... as a running prefix sum
        let d = d as usize;
        for k in d..quot.len() {
            let lower = quot[k - d].clone();
            quot[k] += lower;
        }
    }
    quot.truncate(len);
    let mut back = quot.clone();
    for &d in &pres.gen_degrees {
        mul_binomial(&mut back, d as usize, -1);
    }
    if trim(back) != trim(numer) {
        return Err(Error::InconsistentPresentation(
            "nonzero remainder in Hilbert series division".into(),
        ));
    }
    if quot.iter().any(|c| c < &BigInt::zero()) {
        return Err(Error::InconsistentPresentation(
            "Hilbert series has a negative coefficient".into(),
        ));
    }
    Ok(quot)
}

pub fn cartan_poincare(pres: &Presentation) -> Result<MPoly> {
    let mut series = quotient_series(pres)?;
    for &d in &pres.ext_degrees {
        mul_binomial(&mut series, d as usize, 1);
    }
    Ok(MPoly::from_coeffs(Var::Q, &series))
}
