//! Identity checks over parameter sweeps.
//!
//! Each check compares two independently computed quantities. Failures are
//! data: a failing check carries a witness, everything else carries none.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{cartan_poincare, presentation_for};
use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::invariants::{
    bm_poincare, bm_poincare_positive_form, cdr_intro_form, cdr_section_form, ih_poincare,
    loccoh_series, np_total, orbit_cohomology, total_betti, weight_bm_general, weight_bm_summand,
    weight_cdr_trivariate, weight_orbit_general, weight_to_bm,
};
use crate::poly::{MPoly, Monomial, Substitution, Var};
use crate::qcomb::{gauss_product, gauss_sum, qbinom_in, qbinom_oracle, rescale_identity_check};
use crate::weights::{closure_check, WeightBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// First slot where two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub exponent: Option<[i64; 3]>,
    pub expected: String,
    pub actual: String,
}

/// An informational `(degree, value)` pair attached to a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub degree: i64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub space: Option<Space>,
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub slots: Vec<Slot>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn new(name: &str, space: Option<Space>, p: Option<u32>) -> Self {
        Check {
            name: name.to_string(),
            space,
            p,
            params: None,
            status: Status::Pass,
            witness: None,
            slots: vec![],
            note: None,
        }
    }

    fn at(name: &str, space: &Space, p: u32) -> Self {
        Check::new(name, Some(*space), Some(p))
    }

    fn params(mut self, params: String) -> Self {
        self.params = Some(params);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn skip(mut self, why: &str) -> Self {
        self.status = Status::Skipped;
        self.note = Some(why.to_string());
        self
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    fn expect_eq(self, expected: &MPoly, actual: &MPoly) -> Self {
        match diff_witness(expected, actual) {
            Some(w) => self.fail(w),
            None => self,
        }
    }

    fn expect_ok(self, r: Result<Check>) -> Self {
        match r {
            Ok(c) => c,
            Err(e) => self.fail(Witness {
                exponent: None,
                expected: "no error".into(),
                actual: e.to_string(),
            }),
        }
    }

    fn sort_key(&self) -> impl Ord {
        (
            self.space.map(|s| s.sort_key()),
            self.p,
            self.name.clone(),
            self.params.clone(),
        )
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Lowest exponent at which `expected` and `actual` differ.
pub fn diff_witness(expected: &MPoly, actual: &MPoly) -> Option<Witness> {
    let d = actual - expected;
    let (e, _) = d.terms().next()?;
    Some(Witness {
        exponent: Some(*e),
        expected: expected.coeff(e[0], e[1], e[2]).to_string(),
        actual: actual.coeff(e[0], e[1], e[2]).to_string(),
    })
}

fn scalar_witness(expected: impl ToString, actual: impl ToString) -> Witness {
    Witness {
        exponent: None,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn w_to_q() -> Substitution {
    Substitution::identity().with(Var::W, Monomial::var(Var::Q))
}

fn set_one(v: Var) -> Substitution {
    Substitution::identity().with(v, Monomial::ONE)
}

pub fn check_degeneration(space: &Space, p: u32) -> Check {
    let c = Check::at("degeneration", space, p);
    let r = (|| {
        let lhs = cdr_intro_form(space, p)?.substitute(&w_to_q());
        Ok(c.clone().expect_eq(&bm_poincare(space, p)?, &lhs))
    })();
    c.clone().expect_ok(r)
}

/// The two encodings of the Čech–de Rham numbers agree after reversing both
/// variables around `d_X`.
pub fn check_reindex(space: &Space, p: u32) -> Check {
    let c = Check::at("reindex", space, p);
    if p == space.p_max() {
        return c.skip("dense orbit");
    }
    let r = (|| {
        let d = space.dim();
        let reversed = cdr_section_form(space, p)?
            .reverse(Var::Q, d)
            .reverse(Var::W, d);
        Ok(c.clone().expect_eq(&cdr_intro_form(space, p)?, &reversed))
    })();
    c.clone().expect_ok(r)
}

/// The Borel–Moore polynomial in its two printed binomial forms, plus its
/// shape: nonnegative, supported in `[0, 2 dim O_p]`, top coefficient 1.
pub fn check_bm_forms(space: &Space, p: u32) -> Check {
    let c = Check::at("bm-forms", space, p);
    let r = (|| {
        let bm = bm_poincare(space, p)?;
        let c = c
            .clone()
            .expect_eq(&bm, &bm_poincare_positive_form(space, p)?);
        if c.is_fail() {
            return Ok(c);
        }
        let (lo, hi) = bm.support_range(Var::Q)?;
        let top = 2 * space.dim_orbit(p)?;
        let lead = bm.coeff(top, 0, 0);
        if !bm.is_nonneg() || lo < 0 || hi != top || lead != BigInt::from(1) {
            return Ok(c.fail(Witness {
                exponent: Some([hi, 0, 0]),
                expected: format!("nonnegative, support in [0, {top}], top coefficient 1"),
                actual: format!("support [{lo}, {hi}], top coefficient {lead}"),
            }));
        }
        Ok(c)
    })();
    c.clone().expect_ok(r)
}

/// Composition-series entries are nonnegative and live in the local
/// cohomology range `[codim O_p, d_X]`.
pub fn check_loccoh_range(space: &Space, p: u32) -> Check {
    let c = Check::at("loccoh-range", space, p);
    if p == space.p_max() {
        return c.skip("dense orbit");
    }
    let r = (|| {
        let (lo, hi) = (space.codim_orbit(p)?, space.dim());
        for (s, entry) in loccoh_series(space, p)?.entries {
            let (a, b) = entry.support_range(Var::W)?;
            if !entry.is_nonneg() || a < lo || b > hi {
                return Ok(c.clone().fail(Witness {
                    exponent: Some([0, if a < lo { a } else { b }, 0]),
                    expected: format!("nonnegative entry in w-degrees [{lo}, {hi}]"),
                    actual: format!("s = {s}: {entry}"),
                }));
            }
        }
        Ok(c.clone())
    })();
    c.clone().expect_ok(r)
}

/// `Δ = reverse(orbit cohomology) - BM(p) - q BM(p-1)`. Its coefficients are
/// `-(r_i + r_{i-1})` where `r_i` is the rank of the pushforward
/// `H_i(closure of O_{p-1}) -> H_i(closure of O_p)`; nonzero ranks are
/// reported as slots.
pub fn check_les(space: &Space, p: u32) -> Check {
    let c = Check::at("les", space, p);
    if p == 0 {
        return c.skip("no smaller orbit");
    }
    let r = (|| {
        let delta = les_delta(space, p)?;
        let c = c.clone();
        let slots: Vec<Slot> = recovered_ranks(&delta)
            .into_iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(degree, r)| Slot {
                degree,
                value: r.to_string(),
            })
            .collect();
        let c = Check { slots, ..c };
        if space.les_vanishes(p) {
            Ok(c.expect_eq(&MPoly::zero(), &delta))
        } else {
            // outside the regime only Δ <= 0 is asserted
            let positive = delta.terms().find(|(_, v)| v.is_positive());
            Ok(match positive {
                Some((e, v)) => c.fail(Witness {
                    exponent: Some(*e),
                    expected: "<= 0".into(),
                    actual: v.to_string(),
                }),
                None => c.note("outside the vanishing regime; slots list nonzero ranks"),
            })
        }
    })();
    c.clone().expect_ok(r)
}

pub fn les_delta(space: &Space, p: u32) -> Result<MPoly> {
    let dual = orbit_cohomology(space, p)?.reverse(Var::Q, 2 * space.dim_orbit(p)?);
    let lower = bm_poincare(space, p - 1)?.shift(Monomial::var(Var::Q));
    Ok(dual - bm_poincare(space, p)? - lower)
}

/// Solves `Δ_i = -(r_i + r_{i-1})` upward from the lowest degree of `Δ`.
pub fn recovered_ranks(delta: &MPoly) -> Vec<(i64, BigInt)> {
    let Ok((lo, hi)) = delta.support_range(Var::Q) else {
        return vec![];
    };
    let coeffs = delta.coefficients_in(Var::Q);
    let mut prev = BigInt::zero();
    let mut out = vec![];
    for i in lo..=hi + 1 {
        let d = coeffs.get(&i).cloned().unwrap_or_default();
        let r = -d - &prev;
        out.push((i, r.clone()));
        prev = r;
    }
    out
}

pub fn check_rho_vanishing(space: &Space, p: u32) -> Check {
    let c = Check::at("rho-vanishing", space, p);
    let r = (|| {
        let intro = cdr_intro_form(space, p)?;
        let checked = match intro.terms().find(|(e, _)| e[0] > e[1]) {
            Some((e, v)) => c.clone().fail(Witness {
                exponent: Some(*e),
                expected: "0".into(),
                actual: v.to_string(),
            }),
            None => c.clone(),
        };
        Ok(checked)
    })();
    c.clone().expect_ok(r)
}

/// `N_p + N_{p-1} = b_tot(p)` under the parity hypothesis, `<=` otherwise;
/// also `b_tot(p)` against the orbit cohomology at `q = 1`.
pub fn check_totals(space: &Space, p: u32) -> Check {
    let c = Check::at("totals", space, p);
    let r = (|| {
        let btot = total_betti(space, p)?;
        let evaluated = orbit_cohomology(space, p)?.eval_all_one();
        if btot != evaluated {
            return Ok(c
                .clone()
                .note("closed form vs q = 1")
                .fail(scalar_witness(evaluated, btot)));
        }
        if p == 0 {
            return Ok(c.clone().note("b_tot only"));
        }
        let sum = np_total(space, p)? + np_total(space, p - 1)?;
        let c = c
            .clone()
            .note(format!("N_p + N_(p-1) = {sum}, b_tot = {btot}"));
        let ok = if space.les_vanishes(p) {
            sum == btot
        } else {
            btot <= sum
        };
        Ok(if ok {
            c
        } else {
            c.fail(scalar_witness(btot, sum))
        })
    })();
    c.clone().expect_ok(r)
}

/// Orbit cohomology from the splitting `H_{O_p} = H_{closure O_p} ⊕
/// H_{closure O_{p-1}}[1]` of local cohomology, at the level of generating
/// functions. The dense orbit contributes the constant `1` in section
/// indexing (the module `O_X` in degree 0 with `H^0_dR = C`).
pub fn check_locally_closed(space: &Space, p: u32) -> Check {
    let c = Check::at("locally-closed", space, p);
    if p == 0 {
        return c.skip("no smaller orbit");
    }
    if !space.les_vanishes(p) {
        return c.skip("outside the vanishing regime");
    }
    let r = (|| {
        let top = if p == space.p_max() {
            MPoly::one()
        } else {
            cdr_section_form(space, p)?
        };
        let g = top + cdr_section_form(space, p - 1)?.shift(Monomial::var_pow(Var::W, -1));
        let lhs = g
            .substitute(&w_to_q())
            .shift(Monomial::var_pow(Var::Q, -2 * space.codim_orbit(p)?));
        Ok(c.clone().expect_eq(&orbit_cohomology(space, p)?, &lhs))
    })();
    c.clone().expect_ok(r)
}

/// Weight generating functions for `m x n` matrices, `p < n`.
pub fn check_weight_suite(m: u32, n: u32, p: u32) -> Check {
    let space = match Space::general(m, n) {
        Ok(s) => s,
        Err(e) => {
            return Check::new("weights", None, Some(p)).fail(scalar_witness("valid size", e))
        }
    };
    let c = Check::at("weights", &space, p);
    if p >= n {
        return c.skip("dense orbit");
    }
    let r = (|| -> Result<Check> {
        let bm = weight_bm_general(m, n, p)?;
        let orbit = weight_orbit_general(m, n, p)?;
        let tri = weight_cdr_trivariate(m, n, p)?.poly;
        let w1 = set_one(Var::W);
        let parts: Vec<(&str, MPoly, MPoly)> = vec![
            (
                "bm at w=1",
                bm_poincare(&space, p)?,
                bm.poly.substitute(&w1),
            ),
            (
                "orbit at w=1",
                orbit_cohomology(&space, p)?,
                orbit.poly.substitute(&w1),
            ),
            (
                "trivariate at t=1",
                cdr_section_form(&space, p)?,
                tri.substitute(&set_one(Var::T)),
            ),
            (
                "lowest weight piece",
                ih_poincare(&space, p)?.shift(Monomial::var_pow(Var::Q, 2 * p as i64 * m as i64)),
                weight_bm_summand(m, n, p, p)?.substitute(&w1),
            ),
            (
                "trivariate to bm",
                bm.poly.clone(),
                weight_to_bm(&tri, space.dim()),
            ),
        ];
        for (label, expected, actual) in parts {
            if let Some(w) = diff_witness(&expected, &actual) {
                return Ok(c.clone().note(label).fail(w));
            }
        }
        for table in [&bm, &orbit] {
            if let Some((e, v)) = table.poly.terms().find(|(e, _)| e[1] % 2 != 0) {
                return Ok(c.clone().note("odd weight").fail(Witness {
                    exponent: Some(*e),
                    expected: "0".into(),
                    actual: v.to_string(),
                }));
            }
        }
        Ok(c.clone())
    })();
    c.clone().expect_ok(r)
}

pub fn check_cartan(space: &Space, p: u32) -> Check {
    let c = Check::at("cartan", space, p);
    let r = (|| {
        let lhs = cartan_poincare(&presentation_for(space, p)?)?;
        Ok(c.clone().expect_eq(&orbit_cohomology(space, p)?, &lhs))
    })();
    c.clone().expect_ok(r)
}

/// Default box radius for the closure checks.
pub fn closure_radius(n: u32) -> i64 {
    n as i64 + 3
}

pub fn check_closure(space: &Space, p: u32, radius: i64) -> Check {
    let c = Check::at("closure", space, p).params(format!("radius={radius}"));
    let r = (|| {
        let bx = WeightBox::radius(space.n() as usize, radius)?;
        let report = closure_check(space.case(), p, &bx)?;
        let mut c = c.clone().note(format!(
            "checked {}, unclassified {}, above p {}",
            report.checked,
            report.unclassified.len(),
            report.above_p.len()
        ));
        if let Some(v) = report.violations.first() {
            c = c.fail(Witness {
                exponent: None,
                expected: format!("class <= {} or > {p}", v.class_lambda),
                actual: format!("{:?} -> {:?}: class {:?}", v.lambda.0, v.nu.0, v.class_nu),
            });
        }
        Ok(c)
    })();
    c.clone().expect_ok(r)
}

/// Closure orbit indices: all for general and skew (n even), `n - p` odd for
/// symmetric. Skew with odd `n` has no weight description and is omitted.
pub fn closure_targets(space: &Space) -> Vec<u32> {
    match space {
        Space::General { m, n } if m == n => (0..=*n).collect(),
        Space::Skew { n } if n % 2 == 0 => (0..=n / 2).collect(),
        Space::Symmetric { n } => (0..=*n).filter(|p| (n - p) % 2 == 1).collect(),
        _ => vec![],
    }
}

pub fn qcomb_checks() -> Vec<Check> {
    let mut out = vec![];
    for a in 0..=12i64 {
        for b in 0..=a {
            let c = Check::new("qcomb-oracle", None, None).params(format!("a={a},b={b}"));
            let r = (|| {
                let rec = qbinom_in(a, b, Monomial::var(Var::Q))?;
                Ok(c.clone().expect_eq(&qbinom_oracle(a, b)?, &rec))
            })();
            out.push(c.clone().expect_ok(r));
        }
    }
    for a in 0..=10i64 {
        for b in 0..=a {
            for step in [1, -1, 2, -2, 4, -4] {
                let c = Check::new("qcomb-rescale", None, None)
                    .params(format!("a={a},b={b},step={step}"));
                out.push(match rescale_identity_check(a, b, step) {
                    Ok(true) => c,
                    Ok(false) => c.fail(scalar_witness(true, false)),
                    Err(e) => c.fail(scalar_witness("no error", e)),
                });
            }
        }
    }
    let bases = [
        (Monomial::var(Var::Q), Monomial::var(Var::W)),
        (Monomial::var_pow(Var::Q, 2), Monomial::new(1, -1, 0)),
        (Monomial::var_pow(Var::Q, -4), Monomial::new(0, 1, 1)),
    ];
    for n in 0..=10i64 {
        for (i, (a, b)) in bases.iter().enumerate() {
            let c = Check::new("qcomb-gauss", None, None).params(format!("n={n},base={i}"));
            let r = (|| {
                Ok(c.clone()
                    .expect_eq(&gauss_product(n, *a, *b), &gauss_sum(n, *a, *b)?))
            })();
            out.push(c.clone().expect_ok(r));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Degeneration,
    Les,
    Rho,
    Totals,
    LocallyClosed,
    Weights,
    Qcomb,
    Cartan,
    Closure,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "all",
        "degeneration",
        "les",
        "rho",
        "totals",
        "locally-closed",
        "weights",
        "qcomb",
        "cartan",
        "closure",
    ];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "degeneration" => Suite::Degeneration,
            "les" => Suite::Les,
            "rho" => Suite::Rho,
            "totals" => Suite::Totals,
            "locally-closed" => Suite::LocallyClosed,
            "weights" => Suite::Weights,
            "qcomb" => Suite::Qcomb,
            "cartan" => Suite::Cartan,
            "closure" => Suite::Closure,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by_key(|c| c.sort_key());
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport { checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn find(&self, name: &str, space: &Space, p: u32) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| c.name == name && c.space == Some(*space) && c.p == Some(p))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "{status} {}", c.name)?;
            if let Some(s) = c.space {
                write!(f, " {s}")?;
            }
            if let Some(p) = c.p {
                write!(f, " p={p}")?;
            }
            if let Some(params) = &c.params {
                write!(f, " {params}")?;
            }
            if let Some(w) = &c.witness {
                write!(f, " witness: expected {} got {}", w.expected, w.actual)?;
                if let Some(e) = w.exponent {
                    write!(f, " at {e:?}")?;
                }
            }
            if !c.slots.is_empty() {
                let slots: Vec<String> = c
                    .slots
                    .iter()
                    .map(|s| format!("{}:{}", s.degree, s.value))
                    .collect();
                write!(f, " slots [{}]", slots.join(", "))?;
            }
            if let Some(note) = &c.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "summary: {} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        )
    }
}

/// Every space in the sweep bounds: general `n <= max_n`, `n <= m <= max_m`;
/// skew `2 <= n <= max_n`; symmetric `1 <= n <= max_n`.
pub fn spaces(max_n: u32, max_m: u32) -> Vec<Space> {
    let mut out = vec![];
    for n in 1..=max_n {
        for m in n..=max_m {
            out.push(Space::General { m, n });
        }
        if n >= 2 {
            out.push(Space::Skew { n });
        }
        out.push(Space::Symmetric { n });
    }
    out
}

fn orbit_checks(suite: Suite, space: &Space, p: u32) -> Vec<Check> {
    let mut out = vec![];
    if suite.includes(Suite::Degeneration) {
        out.push(check_degeneration(space, p));
        out.push(check_reindex(space, p));
        out.push(check_bm_forms(space, p));
        out.push(check_loccoh_range(space, p));
    }
    if suite.includes(Suite::Les) {
        out.push(check_les(space, p));
    }
    if suite.includes(Suite::Rho) {
        out.push(check_rho_vanishing(space, p));
    }
    if suite.includes(Suite::Totals) {
        out.push(check_totals(space, p));
    }
    if suite.includes(Suite::LocallyClosed) {
        out.push(check_locally_closed(space, p));
    }
    if suite.includes(Suite::Cartan) {
        out.push(check_cartan(space, p));
    }
    if suite.includes(Suite::Weights) {
        if let Space::General { m, n } = *space {
            out.push(check_weight_suite(m, n, p));
        }
    }
    if suite.includes(Suite::Closure) && closure_targets(space).contains(&p) {
        out.push(check_closure(space, p, closure_radius(space.n() as u32)));
    }
    out
}

pub fn run(suite: Suite, max_n: u32, max_m: u32) -> Result<VerificationReport> {
    if max_n < 1 || max_m < 1 {
        return Err(Error::InvalidArgument(
            "sweep bounds must be at least 1".into(),
        ));
    }
    let tasks: Vec<(Space, u32)> = spaces(max_n, max_m)
        .into_iter()
        .flat_map(|s| (0..=s.p_max()).map(move |p| (s, p)))
        .collect();
    let mut checks: Vec<Check> = tasks
        .par_iter()
        .flat_map_iter(|(s, p)| orbit_checks(suite, s, *p))
        .collect();
    if suite.includes(Suite::Qcomb) {
        checks.extend(qcomb_checks());
    }
    Ok(VerificationReport::new(checks))
}

pub fn run_all(max_n: u32, max_m: u32) -> Result<VerificationReport> {
    run(Suite::All, max_n, max_m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn general(m: u32, n: u32) -> Space {
        Space::general(m, n).unwrap()
    }

    #[test]
    fn spec_examples_pass() {
        let x = general(2, 2);
        assert_eq!(check_degeneration(&x, 1).status, Status::Pass);
        assert_eq!(check_les(&x, 1).status, Status::Pass);
        assert_eq!(check_locally_closed(&x, 1).status, Status::Pass);
        assert_eq!(check_weight_suite(2, 2, 1).status, Status::Pass);
        assert_eq!(check_rho_vanishing(&general(3, 2), 1).status, Status::Pass);
        assert_eq!(check_totals(&general(3, 3), 1).status, Status::Pass);
        assert_eq!(
            check_totals(&Space::skew(6).unwrap(), 2).status,
            Status::Pass
        );
        assert_eq!(
            check_locally_closed(&Space::skew(5).unwrap(), 1).status,
            Status::Pass
        );
    }

    #[test]
    fn symmetric_les_defect() {
        let x = Space::symmetric(5).unwrap();
        assert_eq!(
            les_delta(&x, 2).unwrap(),
            MPoly::from_terms([([10, 0, 0], -1), ([11, 0, 0], -1)])
        );
        let c = check_les(&x, 2);
        assert_eq!(c.status, Status::Pass);
        assert_eq!(
            c.slots,
            vec![Slot {
                degree: 10,
                value: "1".into()
            }]
        );
        let even = check_les(&Space::symmetric(4).unwrap(), 2);
        assert_eq!(even.status, Status::Pass);
        assert!(even.slots.is_empty());
    }

    #[test]
    fn failing_check_has_witness() {
        let c = Check::at("x", &general(2, 2), 1).expect_eq(&MPoly::one(), &MPoly::zero());
        assert!(c.is_fail());
        assert_eq!(c.witness.unwrap().exponent, Some([0, 0, 0]));
    }

    #[test]
    fn dense_orbit_skipped() {
        let x = Space::skew(4).unwrap();
        assert_eq!(check_reindex(&x, 2).status, Status::Skipped);
        assert_eq!(check_degeneration(&x, 2).status, Status::Pass);
    }

    #[test]
    fn tiny_sweep() {
        let report = run_all(1, 1).unwrap();
        assert!(report.passed(), "{report}");
        let again = run_all(1, 1).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }
}
