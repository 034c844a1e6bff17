//! Dominant weights indexing the isotypic pieces of the simple modules `D_s`,
//! truncated to finite boxes, and the box-removal closure checks.
//!
//! Entries are 1-indexed in the formulas; `λ_0 = +∞` and `λ_{n+1} = -∞`
//! (for the symmetric case every index `<= 0` is `+∞` and every index
//! `>= n+1` is `-∞`).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Case;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DomWeight(pub Vec<i64>);

impl DomWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "weight {entries:?} is not weakly decreasing"
            )));
        }
        Ok(DomWeight(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    // 1-indexed access with infinite sentinels outside 1..=n.
    fn at(&self, i: i64) -> Option<i64> {
        if i < 1 || i > self.0.len() as i64 {
            None
        } else {
            Some(self.0[(i - 1) as usize])
        }
    }

    fn ge(&self, i: i64, bound: i64) -> bool {
        match self.at(i) {
            Some(v) => v >= bound,
            None => i < 1,
        }
    }

    fn le(&self, i: i64, bound: i64) -> bool {
        match self.at(i) {
            Some(v) => v <= bound,
            None => i > self.0.len() as i64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBox {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
}

impl WeightBox {
    pub fn new(n: usize, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty box [{lo}, {hi}]")));
        }
        Ok(WeightBox { n, lo, hi })
    }

    /// The box `[-radius, radius]`.
    pub fn radius(n: usize, radius: i64) -> Result<Self> {
        WeightBox::new(n, -radius, radius)
    }

    fn contains(&self, lam: &DomWeight) -> bool {
        lam.0.iter().all(|v| (self.lo..=self.hi).contains(v))
    }
}

fn check_len(lam: &DomWeight, n: usize) -> Result<()> {
    if lam.len() != n {
        return Err(Error::InvalidArgument(format!(
            "weight has {} entries, expected {n}",
            lam.len()
        )));
    }
    if lam.0.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!(
            "weight {:?} is not dominant",
            lam.0
        )));
    }
    Ok(())
}

fn check_case(case: Case, lam: &DomWeight, n: usize) -> Result<()> {
    check_len(lam, n)?;
    match case {
        Case::General => Ok(()),
        Case::Skew => {
            if !n.is_multiple_of(2) {
                return Err(Error::NotApplicable(format!(
                    "skew weights need n even, got n = {n}"
                )));
            }
            if lam.0.chunks(2).any(|c| c[0] != c[1]) {
                return Err(Error::InvalidArgument(format!(
                    "skew weight {:?} is not paired",
                    lam.0
                )));
            }
            Ok(())
        }
        Case::Symmetric => {
            if lam.0.iter().any(|v| v % 2 != 0) {
                return Err(Error::InvalidArgument(format!(
                    "symmetric weight {:?} has an odd entry",
                    lam.0
                )));
            }
            Ok(())
        }
    }
}

/// Every index `s` whose defining inequalities `lam` satisfies. Has at most one
/// element; kept separate from [`classify`] so uniqueness can be tested.
pub fn candidates(case: Case, lam: &DomWeight, n: usize) -> Result<Vec<u32>> {
    check_case(case, lam, n)?;
    let n = n as i64;
    let hits = match case {
        Case::General => (0..=n)
            .filter(|&s| lam.ge(s, s - n) && lam.le(s + 1, s - n))
            .collect::<Vec<_>>(),
        Case::Skew => (0..=n / 2)
            .filter(|&s| lam.ge(2 * s, 2 * s - n) && lam.le(2 * s + 1, 2 * s - n + 1))
            .collect(),
        Case::Symmetric => (0..=n + 1)
            .filter(|&s| (n - s).rem_euclid(2) == 1)
            .filter(|&s| lam.ge(s - 1, s - n - 1) && lam.le(s + 1, s - n - 1))
            .collect(),
    };
    Ok(hits.into_iter().map(|s| s as u32).collect())
}

pub fn classify(case: Case, lam: &DomWeight, n: usize) -> Result<Option<u32>> {
    Ok(candidates(case, lam, n)?.first().copied())
}

pub fn classify_general(lam: &DomWeight, n: usize) -> Result<Option<u32>> {
    classify(Case::General, lam, n)
}

pub fn classify_skew(lam: &DomWeight, n: usize) -> Result<Option<u32>> {
    classify(Case::Skew, lam, n)
}

pub fn classify_symmetric(lam: &DomWeight, n: usize) -> Result<Option<u32>> {
    classify(Case::Symmetric, lam, n)
}

// Weakly decreasing sequences of `len` values drawn from `values` (descending).
fn decreasing(values: &[i64], len: usize) -> Vec<Vec<i64>> {
    fn go(values: &[i64], start: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, i, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, 0, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All dominant weights of the given case inside the box.
pub fn dominant_in_box(case: Case, bx: &WeightBox) -> Result<Vec<DomWeight>> {
    let range = (bx.lo..=bx.hi).rev();
    let weights = match case {
        Case::General => decreasing(&range.collect::<Vec<_>>(), bx.n),
        Case::Skew => {
            if !bx.n.is_multiple_of(2) {
                return Err(Error::NotApplicable(format!(
                    "skew weights need n even, got n = {}",
                    bx.n
                )));
            }
            decreasing(&range.collect::<Vec<_>>(), bx.n / 2)
                .into_iter()
                .map(|half| half.iter().flat_map(|&v| [v, v]).collect())
                .collect()
        }
        Case::Symmetric => decreasing(&range.filter(|v| v % 2 == 0).collect::<Vec<_>>(), bx.n),
    };
    Ok(weights.into_iter().map(DomWeight).collect())
}

pub fn enumerate_class(case: Case, s: u32, bx: &WeightBox) -> Result<Vec<DomWeight>> {
    let mut out = Vec::new();
    for lam in dominant_in_box(case, bx)? {
        if classify(case, &lam, bx.n)? == Some(s) {
            out.push(lam);
        }
    }
    Ok(out)
}

/// Weights obtained from `lam` by one legal box removal that stay dominant.
pub fn removals(case: Case, lam: &DomWeight) -> Vec<DomWeight> {
    let v = &lam.0;
    let mut out = Vec::new();
    match case {
        Case::General | Case::Symmetric => {
            let step = if case == Case::General { 1 } else { 2 };
            for r in 0..v.len() {
                if r + 1 == v.len() || v[r] - step >= v[r + 1] {
                    let mut nu = v.clone();
                    nu[r] -= step;
                    out.push(DomWeight(nu));
                }
            }
        }
        Case::Skew => {
            for r in (0..v.len()).step_by(2) {
                if r + 2 >= v.len() || v[r] > v[r + 2] {
                    let mut nu = v.clone();
                    nu[r] -= 1;
                    nu[r + 1] -= 1;
                    out.push(DomWeight(nu));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub lambda: DomWeight,
    pub nu: DomWeight,
    pub class_lambda: u32,
    pub class_nu: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub checked: usize,
    pub violations: Vec<Transition>,
    pub unclassified: Vec<Transition>,
    /// Removals landing in a class above `p`; informational.
    pub above_p: Vec<Transition>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_closure_p(case: Case, n: usize, p: u32) -> Result<()> {
    let ok = match case {
        Case::General => p as usize <= n,
        Case::Skew => n.is_multiple_of(2) && p as usize <= n / 2,
        Case::Symmetric => p as usize <= n && (n - p as usize) % 2 == 1,
    };
    if !ok {
        return Err(Error::InvalidArgument(format!(
            "no closure check for {case} n = {n}, p = {p}"
        )));
    }
    Ok(())
}

/// For each weight of class `s <= p` in the box and each legal removal `ν`
/// inside the box, flags `ν` when its class lies in `(s, p]`.
pub fn closure_check(case: Case, p: u32, bx: &WeightBox) -> Result<ClosureReport> {
    check_closure_p(case, bx.n, p)?;
    let weights = dominant_in_box(case, bx)?;
    let empty = || ClosureReport {
        checked: 0,
        violations: vec![],
        unclassified: vec![],
        above_p: vec![],
    };
    let report = weights
        .par_iter()
        .map(|lam| {
            let mut r = empty();
            let s = match classify(case, lam, bx.n).expect("enumerated weights are valid") {
                Some(s) if s <= p => s,
                _ => return r,
            };
            for nu in removals(case, lam).into_iter().filter(|nu| bx.contains(nu)) {
                r.checked += 1;
                let t = classify(case, &nu, bx.n).expect("removals stay valid");
                let tr = Transition {
                    lambda: lam.clone(),
                    nu,
                    class_lambda: s,
                    class_nu: t,
                };
                match t {
                    None => r.unclassified.push(tr),
                    Some(t) if t > p => r.above_p.push(tr),
                    Some(t) if t > s => r.violations.push(tr),
                    Some(_) => {}
                }
            }
            r
        })
        .reduce(empty, |mut a, b| {
            a.checked += b.checked;
            a.violations.extend(b.violations);
            a.unclassified.extend(b.unclassified);
            a.above_p.extend(b.above_p);
            a
        });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(v: &[i64]) -> DomWeight {
        DomWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn general_examples() {
        for n in 1..6 {
            let zero = dw(&vec![0; n]);
            assert_eq!(classify_general(&zero, n).unwrap(), Some(n as u32));
            let low = dw(&vec![-(n as i64); n]);
            assert_eq!(classify_general(&low, n).unwrap(), Some(0));
        }
        assert_eq!(classify_general(&dw(&[1, -2]), 2).unwrap(), Some(1));
        assert!(classify_general(&DomWeight(vec![0, 1]), 2).is_err());
        assert!(classify_general(&dw(&[0]), 2).is_err());
    }

    #[test]
    fn skew_examples() {
        assert_eq!(classify_skew(&dw(&[0, 0, 0, 0]), 4).unwrap(), Some(2));
        assert_eq!(classify_skew(&dw(&[-4, -4, -4, -4]), 4).unwrap(), Some(0));
        assert_eq!(classify_skew(&dw(&[1, 1, -3, -3]), 4).unwrap(), Some(1));
        assert!(classify_skew(&dw(&[1, 0, 0, 0]), 4).is_err());
        assert!(classify_skew(&dw(&[0, 0, 0]), 3).is_err());
    }

    #[test]
    fn symmetric_examples() {
        for n in [1usize, 3, 5] {
            let zero = dw(&vec![0; n]);
            assert_eq!(classify_symmetric(&zero, n).unwrap(), Some(n as u32 + 1));
            let low = dw(&vec![-(n as i64) - 1; n]);
            assert_eq!(classify_symmetric(&low, n).unwrap(), Some(0));
        }
        let mut two = vec![0; 4];
        two[0] = 2;
        assert_eq!(classify_symmetric(&dw(&two), 4).unwrap(), Some(5));
        assert!(classify_symmetric(&dw(&[1, 0]), 2).is_err());
    }

    #[test]
    fn enumeration_matches_filter() {
        let bx = WeightBox::new(2, -3, 1).unwrap();
        let got = enumerate_class(Case::General, 1, &bx).unwrap();
        let mut expected = vec![];
        for a in -3..=1 {
            for b in -3..=a {
                if a >= -1 && -1 >= b {
                    expected.push(dw(&[a, b]));
                }
            }
        }
        let mut got_sorted = got.clone();
        got_sorted.sort();
        expected.sort();
        assert_eq!(got_sorted, expected);

        let point = WeightBox::new(3, 0, 0).unwrap();
        assert_eq!(
            enumerate_class(Case::General, 3, &point).unwrap(),
            vec![dw(&[0, 0, 0])]
        );
    }

    #[test]
    fn class_uniqueness() {
        for (case, n) in [(Case::General, 4), (Case::Skew, 4), (Case::Symmetric, 4)] {
            let bx = WeightBox::radius(n, 7).unwrap();
            for lam in dominant_in_box(case, &bx).unwrap() {
                assert!(candidates(case, &lam, n).unwrap().len() <= 1, "{lam:?}");
            }
        }
    }

    #[test]
    fn closure_examples() {
        let r = closure_check(Case::General, 2, &WeightBox::new(3, -6, 3).unwrap()).unwrap();
        assert!(r.passed() && r.checked > 0);
        let r = closure_check(Case::Skew, 1, &WeightBox::new(4, -6, 2).unwrap()).unwrap();
        assert!(r.passed() && r.checked > 0);
        let r = closure_check(Case::Symmetric, 2, &WeightBox::new(3, -8, 4).unwrap()).unwrap();
        assert!(r.passed() && r.checked > 0);
        assert!(closure_check(Case::Symmetric, 1, &WeightBox::radius(3, 6).unwrap()).is_err());
    }

    #[test]
    fn removal_shapes() {
        assert_eq!(removals(Case::General, &dw(&[1, 1])), vec![dw(&[1, 0])]);
        assert_eq!(
            removals(Case::Skew, &dw(&[2, 2, 0, 0])),
            vec![dw(&[1, 1, 0, 0]), dw(&[2, 2, -1, -1])]
        );
        assert_eq!(
            removals(Case::Symmetric, &dw(&[2, 0])),
            vec![dw(&[0, 0]), dw(&[2, -2])]
        );
    }
}
