//! Matrix spaces and their rank orbits.
//!
//! For the skew-symmetric space the orbit index `p` counts half the rank:
//! `O_p` is the set of matrices of rank `2p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    General,
    Skew,
    Symmetric,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::General => "general",
            Case::Skew => "skew",
            Case::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Case> {
        match s {
            "general" => Ok(Case::General),
            "skew" => Ok(Case::Skew),
            "symmetric" => Ok(Case::Symmetric),
            other => Err(Error::InvalidArgument(format!("unknown case {other:?}"))),
        }
    }
}

/// A matrix space: `m x n` matrices (`m >= n`), or `n x n` skew-symmetric or
/// symmetric matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum Space {
    General { m: u32, n: u32 },
    Skew { n: u32 },
    Symmetric { n: u32 },
}

/// A validated orbit index of a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitId {
    pub space: Space,
    pub p: u32,
}

impl Space {
    pub fn general(m: u32, n: u32) -> Result<Space> {
        if n < 1 || m < n {
            return Err(Error::InvalidArgument(format!(
                "general case needs m >= n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(Space::General { m, n })
    }

    pub fn skew(n: u32) -> Result<Space> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "skew case needs n >= 2, got n = {n}"
            )));
        }
        Ok(Space::Skew { n })
    }

    pub fn symmetric(n: u32) -> Result<Space> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!(
                "symmetric case needs n >= 1, got n = {n}"
            )));
        }
        Ok(Space::Symmetric { n })
    }

    pub fn new(case: Case, m: Option<u32>, n: u32) -> Result<Space> {
        match case {
            Case::General => {
                let m = m.ok_or_else(|| Error::InvalidArgument("general case needs --m".into()))?;
                Space::general(m, n)
            }
            Case::Skew => Space::skew(n),
            Case::Symmetric => Space::symmetric(n),
        }
    }

    pub fn case(&self) -> Case {
        match self {
            Space::General { .. } => Case::General,
            Space::Skew { .. } => Case::Skew,
            Space::Symmetric { .. } => Case::Symmetric,
        }
    }

    pub fn n(&self) -> i64 {
        match *self {
            Space::General { n, .. } | Space::Skew { n } | Space::Symmetric { n } => n as i64,
        }
    }

    /// `m` for general matrices, `floor(n/2)` otherwise.
    pub fn m(&self) -> i64 {
        match *self {
            Space::General { m, .. } => m as i64,
            Space::Skew { n } | Space::Symmetric { n } => (n / 2) as i64,
        }
    }

    /// `n - 2 floor(n/2)`; zero for general matrices.
    pub fn epsilon(&self) -> i64 {
        match self {
            Space::General { .. } => 0,
            _ => self.n() - 2 * self.m(),
        }
    }

    /// Complex dimension of the space.
    pub fn dim(&self) -> i64 {
        let n = self.n();
        match self {
            Space::General { .. } => self.m() * n,
            Space::Skew { .. } => n * (n - 1) / 2,
            Space::Symmetric { .. } => n * (n + 1) / 2,
        }
    }

    /// Index of the dense orbit.
    pub fn p_max(&self) -> u32 {
        match *self {
            Space::General { n, .. } | Space::Symmetric { n } => n,
            Space::Skew { n } => n / 2,
        }
    }

    pub fn orbit(&self, p: u32) -> Result<OrbitId> {
        if p > self.p_max() {
            return Err(Error::OutOfRange {
                space: self.to_string(),
                p: p as i64,
                max: self.p_max() as i64,
            });
        }
        Ok(OrbitId { space: *self, p })
    }

    pub fn dim_orbit(&self, p: u32) -> Result<i64> {
        self.orbit(p)?;
        let p = p as i64;
        let n = self.n();
        Ok(match self {
            Space::General { .. } => p * (self.m() + n - p),
            Space::Skew { .. } => self.dim() - (n - 2 * p) * (n - 2 * p - 1) / 2,
            Space::Symmetric { .. } => self.dim() - (n - p) * (n - p + 1) / 2,
        })
    }

    pub fn codim_orbit(&self, p: u32) -> Result<i64> {
        Ok(self.dim() - self.dim_orbit(p)?)
    }

    /// `1` iff `p` is even and `n` is odd (symmetric case only).
    pub fn epsilon_p(&self, p: u32) -> Result<i64> {
        match self {
            Space::Symmetric { n } => Ok((p.is_multiple_of(2) && !n.is_multiple_of(2)) as i64),
            other => Err(Error::NotApplicable(format!(
                "epsilon_p is defined for symmetric matrices only, not {other}"
            ))),
        }
    }

    /// Whether the connecting maps of the Borel-Moore long exact sequence are
    /// known to vanish at `p`.
    pub fn les_vanishes(&self, p: u32) -> bool {
        match self {
            Space::Symmetric { .. } => (self.n() - p as i64) % 2 == 0 || p == 1,
            _ => true,
        }
    }

    /// Sort key used for deterministic report ordering: `(case, n, m)`.
    pub fn sort_key(&self) -> (Case, i64, i64) {
        let m = match self {
            Space::General { .. } => self.m(),
            _ => 0,
        };
        (self.case(), self.n(), m)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::General { m, n } => write!(f, "general(m={m},n={n})"),
            Space::Skew { n } => write!(f, "skew(n={n})"),
            Space::Symmetric { n } => write!(f, "symmetric(n={n})"),
        }
    }
}
