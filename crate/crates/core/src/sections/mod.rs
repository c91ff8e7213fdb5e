//! Sections of the split model over the two standard charts of `CP^1`.
//!
//! Chart `U0` carries coordinates `x, xi_1..xi_m`, chart `U1` carries
//! `y, eta_1..eta_m`, glued on the overlap by `y = 1/x` and
//! `eta_i = x^{-k_i} xi_i`. Functions are elements of the Grassmann algebra on
//! the odd generators with Laurent-polynomial coefficients in the even
//! coordinate; vector fields are derivations of that algebra.

mod field;
mod function;
mod transition;
mod word;

use std::fmt;
use std::str::FromStr;

pub use field::{Deriv, VectorField};
pub use function::SuperFunction;
pub use word::Word;

pub(crate) use transition::transition_monomial;

use crate::error::{Error, Result};

/// Which coordinate system a section is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    /// `x, xi_i`
    U0,
    /// `y, eta_i`
    U1,
}

impl Chart {
    pub fn other(self) -> Chart {
        match self {
            Chart::U0 => Chart::U1,
            Chart::U1 => Chart::U0,
        }
    }
}

/// Birkhoff-Grothendieck degrees `(k_1, .., k_m)` of the retract, `m` in {2, 3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTuple(Vec<i64>);

impl KTuple {
    pub fn new(k: Vec<i64>) -> Result<Self> {
        if !(2..=3).contains(&k.len()) {
            return Err(Error::InvalidKTuple(format!(
                "expected 2 or 3 degrees, got {}",
                k.len()
            )));
        }
        Ok(Self(k))
    }

    pub fn uniform(m: usize, k: i64) -> Result<Self> {
        Self::new(vec![k; m])
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Degree `k_i` for a 1-based generator index.
    pub fn k(&self, i: u8) -> i64 {
        self.0[usize::from(i) - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `sum_{i in w} k_i`.
    pub fn weight(&self, w: Word) -> i64 {
        w.indices().map(|i| self.k(i)).sum()
    }

    /// Sorted descending. Permuting the `k_i` permutes the generators and
    /// yields an isomorphic split model.
    pub fn canonical(&self) -> KTuple {
        let mut k = self.0.clone();
        k.sort_unstable_by(|a, b| b.cmp(a));
        KTuple(k)
    }

    /// `Some(k)` when all degrees equal `k`.
    pub fn common_degree(&self) -> Option<i64> {
        let first = self.0[0];
        self.0.iter().all(|&k| k == first).then_some(first)
    }
}

impl fmt::Display for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for KTuple {
    type Err = Error;

    /// Comma-separated list, e.g. `2,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let parsed: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|p| p.trim().parse::<i64>()).collect();
        let k = parsed.map_err(|_| Error::InvalidKTuple(format!("cannot parse {s:?}")))?;
        KTuple::new(k)
    }
}
