//! Parity `[a,b]`-factor existence, decided two independent ways.
//!
//! * [`decide_by_criterion`] enumerates disjoint pairs `(S, T)` and looks for
//!   a pair whose deficiency `η(S,T) = b|S| − a|T| + Σ_{x∈T} d_{G−S}(x) − q(S,T)`
//!   is negative. A negative pair is returned as a [`CriterionWitness`].
//! * [`decide_by_search`] backtracks over edge subsets and returns an explicit
//!   [`FactorCertificate`] when a factor exists.
//!
//! `q(S,T)` counts the components `Q` of `G − S − T` for which
//! `a|V(Q)| + |[V(Q), T]|` is odd.

mod criterion;
mod eta;
pub mod matching;
mod search;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use crate::graph::{GraphError, VertexSet};

pub use criterion::{decide_by_criterion, CriterionVerdict};
pub use eta::{a_odd_count, eta, eta_gf, evaluate_pair};
pub use search::{decide_by_search, verify_certificate, SearchVerdict};

/// Order above which the criterion enumeration needs `force`.
pub const CRITERION_SOFT_LIMIT: usize = 18;
/// Order above which the criterion enumeration is refused outright.
pub const CRITERION_HARD_LIMIT: usize = 64;
/// Edge count above which the backtracking search needs `force`.
pub const SEARCH_SOFT_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("S and T must be disjoint")]
    NonDisjoint,
    #[error("parity precondition violated: {0}")]
    ParityPreconditionViolated(String),
    #[error("invalid degree bounds: {0}")]
    InvalidParams(String),
    #[error("invalid (g, f) functions: {0}")]
    InvalidGf(String),
    #[error("{what} = {value} exceeds the limit {limit}{hint}")]
    SizeLimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
        hint: &'static str,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bounds `(a, b)` with `1 <= a <= b` and `a ≡ b (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct ParityParams {
    a: usize,
    b: usize,
}

impl ParityParams {
    pub fn new(a: usize, b: usize) -> Result<Self, FactorError> {
        if a < 1 || a > b {
            return Err(FactorError::InvalidParams(format!(
                "need 1 <= a <= b, got a = {a}, b = {b}"
            )));
        }
        if a % 2 != b % 2 {
            return Err(FactorError::ParityPreconditionViolated(format!(
                "a = {a} and b = {b} differ in parity"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// The criterion is only meaningful when `n·a` is even.
    pub fn check_order(&self, n: usize) -> Result<(), FactorError> {
        if n * self.a % 2 == 1 {
            return Err(FactorError::ParityPreconditionViolated(format!(
                "n·a = {}·{} is odd",
                n, self.a
            )));
        }
        Ok(())
    }

    pub fn bounds(&self) -> DegreeBounds {
        DegreeBounds {
            lower: self.a,
            upper: self.b,
        }
    }
}

/// Plain degree window `[lower, upper]` used by the search decider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeBounds {
    pub lower: usize,
    pub upper: usize,
}

impl DegreeBounds {
    pub fn new(lower: usize, upper: usize) -> Result<Self, FactorError> {
        if lower > upper {
            return Err(FactorError::InvalidParams(format!(
                "lower {lower} > upper {upper}"
            )));
        }
        Ok(Self { lower, upper })
    }

    #[inline]
    pub fn admits(&self, d: usize, parity: bool) -> bool {
        d >= self.lower && d <= self.upper && (!parity || d % 2 == self.lower % 2)
    }
}

impl From<ParityParams> for DegreeBounds {
    fn from(p: ParityParams) -> Self {
        p.bounds()
    }
}

/// Per-vertex bounds `g(v) <= f(v)` with `g(v) ≡ f(v) (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfParams {
    g: Vec<usize>,
    f: Vec<usize>,
}

impl GfParams {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Result<Self, FactorError> {
        if g.len() != f.len() {
            return Err(FactorError::InvalidGf(format!(
                "g has {} entries, f has {}",
                g.len(),
                f.len()
            )));
        }
        for (v, (&lo, &hi)) in g.iter().zip(&f).enumerate() {
            if lo > hi {
                return Err(FactorError::InvalidGf(format!(
                    "g({v}) = {lo} > f({v}) = {hi}"
                )));
            }
            if lo % 2 != hi % 2 {
                return Err(FactorError::InvalidGf(format!(
                    "g({v}) and f({v}) differ in parity"
                )));
            }
        }
        Ok(Self { g, f })
    }

    pub fn constant(n: usize, a: usize, b: usize) -> Result<Self, FactorError> {
        Self::new(vec![a; n], vec![b; n])
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }
}

/// Force flag for the soft size limits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    pub force: bool,
    /// Suppress the warning logged when a forced run exceeds a soft limit.
    pub quiet: bool,
}

impl Limits {
    pub fn forced() -> Self {
        Limits {
            force: true,
            quiet: false,
        }
    }

    /// Forced without warnings, for batch runs that exceed the limits by design.
    pub fn batch() -> Self {
        Limits {
            force: true,
            quiet: true,
        }
    }
}

/// A disjoint pair `(S, T)` with the terms of its deficiency.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CriterionWitness {
    #[serde(serialize_with = "serialize_set")]
    pub s: VertexSet,
    #[serde(serialize_with = "serialize_set")]
    pub t: VertexSet,
    pub eta: i64,
    pub q: usize,
    pub deg_sum: usize,
}

impl CriterionWitness {
    /// Recomputes `b|S| − a|T| + deg_sum − q` from the stored fields.
    pub fn recomputed_eta(&self, params: &ParityParams) -> i64 {
        params.b() as i64 * self.s.len() as i64 - params.a() as i64 * self.t.len() as i64
            + self.deg_sum as i64
            - self.q as i64
    }

    /// Violating pairs certify that no parity factor exists.
    pub fn is_violating(&self) -> bool {
        self.eta <= -2
    }
}

/// A spanning subgraph given by its edges, with the degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FactorCertificate {
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
}

pub(crate) fn serialize_set<S: Serializer>(set: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(set.len()))?;
    for v in set.iter() {
        seq.serialize_element(&v)?;
    }
    seq.end()
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        serialize_set(self, ser)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_params_validation() {
        assert!(ParityParams::new(2, 4).is_ok());
        assert!(matches!(
            ParityParams::new(2, 3),
            Err(FactorError::ParityPreconditionViolated(_))
        ));
        assert!(matches!(
            ParityParams::new(0, 2),
            Err(FactorError::InvalidParams(_))
        ));
        assert!(matches!(
            ParityParams::new(5, 3),
            Err(FactorError::InvalidParams(_))
        ));
        let p = ParityParams::new(3, 5).unwrap();
        assert!(p.check_order(7).is_err());
        assert!(p.check_order(8).is_ok());
    }

    #[test]
    fn gf_validation() {
        assert!(GfParams::new(vec![1, 2], vec![3, 4]).is_ok());
        assert!(GfParams::new(vec![1, 2], vec![2, 4]).is_err());
        assert!(GfParams::new(vec![3], vec![1]).is_err());
        assert!(GfParams::new(vec![1], vec![1, 1]).is_err());
    }

    #[test]
    fn degree_window() {
        let w = DegreeBounds::new(2, 4).unwrap();
        assert!(w.admits(2, true) && w.admits(4, true) && !w.admits(3, true));
        assert!(w.admits(3, false));
        assert!(!w.admits(5, false) && !w.admits(1, false));
    }
}
