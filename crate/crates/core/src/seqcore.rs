//! Signed integer sequences and Jordan partitions.
//!
//! A [`SignedSequence`] is a finite nonincreasing list of integers. The
//! recursion builds every `s_p(m, n)` out of the handful of primitives
//! defined here: concatenation, negative reverse, constant runs, sign
//! filters and scalar shifts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedSequence(Vec<i64>);

impl SignedSequence {
    pub fn empty() -> Self {
        SignedSequence(Vec::new())
    }

    /// Wraps `terms`, which must already be nonincreasing.
    pub fn from_terms(terms: Vec<i64>) -> Option<Self> {
        if terms.windows(2).all(|w| w[0] >= w[1]) {
            Some(SignedSequence(terms))
        } else {
            None
        }
    }

    /// `(value : count)`, i.e. `count` copies of `value`.
    pub fn constant(value: i64, count: usize) -> Self {
        SignedSequence(vec![value; count])
    }

    pub fn terms(&self) -> &[i64] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// `self ⊕ other`.
    ///
    /// The last term of `self` must be at least the first term of `other`.
    /// Violations can only come from a bug in the recursion, so the check
    /// is a debug assertion.
    pub fn concat(&self, other: &SignedSequence) -> SignedSequence {
        if let (Some(tail), Some(head)) = (self.last(), other.first()) {
            debug_assert!(
                tail >= head,
                "concatenation would break the order: last term {tail} < first term {head}"
            );
        }
        let mut terms = Vec::with_capacity(self.len() + other.len());
        terms.extend_from_slice(&self.0);
        terms.extend_from_slice(&other.0);
        SignedSequence(terms)
    }

    /// `(a_1, ..., a_u) -> (-a_u, ..., -a_1)`.
    pub fn negative_reverse(&self) -> SignedSequence {
        SignedSequence(self.0.iter().rev().map(|&a| -a).collect())
    }

    /// The strictly positive terms, in order.
    pub fn positive_part(&self) -> SignedSequence {
        SignedSequence(self.0.iter().copied().filter(|&a| a > 0).collect())
    }

    /// The strictly negative terms, in order.
    pub fn negative_part(&self) -> SignedSequence {
        SignedSequence(self.0.iter().copied().filter(|&a| a < 0).collect())
    }

    /// Adds `k` to every term.
    pub fn shift(&self, k: i64) -> SignedSequence {
        SignedSequence(self.0.iter().map(|&a| a + k).collect())
    }
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// The Jordan partition `λ(m, n, p)`: the dimensions of the indecomposable
/// summands of `V_m ⊗ V_n` in characteristic `p`. Factors are stored with
/// `m <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanPartition {
    parts: Vec<u64>,
    m: u64,
    n: u64,
    p: Prime,
}

impl JordanPartition {
    /// Builds a partition for the factors `(m, n)` (either order), checking
    /// that it has `min(m, n)` positive nonincreasing parts summing to `m*n`
    /// with `max(m, n) <= λ_1 <= m + n - 1`.
    pub fn new(parts: Vec<u64>, m: u64, n: u64, p: Prime) -> Result<Self> {
        let (m, n) = (m.min(n), m.max(n));
        let invalid = |reason| Error::InvalidPartition {
            parts: parts.clone(),
            m,
            n,
            reason,
        };
        if m == 0 {
            return Err(Error::ZeroArgument("m"));
        }
        if parts.len() as u64 != m {
            return Err(invalid("number of parts differs from min(m, n)"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(invalid("parts are not nonincreasing"));
        }
        if parts.contains(&0) {
            return Err(invalid("parts must be positive"));
        }
        if parts.iter().sum::<u64>() != m * n {
            return Err(invalid("parts do not sum to m*n"));
        }
        let top = parts[0];
        if top > m + n - 1 || top < n {
            return Err(invalid("largest part outside [max(m,n), m+n-1]"));
        }
        Ok(JordanPartition { parts, m, n, p })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The smaller factor.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The larger factor.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn is_standard(&self) -> bool {
        is_standard(self)
    }
}

impl fmt::Display for JordanPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

/// `λ_i = m + n - 2i + 1` for every `1 <= i <= m`.
pub fn is_standard(lp: &JordanPartition) -> bool {
    let total = lp.m + lp.n;
    lp.parts
        .iter()
        .enumerate()
        .all(|(i, &part)| part + 2 * i as u64 + 1 == total)
}
