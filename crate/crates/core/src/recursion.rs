//! The six-case recursion for `s_p(m, n)`.
//!
//! For `0 < m <= n` let `p^k <= n < p^(k+1)`, `n = b p^k + d` and
//! `m = a p^k + c`. The sequence is `s_1 ⊕ s_2 ⊕ s̄_1` where `s_1`, `s_2`
//! depend on which of six mutually exclusive cases holds; `s_p(0, n)` is
//! `n` zeros. The positive part of `s_p(m, n)` is the Jordan partition
//! `λ(m, n, p)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::{floor_power, Prime};
use crate::seqcore::{JordanPartition, SignedSequence};

/// Largest admissible `m + n`.
pub const MAX_SUM: u64 = (1 << 31) - 1;

/// Digits of `(m, n)` relative to the leading power of `p` in `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RadixForm {
    /// `p^k <= n < p^(k+1)`.
    pub k: u32,
    /// `p^k`.
    pub pk: u64,
    /// Leading digit of `m`, `0 <= a < p`.
    pub a: u64,
    /// Leading digit of `n`, `0 < b < p`.
    pub b: u64,
    /// `m mod p^k`.
    pub c: u64,
    /// `n mod p^k`.
    pub d: u64,
}

impl RadixForm {
    /// `p^(k+1)`, saturating. A saturated value exceeds any admissible `m + n`.
    pub fn next_power(&self, p: Prime) -> u64 {
        self.pk.saturating_mul(p.get())
    }
}

/// Decomposes `n = b p^k + d`, `m = a p^k + c`.
pub fn radix_form(m: u64, n: u64, p: Prime) -> Result<RadixForm> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    if m > n {
        return Err(Error::Unordered { m, n });
    }
    let (k, pk) = floor_power(n, p);
    Ok(RadixForm {
        k,
        pk,
        a: m / pk,
        b: n / pk,
        c: m % pk,
        d: n % pk,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Base,
    One,
    Two,
    Three,
    Four,
    Five,
    Six,
}

impl Case {
    pub fn number(self) -> Option<u8> {
        match self {
            Case::Base => None,
            Case::One => Some(1),
            Case::Two => Some(2),
            Case::Three => Some(3),
            Case::Four => Some(4),
            Case::Five => Some(5),
            Case::Six => Some(6),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(i) => write!(f, "case {i}"),
            None => f.write_str("base"),
        }
    }
}

/// Selects the case for `0 < m <= n`. Every predicate is evaluated so
/// that overlap or a gap in the case list surfaces as an error.
pub fn dispatch(m: u64, n: u64, r: &RadixForm, p: Prime) -> Result<Case> {
    let q = r.next_power(p);
    let small = m + n <= q;
    let cd = r.c + r.d;
    let mid = small && cd >= 1 && cd <= r.pk;
    let candidates = [
        (Case::One, m + n > q),
        (Case::Two, small && cd > r.pk),
        (Case::Three, mid && r.a > 0),
        (Case::Four, mid && r.a == 0 && r.d > 0),
        (Case::Five, mid && r.a == 0 && r.d == 0),
        (Case::Six, small && r.c == 0 && r.d == 0),
    ];
    let mut hits = candidates
        .iter()
        .filter(|(_, hit)| *hit)
        .map(|(case, _)| *case);
    match (hits.next(), hits.next()) {
        (Some(case), None) => Ok(case),
        (None, _) => Err(Error::Internal(format!(
            "no case applies to ({m}, {n}), p = {p}"
        ))),
        (Some(a), Some(b)) => Err(Error::Internal(format!(
            "{a} and {b} both apply to ({m}, {n}), p = {p}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub depth: usize,
    pub m: u64,
    pub n: u64,
    pub case: Case,
    /// Absent for the base case.
    pub radix: Option<RadixForm>,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({},{}) {}", self.depth, self.m, self.n, self.case)?;
        if let Some(r) = &self.radix {
            write!(f, " k={} a={} b={} c={} d={}", r.k, r.a, r.b, r.c, r.d)?;
        }
        Ok(())
    }
}

/// Recursive calls in pre-order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTrace {
    entries: Vec<TraceEntry>,
}

impl CaseTrace {
    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    /// Index of the entry that made the call recorded at `index`.
    pub fn parent(&self, index: usize) -> Option<usize> {
        let depth = self.entries.get(index)?.depth;
        if depth == 0 {
            return None;
        }
        self.entries[..index]
            .iter()
            .rposition(|e| e.depth + 1 == depth)
    }
}

fn check_arguments(m: u64, n: u64) -> Result<(u64, u64)> {
    let (m, n) = (m.min(n), m.max(n));
    if m.saturating_add(n) > MAX_SUM {
        return Err(Error::TooLarge {
            sum: m.saturating_add(n),
        });
    }
    Ok((m, n))
}

/// `s_p(m, n)`. Arguments are accepted in either order.
pub fn signed_sequence(m: u64, n: u64, p: Prime) -> Result<SignedSequence> {
    let (m, n) = check_arguments(m, n)?;
    build(m, n, p, 0, None)
}

/// `s_p(m, n)` together with the case taken at every recursive call.
pub fn signed_sequence_traced(m: u64, n: u64, p: Prime) -> Result<(SignedSequence, CaseTrace)> {
    let (m, n) = check_arguments(m, n)?;
    let mut entries = Vec::new();
    let seq = build(m, n, p, 0, Some(&mut entries))?;
    Ok((seq, CaseTrace { entries }))
}

fn term(v: u64) -> i64 {
    // bounded by MAX_SUM-derived quantities, see check_arguments
    v as i64
}

fn build(
    m: u64,
    n: u64,
    p: Prime,
    depth: usize,
    mut trace: Option<&mut Vec<TraceEntry>>,
) -> Result<SignedSequence> {
    debug_assert!(m <= n);
    if m == 0 {
        if let Some(t) = trace {
            t.push(TraceEntry {
                depth,
                m,
                n,
                case: Case::Base,
                radix: None,
            });
        }
        return Ok(SignedSequence::constant(0, n as usize));
    }

    let r = radix_form(m, n, p)?;
    let case = dispatch(m, n, &r, p)?;
    if let Some(t) = trace.as_deref_mut() {
        t.push(TraceEntry {
            depth,
            m,
            n,
            case,
            radix: Some(r),
        });
    }
    let depth = depth + 1;
    let pk = r.pk;

    let (s1, s2) = match case {
        Case::One => {
            let q = r.next_power(p);
            let s1 = SignedSequence::constant(term(q), (m + n - q) as usize);
            let s2 = build(q - n, q - m, p, depth, trace)?;
            (s1, s2)
        }
        Case::Two => {
            let h = (r.a + r.b + 1) * pk;
            let s1 = SignedSequence::constant(term(h), (r.c + r.d - pk) as usize);
            let s2 = build(h - n, h - m, p, depth, trace)?;
            (s1, s2)
        }
        Case::Three => {
            let h = (r.a + r.b) * pk;
            let (lo, hi) = (r.c.min(r.d), r.c.max(r.d));
            let s1 = build(lo, hi, p, depth, trace.as_deref_mut())?.shift(term(h));
            let s2 = build(h - n, h - m, p, depth, trace)?;
            (s1, s2)
        }
        Case::Four => {
            let inner = build(m, r.b * pk - r.d, p, depth, trace)?;
            let s1 = inner.negative_part().shift(term(2 * r.b * pk));
            (s1, SignedSequence::constant(0, (n - m) as usize))
        }
        Case::Five => {
            let top = r.b * pk;
            (
                SignedSequence::constant(term(top), m as usize),
                SignedSequence::constant(0, (top - m) as usize),
            )
        }
        Case::Six => {
            let s1 = SignedSequence::constant(term((r.a + r.b - 1) * pk), pk as usize);
            let s2 = build((r.a - 1) * pk, (r.b - 1) * pk, p, depth, trace)?;
            (s1, s2)
        }
        Case::Base => unreachable!("dispatch never selects the base case"),
    };

    let out = s1.concat(&s2).concat(&s1.negative_reverse());
    debug_assert_eq!(out.len() as u64, m + n, "length of s_{p}({m}, {n})");
    Ok(out)
}

/// `λ(m, n, p)`: the first `min(m, n)` terms of `s_p(min, max)`.
pub fn jordan_partition(m: u64, n: u64, p: Prime) -> Result<JordanPartition> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let (lo, hi) = (m.min(n), m.max(n));
    let seq = signed_sequence(lo, hi, p)?;
    let parts = seq.terms()[..lo as usize]
        .iter()
        .map(|&t| t as u64)
        .collect();
    JordanPartition::new(parts, lo, hi, p)
}

/// Closed form of `s_p(a p^k, b p^k)` in case 6: the runs
/// `((a+b-1)p^k : p^k) ⊕ ((a+b-3)p^k : p^k) ⊕ ... ⊕ ((b-a+1)p^k : p^k)`,
/// then `(b-a)p^k` zeros, then the negative reverse of the runs.
pub fn case6_closed_form(a: u64, b: u64, k: u32, p: Prime) -> Result<SignedSequence> {
    if a == 0 || a > b || a + b > p.get() {
        return Err(Error::Internal(format!(
            "case 6 closed form needs 0 < a <= b and a + b <= p, got a = {a}, b = {b}, p = {p}"
        )));
    }
    let pk = p
        .get()
        .checked_pow(k)
        .filter(|&pk| (a + b).saturating_mul(pk) <= MAX_SUM)
        .ok_or(Error::TooLarge { sum: u64::MAX })?;
    let mut runs = SignedSequence::empty();
    for i in 0..a {
        let value = (a + b - 1 - 2 * i) * pk;
        runs = runs.concat(&SignedSequence::constant(term(value), pk as usize));
    }
    let zeros = SignedSequence::constant(0, ((b - a) * pk) as usize);
    Ok(runs.concat(&zeros).concat(&runs.negative_reverse()))
}
