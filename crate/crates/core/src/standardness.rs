//! Standardness deciders.
//!
//! `λ(m, n, p)` is standard when `λ_i = m + n - 2i + 1` for every part.
//! Three routes are provided: the definition applied to the computed
//! partition, a recursive criterion that follows the case dispatch without
//! materializing sequences, and closed-form membership tests for `m < p`
//! and `p^t <= m < p^(t+1)` (odd `p` only).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::{floor_power, Prime};
use crate::recursion::{self, dispatch, radix_form, Case, CaseTrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Direct,
    Proposition1,
    Theorem1,
    Theorem2,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Direct => "direct",
            Criterion::Proposition1 => "proposition1",
            Criterion::Theorem1 => "theorem1",
            Criterion::Theorem2 => "theorem2",
        })
    }
}

/// `m = i p^t + x`, `n = j p^t + y + kshift p^(t+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Theorem2Form {
    pub t: u32,
    pub i: u64,
    pub x: u64,
    pub j: u64,
    pub y: u64,
    pub kshift: u64,
}

impl Theorem2Form {
    pub fn m(&self, p: Prime) -> u64 {
        self.i * p.get().pow(self.t) + self.x
    }

    pub fn n(&self, p: Prime) -> u64 {
        let pt = p.get().pow(self.t);
        self.j * pt + self.y + self.kshift * pt * p.get()
    }

    /// Checks every constraint on the form and that it writes `(m, n)`.
    pub fn validates(&self, m: u64, n: u64, p: Prime) -> bool {
        if self.t == 0 || !p.is_odd() {
            return false;
        }
        let p = p.get();
        let Some(pt) = p.checked_pow(self.t) else {
            return false;
        };
        let halves = [(pt - 1) / 2, pt.div_ceil(2)];
        let prime = Prime::new(p).expect("already a prime");
        halves.contains(&self.x)
            && halves.contains(&self.y)
            && (1..=(p - 1) / 2).contains(&self.i)
            && self.i <= self.j
            && self.j + self.i < p
            && self.m(prime) == m
            && self.n(prime) == n
            && m <= n
    }
}

/// Which part of a membership set matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "set", rename_all = "lowercase")]
pub enum Witness {
    /// `(k, d)` with `1 <= k <= d <= p + 1 - k`.
    S1 {
        k: u64,
        d: u64,
    },
    /// `(k, b p + d)` with `b >= 1`, `k <= (p+1)/2`, `k - 1 <= d <= p + 1 - k`.
    S2 {
        k: u64,
        b: u64,
        d: u64,
    },
    Theorem2(Theorem2Form),
}

impl Witness {
    pub fn validates(&self, m: u64, n: u64, p: Prime) -> bool {
        let q = p.get();
        match *self {
            Witness::S1 { k, d } => {
                p.is_odd() && k < q && (k, d) == (m, n) && 1 <= k && k <= d && d + k <= q + 1
            }
            Witness::S2 { k, b, d } => {
                p.is_odd()
                    && k < q
                    && k == m
                    && b >= 1
                    && d < q
                    && b * q + d == n
                    && 1 <= k
                    && 2 * k <= q + 1
                    && k <= d + 1
                    && d + k <= q + 1
            }
            Witness::Theorem2(form) => form.validates(m, n, p),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::S1 { k, d } => write!(f, "S1: k={k} d={d}"),
            Witness::S2 { k, b, d } => write!(f, "S2: k={k} b={b} d={d}"),
            Witness::Theorem2(w) => write!(
                f,
                "t={} i={} x={} j={} y={} k={}",
                w.t, w.i, w.x, w.j, w.y, w.kshift
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub standard: bool,
    pub criterion: Criterion,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<CaseTrace>,
}

impl Verdict {
    fn new(standard: bool, criterion: Criterion, witness: Option<Witness>) -> Self {
        Verdict {
            standard,
            criterion,
            witness,
            trace: None,
        }
    }

    /// Attaches the case trace of `s_p(m, n)`.
    pub fn with_trace(mut self, m: u64, n: u64, p: Prime) -> Result<Self> {
        self.trace = Some(recursion::signed_sequence_traced(m, n, p)?.1);
        Ok(self)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.standard {
            f.write_str("not ")?;
        }
        match &self.witness {
            Some(w) => write!(f, "standard ({}: {w})", self.criterion),
            None => write!(f, "standard ({})", self.criterion),
        }
    }
}

fn ordered(m: u64, n: u64) -> Result<(u64, u64)> {
    let (m, n) = (m.min(n), m.max(n));
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    Ok((m, n))
}

/// Applies the definition to `λ(m, n, p)`. Any prime.
pub fn standard_direct(m: u64, n: u64, p: Prime) -> Result<bool> {
    let (m, n) = ordered(m, n)?;
    Ok(recursion::jordan_partition(m, n, p)?.is_standard())
}

pub fn direct_verdict(m: u64, n: u64, p: Prime) -> Result<Verdict> {
    Ok(Verdict::new(
        standard_direct(m, n, p)?,
        Criterion::Direct,
        None,
    ))
}

/// The recursive case-by-case criterion. Any prime.
pub fn standard_prop1(m: u64, n: u64, p: Prime) -> Result<bool> {
    let (m, n) = ordered(m, n)?;
    if m + n > recursion::MAX_SUM {
        return Err(Error::TooLarge { sum: m + n });
    }
    prop1(m, n, p)
}

fn prop1(m: u64, n: u64, p: Prime) -> Result<bool> {
    debug_assert!(m <= n);
    if m == 0 {
        return Ok(true);
    }
    let r = radix_form(m, n, p)?;
    let pk = r.pk;
    Ok(match dispatch(m, n, &r, p)? {
        Case::One => {
            let q = r.next_power(p);
            m + n - q == 1 && prop1(q - n, q - m, p)?
        }
        Case::Two => {
            let h = (r.a + r.b + 1) * pk;
            r.c + r.d - pk == 1 && prop1(h - n, h - m, p)?
        }
        Case::Three => {
            debug_assert!(r.c.max(r.d) > 0);
            let h = (r.a + r.b) * pk;
            r.c.abs_diff(r.d) <= 1
                && prop1(r.c.min(r.d), r.c.max(r.d), p)?
                && prop1(h - n, h - m, p)?
        }
        Case::Four => prop1(m, r.b * pk - r.d, p)?,
        Case::Five => m == 1,
        Case::Six => r.k == 0,
        Case::Base => unreachable!("dispatch never selects the base case"),
    })
}

fn out_of_range(m: u64, n: u64, p: Prime, criterion: &'static str, reason: &'static str) -> Error {
    Error::OutOfTheoremRange {
        m,
        n,
        p: p.get(),
        criterion,
        reason,
    }
}

/// Membership in `S_1 ∪ S_2` for `1 <= m < p`, odd `p`.
pub fn theorem1_member(m: u64, n: u64, p: Prime) -> Result<Verdict> {
    let (m, n) = ordered(m, n)?;
    let q = p.get();
    if !p.is_odd() {
        return Err(out_of_range(m, n, p, "theorem1", "p must be odd"));
    }
    if m >= q {
        return Err(out_of_range(m, n, p, "theorem1", "m must be below p"));
    }
    let witness = if n + m <= q + 1 {
        Some(Witness::S1 { k: m, d: n })
    } else if n >= q {
        let (b, d) = (n / q, n % q);
        (2 * m <= q + 1 && m <= d + 1 && d + m <= q + 1).then_some(Witness::S2 { k: m, b, d })
    } else {
        None
    };
    Ok(Verdict::new(
        witness.is_some(),
        Criterion::Theorem1,
        witness,
    ))
}

/// Membership in the set of `Theorem2Form`s for `p^t <= m < p^(t+1)`,
/// `t >= 1`, odd `p`.
pub fn theorem2_member(m: u64, n: u64, p: Prime) -> Result<Verdict> {
    let (m, n) = ordered(m, n)?;
    let q = p.get();
    if !p.is_odd() {
        return Err(out_of_range(m, n, p, "theorem2", "p must be odd"));
    }
    if m < q {
        return Err(out_of_range(m, n, p, "theorem2", "m must be at least p"));
    }
    let (t, pt) = floor_power(m, p);
    let halves = [(pt - 1) / 2, pt.div_ceil(2)];
    let (i, x) = (m / pt, m % pt);
    let block = pt * q;
    let (kshift, rem) = (n / block, n % block);
    let (j, y) = (rem / pt, rem % pt);
    let member = halves.contains(&x)
        && halves.contains(&y)
        && (1..=(q - 1) / 2).contains(&i)
        && i <= j
        && i + j < q;
    let witness = member.then_some(Witness::Theorem2(Theorem2Form {
        t,
        i,
        x,
        j,
        y,
        kshift,
    }));
    Ok(Verdict::new(member, Criterion::Theorem2, witness))
}

/// Routes to the closed-form test matching the size of `min(m, n)`.
pub fn classify(m: u64, n: u64, p: Prime) -> Result<Verdict> {
    if !p.is_odd() {
        return Err(Error::ClassificationOpen);
    }
    let (m, n) = ordered(m, n)?;
    if m < p.get() {
        theorem1_member(m, n, p)
    } else {
        theorem2_member(m, n, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp_oracle::tensor_jordan_type;
    use proptest::prelude::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn direct_examples() {
        assert!(standard_direct(2, 3, p(5)).unwrap());
        assert!(!standard_direct(3, 4, p(5)).unwrap());
        for (n, q) in [(1, 2), (9, 3), (40, 7), (121, 11)] {
            assert!(standard_direct(1, n, p(q)).unwrap());
        }
        assert!(standard_direct(0, 3, p(3)).is_err());
    }

    #[test]
    fn prop1_examples() {
        assert!(!standard_prop1(6, 7, p(5)).unwrap());
        assert!(standard_prop1(2, 2, p(3)).unwrap());
        assert!(standard_prop1(1, 1, p(2)).unwrap());
        assert_eq!(tensor_jordan_type(2, 2, p(3)).unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn theorem1_examples() {
        let v = theorem1_member(2, 4, p(5)).unwrap();
        assert!(v.standard);
        assert_eq!(v.witness, Some(Witness::S1 { k: 2, d: 4 }));
        let v = theorem1_member(2, 7, p(5)).unwrap();
        assert_eq!(v.witness, Some(Witness::S2 { k: 2, b: 1, d: 2 }));
        assert!(standard_direct(2, 7, p(5)).unwrap());
        assert!(!theorem1_member(3, 4, p(5)).unwrap().standard);
        assert!(matches!(
            theorem1_member(5, 6, p(5)),
            Err(Error::OutOfTheoremRange { .. })
        ));
        assert!(matches!(
            theorem1_member(1, 6, p(2)),
            Err(Error::OutOfTheoremRange { .. })
        ));
    }

    #[test]
    fn theorem2_examples() {
        let v = theorem2_member(4, 5, p(3)).unwrap();
        let form = Theorem2Form {
            t: 1,
            i: 1,
            x: 1,
            j: 1,
            y: 2,
            kshift: 0,
        };
        assert_eq!(v.witness, Some(Witness::Theorem2(form)));
        assert_eq!(
            tensor_jordan_type(4, 5, p(3)).unwrap().parts(),
            &[8, 6, 4, 2]
        );
        let v = theorem2_member(4, 14, p(3)).unwrap();
        assert!(matches!(
            v.witness,
            Some(Witness::Theorem2(Theorem2Form { kshift: 1, .. }))
        ));
        assert!(tensor_jordan_type(4, 14, p(3)).unwrap().is_standard());
        for n in 3..60 {
            assert!(!theorem2_member(3, n, p(3)).unwrap().standard);
        }
        assert!(matches!(
            theorem2_member(2, 6, p(3)),
            Err(Error::OutOfTheoremRange { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let v = classify(2, 4, p(5)).unwrap();
        assert!(v.standard);
        assert_eq!(v.criterion, Criterion::Theorem1);
        let v = classify(5, 5, p(3)).unwrap();
        assert!(v.standard);
        assert_eq!(v.criterion, Criterion::Theorem2);
        assert_eq!(
            tensor_jordan_type(5, 5, p(3)).unwrap().parts(),
            &[9, 7, 5, 3, 1]
        );
        let v = classify(9, 10, p(3)).unwrap();
        assert!(!v.standard);
        assert_eq!(classify(2, 2, p(2)), Err(Error::ClassificationOpen));
    }

    #[test]
    fn verdict_rendering() {
        assert_eq!(
            classify(4, 5, p(3)).unwrap().to_string(),
            "standard (theorem2: t=1 i=1 x=1 j=1 y=2 k=0)"
        );
        assert_eq!(
            classify(3, 7, p(3)).unwrap().to_string(),
            "not standard (theorem2)"
        );
        assert_eq!(
            direct_verdict(2, 2, p(2)).unwrap().to_string(),
            "not standard (direct)"
        );
        let json = serde_json::to_string(&classify(2, 7, p(5)).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"standard":true,"criterion":"theorem1","witness":{"set":"s2","k":2,"b":1,"d":2}}"#
        );
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, classify(2, 7, p(5)).unwrap());
    }

    #[test]
    fn trace_is_attached_on_request() {
        let v = direct_verdict(6, 7, p(5))
            .unwrap()
            .with_trace(6, 7, p(5))
            .unwrap();
        assert_eq!(v.trace.unwrap().entries()[0].case, Case::Three);
    }

    #[test]
    fn three_way_agreement_on_small_grid() {
        for q in [3u64, 5, 7] {
            for m in 1..=30 {
                for n in m..=40 {
                    let direct = standard_direct(m, n, p(q)).unwrap();
                    assert_eq!(standard_prop1(m, n, p(q)).unwrap(), direct, "({m},{n},{q})");
                    let v = classify(m, n, p(q)).unwrap();
                    assert_eq!(v.standard, direct, "({m},{n},{q})");
                    if let Some(w) = v.witness {
                        assert!(w.validates(m, n, p(q)));
                    }
                }
            }
        }
    }

    #[test]
    fn prop1_matches_direct_for_two() {
        for m in 1..=40 {
            for n in m..=60 {
                assert_eq!(
                    standard_prop1(m, n, p(2)).unwrap(),
                    standard_direct(m, n, p(2)).unwrap()
                );
            }
        }
    }

    #[test]
    fn lemma1_family() {
        for q in [3u64, 5, 7] {
            for m in 1..q {
                for n in 1..q {
                    assert_eq!(standard_direct(m, n, p(q)).unwrap(), m + n <= q + 1);
                }
            }
        }
    }

    fn halves(pt: u64) -> [u64; 2] {
        [(pt - 1) / 2, pt.div_ceil(2)]
    }

    #[test]
    fn lemma2_families() {
        for q in [3u64, 5, 7] {
            for t in 1..=2 {
                let pt = q.pow(t);
                for x in halves(pt) {
                    for y in halves(pt) {
                        if x <= y {
                            for i in 0..=(q - 1) / 2 {
                                assert!(standard_direct(i * pt + x, i * pt + y, p(q)).unwrap());
                            }
                        }
                        for b in 1..q {
                            assert!(standard_direct(x, b * pt + y, p(q)).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma3_family() {
        for q in [2u64, 3, 5] {
            for t in 1..=3 {
                let pt = q.pow(t);
                for m in 1..pt.min(40) {
                    for f in 1..=(200 / pt) {
                        let parts = recursion::jordan_partition(m, f * pt, p(q)).unwrap();
                        assert!(parts.parts().iter().all(|&x| x == f * pt));
                    }
                }
            }
        }
    }

    #[test]
    fn lemma4_family() {
        for q in [3u64, 5, 7] {
            for t in 1..=2 {
                let pt = q.pow(t);
                for n in pt..=200 {
                    assert!(!standard_direct(pt, n, p(q)).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn classify_agrees_with_direct(
            q in prop::sample::select(vec![3u64, 5, 7, 11]),
            m in 1u64..400,
            extra in 0u64..400,
        ) {
            let n = m + extra;
            let v = classify(m, n, p(q)).unwrap();
            prop_assert_eq!(v.standard, standard_direct(m, n, p(q)).unwrap());
            prop_assert_eq!(v.standard, standard_prop1(m, n, p(q)).unwrap());
            prop_assert_eq!(v.witness.is_some(), v.standard);
            if let Some(w) = v.witness {
                prop_assert!(w.validates(m, n, p(q)));
            }
        }

        #[test]
        fn argument_order_is_irrelevant(
            q in prop::sample::select(vec![2u64, 3, 5]),
            m in 1u64..200,
            n in 1u64..200,
        ) {
            prop_assert_eq!(standard_direct(m, n, p(q)).unwrap(), standard_direct(n, m, p(q)).unwrap());
            prop_assert_eq!(standard_prop1(m, n, p(q)).unwrap(), standard_prop1(n, m, p(q)).unwrap());
        }

        #[test]
        fn theorem2_forms_are_standard(
            q in prop::sample::select(vec![3u64, 5, 7]),
            t in 1u32..3,
            seed in any::<(u64, u64, bool, bool, u64)>(),
        ) {
            let pt = q.pow(t);
            let (si, sj, sx, sy, k) = seed;
            let i = 1 + si % ((q - 1) / 2);
            let j = i + sj % (q - 2 * i);
            let x = halves(pt)[sx as usize];
            let y = halves(pt)[sy as usize];
            let form = Theorem2Form { t, i, x, j, y, kshift: k % 4 };
            let (m, n) = (form.m(p(q)), form.n(p(q)));
            prop_assume!(m <= n);
            prop_assert!(form.validates(m, n, p(q)));
            prop_assert!(standard_direct(m, n, p(q)).unwrap());
            let v = theorem2_member(m, n, p(q)).unwrap();
            prop_assert_eq!(v.witness, Some(Witness::Theorem2(form)));
        }
    }
}
