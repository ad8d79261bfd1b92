//! The initial segment `𝒩 = {1, …, ①}` and its counting measure.
//!
//! Representable sets are finite unions of arithmetic progressions
//! `{k, k+n, k+2n, …} ∩ 𝒩` and explicit finite integer sets.  Each residue
//! class modulo `n` holds exactly `①/n` elements of the segment — the base is
//! a factorial, hence divisible by every finite natural — so measures are
//! ordinary numerals and additivity over disjoint unions is exact.
//!
//! The segment is *not* closed under successor: `① ∈ 𝒩` but `① + 1 ∉ 𝒩`,
//! and [`successor_in_segment`] turns that boundary into an explicit
//! [`Error::SegmentOverflow`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::numeral::Numeral;
use crate::{arith, order, Config, Error, Result};

/// The arithmetic progression `{start, start+step, start+2·step, …} ∩ 𝒩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Progression {
    start: u64,
    step: u64,
}

impl Progression {
    /// Requires `start ≥ 1` and `step ≥ 1`.
    pub fn new(start: u64, step: u64) -> Option<Progression> {
        if start >= 1 && step >= 1 {
            Some(Progression { start, step })
        } else {
            None
        }
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    fn contains(&self, x: u64) -> bool {
        x >= self.start && (x - self.start) % self.step == 0
    }

    /// Whether two progressions share an element.  Common elements solve a
    /// pair of congruences, which is possible exactly when the starts agree
    /// modulo `gcd(step₁, step₂)`; solutions then recur forever, so some lie
    /// beyond both starts.
    fn intersects(&self, other: &Progression) -> bool {
        let g = self.step.gcd(&other.step);
        self.start % g == other.start % g
    }
}

/// One part of a representable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Progression(Progression),
    /// An explicit finite set of naturals (all ≥ 1).
    FiniteSet(BTreeSet<u64>),
}

impl Part {
    pub(crate) fn contains(&self, x: u64) -> bool {
        match self {
            Part::Progression(p) => p.contains(x),
            Part::FiniteSet(s) => s.contains(&x),
        }
    }

    fn intersects(&self, other: &Part) -> bool {
        match (self, other) {
            (Part::Progression(a), Part::Progression(b)) => a.intersects(b),
            (Part::Progression(p), Part::FiniteSet(s))
            | (Part::FiniteSet(s), Part::Progression(p)) => s.iter().any(|&x| p.contains(x)),
            (Part::FiniteSet(a), Part::FiniteSet(b)) => a.intersection(b).next().is_some(),
        }
    }
}

/// A finite union of parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetExpr {
    parts: Vec<Part>,
}

impl SetExpr {
    pub fn new(parts: Vec<Part>) -> SetExpr {
        SetExpr { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// True when no two parts share an element.
    pub fn pairwise_disjoint(&self) -> bool {
        for (i, a) in self.parts.iter().enumerate() {
            for b in &self.parts[i + 1..] {
                if a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Number of elements of a representable set within `{1, …, ①}`, as a numeral.
///
/// A progression `(k, n)` measures `(1/n)·① − ⌊(k−1)/n⌋`: its residue class
/// fills exactly `①/n` slots of the segment, minus the class members below
/// `k`.  An explicit finite set contributes its cardinality.  Parts must be
/// pairwise disjoint ([`Error::NotDisjoint`] otherwise); the union then
/// measures the sum.
pub fn measure(s: &SetExpr, cfg: &Config) -> Result<Numeral> {
    if !s.pairwise_disjoint() {
        return Err(Error::NotDisjoint);
    }
    let mut total = Numeral::zero();
    for part in s.parts() {
        let m = match part {
            Part::Progression(p) => {
                let per_class = BigRational::new(BigInt::from(1), BigInt::from(p.step));
                let below_start = BigInt::from((p.start - 1) / p.step);
                Numeral::from_raw_terms(
                    vec![
                        (per_class, Numeral::one()),
                        (-BigRational::from_integer(below_start), Numeral::zero()),
                    ],
                    cfg,
                )?
            }
            Part::FiniteSet(set) => Numeral::from_integer(set.len() as i64),
        };
        total = arith::add(&total, &m, cfg)?;
    }
    Ok(total)
}

/// True iff `1 ≤ t ≤ ①`.
pub fn contains_segment(t: &Numeral, cfg: &Config) -> Result<bool> {
    Ok(
        order::compare(t, &Numeral::one(), cfg)? != std::cmp::Ordering::Less
            && order::compare(t, &Numeral::grossone(), cfg)? != std::cmp::Ordering::Greater,
    )
}

/// `t + 1` if that still lies in the segment; [`Error::SegmentOverflow`] at
/// the right edge (`t = ①`), where the segment stops being closed under
/// successor.
pub fn successor_in_segment(t: &Numeral, cfg: &Config) -> Result<Numeral> {
    let succ = arith::add(t, &Numeral::one(), cfg)?;
    if contains_segment(&succ, cfg)? {
        Ok(succ)
    } else {
        Err(Error::SegmentOverflow)
    }
}
