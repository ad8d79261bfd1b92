//! Two classifications of a numeral, side by side.
//!
//! [`sergeyev_class`] applies the *syntactic* rules verbatim: finite means
//! "exactly one term, its grosspower zero", infinite means "some grosspower
//! positive", infinitesimal means "all grosspowers negative".  Read
//! literally, the rules have a gap — `1 + ①⁻¹` matches no clause — which the
//! [`SyntacticClass::Unclassified`] bucket records instead of papering over.
//!
//! [`semantic_class`] asks the order engine what the value actually does as
//! the base grows.  The two disagree on famous witnesses: `①^(①⁻¹)` is
//! syntactically infinite (its grosspower `①⁻¹` is positive) yet its value
//! tends to 1, and `①^(①⁻¹) − 1` is syntactically infinite yet
//! infinitesimally small.  Both classifications are exposed so the
//! divergence is a first-class, testable fact.

use num_traits::Zero;

use crate::numeral::Numeral;
use crate::{order, Config, Result};

/// Verbatim syntactic classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntacticClass {
    Finite,
    Infinite,
    Infinitesimal,
    /// The literal rules match no clause (including for the zero numeral).
    Unclassified,
}

/// Classification by eventual value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticClass {
    Zero,
    Infinitesimal,
    FiniteNonzero,
    Infinite,
}

impl std::fmt::Display for SyntacticClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SyntacticClass::Finite => "Finite",
            SyntacticClass::Infinite => "Infinite",
            SyntacticClass::Infinitesimal => "Infinitesimal",
            SyntacticClass::Unclassified => "Unclassified",
        };
        f.write_str(s)
    }
}

impl std::fmt::Display for SemanticClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SemanticClass::Zero => "Zero",
            SemanticClass::Infinitesimal => "Infinitesimal",
            SemanticClass::FiniteNonzero => "FiniteNonzero",
            SemanticClass::Infinite => "Infinite",
        };
        f.write_str(s)
    }
}

/// The syntactic rules, applied to the grosspowers of `t`.
///
/// With `cfg.sergeyev_finite_inclusive` set, the finite clause additionally
/// accepts numerals whose single zero grosspower is accompanied only by
/// negative ones (the inclusive reading of the same text).
///
/// Grosspower signs are decided by the order engine; `Undecided` propagates.
pub fn sergeyev_class(t: &Numeral, cfg: &Config) -> Result<SyntacticClass> {
    let signs: Vec<order::Sign> = t
        .terms()
        .iter()
        .map(|term| order::sign(term.power(), cfg))
        .collect::<Result<_>>()?;

    let finite = if cfg.sergeyev_finite_inclusive {
        signs.iter().filter(|s| **s == order::Sign::Zero).count() == 1
            && signs.iter().all(|s| *s != order::Sign::Positive)
            && !t.is_zero()
    } else {
        t.terms().len() == 1 && signs[0] == order::Sign::Zero
    };
    if finite {
        return Ok(SyntacticClass::Finite);
    }
    if signs.iter().any(|s| *s == order::Sign::Positive) {
        return Ok(SyntacticClass::Infinite);
    }
    if !t.is_zero() && signs.iter().all(|s| *s == order::Sign::Negative) {
        return Ok(SyntacticClass::Infinitesimal);
    }
    Ok(SyntacticClass::Unclassified)
}

/// Classification by the limit of the value under a growing base.
pub fn semantic_class(t: &Numeral, cfg: &Config) -> Result<SemanticClass> {
    if t.is_zero() {
        return Ok(SemanticClass::Zero);
    }
    Ok(match order::limit(t, cfg)? {
        order::ExtendedLimit::PositiveInfinity | order::ExtendedLimit::NegativeInfinity => {
            SemanticClass::Infinite
        }
        order::ExtendedLimit::Finite(r) if r.is_zero() => SemanticClass::Infinitesimal,
        order::ExtendedLimit::Finite(_) => SemanticClass::FiniteNonzero,
    })
}
