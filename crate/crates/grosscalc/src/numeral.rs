//! The stratified numeral algebra: terms, canonical forms, and levels.
//!
//! A [`Numeral`] is a finite formal sum `Σ cᵢ·①^pᵢ`.  The grossdigits `cᵢ`
//! are nonzero exact rationals and the grosspowers `pᵢ` are themselves
//! canonical numerals, pairwise distinct and ordered strictly decreasing
//! under the order module's comparison.  Zero is the empty sum, which makes
//! equivalences like `0·①⁰ ≡ 0·①¹` hold by construction.
//!
//! The *level* measure breaks the apparent circularity of "grosspowers are
//! numerals": plain rational constants live at level 0, numerals with
//! constant grosspowers at level 1, and each further nesting adds one.  All
//! order queries recurse strictly downward along levels, so canonicalization
//! (which must sort grosspowers) terminates.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{order, Config, Error, Result};

/// An exact rational coefficient of one numeral term.
pub type Grossdigit = BigRational;

/// Nesting depth of grosspowers; constants are level 0.
pub type Level = u32;

/// One summand `digit·①^power` of a numeral.
///
/// In a canonical [`Numeral`] the digit is nonzero and the power is itself
/// canonical with a strictly smaller level than the enclosing numeral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    pub(crate) digit: Grossdigit,
    pub(crate) power: Numeral,
}

impl GrossTerm {
    /// The term's coefficient.
    pub fn digit(&self) -> &Grossdigit {
        &self.digit
    }

    /// The term's grosspower.
    pub fn power(&self) -> &Numeral {
        &self.power
    }
}

/// A canonical numeral: nonzero digits, distinct grosspowers, terms in
/// strictly decreasing grosspower order.  The empty sum is zero.
///
/// Canonical forms are unique, so the derived structural equality coincides
/// with value equality on the supported fragment; that is what [`Numeral::equals`]
/// exposes.  Values are immutable once built — construction always goes
/// through [`Numeral::from_raw_terms`] (or a convenience constructor), which
/// canonicalizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numeral {
    pub(crate) terms: Vec<GrossTerm>,
}

impl Numeral {
    /// The zero numeral (empty sum).
    pub fn zero() -> Self {
        Numeral { terms: Vec::new() }
    }

    /// The numeral `1` (= 1·①⁰).
    pub fn one() -> Self {
        Numeral::from_integer(1)
    }

    /// The numeral ① (= 1·①¹).
    pub fn grossone() -> Self {
        Numeral {
            terms: vec![GrossTerm {
                digit: BigRational::one(),
                power: Numeral::one(),
            }],
        }
    }

    /// A constant numeral `c·①⁰`; zero becomes the empty sum.
    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            Numeral::zero()
        } else {
            Numeral {
                terms: vec![GrossTerm {
                    digit: c,
                    power: Numeral::zero(),
                }],
            }
        }
    }

    /// A constant integer numeral.
    pub fn from_integer(n: i64) -> Self {
        Numeral::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds the canonical numeral for an arbitrary bag of raw terms.
    ///
    /// The raw powers must already be canonical numerals (construction is
    /// bottom-up).  Terms with equal powers are merged by adding digits,
    /// zero digits are dropped, and the survivors are sorted strictly
    /// decreasing by the order module's comparison.
    ///
    /// Errors: [`Error::LevelExceeded`] if the result would nest deeper than
    /// `cfg.max_level`; [`Error::Undecided`] if two distinct grosspowers
    /// cannot be ordered within the expansion budget.
    pub fn from_raw_terms(raw: Vec<(Grossdigit, Numeral)>, cfg: &Config) -> Result<Self> {
        // Merge like powers first so the sort below only ever sees distinct ones.
        let mut buckets: Vec<(Numeral, Grossdigit)> = Vec::new();
        let mut index: HashMap<Numeral, usize> = HashMap::new();
        for (digit, power) in raw {
            match index.get(&power) {
                Some(&i) => {
                    let entry = &mut buckets[i];
                    entry.1 += digit;
                }
                None => {
                    index.insert(power.clone(), buckets.len());
                    buckets.push((power, digit));
                }
            }
        }

        let survivors: Vec<GrossTerm> = buckets
            .into_iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(power, digit)| GrossTerm { digit, power })
            .collect();

        // Insertion sort with the fallible comparator; term counts are small.
        let mut terms: Vec<GrossTerm> = Vec::with_capacity(survivors.len());
        for t in survivors {
            let mut pos = terms.len();
            for (i, u) in terms.iter().enumerate() {
                match order::compare(&t.power, &u.power, cfg)? {
                    std::cmp::Ordering::Greater => {
                        pos = i;
                        break;
                    }
                    std::cmp::Ordering::Equal => {
                        // Distinct canonical powers never compare equal.
                        unreachable!("like powers were merged before sorting")
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
            terms.insert(pos, t);
        }

        let result = Numeral { terms };
        if result.level() > cfg.max_level {
            return Err(Error::LevelExceeded { max: cfg.max_level });
        }
        Ok(result)
    }

    /// The terms in canonical (strictly decreasing grosspower) order.
    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    /// True for the empty sum.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The leading (largest-grosspower) term, if any.
    pub fn leading(&self) -> Option<&GrossTerm> {
        self.terms.first()
    }

    /// Stratification level: 0 for zero and for plain constants `c·①⁰`,
    /// otherwise one more than the deepest grosspower.
    pub fn level(&self) -> Level {
        if self.is_constant() {
            0
        } else {
            1 + self
                .terms
                .iter()
                .map(|t| t.power.level())
                .max()
                .expect("non-constant numerals have terms")
        }
    }

    /// True iff the numeral is 0 or a single term `c·①⁰`.
    pub fn is_constant(&self) -> bool {
        self.as_rational_constant().is_some()
    }

    /// The exact rational value if the numeral is constant (`0` or `c·①⁰`).
    pub fn as_rational_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [t] if t.power.is_zero() => Some(t.digit.clone()),
            _ => None,
        }
    }

    /// The exact integer value if the numeral is an integer constant.
    pub fn as_integer_constant(&self) -> Option<BigInt> {
        let c = self.as_rational_constant()?;
        if c.is_integer() {
            Some(c.to_integer())
        } else {
            None
        }
    }

    /// Syntactic equality of canonical numerals.
    ///
    /// By uniqueness of canonical forms this is also value equality on the
    /// supported fragment.
    pub fn equals(&self, other: &Numeral) -> bool {
        self == other
    }
}
