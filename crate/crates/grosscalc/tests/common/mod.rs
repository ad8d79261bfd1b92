//! Shared random-numeral generator for the integration suites.
//!
//! Deliberately constrained so that order queries are almost always
//! decidable: numerals of level ≤ 2 with at most 5 terms, grossdigits with
//! numerators and denominators up to 10, and grosspower entries with
//! numerators up to 10 but denominators up to 3 (coarser exponent gaps keep
//! class separations well clear of coefficient noise at small bases).
//! Deterministic via a fixed ChaCha seed.

#![allow(dead_code)]

use grosscalc::segment::{Part, Progression, SetExpr};
use grosscalc::{Config, Numeral};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> BigRational {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> BigRational {
    loop {
        let r = rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A grosspower of level ≤ 1: either a rational constant or a short sum of
/// `c·①^r` terms with rational `r`.
pub fn power(rng: &mut impl Rng, cfg: &Config) -> Numeral {
    if rng.gen_bool(0.4) {
        return Numeral::from_rational(rational(rng, 10, 3));
    }
    let n_terms = rng.gen_range(1..=3);
    let raw = (0..n_terms)
        .map(|_| {
            (
                nonzero_rational(rng, 10, 3),
                Numeral::from_rational(rational(rng, 10, 3)),
            )
        })
        .collect();
    Numeral::from_raw_terms(raw, cfg).expect("level-1 powers fit any sane config")
}

/// A random numeral of level ≤ 2 with ≤ 5 terms.
pub fn numeral(rng: &mut impl Rng, cfg: &Config) -> Numeral {
    let n_terms = rng.gen_range(0..=5);
    let raw = (0..n_terms)
        .map(|_| (nonzero_rational(rng, 10, 10), power(rng, cfg)))
        .collect();
    Numeral::from_raw_terms(raw, cfg).expect("level-2 numerals fit any sane config")
}

/// A pairwise-disjoint union: distinct residues of one common step.
///
/// `max_step` caps the progression step; keep it at or below the smallest
/// base index the caller evaluates at, so the step divides the base and the
/// measure is an exact integer there.
pub fn disjoint_set_expr(rng: &mut impl Rng, max_step: u64) -> SetExpr {
    let step: u64 = rng.gen_range(2..=max_step);
    let count = rng.gen_range(1..=step.min(4)) as usize;
    let mut starts: Vec<u64> = (1..=step).collect();
    starts.shuffle(rng);
    let parts = starts
        .into_iter()
        .take(count)
        .map(|start| Part::Progression(Progression::new(start, step).expect("valid progression")))
        .collect();
    SetExpr::new(parts)
}
