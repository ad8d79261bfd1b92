//! Ring operations on numerals, integer powers, exact division, and the
//! special power laws that tie ① to the identity elements 0 and 1.
//!
//! Everything here reduces to "assemble raw terms, then canonicalize", so the
//! results are always canonical and the only failure modes are the ones
//! canonicalization itself can raise (plus the division- and power-specific
//! errors documented per function).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeral::{Grossdigit, Numeral};
use crate::{order, Config, Error, Result};

/// Digit-wise negation.  Canonicity is preserved (order and distinctness of
/// grosspowers are untouched), so this never fails.
pub fn negate(t: &Numeral) -> Numeral {
    Numeral {
        terms: t
            .terms
            .iter()
            .map(|u| crate::numeral::GrossTerm {
                digit: -u.digit.clone(),
                power: u.power.clone(),
            })
            .collect(),
    }
}

/// Canonical sum of two numerals.
pub fn add(a: &Numeral, b: &Numeral, cfg: &Config) -> Result<Numeral> {
    let mut raw: Vec<(Grossdigit, Numeral)> = Vec::with_capacity(a.terms.len() + b.terms.len());
    for t in a.terms().iter().chain(b.terms()) {
        raw.push((t.digit.clone(), t.power.clone()));
    }
    Numeral::from_raw_terms(raw, cfg)
}

/// Canonical difference `a − b` (addition with negated digits).
pub fn sub(a: &Numeral, b: &Numeral, cfg: &Config) -> Result<Numeral> {
    add(a, &negate(b), cfg)
}

/// Scales every digit by an exact rational constant.
pub fn scale(t: &Numeral, c: &BigRational) -> Numeral {
    if c.is_zero() {
        return Numeral::zero();
    }
    Numeral {
        terms: t
            .terms
            .iter()
            .map(|u| crate::numeral::GrossTerm {
                digit: &u.digit * c,
                power: u.power.clone(),
            })
            .collect(),
    }
}

/// Canonical product: distributes, adds grosspowers pairwise, canonicalizes.
///
/// Grosspower addition happens one level down, so multiplication never raises
/// the level beyond the deeper factor.
pub fn mul(a: &Numeral, b: &Numeral, cfg: &Config) -> Result<Numeral> {
    let mut raw: Vec<(Grossdigit, Numeral)> = Vec::with_capacity(a.terms.len() * b.terms.len());
    for t in a.terms() {
        for u in b.terms() {
            raw.push((
                &t.digit * &u.digit,
                add(&t.power, &u.power, cfg)?,
            ));
        }
    }
    Numeral::from_raw_terms(raw, cfg)
}

/// `t` raised to a non-negative machine integer, by binary exponentiation.
/// `t⁰ = 1` for every `t`, including `0⁰ = 1`.
pub fn int_pow(t: &Numeral, n: u32, cfg: &Config) -> Result<Numeral> {
    let mut result = Numeral::one();
    let mut base = t.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            result = mul(&result, &base, cfg)?;
        }
        n >>= 1;
        if n > 0 {
            base = mul(&base, &base, cfg)?;
        }
    }
    Ok(result)
}

/// Upper bound on the quotient term count before long division gives up.
/// Exact quotients in this fragment are finite; a nonterminating division
/// (e.g. `(① + 1) ÷ (① + 2)`) grows its quotient without bound, and the
/// budget turns that into [`Error::NotExactlyDivisible`].
const DIV_TERM_BUDGET: usize = 64;

/// Exact division.
///
/// A single-term divisor `c·①^p` always divides exactly: each digit is
/// divided by `c` and `p` is subtracted from each grosspower.  For multi-term
/// divisors, long division proceeds in decreasing grosspower order and the
/// quotient is returned only when the remainder reaches exactly zero within
/// [`DIV_TERM_BUDGET`] quotient terms; the result is verified by multiplying
/// back.
pub fn div_exact(a: &Numeral, b: &Numeral, cfg: &Config) -> Result<Numeral> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if b.terms().len() == 1 {
        let d = &b.terms()[0];
        let mut raw: Vec<(Grossdigit, Numeral)> = Vec::with_capacity(a.terms().len());
        for t in a.terms() {
            raw.push((&t.digit / &d.digit, sub(&t.power, &d.power, cfg)?));
        }
        return Numeral::from_raw_terms(raw, cfg);
    }

    let mut remainder = a.clone();
    let mut quotient_raw: Vec<(Grossdigit, Numeral)> = Vec::new();
    let b_lead = &b.terms()[0];
    while !remainder.is_zero() {
        if quotient_raw.len() >= DIV_TERM_BUDGET {
            return Err(Error::NotExactlyDivisible);
        }
        let r_lead = &remainder.terms()[0];
        let q_digit = &r_lead.digit / &b_lead.digit;
        let q_power = sub(&r_lead.power, &b_lead.power, cfg)?;
        let q_term = Numeral::from_raw_terms(vec![(q_digit.clone(), q_power.clone())], cfg)?;
        remainder = sub(&remainder, &mul(&q_term, b, cfg)?, cfg)?;
        quotient_raw.push((q_digit, q_power));
    }
    let quotient = Numeral::from_raw_terms(quotient_raw, cfg)?;
    // The construction guarantees this, but an exactness claim deserves a check.
    if !mul(&quotient, b, cfg)?.equals(a) {
        return Err(Error::NotExactlyDivisible);
    }
    Ok(quotient)
}

/// The special power laws of this fragment.
///
/// Supported combinations, tried in order:
/// 1. `exp` is a non-negative integer constant → [`int_pow`];
/// 2. `base = 0` with `sign(exp) = Positive` → `0`;
/// 3. `base = 1` → `1` for any exponent;
/// 4. `base = 1·①^p` → `①^(p·exp)` for any exponent;
/// 5. anything else → [`Error::NotRepresentable`] (e.g. `2^①` has no
///    numeral form here).
pub fn pow_special(base: &Numeral, exp: &Numeral, cfg: &Config) -> Result<Numeral> {
    if let Some(n) = exp.as_integer_constant() {
        if n.is_zero() || n.is_positive() {
            let n: u32 = n
                .try_into()
                .map_err(|_| Error::NotRepresentable)?;
            return int_pow(base, n, cfg);
        }
    }
    if base.is_zero() {
        return if order::sign(exp, cfg)? == order::Sign::Positive {
            Ok(Numeral::zero())
        } else {
            Err(Error::NotRepresentable)
        };
    }
    if base.equals(&Numeral::one()) {
        return Ok(Numeral::one());
    }
    if base.terms().len() == 1 && base.terms()[0].digit.is_one() {
        let p = &base.terms()[0].power;
        let q = mul(p, exp, cfg)?;
        return Numeral::from_raw_terms(vec![(BigRational::one(), q)], cfg);
    }
    Err(Error::NotRepresentable)
}

/// Convenience: the numeral for an exact rational `num/den`.
pub fn rational(num: i64, den: i64) -> Numeral {
    Numeral::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn g() -> Numeral {
        Numeral::grossone()
    }

    fn cfg() -> Config {
        Config::default()
    }

    /// `①^n` for machine `n`.
    fn gpow(n: i64) -> Numeral {
        Numeral::from_raw_terms(
            vec![(rat(1, 1), Numeral::from_integer(n))],
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn grossone_plus_one_keeps_both_terms() {
        let s = add(&g(), &Numeral::one(), &cfg()).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert!(s.terms()[0].power().equals(&Numeral::one()));
        assert!(s.terms()[1].power().is_zero());
    }

    #[test]
    fn halves_of_grossone_sum_to_grossone() {
        let half = scale(&g(), &rat(1, 2));
        let s = add(&half, &half, &cfg()).unwrap();
        assert!(s.equals(&g()));
    }

    #[test]
    fn cancellation_restores_the_power_numeral() {
        // (①^(①⁻¹) − 1) + 1 = ①^(①⁻¹)
        let a = Numeral::from_raw_terms(vec![(rat(1, 1), gpow(-1))], &cfg()).unwrap();
        let b = sub(&a, &Numeral::one(), &cfg()).unwrap();
        let back = add(&b, &Numeral::one(), &cfg()).unwrap();
        assert!(back.equals(&a));
    }

    #[test]
    fn grossone_minus_grossone_is_zero() {
        assert!(sub(&g(), &g(), &cfg()).unwrap().is_zero());
    }

    #[test]
    fn grossone_times_its_reciprocal_is_one() {
        let p = mul(&g(), &gpow(-1), &cfg()).unwrap();
        assert!(p.equals(&Numeral::one()));
    }

    #[test]
    fn zero_annihilates() {
        assert!(mul(&Numeral::zero(), &g(), &cfg()).unwrap().is_zero());
        assert!(mul(&g(), &Numeral::zero(), &cfg()).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        // (① + 1)·(① − 1) = ①² − 1
        let a = add(&g(), &Numeral::one(), &cfg()).unwrap();
        let b = sub(&g(), &Numeral::one(), &cfg()).unwrap();
        let p = mul(&a, &b, &cfg()).unwrap();
        let expected = sub(&gpow(2), &Numeral::one(), &cfg()).unwrap();
        assert!(p.equals(&expected));
    }

    #[test]
    fn integer_powers() {
        assert!(int_pow(&g(), 0, &cfg()).unwrap().equals(&Numeral::one()));
        assert!(int_pow(&Numeral::zero(), 0, &cfg()).unwrap().equals(&Numeral::one()));
        assert!(int_pow(&g(), 1, &cfg()).unwrap().equals(&g()));

        // (① + 1)² = ①² + 2·① + 1
        let a = add(&g(), &Numeral::one(), &cfg()).unwrap();
        let sq = int_pow(&a, 2, &cfg()).unwrap();
        let expected = Numeral::from_raw_terms(
            vec![
                (rat(1, 1), Numeral::from_integer(2)),
                (rat(2, 1), Numeral::from_integer(1)),
                (rat(1, 1), Numeral::zero()),
            ],
            &cfg(),
        )
        .unwrap();
        assert!(sq.equals(&expected));
    }

    #[test]
    fn division_by_a_finite_natural() {
        // ① ÷ 7 = (1/7)·①
        let q = div_exact(&g(), &Numeral::from_integer(7), &cfg()).unwrap();
        assert!(q.equals(&scale(&g(), &rat(1, 7))));
    }

    #[test]
    fn long_division_recovers_a_factor() {
        // (①² − 1) ÷ (① + 1) = ① − 1
        let num = sub(&gpow(2), &Numeral::one(), &cfg()).unwrap();
        let den = add(&g(), &Numeral::one(), &cfg()).unwrap();
        let q = div_exact(&num, &den, &cfg()).unwrap();
        let expected = sub(&g(), &Numeral::one(), &cfg()).unwrap();
        assert!(q.equals(&expected));
        assert!(mul(&q, &den, &cfg()).unwrap().equals(&num));
    }

    #[test]
    fn nonterminating_division_is_rejected() {
        // (① + 1) ÷ (① + 2) has no finite exact quotient.
        let a = add(&g(), &Numeral::one(), &cfg()).unwrap();
        let b = add(&g(), &Numeral::from_integer(2), &cfg()).unwrap();
        assert_eq!(div_exact(&a, &b, &cfg()), Err(Error::NotExactlyDivisible));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(div_exact(&g(), &Numeral::zero(), &cfg()), Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_divided_by_single_term_is_zero() {
        assert!(div_exact(&Numeral::zero(), &g(), &cfg()).unwrap().is_zero());
    }

    #[test]
    fn special_powers() {
        // 1^① = 1 and 0^① = 0.
        assert!(pow_special(&Numeral::one(), &g(), &cfg()).unwrap().equals(&Numeral::one()));
        assert!(pow_special(&Numeral::zero(), &g(), &cfg()).unwrap().is_zero());
        // ①^0 = 1.
        assert!(pow_special(&g(), &Numeral::zero(), &cfg()).unwrap().equals(&Numeral::one()));
        // (①¹)^(①⁻¹) = ①^(①⁻¹).
        let exp = gpow(-1);
        let a = pow_special(&g(), &exp, &cfg()).unwrap();
        let expected = Numeral::from_raw_terms(vec![(rat(1, 1), exp)], &cfg()).unwrap();
        assert!(a.equals(&expected));
        // 2^① leaves the fragment.
        assert_eq!(
            pow_special(&Numeral::from_integer(2), &g(), &cfg()),
            Err(Error::NotRepresentable)
        );
        // 0 to a non-positive power has no value here.
        assert_eq!(
            pow_special(&Numeral::zero(), &negate(&g()), &cfg()),
            Err(Error::NotRepresentable)
        );
    }

    #[test]
    fn reciprocal_power_via_negative_integer_exponent() {
        // (①²)^(−3) = ①^(−6): negative constant exponents work on pure powers.
        let base = gpow(2);
        let r = pow_special(&base, &Numeral::from_integer(-3), &cfg()).unwrap();
        assert!(r.equals(&gpow(-6)));
    }
}
