//! Concrete evaluation at finite factorial bases, with certified intervals.
//!
//! The desk-scale model of the whole system: pick a small `m`, substitute
//! `① ↦ B = m!`, and evaluate.  Factorial bases are essential — they are
//! divisible by every finite natural, so progression measures come out as
//! exact integers at every scale.
//!
//! Terms whose grosspowers are integer constants evaluate exactly in rational
//! arithmetic.  Everything else goes through `digit · exp(power · ln B)` with
//! arbitrary-precision floating endpoints rounded *outward*, so the reported
//! interval always encloses the true real value.  Signs at a finite base are
//! decided by shrinking that interval until zero is excluded — or by an exact
//! rational when possible — and the answer is the *finite-base* sign, which
//! can legitimately differ from the asymptotic sign of the order module (the
//! classic case: `①⁻¹ − 10⁻⁹` is positive at 7! but eventually negative).
//! [`stabilized_sign`] bridges the two by scanning a growing base schedule
//! and trusting only the final run of agreeing bases.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeral::Numeral;
use crate::order::Sign;
use crate::segment::SetExpr;
use crate::{Error, Result};

/// Hard ceiling for [`eval_sign`]'s precision-doubling refinement.
const SIGN_PRECISION_CAP: usize = 4096;

/// Largest base index that [`brute_count`] will enumerate (10! ≈ 3.6·10⁶).
const BRUTE_FORCE_MAX_M: u32 = 10;

/// Integer grosspowers beyond this magnitude skip the exact rational path
/// (the power of `B` would be enormous) and fall back to intervals.
const EXACT_POW_LIMIT: u64 = 20_000;

/// A finite stand-in for the infinite base: `B = m!` exactly, plus the
/// working precision (bits) for interval endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalContext {
    m: u32,
    base: BigUint,
    precision: usize,
}

impl EvalContext {
    /// Requires `m ≥ 2` and `precision ≥ 64`.
    pub fn new(m: u32, precision: usize) -> Option<EvalContext> {
        if m < 2 || precision < 64 {
            return None;
        }
        let mut base = BigUint::one();
        for i in 2..=m {
            base *= BigUint::from(i);
        }
        Some(EvalContext { m, base, precision })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The exact base `m!`.
    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn precision(&self) -> usize {
        self.precision
    }
}

/// A closed interval with arbitrary-precision endpoints, outward-rounded, that
/// encloses the true real value of an evaluated expression.
#[derive(Debug, Clone)]
pub struct Interval {
    lo: BigFloat,
    hi: BigFloat,
}

impl Interval {
    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    /// Exact rational value of the lower endpoint (`None` for ±∞/NaN).
    pub fn lo_rational(&self) -> Option<BigRational> {
        bigfloat_to_rational(&self.lo)
    }

    /// Exact rational value of the upper endpoint (`None` for ±∞/NaN).
    pub fn hi_rational(&self) -> Option<BigRational> {
        bigfloat_to_rational(&self.hi)
    }

    /// Exact width `hi − lo` when both endpoints are finite.
    pub fn width_rational(&self) -> Option<BigRational> {
        Some(self.hi_rational()? - self.lo_rational()?)
    }

    /// Whether the exact rational `r` lies within the interval.  Infinite
    /// endpoints count as unbounded on their side.
    pub fn contains_rational(&self, r: &BigRational) -> bool {
        let lo_ok = if self.lo.is_inf_neg() {
            true
        } else {
            match self.lo_rational() {
                Some(lo) => lo <= *r,
                None => false,
            }
        };
        let hi_ok = if self.hi.is_inf_pos() {
            true
        } else {
            match self.hi_rational() {
                Some(hi) => *r <= hi,
                None => false,
            }
        };
        lo_ok && hi_ok
    }
}

/// Exact rational value of `t` at base `B`, available when every grosspower
/// is a (moderate) integer constant.
pub fn eval_exact(t: &Numeral, ctx: &EvalContext) -> Option<BigRational> {
    let b = BigInt::from(ctx.base.clone());
    let mut sum = BigRational::zero();
    for term in t.terms() {
        let n = term.power().as_integer_constant()?;
        if n.magnitude() > &BigUint::from(EXACT_POW_LIMIT) {
            return None;
        }
        sum += term.digit() * integer_base_power(&b, &n);
    }
    Some(sum)
}

/// `b^n` as an exact rational, for integer `n` of either sign.
fn integer_base_power(b: &BigInt, n: &BigInt) -> BigRational {
    let e = u32::try_from(n.magnitude().clone()).expect("exponent magnitude was bounded");
    let p = b.pow(e);
    if n.is_negative() {
        BigRational::new(BigInt::one(), p)
    } else {
        BigRational::from_integer(p)
    }
}

/// Certified interval enclosure of `t`'s value at base `B = m!`.
///
/// Integer-constant grosspowers are accumulated exactly and converted once;
/// all other terms evaluate as `digit · exp(power · ln B)` with directed
/// rounding at every step.
pub fn eval_interval(t: &Numeral, ctx: &EvalContext) -> Result<Interval> {
    let mut cc = Consts::new().expect("constants cache");
    eval_with_precision(t, ctx, ctx.precision, &mut cc)
}

fn eval_with_precision(
    t: &Numeral,
    ctx: &EvalContext,
    p: usize,
    cc: &mut Consts,
) -> Result<Interval> {
    let b = BigInt::from(ctx.base.clone());
    let mut exact = BigRational::zero();
    let mut inexact: Vec<Interval> = Vec::new();
    for term in t.terms() {
        let integer_power = term
            .power()
            .as_integer_constant()
            .filter(|n| n.magnitude() <= &BigUint::from(EXACT_POW_LIMIT));
        match integer_power {
            Some(n) => exact += term.digit() * integer_base_power(&b, &n),
            None => {
                let power_iv = eval_with_precision(term.power(), ctx, p, cc)?;
                let ln_b = ln_interval(&b, p, cc);
                let exponent = interval_mul(&power_iv, &ln_b, p);
                let grown = interval_exp(&exponent, p, cc);
                let digit_iv = rational_interval(term.digit(), p, cc);
                inexact.push(interval_mul(&digit_iv, &grown, p));
            }
        }
    }
    let mut acc = rational_interval(&exact, p, cc);
    for iv in &inexact {
        acc = interval_add(&acc, iv, p);
    }
    if acc.lo.is_nan() || acc.hi.is_nan() {
        return Err(Error::PrecisionExhausted);
    }
    Ok(acc)
}

/// Sign of `t`'s value at the finite base `B = m!` — not necessarily the
/// asymptotic sign.
///
/// Fully exact numerals are decided in rational arithmetic (including genuine
/// zeros such as `① − 5040` at `m = 7`).  Otherwise the interval is refined
/// by doubling precision until zero is excluded; if the cap is reached first
/// the value may be exactly zero or too small to certify, and the answer is
/// [`Error::PrecisionExhausted`].
pub fn eval_sign(t: &Numeral, ctx: &EvalContext) -> Result<Sign> {
    if t.is_zero() {
        return Ok(Sign::Zero);
    }
    if let Some(v) = eval_exact(t, ctx) {
        return Ok(Sign::of_rational(&v));
    }
    let mut cc = Consts::new().expect("constants cache");
    let cap = SIGN_PRECISION_CAP.max(ctx.precision);
    let mut p = ctx.precision;
    loop {
        let iv = eval_with_precision(t, ctx, p, &mut cc)?;
        let zero = BigFloat::from_word(0, 1);
        if let Some(c) = iv.lo.cmp(&zero) {
            if c > 0 {
                return Ok(Sign::Positive);
            }
        }
        if let Some(c) = iv.hi.cmp(&zero) {
            if c < 0 {
                return Ok(Sign::Negative);
            }
        }
        if p >= cap {
            return Err(Error::PrecisionExhausted);
        }
        p = (p * 2).min(cap);
    }
}

/// Counts the elements of `s` within `{1, …, B}` by direct enumeration.
/// Union semantics: overlapping parts are not double-counted.
pub fn brute_count(s: &SetExpr, ctx: &EvalContext) -> Result<u64> {
    if ctx.m > BRUTE_FORCE_MAX_M {
        return Err(Error::BudgetExceeded);
    }
    let b = u64::try_from(ctx.base.clone()).expect("10! fits in a machine word");
    let mut count = 0u64;
    for x in 1..=b {
        if s.parts().iter().any(|part| part.contains(x)) {
            count += 1;
        }
    }
    Ok(count)
}

/// The sign that a growing base schedule settles on.
///
/// Evaluates [`eval_sign`] at each base of `schedule` and returns the sign of
/// the *final* run of agreeing bases, provided that run is at least two long;
/// `None` means the schedule never settled.  Early agreement alone cannot be
/// trusted — small bases can agree on a sign that later flips (`①⁻¹ − 10⁻⁹`
/// is positive at 7! and 10! but negative from 14! on) — so only the tail
/// run counts.
pub fn stabilized_sign(
    t: &Numeral,
    schedule: &[u32],
    precision: usize,
) -> Result<Option<Sign>> {
    let mut signs = Vec::with_capacity(schedule.len());
    for &m in schedule {
        let ctx = EvalContext::new(m, precision).expect("schedule bases must be at least 2");
        signs.push(eval_sign(t, &ctx)?);
    }
    let last = match signs.last() {
        Some(s) => *s,
        None => return Ok(None),
    };
    let run = signs.iter().rev().take_while(|s| **s == last).count();
    Ok(if run >= 2 { Some(last) } else { None })
}

// ---------------------------------------------------------------------------
// Directed-rounding building blocks.
//
// astro-float's `Up`/`Down` modes are true ceiling/floor roundings (an ulp is
// added whenever any discarded bit is nonzero, on the side that moves the
// value toward ±∞), which is exactly what outward interval rounding needs.
// `pin_directed_rounding` below keeps that assumption honest.
// ---------------------------------------------------------------------------

/// Exact `BigFloat` for a big integer (enough precision to avoid rounding).
fn bigint_to_bigfloat(i: &BigInt, cc: &mut Consts) -> BigFloat {
    let p = (i.bits() as usize + 64).max(64);
    BigFloat::parse(&i.to_string(), Radix::Dec, p, RoundingMode::ToEven, cc)
}

/// Directed-rounded `BigFloat` for an exact rational.
fn rational_to_bigfloat(r: &BigRational, p: usize, rm: RoundingMode, cc: &mut Consts) -> BigFloat {
    let num = bigint_to_bigfloat(r.numer(), cc);
    if r.is_integer() && r.numer().bits() as usize <= p {
        return num;
    }
    let den = bigint_to_bigfloat(r.denom(), cc);
    num.div(&den, p, rm)
}

/// Outward-rounded point interval for an exact rational.
fn rational_interval(r: &BigRational, p: usize, cc: &mut Consts) -> Interval {
    if r.is_integer() && r.numer().bits() as usize <= p {
        let v = bigint_to_bigfloat(r.numer(), cc);
        return Interval { lo: v.clone(), hi: v };
    }
    Interval {
        lo: rational_to_bigfloat(r, p, RoundingMode::Down, cc),
        hi: rational_to_bigfloat(r, p, RoundingMode::Up, cc),
    }
}

/// Enclosure of `ln b` for an exact integer `b ≥ 2`.
fn ln_interval(b: &BigInt, p: usize, cc: &mut Consts) -> Interval {
    let exact = bigint_to_bigfloat(b, cc);
    Interval {
        lo: exact.ln(p, RoundingMode::Down, cc),
        hi: exact.ln(p, RoundingMode::Up, cc),
    }
}

fn interval_add(a: &Interval, b: &Interval, p: usize) -> Interval {
    Interval {
        lo: a.lo.add(&b.lo, p, RoundingMode::Down),
        hi: a.hi.add(&b.hi, p, RoundingMode::Up),
    }
}

fn interval_mul(a: &Interval, b: &Interval, p: usize) -> Interval {
    let pairs = [
        (&a.lo, &b.lo),
        (&a.lo, &b.hi),
        (&a.hi, &b.lo),
        (&a.hi, &b.hi),
    ];
    let mut lo: Option<BigFloat> = None;
    let mut hi: Option<BigFloat> = None;
    for (x, y) in pairs {
        let down = x.mul(y, p, RoundingMode::Down);
        let up = x.mul(y, p, RoundingMode::Up);
        lo = Some(match lo {
            None => down,
            Some(cur) => bigfloat_min(cur, down),
        });
        hi = Some(match hi {
            None => up,
            Some(cur) => bigfloat_max(cur, up),
        });
    }
    Interval {
        lo: lo.expect("four products considered"),
        hi: hi.expect("four products considered"),
    }
}

/// `exp` is monotone, so the endpoints map straight through.
fn interval_exp(a: &Interval, p: usize, cc: &mut Consts) -> Interval {
    Interval {
        lo: a.lo.exp(p, RoundingMode::Down, cc),
        hi: a.hi.exp(p, RoundingMode::Up, cc),
    }
}

fn bigfloat_min(a: BigFloat, b: BigFloat) -> BigFloat {
    match a.cmp(&b) {
        Some(c) if c <= 0 => a,
        Some(_) => b,
        None => astro_float::NAN,
    }
}

fn bigfloat_max(a: BigFloat, b: BigFloat) -> BigFloat {
    match a.cmp(&b) {
        Some(c) if c >= 0 => a,
        Some(_) => b,
        None => astro_float::NAN,
    }
}

/// Exact rational value of a finite `BigFloat`.
///
/// The mantissa words are little-endian; the value is
/// `± (Σ wordᵢ·2^(64·i)) · 2^(e − 64·len)`.
fn bigfloat_to_rational(f: &BigFloat) -> Option<BigRational> {
    if f.is_inf_pos() || f.is_inf_neg() || f.is_nan() {
        return None;
    }
    if f.is_zero() {
        return Some(BigRational::zero());
    }
    let (words, _n, sign, e, _inexact) = f.as_raw_parts()?;
    let mut mant = BigUint::zero();
    for w in words.iter().rev() {
        mant = (mant << 64) | BigUint::from(*w);
    }
    let shift = i64::from(e) - 64 * words.len() as i64;
    let mut value = if shift >= 0 {
        BigRational::from_integer(BigInt::from(mant) << shift as usize)
    } else {
        BigRational::new(BigInt::from(mant), BigInt::one() << (-shift) as usize)
    };
    if sign == astro_float::Sign::Neg {
        value = -value;
    }
    Some(value)
}
