//! Sign, total order, dominant asymptotics, and limits of numerals.
//!
//! The semantics: replace ① by a growing base `B` (factorials of ever larger
//! integers) and ask for the *eventual* behaviour of the value.  For numerals
//! with constant grosspowers the answer is read off the leading term.  In
//! general, grosspowers may differ by infinitesimals — `①^(①⁻¹)` against
//! `①⁰` — and then `①^δ = exp(δ·ln B)` must be expanded in powers of
//! `L = ln B` before a leading monomial emerges.
//!
//! The engine is *sound and abstaining*: every returned sign comes with a
//! dominance certificate (the chosen monomial provably outgrows both every
//! discarded candidate and the series truncation tail), and when no
//! certificate exists within the expansion budget the engine returns
//! [`Error::Undecided`] instead of guessing.  All recursion descends strictly
//! along numeral levels, so every query terminates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeral::Numeral;
use crate::{arith, Config, Error, Result};

/// Sign of a numeral's eventual value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// The sign of an exact rational.
    pub fn of_rational(c: &BigRational) -> Sign {
        if c.is_zero() {
            Sign::Zero
        } else if c.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Limit of a numeral's value as the base grows without bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedLimit {
    NegativeInfinity,
    /// An exact rational limit; `Finite(0)` on a nonzero numeral means
    /// "infinitesimal".
    Finite(BigRational),
    PositiveInfinity,
}

impl ExtendedLimit {
    fn finite_zero() -> ExtendedLimit {
        ExtendedLimit::Finite(BigRational::zero())
    }

    /// True for `Finite(0)`.
    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedLimit::Finite(r) if r.is_zero())
    }
}

/// Leading asymptotic monomial of a nonzero numeral:
/// value ~ `lead · ①^power · L^logdeg` with `lead` a nonzero exact rational.
#[derive(Debug, Clone)]
pub(crate) struct DominantInfo {
    pub power: Numeral,
    pub logdeg: u32,
    pub sign: Sign,
    pub lead: BigRational,
}

/// Asymptotic size `①^power · L^logdeg`, compared up to constant factors.
#[derive(Debug, Clone)]
struct Magnitude {
    power: Numeral,
    logdeg: u32,
}

/// A candidate leading monomial during dominance selection.
#[derive(Debug, Clone)]
struct Candidate {
    mag: Magnitude,
    lead: BigRational,
}

/// What the engine learned about one archimedean class of terms.
enum ClassOutcome {
    /// The class provably behaves like `lead · ①^mag.power · L^mag.logdeg`.
    Certified { mag: Magnitude, lead: BigRational },
    /// No certificate within budget, but the class is within a constant of
    /// `upper`; it can still be discarded if another class strictly beats it.
    Bounded { upper: Magnitude },
}

/// Eventual sign of a canonical numeral.
///
/// Never wrong: either the certified sign or [`Error::Undecided`].  Numerals
/// of level ≤ 1 are always decided (leading-term inspection is exact there).
pub fn sign(t: &Numeral, cfg: &Config) -> Result<Sign> {
    if t.is_zero() {
        return Ok(Sign::Zero);
    }
    Ok(numeral_dominant(t, cfg)?.sign)
}

/// Total order on canonical numerals: `Equal` iff structurally equal,
/// otherwise the sign of the difference.
pub fn compare(a: &Numeral, b: &Numeral, cfg: &Config) -> Result<Ordering> {
    if a.equals(b) {
        return Ok(Ordering::Equal);
    }
    match sign(&arith::sub(a, b, cfg)?, cfg)? {
        Sign::Positive => Ok(Ordering::Greater),
        Sign::Negative => Ok(Ordering::Less),
        // Distinct canonical numerals have a nonzero difference; this arm is
        // unreachable but harmless.
        Sign::Zero => Ok(Ordering::Equal),
    }
}

/// Limit of the value as the base grows.
///
/// Derived from the dominant monomial `lead·①^Q·L^K`: if `Q` eventually
/// exceeds some positive constant the value diverges with `sign`; if `Q`
/// stays below some negative constant the value vanishes; if `Q` itself is
/// infinitesimal (so `①^Q → 1`) the monomial degenerates to `lead·L^K`,
/// giving `lead` exactly when `K = 0` and a signed infinity otherwise.
pub fn limit(t: &Numeral, cfg: &Config) -> Result<ExtendedLimit> {
    if t.is_zero() {
        return Ok(ExtendedLimit::finite_zero());
    }
    let dom = numeral_dominant(t, cfg)?;
    let q_limit = limit(&dom.power, cfg)?;
    let diverges = match &q_limit {
        ExtendedLimit::PositiveInfinity => true,
        ExtendedLimit::Finite(r) if r.is_positive() => true,
        _ => false,
    };
    if diverges {
        return Ok(signed_infinity(dom.sign));
    }
    let vanishes = match &q_limit {
        ExtendedLimit::NegativeInfinity => true,
        ExtendedLimit::Finite(r) if r.is_negative() => true,
        _ => false,
    };
    if vanishes {
        return Ok(ExtendedLimit::finite_zero());
    }
    // The dominant power is infinitesimal or zero, so ①^Q → 1.
    if dom.logdeg > 0 {
        Ok(signed_infinity(dom.sign))
    } else {
        Ok(ExtendedLimit::Finite(dom.lead))
    }
}

/// True iff `t` is nonzero with limit zero.
pub fn is_infinitesimal(t: &Numeral, cfg: &Config) -> Result<bool> {
    Ok(!t.is_zero() && limit(t, cfg)?.is_zero())
}

/// The dominant asymptotic monomial of a nonzero numeral, for inspection:
/// `t` behaves like `(nonzero constant)·①^q·L^k`.
///
/// The reported grosspower is normalized by dropping its infinitesimally
/// valued terms — those scale the value by `①^(infinitesimal) → 1` and carry
/// no magnitude information.
pub fn dominant(t: &Numeral, cfg: &Config) -> Result<(Numeral, u32, Sign)> {
    if t.is_zero() {
        return Err(Error::ZeroInput);
    }
    let d = numeral_dominant(t, cfg)?;
    let mut raw: Vec<(BigRational, Numeral)> = Vec::new();
    for term in d.power.terms() {
        let vanishing = match limit(term.power(), cfg)? {
            ExtendedLimit::NegativeInfinity => true,
            ExtendedLimit::Finite(r) => r.is_negative(),
            ExtendedLimit::PositiveInfinity => false,
        };
        if !vanishing {
            raw.push((term.digit().clone(), term.power().clone()));
        }
    }
    let q = Numeral::from_raw_terms(raw, cfg)?;
    Ok((q, d.logdeg, d.sign))
}

fn signed_infinity(s: Sign) -> ExtendedLimit {
    match s {
        Sign::Positive => ExtendedLimit::PositiveInfinity,
        Sign::Negative => ExtendedLimit::NegativeInfinity,
        Sign::Zero => unreachable!("dominant monomials have nonzero leads"),
    }
}

/// Core engine: the certified dominant monomial of a nonzero numeral.
pub(crate) fn numeral_dominant(t: &Numeral, cfg: &Config) -> Result<DominantInfo> {
    if t.is_zero() {
        return Err(Error::ZeroInput);
    }
    // Constant grosspowers: distinct rational exponents can never cancel, so
    // the leading term is the dominant monomial, exactly.
    if t.level() <= 1 {
        let lead = t.leading().expect("nonzero numeral has a leading term");
        return Ok(DominantInfo {
            power: lead.power().clone(),
            logdeg: 0,
            sign: Sign::of_rational(lead.digit()),
            lead: lead.digit().clone(),
        });
    }

    // Partition terms into archimedean classes: grosspowers that differ only
    // infinitesimally.  (Transitive because limits of finite sums add.)
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, term) in t.terms().iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = t.terms()[class[0]].power();
            let diff = arith::sub(term.power(), rep, cfg)?;
            if limit(&diff, cfg)?.is_zero() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }

    let mut certified: Vec<Candidate> = Vec::new();
    let mut bounded: Vec<Magnitude> = Vec::new();
    for class in &classes {
        match class_dominant(t, class, cfg)? {
            ClassOutcome::Certified { mag, lead } => certified.push(Candidate { mag, lead }),
            ClassOutcome::Bounded { upper } => bounded.push(upper),
        }
    }

    let best = match select_best(certified, cfg)? {
        Some(b) if !b.lead.is_zero() => b,
        // Either no class produced a certificate, or the leading monomials of
        // several classes cancel exactly and the residual order is unknown.
        _ => return Err(Error::Undecided),
    };
    // Classes without certificates must be provably negligible.
    for upper in &bounded {
        if mag_cmp(&best.mag, upper, cfg)? != Ordering::Greater {
            return Err(Error::Undecided);
        }
    }

    Ok(DominantInfo {
        power: best.mag.power,
        logdeg: best.mag.logdeg,
        sign: Sign::of_rational(&best.lead),
        lead: best.lead,
    })
}

/// Dominant monomial (or an upper bound) for one archimedean class of terms.
fn class_dominant(t: &Numeral, members: &[usize], cfg: &Config) -> Result<ClassOutcome> {
    // A lone term c·①^p is its own dominant monomial — exact, nothing to expand.
    if members.len() == 1 {
        let term = &t.terms()[members[0]];
        return Ok(ClassOutcome::Certified {
            mag: Magnitude {
                power: term.power().clone(),
                logdeg: 0,
            },
            lead: term.digit().clone(),
        });
    }

    // Maximal grosspower q* of the class; offsets ε_j = p_j − q* are zero or
    // negative infinitesimals, and ①^{p_j} = ①^{q*}·exp(ε_j·L).
    let mut qstar = t.terms()[members[0]].power();
    for &i in &members[1..] {
        if compare(t.terms()[i].power(), qstar, cfg)? == Ordering::Greater {
            qstar = t.terms()[i].power();
        }
    }
    let coeffs: Vec<&BigRational> = members.iter().map(|&i| t.terms()[i].digit()).collect();
    let offsets: Vec<Numeral> = members
        .iter()
        .map(|&i| arith::sub(t.terms()[i].power(), qstar, cfg))
        .collect::<Result<_>>()?;

    // Dominant monomials of the nonzero offsets drive the truncation tail
    // bound.  Every infinitesimal in this fragment decays at least like a
    // negative rational power of the base; verify that instead of assuming it.
    let mut offset_doms: Vec<DominantInfo> = Vec::new();
    for eps in offsets.iter().filter(|e| !e.is_zero()) {
        let dom = numeral_dominant(eps, cfg)?;
        let decays = match limit(&dom.power, cfg)? {
            ExtendedLimit::NegativeInfinity => true,
            ExtendedLimit::Finite(r) => r.is_negative(),
            ExtendedLimit::PositiveInfinity => false,
        };
        if !decays {
            return Err(Error::Undecided);
        }
        offset_doms.push(dom);
    }

    // Series coefficients of exp(ε·L): w_d = Σ_j c_j·ε_j^d / d!, so that the
    // class value is ①^{q*}·(Σ_{d≤E} w_d·L^d + tail).  Computed incrementally
    // as the expansion order E grows.
    let mut eps_pow: Vec<Numeral> = vec![Numeral::one(); offsets.len()];
    let mut w: Vec<Numeral> = Vec::new();
    let mut w0 = Numeral::zero();
    for c in &coeffs {
        w0 = arith::add(&w0, &Numeral::from_rational((*c).clone()), cfg)?;
    }
    w.push(w0);
    let mut factorial = BigInt::one();

    // Try to certify at order 0 first (only the digit sum w₀ and the order-0
    // tail bound), then keep extending the series while the budget allows.
    let mut last_upper: Option<Magnitude> = None;
    for e in 0..=cfg.expansion_budget {
        if e >= 1 {
            factorial *= BigInt::from(e);
            let inv_fact = BigRational::new(BigInt::one(), factorial.clone());
            let mut we = Numeral::zero();
            for (j, eps) in offsets.iter().enumerate() {
                eps_pow[j] = arith::mul(&eps_pow[j], eps, cfg)?;
                if eps_pow[j].is_zero() {
                    continue;
                }
                let contrib = arith::scale(&eps_pow[j], &(coeffs[j] * &inv_fact));
                we = arith::add(&we, &contrib, cfg)?;
            }
            w.push(we);
        }

        let mut candidates: Vec<Candidate> = Vec::new();
        for (d, wd) in w.iter().enumerate() {
            if wd.is_zero() {
                continue;
            }
            let dom = numeral_dominant(wd, cfg)?;
            candidates.push(Candidate {
                mag: Magnitude {
                    power: arith::add(qstar, &dom.power, cfg)?,
                    logdeg: d as u32 + dom.logdeg,
                },
                lead: dom.lead,
            });
        }
        let tail = tail_magnitude(qstar, &offset_doms, e, cfg)?;
        let best = select_best(candidates.clone(), cfg)?;
        if let Some(b) = &best {
            if !b.lead.is_zero() && mag_cmp(&b.mag, &tail, cfg)? == Ordering::Greater {
                return Ok(ClassOutcome::Certified {
                    mag: b.mag.clone(),
                    lead: b.lead.clone(),
                });
            }
        }
        // Remember the coarsest upper bound in case the budget runs out:
        // the class value is within a constant of max(candidates, tail).
        let mut upper = tail;
        for c in &candidates {
            if mag_cmp(&c.mag, &upper, cfg)? == Ordering::Greater {
                upper = c.mag.clone();
            }
        }
        last_upper = Some(upper);
    }

    Ok(ClassOutcome::Bounded {
        upper: last_upper.expect("the order-0 pass always runs"),
    })
}

/// Magnitude bound for the series tail beyond order `e`.
///
/// Each remainder obeys `|R_j| ≤ |ε_j|^{e+1}·L^{e+1}·exp(|ε_j|·L)/(e+1)!`,
/// and `|ε_j|·L → 0` because every offset decays like a negative rational
/// power of the base, so up to constants the tail is dominated by
/// `①^{q* + (e+1)·Q_j}·L^{(e+1)·(K_j+1)}` for the worst offset.
fn tail_magnitude(
    qstar: &Numeral,
    offset_doms: &[DominantInfo],
    e: u32,
    cfg: &Config,
) -> Result<Magnitude> {
    let factor = BigRational::from_integer(BigInt::from(e + 1));
    let mut worst: Option<Magnitude> = None;
    for dom in offset_doms {
        let m = Magnitude {
            power: arith::add(qstar, &arith::scale(&dom.power, &factor), cfg)?,
            logdeg: (e + 1) * (dom.logdeg + 1),
        };
        worst = Some(match worst {
            None => m,
            Some(w) => {
                if mag_cmp(&m, &w, cfg)? == Ordering::Greater {
                    m
                } else {
                    w
                }
            }
        });
    }
    Ok(worst.expect("multi-term classes have a nonzero offset"))
}

/// Picks the maximal-magnitude candidate, merging equal magnitudes by adding
/// their leads.  A merged lead of zero signals exact cancellation at the top
/// magnitude; callers must not certify such a result.
fn select_best(candidates: Vec<Candidate>, cfg: &Config) -> Result<Option<Candidate>> {
    let mut best: Option<Candidate> = None;
    for c in candidates {
        best = Some(match best {
            None => c,
            Some(mut b) => match mag_cmp(&c.mag, &b.mag, cfg)? {
                Ordering::Greater => c,
                Ordering::Equal => {
                    b.lead += c.lead;
                    b
                }
                Ordering::Less => b,
            },
        });
    }
    Ok(best)
}

/// Compares asymptotic sizes `①^p·L^k` lexicographically: first by the
/// eventual sign of the power gap, then — when the gap is infinitesimal or
/// zero, so the base factor tends to 1 — by the logarithm degree.
fn mag_cmp(a: &Magnitude, b: &Magnitude, cfg: &Config) -> Result<Ordering> {
    let diff = arith::sub(&a.power, &b.power, cfg)?;
    if diff.is_zero() {
        return Ok(a.logdeg.cmp(&b.logdeg));
    }
    match limit(&diff, cfg)? {
        ExtendedLimit::PositiveInfinity => Ok(Ordering::Greater),
        ExtendedLimit::NegativeInfinity => Ok(Ordering::Less),
        ExtendedLimit::Finite(r) => {
            if r.is_positive() {
                Ok(Ordering::Greater)
            } else if r.is_negative() {
                Ok(Ordering::Less)
            } else {
                Ok(a.logdeg.cmp(&b.logdeg))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// `①^n` for machine `n`.
    fn gpow(n: i64) -> Numeral {
        Numeral::from_raw_terms(vec![(rat(1, 1), Numeral::from_integer(n))], &cfg()).unwrap()
    }

    /// The numeral `①^(①⁻¹)`.
    fn a_numeral() -> Numeral {
        Numeral::from_raw_terms(vec![(rat(1, 1), gpow(-1))], &cfg()).unwrap()
    }

    #[test]
    fn sign_of_zero_is_zero() {
        assert_eq!(sign(&Numeral::zero(), &cfg()).unwrap(), Sign::Zero);
    }

    #[test]
    fn level_one_signs_come_from_the_leading_term() {
        // 2·①⁻¹ − 1000000·①⁻² > 0 eventually.
        let t = Numeral::from_raw_terms(
            vec![
                (rat(2, 1), Numeral::from_integer(-1)),
                (rat(-1_000_000, 1), Numeral::from_integer(-2)),
            ],
            &cfg(),
        )
        .unwrap();
        assert_eq!(sign(&t, &cfg()).unwrap(), Sign::Positive);
    }

    #[test]
    fn tenth_root_scale_sits_between_one_and_two() {
        // a = ①^(①⁻¹): 1 < a < 2 eventually.
        let a = a_numeral();
        let a_minus_1 = arith::sub(&a, &Numeral::one(), &cfg()).unwrap();
        let a_minus_2 = arith::sub(&a, &Numeral::from_integer(2), &cfg()).unwrap();
        assert_eq!(sign(&a_minus_1, &cfg()).unwrap(), Sign::Positive);
        assert_eq!(sign(&a_minus_2, &cfg()).unwrap(), Sign::Negative);
    }

    #[test]
    fn compare_reference_points() {
        let g = Numeral::grossone();
        let g_plus_1 = arith::add(&g, &Numeral::one(), &cfg()).unwrap();
        assert_eq!(compare(&g_plus_1, &g, &cfg()).unwrap(), Ordering::Greater);
        let million = Numeral::from_integer(1_000_000);
        assert_eq!(compare(&million, &g, &cfg()).unwrap(), Ordering::Less);
        assert_eq!(compare(&g, &g, &cfg()).unwrap(), Ordering::Equal);
    }

    #[test]
    fn limits_of_reference_numerals() {
        assert_eq!(
            limit(&a_numeral(), &cfg()).unwrap(),
            ExtendedLimit::Finite(rat(1, 1))
        );
        let t = Numeral::from_raw_terms(
            vec![
                (rat(2, 1), Numeral::zero()),
                (rat(1, 1), Numeral::from_integer(-1)),
            ],
            &cfg(),
        )
        .unwrap();
        assert_eq!(limit(&t, &cfg()).unwrap(), ExtendedLimit::Finite(rat(2, 1)));
        assert_eq!(
            limit(&Numeral::grossone(), &cfg()).unwrap(),
            ExtendedLimit::PositiveInfinity
        );
        assert_eq!(
            limit(&Numeral::zero(), &cfg()).unwrap(),
            ExtendedLimit::Finite(rat(0, 1))
        );
    }

    #[test]
    fn infinitesimal_detection() {
        let b = arith::sub(&a_numeral(), &Numeral::one(), &cfg()).unwrap();
        assert!(is_infinitesimal(&b, &cfg()).unwrap());
        assert!(is_infinitesimal(&gpow(-1), &cfg()).unwrap());
        assert!(!is_infinitesimal(&Numeral::one(), &cfg()).unwrap());
        assert!(!is_infinitesimal(&Numeral::zero(), &cfg()).unwrap());
    }

    #[test]
    fn dominant_of_the_near_one_difference() {
        // ①^(①⁻¹) − 1 behaves like ①⁻¹·L: magnitude (−1, 1), positive.
        // (Check against the value model: (B^(1/B) − 1)·B/ln B → 1.)
        let b = arith::sub(&a_numeral(), &Numeral::one(), &cfg()).unwrap();
        let (q, k, s) = dominant(&b, &cfg()).unwrap();
        assert!(q.equals(&Numeral::from_integer(-1)));
        assert_eq!(k, 1);
        assert_eq!(s, Sign::Positive);
    }

    #[test]
    fn dominant_of_plain_leading_terms() {
        // 3·①² + 5 → (2, 0, Positive).
        let t = Numeral::from_raw_terms(
            vec![(rat(3, 1), Numeral::from_integer(2)), (rat(5, 1), Numeral::zero())],
            &cfg(),
        )
        .unwrap();
        let (q, k, s) = dominant(&t, &cfg()).unwrap();
        assert!(q.equals(&Numeral::from_integer(2)));
        assert_eq!(k, 0);
        assert_eq!(s, Sign::Positive);

        // −①⁻³ → (−3, 0, Negative).
        let u = arith::negate(&gpow(-3));
        let (q, k, s) = dominant(&u, &cfg()).unwrap();
        assert!(q.equals(&Numeral::from_integer(-3)));
        assert_eq!(k, 0);
        assert_eq!(s, Sign::Negative);
    }

    #[test]
    fn dominant_rejects_zero() {
        assert_eq!(dominant(&Numeral::zero(), &cfg()), Err(Error::ZeroInput));
    }

    #[test]
    fn cancellation_between_classes_lets_the_smaller_class_win() {
        // ①^(1 + ①⁻⁵) − ① + ①^(1/2): the first two terms cancel down to
        // about ①⁻⁴·L, so the square-root term dominates.
        let p1 = Numeral::from_raw_terms(
            vec![(rat(1, 1), Numeral::zero()), (rat(1, 1), Numeral::from_integer(-5))],
            &cfg(),
        )
        .unwrap();
        let t = Numeral::from_raw_terms(
            vec![
                (rat(1, 1), p1),
                (rat(-1, 1), Numeral::one()),
                (rat(1, 1), Numeral::from_rational(rat(1, 2))),
            ],
            &cfg(),
        )
        .unwrap();
        let (q, k, s) = dominant(&t, &cfg()).unwrap();
        assert!(q.equals(&Numeral::from_rational(rat(1, 2))));
        assert_eq!(k, 0);
        assert_eq!(s, Sign::Positive);
        assert_eq!(sign(&t, &cfg()).unwrap(), Sign::Positive);
    }

    #[test]
    fn deep_cancellation_within_a_class() {
        // ①^(①⁻¹) + ①^(2·①⁻¹) − 2 has digit sum 1 + 1 − 2 = 0, so the
        // first-order series coefficient decides: relative to q* = 2·①⁻¹ the
        // offsets are −①⁻¹ and −2·①⁻¹, giving
        // w₁ = 1·(−①⁻¹) + (−2)·(−2·①⁻¹) = 3·①⁻¹ > 0.
        let p1 = gpow(-1);
        let p2 = arith::scale(&gpow(-1), &rat(2, 1));
        let t = Numeral::from_raw_terms(
            vec![
                (rat(1, 1), p1),
                (rat(1, 1), p2),
                (rat(-2, 1), Numeral::zero()),
            ],
            &cfg(),
        )
        .unwrap();
        assert_eq!(sign(&t, &cfg()).unwrap(), Sign::Positive);
        let (q, k, s) = dominant(&t, &cfg()).unwrap();
        // Dominant magnitude ①⁻¹·L¹.
        assert!(q.equals(&Numeral::from_integer(-1)));
        assert_eq!(k, 1);
        assert_eq!(s, Sign::Positive);
    }

    #[test]
    fn trichotomy_consistency_on_handpicked_pairs() {
        let xs = vec![
            Numeral::zero(),
            Numeral::one(),
            Numeral::grossone(),
            a_numeral(),
            gpow(-1),
            arith::sub(&a_numeral(), &Numeral::one(), &cfg()).unwrap(),
        ];
        for x in &xs {
            for y in &xs {
                let c = compare(x, y, &cfg()).unwrap();
                let c_rev = compare(y, x, &cfg()).unwrap();
                assert_eq!(c, c_rev.reverse());
                assert_eq!(c == Ordering::Equal, x.equals(y));
            }
        }
    }
}
