//! Text and JSON forms of numerals.
//!
//! The text grammar (whitespace-insensitive, `G` denotes ①):
//!
//! ```text
//! numeral := sterm (("+" | "-") term)*
//! sterm   := "-"? term
//! term    := coeff ("*"? gross)? | gross
//! gross   := "G" ("^" power)?
//! power   := snum | "(" numeral ")"
//! coeff   := num
//! num     := digits ("." digits)? | digits "/" digits
//! snum    := "-"? num
//! ```
//!
//! Decimal literals are read exactly (`1.5` is the rational `3/2`); `1/0` is
//! a syntax error.  Parsing always canonicalizes, so `G + G` comes back as
//! `2*G`.
//!
//! The printer emits one canonical spelling per value: terms in descending
//! order, digits `±1` elided before `G`, `^` elided for power one, bare
//! digits for non-negative integer constant powers, and parentheses around
//! everything else (`G^(-1)`, `G^(1/2)`, `G^(G^(-1))`).  `parse ∘ print` is
//! the identity on canonical numerals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numeral::{Grossdigit, Numeral};
use crate::{Config, Error, Result};

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(BigRational),
    Gross,
    Caret,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

/// Tokenizes the whole input.  Numbers (including `a.b` and `a/b` forms) are
/// single tokens, so no whitespace may appear inside them.
fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        match bytes[i] {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'G' => {
                toks.push((pos, Tok::Gross));
                i += 1;
            }
            b'^' => {
                toks.push((pos, Tok::Caret));
                i += 1;
            }
            b'(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            b'+' => {
                toks.push((pos, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((pos, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((pos, Tok::Star));
                i += 1;
            }
            b'0'..=b'9' => {
                let (tok, next) = lex_number(input, i)?;
                toks.push((pos, tok));
                i = next;
            }
            c => {
                return Err(syntax(pos, format!("unexpected character '{}'", c as char)));
            }
        }
    }
    Ok(toks)
}

fn scan_digits(bytes: &[u8], from: usize) -> usize {
    let mut i = from;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

/// Reads `digits`, `digits.digits` or `digits/digits` starting at `start`
/// (which is known to be a digit) and returns the exact rational value.
fn lex_number(input: &str, start: usize) -> Result<(Tok, usize)> {
    let bytes = input.as_bytes();
    let int_end = scan_digits(bytes, start);
    let int_part = &input[start..int_end];
    match bytes.get(int_end) {
        Some(b'.') => {
            let frac_start = int_end + 1;
            let frac_end = scan_digits(bytes, frac_start);
            if frac_end == frac_start {
                return Err(syntax(frac_start, "expected digits after '.'"));
            }
            let frac_part = &input[frac_start..frac_end];
            // a.b  ==  (ab as one integer) / 10^len(b), exactly.
            let numer = BigInt::from_str(&format!("{int_part}{frac_part}"))
                .expect("digit strings parse");
            let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
            Ok((Tok::Number(BigRational::new(numer, denom)), frac_end))
        }
        Some(b'/') => {
            let den_start = int_end + 1;
            let den_end = scan_digits(bytes, den_start);
            if den_end == den_start {
                return Err(syntax(den_start, "expected digits after '/'"));
            }
            let numer = BigInt::from_str(int_part).expect("digit strings parse");
            let denom = BigInt::from_str(&input[den_start..den_end]).expect("digit strings parse");
            if denom.is_zero() {
                return Err(syntax(den_start, "zero denominator"));
            }
            Ok((Tok::Number(BigRational::new(numer, denom)), den_end))
        }
        _ => {
            let numer = BigInt::from_str(int_part).expect("digit strings parse");
            Ok((Tok::Number(BigRational::from_integer(numer)), int_end))
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.i).map_or(self.input_len, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(syntax(self.here(), format!("expected {what}")))
        }
    }

    fn numeral(&mut self, cfg: &Config) -> Result<Numeral> {
        let mut raw: Vec<(Grossdigit, Numeral)> = Vec::new();
        let neg = self.eat(&Tok::Minus);
        let (digit, power) = self.term(cfg)?;
        raw.push((if neg { -digit } else { digit }, power));
        loop {
            let neg = if self.eat(&Tok::Plus) {
                false
            } else if self.eat(&Tok::Minus) {
                true
            } else {
                break;
            };
            let (digit, power) = self.term(cfg)?;
            raw.push((if neg { -digit } else { digit }, power));
        }
        Numeral::from_raw_terms(raw, cfg)
    }

    fn term(&mut self, cfg: &Config) -> Result<(Grossdigit, Numeral)> {
        match self.peek() {
            Some(Tok::Number(_)) => {
                let coeff = match self.toks[self.i].1.clone() {
                    Tok::Number(n) => n,
                    _ => unreachable!(),
                };
                self.i += 1;
                if self.eat(&Tok::Star) {
                    let power = self.gross(cfg)?;
                    Ok((coeff, power))
                } else if self.peek() == Some(&Tok::Gross) {
                    let power = self.gross(cfg)?;
                    Ok((coeff, power))
                } else {
                    Ok((coeff, Numeral::zero()))
                }
            }
            Some(Tok::Gross) => {
                let power = self.gross(cfg)?;
                Ok((BigRational::one(), power))
            }
            _ => Err(syntax(self.here(), "expected a term")),
        }
    }

    /// `G` with an optional `^power`; yields the grosspower as a numeral.
    fn gross(&mut self, cfg: &Config) -> Result<Numeral> {
        self.expect(&Tok::Gross, "'G'")?;
        if self.eat(&Tok::Caret) {
            self.power(cfg)
        } else {
            Ok(Numeral::one())
        }
    }

    fn power(&mut self, cfg: &Config) -> Result<Numeral> {
        if self.eat(&Tok::LParen) {
            let inner = self.numeral(cfg)?;
            self.expect(&Tok::RParen, "')'")?;
            return Ok(inner);
        }
        let neg = self.eat(&Tok::Minus);
        match self.peek() {
            Some(Tok::Number(_)) => {
                let n = match self.toks[self.i].1.clone() {
                    Tok::Number(n) => n,
                    _ => unreachable!(),
                };
                self.i += 1;
                Ok(Numeral::from_rational(if neg { -n } else { n }))
            }
            _ => Err(syntax(self.here(), "expected a number or '(' after '^'")),
        }
    }
}

/// Parses the text form into a canonical numeral.
pub fn parse(input: &str, cfg: &Config) -> Result<Numeral> {
    let toks = lex(input)?;
    let mut p = Parser { toks, i: 0, input_len: input.len() };
    let n = p.numeral(cfg)?;
    if p.peek().is_some() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

/// Canonical text form; [`parse`] reads it back to the same value.
pub fn print(t: &Numeral) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in t.terms().iter().enumerate() {
        let negative = term.digit().is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term_body(&term.digit().abs(), term.power()));
    }
    out
}

fn term_body(mag: &BigRational, power: &Numeral) -> String {
    if power.is_zero() {
        return rational_str(mag);
    }
    let gross = format!("G{}", power_suffix(power));
    if mag.is_one() {
        gross
    } else {
        format!("{}*{}", rational_str(mag), gross)
    }
}

/// `""` for power one, `^n` for non-negative integer constants, and a
/// parenthesized (recursively printed) numeral for everything else.
fn power_suffix(power: &Numeral) -> String {
    if let Some(r) = power.as_rational_constant() {
        if r.is_one() {
            return String::new();
        }
        if r.is_integer() && !r.is_negative() {
            return format!("^{}", r.numer());
        }
        return format!("^({})", rational_str(&r));
    }
    format!("^({})", print(power))
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

#[derive(serde::Serialize, serde::Deserialize)]
struct NumeralDto {
    terms: Vec<TermDto>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct TermDto {
    digit: DigitDto,
    power: NumeralDto,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct DigitDto {
    num: String,
    den: String,
}

fn to_dto(t: &Numeral) -> NumeralDto {
    NumeralDto {
        terms: t
            .terms()
            .iter()
            .map(|term| TermDto {
                digit: DigitDto {
                    num: term.digit().numer().to_string(),
                    den: term.digit().denom().to_string(),
                },
                power: to_dto(term.power()),
            })
            .collect(),
    }
}

fn from_dto(dto: &NumeralDto, cfg: &Config) -> Result<Numeral> {
    let mut raw = Vec::with_capacity(dto.terms.len());
    for term in &dto.terms {
        let num = BigInt::from_str(&term.digit.num)
            .map_err(|_| syntax(0, format!("bad integer literal '{}'", term.digit.num)))?;
        let den = BigInt::from_str(&term.digit.den)
            .map_err(|_| syntax(0, format!("bad integer literal '{}'", term.digit.den)))?;
        if den.is_zero() {
            return Err(syntax(0, "zero denominator"));
        }
        raw.push((BigRational::new(num, den), from_dto(&term.power, cfg)?));
    }
    Numeral::from_raw_terms(raw, cfg)
}

/// Serializes to the documented JSON shape
/// `{"terms":[{"digit":{"num":"…","den":"…"},"power":{…}}]}` with zero as
/// `{"terms":[]}`.  Digits are decimal strings, so arbitrary rationals
/// survive the round trip untouched.
pub fn to_json(t: &Numeral) -> String {
    serde_json::to_string(&to_dto(t)).expect("numeral serialization cannot fail")
}

/// Reads the JSON shape back.  Input need not be canonical: terms are merged,
/// sorted, and pruned exactly like every other constructor.
pub fn from_json(input: &str, cfg: &Config) -> Result<Numeral> {
    let dto: NumeralDto = serde_json::from_str(input)
        .map_err(|e| syntax(e.column().saturating_sub(1), e.to_string()))?;
    from_dto(&dto, cfg)
}
