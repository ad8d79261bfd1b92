//! Command-line front end.
//!
//! Every subcommand is a thin wrapper over exactly one library call:
//!
//! ```text
//! normalize <expr>                  canonical form
//! compare <a> <b>                   "GT" | "LT" | "EQ"
//! classify <expr> [--scheme s]      sergeyev | semantic | both
//! eval <expr> --base-factorial M    certified interval at B = M!
//! measure --progression K,N         counting measure of a set expression
//!         --union "K1,N1;K2,N2;…"
//!         --set "a,b,c"
//! add | mul | div <a> <b>           exact arithmetic
//! repl                              interactive loop
//! ```
//!
//! Exit codes: 0 success, 1 syntax/usage error, 2 domain error, 3 explicit
//! abstention (the engine refused to guess).  [`run_command`] returns the
//! code and the output text; `main` routes the text to stdout on success and
//! stderr otherwise.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::oracle::{self, EvalContext};
use crate::segment::{self, Part, Progression, SetExpr};
use crate::{arith, classify, order, textio, Config, Error, Numeral, Result};

/// Significant digits shown for non-integer interval endpoints.
const EVAL_DISPLAY_DIGITS: usize = 30;

#[derive(ClapParser)]
#[command(
    name = "grosscalc",
    version,
    about = "Exact symbolic calculator for grossone numerals",
    disable_help_subcommand = true
)]
struct Cli {
    /// Maximum nesting level of grosspowers.
    #[arg(long, global = true, default_value_t = 3)]
    max_level: u32,
    /// Expansion budget for near-cancelling comparisons.
    #[arg(long, global = true, default_value_t = 8)]
    expansion_budget: u32,
    /// Emit numeral results as JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an expression and print its canonical form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Order two numerals: GT, LT, or EQ.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Classify a numeral as finite/infinite/infinitesimal.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Scheme::Both)]
        scheme: Scheme,
    },
    /// Evaluate at the concrete base M! and print a certified interval.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Base index M; the base is M factorial.
        #[arg(long)]
        base_factorial: u32,
        /// Working precision in bits.
        #[arg(long, default_value_t = 128)]
        precision: usize,
    },
    /// Counting measure of a subset of {1, …, ①}.
    Measure {
        /// Arithmetic progression START,STEP.
        #[arg(long)]
        progression: Option<String>,
        /// Disjoint union of progressions "K1,N1;K2,N2;…".
        #[arg(long)]
        union: Option<String>,
        /// Explicit finite set "a,b,c".
        #[arg(long)]
        set: Option<String>,
    },
    /// Exact sum.
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Exact product.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Exact quotient (errors unless the division is exact).
    Div {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Interactive read-evaluate-print loop.
    Repl,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Scheme {
    Sergeyev,
    Semantic,
    Both,
}

/// Runs one command line (`argv[0]` is the program name) and returns the
/// exit code together with the output text.
pub fn run_command(argv: &[&str]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, rendered),
                _ => (1, rendered),
            };
        }
    };
    let cfg = Config {
        max_level: cli.max_level,
        expansion_budget: cli.expansion_budget,
        ..Config::default()
    };
    match dispatch(&cli, &cfg) {
        Ok(output) => (0, output),
        Err(e) => (exit_code(&e), e.to_string()),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } => 1,
        Error::Undecided | Error::PrecisionExhausted => 3,
        _ => 2,
    }
}

fn dispatch(cli: &Cli, cfg: &Config) -> Result<String> {
    match &cli.cmd {
        Cmd::Normalize { expr } => {
            let n = textio::parse(expr, cfg)?;
            Ok(render_numeral(&n, cli.json))
        }
        Cmd::Compare { a, b } => {
            let x = textio::parse(a, cfg)?;
            let y = textio::parse(b, cfg)?;
            Ok(match order::compare(&x, &y, cfg)? {
                Ordering::Greater => "GT",
                Ordering::Less => "LT",
                Ordering::Equal => "EQ",
            }
            .to_string())
        }
        Cmd::Classify { expr, scheme } => {
            let n = textio::parse(expr, cfg)?;
            let mut pieces = Vec::new();
            if matches!(scheme, Scheme::Sergeyev | Scheme::Both) {
                pieces.push(format!("sergeyev: {}", classify::sergeyev_class(&n, cfg)?));
            }
            if matches!(scheme, Scheme::Semantic | Scheme::Both) {
                pieces.push(format!("semantic: {}", classify::semantic_class(&n, cfg)?));
            }
            Ok(pieces.join("; "))
        }
        Cmd::Eval { expr, base_factorial, precision } => {
            let n = textio::parse(expr, cfg)?;
            let ctx = EvalContext::new(*base_factorial, *precision).ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: "--base-factorial must be at least 2 and --precision at least 64".into(),
            })?;
            let iv = oracle::eval_interval(&n, &ctx)?;
            let lo = endpoint_str(iv.lo_rational(), iv.lo().is_inf_neg(), false);
            let hi = endpoint_str(iv.hi_rational(), iv.hi().is_inf_pos(), true);
            Ok(format!("[{lo}, {hi}]"))
        }
        Cmd::Measure { progression, union, set } => {
            let s = build_set_expr(progression, union, set)?;
            let m = segment::measure(&s, cfg)?;
            Ok(render_numeral(&m, cli.json))
        }
        Cmd::Add { a, b } => binary(a, b, cfg, cli.json, arith::add),
        Cmd::Mul { a, b } => binary(a, b, cfg, cli.json, arith::mul),
        Cmd::Div { a, b } => binary(a, b, cfg, cli.json, arith::div_exact),
        Cmd::Repl => {
            run_repl(cfg, cli.json);
            Ok(String::new())
        }
    }
}

fn binary(
    a: &str,
    b: &str,
    cfg: &Config,
    json: bool,
    op: fn(&Numeral, &Numeral, &Config) -> Result<Numeral>,
) -> Result<String> {
    let x = textio::parse(a, cfg)?;
    let y = textio::parse(b, cfg)?;
    Ok(render_numeral(&op(&x, &y, cfg)?, json))
}

fn render_numeral(n: &Numeral, json: bool) -> String {
    if json {
        textio::to_json(n)
    } else {
        textio::print(n)
    }
}

// ---------------------------------------------------------------------------
// measure argument parsing
// ---------------------------------------------------------------------------

fn arg_error(msg: impl Into<String>) -> Error {
    Error::Syntax { pos: 0, msg: msg.into() }
}

fn build_set_expr(
    progression: &Option<String>,
    union: &Option<String>,
    set: &Option<String>,
) -> Result<SetExpr> {
    let given = [progression.is_some(), union.is_some(), set.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if given != 1 {
        return Err(arg_error(
            "exactly one of --progression, --union, --set is required",
        ));
    }
    if let Some(spec) = progression {
        return Ok(SetExpr::new(vec![Part::Progression(parse_progression(spec)?)]));
    }
    if let Some(spec) = union {
        let parts = spec
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Ok(Part::Progression(parse_progression(s)?)))
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(arg_error("--union needs at least one progression"));
        }
        return Ok(SetExpr::new(parts));
    }
    let spec = set.as_ref().expect("one option is present");
    let mut elems = BTreeSet::new();
    for piece in spec.split(',').filter(|s| !s.trim().is_empty()) {
        let x: u64 = piece
            .trim()
            .parse()
            .map_err(|_| arg_error(format!("bad set element '{}'", piece.trim())))?;
        if x == 0 {
            return Err(arg_error("set elements must be at least 1"));
        }
        elems.insert(x);
    }
    Ok(SetExpr::new(vec![Part::FiniteSet(elems)]))
}

fn parse_progression(spec: &str) -> Result<Progression> {
    let pieces: Vec<&str> = spec.split(',').map(str::trim).collect();
    if pieces.len() != 2 {
        return Err(arg_error(format!("expected START,STEP, got '{}'", spec.trim())));
    }
    let start: u64 = pieces[0]
        .parse()
        .map_err(|_| arg_error(format!("bad progression start '{}'", pieces[0])))?;
    let step: u64 = pieces[1]
        .parse()
        .map_err(|_| arg_error(format!("bad progression step '{}'", pieces[1])))?;
    Progression::new(start, step)
        .ok_or_else(|| arg_error("progression start and step must be at least 1"))
}

// ---------------------------------------------------------------------------
// interval endpoint display
// ---------------------------------------------------------------------------

/// Renders one endpoint: exact integers verbatim, other rationals as decimals
/// with [`EVAL_DISPLAY_DIGITS`] significant digits rounded outward (`round_up`
/// for the upper endpoint), so the printed interval still encloses the value.
fn endpoint_str(r: Option<BigRational>, infinite: bool, round_up: bool) -> String {
    if infinite {
        return if round_up { "inf".into() } else { "-inf".into() };
    }
    match r {
        Some(r) if r.is_integer() => r.numer().to_string(),
        Some(r) => decimal_string(&r, EVAL_DISPLAY_DIGITS, round_up),
        None => "nan".into(),
    }
}

fn pow10(k: i64) -> BigRational {
    let p = num_bigint::BigInt::from(10u32).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(num_bigint::BigInt::from(1), p)
    }
}

/// Decimal form of a nonzero non-integer rational with `sig` significant
/// digits, rounded toward +∞ when `round_up` and toward −∞ otherwise.
/// Falls back to scientific notation outside a comfortable exponent range.
fn decimal_string(r: &BigRational, sig: usize, round_up: bool) -> String {
    debug_assert!(!r.is_zero());
    let neg = r.is_negative();
    let a = r.abs();

    // Largest e with 10^e ≤ a; the digit-count estimate is off by at most one.
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }

    // Directed rounding on the signed value means the magnitude rounds up
    // exactly when the direction and the sign agree.
    let magnitude_up = round_up != neg;
    let mut digits = round_scaled(&a, sig as i64 - 1 - e, magnitude_up);
    if digits.len() > sig {
        // 99…9 rounded up to 100…0: one more decimal place before the point.
        e += 1;
        digits = round_scaled(&a, sig as i64 - 1 - e, magnitude_up);
    }

    let body = if (0..sig as i64).contains(&e) {
        let (int_part, frac_part) = digits.split_at(e as usize + 1);
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else if (-6..0).contains(&e) {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits.trim_end_matches('0'))
    } else {
        let (first, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{first}e{e}")
        } else {
            format!("{first}.{rest}e{e}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `a·10^shift` rounded to an integer in the requested direction, as digits.
fn round_scaled(a: &BigRational, shift: i64, up: bool) -> String {
    let scaled = a * pow10(shift);
    let m = if up { scaled.ceil() } else { scaled.floor() };
    m.to_integer().to_string()
}

// ---------------------------------------------------------------------------
// REPL
// ---------------------------------------------------------------------------

/// One REPL input: either a bare expression (normalized and printed) or
/// `add|mul|div|compare <a>, <b>`.  `history` lists past inputs; `quit`
/// or `exit` leaves the loop.  Errors are reported inline and the loop
/// continues.
fn repl_line(line: &str, cfg: &Config, json: bool) -> Result<String> {
    for (name, op) in [
        ("add", arith::add as fn(&Numeral, &Numeral, &Config) -> Result<Numeral>),
        ("mul", arith::mul),
        ("div", arith::div_exact),
    ] {
        if let Some(rest) = strip_command(line, name) {
            let (a, b) = split_two(rest)?;
            return binary(a, b, cfg, json, op);
        }
    }
    if let Some(rest) = strip_command(line, "compare") {
        let (a, b) = split_two(rest)?;
        let x = textio::parse(a, cfg)?;
        let y = textio::parse(b, cfg)?;
        return Ok(match order::compare(&x, &y, cfg)? {
            Ordering::Greater => "GT",
            Ordering::Less => "LT",
            Ordering::Equal => "EQ",
        }
        .to_string());
    }
    let n = textio::parse(line, cfg)?;
    Ok(render_numeral(&n, json))
}

fn strip_command<'a>(line: &'a str, name: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(name)?;
    if rest.starts_with([' ', '\t']) {
        Some(rest.trim_start())
    } else {
        None
    }
}

fn split_two(rest: &str) -> Result<(&str, &str)> {
    match rest.split_once(',') {
        Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => {
            Ok((a.trim(), b.trim()))
        }
        _ => Err(arg_error("expected two expressions separated by ','")),
    }
}

fn run_repl(cfg: &Config, json: bool) {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut history: Vec<String> = Vec::new();
    let _ = write!(out, "> ");
    let _ = out.flush();
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(_) => break,
        };
        let input = line.trim();
        if input.is_empty() {
            let _ = write!(out, "> ");
            let _ = out.flush();
            continue;
        }
        if input == "quit" || input == "exit" {
            break;
        }
        if input == "history" {
            for (i, h) in history.iter().enumerate() {
                let _ = writeln!(out, "{}: {}", i + 1, h);
            }
        } else {
            history.push(input.to_string());
            match repl_line(input, cfg, json) {
                Ok(s) => {
                    let _ = writeln!(out, "{s}");
                }
                Err(e) => {
                    let _ = writeln!(out, "error: {e}");
                }
            }
        }
        let _ = write!(out, "> ");
        let _ = out.flush();
    }
    let _ = writeln!(out);
}
