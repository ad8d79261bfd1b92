//! An exact symbolic calculator for the grossone positional numeral system.
//!
//! Values are finite formal sums `Σ cᵢ·①^pᵢ` where the grossdigits `cᵢ` are
//! exact rationals and the grosspowers `pᵢ` are themselves numerals of strictly
//! smaller nesting level.  The infinite unit ① is read as the factorial of an
//! unboundedly large integer, so every order/sign question is answered by the
//! eventual behaviour of the value as that base grows — and the answer is
//! either provably correct or an explicit abstention ([`Error::Undecided`]),
//! never a guess.
//!
//! The crate is organised as a small stack of pure modules:
//!
//! * [`numeral`] — the stratified term algebra, canonical forms, levels;
//! * [`order`] — sign, total order, dominant asymptotics, limits;
//! * [`arith`] — ring operations, integer powers, exact division, special powers;
//! * [`classify`] — the literal syntactic classification and the semantic one;
//! * [`segment`] — the initial segment `{1, …, ①}`, progressions, counting measure;
//! * [`oracle`] — certified interval evaluation at concrete factorial bases;
//! * [`textio`] — grammar, canonical printer, JSON serialization;
//! * [`cli`] — the command-line front end.
//!
//! All operations are pure functions over immutable values; a [`Config`] is
//! passed explicitly wherever recursion depth or expansion effort is bounded.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod numeral;
pub mod oracle;
pub mod order;
pub mod segment;
pub mod textio;

pub use numeral::{GrossTerm, Grossdigit, Level, Numeral};
pub use order::{ExtendedLimit, Sign};

/// Tunable bounds shared by every operation that recurses over numerals.
///
/// A `Config` is plain data; clone it freely and pass it by reference.  The
/// defaults match the command-line defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Maximum nesting level of grosspowers.  Numerals that would exceed this
    /// are rejected with [`Error::LevelExceeded`] instead of being built.
    pub max_level: u32,
    /// Maximum order of the series expansion used when comparing terms whose
    /// grosspowers differ only infinitesimally.  When the budget runs out
    /// without a dominance certificate the order engine abstains.
    pub expansion_budget: u32,
    /// Selects the inclusive reading of the syntactic "finite" clause: a
    /// numeral with one zero grosspower and otherwise negative grosspowers
    /// also counts as finite.  The default is the literal reading (exactly
    /// one term, its grosspower zero).
    pub sergeyev_finite_inclusive: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_level: 3,
            expansion_budget: 8,
            sergeyev_finite_inclusive: false,
        }
    }
}

/// Everything that can go wrong in this crate.
///
/// `Undecided` and `PrecisionExhausted` are *abstentions*: the requested
/// question has a definite answer in principle, but the engine refuses to
/// guess beyond its certified budget.  All other variants are genuine domain
/// or input errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A numeral would nest grosspowers deeper than [`Config::max_level`].
    #[error("numeral exceeds the maximum nesting level {max}")]
    LevelExceeded { max: u32 },
    /// The order engine could not certify a sign within its expansion budget.
    #[error("undecided: no dominance certificate within the expansion budget")]
    Undecided,
    /// An operation that needs a nonzero numeral was given zero.
    #[error("operation undefined for the zero numeral")]
    ZeroInput,
    /// Division by the zero numeral.
    #[error("division by zero")]
    DivisionByZero,
    /// Long division did not terminate with remainder zero.
    #[error("not exactly divisible")]
    NotExactlyDivisible,
    /// The requested power has no numeral form in this fragment.
    #[error("result is not representable as a numeral")]
    NotRepresentable,
    /// Measure was asked for overlapping set parts.
    #[error("set parts are not pairwise disjoint")]
    NotDisjoint,
    /// The successor would leave the initial segment `{1, …, ①}`.
    #[error("successor leaves the segment {{1, …, ①}}")]
    SegmentOverflow,
    /// Interval refinement hit the precision cap without excluding zero.
    #[error("precision exhausted before the interval excluded zero")]
    PrecisionExhausted,
    /// A brute-force enumeration was asked for a base too large to iterate.
    #[error("enumeration budget exceeded for this base")]
    BudgetExceeded,
    /// Unparsable input text; `pos` is a byte offset into the input.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
