//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the algebra, dynamics, combinatorics, and analysis
/// modules. Validation failures carry enough context to be actionable from
/// the command line.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("modulus must satisfy 2 <= N < 2^31, got {0}")]
    BadModulus(u64),

    #[error("rule `{name}` is not reversible: determinant {det} is not a unit monomial mod {modulus}")]
    NotReversible {
        name: String,
        det: String,
        modulus: u64,
    },

    #[error(
        "rule `{0}` is not palindromic (entries change under q -> 1/q); \
         the reflection/translation reduction behind xi and the heat map \
         requires a palindromic rule"
    )]
    NotPalindromic(String),

    #[error("insertion (0, 0) is the identity operator; commutator runs need a nontrivial insertion")]
    IdentityInsertion,

    #[error("insertion exponents ({q}, {p}) must lie in [0, {n})")]
    InsertionOutOfRange { q: u64, p: u64, n: u64 },

    #[error("ideal order {order} out of range for a fence of order {n}")]
    IdealOrderOutOfRange { order: usize, n: usize },

    #[error("hypergeometric sum for t = {t} is not an integer: {value}")]
    NonIntegerWhitney { t: u32, value: String },

    #[error("whitney cross-check failed at t = {t}: series gives {series}, ideal count gives {ideals}")]
    WhitneyMismatch {
        t: u32,
        series: String,
        ideals: String,
    },

    #[error("cone fit needs at least 2 rows with a cell >= threshold, found {0}")]
    TooFewConeRows(usize),

    #[error("box counting needs at least 4 strictly increasing horizons, got {0:?}")]
    BadHorizons(Vec<u32>),

    #[error("pattern is empty at horizon T = {0}: log(sum f) undefined")]
    EmptyPattern(u32),

    #[error("invalid factorization: kappa {kappa} * {p}^{ell} != N = {n}")]
    BadFactorization { kappa: u64, p: u64, ell: u32, n: u64 },

    #[error("kappa = {kappa} and p = {p} must be coprime")]
    NotCoprime { kappa: u64, p: u64 },

    #[error("p = {0} is not prime")]
    NotPrime(u64),

    #[error("rule `{0}` does not preserve the subalgebra of kappa-multiple exponents")]
    SubalgebraNotClosed(String),

    #[error("invalid rule file: {0}")]
    RuleFile(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Shorthand used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
