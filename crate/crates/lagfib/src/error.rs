//! Error type shared by the whole crate.
//!
//! Every fallible operation returns `Result<T, Error>`. Variants are named
//! after the condition they report, not after the module that raises them,
//! so the same variant can serve e.g. both ring construction and monomial
//! parsing.

use crate::rational::Rational;

/// Crate-wide error enum.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two generators share a name within one ring.
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    /// A generator weight or truncation weight is out of range.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// Binary operation on elements of structurally different rings.
    #[error("ring mismatch: operands belong to different graded rings")]
    RingMismatch,

    /// Formal square root requested of a series whose constant term is not 1.
    #[error("constant term is {0}, expected 1")]
    NonUnitConstantTerm(Rational),

    /// An evaluation key or Chern-number monomial has the wrong weight.
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    /// A generator name is unknown in the ring at hand.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// A rational has no rational n-th root.
    #[error("NotPerfectPower: {value} has no rational root of degree {n}")]
    NotPerfectPower { value: Rational, n: u32 },

    /// Even root of a negative rational.
    #[error("NegativeEvenRoot: {value} is negative and the root degree {n} is even")]
    NegativeEvenRoot { value: Rational, n: u32 },

    /// A quantity that must be positive is zero or negative.
    #[error("non-positive input: {0}")]
    NonPositiveInput(String),

    /// A polarization type violates the divisibility chain or length rule.
    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),

    /// A Betti pair outside the admissible four-fold list.
    #[error("(b2, b3) = ({0}, {1}) is not an admissible four-fold Betti pair")]
    NotInGuanTable(u32, u32),

    /// Census summary requested over an empty row set.
    #[error("empty census")]
    EmptyCensus,

    /// An intersection number came out non-integral (internal inconsistency).
    #[error("non-integer result: {0}")]
    NonIntegerResult(Rational),

    /// Malformed textual input (rational literal, monomial key, record file).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
