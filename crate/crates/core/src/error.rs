//! Error types shared across the kernel.
//!
//! Data-dependent failures (division by zero, improper ideals, iteration caps)
//! are reported through [`Error`]. Structural misuse of the kernel, such as
//! mixing elements of different rings or multiplying matrices of incompatible
//! shapes, is a caller bug and panics with a descriptive message instead.

use thiserror::Error;

/// Errors produced by kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A modulus passed to the prime-field constructor is not prime.
    #[error("{0} is not a prime number")]
    NotPrime(u64),

    /// A modulus is outside the supported range (2..2^31).
    #[error("prime {0} out of supported range (must be below 2^31)")]
    PrimeOutOfRange(u64),

    /// Division by the zero element of a field or ring.
    #[error("division by zero")]
    DivisionByZero,

    /// The zero polynomial has no lead term or total degree.
    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    /// A polynomial ring was declared with no variables or duplicate names.
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    /// Too many variables for the dense exponent representation.
    #[error("too many variables: {0} (at most {1} supported)")]
    TooManyVariables(usize, usize),

    /// Localization at an ideal containing a unit is not a local ring.
    #[error("cannot localize at the unit ideal")]
    UnitIdeal,

    /// A fraction was constructed with a denominator inside the prime.
    #[error("denominator lies in the prime ideal")]
    DenominatorInPrime,

    /// Inversion of a fraction that is not a unit of the local ring.
    #[error("element is not a unit of the local ring")]
    NotAUnit,

    /// A parameter ideal generator must be a non-unit.
    #[error("parameter ideal generator is a unit")]
    UnitGenerator,

    /// Betti ranks are only defined for complexes without unit entries.
    #[error("complex is not pruned; betti ranks require a minimal complex")]
    NotPruned,

    /// The length iteration exceeded its cap without reaching zero.
    #[error("length did not stabilize after {cap} steps; module possibly has infinite length")]
    PossiblyInfiniteLength { cap: usize },

    /// Iterated syzygies ran past the global dimension bound; signals an
    /// engine bug rather than a property of the input.
    #[error("resolution exceeded {bound} steps, beyond the global dimension bound")]
    ResolutionGuard { bound: usize },
}

/// Convenience alias used throughout the kernel.
pub type Result<T> = std::result::Result<T, Error>;
