//! Crate-wide error type.

use std::fmt;

/// Errors reported by the arithmetic, polynomial and criterion operations.
///
/// `InternalFault` is reserved for conditions that a correct build can never
/// reach (e.g. an exact division leaving a remainder); callers should treat it
/// as a defect, not as bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The value failed the deterministic primality test.
    NotPrime(u64),
    /// The prime exceeds the supported scan width (its square must fit in 64 bits).
    PrimeTooLarge(u64),
    /// The operation is defined for odd primes only (p = 2 routes to the
    /// Dedekind oracle).
    OddPrimeRequired(u64),
    /// The prime is not in the residue class the operation requires mod 4.
    WrongResidueClass { p: u64, needed_mod4: u64 },
    /// No inverse exists: gcd(value, modulus) > 1.
    NotInvertible { value: u64, modulus: u64 },
    /// Two operands carry different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// Division by the zero polynomial.
    ZeroPolynomialDivision,
    /// gcd(0, 0) is undefined.
    GcdBothZero,
    /// The operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// The operation requires a monic polynomial.
    NotMonic,
    /// The polynomial degree exceeds the configured ceiling.
    DegreeCeiling { degree: usize, ceiling: usize },
    /// The polynomial degree is below the operation's minimum.
    DegreeBelowMinimum { degree: usize, minimum: usize },
    /// A condition that must hold by construction failed; indicates a defect.
    InternalFault(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::PrimeTooLarge(n) => {
                write!(
                    f,
                    "prime {n} exceeds the supported width (p² must fit in 64 bits)"
                )
            }
            Error::OddPrimeRequired(p) => write!(f, "operation requires an odd prime, got {p}"),
            Error::WrongResidueClass { p, needed_mod4 } => {
                write!(f, "prime {p} is not congruent to {needed_mod4} mod 4")
            }
            Error::NotInvertible { value, modulus } => {
                write!(f, "{value} is not invertible mod {modulus}")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::ZeroPolynomialDivision => write!(f, "division by the zero polynomial"),
            Error::GcdBothZero => write!(f, "gcd of two zero polynomials is undefined"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::NotMonic => write!(f, "operation requires a monic polynomial"),
            Error::DegreeCeiling { degree, ceiling } => {
                write!(f, "degree {degree} exceeds the ceiling {ceiling}")
            }
            Error::DegreeBelowMinimum { degree, minimum } => {
                write!(f, "degree {degree} is below the minimum {minimum}")
            }
            Error::InternalFault(msg) => write!(f, "internal fault: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
