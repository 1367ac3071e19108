//! Exact sparse arithmetic in the free associative algebra over a finite
//! alphabet: words, rational coefficients, products, commutators and the
//! adjoint operator.

mod alphabet;
mod poly;
mod word;

pub use alphabet::{Alphabet, Letter};
pub use poly::{render_terms, NcPoly};
pub use word::Word;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `k!` as an exact integer.
pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
}
