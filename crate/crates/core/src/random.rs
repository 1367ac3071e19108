//! Seeded random inputs for the identity checkers: words, polynomials and
//! Lie elements built from random bracketings.
//!
//! Every generator takes the RNG explicitly; nothing here draws entropy on
//! its own.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use crate::algebra::{Alphabet, Letter, NcPoly, Rational, Word};

/// Nonzero rational with numerator in `[-6, 6]` and denominator in `[1, 5]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.random_range(-6..=6);
    }
    let den: i64 = rng.random_range(1..=5);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet) -> Letter {
    Letter(rng.random_range(0..alphabet.len()) as u8)
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| random_letter(rng, alphabet)).collect())
}

/// Up to `max_terms` random terms with word lengths in `min_degree..=max_degree`.
/// With `min_degree ≥ 1` the result is constant-free.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    min_degree: usize,
    max_degree: usize,
    max_terms: usize,
) -> NcPoly {
    let count = rng.random_range(1..=max_terms.max(1));
    NcPoly::from_terms(
        alphabet,
        (0..count).map(|_| {
            let len = rng.random_range(min_degree..=max_degree);
            (random_word(rng, alphabet, len), random_rational(rng))
        }),
    )
}

/// Random homogeneous polynomial of the given degree containing no pure power
/// of `avoid`. May be zero if every drawn term cancels.
pub fn random_avoiding_power<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    avoid: Letter,
    degree: usize,
    max_terms: usize,
) -> NcPoly {
    let mut p = random_poly(rng, alphabet, degree, degree, max_terms);
    for (k, c) in p.pure_power_coefficients(avoid) {
        p.add_term(Word::power(avoid, k), -c);
    }
    p
}

/// A random full bracketing of a random letter sequence of length `degree`,
/// e.g. `[[A,C],[B,[A,B]]]`, expanded as a polynomial. Can be zero.
pub fn random_bracketing<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    degree: usize,
) -> NcPoly {
    assert!(degree >= 1, "bracketings have degree at least 1");
    if degree == 1 {
        return NcPoly::letter(alphabet, random_letter(rng, alphabet));
    }
    let split = rng.random_range(1..degree);
    let left = random_bracketing(rng, alphabet, split);
    let right = random_bracketing(rng, alphabet, degree - split);
    left.commutator(&right).expect("same alphabet")
}

/// Homogeneous Lie element: a random combination of random bracketings.
pub fn random_lie_homogeneous<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    degree: usize,
    max_terms: usize,
) -> NcPoly {
    let count = rng.random_range(1..=max_terms.max(1));
    let mut p = NcPoly::zero(alphabet);
    for _ in 0..count {
        let t = random_bracketing(rng, alphabet, degree);
        p = p.checked_add_scaled(&t, &random_rational(rng)).expect("same alphabet");
    }
    p
}

/// Lie element mixing degrees `1..=max_degree`.
pub fn random_lie<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    max_degree: usize,
    max_terms: usize,
) -> NcPoly {
    let count = rng.random_range(1..=max_terms.max(1));
    let mut p = NcPoly::zero(alphabet);
    for _ in 0..count {
        let degree = rng.random_range(1..=max_degree);
        let t = random_bracketing(rng, alphabet, degree);
        p = p.checked_add_scaled(&t, &random_rational(rng)).expect("same alphabet");
    }
    p
}
