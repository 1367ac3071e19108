use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Alphabet, Letter, Rational, Word};

/// An element of the free associative algebra over the rationals: a finite,
/// sparse linear combination of words.
///
/// Terms are kept in a map ordered by the deg-lex monomial order, and no
/// stored coefficient is ever zero. The zero polynomial is the empty map.
///
/// The `checked_*` methods report an alphabet mismatch as an error; the
/// operator impls (`&p + &q`, `&p * &q`, ...) panic on mismatch instead.
#[derive(Clone, Debug)]
pub struct NcPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Rational>,
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_alphabet(other) && self.terms == other.terms
    }
}

impl Eq for NcPoly {}

impl NcPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NcPoly {
            alphabet: Arc::clone(alphabet),
            terms: BTreeMap::new(),
        }
    }

    /// The unit, i.e. the empty word with coefficient one.
    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::monomial(alphabet, Rational::one(), Word::empty())
    }

    pub fn letter(alphabet: &Arc<Alphabet>, letter: Letter) -> Self {
        assert!(alphabet.contains(letter), "letter outside alphabet");
        Self::monomial(alphabet, Rational::one(), Word::letter(letter))
    }

    /// The letter with the given name.
    ///
    /// # Panics
    /// If `name` is not part of the alphabet.
    pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> Self {
        let letter = alphabet
            .letter(name)
            .unwrap_or_else(|| panic!("no letter {name:?} in {alphabet}"));
        Self::letter(alphabet, letter)
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, coeff: Rational, word: Word) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    /// Builds a polynomial from `(word, coefficient)` pairs, merging repeated
    /// words and dropping zero sums.
    pub fn from_terms<I>(alphabet: &Arc<Alphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn same_alphabet(&self, other: &NcPoly) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet
    }

    fn check_alphabet(&self, other: &NcPoly) -> Result<(), AlgebraError> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            })
        }
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Support words in monomial order.
    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient `(P, w)`; zero when `w` is not in the support.
    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Word::empty())
    }

    /// Largest word length present, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    /// Smallest word length present, `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::degree)
    }

    /// `Some(n)` if the polynomial is nonzero and every word has length `n`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// Adds `coeff * word` in place, removing the entry if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled_in_place(&mut self, other: &NcPoly, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn checked_add(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.checked_add_scaled(other, &Rational::one())
    }

    pub fn checked_sub(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.checked_add_scaled(other, &-Rational::one())
    }

    /// `self + factor * other`.
    pub fn checked_add_scaled(
        &self,
        other: &NcPoly,
        factor: &Rational,
    ) -> Result<NcPoly, AlgebraError> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        out.add_scaled_in_place(other, factor);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        NcPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.checked_mul_truncated(other, usize::MAX)
    }

    /// Product keeping only words of length at most `max_degree`.
    pub fn checked_mul_truncated(
        &self,
        other: &NcPoly,
        max_degree: usize,
    ) -> Result<NcPoly, AlgebraError> {
        self.check_alphabet(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, a) in &self.terms {
            if u.degree() > max_degree {
                break;
            }
            let room = max_degree - u.degree();
            for (v, b) in &other.terms {
                if v.degree() > room {
                    break;
                }
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `L_X(Z) = XZ` with `self` as `X`.
    pub fn left_mul(&self, z: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.checked_mul(z)
    }

    /// `R_X(Z) = ZX` with `self` as `X`.
    pub fn right_mul(&self, z: &NcPoly) -> Result<NcPoly, AlgebraError> {
        z.checked_mul(self)
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check_alphabet(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a * b;
                out.add_term(u.concat(v), c.clone());
                out.add_term(v.concat(u), -c);
            }
        }
        Ok(out)
    }

    /// `ad_X(Y) = [X, Y]` with `self` as `X`.
    pub fn ad(&self, y: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.commutator(y)
    }

    /// `ad_X^n(Y) = [X, [X, ... [X, Y]]]` with `X` occurring `n` times.
    pub fn ad_pow(&self, n: usize, y: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check_alphabet(y)?;
        let mut out = y.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = self.commutator(&out)?;
        }
        Ok(out)
    }

    /// `[a, self]` for a single letter; cheaper than a general commutator.
    pub fn ad_letter(&self, a: Letter) -> NcPoly {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.prepend(a), c.clone());
            out.add_term(w.append(a), -c.clone());
        }
        out
    }

    /// All terms of exact degree `n`.
    pub fn homogeneous_component(&self, n: usize) -> NcPoly {
        NcPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every word longer than `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> NcPoly {
        NcPoly {
            alphabet: Arc::clone(&self.alphabet),
            terms: self
                .terms
                .iter()
                .take_while(|(w, _)| w.degree() <= max_degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Nonzero coefficients `(k, α_k)` of the pure powers `a^k`, `k ≥ 0`,
    /// in increasing `k`.
    pub fn pure_power_coefficients(&self, a: Letter) -> Vec<(usize, Rational)> {
        self.terms
            .iter()
            .filter_map(|(w, c)| w.pure_power_of(a).map(|k| (k, c.clone())))
            .collect()
    }

    /// Applies a letter substitution into another alphabet.
    pub fn map_letters(&self, target: &Arc<Alphabet>, f: impl Fn(Letter) -> Letter) -> NcPoly {
        NcPoly::from_terms(
            target,
            self.terms.iter().map(|(w, c)| (w.map_letters(&f), c.clone())),
        )
    }

    /// Text rendering with a custom term renderer, e.g. `1/2*AB - 1/2*BA`.
    pub fn render_with(&self, render_word: impl Fn(&Word) -> String) -> String {
        render_terms(self.terms.iter().map(|(w, c)| (render_word(w), c)))
    }
}

/// Shared text layout for linear combinations of rendered terms:
/// `c1*t1 + c2*t2 - ...`, with unit coefficients elided, the unit term `1`
/// printed as a bare coefficient, and `0` for the empty sum.
pub fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Rational)>,
{
    let mut out = String::new();
    for (i, (term, c)) in terms.into_iter().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if term == "1" {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&term);
        } else {
            out.push_str(&format!("{mag}*{term}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|w| w.render(&self.alphabet)))
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;

    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.checked_add(rhs).expect("alphabet mismatch in addition")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;

    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.checked_sub(rhs).expect("alphabet mismatch in subtraction")
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;

    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.checked_mul(rhs).expect("alphabet mismatch in product")
    }
}

impl Mul<&NcPoly> for &Rational {
    type Output = NcPoly;

    fn mul(self, rhs: &NcPoly) -> NcPoly {
        rhs.scale(self)
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;

    fn neg(self) -> NcPoly {
        self.scale(&-Rational::one())
    }
}
