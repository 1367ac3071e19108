//! Lie polynomials through the right-normed bracketing map.
//!
//! `r` sends a word `w1 w2 ... wn` to `[w1,[w2,[...,[w(n-1),wn]...]]]` and is
//! extended linearly. A homogeneous polynomial `P` of degree `n` is a Lie
//! polynomial exactly when `r(P) = n P`, which also yields the explicit
//! right-normed representation `P = r(P) / n`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{render_terms, AlgebraError, Alphabet, Letter, NcPoly, Rational, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("right-normed bracketing is undefined on the empty word (constant term {0})")]
    ConstantTerm(Rational),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("degree-{degree} polynomial is not a Lie polynomial")]
    NotLie { degree: usize },
    #[error("polynomial contains the pure power term {coeff}*{letter}^{power}")]
    PurePowerTerm {
        letter: String,
        power: usize,
        coeff: Rational,
    },
    #[error("invalid right-normed combination: {0}")]
    InvalidCombination(String),
}

/// Linear extension of the right-normed bracketing, via `r(x) = x` and
/// `r(xP) = [x, r(P)]`.
pub fn rmap(p: &NcPoly) -> Result<NcPoly, LieError> {
    let c = p.constant_term();
    if !c.is_zero() {
        return Err(LieError::ConstantTerm(c));
    }
    Ok(rmap_unchecked(p))
}

fn rmap_unchecked(p: &NcPoly) -> NcPoly {
    let alphabet = p.alphabet();
    // P = Σ_x x·P_x; all words sharing a first letter share one recursive call.
    let mut by_first: BTreeMap<Letter, NcPoly> = BTreeMap::new();
    for (w, c) in p.terms() {
        let Some(x) = w.first() else { continue };
        by_first
            .entry(x)
            .or_insert_with(|| NcPoly::zero(alphabet))
            .add_term(w.tail(), c.clone());
    }
    let mut out = NcPoly::zero(alphabet);
    for (x, mut rest) in by_first {
        let c = rest.constant_term();
        if !c.is_zero() {
            out.add_term(Word::letter(x), c.clone());
            rest.add_term(Word::empty(), -c);
        }
        if !rest.is_zero() {
            for (w, v) in rmap_unchecked(&rest).ad_letter(x).into_terms() {
                out.add_term(w, v);
            }
        }
    }
    out
}

/// Dynkin criterion for a nonzero homogeneous `P` of degree `n`: `r(P) = nP`.
///
/// Every homogeneous Lie polynomial satisfies `r(P) = nP`. Conversely, if
/// `r(P) = nP` then `P = r(P)/n` lies in the image of `r`, which consists of
/// Lie polynomials, so the test is exact in both directions.
pub fn dynkin_is_lie(p: &NcPoly) -> Result<bool, LieError> {
    let n = homogeneous_degree(p)?;
    Ok(dynkin_holds(p, n, &rmap(p)?))
}

fn dynkin_holds(p: &NcPoly, n: usize, rp: &NcPoly) -> bool {
    *rp == p.scale(&Rational::from_integer(BigInt::from(n)))
}

fn homogeneous_degree(p: &NcPoly) -> Result<usize, LieError> {
    if p.is_zero() {
        return Err(LieError::ZeroPolynomial);
    }
    let n = p.homogeneous_degree().ok_or(LieError::NotHomogeneous)?;
    if n == 0 {
        return Err(LieError::ConstantTerm(p.constant_term()));
    }
    Ok(n)
}

/// Component-wise Dynkin test for an arbitrary polynomial. Zero counts as Lie;
/// a nonzero constant term does not.
pub fn is_lie_polynomial(p: &NcPoly) -> Result<bool, LieError> {
    if !p.constant_term().is_zero() {
        return Ok(false);
    }
    let Some(top) = p.max_degree() else {
        return Ok(true);
    };
    for n in 1..=top {
        let part = p.homogeneous_component(n);
        if !part.is_zero() && !dynkin_is_lie(&part)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ c_i [w_i1,[w_i2,[...]]]` over words of one common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightNormedCombination {
    alphabet: Arc<Alphabet>,
    degree: usize,
    terms: Vec<(Rational, Word)>,
}

impl RightNormedCombination {
    /// Normalizes the input: duplicate words are merged, zero coefficients
    /// dropped, and terms sorted by monomial order.
    pub fn new<I>(alphabet: &Arc<Alphabet>, degree: usize, terms: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (Rational, Word)>,
    {
        if degree == 0 {
            return Err(LieError::InvalidCombination("degree must be at least 1".into()));
        }
        let mut merged: BTreeMap<Word, Rational> = BTreeMap::new();
        for (c, w) in terms {
            if w.degree() != degree {
                return Err(LieError::InvalidCombination(format!(
                    "word of length {} in a degree-{degree} combination",
                    w.degree()
                )));
            }
            if w.letters().iter().any(|&l| !alphabet.contains(l)) {
                return Err(LieError::InvalidCombination("letter outside alphabet".into()));
            }
            *merged.entry(w).or_insert_with(Rational::zero) += c;
        }
        Ok(RightNormedCombination {
            alphabet: Arc::clone(alphabet),
            degree,
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (c, w))
                .collect(),
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(Rational, Word)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates the bracket expression as an ordinary polynomial.
    pub fn expand(&self) -> NcPoly {
        let p = NcPoly::from_terms(
            &self.alphabet,
            self.terms.iter().map(|(c, w)| (w.clone(), c.clone())),
        );
        rmap_unchecked(&p)
    }

    /// Text form such as `1/4*[A,B] - 1/4*[B,A]`.
    pub fn render(&self) -> String {
        render_terms(
            self.terms
                .iter()
                .map(|(c, w)| (w.render_bracket(&self.alphabet), c)),
        )
    }
}

/// Free-function form of [`RightNormedCombination::expand`].
pub fn expand_rightnormed(r: &RightNormedCombination) -> NcPoly {
    r.expand()
}

/// Writes a homogeneous Lie polynomial as `P = (1/n) Σ_w (P,w) r(w)`.
pub fn rightnormed_form(p: &NcPoly) -> Result<RightNormedCombination, LieError> {
    let n = homogeneous_degree(p)?;
    if !dynkin_holds(p, n, &rmap(p)?) {
        return Err(LieError::NotLie { degree: n });
    }
    let inv_n = Rational::new(BigInt::one(), BigInt::from(n));
    RightNormedCombination::new(
        p.alphabet(),
        n,
        p.terms().map(|(w, c)| (c * &inv_n, w.clone())),
    )
}

fn require_constant_free(p: &NcPoly) -> Result<(), LieError> {
    let c = p.constant_term();
    if c.is_zero() {
        Ok(())
    } else {
        Err(LieError::ConstantTerm(c))
    }
}

fn require_lie(p: &NcPoly) -> Result<(), LieError> {
    if is_lie_polynomial(p)? {
        Ok(())
    } else {
        Err(LieError::NotLie {
            degree: p.max_degree().unwrap_or(0),
        })
    }
}

/// `r(r(P) Q) = [r(P), r(Q)]`.
pub fn check_baker_identity(p: &NcPoly, q: &NcPoly) -> Result<bool, LieError> {
    check_baker_identity_with(rmap, p, q)
}

/// [`check_baker_identity`] with a caller-supplied bracketing map.
pub fn check_baker_identity_with<F>(r: F, p: &NcPoly, q: &NcPoly) -> Result<bool, LieError>
where
    F: Fn(&NcPoly) -> Result<NcPoly, LieError>,
{
    require_constant_free(p)?;
    require_constant_free(q)?;
    let rp = r(p)?;
    let lhs = r(&rp.checked_mul(q)?)?;
    let rhs = rp.commutator(&r(q)?)?;
    Ok(lhs == rhs)
}

/// `r([P1, P2]) = [P1, r(P2)] + [r(P1), P2]` for Lie polynomials `P1`, `P2`.
pub fn check_derivation(p1: &NcPoly, p2: &NcPoly) -> Result<bool, LieError> {
    check_derivation_with(rmap, p1, p2)
}

pub fn check_derivation_with<F>(r: F, p1: &NcPoly, p2: &NcPoly) -> Result<bool, LieError>
where
    F: Fn(&NcPoly) -> Result<NcPoly, LieError>,
{
    require_lie(p1)?;
    require_lie(p2)?;
    let lhs = r(&p1.commutator(p2)?)?;
    let rhs = p1.commutator(&r(p2)?)?.checked_add(&r(p1)?.commutator(p2)?)?;
    Ok(lhs == rhs)
}

/// `r(P a) = -ad_a(P)` for a Lie polynomial `P`.
pub fn check_rpa(p: &NcPoly, a: Letter) -> Result<bool, LieError> {
    check_rpa_with(rmap, p, a)
}

pub fn check_rpa_with<F>(r: F, p: &NcPoly, a: Letter) -> Result<bool, LieError>
where
    F: Fn(&NcPoly) -> Result<NcPoly, LieError>,
{
    require_lie(p)?;
    let letter = NcPoly::letter(p.alphabet(), a);
    let lhs = r(&p.checked_mul(&letter)?)?;
    Ok(lhs == -&p.ad_letter(a))
}

/// For `P` free of pure powers of `a`: `[a, P] = 0` only when `P = 0`.
pub fn check_ad_injectivity(p: &NcPoly, a: Letter) -> Result<bool, LieError> {
    if let Some((power, coeff)) = p.pure_power_coefficients(a).into_iter().next() {
        return Err(LieError::PurePowerTerm {
            letter: p.alphabet().name(a).to_owned(),
            power,
            coeff,
        });
    }
    Ok(p.is_zero() || !p.ad_letter(a).is_zero())
}
