//! Truncated formal power series in noncommuting variables.
//!
//! A [`TruncatedSeries`] is a polynomial together with the degree `N` beyond
//! which everything is discarded. Products of two series are truncated at the
//! smaller of the two orders. `exp` and `log` use Horner accumulation so no
//! intermediate ever holds words longer than the order.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Alphabet, NcPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected constant term {expected}, found {found}")]
    ConstantTerm { expected: Rational, found: Rational },
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// An element of the formal power series ring modulo words longer than `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    body: NcPoly,
    order: usize,
}

impl TruncatedSeries {
    pub fn new(body: &NcPoly, order: usize) -> Self {
        TruncatedSeries {
            body: body.truncate(order),
            order,
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>, order: usize) -> Self {
        Self::new(&NcPoly::one(alphabet), order)
    }

    pub fn body(&self) -> &NcPoly {
        &self.body
    }

    pub fn into_body(self) -> NcPoly {
        self.body
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.body.alphabet()
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let order = self.order.min(other.order);
        Ok(TruncatedSeries {
            body: self.body.checked_mul_truncated(&other.body, order)?,
            order,
        })
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let order = self.order.min(other.order);
        Ok(TruncatedSeries {
            body: self.body.checked_add(&other.body)?.truncate(order),
            order,
        })
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            body: -&self.body,
            order: self.order,
        }
    }

    /// `exp(X) = Σ_{k=0}^{N} X^k / k!` for constant-free `X`.
    pub fn exp(&self) -> Result<TruncatedSeries, SeriesError> {
        let c = self.body.constant_term();
        if !c.is_zero() {
            return Err(SeriesError::ConstantTerm {
                expected: Rational::zero(),
                found: c,
            });
        }
        // 1 + X(1 + X/2(1 + X/3(...)))
        let one = NcPoly::one(self.alphabet());
        let mut acc = one.clone();
        for k in (1..=self.order).rev() {
            let step = self
                .body
                .checked_mul_truncated(&acc, self.order)?
                .scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            acc = &one + &step;
        }
        Ok(TruncatedSeries {
            body: acc,
            order: self.order,
        })
    }

    /// `log(S) = Σ_{k=1}^{N} (-1)^{k+1}/k (S-1)^k` for `S` with unit constant term.
    pub fn log(&self) -> Result<TruncatedSeries, SeriesError> {
        let c = self.body.constant_term();
        if !c.is_one() {
            return Err(SeriesError::ConstantTerm {
                expected: Rational::one(),
                found: c,
            });
        }
        let alphabet = Arc::clone(self.alphabet());
        let y = &self.body - &NcPoly::one(&alphabet);
        let coeff = |k: usize| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), BigInt::from(k))
        };
        if self.order == 0 {
            return Ok(TruncatedSeries::new(&NcPoly::zero(&alphabet), 0));
        }
        // Y(c1 + Y(c2 + ... + Y cN))
        let mut acc = NcPoly::monomial(&alphabet, coeff(self.order), Default::default());
        for k in (1..self.order).rev() {
            let shifted = y.checked_mul_truncated(&acc, self.order)?;
            acc = &shifted + &NcPoly::monomial(&alphabet, coeff(k), Default::default());
        }
        Ok(TruncatedSeries {
            body: y.checked_mul_truncated(&acc, self.order)?,
            order: self.order,
        })
    }
}

/// Homogeneous components `C_1..C_N` of `log(e^A e^B)` by direct expansion.
///
/// Index `i` of the returned vector holds `C_{i+1}`.
pub fn bch_direct(degree: usize) -> Result<Vec<NcPoly>, SeriesError> {
    bch_direct_over(&Alphabet::ab(), degree)
}

/// Same as [`bch_direct`], over a caller-provided alphabet whose first two
/// letters play the roles of `A` and `B`.
pub fn bch_direct_over(alphabet: &Arc<Alphabet>, degree: usize) -> Result<Vec<NcPoly>, SeriesError> {
    if degree == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    let letters: Vec<_> = alphabet.letters().take(2).collect();
    let a = TruncatedSeries::new(&NcPoly::letter(alphabet, letters[0]), degree);
    let b = TruncatedSeries::new(&NcPoly::letter(alphabet, letters[1]), degree);
    let c = a.exp()?.mul(&b.exp()?)?.log()?.into_body();
    Ok((1..=degree).map(|n| c.homogeneous_component(n)).collect())
}

/// Compares `e^X Y e^{-X}` with `Σ_{k=0}^{N} ad_X^k(Y) / k!` modulo words
/// longer than `order`.
pub fn check_exp_ad_identity(x: &NcPoly, y: &NcPoly, order: usize) -> Result<bool, SeriesError> {
    for p in [x, y] {
        let c = p.constant_term();
        if !c.is_zero() {
            return Err(SeriesError::ConstantTerm {
                expected: Rational::zero(),
                found: c,
            });
        }
    }
    let xs = TruncatedSeries::new(x, order);
    let ys = TruncatedSeries::new(y, order);
    let lhs = xs.exp()?.mul(&ys)?.mul(&xs.neg().exp()?)?;

    let mut rhs = NcPoly::zero(x.alphabet());
    let mut term = y.truncate(order);
    let mut fact = BigInt::one();
    for k in 0..=order {
        if k > 0 {
            fact *= BigInt::from(k);
            // X is constant-free, so each bracket raises the minimal degree and
            // truncating between steps is exact.
            term = x.ad(&term)?.truncate(order);
        }
        rhs = rhs.checked_add_scaled(&term, &Rational::new(BigInt::one(), fact.clone()))?;
    }
    Ok(lhs.body == rhs)
}
