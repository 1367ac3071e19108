//! Baker-Campbell-Hausdorff components through the commutator recurrence
//!
//! ```text
//! [B, C_n] = Σ_{m=2}^{n} 1/m! Σ_{k1+...+km=n, kj≥1} ad_{C_k1} ∘ ... ∘ ad_{C_km}(B)  -  1/n! ad_A^n(B)
//! ```
//!
//! with `C_1 = A + B`. The right-hand side only involves `C_1..C_{n-1}`, and
//! `[B, ·]` is inverted by a triangular coefficient solve after fixing the
//! coefficient of `B^n` to zero.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Alphabet, Letter, NcPoly, Rational, Word};
use crate::lie::{rightnormed_form, rmap, LieError, RightNormedCombination};
use crate::series::{bch_direct_over, SeriesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("degree must be at least {min}, got {got}")]
    Degree { min: usize, got: usize },
    #[error("need components C_1..C_{needed}, got {got}")]
    MissingComponents { needed: usize, got: usize },
    #[error("component C_{degree} is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },
    #[error("right-hand side is not in the image of ad_{letter} on degree {degree}")]
    NotInImage { letter: String, degree: usize },
}

/// How a [`BchResult`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Recurrence,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Method::Direct),
            "recurrence" => Ok(Method::Recurrence),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Components `C_1..C_N` (index `i` holds `C_{i+1}`) and their right-normed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchResult {
    pub components: Vec<NcPoly>,
    pub rightnormed: Vec<RightNormedCombination>,
    pub method: Method,
}

impl BchResult {
    pub fn from_components(components: Vec<NcPoly>, method: Method) -> Result<Self, BchError> {
        let rightnormed = components
            .iter()
            .map(rightnormed_form)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BchResult {
            components,
            rightnormed,
            method,
        })
    }

    pub fn degree(&self) -> usize {
        self.components.len()
    }

    /// `C_n`, 1-based.
    pub fn component(&self, n: usize) -> Option<&NcPoly> {
        n.checked_sub(1).and_then(|i| self.components.get(i))
    }
}

/// The first two letters of the alphabet, playing the roles of `A` and `B`.
fn roles(alphabet: &Alphabet) -> (Letter, Letter) {
    debug_assert!(alphabet.len() >= 2);
    (Letter(0), Letter(1))
}

fn unit_fraction(denom: &BigInt) -> Rational {
    Rational::new(BigInt::one(), denom.clone())
}

/// Right-hand side of the recurrence for `[B, C_n]`, given `C_1..C_{n-1}`
/// (extra trailing components are ignored).
///
/// The inner sum over ordered compositions is organized by dynamic
/// programming: `T_m(s)` collects `ad_{C_k1} ∘ ... ∘ ad_{C_km}(B)` over all
/// compositions of `s` into `m` parts, and `T_m(s) = Σ_k ad_{C_k}(T_{m-1}(s-k))`.
pub fn recurrence_rhs(n: usize, components: &[NcPoly]) -> Result<NcPoly, BchError> {
    if n < 2 {
        return Err(BchError::Degree { min: 2, got: n });
    }
    if components.len() < n - 1 {
        return Err(BchError::MissingComponents {
            needed: n - 1,
            got: components.len(),
        });
    }
    let comps = &components[..n - 1];
    for (i, c) in comps.iter().enumerate() {
        if !c.is_zero() && c.homogeneous_degree() != Some(i + 1) {
            return Err(BchError::NotHomogeneous { degree: i + 1 });
        }
        if !c.same_alphabet(&comps[0]) {
            return Err(AlgebraError::AlphabetMismatch {
                left: comps[0].alphabet().to_string(),
                right: c.alphabet().to_string(),
            }
            .into());
        }
    }
    let alphabet = Arc::clone(comps[0].alphabet());
    let (la, lb) = roles(&alphabet);
    let b = NcPoly::letter(&alphabet, lb);
    let c = |k: usize| &comps[k - 1];

    // prev[s] = T_{m-1}(s); entries for s < m-1 stay empty.
    let mut prev: Vec<NcPoly> = (0..=n).map(|_| NcPoly::zero(&alphabet)).collect();
    for s in 1..n {
        prev[s] = c(s).ad(&b)?;
    }

    let mut rhs = NcPoly::zero(&alphabet);
    let mut m_fact = BigInt::one();
    for m in 2..=n {
        m_fact *= BigInt::from(m);
        let mut cur: Vec<NcPoly> = (0..=n).map(|_| NcPoly::zero(&alphabet)).collect();
        for s in m..=n {
            let mut acc = NcPoly::zero(&alphabet);
            for k in 1..=s - (m - 1) {
                let inner = &prev[s - k];
                if inner.is_zero() {
                    continue;
                }
                for (w, v) in c(k).ad(inner)?.into_terms() {
                    acc.add_term(w, v);
                }
            }
            cur[s] = acc;
        }
        rhs = rhs.checked_add_scaled(&cur[n], &unit_fraction(&m_fact))?;
        prev = cur;
    }

    let a = NcPoly::letter(&alphabet, la);
    let ad_a_n = a.ad_pow(n, &b)?;
    // m_fact is now n!
    rhs = rhs.checked_add_scaled(&ad_a_n, &-unit_fraction(&m_fact))?;
    Ok(rhs)
}

/// Solves `[B, X] = Q` for homogeneous `X` of degree `n` with `(X, B^n) = 0`.
pub fn invert_ad_b(q: &NcPoly, n: usize) -> Result<NcPoly, BchError> {
    invert_ad(q, Letter(1), n)
}

/// Solves `[b, X] = Q` for homogeneous `X` of degree `n` with `(X, b^n) = 0`.
///
/// Comparing the coefficient of `v b` on both sides gives
/// `(X, v) = -(Q, v b)` when `v` does not start with `b`, and
/// `(X, b v') = (X, v' b) - (Q, b v' b)` otherwise. Each step moves one
/// leading `b` to the back, so unrolling terminates after at most
/// `leading_b(v) + 1` steps. The result is checked against `Q` so a
/// right-hand side outside the image of `ad_b` is reported instead of
/// silently producing a wrong answer.
pub fn invert_ad(q: &NcPoly, b: Letter, n: usize) -> Result<NcPoly, BchError> {
    let alphabet = q.alphabet();
    let not_in_image = || BchError::NotInImage {
        letter: alphabet.name(b).to_owned(),
        degree: n,
    };
    if q.is_zero() {
        return Ok(NcPoly::zero(alphabet));
    }
    if q.homogeneous_degree() != Some(n + 1) {
        return Err(not_in_image());
    }

    // Every v with (X, v) ≠ 0 has the form b^(i+s-1) u where some Q-word is
    // b^i u b^s with u not starting with b and s ≥ 1.
    let mut candidates = BTreeSet::new();
    for word in q.support() {
        let lead = word.leading(b);
        if lead == word.degree() {
            continue;
        }
        let letters = word.letters();
        let middle = &letters[lead..];
        let trail = word.trailing(b);
        for s in 1..=trail {
            let u = &middle[..middle.len() - s];
            let mut v = vec![b; lead + s - 1];
            v.extend_from_slice(u);
            candidates.insert(Word::from_letters(v));
        }
    }

    let mut x = NcPoly::zero(alphabet);
    for v in candidates {
        let mut coeff = Rational::zero();
        let mut cur = v.clone();
        loop {
            coeff -= q.coefficient(&cur.append(b));
            if cur.first() != Some(b) {
                break;
            }
            cur = cur.rotate_left();
        }
        x.add_term(v, coeff);
    }

    if x.ad_letter(b) != *q {
        return Err(not_in_image());
    }
    Ok(x)
}

/// `C_1..C_N` through the recurrence, each certified Lie via its
/// right-normed form.
pub fn bch_recurrence(degree: usize) -> Result<BchResult, BchError> {
    bch_recurrence_over(&Alphabet::ab(), degree)
}

pub fn bch_recurrence_over(alphabet: &Arc<Alphabet>, degree: usize) -> Result<BchResult, BchError> {
    let components = recurrence_components(alphabet, degree)?;
    BchResult::from_components(components, Method::Recurrence)
}

/// `C_1..C_N` through the recurrence, without right-normed forms.
pub fn recurrence_components(alphabet: &Arc<Alphabet>, degree: usize) -> Result<Vec<NcPoly>, BchError> {
    if degree == 0 {
        return Err(BchError::Degree { min: 1, got: 0 });
    }
    let (la, lb) = roles(alphabet);
    let mut components = Vec::with_capacity(degree);
    components.push(&NcPoly::letter(alphabet, la) + &NcPoly::letter(alphabet, lb));
    for n in 2..=degree {
        let rhs = recurrence_rhs(n, &components)?;
        components.push(invert_ad(&rhs, lb, n)?);
    }
    Ok(components)
}

/// Direct series expansion wrapped as a [`BchResult`].
pub fn bch_direct_result(degree: usize) -> Result<BchResult, BchError> {
    let components = bch_direct_over(&Alphabet::ab(), degree)?;
    BchResult::from_components(components, Method::Direct)
}

/// One verification performed by [`certify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `C_n` has only words of length `n`.
    Homogeneity,
    /// `C_1 = A + B`.
    InitialValue,
    /// No `A^n` or `B^n` term for `n ≥ 2`.
    PurePowers,
    /// `r(C_n) = n C_n`.
    Dynkin,
    /// `[B, C_n]` equals the recurrence right-hand side for `n ≥ 2`.
    Recurrence,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Homogeneity => "homogeneity",
            Check::InitialValue => "initial_value",
            Check::PurePowers => "pure_powers",
            Check::Dynkin => "dynkin",
            Check::Recurrence => "recurrence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub degree: usize,
    pub check: Check,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub entries: Vec<CertificateEntry>,
}

impl CertificateReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn passed(&self, degree: usize, check: Check) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| e.degree == degree && e.check == check)
            .map(|e| e.passed)
    }
}

/// Re-derives every certificate for each component of `result`. Failures are
/// recorded in the report, never raised.
pub fn certify(result: &BchResult) -> CertificateReport {
    let mut report = CertificateReport::default();
    let Some(first) = result.components.first() else {
        return report;
    };
    let alphabet = Arc::clone(first.alphabet());
    let (la, lb) = roles(&alphabet);
    let b = NcPoly::letter(&alphabet, lb);
    let mut push = |degree, check, passed| {
        report.entries.push(CertificateEntry {
            degree,
            check,
            passed,
        })
    };

    for (i, c) in result.components.iter().enumerate() {
        let n = i + 1;
        push(
            n,
            Check::Homogeneity,
            c.is_zero() || c.homogeneous_degree() == Some(n),
        );
        if n == 1 {
            let expected = &NcPoly::letter(&alphabet, la) + &b;
            push(n, Check::InitialValue, *c == expected);
        } else {
            let pure = c.coefficient(&Word::power(la, n)).is_zero()
                && c.coefficient(&Word::power(lb, n)).is_zero();
            push(n, Check::PurePowers, pure);
        }
        let dynkin = match rmap(c) {
            Ok(rc) => rc == c.scale(&Rational::from_integer(BigInt::from(n))),
            Err(_) => false,
        };
        push(n, Check::Dynkin, dynkin);
        if n >= 2 {
            let ok = match (recurrence_rhs(n, &result.components), b.commutator(c)) {
                (Ok(rhs), Ok(lhs)) => rhs == lhs,
                _ => false,
            };
            push(n, Check::Recurrence, ok);
        }
    }
    report
}
