//! Exact computation of the Baker-Campbell-Hausdorff components
//! `C_n` of `log(e^A e^B)`.
//!
//! * [`algebra`]: sparse noncommutative polynomials with rational coefficients.
//! * [`series`]: truncated `exp`/`log` and the direct expansion of the series.
//! * [`lie`]: the right-normed bracketing map, the Dynkin test for Lie
//!   polynomials and executable checks of the identities it satisfies.
//! * [`bch`]: the commutator recurrence for `C_n` and certification of results.
//! * [`random`]: seeded generators for randomized identity checks.

pub mod algebra;
pub mod bch;
pub mod lie;
pub mod random;
pub mod series;

pub use algebra::{rat, Alphabet, Letter, NcPoly, Rational, Word};
pub use bch::{bch_direct_result, bch_recurrence, certify, BchResult, Method};
pub use lie::{rightnormed_form, rmap, RightNormedCombination};
pub use series::{bch_direct, TruncatedSeries};
