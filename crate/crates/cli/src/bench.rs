//! Per-degree timing and term counts for both computation routes.

use std::time::Instant;

use bchkit_core::algebra::Alphabet;
use bchkit_core::bch::recurrence_components;
use bchkit_core::series::bch_direct;

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub degree: usize,
    /// Terms of `C_n` from the direct expansion.
    pub direct_terms: usize,
    /// Terms of `C_n` from the recurrence.
    pub recurrence_terms: usize,
    /// Terms of `C_1..C_n` together.
    pub cumulative_terms: usize,
    pub direct_ms: f64,
    pub recurrence_ms: f64,
}

/// Times a full computation up to each degree `1..=max_degree`.
pub fn run(max_degree: usize) -> Result<Vec<BenchRow>, CliError> {
    let alphabet = Alphabet::ab();
    let mut rows = Vec::with_capacity(max_degree);
    let mut cumulative = 0;
    for n in 1..=max_degree {
        let start = Instant::now();
        let direct = bch_direct(n)?;
        let direct_ms = start.elapsed().as_secs_f64() * 1e3;

        let start = Instant::now();
        let rec = recurrence_components(&alphabet, n)?;
        let recurrence_ms = start.elapsed().as_secs_f64() * 1e3;

        cumulative += rec[n - 1].len();
        rows.push(BenchRow {
            degree: n,
            direct_terms: direct[n - 1].len(),
            recurrence_terms: rec[n - 1].len(),
            cumulative_terms: cumulative,
            direct_ms,
            recurrence_ms,
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "degree",
        "direct_terms",
        "recurrence_terms",
        "cumulative_terms",
        "direct_ms",
        "recurrence_ms",
    ])?;
    for r in rows {
        w.write_record([
            r.degree.to_string(),
            r.direct_terms.to_string(),
            r.recurrence_terms.to_string(),
            r.cumulative_terms.to_string(),
            format!("{:.3}", r.direct_ms),
            format!("{:.3}", r.recurrence_ms),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_consistent() {
        let rows = run(6).unwrap();
        assert_eq!(rows.len(), 6);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.degree, i + 1);
            assert_eq!(r.direct_terms, r.recurrence_terms);
            assert!(r.direct_terms <= 1 << r.degree);
        }
        assert!(rows.windows(2).all(|w| w[0].cumulative_terms <= w[1].cumulative_terms));
        // C_3 has six terms, C_4 only four.
        assert_eq!(rows[2].direct_terms, 6);
        assert_eq!(rows[3].direct_terms, 4);
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&run(2).unwrap()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("degree,direct_terms,recurrence_terms,cumulative_terms,direct_ms,recurrence_ms")
        );
        assert!(lines.next().unwrap().starts_with("1,2,2,2,"));
        assert!(lines.next().unwrap().starts_with("2,2,2,4,"));
    }
}
