//! Serialization of computed components as text, JSON or CSV.
//!
//! Coefficients are always written as separate numerator and denominator
//! integer strings so nothing is lost in transit.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use bchkit_core::algebra::{render_terms, Alphabet, NcPoly, Rational, Word};
use bchkit_core::lie::RightNormedCombination;
use bchkit_core::BchResult;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Words,
    Rightnormed,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::Words => "words",
            Basis::Rightnormed => "rightnormed",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "words" => Ok(Basis::Words),
            "rightnormed" => Ok(Basis::Rightnormed),
            other => Err(format!("unknown basis {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub term: String,
    pub num: String,
    pub den: String,
}

/// One component `C_n` in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub degree: usize,
    pub basis: Basis,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub alphabet: Vec<String>,
    pub method: String,
    pub components: Vec<OutputRecord>,
}

fn entry(term: String, c: &Rational) -> Entry {
    Entry {
        term,
        num: c.numer().to_string(),
        den: c.denom().to_string(),
    }
}

fn parse_rational(e: &Entry) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("bad coefficient {}/{} for {}", e.num, e.den, e.term));
    let num: BigInt = e.num.parse().map_err(|_| bad())?;
    let den: BigInt = e.den.parse().map_err(|_| bad())?;
    if den <= BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl OutputRecord {
    pub fn words(degree: usize, p: &NcPoly) -> Self {
        OutputRecord {
            degree,
            basis: Basis::Words,
            entries: p
                .terms()
                .map(|(w, c)| entry(w.render(p.alphabet()), c))
                .collect(),
        }
    }

    pub fn rightnormed(r: &RightNormedCombination) -> Self {
        OutputRecord {
            degree: r.degree(),
            basis: Basis::Rightnormed,
            entries: r
                .terms()
                .iter()
                .map(|(c, w)| entry(w.render_bracket(r.alphabet()), c))
                .collect(),
        }
    }

    /// The polynomial this record denotes (right-normed records are expanded).
    pub fn to_poly(&self, alphabet: &Arc<Alphabet>) -> Result<NcPoly, CliError> {
        let mut terms = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let word = match self.basis {
                Basis::Words => Word::parse(&e.term, alphabet),
                Basis::Rightnormed => Word::parse_bracket(&e.term, alphabet),
            }
            .ok_or_else(|| CliError::Parse(format!("bad term {:?}", e.term)))?;
            terms.push((word, parse_rational(e)?));
        }
        match self.basis {
            Basis::Words => Ok(NcPoly::from_terms(alphabet, terms)),
            Basis::Rightnormed => {
                let r = RightNormedCombination::new(
                    alphabet,
                    self.degree,
                    terms.into_iter().map(|(w, c)| (c, w)),
                )
                .map_err(|e| CliError::Parse(e.to_string()))?;
                Ok(r.expand())
            }
        }
    }

    /// `C_n = ...` in the same notation as polynomial `Display`.
    pub fn render_text(&self) -> Result<String, CliError> {
        let coeffs = self
            .entries
            .iter()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        let body = render_terms(
            self.entries
                .iter()
                .zip(&coeffs)
                .map(|(e, c)| (e.term.clone(), c)),
        );
        Ok(format!("C_{} = {}", self.degree, body))
    }
}

impl OutputDocument {
    pub fn from_result(result: &BchResult, method: &str, basis: Basis) -> Self {
        let alphabet = result
            .components
            .first()
            .map(|c| c.alphabet().names().to_vec())
            .unwrap_or_default();
        let components = match basis {
            Basis::Words => result
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| OutputRecord::words(i + 1, c))
                .collect(),
            Basis::Rightnormed => result.rightnormed.iter().map(OutputRecord::rightnormed).collect(),
        };
        OutputDocument {
            alphabet,
            method: method.to_owned(),
            components,
        }
    }

    pub fn alphabet(&self) -> Result<Arc<Alphabet>, CliError> {
        Alphabet::new(self.alphabet.iter().cloned()).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Polynomials `C_1..C_N` in degree order.
    pub fn to_components(&self) -> Result<Vec<NcPoly>, CliError> {
        let al = self.alphabet()?;
        self.components.iter().map(|r| r.to_poly(&al)).collect()
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["degree", "basis", "term", "numerator", "denominator"])?;
        for rec in &self.components {
            for e in &rec.entries {
                w.write_record([
                    rec.degree.to_string().as_str(),
                    rec.basis.as_str(),
                    &e.term,
                    &e.num,
                    &e.den,
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> Result<String, CliError> {
        let mut out = String::new();
        for rec in &self.components {
            out.push_str(&rec.render_text()?);
            out.push('\n');
        }
        Ok(out)
    }
}
