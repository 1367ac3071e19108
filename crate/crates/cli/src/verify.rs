//! Seeded randomized checks of the bracketing identities plus certification
//! of the recurrence output.
//!
//! Each check draws from its own ChaCha stream derived from the seed, so the
//! report is a pure function of `(max_degree, trials, seed)`.

use std::fmt::Write as _;
use std::sync::Arc;

use bchkit_core::algebra::{Alphabet, NcPoly};
use bchkit_core::bch::{certify, invert_ad, BchError, BchResult, Method};
use bchkit_core::lie::{
    check_ad_injectivity, check_baker_identity_with, check_derivation_with, check_rpa_with, rmap,
    LieError,
};
use bchkit_core::random::{random_avoiding_power, random_letter, random_lie, random_poly};
use bchkit_core::series::{bch_direct, check_exp_ad_identity};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest word length drawn for random identity-check inputs.
pub const INPUT_DEGREE: usize = 4;
/// Truncation order for the `e^X Y e^-X` check.
pub const EXP_AD_ORDER: usize = 6;

pub type BracketingMap = fn(&NcPoly) -> Result<NcPoly, LieError>;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    /// Bracketing map under test; swapped out only to demonstrate that the
    /// checks catch a wrong implementation.
    pub rmap: BracketingMap,
}

impl VerifyConfig {
    pub fn new(max_degree: usize, trials: usize, seed: u64) -> Self {
        VerifyConfig {
            max_degree,
            trials,
            seed,
            rmap,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// Rendered inputs of the first failing trial.
    pub counterexample: Option<String>,
}

impl CheckSummary {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub config_line: String,
    pub checks: Vec<CheckSummary>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.config_line);
        for c in &self.checks {
            let status = if c.ok() { "ok" } else { "FAIL" };
            let _ = writeln!(out, "{:<24}{:>6}/{:<6}{}", c.name, c.passed, c.total, status);
            if let Some(ce) = &c.counterexample {
                for line in ce.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Alternates between two- and three-letter alphabets.
fn alphabet_for(trial: usize, alphabets: &[Arc<Alphabet>; 2]) -> &Arc<Alphabet> {
    &alphabets[trial % 2]
}

fn run_trials<F>(name: &'static str, trials: usize, mut trial: F) -> CheckSummary
where
    F: FnMut(usize) -> (Result<bool, String>, String),
{
    let mut passed = 0;
    let mut counterexample = None;
    for i in 0..trials {
        let (outcome, inputs) = trial(i);
        match outcome {
            Ok(true) => passed += 1,
            Ok(false) => {
                counterexample.get_or_insert_with(|| format!("trial {i}:\n{inputs}"));
            }
            Err(e) => {
                counterexample.get_or_insert_with(|| format!("trial {i}: error: {e}\n{inputs}"));
            }
        }
    }
    CheckSummary {
        name,
        passed,
        total: trials,
        counterexample,
    }
}

fn show(label: &str, p: &NcPoly) -> String {
    format!("{label} = {p}")
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let alphabets = [
        Alphabet::latin(2).expect("static alphabet"),
        Alphabet::latin(3).expect("static alphabet"),
    ];
    let trials = config.trials;
    let r = config.rmap;
    let mut checks = Vec::new();

    let mut rng = stream(config.seed, 1);
    checks.push(run_trials("baker_identity", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let p = random_poly(&mut rng, al, 1, INPUT_DEGREE, 3);
        let q = random_poly(&mut rng, al, 1, INPUT_DEGREE, 3);
        let outcome = check_baker_identity_with(r, &p, &q).map_err(|e| e.to_string());
        (outcome, format!("{}\n{}", show("P", &p), show("Q", &q)))
    }));

    let mut rng = stream(config.seed, 2);
    checks.push(run_trials("derivation", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let p1 = random_lie(&mut rng, al, INPUT_DEGREE, 3);
        let p2 = random_lie(&mut rng, al, INPUT_DEGREE, 3);
        let outcome = check_derivation_with(r, &p1, &p2).map_err(|e| e.to_string());
        (outcome, format!("{}\n{}", show("P1", &p1), show("P2", &p2)))
    }));

    let mut rng = stream(config.seed, 3);
    checks.push(run_trials("rpa", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let p = random_lie(&mut rng, al, INPUT_DEGREE, 3);
        let a = random_letter(&mut rng, al);
        let outcome = check_rpa_with(r, &p, a).map_err(|e| e.to_string());
        (outcome, format!("{}\na = {}", show("P", &p), al.name(a)))
    }));

    let mut rng = stream(config.seed, 4);
    checks.push(run_trials("ad_injectivity", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let a = random_letter(&mut rng, al);
        let degree = 1 + i % INPUT_DEGREE;
        let p = random_avoiding_power(&mut rng, al, a, degree, 4);
        let outcome = check_ad_injectivity(&p, a).map_err(|e| e.to_string());
        (outcome, format!("{}\na = {}", show("P", &p), al.name(a)))
    }));

    let mut rng = stream(config.seed, 5);
    checks.push(run_trials("invert_ad_roundtrip", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let a = random_letter(&mut rng, al);
        let degree = 1 + i % INPUT_DEGREE;
        let p = random_avoiding_power(&mut rng, al, a, degree, 4);
        let outcome = invert_ad(&p.ad_letter(a), a, degree)
            .map(|x| x == p)
            .map_err(|e| e.to_string());
        (outcome, format!("{}\na = {}", show("P", &p), al.name(a)))
    }));

    let mut rng = stream(config.seed, 6);
    checks.push(run_trials("exp_ad_identity", trials, |i| {
        let al = alphabet_for(i, &alphabets);
        let x = random_poly(&mut rng, al, 1, 2, 3);
        let y = random_poly(&mut rng, al, 1, 2, 3);
        let outcome = check_exp_ad_identity(&x, &y, EXP_AD_ORDER).map_err(|e| e.to_string());
        (outcome, format!("{}\n{}", show("X", &x), show("Y", &y)))
    }));

    checks.push(certify_summary(
        "certify_recurrence",
        bchkit_core::bch_recurrence(config.max_degree),
    ));
    checks.push(certify_summary(
        "certify_direct",
        bch_direct(config.max_degree)
            .map_err(BchError::from)
            .map(|components| BchResult {
                components,
                rightnormed: Vec::new(),
                method: Method::Direct,
            }),
    ));

    VerifyReport {
        config_line: format!(
            "verify max_degree={} trials={} seed={}",
            config.max_degree, config.trials, config.seed
        ),
        checks,
    }
}

fn certify_summary(name: &'static str, result: Result<BchResult, BchError>) -> CheckSummary {
    match result {
        Ok(result) => {
            let report = certify(&result);
            let failures: Vec<String> = report
                .failures()
                .map(|e| {
                    let c = result.component(e.degree).expect("degree in range");
                    format!("{} failed at degree {}: C_{} = {}", e.check.as_str(), e.degree, e.degree, c)
                })
                .collect();
            CheckSummary {
                name,
                passed: report.entries.len() - failures.len(),
                total: report.entries.len(),
                counterexample: failures.into_iter().next(),
            }
        }
        Err(e) => CheckSummary {
            name,
            passed: 0,
            total: 1,
            counterexample: Some(format!("error: {e}")),
        },
    }
}
