use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use bchkit::output::OutputDocument;
use bchkit::verify::{run, VerifyConfig};
use bchkit_core::lie::LieError;
use bchkit_core::{bch_direct_result, NcPoly};

fn bchkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name)
}

#[test]
fn degree_two_csv_rows() {
    let out = bchkit(&["compute", "--degree", "2", "--basis", "words", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "degree,basis,term,numerator,denominator\n\
         1,words,A,1,1\n1,words,B,1,1\n2,words,AB,1,2\n2,words,BA,-1,2\n"
    );
}

#[test]
fn degree_one_text() {
    let out = bchkit(&["compute", "-n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "C_1 = A + B\n");
}

#[test]
fn both_methods_agree_at_degree_eight() {
    let out = bchkit(&["compute", "--method", "both", "--degree", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let direct = bchkit(&["compute", "--method", "direct", "--degree", "8", "--format", "csv"]);
    assert_eq!(out.stdout, direct.stdout);
}

#[test]
fn golden_files_match() {
    for (basis, file) in [
        ("words", "bch_words_deg8.json"),
        ("rightnormed", "bch_rightnormed_deg8.json"),
    ] {
        let out = bchkit(&[
            "compute", "--method", "both", "--degree", "8", "--basis", basis, "--format", "json",
        ]);
        assert!(out.status.success());
        let golden = fs::read_to_string(testdata(file)).unwrap();
        assert_eq!(stdout(&out), golden, "{file}");
    }
}

#[test]
fn golden_files_decode_to_direct_components() {
    let direct = bch_direct_result(8).unwrap();
    for file in ["bch_words_deg8.json", "bch_rightnormed_deg8.json"] {
        let doc = OutputDocument::from_json(&fs::read_to_string(testdata(file)).unwrap()).unwrap();
        assert_eq!(doc.to_components().unwrap(), direct.components, "{file}");
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.json");
    let out = bchkit(&[
        "compute", "-n", "6", "--basis", "rightnormed", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = fs::read_to_string(&path).unwrap();
    let doc = OutputDocument::from_json(&written).unwrap();
    assert_eq!(doc.to_json().unwrap(), written);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--degree", "0"][..],
        &["compute", "--degree", "3", "--method", "guess"],
        &["compute"],
        &["verify", "--seed", "minus-one"],
        &["frobnicate"],
    ] {
        assert_eq!(bchkit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_is_reported() {
    let out = bchkit(&["compute", "-n", "2", "--output", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--max-degree", "4", "--trials", "30", "--seed", "9"];
    let a = bchkit(&args);
    let b = bchkit(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("verify max_degree=4 trials=30 seed=9\n"));
    assert!(text.ends_with("result: PASS\n"));
    for name in ["baker_identity", "derivation", "rpa", "ad_injectivity", "exp_ad_identity"] {
        assert!(text.contains(name), "{name}");
    }
}

fn reversed_bracketing(p: &NcPoly) -> Result<NcPoly, LieError> {
    let mut out = NcPoly::zero(p.alphabet());
    for (w, c) in p.terms() {
        let mut letters = w.letters().to_vec();
        letters.reverse();
        let mut acc: Option<NcPoly> = None;
        for l in letters {
            let x = NcPoly::letter(p.alphabet(), l);
            acc = Some(match acc {
                None => x,
                Some(inner) => inner.commutator(&x)?,
            });
        }
        if let Some(acc) = acc {
            out = out.checked_add_scaled(&acc, c)?;
        }
    }
    Ok(out)
}

#[test]
fn broken_bracketing_is_caught_with_counterexample() {
    let mut config = VerifyConfig::new(3, 20, 42);
    config.rmap = reversed_bracketing;
    let report = run(&config);
    assert!(!report.all_passed());
    let baker = report.check("baker_identity").unwrap();
    assert!(!baker.ok());
    let text = report.render();
    assert!(text.contains("baker_identity"));
    assert!(text.contains("    P = "), "{text}");
    assert!(text.ends_with("result: FAIL\n"));
}

#[test]
fn bench_has_one_row_per_degree() {
    let out = bchkit(&["bench", "--max-degree", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("degree,direct_terms,recurrence_terms,cumulative_terms,direct_ms,recurrence_ms")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    let mut last = 0u64;
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], (i + 1).to_string());
        assert_eq!(row[1], row[2]);
        let cumulative: u64 = row[3].parse().unwrap();
        assert!(cumulative >= last);
        last = cumulative;
    }
}
