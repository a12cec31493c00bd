use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

use selberg_core::exactnum::parse_scalar;

fn selberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selberg")).args(args).output().expect("spawn selberg")
}

fn json(args: &[&str]) -> Value {
    let out = selberg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn column<'a>(v: &'a Value, name: &str) -> Vec<&'a str> {
    v["rows"].as_array().unwrap().iter().map(|r| r[name].as_str().unwrap()).collect()
}

#[test]
fn coeff_tables() {
    let v = json(&["coeff", "2"]);
    assert_eq!(column(&v, "lambda"), ["[2]", "[1,1]"]);
    assert_eq!(parse_scalar(column(&v, "alpha")[1]).unwrap(), parse_scalar("-2*kappa/(1+kappa)").unwrap());
    let v = json(&["coeff", "3", "--kappa", "1"]);
    assert_eq!(column(&v, "alpha"), ["1", "-1", "1"]);
    assert_eq!(column(&json(&["coeff", "1"]), "alpha"), ["1"]);
}

#[test]
fn payloads_parse_back() {
    for args in [
        &["coeff", "4"][..],
        &["jack", "3"],
        &["jack", "3", "--power-sums"],
        &["integral", "--pk", "3"],
        &["integral", "--jack", "[2,1]", "--N", "4"],
        &["limit", "--pk", "3", "--scaled"],
    ] {
        let v = json(args);
        for row in v["rows"].as_array().unwrap() {
            for (col, cell) in row.as_object().unwrap() {
                if matches!(col.as_str(), "alpha" | "coefficient" | "value" | "limit" | "conjecture") {
                    let s = cell.as_str().unwrap();
                    assert_eq!(parse_scalar(s).unwrap().to_string(), s, "{args:?} {col}");
                }
            }
        }
    }
}

#[test]
fn integrals() {
    let v = json(&["integral", "--pk", "1"]);
    let want = parse_scalar("N*(a + kappa*(N - 1))/(a + b + 2*kappa*(N - 1))").unwrap();
    assert_eq!(parse_scalar(column(&v, "value")[0]).unwrap(), want);
    assert_eq!(column(&json(&["integral", "--jack", "[]"]), "value"), ["1"]);
    let v = json(&["integral", "--pk", "2", "--N", "2", "--a", "1", "--b", "1", "--kappa", "1"]);
    assert_eq!(column(&v, "value"), ["11/15"]);
    assert_eq!(v["params"]["N"], "2");
    // P_λ vanishes identically in fewer than ℓ(λ) variables.
    assert_eq!(column(&json(&["integral", "--jack", "[1,1,1]", "--N", "2"]), "value"), ["0"]);
}

#[test]
fn polynomial_file() {
    let path = std::env::temp_dir().join(format!("selberg-cli-{}.poly", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# x1^2 + x2^2 in two variables\n1 : 2,0\n1 : 0,2").unwrap();
    drop(f);
    let p = path.to_str().unwrap();
    let general = json(&["integral", "--poly", p, "--N", "2"]);
    let direct = json(&["integral", "--pk", "2", "--N", "2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(column(&general, "value"), column(&direct, "value"));
}

#[test]
fn limits() {
    let v = json(&["limit", "--pk", "2"]);
    assert_eq!(column(&v, "limit"), ["3/8"]);
    assert_eq!(v["rows"][0]["match"], true);
    assert_eq!(column(&json(&["limit", "--pk", "1"]), "limit"), ["1/2"]);
    let v = json(&["limit", "--pk", "2", "--scaled"]);
    let want = parse_scalar("ell*(1 + ell + ell^2)/(1 + ell)^3").unwrap();
    assert_eq!(parse_scalar(column(&v, "limit")[0]).unwrap(), want);
}

#[test]
fn formats() {
    let csv = selberg(&["coeff", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "lambda,alpha\n[2],1\n\"[1,1]\",-2*kappa/(kappa + 1)\n");
    let tex = String::from_utf8(selberg(&["--format", "latex", "coeff", "2"]).stdout).unwrap();
    assert!(tex.contains("\\begin{tabular}") && tex.contains("\\frac{2 \\kappa}{\\kappa + 1}"), "{tex}");
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["kaneko", "oracle"] {
        let out = selberg(&["verify", "--suite", suite, "--format", "csv"]);
        assert!(out.status.success(), "{suite}");
        let table = String::from_utf8(out.stdout).unwrap();
        assert!(table.lines().skip(1).all(|l| l.contains(",true,")), "{table}");
    }
}

#[test]
fn bad_input_fails_cleanly() {
    for args in [
        &["coeff", "2", "--kappa", "x"][..],
        &["integral", "--jack", "[1,2]"],
        &["integral", "--pk", "1", "--N", "1", "--a", "-1", "--b", "1", "--kappa", "1"],
        &["verify", "--suite", "nope"],
        &["coeff", "2", "--format", "xml"],
    ] {
        let out = selberg(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(out.stdout.is_empty(), "{args:?} wrote data on failure");
        assert!(!out.stderr.is_empty());
    }
}
