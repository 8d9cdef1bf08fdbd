use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hankelcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankelcert"))
        .args(args)
        .env_remove("HANKELCERT_REPORT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn passing_report_exits_zero_with_claim_fields() {
    let out = hankelcert(&["verify", "identities", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["header"]["command"], "verify identities");
    let claims = v["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    for c in claims {
        for key in ["id", "statement", "expected", "computed", "status"] {
            assert!(c.get(key).is_some(), "missing {key} in {c}");
        }
        assert!(c.get("runtime_ms").is_none());
        assert_eq!(c["status"], "certified");
    }
}

#[test]
fn rationals_carry_numerator_denominator_and_decimal() {
    let v = json(&hankelcert(&["oracle", "--json", "--samples", "1000"]));
    let exact = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["computed"]["kind"] == "exact")
        .expect("an exact claim");
    let r = &exact["computed"]["value"];
    assert_eq!(r["num"], "1");
    assert_eq!(r["den"], "36");
    assert_eq!(r["decimal"], "2.77777777778e-2");
    assert_eq!(v["header"]["settings"]["samples"], "1000");
}

#[test]
fn timings_add_runtimes() {
    let v = json(&hankelcert(&["faces", "--json", "--timings"]));
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["runtime_ms"].is_u64()));
}

#[test]
fn failed_claim_exits_one() {
    let out = hankelcert(&["roots", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failed: Vec<&str> = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "failed")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["roots.h23-face-octic"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["edges", "--edges-only"][..],
        &["oracle", "--jobs", "0"],
        &["verify", "zalcman", "--dump-poly"],
        &["verify", "h99"],
        &["frobnicate"],
        &["edges", "--json", "--text"],
        &["edges", "--tol", "abc"],
    ] {
        assert_eq!(hankelcert(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dump_poly_round_trips() {
    let out = hankelcert(&["verify", "h31", "--dump-poly"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let f = hankelcert::RatPoly::from_records(&text).unwrap();
    let g = hankelcert::functionals::bound_surrogate(hankelcert::functionals::FunctionalId::H3_1)
        .unwrap()
        .surrogate;
    assert_eq!(f, g);
}

#[test]
fn json_is_reproducible_across_thread_counts() {
    let args = ["oracle", "--json", "--samples", "30000", "--seed", "7", "--boundary"];
    let a = hankelcert(&args);
    let b = hankelcert(&[&args[..], &["--jobs", "1"]].concat());
    let c = hankelcert(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn report_dir_receives_a_copy() {
    let dir: PathBuf = std::env::temp_dir().join(format!("hankelcert-cli-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_hankelcert"))
        .args(["verify", "identities"])
        .env("HANKELCERT_REPORT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let copy = std::fs::read_to_string(dir.join("verify-identities.json")).unwrap();
    let v: Value = serde_json::from_str(&copy).unwrap();
    assert_eq!(v["header"]["command"], "verify identities");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_output_ends_with_a_summary() {
    let out = hankelcert(&["convolution", "--t-steps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("grid-passed"));
    assert!(text.trim_end().ends_with("claims, 0 failed"));
}
