use std::path::PathBuf;
use std::process::{Command, Output};

use adr_core::report;
use serde_json::{json, Value};

fn algebra(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "algebras", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn adr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adr")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_of(verb: &str, o: &Output) -> Value {
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    report::validate(verb, &text).unwrap_or_else(|e| panic!("{verb}: {e}\n{text}"));
    serde_json::from_str(&text).unwrap()
}

#[test]
fn filtration_of_n1() {
    let a5 = algebra("a5.alg");
    let o = adr(&["filtration", "--algebra", &a5, "--module", "homG(rad^1(P(3)))", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_of("filtration", &o);
    assert_eq!(v["layers"], json!([[[[3, 1], 1]], [[[2, 2], 1]]]));
    assert_eq!(v["chain_dims"], json!([0, 3, 5]));
    assert!(v["socle_correspondence"].as_array().unwrap().iter().all(|c| c["ok"] == json!(true)));
}

#[test]
fn counterexample_n5() {
    let o = adr(&["counterexample", "--n", "5", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_of("counterexample", &o);
    assert_eq!(v["ll_pair"], json!([5, 6]));
    assert_eq!(v["dll_ok"], json!(false));
}

#[test]
fn approximation_example() {
    let ex54 = algebra("ex54.alg");
    let o = adr(&["approx", "--algebra", &ex54, "--module", "quot_soc(P(1),6)", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_of("approx", &o);
    assert_eq!(v["summands"], json!([[[1, 3], 1], [[4, 1], 1]]));
    assert_eq!(v["rigid"], json!(false));
}

#[test]
fn every_verb_emits_a_valid_report() {
    let ex54 = algebra("ex54.alg");
    let kx2 = algebra("kx2.alg");
    let runs: Vec<(&str, Vec<&str>)> = vec![
        ("build", vec!["--algebra", &ex54]),
        ("module", vec!["--algebra", &ex54, "--module", "quot(P(1), rad^2(P(1)))"]),
        ("module", vec!["--algebra", &kx2, "--module", "SR(1,1)"]),
        ("adr", vec!["--algebra", &kx2]),
        ("standard", vec!["--algebra", &ex54]),
        ("filtration", vec!["--algebra", &ex54, "--module", "homG(P(1))"]),
        ("approx", vec!["--algebra", &kx2, "--module", "S(1)"]),
        ("resolve", vec!["--algebra", &kx2, "--module", "S(1)"]),
        ("dll-check", vec!["--algebra", &ex54, "--module", "quot_soc(P(1),6)"]),
        ("ext-table", vec!["--algebra", "kx2"]),
        ("counterexample", vec!["--n", "4"]),
        ("corpus-dump", vec!["--seed", "3"]),
    ];
    for (verb, args) in runs {
        let mut all = vec![verb];
        all.extend(&args);
        let text = adr(&all);
        assert_eq!(code(&text), 0, "{verb} {args:?}: {}", String::from_utf8_lossy(&text.stderr));
        assert!(!text.stdout.is_empty());
        all.push("--json");
        let o = adr(&all);
        assert_eq!(code(&o), 0, "{verb} {args:?}");
        json_of(verb, &o);
    }
}

#[test]
fn input_errors_exit_1() {
    let ex54 = algebra("ex54.alg");
    let cases: Vec<Vec<&str>> = vec![
        vec!["module", "--algebra", &ex54],
        vec!["module", "--module", "P(1)"],
        vec!["module", "--algebra", &ex54, "--module", "P(1"],
        vec!["module", "--algebra", &ex54, "--module", "P(9)"],
        vec!["build", "--algebra", "/nonexistent/file.alg"],
        vec!["build", "--algebra", &ex54, "--field", "Fp:4"],
        vec!["frobnicate"],
        vec!["counterexample", "--n", "1"],
        vec!["resolve", "--algebra", &ex54, "--module", "P(1)", "--max-steps", "0"],
    ];
    for args in cases {
        let o = adr(&args);
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} printed no message");
    }
}

#[test]
fn errors_have_a_json_report() {
    let ex54 = algebra("ex54.alg");
    let o = adr(&["module", "--algebra", &ex54, "--module", "P(1", "--json"]);
    assert_eq!(code(&o), 1);
    let v = json_of("error", &o);
    assert_eq!(v["kind"], json!("input"));
    assert!(v["error"].as_str().unwrap().contains("column"));
}

#[test]
fn output_is_deterministic() {
    let ex54 = algebra("ex54.alg");
    for args in [
        vec!["corpus-dump", "--seed", "11", "--json"],
        vec!["approx", "--algebra", ex54.as_str(), "--module", "rquot(dsum(P(1), P(4)), 5)"],
        vec!["counterexample", "--n", "3"],
    ] {
        let a = adr(&args);
        let b = adr(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = adr(&["corpus-dump", "--seed", "11"]);
    let b = adr(&["corpus-dump", "--seed", "12"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn parameter_substitution_and_fields() {
    let a5 = algebra("a5.alg");
    let o = adr(&["adr", "--algebra", &a5, "--n", "3", "--json"]);
    let v = json_of("adr", &o);
    assert_eq!(v["loewy_lengths"][0], json!(3));
    let o = adr(&["build", "--algebra", &a5, "--field", "Fp:101", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of("build", &o)["field"], json!("Fp:101"));
}
