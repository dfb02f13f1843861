use std::process::{Command, Output};

use num_bigint::BigInt;
use tutte_dfs_core::harness::{Verdict, VerificationReport};
use tutte_dfs_core::poly::{BiPoly, PolyJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte-dfs"))
        .args(args)
        .env_remove("TUTTE_DFS_FORMAT")
        .env_remove("TUTTE_DFS_CACHE_DIR")
        .output()
        .unwrap()
}

fn text(args: &[&str]) -> String {
    formatted("text", args)
}

fn formatted(format: &str, args: &[&str]) -> String {
    let mut full = vec!["--format", format];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let out = run(args);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn tutte_examples() {
    assert_eq!(text(&["tutte", "--n", "3", "--r", "1"]), "x+y+x^2\n");
    assert_eq!(text(&["tutte", "--n", "2", "--r", "2"]), "1\n");
    assert_eq!(text(&["tutte", "--n", "5", "--r", "3"]), "x+y+x^2+2xy+2y^2+2xy^2+3y^3+2y^4+y^5\n");
    let (code, doc) = json(&["tutte", "--n", "4", "--r", "2"]);
    assert_eq!(code, 0);
    assert_eq!((doc["n"].as_u64(), doc["r"].as_u64()), (Some(4), Some(2)));
    let t = BiPoly::from_json(&serde_json::from_value::<PolyJson>(doc["tutte"].clone()).unwrap()).unwrap();
    assert_eq!(t.to_string(), "x+y+x^2+2xy+2y^2+y^3");
}

#[test]
fn tutte_brute_agrees() {
    let (code, doc) = json(&["tutte", "--n", "5", "--r", "2", "--brute"]);
    assert_eq!(code, 0);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["tutte"], doc["brute"]);
}

#[test]
fn table_examples() {
    let (_, doc) = json(&["table", "--n-max", "1"]);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    assert_eq!(doc["rows"][0][0]["tutte"]["terms"][0]["c"], "1");

    let (_, doc) = json(&["table", "--n-max", "8"]);
    let t =
        BiPoly::from_json(&serde_json::from_value::<PolyJson>(doc["rows"][7][0]["tutte"].clone()).unwrap())
            .unwrap();
    let one = BigInt::from(1);
    assert_eq!(t.eval(&one, &one), BigInt::from(262144));

    let txt = text(&["table", "--n-max", "3"]);
    assert_eq!(txt, "n\\r\t1\t2\t3\n1\t1\n2\tx\t1\n3\tx+y+x^2\tx+y\t1\n");
}

#[test]
fn single_variable_commands() {
    assert_eq!(text(&["jpoly", "--n", "4", "--r", "2"]), "2+3q+2q^2+q^3\n");
    assert_eq!(text(&["cpoly", "--n", "2", "--r", "1"]), "t\n");
    let (code, doc) = json(&["ppoly", "--n", "4", "--s", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["value_at_1"], "288");
}

#[test]
fn csv_rows() {
    let out = formatted("csv", &["jpoly", "--n", "4", "--r", "2"]);
    assert_eq!(out, "exponent,coefficient\n0,2\n1,3\n2,2\n3,1\n");
    let out = formatted("csv", &["classify", "--n", "2"]);
    assert_eq!(out, "lambda,exponent,coefficient\n(2),2,2\n\"(1,1)\",2,1\n\"(1,1)\",3,1\n");
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tutte-dfs"))
        .args(["jpoly", "--n", "3", "--r", "1"])
        .env("TUTTE_DFS_FORMAT", "text")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2+q\n");
}

#[test]
fn verify_exit_codes() {
    let (code, doc) = json(&["verify", "--n", "4"]);
    assert_eq!(code, 0);
    let rep: VerificationReport = serde_json::from_value(doc).unwrap();
    assert_eq!(rep.verdict, Verdict::Verified);

    let (code, doc) = json(&["verify", "--n", "1"]);
    assert_eq!(code, 0);
    let rep: VerificationReport = serde_json::from_value(doc).unwrap();
    assert_eq!(rep.classes.len(), 1);
    assert_eq!(rep.classes[0].lambda.parts(), &[1]);

    let (code, doc) = json(&["verify", "--n", "5"]);
    assert_eq!(code, 1);
    assert_eq!(doc["verdict"], "finding");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tutte", "--n", "2", "--r", "3"][..],
        &["jpoly", "--n", "3", "--r", "0"],
        &["table", "--n-max", "0"],
        &["verify", "--n", "0"],
        &["--format", "xml", "table", "--n-max", "2"],
        &["--bit-limit", "41", "classify", "--n", "2"],
        &["--threads", "0", "classify", "--n", "2"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn scale_refusal() {
    let out = run(&["classify", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--bit-limit"), "{err}");

    let out = run(&["--bit-limit", "9", "classify", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_grand_total() {
    let (code, doc) = json(&["classify", "--n", "5"]);
    assert_eq!(code, 0);
    let total: u64 = doc["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["count"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    // C_6(1): connected spanning subgraphs of K_6
    assert_eq!(total, 26704);
}
