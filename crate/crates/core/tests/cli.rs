//! End-to-end runs of the `bicomplex` binary.

use std::process::{Command, Output};

use serde_json::Value;

use bicomplex::cli::{parse_element, parse_poly};
use bicomplex::BicomplexElement;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicomplex")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&stdout(&a)).expect("valid JSON")
}

fn element_of(v: &Value) -> BicomplexElement {
    let w = parse_element(v["element"].as_str().unwrap()).unwrap();
    let [c1, c2] = [0, 1].map(|k| v["idempotent"][k].as_str().unwrap().to_string());
    assert_eq!(parse_element(&format!("[{c1}, {c2}]")).unwrap(), w);
    w
}

#[test]
fn every_subcommand_answers() {
    let cases: &[&[&str]] = &[
        &["decompose", "1+i+j-k"],
        &["conj", "1+i+j-k"],
        &["norm", "1+i+j-k"],
        &["minpoly", "1+i+j-k"],
        &["charpoly4", "1+i+j-k"],
        &["census", "X^3-2*X^2+4*X-8"],
        &["roots", "X^2+1"],
        &["factor", "6"],
        &["primes-profile", "2", "3", "5"],
        &["units"],
        &["disc"],
        &["ideal-count", "--K", "QB", "--max", "10"],
        &["zeta", "--K", "Qh", "--s", "2"],
        &["radix-encode", "3+2*i", "--base", "gauss:-1+"],
        &["radix-decode", "1001", "--base", "gauss:-1+"],
    ];
    assert_eq!(cases.len(), 15);
    for args in cases {
        assert!(!stdout(args).trim().is_empty(), "{args:?}");
        json(args);
    }
}

#[test]
fn headline_values() {
    assert_eq!(stdout(&["minpoly", "1+i+j-k"]).trim(), "X^3 - 2*X^2 + 4*X - 8");
    assert_eq!(json(&["minpoly", "1+i+j-k"])["coeffs"], serde_json::json!([-8, 4, -2, 1]));
    let c = json(&["census", "X^3-2*X^2+4*X-8"]);
    assert_eq!((c["r"].as_u64(), c["two_s_i"].as_u64(), c["two_s_j"].as_u64()), (Some(1), Some(2), Some(0)));
    assert_eq!((c["two_s_k"].as_u64(), c["four_d"].as_u64(), c["total"].as_u64()), (Some(2), Some(4), Some(9)));
    assert_eq!(json(&["disc", "--L", "QB"])["disc"], 16);
    assert_eq!(json(&["disc", "--L", "Qh"])["disc"], 1);
    assert_eq!(json(&["units", "--L", "QB"])["order"], 16);
    assert_eq!(json(&["units", "--L", "Qh"])["order"], 4);
    let d = json(&["decompose", "1+i+j-k"]);
    assert_eq!(d["idempotent"], serde_json::json!(["2", "2*i"]));
    element_of(&d);
}

#[test]
fn census_by_cyclotomic_index() {
    let c = json(&["census", "--cyclotomic", "5"]);
    assert_eq!(c["n"], 4);
    assert_eq!(c["total"], 16);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["decompose", "1+[2,3]"]).status.code(), Some(1));
    assert_eq!(run(&["minpoly", "1+q"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["radix-encode", "1+i", "--base", "gauss:7+"]).status.code(), Some(1));
    // mathematical failures
    assert_eq!(run(&["radix-encode", "[-50, 7]", "--base", "hsplit:-2"]).status.code(), Some(2));
    let out = run(&["census", "X^2-2*X+1"]);
    assert_eq!(out.status.code(), Some(2), "non-squarefree input");
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_carry_positions() {
    let out = run(&["decompose", "1+i+[2,3]"]);
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains('4'), "{msg}");
}

#[test]
fn output_is_deterministic() {
    for args in [&["factor", "60+12*i+7*j"][..], &["ideal-count", "--K", "QB", "--max", "50"], &["roots", "X^3-X"]] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn ideal_count_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qb.csv");
    stdout(&["ideal-count", "--K", "QB", "--max", "5", "--out", path.to_str().unwrap()]);
    let csv = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows, ["n,a_n", "1,1", "2,2", "3,0", "4,3", "5,4"]);
}

#[test]
fn json_elements_reparse() {
    let conj = json(&["conj", "1/2+3*i-j+2/3*k"]);
    let w = parse_element("1/2+3*i-j+2/3*k").unwrap();
    let vals = conj.as_object().unwrap();
    assert_eq!(vals.len(), 3, "{conj}");
    for (axis, name) in bicomplex::Axis::ALL.into_iter().zip(["i", "j", "k"]) {
        assert_eq!(element_of(&conj[name]), w.conjugate(axis));
    }
    let n = json(&["norm", "1/2+3*i-j+2/3*k"]);
    assert!(n.get("norm").is_some(), "{n}");
    let f = json(&["factor", "6"]);
    let mut prod = element_of(&f["unit"]);
    for p in f["factors"].as_array().unwrap() {
        let e = p["exponent"].as_u64().unwrap() as u32;
        prod = prod.try_mul(&element_of(&p["prime"]).pow(e)).unwrap();
    }
    assert_eq!(prod, parse_element("6").unwrap());
    let c4 = json(&["charpoly4", "1+i+j-k"]);
    let p = parse_poly(c4["poly"].as_str().unwrap()).unwrap();
    let coeffs: Vec<i64> = c4["coeffs"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    assert_eq!(p, bicomplex::RatPoly::from_ints(&coeffs));
    assert!(bicomplex::minpoly::eval_at_bicomplex(&p, &parse_element("1+i+j-k").unwrap()).is_zero());
}

#[test]
fn radix_round_trip_through_binary() {
    let e = json(&["radix-encode", "5-7*i", "--base", "gauss:-2-"]);
    let digits: Vec<String> = e["digits"].as_array().unwrap().iter().rev().map(|d| d.to_string()).collect();
    let d = json(&["radix-decode", &digits.join(","), "--base", "gauss:-2-"]);
    assert_eq!(d["value"], e["value"]);
    assert_eq!(d["value"]["element"], "5-7*i");
}
