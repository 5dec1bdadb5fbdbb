use std::process::{Command, Output};

use serde_json::Value;

fn orbchrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbchrom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn single(args: &[&str]) -> Value {
    let out = orbchrom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut v = lines(&out);
    assert_eq!(v.len(), 1);
    v.pop().unwrap()
}

#[test]
fn chromatic_polynomial_of_a_hexagon() {
    let v = single(&["chrom", "cycle:6"]);
    // (x - 1)^6 + (x - 1)
    let coeffs: Vec<&str> = v["chromatic"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "-5", "15", "-20", "15", "-6", "1"]);
    assert_eq!(v["chromatic"]["den"], "1");
}

#[test]
fn forge_on_the_hexagon_with_the_antipodal_map() {
    let v = single(&["forge", "cycle:6", "--group", "antipodal", "--smax", "4"]);
    assert_eq!(v["x0"], "3/2");
    assert_eq!(v["n"], 1);
    assert_eq!(v["s"], 1);
    assert_eq!(v["op_value_at_x0"], "-159/8192");
    assert_eq!(v["forged"]["n"], 12);
    assert_eq!(v["chrom_max_root"]["exact"], "1");
}

#[test]
fn roots_of_the_pentagon() {
    let v = single(&["roots", "cycle:5"]);
    assert_eq!(v["exact"], serde_json::json!(["0", "1", "2"]));
    // x^2 - 2x + 2 contributes no real roots
    assert!(v["intervals"].as_array().unwrap().is_empty());
}

#[test]
fn orbital_polynomial_accepts_group_json() {
    let by_name = single(&["orbital", "cycle:4", "--group", "rot:1"]);
    let by_json = single(&[
        "orbital",
        "cycle:4",
        "--group",
        r#"{"degree":4,"generators":[[1,2,3,0]]}"#,
    ]);
    assert_eq!(by_name["orbital"], by_json["orbital"]);
    assert_eq!(by_name["order"], 4);
}

#[test]
fn graph_json_round_trips_through_quotient() {
    let v = single(&["quotient", "cycle:6", "--perm", "antipodal"]);
    let q = v["quotient"].to_string();
    let again = single(&["chrom", &q]);
    assert_eq!(again["graph"], v["quotient"]);
    let k3 = single(&["chrom", "complete:3"]);
    assert_eq!(again["chromatic"], k3["chromatic"]);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "outerplanar",
        "--max-vertices",
        "6",
        "--seed",
        "7",
        "--limit",
        "10",
    ];
    let a = orbchrom(&args);
    let b = orbchrom(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(lines(&a).len(), 10);
}

#[test]
fn verify_reports_every_subgroup() {
    let out = orbchrom(&["verify-t2", "--graph", "cycle:5"]);
    assert!(out.status.success());
    let v = lines(&out);
    assert_eq!(v.len(), 2);
    assert_eq!(v[0]["automorphism_order"], 10);
    assert_eq!(v[0]["subgroups"].as_array().unwrap().len(), 8);
    assert_eq!(v[1]["summary"]["bound_holds"], 8);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| orbchrom(args).status.code();
    assert_eq!(code(&["forge", "cycle:5", "--group", "trivial"]), Some(2));
    assert_eq!(code(&["chrom", "wheel:5"]), Some(64));
    assert_eq!(code(&["frobnicate"]), Some(64));
    assert_eq!(code(&["roots", "cycle:5", "--width", "1/0"]), Some(64));
    assert_eq!(
        code(&[
            "verify-t2",
            "--graph",
            "cycle:6",
            "--max-subgroup-order",
            "4"
        ]),
        Some(65)
    );
}
