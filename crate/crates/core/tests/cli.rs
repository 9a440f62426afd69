use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use rademacher::{decompose, endpoints, phi_p, rademacher_phi, reconstruct, render_svg, EdgeWord, FrickeElement, RenderOptions, UnimodularMatrix};

const BASED_PATH_SVG: &[u8] = include_bytes!("fixtures/based_path.svg");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rademacher"))
        .args(args)
        .env_remove("RADEMACHER_PRECISION")
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn int_field(v: &Value) -> BigInt {
    match v {
        Value::Number(n) => BigInt::from(n.as_i64().unwrap()),
        Value::String(s) => s.parse().unwrap(),
        other => panic!("not an integer: {other}"),
    }
}

fn rational_field(v: &Value) -> BigRational {
    let s = v.as_str().expect("rationals are strings");
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => BigRational::from_integer(s.parse().unwrap()),
    }
}

#[test]
fn documented_json_outputs() {
    assert_eq!(json_out(&["phi", "--matrix", "3,1,8,3"]), json!({ "phi": 0 }));
    assert_eq!(json_out(&["phi-p", "--p", "5", "--matrix", "1,0,5,1"]), json!({ "phi_p": "0" }));
    assert_eq!(
        json_out(&["decompose", "--matrix", "0,-1,1,0"]),
        json!({ "word": [], "endpoints": ["1/0", "0/1"] })
    );
}

#[test]
fn based_path_svg_matches_the_fixture() {
    let w = EdgeWord::from_i64(&[-2, 1, -2]);
    assert_eq!(render_svg(&w, &RenderOptions::fit(&w)).unwrap(), BASED_PATH_SVG);
    let out = run(&["render", "--word", "-2,1,-2"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, BASED_PATH_SVG);
    let path = std::env::temp_dir().join(format!("based-path-{}.svg", std::process::id()));
    let out = run(&["render", "--word", "-2,1,-2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), BASED_PATH_SVG);
    let _ = std::fs::remove_file(path);
}

#[test]
fn outputs_round_trip_through_the_schema() {
    for m in ["3,1,8,3", "-7,2,-4,1", "1,0,0,1", "12345678901,1,12345678900,1"] {
        let g: UnimodularMatrix = m.parse().unwrap();
        let v = json_out(&["phi", "--matrix", m]);
        assert_eq!(int_field(&v["phi"]), rademacher_phi(&g));

        let v = json_out(&["decompose", "--matrix", m]);
        let word = EdgeWord::new(v["word"].as_array().unwrap().iter().map(int_field).collect());
        assert!(rademacher::psl_eq(&reconstruct(&word), &g));
        assert_eq!(word, decompose(&g));
        let pts: Vec<String> = endpoints(&word).iter().map(ToString::to_string).collect();
        assert_eq!(v["endpoints"], json!(pts));
    }
    for (p, m) in [("5", "1,1,0,1"), ("7", "2,1,7,4"), ("13", "-1,0,13,-1")] {
        let v = json_out(&["phi-p", "--p", p, "--matrix", m]);
        let e = FrickeElement::gamma0(p.parse().unwrap(), m.parse().unwrap()).unwrap();
        assert_eq!(rational_field(&v["phi_p"]), phi_p(&e));
        let g = json_out(&["phi-p", "--p", p, "--matrix", m, "--geometric"]);
        assert_eq!(g, v);
    }
    let v = json_out(&["km", "--word", "-2,1,-2"]);
    assert_eq!(v, json!({ "trace": -3, "signature": -1, "phi": 0 }));
    let v = json_out(&["endpoints", "--word", "[-2,1,-2]"]);
    let pts = v["endpoints"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect::<Vec<_>>().join(",");
    let back = json_out(&["turns", "--endpoints", &pts]);
    assert_eq!(back, json!({ "word": [-2, 1, -2] }));
}

#[test]
fn verify_theorem1_exit_code_follows_tolerance() {
    let args = ["verify-theorem1", "--p", "5", "--matrix", "1,1,5,6", "--z", "-0.1,0.3", "--precision", "60"];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], json!(true));
    let log10 = v["residual_log10"].as_f64().unwrap();
    assert!(log10 < -45.0);

    // a tolerance below the achieved residual must fail with exit code 1
    let strict = format!("1e{}", (log10 - 5.0).floor() as i64);
    let mut with_tol = args.to_vec();
    with_tol.extend(["--tolerance", &strict]);
    let out = run(&with_tol);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], json!(false));

    let loose = format!("1e{}", (log10 + 2.0).ceil() as i64);
    let mut with_tol = args.to_vec();
    with_tol.extend(["--tolerance", &loose]);
    assert_eq!(run(&with_tol).status.code(), Some(0));
}

#[test]
fn fricke_coset_on_the_command_line() {
    let v = json_out(&["verify-theorem1", "--fricke", "5:0,-1,1,0", "--z", "0.1,0.5", "--precision", "40"]);
    assert_eq!(v["pass"], json!(true));
    let v = json_out(&["verify-eta", "--matrix", "3,1,8,3", "--z", "-0.37,0.2", "--precision", "40"]);
    assert_eq!(v["pass"], json!(true));
    assert_eq!(v["precision"], json!(40));
}

#[test]
fn precision_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rademacher"))
        .args(["verify-eta", "--matrix", "0,-1,1,0", "--z", "0,1.5"])
        .env("RADEMACHER_PRECISION", "35")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["precision"], json!(35));
}

#[test]
fn errors_are_machine_readable() {
    for (args, code, exit) in [
        (vec!["phi", "--matrix", "1,2,3,4"], "determinant_mismatch", 1),
        (vec!["phi", "--matrix", "1, 0,0,1"], "parse_error", 2),
        (vec!["phi-p", "--p", "4", "--matrix", "1,0,4,1"], "invalid_prime", 1),
        (vec!["phi-p", "--p", "5", "--matrix", "1,0,3,1"], "divisibility_violation", 1),
        (vec!["phi-p", "--fricke", "5:1,1,1,1"], "determinant_mismatch", 1),
        (vec!["turns", "--endpoints", "1/0,0/1,2/5"], "not_an_edge", 1),
        (vec!["verify-eta", "--matrix", "1,0,0,1", "--z", "0,0.00001"], "imaginary_part_too_small", 1),
        (vec!["verify-eta", "--matrix", "1,0,0,1", "--z", "0,1", "--precision", "5"], "precision_too_low", 1),
        (vec!["render", "--word", "1", "--x-min", "2", "--x-max", "1"], "render_options", 2),
        (vec!["no-such-command"], "usage", 2),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(exit), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stderr).unwrap_or_else(|_| panic!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)));
        assert_eq!(v["error"]["code"], json!(code), "{args:?}");
        assert!(v["error"]["message"].is_string());
    }
}

#[test]
fn plain_mode() {
    let out = run(&["--plain", "decompose", "--matrix", "3,1,8,3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("endpoints: 1/0 0/1"));
}
