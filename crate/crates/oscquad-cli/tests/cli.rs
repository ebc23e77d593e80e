//! Behavior of the installed binary: exit codes, output shapes, round trips.

use std::process::Command;

fn oscquad(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_oscquad"))
        .args(args)
        .env_remove("OSCQUAD_TOL")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn integrate_aliasing_example() {
    let (code, stdout, _) = oscquad(&[
        "integrate", "--algo", "qmc", "--f", "exp:h=3", "--k", "1", "--n", "5",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!(v["value_re"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["reference_gap"].as_f64().unwrap() < 1e-12);
    assert_eq!(v["evaluations"].as_u64().unwrap(), 5);
}

#[test]
fn integrate_taylor_example() {
    let (code, stdout, _) = oscquad(&[
        "integrate", "--algo", "tayper", "--f", "poly:0,0,1", "--k", "0", "--s", "3", "--n", "1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!((v["value_re"].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn exit_codes_are_stable() {
    // parse errors: 2
    assert_eq!(oscquad(&["integrate", "--algo", "qmc"]).0, 2);
    assert_eq!(oscquad(&["nonsense"]).0, 2);
    assert_eq!(
        oscquad(&["integrate", "--algo", "qmc", "--f", "wat:1", "--k", "1", "--n", "3"]).0,
        2
    );
    // precondition violations: 3
    assert_eq!(
        oscquad(&["integrate", "--algo", "per", "--f", "poly:0,0,1", "--k", "0", "--s", "2", "--n", "2"]).0,
        3
    );
    assert_eq!(
        oscquad(&["integrate", "--algo", "tayper", "--f", "poly:0,0,1", "--k", "0", "--s", "3", "--n", "4"]).0,
        3
    );
    assert_eq!(
        oscquad(&["complexity", "--eps", "2.0", "--k", "1", "--s", "1"]).0,
        3
    );
    // verify failures: 1 (criterion 1 is red at the pinned truncations)
    assert_eq!(oscquad(&["verify", "qmc-exact"]).0, 1);
    // unknown suite: 2
    assert_eq!(oscquad(&["verify", "wat"]).0, 2);
}

#[test]
fn error_and_complexity_examples() {
    let (code, stdout, _) = oscquad(&["error", "--kind", "qmc", "--n", "1", "--k", "0", "--s", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!((v["value"].as_f64().unwrap() - 0.2886751).abs() < 1e-6);

    let (code, stdout, _) = oscquad(&[
        "error", "--kind", "initial", "--k", "1", "--s", "1", "--setting", "nonperiodic",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!((v["value"].as_f64().unwrap() - 0.2250791).abs() < 1e-6);

    let (code, stdout, _) = oscquad(&[
        "complexity", "--eps", "0.1", "--k", "2", "--s", "1", "--criterion", "abs",
        "--setting", "periodic",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["achieved"].as_u64().unwrap(), 0);
    assert_eq!(v["zero_case"].as_bool().unwrap(), true);

    let (code, stdout, _) = oscquad(&["complexity", "--eps", "1e-6", "--k", "0", "--s", "inf"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["achieved"].as_u64().unwrap(), 8);

    let (code, stdout, _) = oscquad(&[
        "complexity", "--eps", "0.01", "--k", "100000", "--s", "2", "--criterion", "nor",
        "--setting", "nonperiodic",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!(v["achieved"].as_u64().unwrap() <= 4);
}

#[test]
fn curve_rows_parse_and_bracket() {
    let (code, stdout, _) = oscquad(&["curve", "--k", "5", "--s", "2", "--n-max", "100"]);
    assert_eq!(code, 0);
    let mut lines = stdout.trim().lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "n,k,s,exact_qmc,star_exact,per_bound,tayper_bound,lower_bound,upper_bound"
    );
    let mut rows = 0;
    for line in lines {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 9);
        assert!(fields.iter().all(|x| x.is_finite()));
        let (star, lower, upper) = (fields[4], fields[7], fields[8]);
        assert!(lower <= star && star <= upper * (1.0 + 1e-12), "{line}");
        rows += 1;
    }
    assert_eq!(rows, 100);
}

#[test]
fn verify_fooling_emits_certificates_as_json() {
    let (code, stdout, _) = oscquad(&["verify", "fooling", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 36);
    for c in certs {
        assert_eq!(c["valid"].as_bool(), Some(true));
        assert!(c["integral_abs"].as_f64().unwrap() >= c["bound_value"].as_f64().unwrap() - 1e-9);
        assert!(c["norm_hs"].as_f64().unwrap() <= 1.0 + 1e-9);
        assert!(c["sample_residuals"].as_f64().unwrap() < 1e-12);
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join("oscquad_cli_test_out.json");
    let p = path.to_str().unwrap();
    let (code, stdout, _) = oscquad(&[
        "error", "--kind", "star", "--n", "9", "--k", "1", "--s", "1", "--out", p,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(body.trim()).is_ok());
    let _ = std::fs::remove_file(&path);
}

#[test]
fn tolerance_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_oscquad"))
        .args(["integrate", "--algo", "qmc", "--f", "bump:0.5,0.25,2,1,1", "--k", "2", "--n", "6"])
        .env("OSCQUAD_TOL", "1e-6")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
}
