use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn resolvent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resolvent")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn classify_examples() {
    let out = resolvent(&["classify", "-d", "3", "-s", "2", "-x", "1/2", "-y", "1/6"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["region"], "TildeR3 (R3)");
    assert_eq!((v["gamma"].as_str(), v["omega"].as_str()), (Some("1/2"), Some("1/2")));
    assert_eq!(v["branch"], "QuadLeft");

    let v = stdout_json(&resolvent(&["classify", "-d", "2", "-s", "2", "-x", "1/2", "-y", "1/4"]));
    assert_eq!(v["region"], "TildeR2 (R2)");
    assert_eq!(v["gamma"], "5/8");

    let v = stdout_json(&resolvent(&["classify", "-d", "3", "-s", "2", "-x", "1", "-y", "1/3"]));
    assert_eq!(v["region"], "ExcludedCorner");

    let v = stdout_json(&resolvent(&["gamma", "-d", "3", "-x", "1/2", "-y", "1/2"]));
    assert_eq!(v["gamma"], "1");
}

#[test]
fn usage_errors_exit_with_two() {
    let malformed = resolvent(&["classify", "-d", "3", "-x", "1/2", "-y", "one/six"]);
    assert_eq!(code(&malformed), 2);
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("malformed rational"));
    assert_eq!(code(&resolvent(&["classify", "-d", "3", "-x", "1/2"])), 2);
    assert_eq!(code(&resolvent(&["classify", "-d", "3", "-x", "1/2", "-y", "1/6", "--format", "svg"])), 2);
    assert_eq!(code(&resolvent(&["frobnicate"])), 2);
    // p = q leaves the potential exponent undefined
    assert_eq!(code(&resolvent(&["eigenbox", "-x", "1/2", "-y", "1/2"])), 2);
    // coarsest δ sits outside the spherical range
    assert_eq!(code(&resolvent(&["scaling", "--experiment", "spherical", "-d", "2", "-x", "1/2", "-y", "1/8", "--deltas", "0.1,0.05,0.02,0.01"])), 2);
}

#[test]
fn scaling_verdicts() {
    let args = ["scaling", "--experiment", "kernel1d", "-d", "1", "-x", "1/2", "-y", "1/2", "--format", "csv"];
    let ok = resolvent(&args);
    assert_eq!(code(&ok), 0);
    let csv = String::from_utf8(ok.stdout).unwrap();
    assert!(csv.starts_with("delta,value\n"));
    assert_eq!(csv.lines().count(), 9);

    let mut wrong = args.to_vec();
    wrong.extend(["--expected", "-1/2"]);
    assert_eq!(code(&resolvent(&wrong)), 1);
    let mut loose = wrong.clone();
    loose.extend(["--tol", "0.6"]);
    assert_eq!(code(&resolvent(&loose)), 0);
}

#[test]
fn knapp_sweep_is_deterministic() {
    let args = ["scaling", "--experiment", "knapp", "-d", "2", "-x", "1/2", "-y", "1/4"];
    let a = resolvent(&args);
    let b = resolvent(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["fit"]["expected"], "-5/8");
    assert_eq!(v["fit"]["pass"], true);
    assert!((v["fit"]["slope"].as_f64().unwrap() + 0.625).abs() < 0.1);
}

#[test]
fn region_examples() {
    let v = stdout_json(&resolvent(&["region", "-d", "3", "-x", "1/2", "-y", "1/2", "--ell", "1"]));
    assert_eq!(v["shape"]["shape"], "UniformNeighborhood");
    assert_eq!(v["shape"]["parameters"]["width"], 1.0);

    let v = stdout_json(&resolvent(&["region", "-d", "3", "-x", "5/6", "-y", "1/6", "--ell", "1"]));
    assert_eq!(v["shape"]["shape"], "FullComplement");
    assert!(v["polylines"].as_array().unwrap().iter().all(|p| p["points"].as_array().unwrap().is_empty()));

    let v = stdout_json(&resolvent(&["region", "-d", "4", "-x", "1/2", "-y", "0", "--ell", "2"]));
    assert_eq!(v["shape"]["shape"], "ConeComplement");
    let half = v["shape"]["parameters"]["half_angle"].as_f64().unwrap();
    assert!((half - 0.25f64.asin()).abs() < 1e-12);

    let empty = resolvent(&["region", "-d", "3", "-x", "5/6", "-y", "1/6", "--ell", "0.5", "--format", "csv"]);
    assert_eq!(code(&empty), 0);
    assert_eq!(String::from_utf8(empty.stdout).unwrap(), "polyline,re,im\n");

    let svg = resolvent(&["region", "-d", "3", "-x", "1/2", "-y", "1/2", "--format", "svg", "--window", "3"]);
    let text = String::from_utf8(svg.stdout).unwrap();
    assert!(text.contains("viewBox=\"-3 -3 6 6\"") && text.contains("<polyline"));
}

#[test]
fn shapes_table_csv() {
    let out = resolvent(&["shapes", "-d", "3", "--ell", "1,2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("label,ell,shape,gamma,omega,region,parameters\n"));
    assert!(text.lines().any(|l| l.starts_with("H,1,UniformNeighborhood,1,1,")));
}

fn golden() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/eigenbox.json")
}

/// Exact match for strings, booleans and integers; floats to `1e−9` relative.
fn assert_close(got: &Value, want: &Value, path: &str) {
    match (got, want) {
        (Value::Object(a), Value::Object(b)) => {
            assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>(), "keys at {path}");
            for (k, v) in a {
                assert_close(v, &b[k], &format!("{path}.{k}"));
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            assert_eq!(a.len(), b.len(), "length at {path}");
            for (i, (u, v)) in a.iter().zip(b).enumerate() {
                assert_close(u, v, &format!("{path}[{i}]"));
            }
        }
        (Value::Number(a), Value::Number(b)) if a.is_f64() || b.is_f64() => {
            let (u, v) = (a.as_f64().unwrap(), b.as_f64().unwrap());
            assert!((u - v).abs() <= 1e-9 * v.abs().max(1.0), "{path}: {u} vs {v}");
        }
        _ => assert_eq!(got, want, "at {path}"),
    }
}

#[test]
fn eigenbox_report_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    let args = [
        "eigenbox", "-x", "3/4", "-y", "1/4", "--preset", "complex-bump", "--amplitude", "0.5", "-n", "64", "--out", out_dir,
    ];
    let out = resolvent(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("eigenbox.json")).unwrap();
    if std::env::var_os("BLESS").is_some() {
        std::fs::create_dir_all(golden().parent().unwrap()).unwrap();
        std::fs::write(golden(), &text).unwrap();
    }
    let got: Value = serde_json::from_str(&text).unwrap();
    let want: Value = serde_json::from_str(&std::fs::read_to_string(golden()).unwrap()).unwrap();
    assert_close(&got, &want, "$");
    assert_eq!(got["schema"], "eigenbox/1");
    assert_eq!(got["hermitian"], false);
}

#[test]
fn eigenbox_free_and_real_potentials() {
    let v = stdout_json(&resolvent(&["eigenbox", "-x", "3/4", "-y", "1/4", "--amplitude", "0", "-n", "128"]));
    assert_eq!(v["off_ray"].as_array().unwrap().len(), 0);
    assert_eq!(v["admissible"], true);
    let v = stdout_json(&resolvent(&["eigenbox", "-x", "3/4", "-y", "1/4", "--preset", "box", "--amplitude", "-3", "-n", "128"]));
    assert_eq!(v["hermitian"], true);
    assert_eq!(v["max_abs_im"], 0.0);
    assert!(!v["off_ray"].as_array().unwrap().is_empty());
}

#[test]
fn figures_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = resolvent(&["figures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let listing = stdout_json(&out);
    assert_eq!(listing["figures"].as_array().unwrap().len(), 9);
    for name in ["cone_d4", "uniform_h_d3"] {
        let svg = std::fs::read_to_string(dir.path().join(format!("{name}.svg"))).unwrap();
        assert!(svg.starts_with("<svg") && svg.contains("viewBox=\"-4 -4 8 8\""));
        assert!(dir.path().join(format!("{name}.csv")).exists());
        let shape: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join(format!("{name}.json"))).unwrap()).unwrap();
        assert!(shape["shape"].is_string());
    }
    assert!(dir.path().join("atlas_d3.svg").exists());
}
