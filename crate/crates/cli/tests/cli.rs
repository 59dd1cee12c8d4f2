use serde_json::Value;
use std::process::{Command, Output};

fn comet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comet")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = comet(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn apoly_example() {
    assert_eq!(json(&["apoly", "--g", "1", "--mu", "1,1"]), serde_json::json!({"A": "q^2+q"}));
}

#[test]
fn hlv_example() {
    let v = json(&["hlv", "--g", "1", "--mu", "1", "--json"]);
    assert_eq!(v["H"], "z^2-2*z*w+w^2");
    assert_eq!(v["d_mu"], 2);
}

#[test]
fn epoly_accepts_semicolons() {
    let a = json(&["epoly", "--g", "1", "--mu", "2,1;1,1,1"]);
    let b = json(&["epoly", "--g", "1", "--mu", "2,1|1,1,1"]);
    assert_eq!(a, b);
    assert_eq!(a["constant_term"], "1");
}

#[test]
fn kac_from_comet_and_file() {
    let dir = std::env::temp_dir().join(format!("comet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("a2.json");
    std::fs::write(&f, r#"{"vertices":["0","1"],"arrows":[["0","1"]]}"#).unwrap();
    let v = json(&["kac", "--quiver", f.to_str().unwrap(), "--dim", "1,1"]);
    assert_eq!(v["A"], "1");
    let v = json(&["oracle", "quiver", "--quiver", f.to_str().unwrap(), "--dim", "1,1", "--p", "3"]);
    assert_eq!(v["agree"], true);
    let v = json(&["kac", "--comet", "g=1;mu=1,1"]);
    assert_eq!(v["A"], "q^2+q");
}

#[test]
fn oracle_charvar_example() {
    let v = json(&["oracle", "charvar", "--n", "2", "--g", "1", "--p", "5", "--eigs", "2,3"]);
    assert_eq!(v["count"], "496");
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_purity_passes_and_is_stable() {
    let a = comet(&["verify", "purity", "--max-n", "3", "--g", "1", "--k", "2", "--json", "--stable"]);
    let b = comet(&["verify", "purity", "--max-n", "3", "--g", "1", "--k", "2", "--json", "--stable"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.get("wall_ms").is_none());
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["status"] == "pass"));
}

#[test]
fn verify_csv() {
    let out = comet(&["verify", "pure", "--n", "3", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("suite,id,status,checked,witness\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(comet(&["bogus"]).status.code(), Some(2));
    assert_eq!(comet(&["apoly", "--mu", "1", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(comet(&["apoly", "--mu", "x"]).status.code(), Some(2));
    assert_eq!(comet(&["verify", "nonexistent"]).status.code(), Some(2));
    assert_eq!(comet(&["oracle", "charvar", "--n", "2", "--p", "3", "--eigs", "2,2"]).status.code(), Some(2));
}

#[test]
fn connectedness_sweep() {
    let v = json(&["connectedness", "--g", "0", "--n", "2", "--k", "4"]);
    for c in v["cases"].as_array().unwrap() {
        if c["E"] != "0" {
            assert_eq!(c["constant_term"], "1", "{c}");
        }
    }
}
