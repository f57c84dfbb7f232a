use std::process::{Command, Output};

use serde_json::Value;

fn einv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_einv")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = einv(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn e_reports_both_pole_orders() {
    let v = json(&["--type", "A2", "--height", "0,1", "e", "--w", "0,1;0,0", "--w2", "1,0;0,1"]);
    assert_eq!(v["schema"], "1");
    assert_eq!((v["o_wv"].as_u64(), v["o_vw"].as_u64(), v["d"].as_u64()), (Some(1), Some(0), Some(1)));
}

#[test]
fn roots_of_a3() {
    let v = json(&["--type", "A3", "--height", "1,2,3", "roots"]);
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["roots"][0], serde_json::json!([1, 0, 0]));
}

#[test]
fn generic_and_cc() {
    let v = json(&["--type", "A2", "--height", "0,1", "generic", "--w", "2,1;0,1"]);
    let kinds: Vec<&str> = v["summands"].as_array().unwrap().iter().map(|s| s["kind"].as_str().unwrap()).collect();
    assert!(!kinds.is_empty());
    let v = json(&["--type", "A2", "--height", "0,1", "cc", "--w", "0,0;0,0"]);
    assert_eq!(v["cc"], "1");
}

#[test]
fn cluster_vars_of_a3() {
    let v = json(&["--type", "A3", "cluster-vars"]);
    assert_eq!(v["variables"].as_array().unwrap().len(), 9);
    assert_eq!(v["clusters"].as_array().unwrap().len(), 14);
}

#[test]
fn orbits_mark_the_generic_one() {
    let v = json(&["--type", "A2", "--height", "0,1", "orbits", "--w", "1,1;1,1"]);
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.iter().filter(|o| o["generic"] == true).count(), 1);
    for o in orbits {
        assert_eq!(o["generic"] == true, o["codimension"] == 0);
    }
}

#[test]
fn verify_exits_zero_and_is_reproducible() {
    let a = einv(&["--type", "A2", "--height", "0,1", "--json", "--seed", "9", "verify"]);
    assert_eq!(a.status.code(), Some(0));
    let b = einv(&["--type", "A2", "--height", "0,1", "--json", "--seed", "9", "verify"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 10);
}

#[test]
fn tables_go_to_stderr() {
    let out = einv(&["--type", "A3", "roots"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("6 positive roots"));
}

#[test]
fn usage_errors() {
    for args in [
        &["--type", "A2", "--height", "0,2", "roots"][..],
        &["--type", "Q7", "roots"],
        &["--type", "A2", "e", "--w", "1,0", "--w2", "0,0;0,0"],
        &["--type", "A2", "verify", "--box", "-1"],
        &["--type", "A2", "verify", "everything"],
    ] {
        assert_eq!(einv(args).status.code(), Some(2), "{args:?}");
    }
}
