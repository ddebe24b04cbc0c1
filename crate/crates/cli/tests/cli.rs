use std::process::{Command, Output};

fn run_args(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prepermuto"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(cmd: &str) -> Output {
    run_args(&cmd.split_whitespace().collect::<Vec<_>>())
}

fn json(args: &str) -> serde_json::Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn betti_all_methods_agree() {
    let v = json("betti --n 4 --k 2 --method all");
    assert_eq!(v["betti"], serde_json::json!([1, 11, 11, 1]));
    assert_eq!(v["agree"], true);
    let table = run("betti --n 4 --k 2 --format table");
    let text = String::from_utf8(table.stdout).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.ends_with("1    11    11     1"))
            .count(),
        3
    );
}

#[test]
fn betti_single_method_shape() {
    let v = json("betti --n 4 --k 1 --method recursion");
    assert_eq!(
        v,
        serde_json::json!({"n": 4, "k": 1, "betti": [1, 5, 5, 1], "method": "recursion"})
    );
}

#[test]
fn fan_dump() {
    let v = json("fan --n 3 --k 1");
    let cones = v["maximal_cones"].as_array().unwrap();
    assert_eq!(cones.len(), 6);
    assert!(cones.iter().any(|c| c["chain"] == "[[1|2|3]]"));
    assert_eq!(cones[0]["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn codes_and_orbits() {
    let v = json("codes --n 4 --min-mu 2");
    assert_eq!(v["codes"].as_array().unwrap().len(), 24);
    let o = json("codes --n 4 --min-mu 2 --orbits");
    let total: u64 = o["codes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["orbit_size"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 24);
}

#[test]
fn charseries_sources_match() {
    let a = run("charseries --n 5 --k 2 --source recursion");
    let b = run("charseries --n 5 --k 2 --source codes");
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["basis"], "h");
}

#[test]
fn csf_bruteforce_agrees() {
    let v = json("csf --graph lollipop --n 5 --k 1 --bruteforce");
    assert_eq!(v["agrees_with_formula"], true);
    let v = json("csf --graph complete --n 3");
    assert_eq!(v["basis"], "e");
}

#[test]
fn identity_and_flags() {
    let v = json("verify identity --n 6 --k 2");
    assert_eq!(v["holds"], true);
    let v = json("flags verify --n 4 --trials 30 --seed 3");
    assert_eq!(v["violations"], 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run("betti --n 4 --k 3").status.code(), Some(2));
    assert_eq!(run("fan --n 3").status.code(), Some(2));
    assert_eq!(run("verify-all --max-n 40").status.code(), Some(2));
    assert_eq!(run("csf --graph tree --n 3").status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("prepermuto-out-{}.json", std::process::id()));
    let out = run_args(&[
        "betti",
        "--n",
        "3",
        "--k",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 4, 1]));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_all_is_byte_stable() {
    let a = run("verify-all --max-n 4 --seed 1 --trials 50");
    let b = run("verify-all --max-n 4 --seed 1 --trials 50");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
