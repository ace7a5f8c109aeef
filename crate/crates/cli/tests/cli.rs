use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shredders"))
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shredders-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("SHREDDER_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const STAR4: &str = "4 3\n0 1\n0 2\n0 3\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn shredders_json() {
    let f = scratch("star4.txt", STAR4);
    let o = run(&["shredders", f.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["shredders"], serde_json::json!([{"vertices": [0], "components": 3}]));
    assert_eq!(v["seed"], 0);
}

#[test]
fn most_shattering_json() {
    let f = scratch("c4.txt", C4);
    let o = run(&["most-shattering", f.to_str().unwrap(), "--json", "--seed", "5"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["k"].as_u64(), v["components"].as_u64(), v["is_shredder"].as_bool()), (Some(2), Some(2), Some(false)));
    let cut = v["cut"].clone();
    assert!(cut == serde_json::json!([0, 2]) || cut == serde_json::json!([1, 3]), "{cut}");
    assert_eq!(v["seed"], 5);
}

#[test]
fn same_seed_same_bytes() {
    let g = scratch("k33.txt", "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    let f = g.to_str().unwrap();
    for args in [["shredders", f, "--seed", "11"], ["most-shattering", f, "--seed", "11"]] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
    let env = bin().args(["shredders", f]).env("SHREDDER_SEED", "11").output().unwrap();
    assert_eq!(env.stdout, run(&["shredders", f, "--seed", "11"]).stdout);
    assert!(stdout(&env).contains("seed = 11"));
}

#[test]
fn verify_exit_codes() {
    let g = scratch("k33v.txt", "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    let o = run(&["verify", g.to_str().unwrap(), "--runs", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("listing mismatches = 0"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(run(&["shredders", "/nonexistent/graph.txt"]).status.code(), Some(1));
    let bad = scratch("bad.txt", "3 2\n0 1\n");
    assert_eq!(run(&["shredders", bad.to_str().unwrap()]).status.code(), Some(1));
    let split = scratch("split.txt", "4 2\n0 1\n2 3\n");
    assert_eq!(run(&["shredders", split.to_str().unwrap()]).status.code(), Some(3));
    let k4 = scratch("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(run(&["most-shattering", k4.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let o = bin().args(["shredders", split.to_str().unwrap()]).env("SHREDDER_SEED", "x").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_writes_readable_graphs() {
    let out = std::env::temp_dir().join(format!("shredders-gen-{}.txt", std::process::id()));
    let o = run(&["gen", "gen_unbalanced", "6", "2", "2", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let l = run(&["shredders", out.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&l).trim()).unwrap();
    assert_eq!(v["shredders"], serde_json::json!([{"vertices": [6, 7], "components": 3}]));
    assert_eq!(run(&["gen", "dumbbell", "-o", out.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["gen", "nope", "-o", out.to_str().unwrap()]).status.code(), Some(1));
}
