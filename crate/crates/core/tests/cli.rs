use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const A1_CHECK: &str = "p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: check n_max=3\n";

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn frobreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobreg")).args(args).env_remove("FROBREG_CACHE_DIR").output().unwrap()
}

fn json(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    if let Some(o) = v.as_object_mut() {
        o.remove("timing");
    }
    v
}

#[test]
fn a1_check_reports_non_regular() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", A1_CHECK);
    let out = frobreg(&["run", file.to_str().unwrap(), "--no-cache"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["task"], "check");
    assert_eq!(v["results"]["verdict"], "non-regular");
    assert_eq!(v["sequences"]["colength"]["lengths"], serde_json::json!([13, 121, 1093]));
    assert_eq!(v["estimates"]["e_hk"]["richardson"]["num"], 365);
    assert_eq!(v["estimates"]["e_hk"]["richardson"]["den"], 243);
}

#[test]
fn table_format_has_aligned_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", A1_CHECK);
    let out = frobreg(&["run", file.to_str().unwrap(), "--no-cache", "--format", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("task: check\n"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("3  27  1093")), "{text}");
    assert!(text.contains("verdict: non-regular"), "{text}");
}

#[test]
fn max_n_overrides_the_task_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", "p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: ehk n_max=3\n");
    let v = json(&frobreg(&["run", file.to_str().unwrap(), "--no-cache", "--max-n", "2"]));
    assert_eq!(v["sequences"]["colength"]["lengths"], serde_json::json!([13, 121]));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.task", "p: 3\nvars: x\nrelations: x*w\ntask: kunz\n");
    let out = frobreg(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "input");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let missing = frobreg(&["run", dir.path().join("nope.task").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(frobreg(&["run"]).status.code(), Some(2));

    let inhom = write(dir.path(), "inhom.task", "p: 3\nvars: x y z\nrelations: x*y - z\ntask: kunz\n");
    assert_eq!(frobreg(&["run", inhom.to_str().unwrap()]).status.code(), Some(2));

    let math = write(dir.path(), "math.task", "p: 2\nvars: x y\nideal: x\ntask: ehk\n");
    let out = frobreg(&["run", math.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["error"]["kind"], "math");

    let slow = write(dir.path(), "slow.task", "p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: check n_max=6\n");
    let out = frobreg(&["run", slow.to_str().unwrap(), "--no-cache", "--timeout", "0.000001"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["error"]["kind"], "timeout");
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", A1_CHECK);
    let a = frobreg(&["run", file.to_str().unwrap(), "--no-cache"]);
    let b = frobreg(&["run", file.to_str().unwrap(), "--no-cache"]);
    assert_eq!(json(&a), json(&b));
}

#[test]
fn cache_is_transparent_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", A1_CHECK);
    let cache = dir.path().join("cache");
    let file = file.to_str().unwrap();
    let cache_arg = cache.to_str().unwrap();
    let plain = json(&frobreg(&["run", file, "--no-cache"]));
    let cold = json(&frobreg(&["run", file, "--cache", cache_arg]));
    let entries: Vec<PathBuf> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!entries.is_empty());
    let warm = json(&frobreg(&["run", file, "--cache", cache_arg]));
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);

    for (k, e) in entries.iter().enumerate() {
        if k % 2 == 0 {
            fs::write(e, "garbage").unwrap();
        } else {
            let text = fs::read_to_string(e).unwrap();
            fs::write(e, text.replacen('1', "2", 1)).unwrap();
        }
    }
    let out = frobreg(&["run", file, "--cache", cache_arg]);
    assert!(out.status.success());
    assert_eq!(json(&out), plain);
    let healed = json(&frobreg(&["run", file, "--cache", cache_arg]));
    assert_eq!(healed, plain);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a1.task", "p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: kunz\n");
    let cache = dir.path().join("env-cache");
    let out = Command::new(env!("CARGO_BIN_EXE_frobreg"))
        .args(["run", file.to_str().unwrap()])
        .env("FROBREG_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(fs::read_dir(&cache).unwrap().count() > 0);
}
