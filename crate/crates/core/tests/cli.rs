use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn out_dir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{name}"));
    let _ = fs::remove_dir_all(&dir);
    dir
}

fn dynembed(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dynembed")).args(args).output().unwrap()
}

#[test]
fn dynamic_eval_on_a_file_graph() {
    let dir = out_dir("file");
    let graph = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/cut20.txt");
    let out = dynembed(&[
        "dynamic-eval", "--graph", graph, "--n", "15", "--w", "64", "--q", "30", "--seed", "1", "--p", "inf",
        "--out", dir.to_str().unwrap(), "--normalize-4", "--pairs-sample", "25",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.join("ratios.csv")).unwrap();
    assert_eq!(csv.lines().count(), 32);
    let log = fs::read_to_string(dir.join("deltas.log")).unwrap();
    assert!(log.lines().all(|l| l.split_whitespace().count() == 5));
}

#[test]
fn lower_bound_demo_and_audit_modes() {
    let dir = out_dir("demo");
    let out = dynembed(&["lower-bound-demo", "--w", "10000", "--toggles", "2", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(dir.join("demo.csv")).unwrap().lines().count(), 5);

    let dir = out_dir("audit");
    let out = dynembed(&["audit", "--n", "25", "--q", "40", "--seed", "2", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("audit clean through t=40"));
}

#[test]
fn bad_arguments_are_rejected() {
    let dir = out_dir("bad");
    assert!(!dynembed(&["nonsense", "--out", dir.to_str().unwrap()]).status.success());
    assert!(!dynembed(&["static-eval", "--p", "0.5", "--out", dir.to_str().unwrap()]).status.success());
    let out = dynembed(&["dynamic-eval", "--graph", "/nonexistent", "--out", dir.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = dynembed(&["dynamic-eval", "--n", "601", "--out", dir.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 600"));
}
