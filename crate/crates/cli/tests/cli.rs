use std::path::PathBuf;
use std::process::{Command, Output};

fn ldlab(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ldlab"));
    cmd.args(args).env_remove("LDLAB_MAX_MEM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ldlab(args, &[]);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Compares stdout with `tests/golden/<name>`; set `LDLAB_BLESS=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("LDLAB_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{args:?} against {name}");
}

#[test]
fn laver_csv_matches_known_table() {
    assert_eq!(stdout(&["laver", "table", "--n", "2", "--format", "csv"]), "2,4,2,4\n3,4,3,4\n4,4,4,4\n1,2,3,4\n");
}

#[test]
fn golden_outputs() {
    golden("laver_a3.txt", &["laver", "table", "--n", "3"]);
    golden("laver_a2.json", &["laver", "table", "--n", "2", "--format", "json"]);
    golden("ybe_d3.coo", &["ybe", "matrix", "--rack", "dihedral:3", "--format", "coo"]);
    golden("ybe_check_a2.txt", &["ybe", "check", "--rack", "laver:2"]);
    golden("quandle_trefoil.txt", &["quandle", "present", "--strands", "2", "1 1 1"]);
    golden("group_trefoil.txt", &["quandle", "present", "--strands", "2", "1 1 1", "--group"]);
    golden("conj_delta.txt", &["conj", "class", "--strands", "3", "1 2 1"]);
    golden("g3_trace.txt", &["game", "g3", "1 2", "--trace"]);
    golden("psi_a2.txt", &["cocycle", "psi", "--n", "2", "--q", "1"]);
    golden("sweep_3.txt", &["conj", "sweep-conjecture", "--maxlen", "3"]);
}

#[test]
fn small_answers() {
    assert_eq!(stdout(&["order", "rank3", "1 2 1"]), "w^2+1\n");
    assert_eq!(stdout(&["order", "compare", "--strands", "3", "1", "2"]), ">\n");
    assert_eq!(stdout(&["order", "compare", "--strands", "3", "1 2 1", "2 1 2"]), "=\n");
    assert_eq!(stdout(&["braid", "eq", "--strands", "3", "1 2 1", "2 1 2"]), "true\n");
    assert_eq!(stdout(&["ack", "3", "3"]), "61\n");
    assert_eq!(stdout(&["ack", "--diag", "2"]), "7\n");
    assert_eq!(stdout(&["laver", "period", "--n", "3", "--p", "1"]), "4\n");
    assert_eq!(stdout(&["color", "count", "--rack", "dihedral:3", "--strands", "2", "1 1 1"]), "9\n");
    assert_eq!(stdout(&["color", "act", "--rack", "dihedral:3", "--colors", "1,2", "1 -1 1"]), "3,1\n");
    assert_eq!(stdout(&["conj", "mu", "--strands", "3", "2"]), "1\n");
    assert_eq!(stdout(&["cocycle", "rank", "--rack", "trivial:2"]), "4\n");
}

#[test]
fn json_envelope() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["ack", "3", "1", "--format", "json"])).unwrap();
    assert_eq!(v["schema"], "ack/1");
    assert_eq!(v["data"]["value"], "13");
}

#[test]
fn output_is_deterministic() {
    let args = ["conj", "class", "--strands", "4", "1 2 3 2"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(ldlab(&["bogus"], &[]).status.code(), Some(2));
    assert_eq!(ldlab(&["laver", "table"], &[]).status.code(), Some(2));
    assert_eq!(ldlab(&["laver", "period", "--n", "2", "--format", "csv", "--p", "1"], &[]).status.code(), Some(2));
    assert_eq!(ldlab(&["game", "g3", "1", "--cap", "2000000000"], &[]).status.code(), Some(2));
    assert_eq!(ldlab(&["laver", "table", "--n", "99"], &[]).status.code(), Some(1));
    assert_eq!(ldlab(&["braid", "nf", "--strands", "3", "1 5"], &[]).status.code(), Some(1));
    assert_eq!(ldlab(&["order", "rank3", "1 -2"], &[]).status.code(), Some(1));
    assert_eq!(ldlab(&["ybe", "check", "--rack", "dihedral:0"], &[]).status.code(), Some(1));
}

#[test]
fn memory_cap_is_respected() {
    let out = ldlab(&["laver", "table", "--n", "5"], &[("LDLAB_MAX_MEM", "100")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource"));
    let ok = ldlab(&["laver", "table", "--n", "5"], &[("LDLAB_MAX_MEM", "1M")]);
    assert!(ok.status.success());
    let dense = ldlab(&["ybe", "matrix", "--rack", "dihedral:20", "--format", "csv"], &[("LDLAB_MAX_MEM", "4K")]);
    assert_eq!(dense.status.code(), Some(1));
}

#[test]
fn g3_checkpoint_resumes() {
    let dir = std::env::temp_dir().join(format!("ldlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ck = dir.join("g3.json");
    let ck = ck.to_str().unwrap();
    let full = stdout(&["game", "g3", "1 1 2"]);
    let part = stdout(&["game", "g3", "1 1 2", "--cap", "100", "--checkpoint", ck]);
    assert_eq!(part, "aborted at=100\n");
    let rest = stdout(&["game", "g3", "--resume", ck]);
    assert_eq!(rest, full);
    std::fs::remove_dir_all(&dir).unwrap();
}
