use std::process::{Command, Output};

use serde_json::Value;

fn lsk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsk")).args(args).env_remove("LSK_PMAX_DEFAULT").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = lsk(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&stdout(&a)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    lsk(args).status.code().unwrap()
}

#[test]
fn whitehead_table() {
    let out = stdout(&["hfun", "--family", "whitehead"]);
    let rows: Vec<Vec<i64>> = out
        .lines()
        .skip(2)
        .take(5)
        .map(|l| l.split_whitespace().skip(1).map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(
        rows,
        vec![vec![2, 1, 0, 0, 0], vec![2, 1, 0, 0, 0], vec![2, 1, 1, 0, 0], vec![3, 2, 1, 1, 1], vec![4, 3, 2, 2, 2]]
    );
    assert!(out.contains("h-support: (0,0)=1"));
    assert!(out.contains("validation: ok"));
    let j = json(&["hfun", "--family", "whitehead"]);
    assert_eq!(j["rows"][2], serde_json::json!([2, 1, 1, 0, 0]));
    assert_eq!(j["h_support"], serde_json::json!([[0, 0, 1]]));
}

#[test]
fn unlink_and_trefoil_tables() {
    let out = stdout(&["hfun", "--family", "unlink2"]);
    assert!(out.contains("h-support: empty"));
    let j = json(&["hfun", "--family", "torus 2 3"]);
    let s: Vec<i64> = serde_json::from_value(j["s"].clone()).unwrap();
    let v: Vec<i64> = serde_json::from_value(j["values"].clone()).unwrap();
    let at = |x: i64| v[s.iter().position(|y| *y == x).unwrap()];
    assert_eq!((at(0), at(1)), (1, 0));
}

#[test]
fn d_invariant_rows() {
    assert_eq!(stdout(&["dinv", "--family", "whitehead", "-p", "1", "1"]), "0 0 -2\n");
    assert_eq!(stdout(&["dinv", "--family", "whitehead", "-p", "1", "-1"]), "0 0 0\n");
    assert_eq!(stdout(&["dinv", "--family", "whitehead", "-p", "-1", "-1"]), "0 0 0\n");
    let rows = stdout(&["dinv", "--family", "unlink2", "-p", "-2", "-3", "--all"]);
    assert_eq!(rows.lines().count(), 6);
    assert_eq!(rows.lines().next().unwrap(), "0 -1 -1/12");
    let j = json(&["dinv", "--family", "whitehead", "-p", "2", "3", "--all", "--oracle"]);
    for row in j["rows"].as_array().unwrap() {
        assert_eq!(row["d"], row["oracle"]);
    }
    assert_eq!(stdout(&["dinv", "--family", "torus 2 3", "-p", "1"]), "0 -2\n");
}

#[test]
fn invariants_commands() {
    assert_eq!(stdout(&["casson", "--family", "whitehead"]), "e1 e2 lambda\n+1 +1 1\n+1 -1 -1\n-1 +1 -1\n-1 -1 1\n");
    assert_eq!(stdout(&["beta", "--family", "whitehead"]).lines().next(), Some("-1"));
    assert_eq!(stdout(&["region", "--family", "whitehead"]), "p1>0 and p2>0 (exact)\n");
    assert_eq!(json(&["casson", "--family", "torus 2 3"])["+"], 1);
    let g = stdout(&["genus", "--family", "whitehead", "--check", "0", "0"]);
    assert!(g.starts_with("g1 + g2 >= 1\n"));
    assert!(g.contains("fail"));
    assert!(stdout(&["genus", "--family", "whitehead", "--check", "1", "0"]).contains("pass"));
    assert_eq!(stdout(&["nuplus", "--family", "torus 2 5"]), "2\n");
    let r = json(&["report", "--family", "whitehead"]);
    assert_eq!(r["beta"], -1);
    assert_eq!(r["casson"]["+-"], -1);
    assert_eq!(r["genus_lower_bound"], 1);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&["dinv", "--family", "whitehead", "-p", "3", "2", "--all"]);
    let j = json(&["dinv", "--family", "whitehead", "-p", "3", "2", "--all"]);
    let from_json: Vec<String> = j["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{} {} {}", r["label"][0], r["label"][1], r["d"].as_str().unwrap()))
        .collect();
    assert_eq!(text.lines().collect::<Vec<_>>(), from_json);
    let beta = json(&["beta", "--family", "whitehead"]);
    assert_eq!(beta["beta"].to_string(), stdout(&["beta", "--family", "whitehead"]).lines().next().unwrap());
}

#[test]
fn deterministic() {
    let args = ["oracle-check", "--family", "whitehead", "--pmax", "2", "--json"];
    assert_eq!(lsk(&args).stdout, lsk(&args).stdout);
}

#[test]
fn oracle_check_range() {
    let j = json(&["oracle-check", "--family", "whitehead", "--pmax", "2"]);
    assert_eq!(j["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(j["cases"], 36);
    let out = Command::new(env!("CARGO_BIN_EXE_lsk"))
        .args(["oracle-check", "--family", "unlink2", "--json"])
        .env("LSK_PMAX_DEFAULT", "1")
        .output()
        .unwrap();
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["cases"], 4);
}

#[test]
fn inputs_from_json_and_file() {
    let inline = r#"{"type":"link2","alexander":"-(t1-1)(t2-1)"}"#;
    assert_eq!(stdout(&["dinv", "--input", inline, "-p", "1", "1"]), "0 0 -2\n");
    let path = std::env::temp_dir().join(format!("lsk-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"type":"link2","h_table":{"radius":1,"values":[[0,0,0],[0,1,0],[0,0,0]]}}"#).unwrap();
    let out = stdout(&["region", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out, "p1>0 and p2>0 (exact)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["hfun", "--input", r#"{"type":"knot","alexander":"t - 3 + t^-1"}"#]), 2);
    assert_eq!(code(&["hfun", "--family", "torus 2 4"]), 2);
    assert_eq!(code(&["hfun", "--family", "trefoil"]), 2);
    assert_eq!(code(&["hfun", "--file", "/nonexistent/input.json"]), 2);
    assert_eq!(code(&["region", "--family", "unknot"]), 2);
    assert_eq!(code(&["casson", "--input", r#"{"type":"knot","alexander":"t-1+t^-1"}"#]), 2);
    assert_eq!(code(&["hfun"]), 4);
    assert_eq!(code(&["hfun", "--family", "whitehead", "--file", "x.json"]), 4);
    assert_eq!(code(&["dinv", "--family", "whitehead", "-p", "1"]), 4);
    assert_eq!(code(&["frobnicate"]), 4);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn oracle_agreement_exits_zero() {
    assert_eq!(code(&["oracle-check", "--family", "whitehead", "--pmax", "1"]), 0);
    assert_eq!(code(&["dinv", "--family", "whitehead", "-p", "1", "1", "--oracle"]), 0);
}
