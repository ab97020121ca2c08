use std::process::{Command, Output};

use serde_json::{json, Value};

fn supersym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = supersym(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn tableaux_golden() {
    let out = supersym(&["tableaux", "-m", "1", "-n", "1", "--shape", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let want = r#"{
  "count": 2,
  "m": 1,
  "n": 1,
  "shape": "2",
  "tableaux": [
    "1,1",
    "1,2"
  ]
}
"#;
    assert_eq!(text, want);
}

#[test]
fn rank_golden() {
    let (code, v) = report(&["rank", "-m", "1", "-n", "1", "-r", "2", "--shape", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["ssyt_squared"], 4);
    assert_eq!(v["match"], true);
}

#[test]
fn modified_golden() {
    let (code, v) = report(&[
        "modified", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right", "1,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["factors"], json!({"r": "1", "c": "1"}));
    assert_eq!(v["terms"], json!([[[[1, 1, 1], [2, 1, 1]], "2"]]));
}

#[test]
fn symmetrizer_vanishes() {
    let (code, v) = report(&[
        "symmetrizer",
        "-m",
        "1",
        "-n",
        "1",
        "--shape",
        "2",
        "--left",
        "1,2",
        "--right",
        "2,2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["zero"], true);
    assert_eq!(v["terms"], json!([]));
}

#[test]
fn garnir_suite_passes() {
    let (code, v) = report(&[
        "verify", "--suite", "garnir", "-m", "1", "-n", "1", "-r", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["violations"], json!([]));
    assert!(v["checked"].as_u64().unwrap() > 0);
}

#[test]
fn violations_exit_one() {
    let (code, v) = report(&[
        "verify",
        "--suite",
        "capelli-p41",
        "-m",
        "1",
        "-n",
        "1",
        "-r",
        "2",
    ]);
    assert_eq!(code, 1);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn invalid_config_exits_two() {
    for args in [
        &["rank", "-m", "1", "-n", "1", "-r", "9"][..],
        &["rank", "-m", "1", "-n", "1", "--shape", "2", "--char", "2"],
        &["tableaux", "-n", "1", "--shape", "2"],
        &["frobnicate", "-m", "1", "-n", "1"],
        &[
            "symmetrizer",
            "-m",
            "1",
            "-n",
            "1",
            "--shape",
            "2",
            "--left",
            "1",
            "--right",
            "1,1",
        ],
    ] {
        let out = supersym(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "straighten",
        "-m",
        "2",
        "-n",
        "1",
        "--shape",
        "2,1",
        "--left",
        "2,1,3",
        "--right",
        "3,1,2",
        "--integral",
    ];
    let a = supersym(&args);
    let b = supersym(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("supersym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rank.json");
    let p = path.to_str().unwrap();
    let out = supersym(&["rank", "-m", "1", "-n", "1", "--shape", "1,1", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rank"], 4);
    std::fs::remove_dir_all(dir).unwrap();
}
