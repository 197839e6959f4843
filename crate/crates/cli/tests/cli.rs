use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exotic")).args(args).env_remove("EXOTIC_CONFIG").output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn mult_both_routes() {
    let out = run(&["mult", "--n", "2", "--mu", "[1,0]", "--lambda", "[0,0]", "--route", "both"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"a":2,"b":2,"agree":true}"#);
}

#[test]
fn phic_example() {
    let out = run(&["phic", "--mu", "[1,1,1]", "--nu", "[3]"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"lambda":[4,4,2,1,1]}"#);
}

#[test]
fn poset_dot_rank_one() {
    let out = run(&["poset", "--n", "1", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 2);
    assert_eq!(dot.matches("->").count(), 1);
}

#[test]
fn kostant_and_bwb() {
    let out = run(&["kostant", "--kind", "p'", "--n", "2", "--mu", "[1,0]"]);
    assert_eq!(stdout_json(&out)["value"], json!(2));
    let out = run(&["kostant", "--kind", "p", "--n", "2", "--mu", "[2,0]"]);
    assert_eq!(stdout_json(&out)["value"], json!(3));
    // (−2,0)+ρ = (0,1) has a zero entry: singular.
    let out = run(&["bwb", "--n", "2", "--lambda", "[-2,0]"]);
    assert_eq!(stdout_json(&out), json!({"zero": true}));
    let out = run(&["bwb", "--n", "2", "--lambda", "[-3,0]"]);
    assert_eq!(stdout_json(&out), json!({"zero": true}));
    // (0,−2)+ρ = (2,−1) ↦ (2,1) by one sign flip.
    let out = run(&["bwb", "--n", "2", "--lambda", "[0,-2]"]);
    assert_eq!(stdout_json(&out), json!({"zero": false, "sign": -1, "weight": [0, 0]}));
}

#[test]
fn weights_table_has_four_entries() {
    let v = stdout_json(&run(&["weights", "--n", "2", "--mu", "[1,0]"]));
    assert_eq!(v["dim"], json!(4));
    assert_eq!(v["weights"].as_array().unwrap().len(), 4);
}

#[test]
fn representative_round_trips_through_files() {
    let out = run(&["representative", "--mu", "[2,1]", "--nu", "[1]"]);
    assert_eq!(out.status.code(), Some(0));
    let mut file = tempfile_path("rep.json");
    file.1.write_all(&out.stdout).unwrap();
    let orbit = stdout_json(&run(&["orbit-identify", "--file", &file.0]));
    assert_eq!(orbit, json!({"mu": [2, 1], "nu": [1]}));
    let adapted = stdout_json(&run(&["adapted", "--file", &file.0]));
    assert_eq!(adapted["verified"], json!(true));
}

#[test]
fn malformed_json_exits_one_with_position() {
    let out = run(&["mult", "--n", "2", "--mu", "[1,0", "--lambda", "[0,0]"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1 column"), "{err}");

    let mut file = tempfile_path("bad.json");
    file.1.write_all(b"{\"n\": 1, \"v\": [0, \"1/0\"], \"x\": [[0,0],[0,0]]}").unwrap();
    let out = run(&["orbit-identify", "--file", &file.0]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("v[1]"));
}

#[test]
fn domain_errors_exit_one() {
    // Not dominant.
    assert_eq!(run(&["mult", "--n", "2", "--mu", "[0,1]", "--lambda", "[0,0]"]).status.code(), Some(1));
    // Increasing parts.
    assert_eq!(run(&["phic", "--mu", "[1,2]", "--nu", "[]"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn caps_name_their_knob() {
    let out = run(&["poset", "--n", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank_cap"));
    let out = run(&["sweep", "--n", "2", "--bound", "5", "--degree-cap", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree_cap"));
}

#[test]
fn config_file_is_read_and_flags_override_it() {
    let mut file = tempfile_path("exotic.conf");
    file.1.write_all(b"# tight caps\nrank_cap = 1\n").unwrap();
    let with_env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_exotic")).args(args).env("EXOTIC_CONFIG", &file.0).output().unwrap()
    };
    assert_eq!(with_env(&["poset", "--n", "2"]).status.code(), Some(1));
    assert_eq!(with_env(&["poset", "--n", "2", "--rank-cap", "2"]).status.code(), Some(0));
    assert_eq!(with_env(&["poset", "--n", "1"]).status.code(), Some(0));
}

#[test]
fn sweep_report_is_clean() {
    let out = run(&["sweep", "--n", "2", "--bound", "3", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ok"], json!(true));
    assert_eq!(v["violations"], json!([]));
}

fn tempfile_path(name: &str) -> (String, std::fs::File) {
    let dir = std::env::temp_dir().join(format!("exotic-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let f = std::fs::File::create(&path).unwrap();
    (path.to_str().unwrap().to_string(), f)
}
