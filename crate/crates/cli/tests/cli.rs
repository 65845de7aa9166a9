use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const D4_COLUMN: &str = "\
t1>=0
t2>=0
t3-t1-t2>=0
t4-t2>=0
t5-t1>=0
t4+t5-t3>=0
t7-t6>=0
t10>=0
t6-t3>=0
t7-t4-t5>=0
t8-t5>=0
t9-t4>=0
t8+t9-t7>=0
t11-t10>=0
t12>=0
";

#[test]
fn d4_inequalities_golden() {
    let o = run(&[
        "inequalities",
        "--quiver",
        "4>3,3>1,3>2",
        "--word",
        "auto",
        "--source",
        "moves",
        "--format",
        "pretty",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), D4_COLUMN);
}

#[test]
fn a3_move_table() {
    let o = run(&[
        "moves", "--quiver", "2>1,2>3", "--word", "auto", "--format", "tsv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7);
    let type_two: Vec<&str> = rows
        .iter()
        .filter(|r| r.starts_with("2\t"))
        .map(|r| r.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(
        type_two,
        [
            "(-1,-1,1,0,0,0)",
            "(0,-1,0,1,0,0)",
            "(-1,0,0,0,1,0)",
            "(0,0,-1,1,1,0)",
            "(0,0,0,0,0,1)"
        ]
    );
}

#[test]
fn gp_and_moves_give_the_same_inequalities_in_type_a() {
    let base = [
        "inequalities",
        "--quiver",
        "2>1,3>2,3>4",
        "--format",
        "json",
    ];
    let gp = run(&[&base[..], &["--source", "gp"]].concat());
    let moves = run(&[&base[..], &["--source", "moves"]].concat());
    let normals = |o: &Output| -> std::collections::BTreeSet<String> {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_array()
            .unwrap()
            .iter()
            .map(|x| x["pretty"].as_str().unwrap().to_string())
            .collect()
    };
    assert_eq!(normals(&gp), normals(&moves));
}

#[test]
fn parse_errors_exit_with_two_and_name_the_token() {
    let o = run(&["ar", "--quiver", "2>1,2x3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("`2x3`"));
}

#[test]
fn adapted_only_commands_reject_other_words() {
    for cmd in ["moves", "ar"] {
        let o = run(&[cmd, "--quiver", "2>1,2>3", "--word", "1,2,1,3,2,1"]);
        assert_eq!(o.status.code(), Some(2), "{cmd}");
        assert!(String::from_utf8(o.stderr).unwrap().contains("not adapted"));
    }
    // strings do not need an adapted word
    let o = run(&[
        "strings",
        "--quiver",
        "2>1,2>3",
        "--word",
        "1,2,1,3,2,1",
        "--box",
        "1",
    ]);
    assert!(o.status.success());
}

#[test]
fn wiring_needs_type_a() {
    let o = run(&["wiring", "--quiver", "4>3,3>1,3>2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_suite_passes() {
    let o = run(&["verify", "suite", "--max-rank", "2", "--box", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn theorem_report_as_json() {
    let o = run(&[
        "verify", "theorem", "--quiver", "2>1,2>3", "--typed", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["witness"], serde_json::Value::Null);
}

#[test]
fn out_file_matches_stdout_and_runs_repeat() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("crystal.dot");
    let args = [
        "crystal", "--quiver", "2>1,2>3", "--depth", "3", "--format", "dot",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let o = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
}

#[test]
fn dot_of_paths_needs_a_type() {
    let o = run(&["gp", "--quiver", "2>1,2>3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "gp",
        "--quiver",
        "2>1,2>3",
        "--format",
        "dot",
        "--type-index",
        "2",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("digraph G2"));
}
