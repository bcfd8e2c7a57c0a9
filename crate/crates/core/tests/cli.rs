use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zero-algebra"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_lists_the_group() {
    let o = run(&["generate", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("level 2, order 8"));
    assert!(text.contains("i1j1\tsquare -1"));

    let o = run(&["--format", "json", "generate", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 16);
    assert_eq!(v["elements"].as_array().unwrap().len(), 16);
}

#[test]
fn table_csv() {
    let o = run(&["--format", "csv", "table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("i1,i1,-i1,-1,1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["generate", "9"]).status.code(), Some(2));
    assert_eq!(
        run(&["--max-level", "3", "generate", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["--format", "csv", "rewrite"]).status.code(), Some(2));
    assert_eq!(run(&["--steps", "0", "rewrite"]).status.code(), Some(2));
    assert_eq!(
        run(&["pentads", "--signature", "+,+"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn rewrite_json() {
    let o = run(&["--format", "json", "--steps", "3", "rewrite"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[0]["label"], "conjugation");
    assert_eq!(steps[2]["alphabet"].as_array().unwrap().len(), 4);
}

#[test]
fn pentads_with_signature() {
    let o = run(&["--format", "json", "pentads", "--signature", "+,-,-,-,-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_set"], 5);
    assert_eq!(v["pentads"].as_array().unwrap().len(), 30);
}

#[test]
fn nilpotent_reports_square() {
    let o = run(&["--format", "json", "nilpotent", "5", "0", "0", "4", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nilpotent"], true);
    assert_eq!(v["square"], "0");
    assert_eq!(v["E"], "5");

    let o = run(&["nilpotent", "2", "0", "0", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("square: 2*1"));

    assert_eq!(
        run(&["nilpotent", "-1", "0", "0", "1", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_deterministic_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("zero-algebra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verify.json");
    let o = run(&[
        "--format",
        "json",
        "--seed",
        "11",
        "--output",
        path.to_str().unwrap(),
        "verify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    let again = run(&["--format", "json", "--seed", "11", "verify"]);
    assert_eq!(written, again.stdout);
    let v: serde_json::Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 11);
    std::fs::remove_dir_all(&dir).unwrap();
}
