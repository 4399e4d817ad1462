use std::process::Command;

fn modlie(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_modlie"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn default_theorem_run_passes() {
    let (code, out) = modlie(&["verify", "theorem"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: PASS"));
}

#[test]
fn json_output_parses() {
    let (code, out) = modlie(&["verify", "theorem", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], serde_json::json!(true));
}

#[test]
fn negative_control_exits_one() {
    let (code, out) = modlie(&["verify", "theorem", "--p", "5"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(modlie(&["verify", "theorem", "--p", "4"]).0, 2);
    assert_eq!(modlie(&["grade", "--cocharacter", "1,2"]).0, 2);
    assert_eq!(modlie(&["no-such-command"]).0, 2);
}

#[test]
fn utility_commands() {
    let (code, out) = modlie(&["ermolaev", "--n", "1,1", "--p", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("Jacobi identity: fails"));
    let (code, out) = modlie(&["grade", "--cocharacter", "2,2,0,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("total dimension 52"));
    let (code, out) = modlie(&["dump-structure-constants", "--type", "F4", "--p", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# F4"));
    let (code, _) = modlie(&["verify", "ermolaev", "--n", "1,1", "--p", "3"]);
    assert_eq!(code, 0);
}
