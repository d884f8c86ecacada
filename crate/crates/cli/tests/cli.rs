use std::path::Path;
use std::process::{Command, Output};

fn lamod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamod"))
        .args(args)
        .env_remove("LAMOD_CACHE_DIR")
        .output()
        .expect("run lamod")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn gen_prints_canonical_text() {
    for (args, expected) in [
        (&["gen", "q", "3"][..], "+1*s1^3 -3*s1*s2 +3*s3"),
        (&["gen", "pnm", "1", "2"][..], "+1*s2"),
        (&["gen", "p", "2"][..], "+1*s1^2*t2 +1*s2*t1^2 -2*s2*t2"),
        (&["gen", "pnm", "2", "2"][..], "+1*s1*s3 -1*s4"),
    ] {
        let out = lamod(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out).trim_end(), expected, "{args:?}");
    }
}

#[test]
fn gen_json_matches_text() {
    let out = lamod(&["gen", "p", "2", "--output", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["text"], "+1*s1^2*t2 +1*s2*t1^2 -2*s2*t2");
    assert_eq!(doc["poly"], "P_2");
    assert_eq!(doc["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn cap_breach_exits_two_unless_forced() {
    let out = lamod(&["gen", "q", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("newton cap"));

    let out = lamod(&["gen", "pnm", "3", "3", "--composition-cap", "9"]);
    assert!(out.status.success());

    let out = lamod(&["gen", "q", "9", "--force"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("+9*s9\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lamod(&["gen", "pnm", "2"]).status.code(), Some(2));
    assert_eq!(lamod(&["gen", "q", "0"]).status.code(), Some(2));
    assert_eq!(lamod(&["check", "all", "--product-cap", "0"]).status.code(), Some(2));
    assert_eq!(lamod(&["check", "lambda", "--ring", "witt"]).status.code(), Some(2));
    assert_eq!(lamod(&["cache", "list"]).status.code(), Some(2));
}

#[test]
fn check_module_on_one_instance() {
    let out = lamod(&["check", "module", "--ring", "binomial-int", "--module", "adams"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS module-extraction"), "{text}");
    assert!(text.contains("PASS graded-lambda-axioms"), "{text}");
    assert!(!text.contains("line-group-ring"));
}

#[test]
fn check_universal_json() {
    let out = lamod(&["check", "universal", "--output", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["caps"]["composition"], 8);
    assert!(doc["reports"].as_array().unwrap().len() >= 10);
}

#[test]
fn reduced_caps_are_reported() {
    let out = lamod(&["check", "lambda", "--composition-cap", "4", "--ring", "binomial-int", "--output", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let axioms = doc["reports"].as_array().unwrap().iter().find(|r| r["check"] == "lambda-axioms").unwrap();
    assert_eq!(axioms["params"]["composition_cap"], "4");
}

fn cache_entries(dir: &Path) -> Vec<String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lamod"))
        .args(["cache", "list", "--output", "json"])
        .env("LAMOD_CACHE_DIR", dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lamod"))
        .args(["gen", "pnm", "2", "2"])
        .env("LAMOD_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(cache_entries(dir.path()), vec!["pnm/2-2@v1".to_string()]);
    assert!(dir.path().join("pnm").join("2-2.json").exists());

    let path = dir.path().to_str().unwrap();
    let out = lamod(&["cache", "clear", "--cache-dir", path]);
    assert!(out.status.success());
    assert!(cache_entries(dir.path()).is_empty());
}

#[test]
fn corrupt_cache_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    assert!(lamod(&["gen", "p", "2", "--cache-dir", path]).status.success());
    let file = dir.path().join("p").join("2.json");
    let body = std::fs::read_to_string(&file).unwrap().replace("\"-2\"", "\"-3\"");
    std::fs::write(&file, body).unwrap();
    let out = lamod(&["gen", "p", "2", "--cache-dir", path]);
    assert_eq!(out.status.code(), Some(2));
}
