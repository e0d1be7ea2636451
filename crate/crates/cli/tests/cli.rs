use std::process::Command;

fn hksym(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hksym"))
        .args(args)
        .env_remove("HKSYM_TRUNC")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn series_csv_and_exit_codes() {
    let (code, stdout, _) = hksym(&["series", "N0", "--format", "csv", "--trunc", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("l,value\n-1,1/1\n0,24/1\n1,324/1\n"));

    let (code, _, stderr) = hksym(&["series", "bogus", "--trunc", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown series name"));

    let (code, _, _) = hksym(&["series", "N0", "--trunc", "1"]);
    assert_eq!(code, 2);

    let (code, _, _) = hksym(&["series", "--definitely-not-a-flag"]);
    assert_eq!(code, 2);
}

#[test]
fn env_var_sets_default_truncation() {
    let out = Command::new(env!("CARGO_BIN_EXE_hksym"))
        .args(["series", "N1", "--format", "csv"])
        .env("HKSYM_TRUNC", "5")
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 6); // header + l in -1..=3
}

#[test]
fn table_reproduces_leading_rows() {
    let (code, stdout, _) = hksym(&["table", "gv1", "--max", "2", "--format", "csv", "--trunc", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("0,6/1,1/1"));
    assert!(stdout.contains("3/2,105/1,35/8"));

    let (code, stdout, _) = hksym(&["table", "fujiki-hilb", "--max-n", "3", "--format", "text", "--trunc", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("n=3: 15 108 480 3200"));

    let (code, _, stderr) = hksym(&["table", "gv1", "--max", "24", "--trunc", "10"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("truncation too small"));
}

#[test]
fn check_status_contract() {
    let (code, stdout, _) = hksym(&["check", "ramanujan", "--trunc", "12"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"pass\":true"));

    // Too small a truncation is a reported check failure, not a usage error.
    let (code, stdout, _) = hksym(&["check", "anomaly", "--trunc", "3"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("truncation too small"));

    let (code, _, _) = hksym(&["check", "bogus", "--trunc", "12"]);
    assert_eq!(code, 2);
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir().join("hksym-test-out.csv");
    let (code, stdout, _) = hksym(&[
        "series",
        "N0",
        "--format",
        "csv",
        "--trunc",
        "4",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let body = std::fs::read_to_string(&dir).unwrap();
    assert!(body.contains("0,24/1"));
    std::fs::remove_file(dir).ok();
}
