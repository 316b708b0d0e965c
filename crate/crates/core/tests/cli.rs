use std::process::{Command, Output};

fn fsikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsikit"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("FSIKIT_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_json_is_exact() {
    let o = fsikit(&["info", "--group", "preset:symmetric:3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"order\":6,\"num_classes\":3,\"num_real_classes\":3,\"squares_index\":2}\n");
}

#[test]
fn recover_quaternion() {
    let o = fsikit(&["recover", "--group", "preset:quaternion:8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("k_r=5  multiset: 1,1,1,1,-2\n"), "{}", stdout(&o));
}

#[test]
fn recover_json_uses_decimal_strings() {
    let o = fsikit(&["recover", "--group", "preset:quaternion:8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["multiset"], serde_json::json!(["1", "1", "1", "1", "-2"]));
    assert_eq!(v["s_sequence"], serde_json::json!(["2", "40", "224", "2176", "15872", "133120"]));
    assert_eq!(v["roots"][4], "-1/2");
    // byte-deterministic
    assert_eq!(o.stdout, fsikit(&["recover", "--group", "preset:quaternion:8", "--format", "json"]).stdout);
}

#[test]
fn psu33_from_file() {
    let o = fsikit(&["detect-negative", "--group", "file:data/psu33.gens", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("witness n=5: s(5)*|G| < s(6)\n"), "{}", stdout(&o));
}

#[test]
fn multtable_input() {
    let path = std::env::temp_dir().join(format!("fsikit-c3-{}.multtable", std::process::id()));
    std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let group = format!("file:{}", path.display());
    let o = fsikit(&["indicators", "--group", &group, "--input-format", "multtable", "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"], serde_json::json!({"plus": 1, "minus": 0, "zero": 2}));
}

#[test]
fn ssequence_and_bench() {
    let o = fsikit(&["ssequence", "--group", "preset:cyclic:3", "--max-n", "3", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["s_sequence"], serde_json::json!(["3", "9", "27"]));
    let o = fsikit(&["bench", "--group", "preset:dihedral:5", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("element_dp"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(fsikit(&["verify", "--suite"]).status.code(), Some(0));
    assert_eq!(fsikit(&["verify", "--group", "preset:alternating:5"]).status.code(), Some(0));
    assert_eq!(fsikit(&["info", "--group", "preset:dodecahedral:3"]).status.code(), Some(2));
    assert_eq!(fsikit(&["info", "--group", "file:data/missing.gens"]).status.code(), Some(2));
}

#[test]
fn order_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fsikit"))
        .args(["info", "--group", "preset:symmetric:5"])
        .env("FSIKIT_ORDER_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 100"));
}
