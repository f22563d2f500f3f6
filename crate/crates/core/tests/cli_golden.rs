//! Runs the `analyze` binary on the shipped fixtures and compares against
//! files in `tests/golden`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn analyze(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_analyze"))
        .args(args)
        .current_dir(root())
        .env_remove("SKEWINV_MAX_DEGREE")
        .env_remove("SKEWINV_MAX_ORDER")
        .output()
        .expect("analyze runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn check_golden(name: &str, actual: &str) {
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", Path::new(name).display());
}

fn golden_ok(name: &str, args: &[&str]) {
    let (code, out, err) = analyze(args);
    assert_eq!(code, 0, "stderr: {err}");
    check_golden(name, &out);
}

#[test]
fn mystic_group_default_commands() {
    golden_ok("mystic_m312.txt", &["fixtures/mystic_m312.json"]);
}

#[test]
fn mystic_group_json() {
    golden_ok("mystic_m312_decide_stc.json", &["fixtures/mystic_m312.json", "--cmd", "decide-stc", "--json"]);
    let (_, out, _) = analyze(&["fixtures/mystic_m312.json", "--cmd", "decide-stc", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["report"]["verdict"],
        "generated by quasi-reflections: yes; G ≅ M(3,1,2); |G| = 24"
    );
    assert_eq!(v["metadata"]["schema_version"], 1);
    assert_eq!(v["metadata"]["indices"], "1-based");
}

#[test]
fn dicyclic_hilbert() {
    let args = ["fixtures/dicyclic_m2.json", "--cmd", "hilbert", "--max-degree", "12"];
    golden_ok("dicyclic_m2_hilbert.txt", &args);
    let (_, out, _) = analyze(&args);
    assert!(out.contains("fixed ring Hilbert series: 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3, 0, 4"));
    assert!(out.contains("product form: 1/((1-t^2)(1-t^4))"));
}

#[test]
fn compare_orders_rank_four() {
    golden_ok("compare_m412_g224.txt", &["--cmd", "compare-orders M(4,1,2) G(2,2,4)"]);
}

#[test]
fn mgroup_command() {
    golden_ok("mgroup_3_1_2.json", &["--cmd", "mgroup 3 1 2", "--max-degree", "9", "--json"]);
}

#[test]
fn block_circle_fixture() {
    golden_ok("block_circle.txt", &["fixtures/block_circle.json"]);
}

#[test]
fn quantum_matrix_fixtures() {
    golden_ok("quantum_matrix_q3.json", &["fixtures/quantum_matrix_q3.json", "--json"]);
    golden_ok("quantum_matrix_q4.txt", &["fixtures/quantum_matrix_q4.json"]);
}

#[test]
fn negative_control() {
    golden_ok("minus_identity.txt", &["fixtures/minus_identity.json"]);
}

#[test]
fn abelian_free_module() {
    golden_ok("abelian_mystic.txt", &["fixtures/abelian_mystic.json"]);
}

#[test]
fn user_errors_exit_one() {
    let (code, out, err) = analyze(&["fixtures/swap_on_quantum_plane.json"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("generator is not a graded automorphism"), "{err}");
    assert!(err.contains("generators[0]"), "{err}");

    let (code, _, err) = analyze(&["fixtures/zero_parameter.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("ring.params[0].value: parameter must be nonzero"), "{err}");

    let (code, _, err) = analyze(&["fixtures/mystic_m312.json", "--cmd", "trace g=9"]);
    assert_eq!(code, 1);
    assert!(err.contains("no generator g9"), "{err}");

    let (code, _, err) = analyze(&["--cmd", "hilbert"]);
    assert_eq!(code, 1);
    assert!(err.contains("needs an input document"), "{err}");

    let (code, _, _) = analyze(&["--cmd", "mgroup 2 2 3"]);
    assert_eq!(code, 1);
}

#[test]
fn schema_errors_carry_paths() {
    let dir = std::env::temp_dir().join(format!("skewinv-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.json");
    std::fs::write(
        &f,
        r#"{"schema_version": 1, "field": {"root_of_unity_order": 2},
            "ring": {"kind": "skew", "n": 2}, "generators": [{"type": "tau", "s": "one"}]}"#,
    )
    .unwrap();
    let (code, _, err) = analyze(&[f.to_str().unwrap(), "--cmd", "classify"]);
    assert_eq!(code, 1);
    assert!(err.contains("generators[0]") && err.contains("expected usize"), "{err}");
}

#[test]
fn env_caps_mirror_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_analyze"))
        .args(["fixtures/mystic_m312.json", "--cmd", "decide-stc"])
        .current_dir(root())
        .env("SKEWINV_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap 10"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["fixtures/block_circle.json", "--json"];
    let (_, a, _) = analyze(&args);
    let (_, b, _) = analyze(&args);
    assert_eq!(a, b);
}
