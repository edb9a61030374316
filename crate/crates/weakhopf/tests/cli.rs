//! End-to-end command tests against the built binary: golden-file
//! verification, mutation controls with exit code 1, emit/parse round trips
//! and the wreath product pipeline.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use weakhopf::specfile::SpecFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weakhopf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/goldens/m2.json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn golden_m2_verifies_with_exit_zero() {
    let path = golden_path();
    let out = run(&["verify", path.to_str().unwrap(), "m2"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn golden_m2_is_canonically_serialized() {
    let text = std::fs::read_to_string(golden_path()).unwrap();
    let parsed = SpecFile::parse_str(&text).unwrap();
    assert_eq!(
        text,
        parsed.to_json(),
        "golden file must round-trip byte-identically"
    );
}

#[test]
fn corrupted_mu_coefficient_exits_one_with_triple_witness() {
    let text = std::fs::read_to_string(golden_path()).unwrap();
    let mut file = SpecFile::parse_str(&text).unwrap();
    // e12·e21 picks up a spurious e22 term: associativity breaks
    file.algebras
        .get_mut("m2")
        .unwrap()
        .mu
        .push((1, 2, 3, "1".into()));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, file.to_json()).unwrap();
    let out = run(&["verify", bad.to_str().unwrap(), "m2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let assoc = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "algebra_associativity")
        .unwrap();
    assert_eq!(assoc["pass"], false);
    let basis = assoc["witness"]["basis"].as_str().unwrap();
    assert_eq!(
        basis.split('⊗').count(),
        3,
        "witness must name a basis triple, got {basis}"
    );
}

#[test]
fn corrupted_law_coefficient_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("blowup.json");
    let out = run(&[
        "gallery",
        "blown-up-nothing",
        "2",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut file = SpecFile::parse_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    file.laws.get_mut("blowup").unwrap().psi[0].4 = "2".into();
    std::fs::write(&spec, file.to_json()).unwrap();
    let out = run(&["verify", spec.to_str().unwrap(), "blowup"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn unknown_target_and_parse_errors_exit_two() {
    let path = golden_path();
    let out = run(&["verify", path.to_str().unwrap(), "nope"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let out = run(&["verify", junk.to_str().unwrap(), "x"]);
    assert_eq!(out.status.code(), Some(2));

    let empty = dir.path().join("empty.json");
    std::fs::write(
        &empty,
        r#"{"field":{"field":"Q"},"algebras":{"bad":{"basis":[],"mu":[],"eta":[],"delta":[],"eps":[]}}}"#,
    )
    .unwrap();
    let out = run(&["verify", empty.to_str().unwrap(), "bad"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension must be positive"));
}

#[test]
fn wreath_product_matches_golden_structure_constants() {
    // the image basis comes from the echelon form, so the product's
    // structure constants are reproducible run to run
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("blowup.json");
    let product = dir.path().join("product.json");
    run(&[
        "gallery",
        "blown-up-nothing",
        "2",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    let out = run(&[
        "wreath",
        spec.to_str().unwrap(),
        "blowup",
        "--emit",
        product.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let fresh = std::fs::read_to_string(&product).unwrap();
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/goldens/blowup2_product.json"),
    )
    .unwrap();
    assert_eq!(fresh, golden);
}

#[test]
fn wreath_product_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("blowup.json");
    let product = dir.path().join("product.json");
    assert_eq!(
        run(&[
            "gallery",
            "blown-up-nothing",
            "2",
            "--emit",
            spec.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    let out = run(&[
        "wreath",
        spec.to_str().unwrap(),
        "blowup",
        "--emit",
        product.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&["verify", product.to_str().unwrap(), "product"]);
    assert_eq!(out.status.code(), Some(0));
    // the emitted product file is canonical
    let text = std::fs::read_to_string(&product).unwrap();
    assert_eq!(text, SpecFile::parse_str(&text).unwrap().to_json());
}

#[test]
fn wreath_with_antipode_emits_s() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("twist.json");
    let product = dir.path().join("product.json");
    run(&[
        "gallery",
        "twist",
        "2",
        "3",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    let out = run(&[
        "wreath",
        spec.to_str().unwrap(),
        "twist",
        "--antipode",
        "--format",
        "json",
        "--emit",
        product.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["derived"]["dims"]["product"], 6);
    let emitted = SpecFile::parse_str(&std::fs::read_to_string(&product).unwrap()).unwrap();
    assert!(
        emitted.algebras["product"].s.is_some(),
        "antipode must be emitted"
    );
    let out = run(&["verify", product.to_str().unwrap(), "product"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn wreath_antipode_without_antipodes_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("blowup.json");
    run(&[
        "gallery",
        "blown-up-nothing",
        "2",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    let out = run(&["wreath", spec.to_str().unwrap(), "blowup", "--antipode"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gallery_over_prime_and_cyclotomic_fields() {
    let dir = tempfile::tempdir().unwrap();
    // GF(5) carries a primitive 4th root of unity
    let spec = dir.path().join("qt_f5.json");
    let out = run(&[
        "gallery",
        "quantum-torus",
        "4",
        "4",
        "--field",
        "F5",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&["verify", spec.to_str().unwrap(), "torus"]);
    assert_eq!(out.status.code(), Some(0));

    let spec = dir.path().join("qt_phi3.json");
    let out = run(&[
        "gallery",
        "quantum-torus",
        "3",
        "3",
        "--field",
        "Phi3",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", spec.to_str().unwrap(), "torus"]);
    assert_eq!(out.status.code(), Some(0));

    // the torus needs a root of unity Q does not have
    let out = run(&["gallery", "quantum-torus", "3", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gallery_unknown_name_exits_two() {
    let out = run(&["gallery", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gallery_doubles_verify() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("double.json");
    let out = run(&[
        "gallery",
        "drinfeld-double",
        "cyclic",
        "2",
        "--emit",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", spec.to_str().unwrap(), "double"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "wreath",
        spec.to_str().unwrap(),
        "double",
        "--antipode",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["derived"]["dims"]["product"], 4);
}
