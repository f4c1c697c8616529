use std::path::PathBuf;
use std::process::{Command, Output};

use dd_coherence::corpus::FILES;
use dd_coherence::report::Report;
use serde_json::Value;

fn ddcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn corpus_file(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/corpus")
        .join(rel)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bundled_corpus_passes() {
    let o = ddcheck(&["corpus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert_eq!(
        text.matches("proven in").count(),
        FILES.iter().filter(|(p, _)| p.starts_with("obligation/")).count()
    );
}

#[test]
fn corpus_on_disk_matches_the_bundled_run() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus");
    let on_disk = ddcheck(&["--format", "machine", "corpus", dir.to_str().unwrap()]);
    let bundled = ddcheck(&["--format", "machine", "corpus"]);
    assert_eq!(on_disk.status.code(), Some(0));
    assert_eq!(stdout(&on_disk), stdout(&bundled));
}

#[test]
fn zeta_round_trip_is_proven() {
    let o = ddcheck(&["prove", &corpus_file("obligation/zeta-round-trip.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("obligation zeta-round-trip: proven in"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn mutated_cylinder_is_not_found() {
    let o = ddcheck(&["prove", "--bundled", "tstrans-sigma-inverted"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not found"));
}

#[test]
fn depth_flag_bounds_the_search() {
    let file = corpus_file("obligation/zeta-round-trip.json");
    assert_eq!(ddcheck(&["--depth", "1", "prove", &file]).status.code(), Some(1));
    assert_eq!(ddcheck(&["--depth", "4", "prove", &file]).status.code(), Some(0));
}

#[test]
fn nonstrict_horizontal_units_are_a_violation() {
    let o = ddcheck(&["--format", "machine", "check-dd", &data("nonstrict-horizontal.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports: Vec<Report> = serde_json::from_value(v["reports"].clone()).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].has_axiom("horizontal strictness"));
    assert!(reports[0]
        .violations
        .iter()
        .any(|x| x.witness == "horizontal left unit at 1"));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"category\": ").unwrap();
    assert_eq!(ddcheck(&["check-cat", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "{ \"unknown\": 1 }").unwrap();
    assert_eq!(ddcheck(&["check-cat", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("absent.json");
    assert_eq!(
        ddcheck(&["check-cat", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    // A rig document has no category section.
    assert_eq!(
        ddcheck(&["check-cat", &corpus_file("rig/z2.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        ddcheck(&["prove", "--bundled", "no-such-obligation"]).status.code(),
        Some(2)
    );
}

#[test]
fn machine_reports_round_trip() {
    let o = ddcheck(&[
        "--format",
        "machine",
        "check-map",
        &corpus_file("map/identity-pointed-z2-z2-p1-q1.json"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports: Vec<Report> = serde_json::from_value(v["reports"].clone()).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(serde_json::to_value(&reports).unwrap(), v["reports"]);
}

#[test]
fn output_is_deterministic() {
    let a = ddcheck(&["--format", "machine", "corpus"]);
    let b = ddcheck(&["--format", "machine", "corpus"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn braid_emits_the_stored_gamma() {
    let file = corpus_file("dd/pointed-z2-z2-p1-q1.json");
    let o = ddcheck(&["--format", "machine", "braid", &file]);
    assert_eq!(o.status.code(), Some(0));
    let emitted: Value = serde_json::from_slice(&o.stdout).unwrap();
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(emitted["braiding"], stored["braiding"]);
}

#[test]
fn promote_map_reconstructs_h() {
    let file = corpus_file("map/pointed-z2-z2-p0-q0-to-p1-q0.json");
    let o = ddcheck(&["--format", "machine", "promote-map", &file]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let emitted: Value = serde_json::from_slice(&o.stdout).unwrap();
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(emitted["h"], stored["map"]["h"]);
}

#[test]
fn every_single_file_command_accepts_its_corpus_file() {
    let cases = [
        ("check-cat", "dd/codiscrete-z3.json"),
        ("check-monoidal", "dd/codiscrete-z3.json"),
        ("check-dd", "dd/strict-discrete-z2.json"),
        (
            "check-transformation",
            "transformation/pointed-z2-z2-p1-q1-nonidentity.json",
        ),
        ("rig-verify", "rig/z4.json"),
    ];
    for (cmd, rel) in cases {
        let o = ddcheck(&[cmd, &corpus_file(rel)]);
        assert_eq!(o.status.code(), Some(0), "{cmd} {rel}: {}", stdout(&o));
    }
}
