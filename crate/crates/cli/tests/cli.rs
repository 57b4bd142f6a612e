use std::fs;
use std::process::{Command, Output};

use grcodes::io::from_alist;
use grcodes::{CodeFamilySpec, CodeReport, FamilyInstance, LinearCode};

fn grcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grcodes")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_class1_passes() {
    let out = grcodes(&["verify", "class1:m=2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rank        16 (expected 16)"));
}

#[test]
fn quantum_of_the_smallest_hermitian_code() {
    let out = grcodes(&["quantum", "gf4dc34:m=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[[8,4,2]]");
}

#[test]
fn alist_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.alist");
    let out = grcodes(&[
        "export",
        "dihedralqr:q=11",
        "--format",
        "alist",
        "--what",
        "check",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("22 11"));
    let h = from_alist(&text).unwrap();
    assert_eq!((h.rows(), h.cols()), (11, 22));
    assert!((0..11).all(|r| h.row_weight(r) == 6));

    let spec: CodeFamilySpec = "dihedralqr:q=11".parse().unwrap();
    let code = LinearCode::from_instance(&FamilyInstance::build(&spec).unwrap()).unwrap();
    assert_eq!(&h, code.check().unwrap());
}

#[test]
fn json_export_matches_text() {
    let text = grcodes(&["export", "gf4selfdual:m=1", "--what", "generator"]);
    let json = grcodes(&["export", "gf4selfdual:m=1", "--what", "generator", "--format", "json"]);
    let m = grcodes::io::from_json(&stdout(&json)).unwrap();
    assert_eq!(grcodes::io::to_text(&m), stdout(&text));
}

#[test]
fn verify_small_catalog() {
    let specs = [
        "class1:m=1", "class1:m=2", "class1:m=1,n=2", "class1:m=2,n=2",
        "class2:m=1", "class2:m=2", "class2:m=1,n=2",
        "dc34:m=1", "dc34:m=2", "dc34:m=1,n=2", "dc34b:m=1",
        "dc78:m=1", "dc78:m=2",
        "general2t:m=1,t=1", "general2t:m=2,t=2", "general2t:m=1,t=3",
        "dualofdc34:m=1", "dualofdc34:m=1,n=2",
        "gf4selfdual:m=1", "gf4selfdual:m=2",
        "gf4dc34:m=1", "gf4dc34:m=2", "gf4dc78:m=1",
        "dihedralqr:q=11", "dihedralqr:q=19", "dihedralqr:q=27",
        "gendihedral:q=11,t=1", "gendihedral:q=11,t=2", "gendihedral:q=19,t=1",
    ];
    for s in specs {
        let out = grcodes(&["verify", s]);
        assert_eq!(out.status.code(), Some(0), "{s}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn catalog_lists_every_family() {
    let out = grcodes(&["catalog", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), grcodes::CodeFamily::ALL.len());
}

#[test]
fn exit_codes() {
    assert_eq!(grcodes(&["verify", "golay:m=1"]).status.code(), Some(2));
    assert_eq!(grcodes(&["verify", "class1:m=0"]).status.code(), Some(2));
    assert_eq!(grcodes(&["distance", "class1:m=3", "--exhaustive-cap", "20"]).status.code(), Some(3));
    assert_eq!(grcodes(&["quantum", "dualofdc34:m=1"]).status.code(), Some(1));
    assert_eq!(grcodes(&["export", "gf4dc34:m=1", "--format", "alist"]).status.code(), Some(1));
}

#[test]
fn distance_reports_are_sorted_json() {
    let out = grcodes(&["--json", "distance", "dihedralqr:q=11"]);
    assert_eq!(out.status.code(), Some(0));
    let r = CodeReport::from_json(&stdout(&out)).unwrap();
    assert_eq!((r.distance, r.witness_weight, r.claimed_distance), (Some(6), Some(6), Some(6)));

    let out = grcodes(&["distance", "class1:m=3", "--exhaustive-cap", "20", "--budget", "50000", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("distance <= 12"), "{text}");
    assert!(text.contains("witness weight 12"));
}

#[test]
fn cycles_are_spaced_by_the_stretch() {
    let out = grcodes(&["--json", "cycles", "class1:m=1,n=4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["separated"], true);
    assert!(v["min_row_gap"].as_u64().unwrap() >= 4);
}
