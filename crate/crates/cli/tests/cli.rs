//! Runs the `sghom` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sghom::sgraph::read_sg;
use tempfile::TempDir;

fn sghom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sghom")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const ALT_C6: &str = "sg 6\n0 1 -\n1 2 +\n2 3 -\n3 4 +\n4 5 -\n5 0 +\n";
const UNBALANCED_C4: &str = "sg 4\n0 1 -\n1 2 +\n2 3 +\n3 0 +\n";

#[test]
fn construct_writes_parseable_graphs() {
    let dir = TempDir::new().unwrap();
    let sp9 = dir.path().join("sp9.sg");
    let dot = dir.path().join("sp9.dot");
    let out = sghom(&["construct", "sp", "--q", "9", "-o", s(&sp9), "--dot", s(&dot)]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("9 vertices, 36 edges"));
    let g = read_sg(&std::fs::read_to_string(&sp9).unwrap()).unwrap();
    assert_eq!(g.order(), 9);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("2x+1"));

    let out = sghom(&["construct", "gadget", "--name", "SP9_STAR"]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_sg(&String::from_utf8_lossy(&out.stdout)).unwrap().order(), 11);

    let out = sghom(&["construct", "clique2ec", "--k", "4"]);
    assert_eq!(read_sg(&String::from_utf8_lossy(&out.stdout)).unwrap().order(), 12);
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(code(&sghom(&["construct", "sp", "--q", "7"])), 2);
    assert_eq!(code(&sghom(&["construct", "gadget", "--name", "NOPE"])), 2);
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let sp9 = dir.path().join("sp9.sg");
    sghom(&["construct", "sp", "--q", "9", "-o", s(&sp9)]);
    let out = sghom(&["check", "property", "-i", s(&sp9), "--k", "2", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["holds"], true);
    let out = sghom(&["check", "property", "-i", s(&sp9), "--k", "2", "--n", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_lines(&out)[0]["witness"]["type"], "clique");
    let out = sghom(&["check", "property", "-i", s(&sp9), "--k", "1"]);
    assert_eq!(json_lines(&out)[0]["max_n"], 4);
    assert_eq!(code(&sghom(&["check", "p22-star", "-i", s(&sp9)])), 0);
    assert_eq!(code(&sghom(&["check", "transitive", "-i", s(&sp9), "--n", "2"])), 0);
    let out = sghom(&["check", "automorphisms", "-i", s(&sp9)]);
    assert_eq!(json_lines(&out)[0]["order"], 72);
}

#[test]
fn hom_and_chromatic() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "altc6.sg", ALT_C6);
    let cand = dir.path().join("c5.sg");
    sghom(&["construct", "gadget", "--name", "CANDIDATE5", "-o", s(&cand)]);
    let out = sghom(&["hom", "-g", s(&c6), "-t", s(&cand), "--mode", "2ec"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_lines(&out)[0]["found"], false);

    let c4 = write(&dir, "unbalc4.sg", UNBALANCED_C4);
    let out = sghom(&["chromatic", "-i", s(&c4), "--mode", "signed", "--max", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["value"], 4);
    let out = sghom(&["chromatic", "-i", s(&c6), "--max", "3"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn switch_and_color() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.sg", UNBALANCED_C4);
    let switched = dir.path().join("switched.sg");
    assert_eq!(code(&sghom(&["switch", "-i", s(&c4), "--set", "0,2", "-o", s(&switched)])), 0);
    let out = sghom(&["switch", "-i", s(&c4), "--with", s(&switched)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["equivalent"], true);

    let c6 = write(&dir, "altc6.sg", ALT_C6);
    let out = sghom(&["color", "-i", s(&c6), "--algorithm", "maxdeg3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["homomorphism"]["map"].as_array().unwrap().len(), 6);
    let out = sghom(&["color", "-i", s(&c6), "--algorithm", "maxdeg2"]);
    assert_eq!(json_lines(&out)[0]["target"], "Sp5");
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.sg", "sg 2\n0 5 +\n");
    assert_eq!(code(&sghom(&["check", "clique", "-i", s(&bad)])), 2);
    assert_eq!(code(&sghom(&["hom", "-g", "missing.sg", "-t", "missing.sg"])), 2);
    assert_eq!(code(&sghom(&["frobnicate"])), 2);
}

#[test]
fn verify_paper_passes_and_reports() {
    let dir = TempDir::new().unwrap();
    let out = sghom(&["verify-paper", "--only", "15", "--out", s(dir.path())]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["status"], "PASS");
    let summary = std::fs::read_to_string(dir.path().join("summary.txt")).unwrap();
    assert!(summary.contains("12 ≤ χ₂(D₄) ≤ 30"));
    assert!(dir.path().join("report.jsonl").exists());
}

#[test]
fn verify_paper_known_failure_exits_one() {
    let out = sghom(&["verify-paper", "--only", "13"]);
    assert_eq!(code(&out), 1);
    let failed: Vec<Value> = json_lines(&out).into_iter().filter(|l| l["status"] == "FAIL").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "13.k4s-minus.sp9-dagger-table");
    assert_eq!(failed[0]["known_failure"], true);
}

#[test]
fn heavy_claims_are_skipped_by_default() {
    let out = sghom(&["verify-paper", "--only", "06"]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.iter().filter(|l| l["status"] == "SKIPPED").count(), 1);
}

#[test]
fn corrupted_catalog_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let out = sghom(&["verify-paper", "--only", "03", "--corrupt", "TARGET6", "--out", s(dir.path())]);
    assert_eq!(code(&out), 1);
    let line = &json_lines(&out)[0];
    assert_eq!(line["status"], "FAIL");
    let witness = std::fs::read_to_string(line["witness_path"].as_str().unwrap()).unwrap();
    let w: Value = serde_json::from_str(&witness).unwrap();
    assert!(read_sg(w["graph"].as_str().unwrap()).is_ok());
}

#[test]
fn reports_are_reproducible() {
    let strip = |out: &Output| -> Vec<Value> {
        json_lines(out)
            .into_iter()
            .map(|mut l| {
                l.as_object_mut().unwrap().remove("elapsed_ms");
                l
            })
            .collect()
    };
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_sghom"))
            .args(["verify-paper", "--only", "14", "--seed", "7"])
            .env("SGHOM_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("3"));
    assert_eq!(code(&a), 0);
    assert_eq!(strip(&a), strip(&b));
}
