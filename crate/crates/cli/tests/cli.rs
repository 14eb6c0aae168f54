//! End-to-end tests of the binary: exit codes, file formats, round trips.

use std::process::{Command, Output};

use skewhad::catalog;
use skewhad_cli::familyfile::{self, FamilyRecord};
use skewhad_cli::matrixfile;

fn skewhad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewhad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_catalog_passes() {
    let out = skewhad(&["verify", "--catalog", "97-U"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("4-(97;48,39,48,51;89)"));
    assert!(text.contains("verdict: PASS"));

    let out = skewhad(&["verify", "--catalog", "47-Q"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("9^2+9^2+5^2+1^2"));
}

#[test]
fn verify_perturbed_family_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.sds");
    // 47-X triple with one element of X_1 moved to an absent residue.
    let entry = catalog::entry("47-X").unwrap();
    let mut record = FamilyRecord {
        name: Some("broken".into()),
        family: entry.triple().unwrap(),
        skew_block: None,
    };
    let text = familyfile::render(&record);
    // X_1 contains 2 and not 1; swap them textually.
    let broken = text.replacen("block 2 3 5", "block 1 3 5", 1);
    assert_ne!(text, broken);
    std::fs::write(&path, broken).unwrap();
    let out = skewhad(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("verdict: FAIL"));

    // The unperturbed file passes.
    record.name = Some("ok".into());
    std::fs::write(&path, familyfile::render(&record)).unwrap();
    let out = skewhad(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.sds");
    std::fs::write(&path, "not a family\n").unwrap();
    assert_eq!(exit_code(&skewhad(&["verify", path.to_str().unwrap()])), 2);
    assert_eq!(exit_code(&skewhad(&["verify", "--catalog", "nope"])), 2);
    assert_eq!(exit_code(&skewhad(&["verify"])), 2);
    // Bad flags are clap's input error, also exit 2.
    assert_eq!(exit_code(&skewhad(&["verify", "--no-such-flag"])), 2);
}

#[test]
fn build_check_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m188.mat");
    let out = skewhad(&["build", "--catalog", "47-X", "-o", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("order 188"));
    assert!(text.contains("skew-Hadamard: yes"));

    let out = skewhad(&["check", path.to_str().unwrap(), "--skew"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("Hadamard: yes"));

    // Flip one sign: orthogonality breaks, exit 1.
    let contents = std::fs::read_to_string(&path).unwrap();
    let matrix = matrixfile::parse(&contents).unwrap();
    let mut flipped = contents.clone();
    let pos = flipped.rfind('+').unwrap();
    flipped.replace_range(pos..pos + 1, "-");
    std::fs::write(&path, &flipped).unwrap();
    let out = skewhad(&["check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("Hadamard: no"));

    // In-memory and file verdicts agree.
    assert!(matrix.is_hadamard());
    assert!(!matrixfile::parse(&flipped).unwrap().is_hadamard());
}

#[test]
fn check_rejects_malformed_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, contents) in [
        ("bad_char.mat", "2\n++\n+0\n"),
        ("ragged.mat", "2\n++\n+\n"),
        ("empty.mat", ""),
    ] {
        let path = dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        assert_eq!(exit_code(&skewhad(&["check", path.to_str().unwrap()])), 2, "{name}");
    }
}

#[test]
fn check_unit_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unit.mat");
    std::fs::write(&path, "1\n+\n").unwrap();
    let out = skewhad(&["check", path.to_str().unwrap(), "--skew"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("Hadamard: yes"));
    assert!(text.contains("skew-Hadamard: yes"));
}

#[test]
fn build_paley_first_from_triple_file() {
    let dir = tempfile::tempdir().unwrap();
    let family_path = dir.path().join("triple.sds");
    let record = FamilyRecord {
        name: Some("47-X-triple".into()),
        family: catalog::entry("47-X").unwrap().triple().unwrap(),
        skew_block: None,
    };
    std::fs::write(&family_path, familyfile::render(&record)).unwrap();

    let matrix_path = dir.path().join("m.mat");
    let out = skewhad(&[
        "build",
        family_path.to_str().unwrap(),
        "--paley-first",
        "-o",
        matrix_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("order 188"));

    // Without the flag a 3-block family is unusable.
    let out = skewhad(&["build", family_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn catalog_build_matches_triple_paley_build() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.mat");
    let b = dir.path().join("b.mat");
    let triple = dir.path().join("triple.sds");
    let record = FamilyRecord {
        name: None,
        family: catalog::entry("47-Y").unwrap().triple().unwrap(),
        skew_block: None,
    };
    std::fs::write(&triple, familyfile::render(&record)).unwrap();
    skewhad(&["build", "--catalog", "47-Y", "-o", a.to_str().unwrap()]);
    skewhad(&["build", triple.to_str().unwrap(), "--paley-first", "-o", b.to_str().unwrap()]);
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn fingerprint_command_prints_paper_values() {
    let out = skewhad(&["fingerprint", "--catalog", "47-X", "--block", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("18:12 19:26 20:8"));
    let out = skewhad(&["fingerprint", "--catalog", "47-X", "--block", "9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn equiv_verdicts_exit_zero() {
    let out = skewhad(&["equiv", "--catalog", "47-P", "--catalog2", "47-Q"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("inequivalent"));

    let out = skewhad(&["equiv", "--catalog", "47-P", "--catalog2", "47-P"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("equivalent (m=1"));

    let out = skewhad(&["equiv", "--catalog", "47-P", "--catalog2", "97-U"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("moduli differ"));
}

#[test]
fn search_writes_a_verifiable_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("found.sds");
    let out = skewhad(&[
        "search", "--v", "7", "--sizes", "3", "--lambda", "1", "--seed", "1", "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("seed=1"));

    let out = skewhad(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("1-(7;3;1)"));
}

#[test]
fn search_exhaustion_exits_3() {
    let out = skewhad(&[
        "search", "--v", "47", "--sizes", "30,22,22", "--lambda", "39", "--seed", "2",
        "--restarts", "1", "--max-steps", "3",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stdout_of(&out).contains("exhausted"));
}

#[test]
fn search_rejects_infeasible_parameters() {
    let out = skewhad(&["search", "--v", "7", "--sizes", "3", "--lambda", "2"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("counting identity"), "stderr: {err}");
}

#[test]
fn search_with_cosets_and_skew_flags() {
    // Degenerate h=1 system: coset-level equals element-level search.
    let out = skewhad(&[
        "search", "--v", "7", "--sizes", "3", "--lambda", "1", "--cosets", "7,1", "--seed", "5",
        "--skew-block", "0",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cosets=(7,1)"));
    assert!(text.contains("skew_block 0"));
}

#[test]
fn catalog_lists_all_entries() {
    let out = skewhad(&["catalog"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    for name in catalog::names() {
        assert!(text.contains(name));
    }
}

#[test]
fn catalog_round_trip_through_family_files() {
    let dir = tempfile::tempdir().unwrap();
    for entry in catalog::entries() {
        let record = FamilyRecord {
            name: Some(entry.name.to_string()),
            family: entry.family.clone(),
            skew_block: Some(entry.skew_block),
        };
        let path = dir.path().join(format!("{}.sds", entry.name));
        std::fs::write(&path, familyfile::render(&record)).unwrap();
        let reread = familyfile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(reread, record, "{}", entry.name);
        let out = skewhad(&["verify", path.to_str().unwrap()]);
        assert_eq!(exit_code(&out), 0, "{}", entry.name);
    }
}
