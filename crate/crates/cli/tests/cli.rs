use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const MAX_MONOID: &str = "n = 2
bot = [0]
nabla = [
  [0, 0, 0],
  [0, 1, 1],
  [1, 0, 1],
  [1, 1, 1],
]
";

fn frobrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn build(dir: &TempDir, groups: &str) -> String {
    let path = dir
        .path()
        .join(format!("{}.toml", groups.replace([';', ','], "_")));
    let path = path.to_str().unwrap().to_string();
    let o = frobrel(&["build", "--groups", groups, "-o", &path]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn built_abelian_structures_verify() {
    let dir = TempDir::new().unwrap();
    for groups in ["", "1", "2;3", "4;2,2", "2,2,2", "1;1;3", "6;4,2", "12"] {
        let path = build(&dir, groups);
        let o = frobrel(&["verify", &path]);
        assert_eq!(o.status.code(), Some(0), "{groups}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("classical structure\n"));
    }
}

#[test]
fn non_abelian_blocks_fail_only_commutativity() {
    let dir = TempDir::new().unwrap();
    let path = build(&dir, "S3;2");
    let o = frobrel(&["verify", &path]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.matches("FAIL").count(), 1, "{out}");
    assert!(out.contains("commutativity        FAIL"));
    let d = frobrel(&["decompose", &path]);
    assert_eq!(d.status.code(), Some(0));
    assert!(stdout(&d).starts_with("Z2 + S3\n"));
}

#[test]
fn quantum_structure_of_z2_plus_z3() {
    let dir = TempDir::new().unwrap();
    let path = build(&dir, "2;3");
    let o = frobrel(&["quantum", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "η = {(0,0),(1,1),(2,2),(3,4),(4,3)}\nduality: pass\n"
    );
}

#[test]
fn enumerate_four_gives_six() {
    let o = frobrel(&["enumerate", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[6], "total: 6");
    assert!(lines[..6].iter().all(|l| l.starts_with('Z')));
    let special = frobrel(&["enumerate", "--n", "6", "--special"]);
    assert!(stdout(&special).ends_with("total: 14\n"));
}

#[test]
fn max_monoid_fails_frobenius_at_one_one() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "max.toml", MAX_MONOID);
    let o = frobrel(&["verify", &path]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("frobenius            FAIL"));
    assert!(out.contains("at (1,1): {01,10,11} vs {01,11}"), "{out}");
    assert!(out.contains("associativity        pass"));

    let machine = frobrel(&["--format", "machine", "verify", &path]);
    let v: serde_json::Value = serde_json::from_slice(&machine.stdout).unwrap();
    assert_eq!(v["classical"], false);
    let ws = v["report"]["frobenius"]["witnesses"].as_array().unwrap();
    assert!(ws.iter().any(|w| w["at"] == serde_json::json!([1, 1])));

    let d = frobrel(&["decompose", &path]);
    assert_eq!(d.status.code(), Some(1));
    assert!(stderr(&d).contains("frobenius"));
}

#[test]
fn parse_errors_exit_two_and_cite_the_field() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (
            "range.toml",
            "n = 2\nbot = [0]\nnabla = [[0, 0, 0], [0, 5, 1]]\n",
            "nabla[1]",
        ),
        (
            "dup.toml",
            "n = 1\nbot = [0, 0]\nnabla = [[0, 0, 0]]\n",
            "bot[1]",
        ),
        (
            "unknown.toml",
            "n = 1\nbot = [0]\nnabla = []\nunit = 0\n",
            "unit",
        ),
        ("syntax.toml", "n = 1\nbot = [0\n", "line"),
        ("big.toml", "n = 100\nbot = []\nnabla = []\n", "limit"),
    ];
    for (name, text, needle) in cases {
        let path = write(&dir, name, text);
        let o = frobrel(&["verify", &path]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
    }
    let missing = frobrel(&["verify", "/nonexistent/file.toml"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_and_bound_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["enumerate"],
        vec!["enumerate", "--n", "x"],
        vec!["build", "--groups", "2;;3"],
        vec!["build", "--groups", "0"],
        vec!["build", "--groups", "s3"],
        vec!["enumerate", "--n", "9", "--special"],
        vec!["brute-force", "--n", "5"],
        vec!["brute-force", "--n", "4", "--budget", "10"],
        vec!["--format", "xml", "enumerate", "--n", "2"],
    ] {
        let o = frobrel(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let budget = frobrel(&["brute-force", "--n", "4", "--budget", "10"]);
    assert!(stderr(&budget).contains("budget"));
    let bound = frobrel(&["enumerate", "--n", "9", "--special"]);
    assert!(stderr(&bound).contains("limit of 8"));
}

#[test]
fn build_without_output_prints_the_file() {
    let o = frobrel(&["build", "--groups", "2"]);
    assert_eq!(
        stdout(&o),
        "n = 2\nbot = [0]\nnabla = [\n  [0, 0, 0],\n  [0, 1, 1],\n  [1, 0, 1],\n  [1, 1, 0],\n]\n"
    );
}

#[test]
fn brute_force_and_cross_validation() {
    let o = frobrel(&["brute-force", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("10 labeled structures in 3 isomorphism classes\n"));
    let nc = frobrel(&["brute-force", "--n", "3", "--no-commutative"]);
    assert_eq!(stdout(&nc), stdout(&o));
    for n in ["0", "1", "2", "3"] {
        let cv = frobrel(&["cross-validate", "--n", n]);
        assert_eq!(cv.status.code(), Some(0), "{}", stdout(&cv));
        assert!(stdout(&cv).ends_with("match\n"));
    }
}

#[test]
fn analysis_commands() {
    let dir = TempDir::new().unwrap();
    let path = build(&dir, "1;2");
    let e = frobrel(&["elements", &path]);
    assert_eq!(stdout(&e), "{0}\n{1, 2}\ntotal: 2\n");
    let z3 = build(&dir, "3");
    let expected = [
        ("0", "{}\ntotal: 1\n"),
        ("1", "{(0,0),(0,1),(0,2)}\ntotal: 1\n"),
        ("2", "total: 0\n"),
    ];
    for (m, out) in expected {
        let s = frobrel(&["subobjects", &z3, "--m", m]);
        assert_eq!(s.status.code(), Some(0));
        assert_eq!(stdout(&s), out, "m={m}");
    }
}

#[test]
fn machine_output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let path = build(&dir, "2;2;3");
    let runs: Vec<Vec<&str>> = vec![
        vec!["verify", &path],
        vec!["decompose", &path],
        vec!["quantum", &path],
        vec!["elements", &path],
        vec!["subobjects", &path, "--m", "1"],
        vec!["enumerate", "--n", "6"],
        vec!["brute-force", "--n", "3"],
        vec!["cross-validate", "--n", "3"],
    ];
    for args in runs {
        let mut full = vec!["--format", "machine"];
        full.extend(&args);
        let a = frobrel(&full);
        let b = frobrel(&full);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        serde_json::from_slice::<serde_json::Value>(&a.stdout).expect("valid json");
    }
    // the flag also works after the subcommand
    let after = frobrel(&["decompose", &path, "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_slice(&after.stdout).unwrap();
    assert_eq!(v["spec"], "Z2 + Z2 + Z3");
}

#[test]
fn written_files_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = build(&dir, "4;2,2");
    let text = std::fs::read_to_string(Path::new(&a)).unwrap();
    let b = frobrel(&["build", "--groups", " 2 ,2 ; 4 "]);
    assert_eq!(stdout(&b), text);
}
