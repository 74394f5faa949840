use std::path::PathBuf;
use std::process::{Command, Output};

fn structures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("structures")
}

fn jacobi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines_with<'a>(out: &'a str, status: &str) -> Vec<&'a str> {
    out.lines().filter(|l| l.split('\t').nth(2) == Some(status)).collect()
}

/// Writes `text` to a fresh file under the target directory.
fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn heisenberg_example_reports_hamiltonian() {
    let o = jacobi(&["--format", "machine", "catalog", "--paper-example", "3.1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let pass: Vec<&str> = lines_with(&out, "PASS")
        .iter()
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(
        pass,
        ["jacobi", "poissonize-match", "pfaffian", "darboux", "structure-constants", "involution"]
    );
    assert!(out.contains("hamiltonian\tH = S3\tINFO\t-y*exp(s)\n"), "{out}");
    assert!(lines_with(&out, "FAIL").is_empty());
}

#[test]
fn corrected_examples_echo_their_note() {
    for (label, note) in [("3.2", "{p1,p2} = -1"), ("3.3", "{q1,q2} = exp(-s)")] {
        let o = jacobi(&["--format", "machine", "catalog", "--paper-example", label]);
        assert!(o.status.success());
        let out = stdout(&o);
        let erratum = out.lines().find(|l| l.starts_with("erratum\t")).expect("erratum line");
        assert!(erratum.contains(note), "{erratum}");
    }
}

#[test]
fn four_heisenberg_structures_are_compatible() {
    let files: Vec<String> = (1..=4)
        .map(|k| structures().join(format!("ii_{k}.jac")).display().to_string())
        .collect();
    let mut args = vec!["--format", "machine", "compat"];
    args.extend(files.iter().map(String::as_str));
    let o = jacobi(&args);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(lines_with(&out, "PASS").len(), 10);
    assert_eq!(out.lines().count(), 10);
}

#[test]
fn family_examples_count_pairs() {
    for (label, pairs) in [("4.1", 10), ("4.5", 21)] {
        let o = jacobi(&["--format", "machine", "catalog", "--paper-example", label]);
        assert!(o.status.success());
        assert_eq!(lines_with(&stdout(&o), "PASS").len(), pairs, "{label}");
    }
}

#[test]
fn check_and_system_on_structure_files() {
    for name in ["ii_system.jac", "custom_ii.jac"] {
        let path = structures().join(name);
        let o = jacobi(&["check", path.to_str().unwrap()]);
        assert!(o.status.success(), "{name}: {}", stdout(&o));
        assert!(stdout(&o).ends_with(" passed, 0 failed\n"));
    }
    let path = structures().join("ii_system.jac");
    let o = jacobi(&["--format", "machine", "system", path.to_str().unwrap(), "--hamiltonian", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("invariant\tS1\tINFO\t-exp(s)\n"), "{out}");
    assert!(out.contains("motion\tdx/dt\tINFO\t-y\n"), "{out}");
}

#[test]
fn poissonize_echoes_bivector() {
    let path = structures().join("ii_1.jac");
    let o = jacobi(&["--format", "machine", "poissonize", path.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("pfaffian\tii_1\tINFO\texp(-2*s)\n"), "{out}");
    assert!(out.contains("(exp(-s)) dx^ds"), "{out}");
}

#[test]
fn classification_is_deterministic() {
    let a = jacobi(&["--format", "machine", "classify-ii-r"]);
    let b = jacobi(&["--format", "machine", "classify-ii-r"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert_eq!(out.lines().filter(|l| l.starts_with("orbit\t")).count(), 11);
    assert!(out.contains("compat-matrix\t78 pairs\tPASS"));
    let c = jacobi(&["--format", "machine", "--seed", "7", "classify-ii-r"]);
    assert!(c.status.success());
}

#[test]
fn failures_exit_with_one() {
    let path = scratch("not_jacobi.jac", "[algebra]\nname = II\n\n[jacobi]\nlevel = group\nlambda = x,y: z\nE = z: 1\n");
    let o = jacobi(&["--format", "machine", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("jacobi\tnot_jacobi\tFAIL\t")), "{out}");

    // The printed canonical coordinates of the III example.
    let printed = "[algebra]\nname = III\n\n[jacobi]\nlevel = group\nlambda = x,z: 1; y,z: y + z\nE = y: 1; z: -1\n\n\
                   [darboux]\nq1 = -exp(s)*y\nq2 = x\np1 = s\np2 = z*exp(s)\n";
    let path = scratch("iii_printed.jac", printed);
    let o = jacobi(&["--format", "machine", "darboux", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "darboux\tiii_printed\tFAIL\t{p1,p2} = -1\n");
}

#[test]
fn errors_exit_with_two() {
    let path = scratch("broken.jac", "[algebra]\nname = II\n\n[jacobi]\nlevel = group\nlambda = x,y: 1 +\nE = x: 1\n");
    let o = jacobi(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("broken.jac:6:"), "{err}");

    let o = jacobi(&["catalog", "--paper-example", "5.1"]);
    assert_eq!(o.status.code(), Some(2));

    let path = structures().join("ii_system.jac");
    let o = jacobi(&["system", path.to_str().unwrap(), "--hamiltonian", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = jacobi(&["darboux", structures().join("ii_1.jac").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
