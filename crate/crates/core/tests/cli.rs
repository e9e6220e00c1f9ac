use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclic-ramsey"));
    cmd.env("RAMSEY_NO_COLOR", "1");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn cert_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn verify_builtin_valid() {
    let o = run(&["verify", "--builtin", "r3_3_9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with("certificate: r3_3_9\nn: 117\ntargets: 3 3 9\n"),
        "{out}"
    );
    assert!(
        out.ends_with("RESULT: VALID — proves R(3,3,9) >= 118\n"),
        "{out}"
    );
}

#[test]
fn verify_file_with_triangle() {
    let f = cert_file("n 6\ntargets 3 3\ncolor 1 1 3\ncolor 2 2\n");
    let o = run(&["verify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("color 2: VIOLATED K3 = {0,2,4}"), "{out}");
    assert!(out.contains("numbered from 0"), "{out}");
    assert!(out.ends_with("RESULT: INVALID\n"));
}

#[test]
fn brute_force_agrees_on_small_file() {
    let f = cert_file("n 17\ntargets 4 4\ncolor 1 1 2 4 8\ncolor 2 3 5 6 7\n");
    let path = f.path().to_str().unwrap();
    let a = run(&["verify", path]);
    let b = run(&["verify", "--brute-force", path]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(stdout(&b).ends_with("proves R(4,4) >= 18\n"));
}

#[test]
fn errors_exit_two_with_empty_stdout() {
    let missing = run(&["verify", "/nonexistent/file.cert"]);
    let unknown = run(&["verify", "--builtin", "nope"]);
    let guarded = run(&["verify", "--brute-force", "--builtin", "r3_3_9"]);
    let both = run(&["verify", "x.cert", "--builtin", "r4_16"]);
    let bad_flag = run(&["search", "-n", "5", "--targets", "3,x", "--seed", "1"]);
    let garbage = cert_file("n six\n");
    let parse = run(&["verify", garbage.path().to_str().unwrap()]);
    let uncovered = cert_file("n 7\ntargets 3 3\ncolor 1 1\ncolor 2 2\n");
    let structure = run(&["verify", uncovered.path().to_str().unwrap()]);
    for o in [missing, unknown, guarded, both, bad_flag, parse, structure] {
        assert_eq!(o.status.code(), Some(2), "{o:?}");
        assert!(o.stdout.is_empty(), "{o:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_output_is_deterministic() {
    let a = run(&["verify", "--builtin", "r5_11"]);
    let b = run(&["verify", "--builtin", "r5_11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn summary_line() {
    let o = run(&["verify", "--builtin", "r5_12", "--summary"]);
    let out = stdout(&o);
    assert!(
        out.starts_with("name=r5_12 valid=true bound=\"R(5,12)>=191\" ms="),
        "{out}"
    );
}

#[test]
fn search_writes_a_verifiable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.cert");
    let o = run(&[
        "search",
        "-n",
        "5",
        "--targets",
        "3,3",
        "--seed",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let log = String::from_utf8_lossy(&o.stderr);
    assert!(log.ends_with("result=found\n"), "{log}");
    assert!(stdout(&o).contains("RESULT: VALID — proves R(3,3) >= 6"));
    let again = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
}

#[test]
fn search_to_stdout_then_verify() {
    let o = run(&["search", "-n", "13", "--targets", "3,5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let cert_text: String = out
        .lines()
        .take_while(|l| !l.starts_with("certificate:"))
        .map(|l| format!("{l}\n"))
        .collect();
    let f = cert_file(&cert_text);
    assert_eq!(
        run(&["verify", f.path().to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn search_exhausts() {
    let o = run(&[
        "search",
        "-n",
        "6",
        "--targets",
        "3,3",
        "--seed",
        "7",
        "--max-iters",
        "1000",
        "--restarts",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .ends_with("result=exhausted\n"));
}

#[test]
fn clique_numbers() {
    let o = run(&[
        "clique",
        "--builtin",
        "r4_16",
        "--color",
        "1",
        "--cap",
        "10",
    ]);
    assert_eq!(stdout(&o), "color 1: omega=3\n");
    let o = run(&[
        "clique",
        "--builtin",
        "r3_3_9",
        "--color",
        "2",
        "--cap",
        "5",
    ]);
    assert_eq!(stdout(&o), "color 2: omega=2\n");
    let k7 = cert_file("n 7\ntargets 8 2\ncolor 1 1 2 3\ncolor 2\n");
    let o = run(&[
        "clique",
        k7.path().to_str().unwrap(),
        "--color",
        "1",
        "--cap",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("color 1: omega>=5"),
        "{}",
        stdout(&o)
    );
    let bad = run(&["clique", "--builtin", "r4_16", "--color", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn show_round_trips() {
    let o = run(&["show", "--builtin", "r5_13"]);
    assert_eq!(o.status.code(), Some(0));
    let f = cert_file(&stdout(&o));
    let o2 = run(&["show", f.path().to_str().unwrap()]);
    assert_eq!(o.stdout, o2.stdout);
}

#[test]
fn help_succeeds() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify-all"));
}
