//! One test per acceptance criterion. Each writes a `criterion N: PASS|FAIL`
//! line straight to stdout (bypassing libtest capture) and then asserts.

use std::io::Write;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use cyclic_ramsey::{
    all_builtins, brute_force_count_cliques, count_cliques_through_zero, verify, verify_with,
    verify_with_oracle, CirculantGraph, ColoringCertificate, DistanceSet, SearchState,
    VerifyOptions,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: u32, failures: &[String], detail: &str) {
    let mut out = std::io::stdout().lock();
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    writeln!(out, "criterion {criterion}: {verdict} {detail}").unwrap();
    for f in failures {
        writeln!(out, "criterion {criterion}:   {f}").unwrap();
    }
    out.flush().unwrap();
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {failures:#?}"
    );
}

fn bin(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-ramsey"))
        .env("RAMSEY_NO_COLOR", "1")
        .args(args)
        .output()
        .expect("binary runs");
    (out, start.elapsed())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_certificate(rng: &mut ChaCha8Rng) -> ColoringCertificate {
    let n = rng.random_range(3..=16);
    let m = rng.random_range(2..=3);
    let mut colors = vec![DistanceSet::new(); m];
    for d in 1..=n / 2 {
        colors[rng.random_range(0..m)].insert(d);
    }
    let targets = (0..m).map(|_| rng.random_range(2..=6)).collect();
    ColoringCertificate::new(n, colors, targets, None).unwrap()
}

#[test]
fn criterion_1_published_bounds() {
    const EXPECTED: [(&str, &str); 8] = [
        ("r4_16", "R(4,16)>=164"),
        ("r5_11", "R(5,11)>=171"),
        ("r5_12", "R(5,12)>=191"),
        ("r5_13", "R(5,13)>=213"),
        ("r5_14", "R(5,14)>=239"),
        ("r3_3_9", "R(3,3,9)>=118"),
        ("r3_3_10", "R(3,3,10)>=141"),
        ("r3_3_11", "R(3,3,11)>=158"),
    ];
    let (out, wall) = bin(&["verify-all", "--summary"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut failures = Vec::new();
    for (name, bound) in EXPECTED {
        let prefix = format!("name={name} ");
        let Some(line) = text.lines().find(|l| l.starts_with(&prefix)) else {
            failures.push(format!("{name}: no summary line"));
            continue;
        };
        let want = format!("name={name} valid=true bound=\"{bound}\" ms=");
        if !line.starts_with(&want) {
            failures.push(format!("{name}: expected VALID with {bound}, got `{line}`"));
        }
        let ms: u64 = line.rsplit("ms=").next().unwrap().parse().unwrap();
        if ms >= 30_000 {
            failures.push(format!("{name}: {ms} ms, limit 30000"));
        }
    }
    if wall >= Duration::from_secs(60) {
        failures.push(format!("verify-all took {wall:?}, limit 60 s"));
    }
    if out.status.code() != Some(0) {
        failures.push(format!(
            "verify-all exit code {:?}, expected 0",
            out.status.code()
        ));
    }
    report(
        1,
        &failures,
        &format!(
            "(verify-all, eight exact bounds, {} ms wall)",
            wall.as_millis()
        ),
    );
}

#[test]
fn criterion_2_tamper_sensitivity() {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for cert in all_builtins() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut invalid = 0;
        for _ in 0..20 {
            let mut tampered = cert.clone();
            let d = rng.random_range(1..=cert.n / 2);
            let from = cert.color_of_distance(d).unwrap() - 1;
            let others: Vec<usize> = (0..cert.color_count()).filter(|&c| c != from).collect();
            let to = *others.choose(&mut rng).unwrap();
            tampered.colors[from].remove(d);
            tampered.colors[to].insert(d);
            let options = VerifyOptions {
                fail_fast: true,
                ..Default::default()
            };
            let r = verify_with(&tampered, &options).unwrap();
            if !r.is_valid() {
                invalid += 1;
                for c in &r.colors {
                    if let Some(w) = c.verdict.witness() {
                        if !w.verify_against(&tampered) || w.size() != c.target {
                            failures.push(format!(
                                "{}: witness {:?} does not check",
                                cert.display_name(),
                                w
                            ));
                        }
                    }
                }
            }
        }
        // "large majority": at least three quarters
        if invalid < 15 {
            failures.push(format!(
                "{}: only {invalid}/20 tampered copies INVALID",
                cert.display_name()
            ));
        }
        summary.push(format!("{}={invalid}/20", cert.display_name()));
    }
    report(
        2,
        &failures,
        &format!("(tampered copies INVALID: {})", summary.join(" ")),
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let cert = random_certificate(&mut rng);
        let fast = verify(&cert).unwrap();
        let slow = verify_with_oracle(&cert).unwrap();
        if fast.is_valid() != slow.is_valid() || fast.pattern() != slow.pattern() {
            failures.push(format!("disagreement on\n{}", cert.to_text()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, limit 60 s"));
    }
    report(
        3,
        &failures,
        &format!("(1000 random certificates, {} ms)", elapsed.as_millis()),
    );
}

#[test]
fn criterion_4_transitivity_double_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = Vec::new();
    for _ in 0..200 {
        let n = rng.random_range(2..=16);
        let s: DistanceSet = (1..=n / 2).filter(|_| rng.random_bool(0.5)).collect();
        let t = rng.random_range(1..=5);
        let g = CirculantGraph::new(n, s.clone()).unwrap();
        let lhs = n as u64 * count_cliques_through_zero(&g, t);
        let rhs = t as u64 * brute_force_count_cliques(&g, t).unwrap();
        if lhs != rhs {
            failures.push(format!("n={n} S={:?} t={t}: {lhs} != {rhs}", s.as_slice()));
        }
    }
    report(
        4,
        &failures,
        "(200 random cases, n*through_zero == t*total)",
    );
}

#[test]
fn criterion_5_classical_sanity() {
    let mut failures = Vec::new();
    let c5 = ColoringCertificate::new(5, vec![[1].into(), [2].into()], vec![3, 3], None).unwrap();
    let r = verify(&c5).unwrap();
    if r.proven_bound().as_deref() != Some("R(3,3) >= 6") {
        failures.push(format!("(a) C5: {}", r.result_line()));
    }

    let mut good = 0;
    for bits in 0..8usize {
        let assignment: Vec<usize> = (0..3).map(|i| (bits >> i & 1) + 1).collect();
        let cert = SearchState::new(6, vec![3, 3], &assignment, 0)
            .unwrap()
            .to_certificate(None);
        let fast = verify(&cert).unwrap().is_valid();
        let slow = verify_with_oracle(&cert).unwrap().is_valid();
        if fast != slow {
            failures.push(format!("(b) oracle disagrees on {assignment:?}"));
        }
        good += usize::from(fast);
    }
    if good != 0 {
        failures.push(format!("(b) {good} good colorings of K6"));
    }

    let paley = ColoringCertificate::new(
        17,
        vec![[1, 2, 4, 8].into(), [3, 5, 6, 7].into()],
        vec![4, 4],
        None,
    )
    .unwrap();
    let fast = verify(&paley).unwrap();
    let slow = verify_with_oracle(&paley).unwrap();
    if fast.proven_bound().as_deref() != Some("R(4,4) >= 18") || !slow.is_valid() {
        failures.push(format!(
            "(c) Paley 17: {} / oracle {}",
            fast.result_line(),
            slow.result_line()
        ));
    }
    report(
        5,
        &failures,
        "(C5 valid, no good K6 split, Paley 17 valid; oracle confirmed)",
    );
}

#[test]
fn criterion_6_multiplier_invariance() {
    let mut failures = Vec::new();
    let mut used = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for cert in all_builtins() {
        let units: Vec<usize> = (2..cert.n).filter(|&u| gcd(u, cert.n) == 1).collect();
        let u = *units.choose(&mut rng).unwrap();
        let original = verify(&cert).unwrap();
        let image = verify(&cert.scaled(u).unwrap()).unwrap();
        if image.pattern() != original.pattern() {
            failures.push(format!(
                "{} u={u}: pattern {:?} vs {:?}",
                cert.display_name(),
                image.pattern(),
                original.pattern()
            ));
        }
        if !image.is_valid() {
            failures.push(format!(
                "{} u={u}: image is {}",
                cert.display_name(),
                image.result_line()
            ));
        }
        used.push(format!("{}:u={u}", cert.display_name()));
    }
    report(6, &failures, &format!("({})", used.join(" ")));
}

#[test]
fn criterion_7_search() {
    let mut failures = Vec::new();
    let mut times = Vec::new();
    let cases: [&[&str]; 3] = [
        &["-n", "5", "--targets", "3,3", "--seed", "7"],
        &["-n", "13", "--targets", "3,5", "--seed", "1"],
        &[
            "-n",
            "17",
            "--targets",
            "4,4",
            "--seed",
            "1",
            "--max-iters",
            "100000",
        ],
    ];
    for case in cases {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("found.cert");
        let mut args = vec!["search"];
        args.extend_from_slice(case);
        args.extend_from_slice(&["-o", path.to_str().unwrap()]);
        let (out, elapsed) = bin(&args);
        times.push(format!("n={}:{}ms", case[1], elapsed.as_millis()));
        if out.status.code() != Some(0) {
            failures.push(format!("{case:?}: exit {:?}", out.status.code()));
            continue;
        }
        if elapsed >= Duration::from_secs(10) {
            failures.push(format!("{case:?}: took {elapsed:?}"));
        }
        let (again, _) = bin(&["verify", path.to_str().unwrap()]);
        if again.status.code() != Some(0) {
            failures.push(format!("{case:?}: returned certificate fails verify"));
        }
    }
    let (out, _) = bin(&[
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
    if out.status.code() != Some(3) {
        failures.push(format!("n=6: exit {:?}, expected 3", out.status.code()));
    }
    report(
        7,
        &failures,
        &format!("({}; n=6 exhausts)", times.join(" ")),
    );
}

#[test]
fn criterion_8_determinism() {
    let mut failures = Vec::new();
    let (a, _) = bin(&["verify", "--builtin", "r5_14"]);
    let (b, _) = bin(&["verify", "--builtin", "r5_14"]);
    if a.stdout != b.stdout || a.stdout.is_empty() {
        failures.push("verify --builtin r5_14 output differs between runs".to_string());
    }
    let args = [
        "search",
        "-n",
        "16",
        "--targets",
        "4,4",
        "--seed",
        "5",
        "--max-iters",
        "500",
        "--restarts",
        "3",
        "--workers",
        "1",
    ];
    let (a, _) = bin(&args);
    let (b, _) = bin(&args);
    if a.stderr != b.stderr || a.stdout != b.stdout {
        failures.push("search log differs between runs".to_string());
    }
    report(
        8,
        &failures,
        "(verify r5_14 and single-worker search repeat byte for byte)",
    );
}
