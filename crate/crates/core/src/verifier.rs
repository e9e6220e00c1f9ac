//! Whole-certificate verification and the report it produces.
//!
//! A certificate on `n` vertices is good when color `c` has no `K_{t_c}`;
//! a good certificate shows `R(t_1, ..., t_m) >= n + 1`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::certificate::ColoringCertificate;
use crate::circulant::CirculantGraph;
use crate::clique::{has_clique_with, CliqueOptions, CliqueWitness};
use crate::error::{Error, Result};
use crate::oracle::{brute_force_has_clique, ORACLE_MAX_N};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorVerdict {
    Clean,
    Violated(CliqueWitness),
    /// Not examined because an earlier color already failed under
    /// fail-fast.
    Skipped,
}

impl ColorVerdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, ColorVerdict::Clean)
    }

    pub fn witness(&self) -> Option<&CliqueWitness> {
        match self {
            ColorVerdict::Violated(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ColorReport {
    pub color: usize,
    pub target: usize,
    pub verdict: ColorVerdict,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: Option<String>,
    pub n: usize,
    pub targets: Vec<usize>,
    /// In certificate order, whatever order they were checked in.
    pub colors: Vec<ColorReport>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.colors.iter().all(|c| c.verdict.is_clean())
    }

    /// `R(t1,...,tm)` with the targets in certificate order.
    pub fn ramsey_expression(&self) -> String {
        let args: Vec<String> = self.targets.iter().map(ToString::to_string).collect();
        format!("R({})", args.join(","))
    }

    /// `R(t1,...,tm) >= n+1`, present only for a valid certificate.
    pub fn proven_bound(&self) -> Option<String> {
        self.is_valid()
            .then(|| format!("{} >= {}", self.ramsey_expression(), self.n + 1))
    }

    pub fn verdicts(&self) -> Vec<&ColorVerdict> {
        self.colors.iter().map(|c| &c.verdict).collect()
    }

    /// Per-color clean/violated pattern, ignoring which witness was found.
    pub fn pattern(&self) -> Vec<bool> {
        self.colors.iter().map(|c| c.verdict.is_clean()).collect()
    }

    pub fn has_witness(&self) -> bool {
        self.colors.iter().any(|c| c.verdict.witness().is_some())
    }

    pub fn elapsed(&self) -> Duration {
        self.colors.iter().map(|c| c.elapsed).sum()
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("-")
    }

    /// Human-readable report. Contains no timings, so identical inputs give
    /// identical bytes.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let targets: Vec<String> = self.targets.iter().map(ToString::to_string).collect();
        writeln!(s, "certificate: {}", self.display_name()).unwrap();
        writeln!(s, "n: {}", self.n).unwrap();
        writeln!(s, "targets: {}", targets.join(" ")).unwrap();
        for c in &self.colors {
            match &c.verdict {
                ColorVerdict::Clean => writeln!(s, "color {}: CLEAN (no K{})", c.color, c.target),
                ColorVerdict::Violated(w) => {
                    let vs: Vec<String> = w.vertices.iter().map(ToString::to_string).collect();
                    writeln!(
                        s,
                        "color {}: VIOLATED K{} = {{{}}}",
                        c.color,
                        c.target,
                        vs.join(",")
                    )
                }
                ColorVerdict::Skipped => writeln!(s, "color {}: SKIPPED (fail-fast)", c.color),
            }
            .unwrap();
        }
        s.push_str(&self.result_line());
        s.push('\n');
        s
    }

    pub fn result_line(&self) -> String {
        match self.proven_bound() {
            Some(bound) => format!("RESULT: VALID — proves {bound}"),
            None => "RESULT: INVALID".to_string(),
        }
    }

    /// Single `key=value` line: `name`, `valid`, `bound` (quoted, or
    /// `none`) and `ms`.
    pub fn summary_line(&self) -> String {
        let bound = match self.is_valid() {
            true => format!("\"{}>={}\"", self.ramsey_expression(), self.n + 1),
            false => "none".to_string(),
        };
        format!(
            "name={} valid={} bound={} ms={}",
            self.display_name(),
            self.is_valid(),
            bound,
            self.elapsed().as_millis()
        )
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Stop at the first violated color; later colors are reported as
    /// skipped.
    pub fail_fast: bool,
    pub clique: CliqueOptions,
}

pub fn verify(cert: &ColoringCertificate) -> Result<VerificationReport> {
    verify_with(cert, &VerifyOptions::default())
}

pub fn verify_with(
    cert: &ColoringCertificate,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    run(cert, options.fail_fast, |g, t| {
        Ok(has_clique_with(g, t, options.clique))
    })
}

/// Same report semantics as [`verify`], but every clique decision comes from
/// the exhaustive oracle. Only for `n <= 32`.
pub fn verify_with_oracle(cert: &ColoringCertificate) -> Result<VerificationReport> {
    if cert.n > ORACLE_MAX_N {
        return Err(Error::Guard {
            n: cert.n,
            limit: ORACLE_MAX_N,
        });
    }
    run(cert, false, brute_force_has_clique)
}

pub fn verify_with_oracle_opts(
    cert: &ColoringCertificate,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    if cert.n > ORACLE_MAX_N {
        return Err(Error::Guard {
            n: cert.n,
            limit: ORACLE_MAX_N,
        });
    }
    run(cert, options.fail_fast, brute_force_has_clique)
}

fn run(
    cert: &ColoringCertificate,
    fail_fast: bool,
    decide: impl Fn(&CirculantGraph, usize) -> Result<Option<CliqueWitness>>,
) -> Result<VerificationReport> {
    let violations = cert.validate_structure();
    if !violations.is_empty() {
        return Err(Error::Structure(violations));
    }

    let m = cert.color_count();
    let mut results: Vec<Option<ColorReport>> = vec![None; m];

    // smallest targets first: cheapest checks, earliest failures
    let mut order: Vec<usize> = (1..=m).collect();
    order.sort_by_key(|&c| (cert.target(c), c));

    let mut failed = false;
    for c in order {
        let target = cert.target(c);
        if failed && fail_fast {
            results[c - 1] = Some(ColorReport {
                color: c,
                target,
                verdict: ColorVerdict::Skipped,
                elapsed: Duration::ZERO,
            });
            continue;
        }
        let start = Instant::now();
        let witness = if target == 2 {
            // K_2 is a single edge: clean iff the class is empty
            cert.color(c).iter().next().map(|d| CliqueWitness {
                color: c,
                vertices: vec![0, d],
            })
        } else {
            decide(&CirculantGraph::for_color(cert, c)?, target)?
        };
        let verdict = match witness {
            Some(w) => {
                assert!(
                    w.size() == target && w.verify_against(cert),
                    "clique search produced a bad witness {w:?}"
                );
                failed = true;
                ColorVerdict::Violated(w)
            }
            None => ColorVerdict::Clean,
        };
        results[c - 1] = Some(ColorReport {
            color: c,
            target,
            verdict,
            elapsed: start.elapsed(),
        });
    }

    Ok(VerificationReport {
        name: cert.name.clone(),
        n: cert.n,
        targets: cert.targets.clone(),
        colors: results
            .into_iter()
            .map(|r| r.expect("every color visited"))
            .collect(),
    })
}
