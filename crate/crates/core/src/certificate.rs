//! Cyclic coloring certificates: data model, structural checks and the text
//! file format.
//!
//! A certificate on `n` vertices partitions the circular distances
//! `1..=n/2` into `m` color classes and pairs each class with a clique size
//! it must avoid. The format is line oriented:
//!
//! ```text
//! # comment
//! name r3_3_9
//! n 117
//! targets 3 3 9
//! color 1 1 3 7 11 16 26 36 38 44 46 48 56
//! color 2 19 23 24 25 28 29 30 31 32 33 34 37 45
//! color 3 2 4 5 ...
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// Sorted, duplicate-free set of circular distances forming one color class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DistanceSet(Vec<usize>);

impl DistanceSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, distance: usize) -> bool {
        self.0.binary_search(&distance).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, distance: usize) -> bool {
        match self.0.binary_search(&distance) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, distance);
                true
            }
        }
    }

    pub fn remove(&mut self, distance: usize) -> bool {
        match self.0.binary_search(&distance) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }
}

impl FromIterator<usize> for DistanceSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        DistanceSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for DistanceSet {
    fn from(values: [usize; N]) -> Self {
        values.into_iter().collect()
    }
}

impl From<DistanceSet> for Vec<usize> {
    fn from(set: DistanceSet) -> Self {
        set.0
    }
}

/// One way a certificate can fail to be a proper partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    TooFewVertices {
        n: usize,
    },
    TooFewColors {
        colors: usize,
    },
    TargetCountMismatch {
        colors: usize,
        targets: usize,
    },
    TargetTooSmall {
        color: usize,
        target: usize,
    },
    DistanceOutOfRange {
        color: usize,
        distance: usize,
        max: usize,
    },
    DuplicateDistance {
        color: usize,
        distance: usize,
    },
    Overlap {
        distance: usize,
        first: usize,
        second: usize,
    },
    Uncovered {
        distance: usize,
    },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StructureViolation::*;
        match *self {
            TooFewVertices { n } => write!(f, "n = {n} is below the minimum of 3"),
            TooFewColors { colors } => write!(f, "{colors} color class(es), need at least 2"),
            TargetCountMismatch { colors, targets } => {
                write!(f, "{colors} color classes but {targets} targets")
            }
            TargetTooSmall { color, target } => {
                write!(f, "color {color} has target {target}, need at least 2")
            }
            DistanceOutOfRange {
                color,
                distance,
                max,
            } => write!(f, "color {color}: distance {distance} outside 1..={max}"),
            DuplicateDistance { color, distance } => {
                write!(f, "color {color}: distance {distance} listed twice")
            }
            Overlap {
                distance,
                first,
                second,
            } => write!(
                f,
                "distance {distance} is in both color {first} and color {second}"
            ),
            Uncovered { distance } => write!(f, "distance {distance} is not colored"),
        }
    }
}

/// A cyclic edge coloring of `K_n` together with the clique size each color
/// must avoid. Colors and targets are paired by position; color indices in
/// the public API are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub name: Option<String>,
    pub n: usize,
    pub colors: Vec<DistanceSet>,
    pub targets: Vec<usize>,
}

impl ColoringCertificate {
    /// Builds a certificate, rejecting anything that is not a proper partition.
    pub fn new(
        n: usize,
        colors: Vec<DistanceSet>,
        targets: Vec<usize>,
        name: Option<String>,
    ) -> Result<Self> {
        let cert = ColoringCertificate {
            name,
            n,
            colors,
            targets,
        };
        let violations = cert.validate_structure();
        if violations.is_empty() {
            Ok(cert)
        } else {
            Err(Error::Structure(violations))
        }
    }

    /// Two-color certificate from the first class; the second class is the
    /// complement within `1..=n/2`.
    pub fn from_first_color(
        n: usize,
        first: DistanceSet,
        targets: [usize; 2],
        name: Option<String>,
    ) -> Result<Self> {
        let second = (1..=n / 2).filter(|&d| !first.contains(d)).collect();
        Self::new(n, vec![first, second], targets.to_vec(), name)
    }

    /// Largest circular distance, `floor(n/2)`.
    pub fn max_distance(&self) -> usize {
        self.n / 2
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    /// Distance set of a 1-based color index.
    pub fn color(&self, color: usize) -> &DistanceSet {
        &self.colors[color - 1]
    }

    pub fn target(&self, color: usize) -> usize {
        self.targets[color - 1]
    }

    /// 1-based color of a circular distance, if it is colored at all.
    pub fn color_of_distance(&self, distance: usize) -> Option<usize> {
        self.colors
            .iter()
            .position(|set| set.contains(distance))
            .map(|c| c + 1)
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("-")
    }

    /// Every reason this certificate is not a partition of `1..=n/2` with
    /// matching targets. Empty means structurally valid.
    pub fn validate_structure(&self) -> Vec<StructureViolation> {
        use StructureViolation::*;
        let mut out = Vec::new();
        let max = self.max_distance();

        if self.n < 3 {
            out.push(TooFewVertices { n: self.n });
        }
        if self.colors.len() < 2 {
            out.push(TooFewColors {
                colors: self.colors.len(),
            });
        }
        if self.colors.len() != self.targets.len() {
            out.push(TargetCountMismatch {
                colors: self.colors.len(),
                targets: self.targets.len(),
            });
        }
        for (i, &target) in self.targets.iter().enumerate() {
            if target < 2 {
                out.push(TargetTooSmall {
                    color: i + 1,
                    target,
                });
            }
        }

        // owner[d] = first color claiming distance d
        let mut owner = vec![0usize; max + 1];
        for (i, set) in self.colors.iter().enumerate() {
            let color = i + 1;
            for d in set.iter() {
                if d == 0 || d > max {
                    out.push(DistanceOutOfRange {
                        color,
                        distance: d,
                        max,
                    });
                } else if owner[d] != 0 {
                    out.push(Overlap {
                        distance: d,
                        first: owner[d],
                        second: color,
                    });
                } else {
                    owner[d] = color;
                }
            }
        }
        for (d, &o) in owner.iter().enumerate().skip(1) {
            if o == 0 {
                out.push(Uncovered { distance: d });
            }
        }
        out
    }

    /// Image under the circulant isomorphism `x -> u*x`. Each distance `d`
    /// maps to the reduced circular distance of `u*d mod n`.
    pub fn scaled(&self, u: usize) -> Result<Self> {
        if gcd(u % self.n, self.n) != 1 {
            return Err(Error::NotAUnit { u, n: self.n });
        }
        let n = self.n;
        let colors = self
            .colors
            .iter()
            .map(|set| {
                set.iter()
                    .map(|d| {
                        let r = (u % n) * d % n;
                        r.min(n - r)
                    })
                    .collect()
            })
            .collect();
        Ok(ColoringCertificate {
            name: self.name.clone(),
            n,
            colors,
            targets: self.targets.clone(),
        })
    }

    /// Canonical text form; see the module docs for the layout.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str("name ");
            s.push_str(name);
            s.push('\n');
        }
        s.push_str(&format!("n {}\n", self.n));
        s.push_str("targets");
        for t in &self.targets {
            s.push_str(&format!(" {t}"));
        }
        s.push('\n');
        for (i, set) in self.colors.iter().enumerate() {
            s.push_str(&format!("color {}", i + 1));
            for d in set.iter() {
                s.push_str(&format!(" {d}"));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for ColoringCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for ColoringCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_certificate(s)
    }
}

pub fn serialize_certificate(cert: &ColoringCertificate) -> String {
    cert.to_text()
}

/// Structural violations of `cert`; empty iff it is a valid partition.
pub fn validate_structure(cert: &ColoringCertificate) -> Vec<StructureViolation> {
    cert.validate_structure()
}

fn parse_number(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            format!("{what}: `{token}` is not a non-negative integer"),
        )
    })
}

/// Parses the certificate text format and checks the result structurally.
pub fn parse_certificate(text: &str) -> Result<ColoringCertificate> {
    let mut name: Option<String> = None;
    let mut n: Option<usize> = None;
    let mut targets: Option<Vec<usize>> = None;
    let mut colors: Vec<DistanceSet> = Vec::new();
    let mut duplicates = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(Error::parse(line, "duplicate `name` line"));
                }
                let label = content["name".len()..].trim();
                if label.is_empty() {
                    return Err(Error::parse(line, "`name` needs a label"));
                }
                name = Some(label.to_string());
            }
            "n" => {
                if n.is_some() {
                    return Err(Error::parse(line, "duplicate `n` line"));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| Error::parse(line, "`n` needs a value"))?;
                if tokens.next().is_some() {
                    return Err(Error::parse(line, "`n` takes exactly one value"));
                }
                n = Some(parse_number(value, line, "n")?);
            }
            "targets" => {
                if targets.is_some() {
                    return Err(Error::parse(line, "duplicate `targets` line"));
                }
                let values = tokens
                    .map(|t| parse_number(t, line, "target"))
                    .collect::<Result<Vec<_>>>()?;
                if values.is_empty() {
                    return Err(Error::parse(line, "`targets` needs at least one value"));
                }
                targets = Some(values);
            }
            "color" => {
                let index = tokens
                    .next()
                    .ok_or_else(|| Error::parse(line, "`color` needs an index"))?;
                let index = parse_number(index, line, "color index")?;
                if index >= 1 && index <= colors.len() {
                    return Err(Error::parse(line, format!("duplicate color index {index}")));
                }
                if index != colors.len() + 1 {
                    return Err(Error::parse(
                        line,
                        format!("expected color {}, found color {index}", colors.len() + 1),
                    ));
                }
                let mut set = DistanceSet::new();
                for token in tokens {
                    let d = parse_number(token, line, "distance")?;
                    if !set.insert(d) {
                        duplicates.push(StructureViolation::DuplicateDistance {
                            color: index,
                            distance: d,
                        });
                    }
                }
                colors.push(set);
            }
            other => {
                return Err(Error::parse(line, format!("unknown keyword `{other}`")));
            }
        }
    }

    let n = n.ok_or_else(|| Error::parse(last_line, "missing `n` line"))?;
    let targets = targets.ok_or_else(|| Error::parse(last_line, "missing `targets` line"))?;
    let cert = ColoringCertificate {
        name,
        n,
        colors,
        targets,
    };
    let mut violations = duplicates;
    violations.extend(cert.validate_structure());
    if violations.is_empty() {
        Ok(cert)
    } else {
        Err(Error::Structure(violations))
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
