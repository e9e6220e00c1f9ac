//! The eight published cyclic colorings, compiled in.
//!
//! Two-color entries list only the first class; the second class is the
//! complement within `1..=n/2`.

use crate::certificate::{ColoringCertificate, DistanceSet};
use crate::error::{Error, Result};

struct Entry {
    name: &'static str,
    n: usize,
    targets: &'static [usize],
    /// Classes as published; a missing last class is the complement.
    classes: &'static [&'static [usize]],
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "r4_16",
        n: 163,
        targets: &[4, 16],
        classes: &[&[
            3, 17, 24, 25, 27, 37, 44, 45, 50, 53, 54, 55, 57, 63, 64, 65, 73, 78, 79, 80,
        ]],
    },
    Entry {
        name: "r5_11",
        n: 170,
        targets: &[5, 11],
        classes: &[&[
            4, 5, 6, 7, 12, 17, 18, 19, 25, 26, 27, 28, 33, 36, 41, 42, 43, 44, 49, 53, 54, 55, 56,
            57, 58, 59, 60, 65, 69, 73, 77, 81, 85,
        ]],
    },
    Entry {
        name: "r5_12",
        n: 190,
        targets: &[5, 12],
        classes: &[&[
            1, 2, 3, 5, 8, 11, 13, 18, 20, 22, 23, 27, 28, 33, 34, 37, 38, 41, 42, 43, 47, 48, 49,
            53, 54, 55, 58, 59, 62, 65, 71, 73, 74, 81, 83, 93, 95,
        ]],
    },
    Entry {
        name: "r5_13",
        n: 212,
        targets: &[5, 13],
        classes: &[&[
            2, 4, 5, 13, 15, 16, 17, 20, 22, 25, 28, 35, 36, 39, 42, 43, 46, 48, 49, 50, 54, 58,
            59, 60, 61, 64, 65, 68, 69, 73, 76, 79, 80, 86, 88, 89, 91, 95, 100, 106,
        ]],
    },
    Entry {
        name: "r5_14",
        n: 238,
        targets: &[5, 14],
        classes: &[&[
            3, 8, 9, 11, 12, 13, 15, 17, 20, 21, 25, 27, 32, 36, 37, 42, 45, 49, 52, 54, 58, 59,
            60, 61, 67, 68, 71, 72, 74, 76, 83, 88, 89, 92, 93, 98, 99, 100, 102, 107, 108, 119,
        ]],
    },
    Entry {
        name: "r3_3_9",
        n: 117,
        targets: &[3, 3, 9],
        classes: &[
            &[1, 3, 7, 11, 16, 26, 36, 38, 44, 46, 48, 56],
            &[19, 23, 24, 25, 28, 29, 30, 31, 32, 33, 34, 37, 45],
            &[
                2, 4, 5, 6, 8, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 27, 35, 39, 40, 41, 42,
                43, 47, 49, 50, 51, 52, 53, 54, 55, 57, 58,
            ],
        ],
    },
    Entry {
        name: "r3_3_10",
        n: 140,
        targets: &[3, 3, 10],
        classes: &[
            &[4, 6, 17, 19, 22, 24, 31, 49, 51, 56, 64, 65, 67],
            &[1, 3, 16, 18, 29, 35, 37, 42, 46, 48, 54, 59, 61, 63, 68],
            &[
                2, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 20, 21, 23, 25, 26, 27, 28, 30, 32, 33, 34,
                36, 38, 39, 40, 41, 43, 44, 45, 47, 50, 52, 53, 55, 57, 58, 60, 62, 66, 69, 70,
            ],
        ],
    },
    Entry {
        name: "r3_3_11",
        n: 157,
        targets: &[3, 3, 11],
        classes: &[
            &[3, 4, 16, 22, 24, 30, 36, 45, 51, 57, 62, 63, 68, 74],
            &[
                6, 7, 9, 10, 23, 26, 28, 31, 39, 42, 50, 53, 58, 61, 66, 69, 77,
            ],
            &[
                1, 2, 5, 8, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 25, 27, 29, 32, 33, 34, 35, 37,
                38, 40, 41, 43, 44, 46, 47, 48, 49, 52, 54, 55, 56, 59, 60, 64, 65, 67, 70, 71, 72,
                73, 75, 76, 78,
            ],
        ],
    },
];

/// Names accepted by [`builtin_certificate`], in publication order.
pub const BUILTIN_NAMES: [&str; 8] = [
    "r4_16", "r5_11", "r5_12", "r5_13", "r5_14", "r3_3_9", "r3_3_10", "r3_3_11",
];

pub fn builtin_certificate(name: &str) -> Result<ColoringCertificate> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let mut colors: Vec<DistanceSet> = entry
        .classes
        .iter()
        .map(|class| class.iter().copied().collect())
        .collect();
    if colors.len() < entry.targets.len() {
        let rest = (1..=entry.n / 2)
            .filter(|&d| !colors.iter().any(|c| c.contains(d)))
            .collect();
        colors.push(rest);
    }
    ColoringCertificate::new(
        entry.n,
        colors,
        entry.targets.to_vec(),
        Some(entry.name.to_string()),
    )
}

pub fn all_builtins() -> Vec<ColoringCertificate> {
    BUILTIN_NAMES
        .iter()
        .map(|name| builtin_certificate(name).expect("compiled-in certificate is well formed"))
        .collect()
}
