//! Verification and search for Ramsey lower-bound certificates given as
//! cyclic (circulant) edge colorings.
//!
//! The edge `{i, j}` of `K_n` gets the color whose distance set contains
//! `min(|i - j|, n - |i - j|)`. A coloring where color `c` has no clique of
//! size `t_c` shows `R(t_1, ..., t_m) >= n + 1`.
//!
//! ```
//! use cyclic_ramsey::{builtin_certificate, verify};
//!
//! let cert = builtin_certificate("r3_3_9").unwrap();
//! let report = verify(&cert).unwrap();
//! assert_eq!(report.proven_bound().as_deref(), Some("R(3,3,9) >= 118"));
//! ```

pub mod builtin;
pub mod certificate;
pub mod circulant;
pub mod cli;
pub mod clique;
pub mod error;
pub mod oracle;
pub mod search;
pub mod verifier;

pub use builtin::{all_builtins, builtin_certificate, BUILTIN_NAMES};
pub use certificate::{
    parse_certificate, serialize_certificate, validate_structure, ColoringCertificate, DistanceSet,
    StructureViolation,
};
pub use circulant::{circular_distance, edge_color, CirculantGraph, VertexSet};
pub use clique::{
    count_cliques_through_zero, has_clique, has_clique_with, max_clique_bounded,
    max_clique_bounded_with, CliqueOptions, CliqueWitness,
};
pub use error::{Error, Result};
pub use oracle::{brute_force_count_cliques, brute_force_has_clique, ORACLE_MAX_N};
pub use search::{objective, search, MoveRecord, SearchConfig, SearchOutcome, SearchState};
pub use verifier::{
    verify, verify_with, verify_with_oracle, ColorReport, ColorVerdict, VerificationReport,
    VerifyOptions,
};
