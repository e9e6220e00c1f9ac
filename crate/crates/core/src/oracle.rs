//! Exhaustive clique checks for small graphs.
//!
//! These walk every `t`-subset of `0..n` in lexicographic order and test
//! pairs against the distance set directly. They use neither bitsets nor
//! vertex-transitivity, so they can stand as an independent check on
//! [`crate::clique`].

use crate::circulant::{circular_distance, CirculantGraph};
use crate::clique::CliqueWitness;
use crate::error::{Error, Result};

/// Largest `n` the brute-force routines accept.
pub const ORACLE_MAX_N: usize = 32;

fn guard(g: &CirculantGraph) -> Result<()> {
    if g.n() > ORACLE_MAX_N {
        Err(Error::Guard {
            n: g.n(),
            limit: ORACLE_MAX_N,
        })
    } else {
        Ok(())
    }
}

fn all_adjacent(g: &CirculantGraph, subset: &[usize]) -> bool {
    let n = g.n();
    for (i, &a) in subset.iter().enumerate() {
        for &b in &subset[i + 1..] {
            if !g.distances().contains(circular_distance(a, b, n)) {
                return false;
            }
        }
    }
    true
}

/// Visits every `t`-subset of `0..n` in lexicographic order until `visit`
/// returns `false`.
fn for_each_subset(n: usize, t: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if t > n {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        // rightmost position that can still advance
        let Some(i) = (0..t).rev().find(|&i| idx[i] < n - t + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First monochromatic `K_t` in lexicographic order, or `None`.
pub fn brute_force_has_clique(g: &CirculantGraph, t: usize) -> Result<Option<CliqueWitness>> {
    guard(g)?;
    let mut found = None;
    for_each_subset(g.n(), t, |subset| {
        if all_adjacent(g, subset) {
            found = Some(subset.to_vec());
            false
        } else {
            true
        }
    });
    Ok(found.map(|vertices| CliqueWitness {
        color: g.color(),
        vertices,
    }))
}

/// Total number of `K_t` vertex sets in `g`.
pub fn brute_force_count_cliques(g: &CirculantGraph, t: usize) -> Result<u64> {
    guard(g)?;
    let mut count = 0;
    for_each_subset(g.n(), t, |subset| {
        if all_adjacent(g, subset) {
            count += 1;
        }
        true
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, s: &[usize]) -> CirculantGraph {
        CirculantGraph::new(n, s.iter().copied().collect()).unwrap()
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut zero = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            zero += 1;
            true
        });
        assert_eq!(zero, 1);
    }

    #[test]
    fn examples() {
        // {1,3}/{2} on six vertices: the distance-2 class is two triangles.
        let w = brute_force_has_clique(&graph(6, &[2]), 3).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 2, 4]);
        assert!(brute_force_has_clique(&graph(5, &[1]), 3)
            .unwrap()
            .is_none());
        assert_eq!(brute_force_count_cliques(&graph(6, &[2]), 3).unwrap(), 2);
        assert_eq!(
            brute_force_count_cliques(&graph(5, &[1, 2]), 3).unwrap(),
            10
        );
    }

    #[test]
    fn guard_boundary() {
        assert!(brute_force_has_clique(&graph(32, &[1]), 2).is_ok());
        for t in [1, 3, 10] {
            assert_eq!(
                brute_force_has_clique(&graph(33, &[1, 5]), t),
                Err(Error::Guard { n: 33, limit: 32 })
            );
        }
        assert!(brute_force_count_cliques(&graph(33, &[1]), 2).is_err());
    }
}
