//! Clique decisions on circulant graphs.
//!
//! Rotations act transitively on `Z_n`, so a `K_t` exists iff one exists
//! through vertex 0, i.e. iff `N(0)` contains a `K_{t-1}`. Every search here
//! fixes vertex 0 and runs a bitset branch-and-bound over `N(0)`:
//! candidates are taken in ascending order, each branched vertex is removed
//! from its parent's candidate set, and a node is cut when fewer candidates
//! remain than vertices are still needed.

use crate::certificate::ColoringCertificate;
use crate::circulant::{edge_color, popcount, words_for, CirculantGraph, WORD_BITS};

/// An explicit monochromatic clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueWitness {
    /// 1-based color class the clique lives in.
    pub color: usize,
    /// Sorted, 0-based vertices.
    pub vertices: Vec<usize>,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// All pairs are edges of `g`.
    pub fn is_clique_in(&self, g: &CirculantGraph) -> bool {
        pairs(&self.vertices).all(|(a, b)| g.is_edge(a, b))
    }

    /// All pairs have color `self.color` under `cert`, and vertices are
    /// sorted and distinct.
    pub fn verify_against(&self, cert: &ColoringCertificate) -> bool {
        self.vertices.windows(2).all(|w| w[0] < w[1])
            && self.vertices.last().is_none_or(|&v| v < cert.n)
            && pairs(&self.vertices).all(|(a, b)| edge_color(cert, a, b) == Some(self.color))
    }

    /// The witness shifted by `k` around the cycle.
    pub fn rotated(&self, k: usize, n: usize) -> CliqueWitness {
        let mut vertices: Vec<usize> = self.vertices.iter().map(|v| (v + k) % n).collect();
        vertices.sort_unstable();
        CliqueWitness {
            color: self.color,
            vertices,
        }
    }
}

fn pairs(vertices: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vertices
        .iter()
        .enumerate()
        .flat_map(move |(i, &a)| vertices[i + 1..].iter().map(move |&b| (a, b)))
}

/// Tuning knobs for the branch-and-bound. Results never depend on them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CliqueOptions {
    /// Cut nodes whose candidates greedily color with fewer colors than
    /// vertices still needed.
    pub coloring_bound: bool,
}

struct Engine<'g> {
    g: &'g CirculantGraph,
    words: usize,
    /// Candidate set per depth, `words` words each.
    levels: Vec<u64>,
    clique: Vec<usize>,
    options: CliqueOptions,
    scratch: Vec<u64>,
}

impl<'g> Engine<'g> {
    /// Engine whose depth-0 candidates are the common neighborhood of
    /// `base`, with `base` already on the clique stack.
    fn new(g: &'g CirculantGraph, base: &[usize], depth: usize, options: CliqueOptions) -> Self {
        let words = words_for(g.n());
        let mut levels = vec![0u64; words * (depth + 1)];
        for (w, slot) in levels[..words].iter_mut().enumerate() {
            *slot = base
                .iter()
                .fold(u64::MAX, |acc, &b| acc & g.neighborhood_word(b, w));
        }
        let rem = g.n() % WORD_BITS;
        if rem != 0 {
            levels[words - 1] &= (1u64 << rem) - 1;
        }
        Engine {
            g,
            words,
            levels,
            clique: base.to_vec(),
            options,
            scratch: vec![0; 2 * words],
        }
    }

    /// Removes and returns the smallest candidate at `depth`, writing
    /// `remaining ∩ N(v)` into `depth + 1` when `fill_next`.
    fn pop_candidate(&mut self, depth: usize, fill_next: bool) -> Option<usize> {
        let words = self.words;
        let (head, tail) = self.levels.split_at_mut((depth + 1) * words);
        let cur = &mut head[depth * words..];
        let w = cur.iter().position(|&x| x != 0)?;
        let bit = cur[w].trailing_zeros() as usize;
        cur[w] &= cur[w] - 1;
        let v = w * WORD_BITS + bit;
        if fill_next {
            let next = &mut tail[..words];
            for i in 0..words {
                next[i] = cur[i] & self.g.neighborhood_word(v, i);
            }
        }
        Some(v)
    }

    fn candidates(&self, depth: usize) -> &[u64] {
        &self.levels[depth * self.words..(depth + 1) * self.words]
    }

    /// Greedy sequential coloring of the candidates at `depth`; stops
    /// counting once `limit` colors are used.
    fn color_bound(&mut self, depth: usize, limit: usize) -> usize {
        let words = self.words;
        let (uncolored, class) = self.scratch.split_at_mut(words);
        uncolored.copy_from_slice(&self.levels[depth * words..(depth + 1) * words]);
        let mut colors = 0;
        while uncolored.iter().any(|&x| x != 0) {
            colors += 1;
            if colors >= limit {
                return colors;
            }
            class.copy_from_slice(uncolored);
            while let Some(w) = class.iter().position(|&x| x != 0) {
                let v = w * WORD_BITS + class[w].trailing_zeros() as usize;
                uncolored[w] &= !(1u64 << (v % WORD_BITS));
                for (i, slot) in class.iter_mut().enumerate() {
                    *slot &= !self.g.neighborhood_word(v, i);
                }
                class[w] &= !(1u64 << (v % WORD_BITS));
            }
        }
        colors
    }

    fn prune(&mut self, depth: usize, need: usize) -> bool {
        if popcount(self.candidates(depth)) < need {
            return true;
        }
        self.options.coloring_bound && need > 1 && self.color_bound(depth, need) < need
    }

    fn find(&mut self, depth: usize, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if self.prune(depth, need) {
            return false;
        }
        loop {
            if popcount(self.candidates(depth)) < need {
                return false;
            }
            let Some(v) = self.pop_candidate(depth, need > 1) else {
                return false;
            };
            self.clique.push(v);
            if need == 1 || self.find(depth + 1, need - 1) {
                return true;
            }
            self.clique.pop();
        }
    }

    fn count(&mut self, depth: usize, need: usize) -> u64 {
        match need {
            0 => return 1,
            1 => return popcount(self.candidates(depth)) as u64,
            _ => {}
        }
        let mut total = 0;
        while popcount(self.candidates(depth)) >= need {
            if self.pop_candidate(depth, true).is_none() {
                break;
            }
            total += self.count(depth + 1, need - 1);
        }
        total
    }

    fn enumerate(&mut self, depth: usize, need: usize, f: &mut dyn FnMut(&[usize])) {
        if need == 0 {
            f(&self.clique);
            return;
        }
        while popcount(self.candidates(depth)) >= need {
            let Some(v) = self.pop_candidate(depth, need > 1) else {
                break;
            };
            self.clique.push(v);
            if need == 1 {
                f(&self.clique);
            } else {
                self.enumerate(depth + 1, need - 1, f);
            }
            self.clique.pop();
        }
    }
}

/// A `K_t` in `g`, if one exists: the lexicographically first clique
/// through vertex 0 under ascending branching.
pub fn has_clique(g: &CirculantGraph, t: usize) -> Option<CliqueWitness> {
    has_clique_with(g, t, CliqueOptions::default())
}

pub fn has_clique_with(
    g: &CirculantGraph,
    t: usize,
    options: CliqueOptions,
) -> Option<CliqueWitness> {
    assert!(t >= 1, "clique size must be at least 1");
    if t > g.n() {
        return None;
    }
    let mut engine = Engine::new(g, &[0], t, options);
    engine.find(0, t - 1).then(|| {
        let mut vertices = engine.clique;
        vertices.sort_unstable();
        CliqueWitness {
            color: g.color(),
            vertices,
        }
    })
}

/// `min(ω(g), cap)`, stopping as soon as a `K_cap` turns up.
pub fn max_clique_bounded(g: &CirculantGraph, cap: usize) -> usize {
    max_clique_bounded_with(g, cap, CliqueOptions::default())
}

pub fn max_clique_bounded_with(g: &CirculantGraph, cap: usize, options: CliqueOptions) -> usize {
    assert!(cap >= 1, "cap must be at least 1");
    let mut best = 1;
    while best < cap && has_clique_with(g, best + 1, options).is_some() {
        best += 1;
    }
    best
}

/// Number of `K_t` vertex sets that contain vertex 0.
pub fn count_cliques_through_zero(g: &CirculantGraph, t: usize) -> u64 {
    assert!(t >= 1, "clique size must be at least 1");
    if t > g.n() {
        return 0;
    }
    Engine::new(g, &[0], t, CliqueOptions::default()).count(0, t - 1)
}

/// Calls `f` once per `K_t` containing all of `base`, which must itself be
/// a clique. The slice handed to `f` lists `base` first, then the extension
/// in ascending order.
pub(crate) fn for_each_clique_containing(
    g: &CirculantGraph,
    base: &[usize],
    t: usize,
    mut f: impl FnMut(&[usize]),
) {
    debug_assert!(pairs(base).all(|(a, b)| g.is_edge(a, b)));
    if t < base.len() || t > g.n() {
        return;
    }
    let need = t - base.len();
    let mut engine = Engine::new(g, base, need, CliqueOptions::default());
    engine.enumerate(0, need, &mut f);
}
