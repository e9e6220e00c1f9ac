//! Circulant graphs on `Z_n` and the dense vertex sets the clique search
//! runs on.
//!
//! Only the neighborhood of vertex 0 is stored. `N(v)` is `N(0)` rotated by
//! `v`, read out of a doubled copy of `N(0)` as a bit window.

use std::fmt;

use crate::certificate::{ColoringCertificate, DistanceSet, StructureViolation};
use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Circular distance `min(|i-j|, n-|i-j|)` between two distinct vertices.
///
/// Panics if `i == j` or either vertex is outside `0..n`.
pub fn circular_distance(i: usize, j: usize, n: usize) -> usize {
    assert!(i < n && j < n, "vertices {i}, {j} outside 0..{n}");
    assert_ne!(i, j, "no circular distance from a vertex to itself");
    let diff = i.abs_diff(j);
    diff.min(n - diff)
}

/// 1-based color of edge `{i, j}` under `cert`; `None` for `i == j` or an
/// uncolored distance.
pub fn edge_color(cert: &ColoringCertificate, i: usize, j: usize) -> Option<usize> {
    if i == j || i >= cert.n || j >= cert.n {
        return None;
    }
    cert.color_of_distance(circular_distance(i, j, cert.n))
}

/// Fixed-universe bitset over vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        let mut set = VertexSet { n, words };
        set.trim();
        set
    }

    fn trim(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + bit)
            }
        })
    })
}

pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Graph on `Z_n` where `u ~ v` iff their circular distance lies in the
/// distance set. Immutable once built.
#[derive(Clone)]
pub struct CirculantGraph {
    n: usize,
    distances: DistanceSet,
    color: usize,
    zero: VertexSet,
    /// `N(0)` repeated twice (bits `0..2n`), plus zero pad words.
    doubled: Vec<u64>,
}

impl CirculantGraph {
    /// Fails with a structure error if a distance is outside `1..=n/2`.
    pub fn new(n: usize, distances: DistanceSet) -> Result<Self> {
        Self::with_color(n, distances, 1)
    }

    /// Same as [`CirculantGraph::new`] but labels the graph with the 1-based
    /// color it represents, which ends up in any clique witness.
    pub fn with_color(n: usize, distances: DistanceSet, color: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure(vec![StructureViolation::TooFewVertices {
                n,
            }]));
        }
        let max = n / 2;
        let bad: Vec<_> = distances
            .iter()
            .filter(|&d| d == 0 || d > max)
            .map(|distance| StructureViolation::DistanceOutOfRange {
                color,
                distance,
                max,
            })
            .collect();
        if !bad.is_empty() {
            return Err(Error::Structure(bad));
        }

        let mut zero = VertexSet::empty(n);
        for d in distances.iter() {
            zero.insert(d);
            zero.insert(n - d);
        }
        let mut doubled = vec![0u64; words_for(2 * n) + 2];
        for v in zero.iter() {
            for pos in [v, v + n] {
                doubled[pos / WORD_BITS] |= 1 << (pos % WORD_BITS);
            }
        }
        Ok(CirculantGraph {
            n,
            distances,
            color,
            zero,
            doubled,
        })
    }

    /// Graph of one (1-based) color class of a certificate.
    pub fn for_color(cert: &ColoringCertificate, color: usize) -> Result<Self> {
        Self::with_color(cert.n, cert.color(color).clone(), color)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &DistanceSet {
        &self.distances
    }

    pub fn color(&self) -> usize {
        self.color
    }

    pub fn neighborhood_of_zero(&self) -> &VertexSet {
        &self.zero
    }

    pub fn degree(&self) -> usize {
        self.zero.len()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && u < self.n
            && v < self.n
            && self.distances.contains(circular_distance(u, v, self.n))
    }

    /// Word `w` of `N(v)`. Bit `u` of `N(v)` is bit `u - v mod n` of `N(0)`,
    /// i.e. bit `u + n - v` of the doubled copy.
    #[inline]
    pub(crate) fn neighborhood_word(&self, v: usize, w: usize) -> u64 {
        let start = self.n - v + w * WORD_BITS;
        let idx = start / WORD_BITS;
        let shift = start % WORD_BITS;
        let lo = self.doubled[idx] >> shift;
        if shift == 0 {
            lo
        } else {
            lo | self.doubled[idx + 1] << (WORD_BITS - shift)
        }
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        let words = (0..words_for(self.n))
            .map(|w| self.neighborhood_word(v, w))
            .collect();
        VertexSet::from_words(self.n, words)
    }

    /// `N(v) ∩ within`.
    pub fn induced_neighbors(&self, v: usize, within: &VertexSet) -> VertexSet {
        assert_eq!(
            within.universe(),
            self.n,
            "vertex set over a different universe"
        );
        let words = within
            .words()
            .iter()
            .enumerate()
            .map(|(w, &x)| x & self.neighborhood_word(v, w))
            .collect();
        VertexSet::from_words(self.n, words)
    }
}

impl fmt::Debug for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CirculantGraph")
            .field("n", &self.n)
            .field("color", &self.color)
            .field("distances", &self.distances.as_slice())
            .finish()
    }
}
