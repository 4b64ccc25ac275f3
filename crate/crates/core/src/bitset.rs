//! Dense vertex sets.
//!
//! [`VertexSet`] is the public carrier for hulls and convexity queries. The
//! closure kernel in [`crate::convexity`] is generic over [`Mask`] so the hot
//! search loops can run on a bare `u64` when the host graph has at most 64
//! vertices.

use std::fmt;

use smallvec::SmallVec;

use crate::graph::VertexId;

const WORD: usize = 64;

/// A subset of the vertices `0..n` of some host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    /// The empty set over `0..n`.
    pub fn new(n: usize) -> Self {
        let mut words = SmallVec::new();
        words.resize(n.div_ceil(WORD), 0);
        VertexSet { n, words }
    }

    /// The set of all vertices `0..n`.
    pub fn full(n: usize) -> Self {
        let mut set = VertexSet::new(n);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(n);
            *w = low_bits(hi - lo);
        }
        set
    }

    /// Builds a set from vertex ids, panicking on an id `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(n: usize, vertices: I) -> Self {
        match Self::try_from_vertices(n, vertices) {
            Ok(set) => set,
            Err(v) => panic!("vertex {v} out of range for a graph on {n} vertices"),
        }
    }

    /// Builds a set from vertex ids, returning the first out-of-range id on failure.
    pub fn try_from_vertices<I: IntoIterator<Item = VertexId>>(
        n: usize,
        vertices: I,
    ) -> Result<Self, VertexId> {
        let mut set = VertexSet::new(n);
        for v in vertices {
            if v >= n {
                return Err(v);
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Number of vertices of the host graph this set is bound to.
    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added.
    pub fn insert(&mut self, v: VertexId) -> bool {
        assert!(
            v < self.n,
            "vertex {v} out of range for a graph on {} vertices",
            self.n
        );
        let w = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Vertices not in the set.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        out
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Bit image of the set; only meaningful when `capacity() <= 64`.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub(crate) fn from_low_word(n: usize, word: u64) -> VertexSet {
        debug_assert!(n <= WORD);
        let mut set = VertexSet::new(n);
        if let Some(w) = set.words.first_mut() {
            *w = word & low_bits(n);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Ones<'a>;
    fn into_iter(self) -> Ones<'a> {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Iterator over the set bits of a single word.
pub(crate) struct WordOnes(u64);

impl Iterator for WordOnes {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}

#[inline]
pub(crate) fn low_bits(k: usize) -> u64 {
    if k >= WORD {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Set operations shared by `u64` and [`VertexSet`].
pub(crate) trait Mask: Clone + PartialEq {
    type Ones<'a>: Iterator<Item = usize>
    where
        Self: 'a;

    fn empty(n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn intersects(&self, other: &Self) -> bool;
    fn union_with(&mut self, other: &Self);
    fn difference_with(&mut self, other: &Self);
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    fn ones(&self) -> Self::Ones<'_>;
}

impl Mask for u64 {
    type Ones<'a> = WordOnes;

    #[inline]
    fn empty(n: usize) -> Self {
        debug_assert!(n <= WORD);
        0
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    #[inline]
    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }
    #[inline]
    fn union_with(&mut self, other: &Self) {
        *self |= other;
    }
    #[inline]
    fn difference_with(&mut self, other: &Self) {
        *self &= !other;
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn ones(&self) -> WordOnes {
        WordOnes(*self)
    }
}

impl Mask for VertexSet {
    type Ones<'a> = Ones<'a>;

    fn empty(n: usize) -> Self {
        VertexSet::new(n)
    }
    fn insert(&mut self, v: usize) {
        VertexSet::insert(self, v);
    }
    fn intersects(&self, other: &Self) -> bool {
        VertexSet::intersects(self, other)
    }
    fn union_with(&mut self, other: &Self) {
        VertexSet::union_with(self, other);
    }
    fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
    fn is_empty(&self) -> bool {
        VertexSet::is_empty(self)
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn ones(&self) -> Ones<'_> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sets_respect_capacity() {
        for n in [0, 1, 63, 64, 65, 130] {
            let s = VertexSet::full(n);
            assert_eq!(s.len(), n);
            assert!(s.is_full());
            assert_eq!(s.complement().len(), 0);
        }
    }

    #[test]
    fn iteration_is_sorted_across_words() {
        let s = VertexSet::from_vertices(140, [139, 0, 64, 63, 70]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 70, 139]);
        assert_eq!(s.to_string(), "{0,63,64,70,139}");
    }

    #[test]
    fn out_of_range_is_reported() {
        assert_eq!(VertexSet::try_from_vertices(3, [0, 3]), Err(3));
        assert!(!VertexSet::new(3).contains(7));
    }

    #[test]
    fn subset_and_complement() {
        let a = VertexSet::from_vertices(5, [1, 2]);
        let b = VertexSet::from_vertices(5, [1, 2, 4]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(b.complement().to_vec(), vec![0, 3]);
    }
}
