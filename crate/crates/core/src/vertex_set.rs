use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A subset of the vertex universe `0..n`, iterated in ascending id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    /// Panics if a vertex is outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Smallest vertex id, if any.
    pub fn min(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Order used for parts: ascending cardinality, then smallest vertex id.
    pub(crate) fn size_key(&self) -> (usize, usize) {
        (self.len(), self.min().unwrap_or(usize::MAX))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Sum of cardinalities.
pub(crate) fn total_len<'a, I: IntoIterator<Item = &'a VertexSet>>(sets: I) -> usize {
    sets.into_iter().map(VertexSet::len).sum()
}

pub(crate) fn union_all<'a, I: IntoIterator<Item = &'a VertexSet>>(universe: usize, sets: I) -> VertexSet {
    let mut acc = VertexSet::empty(universe);
    for s in sets {
        acc.union_with(s);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_vertices(10, [7, 2, 9, 0]);
        assert_eq!(s.to_vec(), vec![0, 2, 7, 9]);
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 1, 2]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::from_vertices(6, [1]).is_subset(&a));
        assert_eq!(VertexSet::full(4).len(), 4);
        assert!(VertexSet::empty(4).min().is_none());
    }
}
