//! Partitions, their ranks and the "better" order.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Why a collection of vertex sets is not a feasible partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    WrongUniverse,
    NoParts,
    EmptyPart,
    Overlap { vertex: usize },
    Uncovered { vertex: usize },
    DisconnectedPart { min_vertex: usize },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::WrongUniverse => write!(f, "part universe differs from the graph"),
            Infeasible::NoParts => write!(f, "no parts"),
            Infeasible::EmptyPart => write!(f, "empty part"),
            Infeasible::Overlap { vertex } => write!(f, "vertex {vertex} is in two parts"),
            Infeasible::Uncovered { vertex } => write!(f, "vertex {vertex} is in no part"),
            Infeasible::DisconnectedPart { min_vertex } => {
                write!(f, "part containing {min_vertex} is not connected")
            }
        }
    }
}

/// Checks that `parts` are nonempty, pairwise disjoint, cover `V` and each
/// induce a connected subgraph.
pub fn check_feasible(g: &Graph, parts: &[VertexSet]) -> std::result::Result<(), Infeasible> {
    if parts.is_empty() {
        return Err(Infeasible::NoParts);
    }
    let mut seen = VertexSet::empty(g.n());
    for part in parts {
        if part.universe() != g.n() {
            return Err(Infeasible::WrongUniverse);
        }
        if part.is_empty() {
            return Err(Infeasible::EmptyPart);
        }
        if let Some(vertex) = part.iter().find(|&v| seen.contains(v)) {
            return Err(Infeasible::Overlap { vertex });
        }
        seen.union_with(part);
    }
    if let Some(vertex) = (0..g.n()).find(|&v| !seen.contains(v)) {
        return Err(Infeasible::Uncovered { vertex });
    }
    for part in parts {
        if !g.connected(part) {
            return Err(Infeasible::DisconnectedPart {
                min_vertex: part.min().unwrap_or(0),
            });
        }
    }
    Ok(())
}

/// A feasible connected partition. Parts are kept sorted by ascending size,
/// ties by smallest vertex, so `parts()[k - 1]` is always a largest part.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(g: &Graph, parts: Vec<VertexSet>) -> Result<Partition> {
        check_feasible(g, &parts).map_err(Error::Infeasible)?;
        Ok(Partition::sorted(parts))
    }

    pub fn from_lists(g: &Graph, lists: &[Vec<usize>]) -> Result<Partition> {
        let mut parts = Vec::with_capacity(lists.len());
        for list in lists {
            if let Some(&v) = list.iter().find(|&&v| v >= g.n()) {
                return Err(Error::MalformedEdge {
                    u: v,
                    v,
                    reason: "vertex out of range",
                });
            }
            parts.push(VertexSet::from_vertices(g.n(), list.iter().copied()));
        }
        Partition::new(g, parts)
    }

    /// Sorts without checking feasibility.
    pub(crate) fn sorted(mut parts: Vec<VertexSet>) -> Partition {
        parts.sort_by_key(VertexSet::size_key);
        Partition { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts[0].universe()
    }

    /// Largest part cardinality.
    pub fn size(&self) -> usize {
        self.parts.last().map_or(0, VertexSet::len)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.parts.iter().rev().map(VertexSet::len).collect())
    }

    /// Index of the part holding `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.parts
            .iter()
            .position(|p| p.contains(v))
            .expect("partition covers every vertex")
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.parts).finish()
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.parts)
    }
}

/// Part sizes in descending order. `Ord` is lexicographic, so "better" is
/// "less than".
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Rank(pub Vec<usize>);

impl Rank {
    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// True iff `a` is strictly better than `b`.
pub fn better_than(a: &Rank, b: &Rank) -> Result<bool> {
    if a.0.len() != b.0.len() || a.0.iter().sum::<usize>() != b.0.iter().sum::<usize>() {
        return Err(Error::MismatchedShape);
    }
    Ok(a.cmp(b) == Ordering::Less)
}

/// `ceil(n / k)`.
pub fn lower_bound(g: &Graph, k: usize) -> usize {
    g.n().div_ceil(k.max(1))
}

/// Replaces the last (largest) part by its most balanced tree cut.
pub(crate) fn split_largest(g: &Graph, p: &Partition) -> Result<Partition> {
    let mut parts = p.parts.clone();
    let big = parts.pop().expect("nonempty partition");
    let (a, b) = g.most_balanced_tree_cut(&big)?;
    parts.push(a);
    parts.push(b);
    Ok(Partition::sorted(parts))
}

/// Starts from `{V}` and cuts the current largest part `k - 1` times.
pub fn initial_partition(g: &Graph, k: usize) -> Result<Partition> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let mut p = Partition::sorted(vec![g.vertices()]);
    while p.k() < k {
        p = split_largest(g, &p)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn set(n: usize, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(n, vs)
    }

    #[test]
    fn rank_is_descending() {
        let g = path(12);
        let p = Partition::new(&g, vec![set(12, 0..2), set(12, 2..8), set(12, 8..12)]).unwrap();
        assert_eq!(p.rank(), Rank(vec![6, 4, 2]));
        assert_eq!(p.size(), 6);
        let g5 = path(5);
        assert_eq!(initial_partition(&g5, 1).unwrap().rank(), Rank(vec![5]));
    }

    #[test]
    fn better_order() {
        let r = |v: &[usize]| Rank(v.to_vec());
        assert!(better_than(&r(&[4, 4, 4]), &r(&[6, 4, 2])).unwrap());
        assert!(better_than(&r(&[6, 3, 3]), &r(&[6, 4, 2])).unwrap());
        assert!(!better_than(&r(&[4, 4, 4]), &r(&[4, 4, 4])).unwrap());
        assert_eq!(better_than(&r(&[4, 4]), &r(&[4, 4, 4])), Err(Error::MismatchedShape));
    }

    #[test]
    fn initial_partitions() {
        let g = path(12);
        // Two greedy cuts: the middle, then the later half.
        assert_eq!(initial_partition(&g, 3).unwrap().rank(), Rank(vec![6, 3, 3]));
        assert_eq!(initial_partition(&g, 4).unwrap().rank(), Rank(vec![3, 3, 3, 3]));
        assert_eq!(initial_partition(&g, 1).unwrap().parts(), &[g.vertices()]);
        let all = initial_partition(&g, 12).unwrap();
        assert!(all.parts().iter().all(|p| p.len() == 1));
        assert_eq!(initial_partition(&g, 13), Err(Error::KTooLarge { k: 13, n: 12 }));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&path(12), 3), 4);
        assert_eq!(lower_bound(&path(10), 4), 3);
        assert_eq!(lower_bound(&path(7), 1), 7);
    }

    #[test]
    fn feasibility() {
        let g = path(12);
        assert!(check_feasible(&g, &[set(12, 0..4), set(12, 4..8), set(12, 8..12)]).is_ok());
        let bad = [set(12, 0..4), set(12, (4..8).chain([11])), set(12, 8..11)];
        assert_eq!(
            check_feasible(&g, &bad),
            Err(Infeasible::DisconnectedPart { min_vertex: 4 })
        );
        let overlap = [set(12, 0..5), set(12, 4..8), set(12, 8..12)];
        assert_eq!(check_feasible(&g, &overlap), Err(Infeasible::Overlap { vertex: 4 }));
        let gap = [set(12, 0..4), set(12, 5..12)];
        assert_eq!(check_feasible(&g, &gap), Err(Infeasible::Uncovered { vertex: 4 }));
    }
}
