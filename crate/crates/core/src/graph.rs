//! Immutable simple undirected connected graphs and the connectivity
//! primitives every partitioning routine is built from.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple, undirected, connected graph on vertices `0..n`.
///
/// Construction rejects self-loops, duplicate edges, out-of-range endpoints
/// and disconnected input. Neighbor lists are sorted ascending, which is what
/// makes every traversal in this crate deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::MalformedEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::MalformedEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedEdge {
                u: w[0].0,
                v: w[0].1,
                reason: "duplicate edge",
            });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        if g.reach(0, &VertexSet::full(n)).len() != n {
            return Err(Error::DisconnectedInput);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub(crate) fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if within.contains(y) && !seen.contains(y) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Connectivity test for nonempty sets; the empty set is reported as
    /// not connected.
    pub(crate) fn connected(&self, s: &VertexSet) -> bool {
        match s.min() {
            Some(start) => self.reach(start, s).len() == s.len(),
            None => false,
        }
    }

    pub fn is_connected_subset(&self, s: &VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(self.connected(s))
    }

    /// Maximal connected pieces of `G[s]`, ordered by smallest vertex.
    pub fn components_of_subset(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let comp = self.reach(start, &rest);
            rest = rest.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// True if some edge joins `a` and `b`. No disjointness check.
    pub(crate) fn touches(&self, a: &VertexSet, b: &VertexSet) -> bool {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        small
            .iter()
            .any(|x| self.adj[x].iter().any(|&y| large.contains(y)))
    }

    /// True if some edge joins vertex `x` and `b`.
    pub(crate) fn vertex_touches(&self, x: usize, b: &VertexSet) -> bool {
        self.adj[x].iter().any(|&y| b.contains(y))
    }

    pub fn parts_adjacent(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets);
        }
        Ok(self.touches(a, b))
    }

    /// Every edge `(u, v)` with `u` in `from` and `v` in `toward`, ascending by
    /// `u` then `v`.
    pub fn boundary_vertices(&self, from: &VertexSet, toward: &VertexSet) -> Result<Vec<(usize, usize)>> {
        if !from.is_disjoint(toward) {
            return Err(Error::OverlappingSets);
        }
        Ok(from
            .iter()
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(|&&v| toward.contains(v))
                    .map(move |&v| (u, v))
            })
            .collect())
    }

    /// Breadth-first spanning tree from vertex 0, neighbors taken in
    /// ascending order. Edges are `(min, max)` pairs in discovery order.
    pub fn spanning_tree(&self) -> Vec<(usize, usize)> {
        let (order, parent) = self.bfs_tree(&self.vertices());
        order
            .iter()
            .skip(1)
            .map(|&c| {
                let p = parent[c];
                (p.min(c), p.max(c))
            })
            .collect()
    }

    /// BFS over `G[s]` from its smallest vertex. Returns the visit order and a
    /// parent array (meaningful only for visited non-root vertices).
    fn bfs_tree(&self, s: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(s.len());
        let Some(root) = s.min() else {
            return (order, parent);
        };
        let mut seen = VertexSet::singleton(self.n, root);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.adj[x] {
                if s.contains(y) && !seen.contains(y) {
                    seen.insert(y);
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (order, parent)
    }

    /// Splits `G[s]` into two connected sides by removing one edge of a BFS
    /// spanning tree of `G[s]`, choosing the edge that minimizes the larger
    /// side (ties: lexicographically smallest edge). Returns
    /// `(smaller, larger)`; equal sides are ordered by smallest vertex.
    pub fn most_balanced_tree_cut(&self, s: &VertexSet) -> Result<(VertexSet, VertexSet)> {
        if s.len() < 2 {
            return Err(Error::SubsetTooSmall {
                size: s.len(),
                min: 2,
            });
        }
        let (order, parent) = self.bfs_tree(s);
        if order.len() != s.len() {
            return Err(Error::DisconnectedSubset);
        }
        let mut subtree = vec![0usize; self.n];
        for &x in order.iter().rev() {
            subtree[x] += 1;
            if x != order[0] {
                subtree[parent[x]] += subtree[x];
            }
        }
        let total = s.len();
        let best = order[1..]
            .iter()
            .map(|&c| {
                let p = parent[c];
                let larger = subtree[c].max(total - subtree[c]);
                (larger, (p.min(c), p.max(c)), c)
            })
            .min()
            .expect("at least one tree edge");
        let child = best.2;
        // BFS order visits parents first.
        let mut below = VertexSet::singleton(self.n, child);
        for &x in &order {
            if x != order[0] && below.contains(parent[x]) {
                below.insert(x);
            }
        }
        let other = s.difference(&below);
        let (a, b) = if below.size_key() <= other.size_key() {
            (below, other)
        } else {
            (other, below)
        };
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn set(n: usize, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(n, vs)
    }

    #[test]
    fn build_smallest_connected_graph() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 1)]), Err(Error::DisconnectedInput));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 1)]),
            Err(Error::MalformedEdge { reason: "self-loop", .. })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0), (1, 2)]),
            Err(Error::MalformedEdge { reason: "duplicate edge", .. })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 3)]),
            Err(Error::MalformedEdge { reason: "endpoint out of range", .. })
        ));
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert!(Graph::new(1, &[]).is_ok());
    }

    #[test]
    fn path_of_twelve() {
        let g = path(12);
        assert_eq!(g.edge_count(), 11);
        for v in 0..12 {
            let expected = if v == 0 || v == 11 { 1 } else { 2 };
            assert_eq!(g.neighbors(v).len(), expected);
        }
    }

    #[test]
    fn connected_subsets() {
        let p = path(12);
        assert!(p.is_connected_subset(&set(12, [0, 1, 2])).unwrap());
        assert!(!p.is_connected_subset(&set(12, [0, 2])).unwrap());
        let s = star(7);
        assert!(!s.is_connected_subset(&set(7, [1, 2])).unwrap());
        assert_eq!(p.is_connected_subset(&VertexSet::empty(12)), Err(Error::EmptySubset));
    }

    #[test]
    fn components() {
        let p = path(12);
        let comps = p.components_of_subset(&p.vertices().without(5));
        assert_eq!(comps, vec![set(12, 0..5), set(12, 6..12)]);

        let s = star(7);
        let comps = s.components_of_subset(&s.vertices().without(0));
        assert_eq!(comps.len(), 6);
        assert!(comps.iter().all(|c| c.len() == 1));

        let comps = p.components_of_subset(&set(12, [0, 1, 3, 4, 5, 9]));
        assert_eq!(comps, vec![set(12, [0, 1]), set(12, [3, 4, 5]), set(12, [9])]);

        assert!(p.components_of_subset(&VertexSet::empty(12)).is_empty());
    }

    #[test]
    fn adjacency_of_parts() {
        let p = path(12);
        assert!(p.parts_adjacent(&set(12, [0, 1]), &set(12, [2, 3])).unwrap());
        assert!(!p.parts_adjacent(&set(12, [0, 1]), &set(12, [3, 4])).unwrap());
        assert_eq!(
            p.parts_adjacent(&set(12, [0, 1]), &set(12, [1, 2])),
            Err(Error::OverlappingSets)
        );
        let s = star(7);
        assert!(!s.parts_adjacent(&set(7, [1]), &set(7, [2])).unwrap());
    }

    #[test]
    fn boundary() {
        let p = path(12);
        assert_eq!(p.boundary_vertices(&set(12, 2..12), &set(12, [0, 1])).unwrap(), vec![(2, 1)]);
        let s = star(7);
        assert_eq!(s.boundary_vertices(&set(7, [0]), &set(7, [1, 2])).unwrap(), vec![(0, 1), (0, 2)]);
        assert!(p.boundary_vertices(&set(12, [0]), &set(12, [5])).unwrap().is_empty());
    }

    #[test]
    fn spanning_trees() {
        let p = path(12);
        assert_eq!(p.spanning_tree(), p.edges().to_vec());
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.spanning_tree(), vec![(0, 1), (0, 2)]);
        let s = star(7);
        let mut t = s.spanning_tree();
        t.sort();
        assert_eq!(t, s.edges().to_vec());
    }

    #[test]
    fn balanced_cuts() {
        let p = path(12);
        assert_eq!(
            p.most_balanced_tree_cut(&set(12, 4..12)).unwrap(),
            (set(12, 4..8), set(12, 8..12))
        );
        assert_eq!(
            p.most_balanced_tree_cut(&set(12, 0..3)).unwrap(),
            (set(12, [0]), set(12, [1, 2]))
        );
        let s = star(7);
        let (a, b) = s.most_balanced_tree_cut(&s.vertices()).unwrap();
        assert_eq!(a, set(7, [1]));
        assert_eq!(b, set(7, [0, 2, 3, 4, 5, 6]));
        assert!(matches!(
            p.most_balanced_tree_cut(&set(12, [3])),
            Err(Error::SubsetTooSmall { .. })
        ));
        assert_eq!(
            p.most_balanced_tree_cut(&set(12, [0, 1, 5])),
            Err(Error::DisconnectedSubset)
        );
    }
}
