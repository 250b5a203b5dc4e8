//! Exhaustive search for optimal connected partitions of small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{check_feasible, initial_partition, lower_bound, Partition};
use crate::vertex_set::VertexSet;

/// Largest `n` the oracle accepts.
pub const ORACLE_LIMIT: usize = 14;

struct Search {
    n: usize,
    k: usize,
    adj: Vec<u32>,
    order: Vec<usize>,
    masks: Vec<u32>,
    sizes: Vec<usize>,
    counting: bool,
    count: u64,
    /// Placements must keep every label strictly below this.
    best: usize,
    best_masks: Option<Vec<u32>>,
    target: usize,
    done: bool,
}

impl Search {
    fn new(g: &Graph, k: usize, counting: bool, best: usize) -> Search {
        let n = g.n();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        // Breadth-first order from vertex 0 keeps every prefix connected.
        let order = {
            let mut seen = vec![false; n];
            let mut order = vec![0];
            seen[0] = true;
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for &y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        order.push(y);
                    }
                }
            }
            order
        };
        Search {
            n,
            k,
            adj,
            order,
            masks: vec![0; k],
            sizes: vec![0; k],
            counting,
            count: 0,
            best,
            best_masks: None,
            target: n.div_ceil(k),
            done: false,
        }
    }

    /// Every vertex of `mask` is reachable from its lowest vertex through
    /// `mask | free`.
    fn completable(&self, mask: u32, free: u32) -> bool {
        let within = mask | free;
        let mut reached = mask & mask.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        mask & !reached == 0
    }

    fn rec(&mut self, i: usize, opened: usize, free: u32) {
        if self.done {
            return;
        }
        if i == self.n {
            if opened < self.k {
                return;
            }
            if self.counting {
                self.count += 1;
            } else {
                let size = *self.sizes.iter().max().unwrap();
                self.best = size;
                self.best_masks = Some(self.masks.clone());
                if size <= self.target {
                    self.done = true;
                }
            }
            return;
        }
        let v = self.order[i];
        let free = free & !(1 << v);
        let remaining = self.n - i - 1;
        let limit = if opened < self.k { opened + 1 } else { opened };
        for label in 0..limit {
            let now_open = opened.max(label + 1);
            if remaining < self.k - now_open {
                continue;
            }
            if !self.counting {
                if self.sizes[label] + 1 >= self.best {
                    continue;
                }
                let cap: usize = (0..self.k)
                    .map(|l| {
                        let s = self.sizes[l] + usize::from(l == label);
                        (self.best - 1).saturating_sub(s)
                    })
                    .sum();
                if cap < remaining {
                    continue;
                }
            }
            self.masks[label] |= 1 << v;
            self.sizes[label] += 1;
            if (0..now_open).all(|l| self.completable(self.masks[l], free)) {
                self.rec(i + 1, now_open, free);
            }
            self.masks[label] &= !(1 << v);
            self.sizes[label] -= 1;
            if self.done {
                return;
            }
        }
    }
}

fn check_shape(g: &Graph, k: usize, limit: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    if g.n() > limit {
        return Err(Error::InstanceTooLarge { n: g.n(), limit });
    }
    Ok(())
}

/// Optimal size and one optimal partition. Refuses `n > 14`.
pub fn exact_opt(g: &Graph, k: usize) -> Result<(usize, Partition)> {
    exact_opt_with_limit(g, k, ORACLE_LIMIT)
}

/// As [`exact_opt`] with a tighter guard; `limit` above 14 is clamped.
pub fn exact_opt_with_limit(g: &Graph, k: usize, limit: usize) -> Result<(usize, Partition)> {
    check_shape(g, k, limit.min(ORACLE_LIMIT))?;
    Ok(solve(g, k))
}

/// Unguarded search for crate-internal use on structured instances.
pub(crate) fn solve(g: &Graph, k: usize) -> (usize, Partition) {
    assert!(g.n() < 32, "bitmask search needs n < 32");
    let start = initial_partition(g, k).expect("k validated by caller");
    let incumbent = start.size();
    if incumbent <= lower_bound(g, k) {
        return (incumbent, start);
    }
    let mut s = Search::new(g, k, false, incumbent);
    s.rec(0, 0, (1u32 << g.n()) - 1);
    match s.best_masks {
        Some(masks) => {
            let parts: Vec<VertexSet> = masks
                .iter()
                .map(|&m| VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| m >> v & 1 == 1)))
                .collect();
            debug_assert!(check_feasible(g, &parts).is_ok());
            let p = Partition::sorted(parts);
            (p.size(), p)
        }
        None => (incumbent, start),
    }
}

/// Number of connected `k`-partitions (unordered), enumerated with label
/// symmetry breaking.
pub fn count_connected_partitions(g: &Graph, k: usize) -> Result<u64> {
    check_shape(g, k, ORACLE_LIMIT)?;
    let mut s = Search::new(g, k, true, usize::MAX);
    s.rec(0, 0, (1u32 << g.n()) - 1);
    Ok(s.count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Labelings with every class nonempty and connected, divided by `k!`.
    fn naive_count(g: &Graph, k: usize) -> u64 {
        let n = g.n();
        let mut total = 0u64;
        let mut labels = vec![0usize; n];
        loop {
            let classes: Vec<VertexSet> = (0..k)
                .map(|l| VertexSet::from_vertices(n, (0..n).filter(|&v| labels[v] == l)))
                .collect();
            if classes.iter().all(|c| !c.is_empty() && g.connected(c)) {
                total += 1;
            }
            let mut i = 0;
            while i < n {
                labels[i] += 1;
                if labels[i] < k {
                    break;
                }
                labels[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        total / (1..=k as u64).product::<u64>()
    }

    #[test]
    fn known_optima() {
        assert_eq!(exact_opt(&path(12), 3).unwrap().0, 4);
        assert_eq!(exact_opt(&cycle(10), 4).unwrap().0, 3);
        assert_eq!(exact_opt(&star(7), 3).unwrap().0, 5);
        let (size, w) = exact_opt(&star(11), 4).unwrap();
        assert_eq!(size, 8);
        assert_eq!(w.size(), 8);
        assert!(check_feasible(&star(11), w.parts()).is_ok());
    }

    #[test]
    fn guard() {
        assert_eq!(
            exact_opt(&path(15), 3),
            Err(Error::InstanceTooLarge { n: 15, limit: 14 })
        );
        assert_eq!(
            exact_opt_with_limit(&path(12), 3, 10),
            Err(Error::InstanceTooLarge { n: 12, limit: 10 })
        );
        assert_eq!(exact_opt(&path(4), 5), Err(Error::KTooLarge { k: 5, n: 4 }));
    }

    #[test]
    fn enumeration_visits_each_partition_once() {
        let graphs = [path(6), cycle(6), star(6), Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap()];
        for g in &graphs {
            for k in 1..=g.n().min(4) {
                assert_eq!(count_connected_partitions(g, k).unwrap(), naive_count(g, k), "k={k}");
            }
        }
        let k7 = {
            let mut e = Vec::new();
            for u in 0..7 {
                for v in u + 1..7 {
                    e.push((u, v));
                }
            }
            Graph::new(7, &e).unwrap()
        };
        assert_eq!(count_connected_partitions(&k7, 3).unwrap(), naive_count(&k7, 3));
    }
}
