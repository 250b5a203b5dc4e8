//! Small-graph corpora for exhaustive checks against the exact solver.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generate::{generate, Family, GeneratorSpec};
use crate::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn from_mask(n: usize, all: &[(usize, usize)], mask: u32) -> Option<Graph> {
    let edges: Vec<_> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
    Graph::new(n, &edges).ok()
}

/// Every connected graph on vertices `0..n`, one per edge subset, `n <= 6`.
pub fn connected_labeled(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidSpec(format!("labeled enumeration supports 1..=6 vertices, got {n}")));
    }
    let all = pairs(n);
    Ok((0u32..1 << all.len()).filter_map(|m| from_mask(n, &all, m)).collect())
}

/// Canonical edge mask: the least mask over relabelings that list vertices
/// by a refined degree invariant. The candidate set only depends on the
/// isomorphism class, so equal masks mean isomorphic graphs.
fn canonical(n: usize, adj: &[u32], all: &[(usize, usize)]) -> u32 {
    let deg = |v: usize| adj[v].count_ones();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(deg).collect();
        nd.sort_unstable();
        (deg(v), nd)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let classes: BTreeSet<_> = keys.iter().cloned().collect();
    let groups: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (0..n).filter(|&v| &keys[v] == c).collect())
        .collect();
    let mut best = u32::MAX;
    let mut order = Vec::with_capacity(n);
    permute(&groups, 0, &mut vec![false; n], &mut order, &mut |order: &[usize]| {
        let mut label = [0usize; 32];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let mut mask = 0u32;
        for &(a, b) in all {
            if adj[a] >> b & 1 == 1 {
                let (x, y) = (label[a].min(label[b]), label[a].max(label[b]));
                mask |= 1 << index(n, x, y);
            }
        }
        best = best.min(mask);
    });
    best
}

fn index(n: usize, x: usize, y: usize) -> usize {
    // Position of (x, y), x < y, in `pairs(n)`.
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

fn permute(groups: &[Vec<usize>], g: usize, used: &mut Vec<bool>, order: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let Some(group) = groups.get(g) else {
        f(order);
        return;
    };
    let placed = group.iter().filter(|&&v| used[v]).count();
    if placed == group.len() {
        return permute(groups, g + 1, used, order, f);
    }
    for &v in group {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute(groups, g, used, order, f);
            order.pop();
            used[v] = false;
        }
    }
}

/// Connected graphs on `n <= 7` vertices, one per isomorphism class, grown
/// edge by edge from the empty graph.
pub fn connected_unlabeled(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 7 {
        return Err(Error::InvalidSpec(format!("unlabeled enumeration supports 1..=7 vertices, got {n}")));
    }
    let all = pairs(n);
    let adj_of = |mask: u32| {
        let mut adj = vec![0u32; n];
        for (i, &(a, b)) in all.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        adj
    };
    let mut level = BTreeSet::from([0u32]);
    let mut classes = vec![0u32];
    for _ in 0..all.len() {
        let mut next = BTreeSet::new();
        for &mask in &level {
            for i in (0..all.len()).filter(|&i| mask >> i & 1 == 0) {
                let m = mask | 1 << i;
                next.insert(canonical(n, &adj_of(m), &all));
            }
        }
        classes.extend(next.iter().copied());
        level = next;
    }
    Ok(classes.into_iter().filter_map(|m| from_mask(n, &all, m)).collect())
}

/// Specs of `count` random connected graphs, sizes cycling through `sizes`,
/// seeds `base..base + count`.
pub fn random_specs(count: usize, sizes: std::ops::RangeInclusive<usize>, base: u64) -> Vec<GeneratorSpec> {
    let sizes: Vec<usize> = sizes.collect();
    (0..count)
        .map(|i| GeneratorSpec::new(Family::RandomConnected, sizes[i % sizes.len()], base + i as u64))
        .collect()
}

/// The standard small-graph corpus. Up to six vertices every labeled
/// connected graph is included; seven-vertex graphs appear once per
/// isomorphism class; 500 random graphs cover 8 to 12 vertices.
pub fn standard_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(connected_labeled(n).unwrap());
    }
    out.extend(connected_unlabeled(7).unwrap());
    out.extend(random_specs(500, 8..=12, 0).iter().map(|s| generate(s).unwrap()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        // Connected labeled graphs: 1, 1, 4, 38, 728, 26704.
        let counts: Vec<usize> = (1..=6).map(|n| connected_labeled(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 4, 38, 728, 26704]);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_unlabeled(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn index_matches_pairs() {
        for n in 1..=7 {
            for (i, &(x, y)) in pairs(n).iter().enumerate() {
                assert_eq!(index(n, x, y), i);
            }
        }
    }
}
