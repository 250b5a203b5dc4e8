//! Lower bounds on the optimum that can be read off hub vertices.

use crate::graph::Graph;

fn sizes_desc(g: &Graph, removed: &[usize]) -> Vec<usize> {
    let mut rest = g.vertices();
    for &x in removed {
        rest.remove(x);
    }
    let mut sizes: Vec<usize> = g.components_of_subset(&rest).iter().map(|c| c.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Sum of the `t` largest entries of a descending list.
fn top(sizes: &[usize], t: usize) -> usize {
    sizes.iter().take(t).sum()
}

/// `ceil(n / k)`.
pub fn trivial_lower_bound(n: usize, k: usize) -> usize {
    n.div_ceil(k)
}

/// Parts avoiding `hub` lie inside single components of `G - hub`.
///
/// Fix a size cap `s` and call components no larger than `s` satellites.
/// If `t` parts avoid the hub and sit in satellites, they cover at most the
/// `t` largest satellites, so the hub part keeps the rest of the satellites
/// and the other `k - t` parts share everything else.
pub fn star_lower_bound(g: &Graph, k: usize, hub: usize) -> usize {
    let n = g.n();
    let comps = sizes_desc(g, &[hub]);
    let mut caps: Vec<usize> = comps.clone();
    caps.dedup();
    let mut best = trivial_lower_bound(n, k);
    for &cap in &caps {
        let sats: Vec<usize> = comps.iter().copied().filter(|&c| c <= cap).collect();
        let total: usize = sats.iter().sum();
        let bound = (0..k)
            .map(|t| {
                let covered = top(&sats, t);
                (1 + total - covered).max((n - covered).div_ceil(k - t))
            })
            .min()
            .unwrap_or(0);
        best = best.max(bound);
    }
    best
}

/// At least `k - 2` parts avoid both hubs and lie inside components of
/// `G - {u, v}`; the two remaining parts cover the rest.
pub fn bihub_lower_bound(g: &Graph, k: usize, u: usize, v: usize) -> usize {
    let n = g.n();
    if u == v || k < 2 {
        return trivial_lower_bound(n, k);
    }
    let comps = sizes_desc(g, &[u, v]);
    let b = (n - top(&comps, k - 2)).div_ceil(2);
    b.max(trivial_lower_bound(n, k))
}

/// Best of the bounds above over the given hubs.
pub fn hub_lower_bound(g: &Graph, k: usize, hubs: &[usize]) -> usize {
    let mut best = trivial_lower_bound(g.n(), k);
    for (i, &u) in hubs.iter().enumerate() {
        best = best.max(star_lower_bound(g, k, u));
        for &v in &hubs[i + 1..] {
            best = best.max(bihub_lower_bound(g, k, u, v));
        }
    }
    best
}
