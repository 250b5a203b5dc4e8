//! Pull search shared by the three- and four-part algorithms, and the
//! balanced-or-star bipartition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Move `chunk` out of `parts[donor]` into `parts[receiver]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PullMove {
    pub donor: usize,
    pub receiver: usize,
    pub chunk: VertexSet,
}

impl PullMove {
    pub fn apply(&self, parts: &[VertexSet]) -> Vec<VertexSet> {
        let mut out = parts.to_vec();
        out[self.donor] = parts[self.donor].difference(&self.chunk);
        out[self.receiver] = parts[self.receiver].union(&self.chunk);
        out
    }
}

pub(crate) fn pull_is_valid(g: &Graph, donor: &VertexSet, receiver: &VertexSet, chunk: &VertexSet) -> bool {
    if chunk.is_empty() || !chunk.is_subset(donor) || chunk.len() >= donor.len() {
        return false;
    }
    if receiver.len() + chunk.len() >= donor.len() {
        return false;
    }
    let rest = donor.difference(chunk);
    g.touches(chunk, receiver) && g.connected(chunk) && g.connected(&rest)
}

/// Caches the components of `donor - x` per cut vertex.
struct Cuts<'a> {
    g: &'a Graph,
    donor: &'a VertexSet,
    cache: BTreeMap<usize, Vec<VertexSet>>,
}

impl<'a> Cuts<'a> {
    fn components(&mut self, x: usize) -> &[VertexSet] {
        let (g, donor) = (self.g, self.donor);
        self.cache
            .entry(x)
            .or_insert_with(|| g.components_of_subset(&donor.without(x)))
    }
}

/// Candidate chunks around cut vertex `x`, in order: the vertex itself
/// (only if `with_single`), components touching the receiver, then
/// complements of components larger than the receiver.
fn candidates(cuts: &mut Cuts<'_>, x: usize, receiver: &VertexSet, with_single: bool) -> Vec<VertexSet> {
    let g = cuts.g;
    let donor = cuts.donor.clone();
    let comps = cuts.components(x);
    let mut out = Vec::new();
    if with_single && comps.len() == 1 {
        out.push(VertexSet::singleton(donor.universe(), x));
    }
    out.extend(comps.iter().filter(|c| g.touches(c, receiver)).cloned());
    out.extend(
        comps
            .iter()
            .filter(|c| c.len() > receiver.len())
            .map(|c| donor.difference(c)),
    );
    out
}

/// First applicable pull from `parts[donor]` into any of `receivers`.
///
/// Crossing edges into the receivers are tried first, ascending; then every
/// donor vertex with a neighbor in another part serves as a cut vertex.
pub(crate) fn find_pull(g: &Graph, parts: &[VertexSet], donor: usize, receivers: &[usize]) -> Option<PullMove> {
    let d = &parts[donor];
    let mut cuts = Cuts {
        g,
        donor: d,
        cache: BTreeMap::new(),
    };
    let mut crossing: Vec<(usize, usize, usize)> = Vec::new();
    for x in d.iter() {
        for &y in g.neighbors(x) {
            if let Some(&r) = receivers.iter().find(|&&r| parts[r].contains(y)) {
                crossing.push((x, y, r));
            }
        }
    }
    for &(x, _, r) in &crossing {
        for chunk in candidates(&mut cuts, x, &parts[r], true) {
            if pull_is_valid(g, d, &parts[r], &chunk) {
                return Some(PullMove {
                    donor,
                    receiver: r,
                    chunk,
                });
            }
        }
    }
    let others: Vec<usize> = (0..parts.len()).filter(|&i| i != donor).collect();
    for x in d.iter() {
        if !others.iter().any(|&o| g.vertex_touches(x, &parts[o])) {
            continue;
        }
        for &r in receivers {
            for chunk in candidates(&mut cuts, x, &parts[r], false) {
                if pull_is_valid(g, d, &parts[r], &chunk) {
                    return Some(PullMove {
                        donor,
                        receiver: r,
                        chunk,
                    });
                }
            }
        }
    }
    None
}

/// Outcome of [`bipartition_or_star`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bisection {
    /// `(smaller, larger)` with the larger side at most two thirds of the set.
    Balanced(VertexSet, VertexSet),
    /// Every component of the set minus this vertex is below a third of it.
    Star(usize),
}

/// Splits `G[s]` into two connected sides with the larger one at most
/// `2|s|/3`, or finds a vertex whose removal leaves only pieces smaller than
/// `|s|/3`.
pub fn bipartition_or_star(g: &Graph, s: &VertexSet) -> Result<Bisection> {
    if s.len() < 3 {
        return Err(Error::SubsetTooSmall { size: s.len(), min: 3 });
    }
    let (a, b) = g.most_balanced_tree_cut(s)?;
    let mut sides = vec![a, b];
    while 3 * sides[1].len() > 2 * s.len() {
        match find_pull(g, &sides, 1, &[0]) {
            Some(mv) => {
                let mut next = mv.apply(&sides);
                next.sort_by_key(VertexSet::size_key);
                sides = next;
            }
            None => break,
        }
    }
    if 3 * sides[1].len() <= 2 * s.len() {
        let b = sides.pop().unwrap();
        let a = sides.pop().unwrap();
        return Ok(Bisection::Balanced(a, b));
    }
    let (small, large) = (&sides[0], &sides[1]);
    let hub = large
        .iter()
        .find(|&x| g.vertex_touches(x, small))
        .ok_or_else(|| Error::StructureViolation("bipartition sides do not touch".into()))?;
    let pieces = g.components_of_subset(&s.without(hub));
    if pieces.len() < 2 || pieces.iter().any(|c| 3 * c.len() >= s.len()) {
        return Err(Error::StructureViolation(format!(
            "bipartition stalled but vertex {hub} is not a star center"
        )));
    }
    Ok(Bisection::Star(hub))
}
