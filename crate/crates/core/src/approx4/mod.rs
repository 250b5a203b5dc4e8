//! Four-part local improvement within 24/13 of optimal: Merge and Pull
//! while the largest part exceeds `2n/5`, then a case analysis around the
//! hub vertices of the two large parts, with bridge moves between them.

mod bridge;

pub use bridge::{try_bridge1, try_bridge2, try_bridge3};

use crate::approx3::oracle_solution;
use crate::bounds::star_lower_bound;
use crate::certificate::{ratio, BiStarBasis, Certificate, CertificateKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local::{bipartition_or_star, find_pull, Bisection};
use crate::partition::{initial_partition, Partition};
use crate::trace::{OpKind, Run, Solution};
use crate::vertex_set::{total_len, union_all, VertexSet};

/// Shape of a four-part partition on which no Merge or Pull applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StallStructure4 {
    /// 1: small parts touch only `V4`; 2: only `V3`; 3: one on each.
    pub case: u8,
    /// Where the small parts attach to `V4`.
    pub u: Option<usize>,
    /// Where the small parts attach to `V3`.
    pub v: Option<usize>,
    /// Components of `G[V4 - u]`.
    pub comps4: Vec<VertexSet>,
    /// Components of `G[V3 - v]`.
    pub comps3: Vec<VertexSet>,
    /// Whether `V1`, `V2` touch `V3`.
    pub touches3: [bool; 2],
    /// Whether `V1`, `V2` touch `V4`.
    pub touches4: [bool; 2],
    /// In case 3, the index (0 or 1) of the small part hanging on `v`.
    pub i: usize,
}

/// Fuses two adjacent parts among the three smaller ones when their total is
/// below `|V4|`, and splits `V4`.
pub fn try_merge4(g: &Graph, p: &Partition) -> Option<Partition> {
    let parts = p.parts();
    if parts.len() != 4 {
        return None;
    }
    let s4 = parts[3].len();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if parts[i].len() + parts[j].len() < s4 && g.touches(&parts[i], &parts[j]) {
            let (a, b) = g.most_balanced_tree_cut(&parts[3]).ok()?;
            let other = 3 - i - j;
            return Some(Partition::sorted(vec![parts[i].union(&parts[j]), parts[other].clone(), a, b]));
        }
    }
    None
}

/// Moves a connected chunk from a larger part into a smaller one, trying the
/// pairs `(1,3), (1,4), (2,3), (2,4), (3,4)` in order.
pub fn try_pull4(g: &Graph, p: &Partition) -> Option<Partition> {
    if p.k() != 4 {
        return None;
    }
    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        if let Some(mv) = find_pull(g, p.parts(), j, &[i]) {
            return Some(Partition::sorted(mv.apply(p.parts())));
        }
    }
    None
}

fn violation<T>(what: String) -> Result<T> {
    Err(Error::StructureViolation(what))
}

fn attachments(g: &Graph, part: &VertexSet, small: &VertexSet) -> Vec<usize> {
    part.iter().filter(|&x| g.vertex_touches(x, small)).collect()
}

/// Checks that cutting `x` out of `big` leaves at least two pieces, none
/// larger than `small` and none touching it.
fn hub_pieces_ok(g: &Graph, big: &VertexSet, x: usize, small: &VertexSet) -> bool {
    let pieces = g.components_of_subset(&big.without(x));
    pieces.len() >= 2 && pieces.iter().all(|c| c.len() <= small.len() && !g.touches(c, small))
}

fn single(mut xs: Vec<usize>) -> Option<usize> {
    xs.sort_unstable();
    xs.dedup();
    match xs.as_slice() {
        &[x] => Some(x),
        _ => None,
    }
}

/// Checks the stall properties and sorts the stall into one of three cases.
///
/// Returns an early certificate when the partition is already provably good:
/// a hub whose star bound meets `|V4|`, or `6|V2| >= |V4|`.
pub fn classify_case(g: &Graph, p: &Partition) -> Result<(StallStructure4, Option<CertificateKind>)> {
    let parts = p.parts();
    let [v1, v2, v3, v4] = parts else {
        return violation("expected four parts".into());
    };
    let n = g.n();
    let (s1, s2, s3, s4) = (v1.len(), v2.len(), v3.len(), v4.len());
    if 5 * s4 <= 2 * n {
        return violation("largest part is already within 2n/5".into());
    }
    if !(5 * s1 < n && 10 * s2 < 3 * n && 5 * (s1 + s2) < 2 * n) || g.touches(v1, v2) {
        return violation(format!("small parts {s1}, {s2} too large or adjacent"));
    }
    let small = [v1, v2];
    let touches3 = [g.touches(v1, v3), g.touches(v2, v3)];
    let touches4 = [g.touches(v1, v4), g.touches(v2, v4)];
    let attach3: Vec<Vec<usize>> = small.iter().map(|s| attachments(g, v3, s)).collect();
    let attach4: Vec<Vec<usize>> = small.iter().map(|s| attachments(g, v4, s)).collect();
    for i in 0..2 {
        if touches3[i] && small[i].len() + s3 < s4 {
            return violation(format!("V{} touches V3 but falls short of |V4|", i + 1));
        }
        if touches4[i] {
            for &x in &attach4[i] {
                if !hub_pieces_ok(g, v4, x, small[i]) {
                    return violation(format!("V4 is not a star at {x} toward V{}", i + 1));
                }
                for c in g.components_of_subset(&v4.without(x)) {
                    if g.touches(&c, v3) && c.len() + s3 < s4 {
                        return violation(format!("a piece of V4 - {x} could be pulled into V3"));
                    }
                }
            }
        }
        if touches3[i] && 3 * small[i].len() < s4 {
            for &x in &attach3[i] {
                if !hub_pieces_ok(g, v3, x, small[i]) {
                    return violation(format!("V3 is not a star at {x} toward V{}", i + 1));
                }
            }
        }
    }
    let all3: Vec<usize> = attach3.concat();
    let all4: Vec<usize> = attach4.concat();
    if touches3 == [true, true] && single(all3.clone()).is_none() {
        return violation("small parts attach to V3 at several vertices".into());
    }
    if touches4 == [true, true] && single(all4.clone()).is_none() {
        return violation("small parts attach to V4 at several vertices".into());
    }
    let u = single(all4);
    let v = single(all3);
    let case = if touches3 == [false, false] {
        1
    } else if touches4 == [false, false] {
        2
    } else {
        3
    };
    let i = if touches3[0] && touches4[1] { 0 } else { 1 };
    let structure = StallStructure4 {
        case,
        u,
        v,
        comps4: u.map_or_else(Vec::new, |u| g.components_of_subset(&v4.without(u))),
        comps3: v.map_or_else(Vec::new, |v| g.components_of_subset(&v3.without(v))),
        touches3,
        touches4,
        i,
    };
    for hub in [u, v].into_iter().flatten() {
        if parts[p.part_of(hub)].len() == s4 && star_lower_bound(g, 4, hub) >= s4 {
            return Ok((structure, Some(CertificateKind::StarOptimal { center: hub })));
        }
    }
    if 6 * s2 >= s4 {
        let early = CertificateKind::BiStarRatio {
            ratio: ratio(24, 13),
            case,
            u,
            v,
            basis: BiStarBasis::LargeSecond,
        };
        return Ok((structure, Some(early)));
    }
    if !(s2 + s3 >= s4 && 2 * s4 < n && 3 * s3 > n) {
        return violation(format!("size balance fails for ranks {}", p.rank()));
    }
    let ok = match case {
        1 => u.is_some(),
        2 => v.is_some(),
        _ => u.is_some() && v.is_some() && touches3[i] && touches4[1 - i],
    };
    if !ok {
        return violation(format!("case {case} without its hub vertices"));
    }
    Ok((structure, None))
}

/// Union of the pieces of `G[base - hub]` that touch `other`.
pub(crate) fn touching_pieces(g: &Graph, base: &VertexSet, hub: usize, other: &VertexSet) -> VertexSet {
    let pieces = g.components_of_subset(&base.without(hub));
    union_all(g.n(), pieces.iter().filter(|c| g.touches(c, other)))
}

/// `24|side| <= 24*small + a*|V4|`.
fn within(side: usize, small: usize, a: usize, s4: usize) -> bool {
    24 * side <= 24 * small + a * s4
}

/// Threshold test of case 1: the pieces of `V4 - u` touching `V3` are few.
pub(crate) fn case1_threshold(g: &Graph, p: &Partition, u: usize) -> bool {
    let [v1, v2, v3, v4] = p.parts() else { return false };
    within(touching_pieces(g, v4, u, v3).len(), v1.len() + v2.len(), 11, v4.len())
}

pub(crate) fn case2_threshold(g: &Graph, p: &Partition, v: usize) -> bool {
    let [_, v2, v3, v4] = p.parts() else { return false };
    within(touching_pieces(g, v3, v, v4).len(), v2.len(), 11, v4.len())
}

pub(crate) fn case3_threshold(g: &Graph, p: &Partition, s: &StallStructure4, u: usize, v: usize) -> bool {
    let parts = p.parts();
    let (vi, vj, v3, v4) = (&parts[s.i], &parts[1 - s.i], &parts[2], &parts[3]);
    let side3 = touching_pieces(g, &v3.union(vi), v, v4).len();
    let side4 = touching_pieces(g, &v4.union(vj), u, v3).len();
    within(side3, vi.len(), 7, v4.len()) || within(side4, vj.len(), 11, v4.len())
}

/// Largest component of `G[keep - {u, v}]`.
pub(crate) fn largest_piece(g: &Graph, keep: &VertexSet, u: usize, v: usize) -> usize {
    let rest = keep.without(u).without(v);
    g.components_of_subset(&rest).iter().map(|c| c.len()).max().unwrap_or(0)
}

enum Step {
    Applied,
    Done(CertificateKind),
}

fn bistar(ratio_: (u64, u64), case: u8, u: Option<usize>, v: Option<usize>, basis: BiStarBasis) -> Step {
    Step::Done(CertificateKind::BiStarRatio {
        ratio: ratio(ratio_.0, ratio_.1),
        case,
        u,
        v,
        basis,
    })
}

/// Regroups after a balanced split of one large part: hub pieces of the other
/// large part touching one half are collected until they exceed `|V1|`.
///
/// `hub_part` is the part whose hub pieces move, `halves` the split of the
/// other large part.
fn rebalance(
    g: &Graph,
    p: &Partition,
    hub_part: &VertexSet,
    pieces: &[VertexSet],
    halves: [&VertexSet; 2],
) -> Option<Vec<VertexSet>> {
    let [v1, v2, ..] = p.parts() else { return None };
    for (h, half) in halves.iter().enumerate() {
        let mut taken = Vec::new();
        let mut acc = 0;
        for c in pieces.iter().filter(|c| g.touches(c, half)) {
            taken.push(c);
            acc += c.len();
            if acc > v1.len() {
                let moved = union_all(g.n(), taken.iter().copied());
                return Some(vec![
                    hub_part.union(v1).difference(&moved),
                    moved.union(half),
                    halves[1 - h].clone(),
                    v2.clone(),
                ]);
            }
        }
    }
    None
}

fn case1(run: &mut Run<'_>, mut s: StallStructure4) -> Result<Step> {
    let g = run.g;
    let p = run.p.clone();
    let u = s.u.expect("case 1 hub");
    if case1_threshold(g, &p, u) {
        return Ok(bistar((24, 13), 1, Some(u), None, BiStarBasis::Threshold));
    }
    let [v1, v2, v3, v4] = p.parts() else { unreachable!() };
    match bipartition_or_star(g, v3)? {
        Bisection::Balanced(a, b) => {
            let Some(parts) = rebalance(g, &p, v4, &s.comps4, [&a, &b]) else {
                return violation("balanced split of V3 gave no regrouping".into());
            };
            run.apply(OpKind::Rebalance, parts)?;
            Ok(Step::Applied)
        }
        Bisection::Star(v) => {
            s.v = Some(v);
            s.comps3 = g.components_of_subset(&v3.without(v));
            if let Some(q) = try_bridge1(g, &p, &s)? {
                run.apply(OpKind::Bridge1, q.into_parts())?;
                return Ok(Step::Applied);
            }
            let cap = (3 * v1.len()).max(v2.len());
            if largest_piece(g, &g.vertices(), u, v) > cap {
                return violation("bridge stalled with a large piece off both hubs".into());
            }
            Ok(bistar((12, 7), 1, Some(u), Some(v), BiStarBasis::BridgeStall))
        }
    }
}

fn case2(run: &mut Run<'_>, mut s: StallStructure4) -> Result<Step> {
    let g = run.g;
    let p = run.p.clone();
    let v = s.v.expect("case 2 hub");
    if case2_threshold(g, &p, v) {
        return Ok(bistar((24, 13), 2, None, Some(v), BiStarBasis::Threshold));
    }
    let [v1, v2, v3, v4] = p.parts() else { unreachable!() };
    match bipartition_or_star(g, v4)? {
        Bisection::Balanced(a, b) => {
            let Some(parts) = rebalance(g, &p, v3, &s.comps3, [&a, &b]) else {
                return violation("balanced split of V4 gave no regrouping".into());
            };
            run.apply(OpKind::Rebalance, parts)?;
            Ok(Step::Applied)
        }
        Bisection::Star(u) => {
            s.u = Some(u);
            s.comps4 = g.components_of_subset(&v4.without(u));
            if !g.touches(v3, &v4.without(u)) {
                return Ok(bistar((3, 2), 2, Some(u), Some(v), BiStarBasis::HubOnly));
            }
            if let Some(q) = try_bridge2(g, &p, &s)? {
                run.apply(OpKind::Bridge2, q.into_parts())?;
                return Ok(Step::Applied);
            }
            let cap = (3 * v1.len()).max(v2.len());
            if largest_piece(g, &v3.union(v4), u, v) > cap {
                return violation("bridge stalled with a large piece off both hubs".into());
            }
            Ok(bistar((12, 7), 2, Some(u), Some(v), BiStarBasis::BridgeStall))
        }
    }
}

fn case3(run: &mut Run<'_>, s: StallStructure4) -> Result<Step> {
    let g = run.g;
    let p = run.p.clone();
    let (u, v) = (s.u.expect("case 3 hub"), s.v.expect("case 3 hub"));
    if case3_threshold(g, &p, &s, u, v) {
        return Ok(bistar((24, 13), 3, Some(u), Some(v), BiStarBasis::Threshold));
    }
    if let Some(q) = try_bridge3(g, &p, &s)? {
        run.apply(OpKind::Bridge3, q.into_parts())?;
        return Ok(Step::Applied);
    }
    let [v1, v2, v3, v4] = p.parts() else { unreachable!() };
    if largest_piece(g, &v3.union(v4), u, v) > v1.len() + v2.len() {
        return violation("bridge stalled with a large piece off both hubs".into());
    }
    Ok(bistar((4, 3), 3, Some(u), Some(v), BiStarBasis::BridgeStall))
}

/// Runs the four-part algorithm from the default start.
pub fn approx4(g: &Graph) -> Result<Solution> {
    let n = g.n();
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    if n < 10 {
        return Ok(oracle_solution(g, 4, (2, 5), (24, 13)));
    }
    approx4_from(g, initial_partition(g, 4)?)
}

/// Runs the four-part algorithm from a given feasible start.
pub fn approx4_from(g: &Graph, start: Partition) -> Result<Solution> {
    let n = g.n();
    if start.k() != 4 {
        return Err(Error::MismatchedShape);
    }
    let mut run = Run::new(g, start);
    let kind = loop {
        if 5 * run.p.size() <= 2 * n {
            break CertificateKind::BoundMet { bound: ratio(2, 5) };
        }
        if let Some(q) = try_merge4(g, &run.p) {
            run.apply(OpKind::Merge, q.into_parts())?;
            continue;
        }
        if let Some(q) = try_pull4(g, &run.p) {
            run.apply(OpKind::Pull, q.into_parts())?;
            continue;
        }
        let (s, early) = classify_case(g, &run.p)?;
        if let Some(kind) = early {
            break kind;
        }
        let step = match s.case {
            1 => case1(&mut run, s)?,
            2 => case2(&mut run, s)?,
            _ => case3(&mut run, s)?,
        };
        if let Step::Done(kind) = step {
            break kind;
        }
    };
    debug_assert_eq!(total_len(run.p.parts()), n);
    Ok(run.finish(Certificate::new(kind, ratio(24, 13))))
}
