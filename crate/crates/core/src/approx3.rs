//! Three-part local improvement: Merge and Pull until the largest part is at
//! most half the graph or a star structure certifies optimality.

use crate::certificate::{ratio, Certificate, CertificateKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local::find_pull;
use crate::oracle;
use crate::partition::{initial_partition, Partition};
use crate::trace::{OpKind, Run, Solution};
use crate::vertex_set::VertexSet;

/// The configuration in which neither Merge nor Pull applies while the
/// largest part exceeds `n/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StallStructure3 {
    pub center: usize,
    /// Components of `G[V3 - center]`, by smallest vertex.
    pub hub_components: Vec<VertexSet>,
}

/// Fuses `V1` and `V2` when adjacent and splits `V3` in two.
pub fn try_merge3(g: &Graph, p: &Partition) -> Option<Partition> {
    let [v1, v2, v3] = p.parts() else {
        return None;
    };
    if !g.touches(v1, v2) {
        return None;
    }
    let (a, b) = g.most_balanced_tree_cut(v3).ok()?;
    Some(Partition::sorted(vec![v1.union(v2), a, b]))
}

/// Moves a connected chunk of `V3` into `V1` or `V2`.
pub fn try_pull3(g: &Graph, p: &Partition) -> Option<Partition> {
    if p.k() != 3 {
        return None;
    }
    let mv = find_pull(g, p.parts(), 2, &[0, 1])?;
    Some(Partition::sorted(mv.apply(p.parts())))
}

/// Extracts and checks the stall structure: `V1`, `V2` non-adjacent, all
/// their edges into `V3` land on one vertex `u`, and `G[V3 - u]` splits into
/// at least two components, each no larger than `V1` and touching neither
/// small part.
pub fn stall_structure3(g: &Graph, p: &Partition) -> Result<StallStructure3> {
    let fail = |m: String| Err(Error::StructureViolation(m));
    let [v1, v2, v3] = p.parts() else {
        return fail("expected three parts".into());
    };
    if g.touches(v1, v2) {
        return fail("V1 and V2 are adjacent".into());
    }
    let small = v1.union(v2);
    let attach: Vec<usize> = v3.iter().filter(|&x| g.vertex_touches(x, &small)).collect();
    let &[center] = attach.as_slice() else {
        return fail(format!("small parts attach to {attach:?}"));
    };
    let hub_components = g.components_of_subset(&v3.without(center));
    if hub_components.len() < 2 {
        return fail(format!("V3 - {center} is connected"));
    }
    for c in &hub_components {
        if c.len() > v1.len() || g.touches(c, &small) {
            return fail(format!("hub component {c:?} is too large or touches a small part"));
        }
    }
    Ok(StallStructure3 { center, hub_components })
}

pub(crate) fn oracle_solution(g: &Graph, k: usize, bound: (u64, u64), claimed: (u64, u64)) -> Solution {
    let (size, p) = oracle::solve(g, k);
    let kind = if size as u64 * bound.1 <= bound.0 * g.n() as u64 {
        CertificateKind::BoundMet {
            bound: ratio(bound.0, bound.1),
        }
    } else {
        CertificateKind::OracleExact
    };
    Solution {
        partition: p,
        certificate: Certificate::new(kind, ratio(claimed.0, claimed.1)),
        trace: Vec::new(),
    }
}

/// Runs the three-part algorithm; the result is within 3/2 of optimal.
pub fn approx3(g: &Graph) -> Result<Solution> {
    let n = g.n();
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    if n < 5 {
        return Ok(oracle_solution(g, 3, (1, 2), (3, 2)));
    }
    let mut run = Run::new(g, initial_partition(g, 3)?);
    let kind = loop {
        if 2 * run.p.size() <= n {
            break CertificateKind::BoundMet { bound: ratio(1, 2) };
        }
        if let Some(q) = try_merge3(g, &run.p) {
            run.apply(OpKind::Merge, q.into_parts())?;
        } else if let Some(q) = try_pull3(g, &run.p) {
            run.apply(OpKind::Pull, q.into_parts())?;
        } else {
            let s = stall_structure3(g, &run.p)?;
            break CertificateKind::StarOptimal { center: s.center };
        }
    };
    Ok(run.finish(Certificate::new(kind, ratio(3, 2))))
}
