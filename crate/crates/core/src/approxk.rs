//! `k`-part partitions within `k/2` of optimal, built on the three-part
//! result.

use crate::approx3::{approx3, oracle_solution};
use crate::certificate::{ratio, Certificate, CertificateKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{split_largest, Partition};
use crate::trace::{OpKind, Run, Solution};
use crate::vertex_set::{union_all, VertexSet};

pub fn approx_k(g: &Graph, k: usize) -> Result<Solution> {
    let n = g.n();
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    if k > n {
        return Err(Error::KTooLarge { k, n });
    }
    let claimed = ratio(k as u64, 2);
    let half = CertificateKind::BoundMet { bound: ratio(1, 2) };
    if k == n {
        let singles = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
        return Ok(Solution {
            partition: Partition::sorted(singles),
            certificate: Certificate::new(half, claimed),
            trace: Vec::new(),
        });
    }
    if n < 5 {
        return Ok(oracle_solution(g, k, (1, 2), (k as u64, 2)));
    }
    let three = approx3(g)?;
    let mut run = Run::new(g, three.partition);
    run.trace = three.trace;
    let kind = match three.certificate.kind {
        CertificateKind::StarOptimal { center } => {
            let mut comps = g.components_of_subset(&g.vertices().without(center));
            comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.min().cmp(&b.min())));
            let l = comps.len();
            let keep = (k - 1).min(l - 1);
            let rest = union_all(n, &comps[keep..]);
            let mut parts: Vec<VertexSet> = comps[..keep].to_vec();
            let hub_part = rest.union(&VertexSet::singleton(n, center));
            parts.push(hub_part.clone());
            run.apply(OpKind::Split, parts)?;
            split_to(&mut run, k)?;
            if k <= l && hub_part.len() == run.p.size() {
                CertificateKind::StarOptimal { center }
            } else {
                half
            }
        }
        _ => {
            split_to(&mut run, k)?;
            half
        }
    };
    Ok(run.finish(Certificate::new(kind, claimed)))
}

fn split_to(run: &mut Run<'_>, k: usize) -> Result<()> {
    while run.p.k() < k {
        let next = split_largest(run.g, &run.p)?;
        run.apply(OpKind::Split, next.into_parts())?;
    }
    Ok(())
}
