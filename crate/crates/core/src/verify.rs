//! Independent re-checking of certificates.

use thiserror::Error;

use crate::approx4::{
    case1_threshold, case2_threshold, case3_threshold, classify_case, largest_piece, try_merge4, try_pull4,
};
use crate::bounds::{hub_lower_bound, star_lower_bound};
use crate::certificate::{BiStarBasis, Certificate, CertificateKind};
use crate::graph::Graph;
use crate::oracle::{exact_opt, ORACLE_LIMIT};
use crate::partition::{check_feasible, Partition};

/// A passing check, with the lower bound on the optimum it relied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verified {
    pub lower_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate rejected: {0}")]
pub struct Rejected(pub String);

fn reject<T>(why: impl Into<String>) -> Result<T, Rejected> {
    Err(Rejected(why.into()))
}

/// Re-derives the witness of `c` from the graph and checks that the partition
/// size is within the witnessed ratio of a lower bound on the optimum.
pub fn verify_certificate(g: &Graph, p: &Partition, c: &Certificate) -> Result<Verified, Rejected> {
    if let Err(e) = check_feasible(g, p.parts()) {
        return reject(format!("infeasible partition: {e}"));
    }
    let n = g.n();
    let k = p.k();
    let size = p.size();
    for &h in &c.hubs() {
        if h >= n {
            return reject(format!("hub {h} out of range"));
        }
    }
    let lower_bound = match &c.kind {
        CertificateKind::BoundMet { bound } => {
            if size as u64 * bound.denom() > bound.numer() * n as u64 {
                return reject(format!("size {size} exceeds {bound} of n = {n}"));
            }
            hub_lower_bound(g, k, &[])
        }
        CertificateKind::StarOptimal { center } => {
            if p.parts()[p.part_of(*center)].len() != size {
                return reject(format!("center {center} is not in a largest part"));
            }
            let lb = star_lower_bound(g, k, *center);
            if lb < size {
                return reject(format!("star bound {lb} at {center} is below size {size}"));
            }
            lb
        }
        CertificateKind::OracleExact => {
            if n > ORACLE_LIMIT {
                return reject("instance too large to re-run the oracle");
            }
            let (opt, _) = exact_opt(g, k).map_err(|e| Rejected(e.to_string()))?;
            if opt != size {
                return reject(format!("oracle optimum {opt} differs from size {size}"));
            }
            opt
        }
        CertificateKind::BiStarRatio {
            case, u, v, basis, ..
        } => {
            check_bistar(g, p, *case, *u, *v, *basis)?;
            hub_lower_bound(g, k, &c.hubs())
        }
    };
    let r = c.witness_ratio(k);
    if size as u64 * r.denom() > r.numer() * lower_bound as u64 {
        return reject(format!("size {size} exceeds {r} times lower bound {lower_bound}"));
    }
    Ok(Verified { lower_bound })
}

fn check_bistar(
    g: &Graph,
    p: &Partition,
    case: u8,
    u: Option<usize>,
    v: Option<usize>,
    basis: BiStarBasis,
) -> Result<(), Rejected> {
    let [v1, v2, v3, v4] = p.parts() else {
        return reject("bi-star witness needs four parts");
    };
    let n = g.n();
    let (s1, s2, s4) = (v1.len(), v2.len(), v4.len());
    if 5 * s4 <= 2 * n {
        return reject("largest part is within 2n/5; a bound certificate applies");
    }
    if try_merge4(g, p).is_some() || try_pull4(g, p).is_some() {
        return reject("a Merge or Pull still applies");
    }
    let (s, early) = classify_case(g, p).map_err(|e| Rejected(e.to_string()))?;
    if s.case != case {
        return reject(format!("recomputed case {} differs from {case}", s.case));
    }
    if basis == BiStarBasis::LargeSecond {
        if 6 * s2 < s4 {
            return reject("second part is not large");
        }
        return Ok(());
    }
    if early.is_some() {
        return reject("an earlier certificate applies");
    }
    let same = |claimed: Option<usize>, found: Option<usize>, name: &str| {
        if claimed.is_some() && claimed == found {
            Ok(())
        } else {
            reject(format!("hub {name} does not match the attachment vertex"))
        }
    };
    let inside = |x: Option<usize>, part: &crate::vertex_set::VertexSet, name: &str| match x {
        Some(x) if part.contains(x) => Ok(x),
        _ => reject(format!("hub {name} missing or in the wrong part")),
    };
    let both = v3.union(v4);
    match (basis, case) {
        (BiStarBasis::Threshold, 1) => {
            same(u, s.u, "u")?;
            if !case1_threshold(g, p, u.unwrap()) {
                return reject("threshold not met");
            }
        }
        (BiStarBasis::Threshold, 2) => {
            same(v, s.v, "v")?;
            if !case2_threshold(g, p, v.unwrap()) {
                return reject("threshold not met");
            }
        }
        (BiStarBasis::Threshold, 3) => {
            same(u, s.u, "u")?;
            same(v, s.v, "v")?;
            if !case3_threshold(g, p, &s, u.unwrap(), v.unwrap()) {
                return reject("threshold not met");
            }
        }
        (BiStarBasis::BridgeStall, 1) => {
            same(u, s.u, "u")?;
            let v = inside(v, v3, "v")?;
            if largest_piece(g, &g.vertices(), u.unwrap(), v) > (3 * s1).max(s2) {
                return reject("a piece off both hubs is too large");
            }
        }
        (BiStarBasis::BridgeStall, 2) => {
            same(v, s.v, "v")?;
            let u = inside(u, v4, "u")?;
            if largest_piece(g, &both, u, v.unwrap()) > (3 * s1).max(s2) {
                return reject("a piece off both hubs is too large");
            }
        }
        (BiStarBasis::BridgeStall, 3) => {
            same(u, s.u, "u")?;
            same(v, s.v, "v")?;
            if largest_piece(g, &both, u.unwrap(), v.unwrap()) > s1 + s2 {
                return reject("a piece off both hubs is too large");
            }
        }
        (BiStarBasis::HubOnly, 2) => {
            same(v, s.v, "v")?;
            let u = inside(u, v4, "u")?;
            if g.touches(v3, &v4.without(u)) {
                return reject("V3 meets V4 away from the hub");
            }
            if 3 * largest_piece(g, &both, u, v.unwrap()) >= s4 {
                return reject("a piece off both hubs is too large");
            }
        }
        _ => return reject(format!("basis {basis:?} does not apply to case {case}")),
    }
    Ok(())
}
