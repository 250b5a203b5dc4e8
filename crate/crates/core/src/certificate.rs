//! Guarantees attached to algorithm outputs.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub type Ratio = num_rational::Ratio<u64>;

pub(crate) fn ratio(num: u64, den: u64) -> Ratio {
    Ratio::new(num, den)
}

/// Which argument justifies a bi-star ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BiStarBasis {
    /// `6|V2| >= |V4|`, so `|V4| <= 6n/13`.
    LargeSecond,
    /// The hub components touching the other large part are few.
    Threshold,
    /// No bridge applies, so every component off the two hubs is small.
    BridgeStall,
    /// `V3` meets `V4` only at the hub of `V4`.
    HubOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// `size <= bound * n`.
    BoundMet { bound: Ratio },
    /// Every part other than the one holding `center` is a union of whole
    /// components of `G - center`, so no partition can do better.
    StarOptimal { center: usize },
    BiStarRatio {
        ratio: Ratio,
        case: u8,
        u: Option<usize>,
        v: Option<usize>,
        basis: BiStarBasis,
    },
    /// Exhaustive search.
    OracleExact,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// The ratio the producing algorithm promises overall.
    pub claimed_ratio: Ratio,
}

impl Certificate {
    pub fn new(kind: CertificateKind, claimed_ratio: Ratio) -> Self {
        Certificate { kind, claimed_ratio }
    }

    pub fn tag(&self) -> &'static str {
        match self.kind {
            CertificateKind::BoundMet { .. } => "BoundMet",
            CertificateKind::StarOptimal { .. } => "StarOptimal",
            CertificateKind::BiStarRatio { .. } => "BiStarRatio",
            CertificateKind::OracleExact => "OracleExact",
        }
    }

    /// The ratio this particular witness establishes for a `k`-partition.
    pub fn witness_ratio(&self, k: usize) -> Ratio {
        match self.kind {
            CertificateKind::BoundMet { bound } => bound * Ratio::from_integer(k as u64),
            CertificateKind::StarOptimal { .. } | CertificateKind::OracleExact => Ratio::from_integer(1),
            CertificateKind::BiStarRatio { ratio, .. } => ratio,
        }
    }

    /// Hub vertices named by the witness.
    pub fn hubs(&self) -> Vec<usize> {
        match self.kind {
            CertificateKind::StarOptimal { center } => vec![center],
            CertificateKind::BiStarRatio { u, v, .. } => u.into_iter().chain(v).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CertificateKind::BoundMet { bound } => write!(f, "BoundMet({bound})"),
            CertificateKind::StarOptimal { center } => write!(f, "StarOptimal({center})"),
            CertificateKind::BiStarRatio { ratio, case, .. } => write!(f, "BiStarRatio({ratio},case{case})"),
            CertificateKind::OracleExact => write!(f, "OracleExact"),
        }
    }
}

#[derive(Serialize)]
struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<BiStarBasis>,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut w = Witness {
            bound: None,
            center: None,
            case: None,
            u: None,
            v: None,
            basis: None,
        };
        let ratio = match &self.kind {
            CertificateKind::BoundMet { bound } => {
                w.bound = Some(bound.to_string());
                self.claimed_ratio
            }
            CertificateKind::StarOptimal { center } => {
                w.center = Some(*center);
                Ratio::from_integer(1)
            }
            CertificateKind::BiStarRatio {
                ratio,
                case,
                u,
                v,
                basis,
            } => {
                w.case = Some(*case);
                w.u = *u;
                w.v = *v;
                w.basis = Some(*basis);
                *ratio
            }
            CertificateKind::OracleExact => Ratio::from_integer(1),
        };
        let mut s = serializer.serialize_struct("Certificate", 4)?;
        s.serialize_field("tag", self.tag())?;
        s.serialize_field("ratio", &ratio.to_string())?;
        s.serialize_field("claimed_ratio", &self.claimed_ratio.to_string())?;
        s.serialize_field("witness", &w)?;
        s.end()
    }
}

pub(crate) fn ser_ratio<S: Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}
