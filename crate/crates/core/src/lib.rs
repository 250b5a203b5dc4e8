//! Min-max balanced connected graph partition by local improvement, with an
//! exact solver for small graphs to compare against.

pub mod approx3;
pub mod approx4;
pub mod approxk;
pub mod bounds;
pub mod certificate;
pub mod corpus;
pub mod dot;
pub mod edgelist;
pub mod error;
pub mod generate;
pub mod graph;
pub mod local;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod trace;
pub mod verify;
pub mod vertex_set;

pub use approx3::approx3;
pub use approx4::{approx4, approx4_from, classify_case, StallStructure4};
pub use approxk::approx_k;
pub use certificate::{BiStarBasis, Certificate, CertificateKind, Ratio};
pub use dot::emit_dot;
pub use edgelist::{parse_edge_list, write_edge_list};
pub use error::{Error, Result};
pub use generate::{case_instance, generate, Family, GeneratorSpec};
pub use graph::Graph;
pub use local::{bipartition_or_star, Bisection};
pub use oracle::{exact_opt, exact_opt_with_limit, ORACLE_LIMIT};
pub use partition::{better_than, check_feasible, initial_partition, lower_bound, Partition, Rank};
pub use report::{ratio_report, Algo, Mode, Report, Row};
pub use trace::{OpKind, Solution, TraceRecord};
pub use verify::{verify_certificate, Rejected, Verified};
pub use vertex_set::VertexSet;
