//! Operation log and the checked application of local moves.

use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{check_feasible, Partition, Rank};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OpKind {
    Merge,
    Pull,
    Bridge1,
    Bridge2,
    Bridge3,
    /// Balanced bipartition of the unstructured large part, followed by a
    /// regrouping of hub components.
    Rebalance,
    Split,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub kind: OpKind,
    /// Parts that did not exist before the step.
    pub created: Vec<VertexSet>,
    pub rank_before: Rank,
    pub rank_after: Rank,
    #[serde(skip)]
    pub parts_after: Partition,
}

#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub partition: Partition,
    pub certificate: Certificate,
    pub trace: Vec<TraceRecord>,
}

impl Solution {
    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn ops(&self) -> usize {
        self.trace.len()
    }
}

/// A partition being improved, with its log.
pub(crate) struct Run<'g> {
    pub g: &'g Graph,
    pub p: Partition,
    pub trace: Vec<TraceRecord>,
}

impl<'g> Run<'g> {
    pub fn new(g: &'g Graph, p: Partition) -> Self {
        Run {
            g,
            p,
            trace: Vec::new(),
        }
    }

    /// Replaces the partition after checking feasibility and progress.
    pub fn apply(&mut self, kind: OpKind, parts: Vec<VertexSet>) -> Result<()> {
        check_feasible(self.g, &parts)
            .map_err(|e| Error::StructureViolation(format!("{kind:?} produced an infeasible partition: {e}")))?;
        let next = Partition::sorted(parts);
        let before = self.p.rank();
        let after = next.rank();
        let progress = if kind == OpKind::Split {
            after.largest() <= before.largest()
        } else {
            after.sizes().len() == before.sizes().len() && after < before
        };
        if !progress {
            return Err(Error::StructureViolation(format!(
                "{kind:?} did not improve {before} (got {after})"
            )));
        }
        let created = next
            .parts()
            .iter()
            .filter(|q| !self.p.parts().contains(q))
            .cloned()
            .collect();
        self.trace.push(TraceRecord {
            kind,
            created,
            rank_before: before,
            rank_after: after,
            parts_after: next.clone(),
        });
        self.p = next;
        Ok(())
    }

    pub fn finish(self, certificate: Certificate) -> Solution {
        Solution {
            partition: self.p,
            certificate,
            trace: self.trace,
        }
    }
}
