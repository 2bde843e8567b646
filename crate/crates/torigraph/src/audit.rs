//! Minimality audit: does any proper induced subgraph also lack a
//! quadratic basis while being quadratically generated?
//!
//! Only connected induced subgraphs are examined. The toric ideal of a
//! disjoint union is the sum of the components' ideals in disjoint
//! variables, so a disconnected subgraph can satisfy the condition only if
//! one of its components, itself a smaller connected induced subgraph,
//! does.

use std::collections::BTreeMap;

use torigraph_core::criterion::is_quadratically_generated;
use torigraph_core::{canonical_labeling, graph6_encode, Graph};

use crate::evidence::{assess, graph_seed, Budget, Evidence};
use crate::PipelineError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphEvidence {
    NotQuadGenerated,
    ZeroIdeal,
    QuadraticGb {
        weights: Vec<i64>,
    },
    /// The subgraph itself satisfies the condition: its complete fan has
    /// no quadratic basis.
    CertifiedStar {
        fan_size: usize,
    },
    Unresolved,
}

impl SubgraphEvidence {
    fn label(&self) -> &'static str {
        match self {
            SubgraphEvidence::NotQuadGenerated => "NOT_QUAD_GENERATED",
            SubgraphEvidence::ZeroIdeal => "ZERO_IDEAL",
            SubgraphEvidence::QuadraticGb { .. } => "HAS_QUADRATIC_GB",
            SubgraphEvidence::CertifiedStar { .. } => "CERTIFIED_STAR",
            SubgraphEvidence::Unresolved => "UNRESOLVED",
        }
    }
}

impl std::fmt::Display for SubgraphEvidence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubgraphEvidence::QuadraticGb { weights } => write!(f, "{} {weights:?}", self.label()),
            SubgraphEvidence::CertifiedStar { fan_size } => {
                write!(f, "{} fan_size={fan_size}", self.label())
            }
            _ => f.write_str(self.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub graph6: String,
    /// `Some(true)` when every proper connected induced subgraph fails the
    /// condition with positive evidence, `Some(false)` when one is
    /// certified to satisfy it, `None` otherwise.
    pub minimal: Option<bool>,
    /// Keyed by canonical graph6.
    pub subgraphs: BTreeMap<String, SubgraphEvidence>,
}

/// Audits `g`, which must itself be quadratically generated with no
/// quadratic basis found under `budget`.
pub fn star_minimal_audit(
    g: &Graph,
    budget: &Budget,
    seed: u64,
) -> Result<AuditReport, PipelineError> {
    let (canon, _) = canonical_labeling(g);
    let graph6 = graph6_encode(&canon);
    let own = assess(
        &canon,
        &is_quadratically_generated(&canon)?,
        graph_seed(seed, &graph6),
        budget,
    )?;
    if own.excludes() {
        return Err(PipelineError::Precondition(format!(
            "{graph6} is not a star candidate: {own:?}"
        )));
    }
    let n = canon.n();
    let full = (1u16 << n) - 1;
    let mut subs: BTreeMap<String, Graph> = BTreeMap::new();
    for mask in 1..full {
        let h = canon.induced_by_mask(mask)?;
        if h.is_connected() {
            let (hc, _) = canonical_labeling(&h);
            subs.entry(graph6_encode(&hc)).or_insert(hc);
        }
    }
    let mut subgraphs = BTreeMap::new();
    for (key, h) in subs {
        let report = is_quadratically_generated(&h)?;
        let ev = match assess(&h, &report, graph_seed(seed, &key), budget)? {
            Evidence::NotQuadGenerated => SubgraphEvidence::NotQuadGenerated,
            Evidence::ZeroIdeal => SubgraphEvidence::ZeroIdeal,
            Evidence::Quadratic { weights, .. } => SubgraphEvidence::QuadraticGb { weights },
            Evidence::Certified { fan_size } => SubgraphEvidence::CertifiedStar { fan_size },
            Evidence::Unresolved { .. } => SubgraphEvidence::Unresolved,
        };
        subgraphs.insert(key, ev);
    }
    let values = || subgraphs.values();
    let minimal = if values().any(|e| matches!(e, SubgraphEvidence::CertifiedStar { .. })) {
        Some(false)
    } else if values().any(|e| *e == SubgraphEvidence::Unresolved) {
        None
    } else {
        Some(true)
    };
    Ok(AuditReport {
        graph6,
        minimal,
        subgraphs,
    })
}
