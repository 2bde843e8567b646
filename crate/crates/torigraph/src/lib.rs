//! Classification of connected graphs by quadratic generation of their toric
//! ideals and existence of a quadratic Groebner basis, with the tables,
//! minimality audits and family checks built on top.

pub mod audit;
pub mod classify;
pub mod evidence;
pub mod family;
pub mod record;
pub mod table;

use thiserror::Error;
use torigraph_core::{CriterionError, EnumerateError, Graph, Graph6Error, GraphError};
use torigraph_toric::ToricError;

pub use audit::{star_minimal_audit, AuditReport, SubgraphEvidence};
pub use classify::{classify, classify_graph, ClassifyConfig};
pub use evidence::{assess, graph_seed, Budget, Evidence, Via};
pub use family::{family_check, FamilyReport};
pub use record::{from_jsonl, to_jsonl, ClassificationRecord, Status};
pub use table::{table1, table_csv, TableRow};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Criterion(#[from] CriterionError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error("vertex count {0} outside the supported range {1}")]
    OutOfRange(usize, &'static str),
    #[error("witness for {0} does not replay to a quadratic basis")]
    WitnessReplay(String),
    #[error("record {graph6}: {reason}")]
    InvalidRecord { graph6: String, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("records for n = {n}: {reason}")]
    IncompleteRecords { n: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Canonical graph6 string.
pub fn graph6(g: &Graph) -> String {
    torigraph_core::canonical_form(g).0
}

/// Applies `f` to every item on `jobs` worker threads; results keep the
/// input order, so the output does not depend on scheduling.
pub(crate) fn par_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;

    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_keeps_order() {
        let items: Vec<u64> = (0..100).collect();
        let one = par_map(&items, 1, |x| x * x);
        assert_eq!(one, par_map(&items, 7, |x| x * x));
        assert!(par_map(&Vec::<u8>::new(), 4, |x| *x).is_empty());
    }
}
