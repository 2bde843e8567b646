//! Per-n summary counts of classification records.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::record::{ClassificationRecord, Status};
use crate::PipelineError;

/// Connected graphs up to isomorphism on 1..=8 vertices.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

pub const CSV_HEADER: &str = "n,connected,quad_generated,zero_ideals,star,star_deg1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub total_connected: usize,
    /// Includes the zero ideals.
    pub quad_generated: usize,
    pub zero_ideals: usize,
    /// Graphs with no known quadratic basis, certified or not.
    pub star_count: usize,
    /// Those of `star_count` with a vertex of degree 1.
    pub star_with_degree1: usize,
}

/// One row per vertex count, ascending. Records for each `n` must cover
/// every connected graph exactly once and come from a single run seed.
pub fn table1(records: &[ClassificationRecord]) -> Result<Vec<TableRow>, PipelineError> {
    let mut by_n: BTreeMap<usize, Vec<&ClassificationRecord>> = BTreeMap::new();
    for r in records {
        r.validate()?;
        by_n.entry(r.n).or_default().push(r);
    }
    let mut rows = Vec::new();
    for (n, recs) in by_n {
        let incomplete = |reason: String| PipelineError::IncompleteRecords { n, reason };
        let distinct: BTreeSet<&str> = recs.iter().map(|r| r.graph6.as_str()).collect();
        if distinct.len() != recs.len() {
            return Err(incomplete("duplicate graphs".into()));
        }
        let seeds: BTreeSet<u64> = recs.iter().map(|r| r.seed).collect();
        if seeds.len() > 1 {
            return Err(incomplete(format!("mixed seeds {seeds:?}")));
        }
        let expected = CONNECTED_COUNTS
            .get(n.wrapping_sub(1))
            .ok_or_else(|| incomplete("vertex count outside 1..=8".into()))?;
        if recs.len() != *expected {
            return Err(incomplete(format!(
                "{} records, expected {expected}",
                recs.len()
            )));
        }
        let count =
            |p: &dyn Fn(&ClassificationRecord) -> bool| recs.iter().filter(|r| p(r)).count();
        rows.push(TableRow {
            n,
            total_connected: recs.len(),
            quad_generated: count(&|r| r.quad_generated()),
            zero_ideals: count(&|r| r.status == Status::ZeroIdeal),
            star_count: count(&|r| r.status.is_star()),
            star_with_degree1: count(&|r| r.status.is_star() && r.min_degree == 1),
        });
    }
    Ok(rows)
}

/// CSV text with [`CSV_HEADER`] and one line per row.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.total_connected,
            r.quad_generated,
            r.zero_ideals,
            r.star_count,
            r.star_with_degree1
        ));
    }
    out
}
