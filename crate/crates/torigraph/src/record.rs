//! Per-graph classification records and their JSONL form.

use serde::{Deserialize, Serialize};

use crate::PipelineError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    NotQuadGenerated,
    ZeroIdeal,
    HasQuadraticGb,
    /// Quadratically generated, no quadratic basis found, fan not closed.
    SurvivedSearch,
    /// Quadratically generated and the complete fan has no quadratic basis.
    CertifiedStar,
}

impl Status {
    /// Quadratic generation holds and no quadratic basis is known.
    pub fn is_star(self) -> bool {
        matches!(self, Status::SurvivedSearch | Status::CertifiedStar)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub bipartite: bool,
    pub chordal: bool,
    pub co_chordal: bool,
    pub twok2_free: bool,
    pub zero_ideal: bool,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub status: Status,
    pub witness_weights: Option<Vec<i64>>,
    pub iterations_survived: Option<usize>,
    pub fan_size: Option<usize>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl ClassificationRecord {
    pub fn quad_generated(&self) -> bool {
        self.zero_ideal || (self.cond_i && self.cond_ii && self.cond_iii)
    }

    /// Checks that the status agrees with the flags and evidence fields.
    pub fn validate(&self) -> Result<(), PipelineError> {
        let bad = |why: &str| {
            Err(PipelineError::InvalidRecord {
                graph6: self.graph6.clone(),
                reason: why.to_string(),
            })
        };
        let evidence = self.witness_weights.is_some()
            || self.iterations_survived.is_some()
            || self.fan_size.is_some();
        match self.status {
            Status::NotQuadGenerated => {
                if self.quad_generated() || evidence {
                    return bad("NOT_QUAD_GENERATED with quadratic generation or evidence");
                }
            }
            Status::ZeroIdeal => {
                if !self.zero_ideal || evidence {
                    return bad("ZERO_IDEAL without a zero ideal or with evidence");
                }
            }
            Status::HasQuadraticGb => {
                if self.zero_ideal || !self.quad_generated() {
                    return bad("HAS_QUADRATIC_GB on a graph that is not a candidate");
                }
                match &self.witness_weights {
                    Some(w) if w.len() == self.m => {}
                    _ => return bad("HAS_QUADRATIC_GB needs one witness weight per edge"),
                }
            }
            Status::SurvivedSearch => {
                if self.zero_ideal || !self.quad_generated() || self.iterations_survived.is_none() {
                    return bad("SURVIVED_SEARCH needs a candidate and iterations_survived");
                }
            }
            Status::CertifiedStar => {
                if self.zero_ideal || !self.quad_generated() || self.fan_size.is_none() {
                    return bad("CERTIFIED_STAR needs a candidate and fan_size");
                }
            }
        }
        Ok(())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// One JSON object per line, newline-terminated.
pub fn to_jsonl(records: &[ClassificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    out
}

/// Parses JSONL, skipping blank lines. Every record is validated.
pub fn from_jsonl(text: &str) -> Result<Vec<ClassificationRecord>, PipelineError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let r: ClassificationRecord =
            serde_json::from_str(line).map_err(|e| PipelineError::Parse {
                line: k + 1,
                message: e.to_string(),
            })?;
        r.validate()?;
        out.push(r);
    }
    Ok(out)
}
