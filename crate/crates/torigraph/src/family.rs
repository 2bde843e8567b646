//! Checks on the suspension of the complement of an `n`-cycle: quadratic
//! generation, non-co-chordality of the base graph (which rules out a
//! quadratic basis), and an explicit quadratic basis for every proper
//! induced subgraph.

use std::collections::BTreeMap;

use torigraph_core::criterion::is_quadratically_generated;
use torigraph_core::{canonical_labeling, graph6_encode, Graph};
use torigraph_toric::kn::polygon_witness;
use torigraph_toric::{
    four_cycle_generators, grobner_fan, random_weight_search, toric_ideal, SearchOutcome,
};

use crate::evidence::{graph_seed, replay_witness, Budget};
use crate::PipelineError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphWitness {
    /// Eliminated from the circular basis of a complete graph.
    Polygon {
        weights: Vec<i64>,
    },
    Search {
        weights: Vec<i64>,
    },
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanCheck {
    Closed { size: usize, has_quadratic: bool },
    Capped { explored: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub n: usize,
    /// Canonical graph6 of the suspension.
    pub graph6: String,
    pub quad_generated: bool,
    pub base_co_chordal: bool,
    pub fan: FanCheck,
    /// Proper induced subgraphs up to isomorphism, connected or not.
    pub subgraphs: BTreeMap<String, SubgraphWitness>,
}

impl FamilyReport {
    pub fn missing(&self) -> Vec<&str> {
        self.subgraphs
            .iter()
            .filter(|(_, w)| **w == SubgraphWitness::Missing)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn passed(&self) -> bool {
        let fan_ok = !matches!(
            self.fan,
            FanCheck::Closed {
                has_quadratic: true,
                ..
            }
        );
        self.quad_generated && !self.base_co_chordal && fan_ok && self.missing().is_empty()
    }
}

impl std::fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let polygon = self
            .subgraphs
            .values()
            .filter(|w| matches!(w, SubgraphWitness::Polygon { .. }))
            .count();
        writeln!(f, "cycle length {}: suspension {}", self.n, self.graph6)?;
        writeln!(f, "quadratically generated: {}", self.quad_generated)?;
        writeln!(f, "base graph co-chordal: {}", self.base_co_chordal)?;
        match self.fan {
            FanCheck::Closed {
                size,
                has_quadratic,
            } => writeln!(
                f,
                "fan: {size} bases, quadratic basis present: {has_quadratic}"
            )?,
            FanCheck::Capped { explored } => writeln!(f, "fan: capped after {explored} bases")?,
        }
        writeln!(
            f,
            "proper induced subgraphs: {} ({} by polygon elimination, {} by search, {} missing)",
            self.subgraphs.len(),
            polygon,
            self.subgraphs.len() - polygon - self.missing().len(),
            self.missing().len()
        )?;
        for g6 in self.missing() {
            writeln!(f, "  no witness: {g6}")?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// The suspension of the complement of `C_n`.
pub fn family_graph(n: usize) -> Result<Graph, PipelineError> {
    Ok(Graph::cycle(n)?.complement().suspension()?)
}

pub fn family_check(n: usize, budget: &Budget, seed: u64) -> Result<FamilyReport, PipelineError> {
    if !(5..=8).contains(&n) {
        return Err(PipelineError::OutOfRange(n, "5..=8"));
    }
    let base = Graph::cycle(n)?.complement();
    let (hat, _) = canonical_labeling(&base.suspension()?);
    let quad_generated = is_quadratically_generated(&hat)?.quad_generated;
    let ideal = four_cycle_generators(&hat)?.assume_prime();
    let fan = grobner_fan(&ideal, budget.fan_cap.max(1))?;
    let fan = if fan.complete {
        FanCheck::Closed {
            size: fan.len(),
            has_quadratic: fan.quadratic().is_some(),
        }
    } else {
        FanCheck::Capped {
            explored: fan.len(),
        }
    };
    let full = (1u16 << hat.n()) - 1;
    let mut subs: BTreeMap<String, Graph> = BTreeMap::new();
    for mask in 1..full {
        let (h, _) = canonical_labeling(&hat.induced_by_mask(mask)?);
        subs.entry(graph6_encode(&h)).or_insert(h);
    }
    let mut subgraphs = BTreeMap::new();
    for (key, h) in subs {
        subgraphs.insert(
            key.clone(),
            subgraph_witness(&h, budget, graph_seed(seed, &key))?,
        );
    }
    Ok(FamilyReport {
        n,
        graph6: graph6_encode(&hat),
        quad_generated,
        base_co_chordal: base.is_co_chordal(),
        fan,
        subgraphs,
    })
}

/// A replayed quadratic basis for `h`, checked against the saturated toric
/// ideal so that no assumption on generators is involved.
fn subgraph_witness(
    h: &Graph,
    budget: &Budget,
    seed: u64,
) -> Result<SubgraphWitness, PipelineError> {
    let ideal = toric_ideal(h)?;
    if let Some(gb) = polygon_witness(h)? {
        let weights = gb.order().weight().to_vec();
        if replay_witness(&ideal, &weights)? {
            return Ok(SubgraphWitness::Polygon { weights });
        }
        return Err(PipelineError::WitnessReplay(graph6_encode(h)));
    }
    match random_weight_search(&ideal, budget.iterations, seed)? {
        SearchOutcome::Found { weights, .. } => Ok(SubgraphWitness::Search { weights }),
        SearchOutcome::Exhausted { .. } => Ok(SubgraphWitness::Missing),
    }
}
