//! The exclusion ladder for one graph: criterion, random weights, polygon
//! construction, a second search stream, then the Groebner fan.
//!
//! Every exclusion carries a weight vector whose reduced basis is quadratic
//! and has been recomputed from scratch before it is reported.

use sha2::{Digest, Sha256};
use torigraph_core::{CriterionReport, Graph};
use torigraph_toric::fan::interior_weight;
use torigraph_toric::kn::polygon_witness;
use torigraph_toric::{
    buchberger, four_cycle_generators, grobner_fan, is_quadratic_gb, random_weight_search,
    BinomialIdeal, SearchOutcome, TermOrder,
};

use crate::PipelineError;

/// How a quadratic basis was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    Search { iteration: usize },
    Polygon,
    ExtendedSearch { iteration: usize },
    Fan { explored: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    NotQuadGenerated,
    ZeroIdeal,
    Quadratic {
        weights: Vec<i64>,
        via: Via,
    },
    /// The fan closed with `fan_size` bases, none quadratic.
    Certified {
        fan_size: usize,
    },
    /// No quadratic basis found after `iterations` draws and `explored`
    /// fan cones.
    Unresolved {
        iterations: usize,
        explored: usize,
    },
}

impl Evidence {
    /// True when the graph cannot satisfy the star condition.
    pub fn excludes(&self) -> bool {
        matches!(
            self,
            Evidence::NotQuadGenerated | Evidence::ZeroIdeal | Evidence::Quadratic { .. }
        )
    }
}

/// Budgets for the ladder. `extended_iterations` draws are spent only on
/// graphs that survive the first `iterations`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub iterations: usize,
    pub extended_iterations: usize,
    pub fan_cap: usize,
}

/// RNG seed for one graph: the first eight bytes (little-endian) of
/// SHA-256 over the run seed's little-endian bytes followed by the
/// canonical graph6 string.
pub fn graph_seed(seed: u64, graph6: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(graph6.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("eight bytes"))
}

/// Seed of the second search stream, independent of the first.
fn extended_seed(graph_seed: u64) -> u64 {
    graph_seed.rotate_left(32) ^ 0x9e37_79b9_7f4a_7c15
}

/// Recomputes the reduced basis under `weights` and checks it is quadratic.
pub fn replay_witness(ideal: &BinomialIdeal, weights: &[i64]) -> Result<bool, PipelineError> {
    let gb = buchberger(ideal, &TermOrder::weighted(weights)?)?;
    Ok(is_quadratic_gb(&gb))
}

/// Runs the ladder on a connected graph whose criterion report is given.
/// The four-cycle binomials generate the toric ideal whenever the criterion
/// holds, so they are the ideal handed to the engine.
pub fn assess(
    g: &Graph,
    report: &CriterionReport,
    seed: u64,
    budget: &Budget,
) -> Result<Evidence, PipelineError> {
    if !report.quad_generated {
        return Ok(Evidence::NotQuadGenerated);
    }
    if report.zero_ideal {
        return Ok(Evidence::ZeroIdeal);
    }
    let ideal = four_cycle_generators(g)?.assume_prime();
    if let SearchOutcome::Found {
        weights, iteration, ..
    } = random_weight_search(&ideal, budget.iterations, seed)?
    {
        return Ok(Evidence::Quadratic {
            weights,
            via: Via::Search { iteration },
        });
    }
    if let Some(gb) = polygon_witness(g)? {
        let weights = gb.order().weight().to_vec();
        if !replay_witness(&ideal, &weights)? {
            return Err(PipelineError::WitnessReplay(crate::graph6(g)));
        }
        return Ok(Evidence::Quadratic {
            weights,
            via: Via::Polygon,
        });
    }
    if let SearchOutcome::Found {
        weights, iteration, ..
    } = random_weight_search(&ideal, budget.extended_iterations, extended_seed(seed))?
    {
        return Ok(Evidence::Quadratic {
            weights,
            via: Via::ExtendedSearch { iteration },
        });
    }
    let iterations = budget.iterations + budget.extended_iterations;
    if budget.fan_cap == 0 {
        return Ok(Evidence::Unresolved {
            iterations,
            explored: 0,
        });
    }
    let fan = grobner_fan(&ideal, budget.fan_cap)?;
    if let Some(gb) = fan.quadratic() {
        let weights = interior_weight(&ideal, gb)?;
        if !replay_witness(&ideal, &weights)? {
            return Err(PipelineError::WitnessReplay(crate::graph6(g)));
        }
        return Ok(Evidence::Quadratic {
            weights,
            via: Via::Fan {
                explored: fan.len(),
            },
        });
    }
    Ok(if fan.complete {
        Evidence::Certified {
            fan_size: fan.len(),
        }
    } else {
        Evidence::Unresolved {
            iterations,
            explored: fan.len(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use torigraph_core::criterion::is_quadratically_generated;

    fn budget(fan_cap: usize) -> Budget {
        Budget {
            iterations: 200,
            extended_iterations: 0,
            fan_cap,
        }
    }

    fn run(g: &Graph, fan_cap: usize) -> Evidence {
        let report = is_quadratically_generated(g).unwrap();
        assess(g, &report, 1, &budget(fan_cap)).unwrap()
    }

    #[test]
    fn seeds_depend_on_both_inputs() {
        let a = graph_seed(7, "EFz_");
        assert_eq!(a, graph_seed(7, "EFz_"));
        assert_ne!(a, graph_seed(8, "EFz_"));
        assert_ne!(a, graph_seed(7, "EFzW"));
    }

    #[test]
    fn ladder_outcomes() {
        assert_eq!(
            run(&Graph::cycle(6).unwrap(), 10),
            Evidence::NotQuadGenerated
        );
        assert_eq!(run(&Graph::cycle(5).unwrap(), 10), Evidence::ZeroIdeal);
        assert!(matches!(
            run(&Graph::complete(5).unwrap(), 10),
            Evidence::Quadratic { .. }
        ));
        let w6 = Graph::wheel(5).unwrap();
        assert_eq!(run(&w6, 1000), Evidence::Certified { fan_size: 70 });
        assert_eq!(
            run(&w6, 0),
            Evidence::Unresolved {
                iterations: 200,
                explored: 0
            }
        );
    }

    #[test]
    fn polygon_step_excludes_complete_graphs() {
        let k6 = Graph::complete(6).unwrap();
        let report = is_quadratically_generated(&k6).unwrap();
        let b = Budget {
            iterations: 0,
            extended_iterations: 0,
            fan_cap: 0,
        };
        let e = assess(&k6, &report, 3, &b).unwrap();
        let Evidence::Quadratic { weights, via } = e else {
            panic!("K6 has the circular basis")
        };
        assert_eq!(via, Via::Polygon);
        let ideal = four_cycle_generators(&k6).unwrap().assume_prime();
        assert!(replay_witness(&ideal, &weights).unwrap());
    }
}
