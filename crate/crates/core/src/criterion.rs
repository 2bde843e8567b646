//! Combinatorial test for a toric ideal of a graph to be generated by
//! quadratic binomials.
//!
//! A connected graph has a quadratically generated toric ideal exactly when
//!
//! 1. every even cycle of length at least 6 has an even-chord, or has at
//!    least three odd-chords two of which cross;
//! 2. any two minimal odd cycles with exactly one common vertex are joined by
//!    an edge lying on neither cycle;
//! 3. any two vertex-disjoint minimal odd cycles have at least two bridges.
//!
//! The zero ideal counts as quadratically generated.

use std::fmt;

use thiserror::Error;

use crate::cycles::{
    bridges, chord_parity, chords, cross_in_cycle, enumerate_cycles, ChordParity, Cycle,
    ParityFilter,
};
use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
}

/// The cycle or cycle pair violating a condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    EvenCycle(Cycle),
    OddCyclePair(Cycle, Cycle),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::EvenCycle(c) => write!(f, "even cycle {:?}", c.verts()),
            Witness::OddCyclePair(a, b) => {
                write!(f, "minimal odd cycles {:?} and {:?}", a.verts(), b.verts())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ConditionOutcome {
    fn from_witness(witness: Option<Witness>) -> Self {
        ConditionOutcome {
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub zero_ideal: bool,
    pub cond_i: ConditionOutcome,
    pub cond_ii: ConditionOutcome,
    pub cond_iii: ConditionOutcome,
    pub quad_generated: bool,
}

/// The cycles the criterion looks at, enumerated once per graph.
struct CycleCensus {
    long_even: Vec<Cycle>,
    minimal_odd: Vec<Cycle>,
}

impl CycleCensus {
    fn new(g: &Graph) -> Self {
        let mut long_even = Vec::new();
        let mut minimal_odd = Vec::new();
        for c in enumerate_cycles(g, 3, g.n(), ParityFilter::Any) {
            if c.is_even() {
                if c.len() >= 6 {
                    long_even.push(c);
                }
            } else if chords(g, &c).is_empty() {
                minimal_odd.push(c);
            }
        }
        CycleCensus {
            long_even,
            minimal_odd,
        }
    }
}

fn require_connected(g: &Graph) -> Result<(), CriterionError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(CriterionError::Disconnected)
    }
}

/// `I_G = 0` exactly when `G` has at most one cycle and that cycle is odd.
pub fn is_zero_ideal(g: &Graph) -> Result<bool, CriterionError> {
    require_connected(g)?;
    Ok(match g.m().cmp(&g.n()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => !g.is_bipartite(),
        std::cmp::Ordering::Greater => false,
    })
}

/// Whether one even cycle satisfies the first condition.
pub fn even_cycle_is_good(g: &Graph, c: &Cycle) -> bool {
    let mut odd = Vec::new();
    for ch in chords(g, c) {
        match chord_parity(c, &ch).expect("even cycle") {
            ChordParity::EvenChord => return true,
            ChordParity::OddChord => odd.push(ch),
        }
    }
    if odd.len() < 3 {
        return false;
    }
    odd.iter()
        .enumerate()
        .any(|(k, a)| odd[k + 1..].iter().any(|b| cross_in_cycle(c, a, b)))
}

pub fn condition_i(g: &Graph) -> Result<ConditionOutcome, CriterionError> {
    require_connected(g)?;
    Ok(cond_i_on(g, &CycleCensus::new(g)))
}

fn cond_i_on(g: &Graph, census: &CycleCensus) -> ConditionOutcome {
    ConditionOutcome::from_witness(
        census
            .long_even
            .iter()
            .find(|c| !even_cycle_is_good(g, c))
            .map(|c| Witness::EvenCycle(c.clone())),
    )
}

pub fn condition_ii(g: &Graph) -> Result<ConditionOutcome, CriterionError> {
    require_connected(g)?;
    Ok(cond_ii_on(g, &CycleCensus::new(g)))
}

fn cond_ii_on(g: &Graph, census: &CycleCensus) -> ConditionOutcome {
    let odd = &census.minimal_odd;
    for (k, c1) in odd.iter().enumerate() {
        for c2 in &odd[k + 1..] {
            if (c1.vertex_mask() & c2.vertex_mask()).count_ones() != 1 {
                continue;
            }
            let joined = bits(c1.vertex_mask()).any(|i| {
                bits(g.neighbors(i) & c2.vertex_mask())
                    .any(|j| !c1.has_edge(i, j) && !c2.has_edge(i, j))
            });
            if !joined {
                return ConditionOutcome::from_witness(Some(Witness::OddCyclePair(
                    c1.clone(),
                    c2.clone(),
                )));
            }
        }
    }
    ConditionOutcome::from_witness(None)
}

pub fn condition_iii(g: &Graph) -> Result<ConditionOutcome, CriterionError> {
    require_connected(g)?;
    Ok(cond_iii_on(g, &CycleCensus::new(g)))
}

fn cond_iii_on(g: &Graph, census: &CycleCensus) -> ConditionOutcome {
    let odd = &census.minimal_odd;
    for (k, c1) in odd.iter().enumerate() {
        for c2 in &odd[k + 1..] {
            if c1.vertex_mask() & c2.vertex_mask() != 0 {
                continue;
            }
            let count = bridges(g, c1, c2).expect("disjoint cycles").len();
            if count < 2 {
                return ConditionOutcome::from_witness(Some(Witness::OddCyclePair(
                    c1.clone(),
                    c2.clone(),
                )));
            }
        }
    }
    ConditionOutcome::from_witness(None)
}

pub fn is_quadratically_generated(g: &Graph) -> Result<CriterionReport, CriterionError> {
    let zero_ideal = is_zero_ideal(g)?;
    let census = CycleCensus::new(g);
    let cond_i = cond_i_on(g, &census);
    let cond_ii = cond_ii_on(g, &census);
    let cond_iii = cond_iii_on(g, &census);
    let quad_generated = zero_ideal || (cond_i.holds && cond_ii.holds && cond_iii.holds);
    Ok(CriterionReport {
        zero_ideal,
        cond_i,
        cond_ii,
        cond_iii,
        quad_generated,
    })
}

/// For bipartite graphs: every cycle of length at least 6 has a chord.
/// This decides quadratic generation and quadratic Groebner basis
/// existence at once.
pub fn bipartite_has_quadratic_gb(g: &Graph) -> Result<bool, CriterionError> {
    require_connected(g)?;
    if !g.is_bipartite() {
        return Err(CriterionError::NotBipartite);
    }
    Ok(enumerate_cycles(g, 6, g.n(), ParityFilter::Even)
        .iter()
        .all(|c| !chords(g, c).is_empty()))
}

/// 2K2-freeness together with quadratic generation; equivalent to quadratic
/// generation of the suspension's toric ideal.
pub fn suspension_quad_check(g: &Graph) -> Result<bool, CriterionError> {
    Ok(g.is_2k2_free() && is_quadratically_generated(g)?.quad_generated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn zero_ideal_examples() {
        assert!(is_zero_ideal(&Graph::complete(3).unwrap()).unwrap());
        assert!(!is_zero_ideal(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_zero_ideal(&Graph::path(5).unwrap()).unwrap());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_zero_ideal(&two), Err(CriterionError::Disconnected));
    }

    #[test]
    fn condition_i_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let out = condition_i(&c6).unwrap();
        assert!(!out.holds);
        assert_eq!(
            out.witness,
            Some(Witness::EvenCycle(
                Cycle::new(&c6, &[0, 1, 2, 3, 4, 5]).unwrap()
            ))
        );

        let mut e = Graph::cycle(6).unwrap().edges().to_vec();
        e.push((0, 3));
        let c6_chord = Graph::from_edges(6, &e).unwrap();
        assert!(condition_i(&c6_chord).unwrap().holds);

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let sixes = enumerate_cycles(&k33, 6, 6, ParityFilter::Even);
        assert_eq!(sixes.len(), 6);
        assert!(sixes.iter().all(|c| even_cycle_is_good(&k33, c)));
        assert!(condition_i(&k33).unwrap().holds);
    }

    #[test]
    fn condition_ii_examples() {
        let bt = bowtie();
        assert!(!condition_ii(&bt).unwrap().holds);
        let mut e = bt.edges().to_vec();
        e.push((0, 3));
        let joined = Graph::from_edges(5, &e).unwrap();
        assert!(condition_ii(&joined).unwrap().holds);
        assert!(
            condition_ii(&Graph::complete_bipartite(2, 3).unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn condition_iii_examples() {
        let tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let mut one = tri.to_vec();
        one.push((2, 3));
        assert!(
            !condition_iii(&Graph::from_edges(6, &one).unwrap())
                .unwrap()
                .holds
        );
        let mut two = one.clone();
        two.push((0, 5));
        assert!(
            condition_iii(&Graph::from_edges(6, &two).unwrap())
                .unwrap()
                .holds
        );
        assert!(condition_iii(&Graph::cycle(8).unwrap()).unwrap().holds);
    }

    #[test]
    fn wheel_is_quadratically_generated() {
        let report = is_quadratically_generated(&Graph::wheel(5).unwrap()).unwrap();
        assert!(report.quad_generated);
        assert!(!report.zero_ideal);
    }

    #[test]
    fn census_on_six_vertices() {
        let mut quad = 0;
        let mut zero = 0;
        for g in crate::enumerate_connected(6).unwrap() {
            let r = is_quadratically_generated(&g).unwrap();
            quad += r.quad_generated as usize;
            zero += r.zero_ideal as usize;
        }
        assert_eq!((quad, zero), (95, 14));
    }

    #[test]
    fn bipartite_examples() {
        assert!(!bipartite_has_quadratic_gb(&Graph::cycle(6).unwrap()).unwrap());
        let mut e = Graph::cycle(6).unwrap().edges().to_vec();
        e.push((0, 3));
        assert!(bipartite_has_quadratic_gb(&Graph::from_edges(6, &e).unwrap()).unwrap());
        assert!(bipartite_has_quadratic_gb(&Graph::cycle(4).unwrap()).unwrap());
        assert_eq!(
            bipartite_has_quadratic_gb(&Graph::cycle(5).unwrap()),
            Err(CriterionError::NotBipartite)
        );
    }

    #[test]
    fn suspension_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(suspension_quad_check(&c5).unwrap());
        assert!(
            is_quadratically_generated(&c5.suspension().unwrap())
                .unwrap()
                .quad_generated
        );
        assert!(!suspension_quad_check(&Graph::cycle(6).unwrap()).unwrap());
    }
}
