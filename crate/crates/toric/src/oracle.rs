//! An algebraic check of quadratic generation, independent of the cycle
//! criterion.

use torigraph_core::Graph;

use crate::gb::buchberger;
use crate::ideal::{four_cycle_generators, toric_ideal};
use crate::order::TermOrder;
use crate::ToricError;

/// Whether the 4-cycle binomials generate the whole toric ideal. Their
/// ideal `J` lies inside `I_G`; a Groebner basis of `J`, computed without
/// stripping factors since `J` need not be prime, decides whether every
/// generator of `I_G` lies in `J`.
pub fn quad_generation_oracle(g: &Graph) -> Result<bool, ToricError> {
    let full = toric_ideal(g)?;
    if full.is_zero() {
        return Ok(true);
    }
    let quadrics = four_cycle_generators(g)?;
    let gb = buchberger(&quadrics, &TermOrder::grevlex(g.m())?)?;
    Ok(full.gens().iter().all(|f| gb.contains(f)))
}
