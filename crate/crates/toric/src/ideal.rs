//! Toric ideals of graphs and their distinguished generators.

use torigraph_core::cycles::{enumerate_cycles, ParityFilter};
use torigraph_core::{ClosedWalk, Graph};

use crate::binomial::{Binomial, BinomialIdeal, Provenance};
use crate::gb::groebner;
use crate::lattice::{incidence_matrix, lattice_kernel_basis};
use crate::monomial::MAX_VARS;
use crate::order::TermOrder;
use crate::ToricError;

fn check_size(g: &Graph) -> Result<(), ToricError> {
    if g.m() > MAX_VARS {
        Err(ToricError::TooManyVariables(g.m()))
    } else {
        Ok(())
    }
}

/// Binomial of an even closed walk: odd-position edges minus even-position
/// edges. `None` when the two sides coincide.
pub fn walk_binomial(g: &Graph, walk: &ClosedWalk) -> Result<Option<Binomial>, ToricError> {
    check_size(g)?;
    let u = walk
        .exponent_difference(g.m())
        .map_err(|_| ToricError::OddWalk(walk.len()))?;
    if u.iter().all(|&x| x == 0) {
        return Ok(None);
    }
    let u: Vec<i64> = u.into_iter().map(i64::from).collect();
    Binomial::from_u(&u).map(Some)
}

/// One binomial per 4-cycle, the walk starting at the cycle's least vertex
/// towards its smaller neighbor.
pub fn four_cycle_generators(g: &Graph) -> Result<BinomialIdeal, ToricError> {
    check_size(g)?;
    let mut gens = Vec::new();
    for c in enumerate_cycles(g, 4, 4, ParityFilter::Even) {
        let walk = ClosedWalk::new(g, c.verts()).expect("cycle edges exist");
        gens.extend(walk_binomial(g, &walk)?);
    }
    BinomialIdeal::new(g.m(), gens, Provenance::FourCycles)
}

/// A generating set of the toric ideal, obtained by saturating the ideal of
/// an integer kernel basis one variable at a time: a reduced basis under
/// grevlex with `x_i` cheapest, with powers of `x_i` divided out.
pub fn toric_ideal(g: &Graph) -> Result<BinomialIdeal, ToricError> {
    check_size(g)?;
    let d = g.m();
    let kernel = lattice_kernel_basis(&incidence_matrix(g), d)?;
    let mut gens = kernel
        .iter()
        .map(|u| Binomial::from_u(u))
        .collect::<Result<Vec<_>, _>>()?;
    // Stripping any common factor keeps every element inside the toric
    // ideal, and the passes still saturate by every variable.
    for i in 0..d {
        if gens.is_empty() {
            break;
        }
        let ord = TermOrder::grevlex_last(d, i)?;
        gens = groebner(&gens, &ord, true).elements().to_vec();
    }
    Ok(BinomialIdeal::new(d, gens, Provenance::SaturatedToric)?.assume_prime())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{buchberger, is_quadratic_gb};
    use crate::monomial::Monomial;

    fn bin(a: &[usize], b: &[usize]) -> Binomial {
        Binomial::new(Monomial::product(a), Monomial::product(b)).unwrap()
    }

    fn same_up_to_sign(a: &Binomial, b: &Binomial) -> bool {
        a == b || a.negate() == *b
    }

    #[test]
    fn walk_binomial_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let w = ClosedWalk::new(&c4, &[0, 1, 2, 3]).unwrap();
        // edges 01=x0, 12=x2, 23=x3, 03=x1
        assert_eq!(walk_binomial(&c4, &w).unwrap(), Some(bin(&[0, 3], &[1, 2])));
        let back = ClosedWalk::new(&c4, &[0, 1]).unwrap();
        assert_eq!(walk_binomial(&c4, &back).unwrap(), None);
        let odd = ClosedWalk::new(&Graph::complete(3).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(
            walk_binomial(&Graph::complete(3).unwrap(), &odd),
            Err(ToricError::OddWalk(3))
        );
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let w = ClosedWalk::new(&bowtie, &[0, 1, 2, 3, 4, 2]).unwrap();
        let f = walk_binomial(&bowtie, &w).unwrap().unwrap();
        assert_eq!(f.degree(), 3);
        assert!(f.is_homogeneous());
    }

    #[test]
    fn four_cycle_generator_counts() {
        assert_eq!(
            four_cycle_generators(&Graph::cycle(4).unwrap())
                .unwrap()
                .gens()
                .len(),
            1
        );
        assert_eq!(
            four_cycle_generators(&Graph::complete(4).unwrap())
                .unwrap()
                .gens()
                .len(),
            3
        );
        assert!(four_cycle_generators(&Graph::path(6).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn toric_ideal_examples() {
        let c4 = toric_ideal(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.gens().len(), 1);
        assert!(same_up_to_sign(&c4.gens()[0], &bin(&[0, 3], &[1, 2])));

        // C6 edges: 01=x0, 05=x1, 12=x2, 23=x3, 34=x4, 45=x5
        let c6 = toric_ideal(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c6.gens().len(), 1);
        assert!(same_up_to_sign(&c6.gens()[0], &bin(&[0, 3, 5], &[1, 2, 4])));

        assert!(toric_ideal(&Graph::path(5).unwrap()).unwrap().is_zero());
        assert!(toric_ideal(&Graph::cycle(5).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn k4_has_two_element_quadratic_basis() {
        let ideal = toric_ideal(&Graph::complete(4).unwrap()).unwrap();
        for w in [[1, 1, 1, 1, 1, 1], [3, 1, 4, 1, 5, 9], [9, 2, 6, 5, 3, 5]] {
            let gb = buchberger(&ideal, &TermOrder::weighted(&w).unwrap()).unwrap();
            assert_eq!(gb.len(), 2);
            assert!(is_quadratic_gb(&gb));
        }
    }

    #[test]
    fn odd_cycle_pair_needs_a_long_generator() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let ideal = toric_ideal(&bowtie).unwrap();
        assert_eq!(ideal.gens().len(), 1);
        assert_eq!(ideal.gens()[0].degree(), 3);
    }
}
