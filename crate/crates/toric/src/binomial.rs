//! Pure-difference binomials `x^a - x^b` and ideals generated by them.
//!
//! A binomial keeps both monomials, so a common factor survives until it is
//! explicitly stripped. Stripping is only sound in a prime binomial ideal,
//! where `x^c (x^a - x^b)` in the ideal forces `x^a - x^b` in the ideal.

use std::fmt;

use crate::monomial::{Monomial, MAX_VARS};
use crate::order::TermOrder;
use crate::ToricError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl Binomial {
    /// `lead - tail`; the two monomials must differ.
    pub fn new(lead: Monomial, tail: Monomial) -> Result<Self, ToricError> {
        if lead == tail {
            return Err(ToricError::ZeroBinomial);
        }
        Ok(Binomial { lead, tail })
    }

    /// `x^(u+) - x^(u-)` for a nonzero integer vector `u`.
    pub fn from_u(u: &[i64]) -> Result<Self, ToricError> {
        if u.len() > MAX_VARS {
            return Err(ToricError::TooManyVariables(u.len()));
        }
        let exp = |x: i64| u32::try_from(x).map_err(|_| ToricError::ExponentOverflow);
        let plus: Result<Vec<u32>, _> = u.iter().map(|&x| exp(x.max(0))).collect();
        let minus: Result<Vec<u32>, _> = u.iter().map(|&x| exp((-x).max(0))).collect();
        Self::new(Monomial::from_exps(&plus?)?, Monomial::from_exps(&minus?)?)
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    /// Exponent difference `a - b` over the first `d` variables.
    pub fn u(&self, d: usize) -> Vec<i64> {
        (0..d)
            .map(|i| self.lead.exp(i) as i64 - self.tail.exp(i) as i64)
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.tail.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn negate(&self) -> Binomial {
        Binomial {
            lead: self.tail,
            tail: self.lead,
        }
    }

    /// The same binomial up to sign with its larger monomial first.
    pub fn oriented(&self, ord: &TermOrder) -> Binomial {
        if ord.greater(&self.tail, &self.lead) {
            self.negate()
        } else {
            *self
        }
    }

    pub fn is_oriented(&self, ord: &TermOrder) -> bool {
        ord.greater(&self.lead, &self.tail)
    }

    /// Divides out the greatest common monomial factor of the two terms.
    pub fn stripped(&self) -> Binomial {
        let g = self.lead.gcd(&self.tail);
        if g.is_one() {
            *self
        } else {
            Binomial {
                lead: self.lead.div(&g),
                tail: self.tail.div(&g),
            }
        }
    }

    pub fn remap(&self, map: &[Option<usize>]) -> Option<Binomial> {
        Some(Binomial {
            lead: self.lead.remap(map)?,
            tail: self.tail.remap(map)?,
        })
    }

    /// Highest variable index used, plus one.
    pub fn span(&self) -> usize {
        let s = self.lead.support() | self.tail.support();
        64 - s.leading_zeros() as usize
    }

    pub fn display_with<F: Fn(usize) -> String + Copy>(&self, name: F) -> String {
        format!(
            "{} - {}",
            self.lead.display_with(name),
            self.tail.display_with(name)
        )
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.lead, self.tail)
    }
}

/// Where a generating set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    FourCycles,
    SaturatedToric,
    KnCircular,
    Eliminated,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdeal {
    d: usize,
    gens: Vec<Binomial>,
    provenance: Provenance,
    prime: bool,
}

impl BinomialIdeal {
    pub fn new(d: usize, gens: Vec<Binomial>, provenance: Provenance) -> Result<Self, ToricError> {
        if d > MAX_VARS {
            return Err(ToricError::TooManyVariables(d));
        }
        for g in &gens {
            if g.span() > d {
                return Err(ToricError::DimensionMismatch {
                    expected: d,
                    found: g.span(),
                });
            }
        }
        Ok(BinomialIdeal {
            d,
            gens,
            provenance,
            prime: false,
        })
    }

    /// Declares the ideal prime (for example, known to equal a toric
    /// ideal), which lets Groebner computations strip common factors.
    pub fn assume_prime(mut self) -> Self {
        self.prime = true;
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gens(&self) -> &[Binomial] {
        &self.gens
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_prime(&self) -> bool {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Binomial::is_homogeneous)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_vector_round_trip() {
        let b = Binomial::from_u(&[1, -1, 1, -1]).unwrap();
        assert_eq!(b.u(4), vec![1, -1, 1, -1]);
        assert_eq!(b.lead(), &Monomial::product(&[0, 2]));
        assert_eq!(b.degree(), 2);
        assert!(b.is_homogeneous());
        assert!(Binomial::from_u(&[0, 0]).is_err());
    }

    #[test]
    fn orientation_and_stripping() {
        let ord = TermOrder::grevlex(4).unwrap();
        let b = Binomial::new(Monomial::product(&[1, 3]), Monomial::product(&[0, 2])).unwrap();
        let o = b.oriented(&ord);
        assert!(o.is_oriented(&ord));
        assert_eq!(o.negate(), b);
        let f =
            Binomial::new(Monomial::product(&[0, 0, 1]), Monomial::product(&[0, 2, 3])).unwrap();
        assert_eq!(
            f.stripped(),
            Binomial::new(Monomial::product(&[0, 1]), Monomial::product(&[2, 3])).unwrap()
        );
    }

    #[test]
    fn ideal_checks_dimension() {
        let b = Binomial::from_u(&[0, 0, 1, -1]).unwrap();
        assert!(BinomialIdeal::new(3, vec![b], Provenance::Custom).is_err());
        let i = BinomialIdeal::new(4, vec![b], Provenance::Custom).unwrap();
        assert!(!i.is_prime());
        assert!(i.clone().assume_prime().is_prime());
        assert_eq!(i.max_degree(), 1);
    }
}
