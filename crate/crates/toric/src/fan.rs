//! Enumeration of all reduced Groebner bases of a homogeneous binomial ideal
//! by crossing the facets of Groebner cones.
//!
//! The cone of a reduced basis is `{w : w . (lead - tail) >= 0}`. Weights
//! only matter through their values on the lattice `L` spanned by the
//! generators' exponent vectors, so cones live in coordinates indexed by the
//! pivot columns of `L`, where they are pointed and full-dimensional. A
//! defining inequality is a facet iff some point satisfies it with equality
//! and every non-parallel inequality strictly; such a point is a relative
//! interior point of the facet, and nudging it across the facet selects the
//! neighbouring cone.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::binomial::BinomialIdeal;
use crate::gb::{groebner, is_quadratic_gb, ReducedGB};
use crate::lattice::pivot_columns;
use crate::lp::feasible_point;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::search::{random_weight_search, SearchOutcome};
use crate::ToricError;

pub const DEFAULT_CONE_CAP: usize = 100_000;

#[derive(Debug, Clone)]
pub struct FanResult {
    /// Reduced bases in discovery order.
    pub gbs: Vec<ReducedGB>,
    /// False when the cap stopped the traversal.
    pub complete: bool,
}

impl FanResult {
    pub fn len(&self) -> usize {
        self.gbs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gbs.is_empty()
    }

    pub fn min_degree(&self) -> u32 {
        self.gbs
            .iter()
            .map(ReducedGB::max_degree)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.gbs
            .iter()
            .map(ReducedGB::max_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn quadratic(&self) -> Option<&ReducedGB> {
        self.gbs.iter().find(|gb| is_quadratic_gb(gb))
    }

    pub fn keys(&self) -> HashSet<Vec<Monomial>> {
        self.gbs.iter().map(ReducedGB::leading_key).collect()
    }
}

/// Coordinates in which cones are pointed.
struct ConeSpace {
    d: usize,
    pivots: Vec<usize>,
}

impl ConeSpace {
    fn new(ideal: &BinomialIdeal) -> Self {
        let d = ideal.d();
        let rows: Vec<Vec<i64>> = ideal.gens().iter().map(|g| g.u(d)).collect();
        ConeSpace {
            d,
            pivots: pivot_columns(&rows, d),
        }
    }

    /// Primitive inward normals of the cone's inequalities, deduplicated.
    fn normals(&self, gb: &ReducedGB) -> Vec<Vec<i64>> {
        let set: BTreeSet<Vec<i64>> = gb
            .elements()
            .iter()
            .map(|g| {
                let u = g.u(self.d);
                primitive(self.pivots.iter().map(|&p| u[p]).collect())
            })
            .collect();
        set.into_iter().collect()
    }

    /// Integer weight on all `d` variables for the coordinates `z`, shifted
    /// by a multiple of the all-ones vector so every entry is positive.
    fn positive_weight(&self, z: &[BigRational]) -> Result<Vec<i64>, ToricError> {
        let denom = z.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut w = vec![BigInt::zero(); self.d];
        for (k, &p) in self.pivots.iter().enumerate() {
            w[p] = (&z[k] * BigRational::from_integer(denom.clone())).to_integer();
        }
        let min = w.iter().min().cloned().unwrap_or_default();
        let shift = BigInt::one() - min;
        w.iter()
            .map(|x| (x + &shift).to_i64().ok_or(ToricError::ExponentOverflow))
            .collect()
    }

    fn embed(&self, v: &[i64]) -> Vec<i64> {
        let mut w = vec![0; self.d];
        for (k, &p) in self.pivots.iter().enumerate() {
            w[p] = v[k];
        }
        w
    }

    /// Orders selecting each neighbouring cone across a facet.
    fn flips(&self, gb: &ReducedGB) -> Result<Vec<TermOrder>, ToricError> {
        let normals = self.normals(gb);
        let r = self.pivots.len();
        let mut out = Vec::new();
        for (i, v) in normals.iter().enumerate() {
            let others: Vec<Vec<i64>> = normals
                .iter()
                .enumerate()
                .filter(|&(k, c)| k != i && !positively_parallel(c, v))
                .map(|(_, c)| c.clone())
                .collect();
            let ones = vec![1; others.len()];
            let Some(z) = feasible_point(std::slice::from_ref(v), &[0], &others, &ones, r) else {
                continue;
            };
            let w = self.positive_weight(&z)?;
            let away: Vec<i64> = v.iter().map(|x| -x).collect();
            out.push(TermOrder::weighted(&w)?.refine(&self.embed(&away))?);
        }
        Ok(out)
    }

    /// A positive weight in the interior of the cone of `gb`.
    fn interior_weight(&self, gb: &ReducedGB) -> Result<Vec<i64>, ToricError> {
        let normals = self.normals(gb);
        let ones = vec![1; normals.len()];
        let z = feasible_point(&[], &[], &normals, &ones, self.pivots.len()).ok_or_else(|| {
            ToricError::VerificationFailed("Groebner cone has empty interior".into())
        })?;
        self.positive_weight(&z)
    }
}

fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    v
}

fn positively_parallel(a: &[i64], b: &[i64]) -> bool {
    // both vectors are primitive
    a == b
}

/// All reduced Groebner bases of a homogeneous ideal, up to `cone_cap`.
/// Bases are computed with common-factor stripping iff the ideal is prime.
pub fn grobner_fan(ideal: &BinomialIdeal, cone_cap: usize) -> Result<FanResult, ToricError> {
    if !ideal.is_homogeneous() {
        return Err(ToricError::NotHomogeneous);
    }
    let d = ideal.d();
    let strip = ideal.is_prime();
    let start = groebner(ideal.gens(), &TermOrder::grevlex(d)?, strip);
    if ideal.is_zero() {
        return Ok(FanResult {
            gbs: vec![start],
            complete: true,
        });
    }
    let space = ConeSpace::new(ideal);
    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    seen.insert(start.leading_key());
    let mut gbs = vec![start];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(idx) = queue.pop_front() {
        for ord in space.flips(&gbs[idx])? {
            let next = groebner(ideal.gens(), &ord, strip);
            if seen.insert(next.leading_key()) {
                if gbs.len() >= cone_cap {
                    return Ok(FanResult {
                        gbs,
                        complete: false,
                    });
                }
                queue.push_back(gbs.len());
                gbs.push(next);
            }
        }
    }
    Ok(FanResult {
        gbs,
        complete: true,
    })
}

/// A weight in the open cone of `gb`, which reproduces `gb` when refined
/// by grevlex.
pub fn interior_weight(ideal: &BinomialIdeal, gb: &ReducedGB) -> Result<Vec<i64>, ToricError> {
    if gb.is_empty() {
        return Ok(vec![1; ideal.d()]);
    }
    ConeSpace::new(ideal).interior_weight(gb)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    /// A quadratic basis exists; `weights` realize it.
    Yes { weights: Vec<i64> },
    /// The complete fan has `fan_size` bases and none is quadratic.
    No { fan_size: usize },
    /// Search failed and the fan traversal hit the cap.
    Unknown { explored: usize },
}

/// Random search first, then the whole fan.
pub fn has_quadratic_gb_certified(
    ideal: &BinomialIdeal,
    search_budget: usize,
    seed: u64,
    fan_cap: usize,
) -> Result<Certification, ToricError> {
    if let SearchOutcome::Found { weights, .. } = random_weight_search(ideal, search_budget, seed)?
    {
        return Ok(Certification::Yes { weights });
    }
    let fan = grobner_fan(ideal, fan_cap)?;
    if let Some(gb) = fan.quadratic() {
        let weights = interior_weight(ideal, gb)?;
        let replay = groebner(
            ideal.gens(),
            &TermOrder::weighted(&weights)?,
            ideal.is_prime(),
        );
        if replay.leading_key() != gb.leading_key() {
            return Err(ToricError::VerificationFailed(
                "interior weight does not reproduce the basis".into(),
            ));
        }
        return Ok(Certification::Yes { weights });
    }
    Ok(if fan.complete {
        Certification::No {
            fan_size: fan.len(),
        }
    } else {
        Certification::Unknown {
            explored: fan.len(),
        }
    })
}
