//! Random weight search for a quadratic Groebner basis.
//!
//! When every generator is a quadric the test is cheap: the degree-2 part
//! of the reduced basis comes from linear algebra on quadratic monomials
//! (a binomial identifies two monomials, so each class reduces to its
//! smallest member), and those quadrics form the whole basis iff every
//! S-pair, all of degree 3, reduces to zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binomial::BinomialIdeal;
use crate::gb::{groebner, is_quadratic_gb, ReducedGB};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ToricError;

pub const MIN_WEIGHT: i64 = 1;
pub const MAX_WEIGHT: i64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// `weights` (refined by grevlex) give the quadratic basis `gb`, found on
    /// draw number `iteration` (1-based).
    Found {
        weights: Vec<i64>,
        gb: ReducedGB,
        iteration: usize,
    },
    Exhausted {
        iterations: usize,
    },
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }
}

/// Draws weight vectors uniformly from `[MIN_WEIGHT, MAX_WEIGHT]^d` with a
/// ChaCha8 stream seeded by `seed` and returns the first whose reduced
/// basis is quadratic.
pub fn random_weight_search(
    ideal: &BinomialIdeal,
    iterations: usize,
    seed: u64,
) -> Result<SearchOutcome, ToricError> {
    random_weight_search_in(ideal, iterations, seed, MIN_WEIGHT..=MAX_WEIGHT)
}

/// [`random_weight_search`] with weights drawn from `range`.
pub fn random_weight_search_in(
    ideal: &BinomialIdeal,
    iterations: usize,
    seed: u64,
    range: std::ops::RangeInclusive<i64>,
) -> Result<SearchOutcome, ToricError> {
    if *range.start() < 1 || range.is_empty() {
        return Err(ToricError::NonPositiveWeight(*range.start()));
    }
    if !ideal.is_homogeneous() {
        return Err(ToricError::NotHomogeneous);
    }
    let d = ideal.d();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quadrics = (ideal.max_degree() == 2).then(|| QuadricSystem::new(ideal));
    for iteration in 1..=iterations {
        let weights: Vec<i64> = (0..d).map(|_| rng.gen_range(range.clone())).collect();
        let ord = TermOrder::weighted(&weights)?;
        let quadratic = match &quadrics {
            Some(q) => q.has_quadratic_gb(&ord),
            None => is_quadratic_gb(&groebner(ideal.gens(), &ord, ideal.is_prime())),
        };
        if quadratic {
            let gb = groebner(ideal.gens(), &ord, ideal.is_prime());
            if !is_quadratic_gb(&gb) {
                return Err(ToricError::VerificationFailed(format!(
                    "fast test accepted weights {weights:?} but the basis has degree {}",
                    gb.max_degree()
                )));
            }
            return Ok(SearchOutcome::Found {
                weights,
                gb,
                iteration,
            });
        }
    }
    Ok(SearchOutcome::Exhausted { iterations })
}

const NONE: u16 = u16::MAX;

/// Quadratic monomials linked by the generators, grouped into classes.
struct QuadricSystem {
    d: usize,
    classes: Vec<Vec<(usize, usize)>>,
    monomials: Vec<Vec<Monomial>>,
}

impl QuadricSystem {
    fn new(ideal: &BinomialIdeal) -> Self {
        let d = ideal.d();
        let pair_of = |m: &Monomial| -> (usize, usize) {
            let mut v = m
                .vars()
                .flat_map(|i| std::iter::repeat_n(i, m.exp(i) as usize));
            (v.next().expect("quadric"), v.next().expect("quadric"))
        };
        let mut parent: Vec<usize> = (0..d * d).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut used = vec![false; d * d];
        for g in ideal.gens() {
            let (a, b) = pair_of(g.lead());
            let (c, e) = pair_of(g.tail());
            let (x, y) = (a * d + b, c * d + e);
            used[x] = true;
            used[y] = true;
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<(usize, usize)>> =
            Default::default();
        for id in 0..d * d {
            if used[id] {
                let r = find(&mut parent, id);
                by_root.entry(r).or_default().push((id / d, id % d));
            }
        }
        let classes: Vec<Vec<(usize, usize)>> =
            by_root.into_values().filter(|c| c.len() > 1).collect();
        let monomials = classes
            .iter()
            .map(|c| c.iter().map(|&(a, b)| Monomial::product(&[a, b])).collect())
            .collect();
        QuadricSystem {
            d,
            classes,
            monomials,
        }
    }

    fn has_quadratic_gb(&self, ord: &TermOrder) -> bool {
        let d = self.d;
        let mut target = vec![NONE; d * d];
        let mut leads: Vec<(usize, usize)> = Vec::new();
        for (class, monos) in self.classes.iter().zip(&self.monomials) {
            let low = (0..class.len())
                .min_by(|&i, &j| ord.cmp(&monos[i], &monos[j]))
                .expect("nonempty class");
            let (p, q) = class[low];
            for (k, &(a, b)) in class.iter().enumerate() {
                if k != low {
                    target[a * d + b] = (p * d + q) as u16;
                    leads.push((a, b));
                }
            }
        }
        let mut by_var: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (k, &(a, b)) in leads.iter().enumerate() {
            by_var[a].push(k);
            if b != a {
                by_var[b].push(k);
            }
        }
        for (v, list) in by_var.iter().enumerate() {
            for (x, &k1) in list.iter().enumerate() {
                for &k2 in &list[x + 1..] {
                    let (o1, o2) = (other(leads[k1], v), other(leads[k2], v));
                    // lcm = v * o1 * o2; the S-pair is tail1 * o2 vs tail2 * o1
                    let t1 = target[leads[k1].0 * d + leads[k1].1] as usize;
                    let t2 = target[leads[k2].0 * d + leads[k2].1] as usize;
                    let s1 = normal_form3(&target, d, [t1 / d, t1 % d, o2]);
                    let s2 = normal_form3(&target, d, [t2 / d, t2 % d, o1]);
                    if s1 != s2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The variable left after removing one copy of `v` from a quadric.
fn other((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

fn normal_form3(target: &[u16], d: usize, mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    'outer: loop {
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let r = target[t[i] * d + t[j]];
            if r != NONE {
                let r = r as usize;
                t = [r / d, r % d, t[k]];
                t.sort_unstable();
                continue 'outer;
            }
        }
        return t;
    }
}
