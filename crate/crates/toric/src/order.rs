//! Term orders: a positive weight, optional refining weight rows, then
//! graded reverse lexicographic order on a fixed variable ranking.

use std::cmp::Ordering;

use crate::monomial::{support_iter, Monomial, MAX_VARS};
use crate::ToricError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    d: usize,
    weight: Vec<i64>,
    refinements: Vec<Vec<i64>>,
    /// Variables from most to least expensive; the tie-break looks at the
    /// last one first.
    ranking: Vec<usize>,
}

impl TermOrder {
    /// Plain grevlex with `x_0 > x_1 > ... > x_(d-1)`.
    pub fn grevlex(d: usize) -> Result<Self, ToricError> {
        Self::weighted(&vec![1; d])
    }

    /// Weight `w` refined by grevlex. Every weight must be positive.
    pub fn weighted(w: &[i64]) -> Result<Self, ToricError> {
        if w.len() > MAX_VARS {
            return Err(ToricError::TooManyVariables(w.len()));
        }
        if let Some(&bad) = w.iter().find(|&&x| x <= 0) {
            return Err(ToricError::NonPositiveWeight(bad));
        }
        Ok(TermOrder {
            d: w.len(),
            weight: w.to_vec(),
            refinements: Vec::new(),
            ranking: (0..w.len()).collect(),
        })
    }

    /// Grevlex in which `var` is the cheapest variable.
    pub fn grevlex_last(d: usize, var: usize) -> Result<Self, ToricError> {
        let mut ord = Self::grevlex(d)?;
        if var >= d {
            return Err(ToricError::DimensionMismatch {
                expected: d,
                found: var + 1,
            });
        }
        ord.ranking.retain(|&v| v != var);
        ord.ranking.push(var);
        Ok(ord)
    }

    /// Replaces the grevlex ranking; `ranking` lists the variables from most
    /// to least expensive.
    pub fn with_ranking(mut self, ranking: &[usize]) -> Result<Self, ToricError> {
        let mut sorted = ranking.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.d).collect::<Vec<_>>() {
            return Err(ToricError::DimensionMismatch {
                expected: self.d,
                found: ranking.len(),
            });
        }
        self.ranking = ranking.to_vec();
        Ok(self)
    }

    /// Adds a weight row consulted after the main weight and any earlier
    /// refinements. Entries may be negative.
    pub fn refine(mut self, row: &[i64]) -> Result<Self, ToricError> {
        if row.len() != self.d {
            return Err(ToricError::DimensionMismatch {
                expected: self.d,
                found: row.len(),
            });
        }
        self.refinements.push(row.to_vec());
        Ok(self)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn refinements(&self) -> &[Vec<i64>] {
        &self.refinements
    }

    /// The order induced on the variables `keep` (increasing), renumbered
    /// `0..keep.len()`.
    pub fn restrict(&self, keep: &[usize]) -> TermOrder {
        let pick = |row: &Vec<i64>| keep.iter().map(|&v| row[v]).collect::<Vec<_>>();
        TermOrder {
            d: keep.len(),
            weight: pick(&self.weight),
            refinements: self.refinements.iter().map(pick).collect(),
            ranking: self
                .ranking
                .iter()
                .filter_map(|v| keep.iter().position(|k| k == v))
                .collect(),
        }
    }

    /// The same order after renaming variable `v` to `map[v]`; `map` must be
    /// a permutation.
    pub fn permute(&self, map: &[usize]) -> TermOrder {
        let mv = |row: &Vec<i64>| {
            let mut out = vec![0; self.d];
            for (v, &x) in row.iter().enumerate() {
                out[map[v]] = x;
            }
            out
        };
        TermOrder {
            d: self.d,
            weight: mv(&self.weight),
            refinements: self.refinements.iter().map(mv).collect(),
            ranking: self.ranking.iter().map(|&v| map[v]).collect(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        for row in std::iter::once(&self.weight).chain(&self.refinements) {
            let o = dot(row, a).cmp(&dot(row, b));
            if o != Ordering::Equal {
                return o;
            }
        }
        let o = a.degree().cmp(&b.degree());
        if o != Ordering::Equal {
            return o;
        }
        for &v in self.ranking.iter().rev() {
            let o = b.exp(v).cmp(&a.exp(v));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

fn dot(row: &[i64], m: &Monomial) -> i128 {
    support_iter(m.support())
        .map(|i| row[i] as i128 * m.exp(i) as i128)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e).unwrap()
    }

    #[test]
    fn grevlex_basics() {
        let ord = TermOrder::grevlex(3).unwrap();
        // x0*x2 < x1^2 in grevlex with x0 > x1 > x2
        assert!(ord.greater(&m(&[0, 2, 0]), &m(&[1, 0, 1])));
        assert!(ord.greater(&m(&[1, 1, 0]), &m(&[0, 2, 0])));
        assert!(ord.greater(&m(&[0, 0, 2]), &m(&[1, 0, 0])));
    }

    #[test]
    fn weight_decides_first() {
        let ord = TermOrder::weighted(&[1, 1, 5]).unwrap();
        assert!(ord.greater(&m(&[0, 0, 1]), &m(&[2, 0, 0])));
        assert!(ord.greater(&m(&[1, 0, 1]), &m(&[0, 2, 0])));
        assert!(ord.greater(&m(&[1, 0, 1]), &m(&[0, 1, 1])));
    }

    #[test]
    fn cheapest_variable_is_last() {
        let ord = TermOrder::grevlex_last(3, 0).unwrap();
        assert!(ord.greater(&m(&[0, 0, 2]), &m(&[1, 0, 1])));
        assert!(ord.greater(&m(&[0, 1, 1]), &m(&[1, 1, 0])));
    }

    #[test]
    fn refinement_breaks_weight_ties() {
        let ord = TermOrder::grevlex(4)
            .unwrap()
            .refine(&[0, 0, 1, -1])
            .unwrap();
        let a = m(&[1, 0, 1, 0]);
        let b = m(&[0, 1, 0, 1]);
        assert!(ord.greater(&a, &b));
        let flipped = TermOrder::grevlex(4)
            .unwrap()
            .refine(&[0, 0, -1, 1])
            .unwrap();
        assert!(flipped.greater(&b, &a));
    }

    #[test]
    fn restriction_and_permutation_preserve_comparisons() {
        let ord = TermOrder::weighted(&[3, 1, 2, 1])
            .unwrap()
            .refine(&[0, 1, -1, 0])
            .unwrap();
        let a = m(&[1, 0, 0, 1]);
        let b = m(&[0, 1, 0, 1]);
        let keep = [0, 1, 3];
        let r = ord.restrict(&keep);
        let map: Vec<Option<usize>> = vec![Some(0), Some(1), None, Some(2)];
        assert_eq!(
            r.cmp(&a.remap(&map).unwrap(), &b.remap(&map).unwrap()),
            ord.cmp(&a, &b)
        );
        let perm = [2, 0, 3, 1];
        let p = ord.permute(&perm);
        let pm: Vec<Option<usize>> = perm.iter().map(|&x| Some(x)).collect();
        for (x, y) in [(&a, &b), (&b, &a), (&m(&[0, 0, 2, 0]), &a)] {
            assert_eq!(
                p.cmp(&x.remap(&pm).unwrap(), &y.remap(&pm).unwrap()),
                ord.cmp(x, y)
            );
        }
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(matches!(
            TermOrder::weighted(&[1, 0]),
            Err(ToricError::NonPositiveWeight(0))
        ));
        assert!(TermOrder::grevlex(2).unwrap().refine(&[1]).is_err());
    }
}
