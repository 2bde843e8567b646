//! Buchberger's algorithm for binomial ideals without coefficients.
//!
//! Reducing a monomial by `lead - tail` replaces a factor `lead` with
//! `tail`, so the normal form of `a - b` is `nf(a) - nf(b)` and vanishes
//! exactly when the two normal forms agree.

use std::collections::{BTreeSet, HashSet};

use crate::binomial::{Binomial, BinomialIdeal};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ToricError;

/// A reduced Groebner basis, elements oriented with leading monomial
/// first and sorted by decreasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGB {
    order: TermOrder,
    elements: Vec<Binomial>,
    max_degree: u32,
}

impl ReducedGB {
    pub(crate) fn from_elements(order: TermOrder, mut elements: Vec<Binomial>) -> Self {
        elements.sort_by(|a, b| order.cmp(b.lead(), a.lead()).then_with(|| b.cmp(a)));
        let max_degree = elements.iter().map(Binomial::degree).max().unwrap_or(0);
        ReducedGB {
            order,
            elements,
            max_degree,
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn d(&self) -> usize {
        self.order.d()
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Sorted leading monomials; determines the initial ideal, so two
    /// reduced bases of one ideal agree iff their keys agree.
    pub fn leading_key(&self) -> Vec<Monomial> {
        let mut key: Vec<Monomial> = self.elements.iter().map(|b| *b.lead()).collect();
        key.sort_unstable();
        key
    }

    /// Whether `b` lies in the ideal.
    pub fn contains(&self, b: &Binomial) -> bool {
        normal_form(b, &self.elements, &self.order).is_none()
    }
}

/// True for the empty basis (zero ideal) and for bases of degree at most 2.
pub fn is_quadratic_gb(gb: &ReducedGB) -> bool {
    gb.max_degree() <= 2
}

/// Fully reduces `m` by the oriented binomials in `basis`, always using the
/// first applicable element.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut m = *m;
    'outer: loop {
        for g in basis {
            if g.lead().divides(&m) {
                m = m.div(g.lead()).mul(g.tail());
                continue 'outer;
            }
        }
        return m;
    }
}

/// Remainder of `b` modulo `basis`, oriented under `ord`; `None` for zero.
pub fn normal_form(b: &Binomial, basis: &[Binomial], ord: &TermOrder) -> Option<Binomial> {
    let a = reduce_monomial(b.lead(), basis);
    let c = reduce_monomial(b.tail(), basis);
    Binomial::new(a, c).ok().map(|r| r.oriented(ord))
}

fn s_pair(f: &Binomial, g: &Binomial) -> (Monomial, Monomial) {
    let l = f.lead().lcm(g.lead());
    (l.div(f.lead()).mul(f.tail()), l.div(g.lead()).mul(g.tail()))
}

/// Checks that every S-pair of the oriented set reduces to zero. The
/// orientation must come from some term order, so reduction terminates.
pub fn satisfies_buchberger_criterion(basis: &[Binomial]) -> bool {
    for (j, g) in basis.iter().enumerate() {
        for f in &basis[..j] {
            if f.lead().is_coprime(g.lead()) {
                continue;
            }
            let (a, b) = s_pair(f, g);
            if reduce_monomial(&a, basis) != reduce_monomial(&b, basis) {
                return false;
            }
        }
    }
    true
}

/// Reduced Groebner basis of `ideal` under `ord`. Common factors are
/// stripped along the way only when the ideal is marked prime.
pub fn buchberger(ideal: &BinomialIdeal, ord: &TermOrder) -> Result<ReducedGB, ToricError> {
    if ord.d() != ideal.d() {
        return Err(ToricError::DimensionMismatch {
            expected: ideal.d(),
            found: ord.d(),
        });
    }
    Ok(groebner(ideal.gens(), ord, ideal.is_prime()))
}

pub(crate) fn groebner(gens: &[Binomial], ord: &TermOrder, strip: bool) -> ReducedGB {
    let mut engine = Engine {
        ord,
        strip,
        basis: Vec::new(),
        queue: BTreeSet::new(),
        pending: HashSet::new(),
    };
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(Binomial::degree);
    for g in sorted {
        if let Some(h) = engine.reduce(g.lead(), g.tail()) {
            engine.add(h);
        }
    }
    engine.run();
    engine.finish()
}

struct Engine<'a> {
    ord: &'a TermOrder,
    strip: bool,
    basis: Vec<Binomial>,
    /// Pairs `(lcm degree, j, i)` with `i < j`, cheapest first.
    queue: BTreeSet<(u32, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl Engine<'_> {
    fn reduce(&self, a: &Monomial, b: &Monomial) -> Option<Binomial> {
        let (mut a, mut b) = (*a, *b);
        loop {
            a = reduce_monomial(&a, &self.basis);
            b = reduce_monomial(&b, &self.basis);
            let r = Binomial::new(a, b).ok()?;
            if self.strip {
                let s = r.stripped();
                if s != r {
                    (a, b) = (*s.lead(), *s.tail());
                    continue;
                }
            }
            return Some(r.oriented(self.ord));
        }
    }

    fn add(&mut self, g: Binomial) {
        let j = self.basis.len();
        for (i, f) in self.basis.iter().enumerate() {
            if f.lead().is_coprime(g.lead()) {
                continue;
            }
            let deg = f.lead().lcm(g.lead()).degree();
            self.queue.insert((deg, j, i));
            self.pending.insert((i, j));
        }
        self.basis.push(g);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Buchberger's chain criterion: some third leading monomial divides
    /// the lcm and both pairs through it have already been treated.
    fn chain_skips(&self, i: usize, j: usize) -> bool {
        let l = self.basis[i].lead().lcm(self.basis[j].lead());
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k].lead().divides(&l)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn run(&mut self) {
        while let Some((_, j, i)) = self.queue.pop_first() {
            self.pending.remove(&(i, j));
            if self.chain_skips(i, j) {
                continue;
            }
            let (a, b) = s_pair(&self.basis[i], &self.basis[j]);
            if let Some(h) = self.reduce(&a, &b) {
                self.add(h);
            }
        }
    }

    fn finish(self) -> ReducedGB {
        let basis = &self.basis;
        let minimal: Vec<Binomial> = basis
            .iter()
            .enumerate()
            .filter(|&(i, g)| {
                !basis.iter().enumerate().any(|(k, f)| {
                    k != i && f.lead().divides(g.lead()) && (f.lead() != g.lead() || k < i)
                })
            })
            .map(|(_, g)| *g)
            .collect();
        let elements = minimal
            .iter()
            .map(|g| {
                let tail = reduce_monomial(g.tail(), &minimal);
                Binomial::new(*g.lead(), tail).expect("tail stays below lead")
            })
            .collect();
        ReducedGB::from_elements(self.ord.clone(), elements)
    }
}
