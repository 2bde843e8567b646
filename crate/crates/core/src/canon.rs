//! Canonical labeling by minimizing the graph6 bit string.
//!
//! The search individualizes vertices of an equitable ordered partition and
//! refines after every choice, so only labelings compatible with the
//! (isomorphism-invariant) refinement are compared. Transposing two twins in
//! the target cell is an automorphism fixing the partition, so only one twin
//! per class is branched on.

use std::fmt;

use crate::graph::{bits, Graph, MAX_VERTICES};

/// Canonical graph6 string of a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (canon, _) = canonical_labeling(g);
    CanonicalForm(crate::graph6_encode(&canon))
}

/// The canonical relabeling of `g` and the map `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    let order = best_order(n, &g.raw_rows());
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let canon = g.relabel(&perm).expect("permutation is valid");
    (canon, perm)
}

/// Canonical code of raw adjacency rows: the graph6 bit string of the
/// canonical relabeling, packed most-significant-first into an integer.
pub(crate) fn canonical_code(n: usize, rows: &[u16; MAX_VERTICES]) -> u128 {
    let order = best_order(n, rows);
    code_of(n, rows, &order)
}

pub(crate) fn rows_from_code(n: usize, code: u128) -> [u16; MAX_VERTICES] {
    let nbits = n * n.saturating_sub(1) / 2;
    let mut rows = [0u16; MAX_VERTICES];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (nbits - 1 - k)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

fn code_of(n: usize, rows: &[u16; MAX_VERTICES], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..n {
        let row_j = rows[order[j]];
        for &oi in &order[..j] {
            code = (code << 1) | ((row_j >> oi) & 1) as u128;
        }
    }
    code
}

fn best_order(n: usize, rows: &[u16; MAX_VERTICES]) -> Vec<usize> {
    let mut search = Search {
        n,
        rows,
        best: None,
    };
    let mut cells = vec![crate::graph::full_mask(n)];
    refine(rows, &mut cells);
    search.descend(cells);
    search.best.expect("at least one leaf").1
}

struct Search<'a> {
    n: usize,
    rows: &'a [u16; MAX_VERTICES],
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u16>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = code_of(self.n, self.rows, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target];
        let mut covered = 0u16;
        for v in bits(cell) {
            if covered & (1 << v) != 0 {
                continue;
            }
            // twins of v inside the cell give isomorphic subtrees
            for u in bits(cell) {
                if self.rows[u] & !(1 << v) == self.rows[v] & !(1 << u) {
                    covered |= 1 << u;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.rows, &mut next);
            self.descend(next);
        }
    }
}

/// Refines an ordered partition to the coarsest equitable one, splitting
/// cells by neighbor counts into each splitter cell. Fragments are ordered
/// by increasing count, which keeps the result isomorphism-invariant.
fn refine(rows: &[u16; MAX_VERTICES], cells: &mut Vec<u16>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut x = 0;
            while x < cells.len() {
                let cell = cells[x];
                if cell.count_ones() < 2 {
                    x += 1;
                    continue;
                }
                let mut by_count = [0u16; MAX_VERTICES + 1];
                for v in bits(cell) {
                    by_count[(rows[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let pieces: Vec<u16> = by_count.iter().copied().filter(|&p| p != 0).collect();
                if pieces.len() > 1 {
                    cells.splice(x..=x, pieces.iter().copied());
                    changed = true;
                    x += pieces.len();
                } else {
                    x += 1;
                }
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}
