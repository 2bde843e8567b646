//! Isomorph-free generation of graphs on `n` vertices.
//!
//! Every graph on `n` vertices is a graph on `n - 1` vertices plus one vertex
//! with some neighborhood, so extending one representative per class on
//! `n - 1` vertices by every neighborhood and keeping one representative per
//! canonical form is exhaustive. Output is ordered by canonical graph6.

use std::collections::HashSet;

use thiserror::Error;

use crate::canon::{canonical_code, rows_from_code};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    OutOfRange(usize),
}

/// Connected graphs on `n` vertices, one per isomorphism class, each already
/// in canonical labeling, in increasing canonical graph6 order.
#[derive(Debug)]
pub struct GraphStream {
    n: usize,
    graphs: std::vec::IntoIter<Graph>,
    yielded: usize,
}

impl GraphStream {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of graphs yielded so far.
    pub fn yielded(&self) -> usize {
        self.yielded
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let g = self.graphs.next()?;
        self.yielded += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.graphs.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

pub fn enumerate_connected(n: usize) -> Result<GraphStream, EnumerateError> {
    let graphs: Vec<Graph> = enumerate_all(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect();
    Ok(GraphStream {
        n,
        graphs: graphs.into_iter(),
        yielded: 0,
    })
}

/// All graphs on `n` vertices up to isomorphism, connected or not.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(EnumerateError::OutOfRange(n));
    }
    let mut level: Vec<u128> = vec![0];
    for k in 2..=n {
        let mut next: HashSet<u128> = HashSet::new();
        for &code in &level {
            let mut rows = rows_from_code(k - 1, code);
            let new = k - 1;
            for nbhd in 0u16..(1 << (k - 1)) {
                rows[new] = nbhd;
                let mut r = rows;
                for v in 0..new {
                    if nbhd & (1 << v) != 0 {
                        r[v] |= 1 << new;
                    }
                }
                next.insert(canonical_code(k, &r));
            }
        }
        level = next.into_iter().collect();
    }
    level.sort_unstable();
    Ok(level
        .into_iter()
        .map(|code| Graph::from_rows_unchecked(n, rows_from_code(n, code)))
        .collect())
}
