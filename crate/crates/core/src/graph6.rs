//! The graph6 interchange format for graphs on at most 62 vertices.
//!
//! Byte 0 is `n + 63`. The upper-triangle bits `b(i, j)` are read column by
//! column (`j = 1..n`, `i = 0..j`), packed six to a byte, most significant
//! bit first, zero padded, and each group `x` is written as `x + 63`.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("expected {expected} bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
    #[error("graph6 with {0} vertices is not supported")]
    Unsupported(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn graph6_encode(g: &Graph) -> String {
    encode_rows(g.n(), g.rows())
}

pub(crate) fn encode_rows(n: usize, rows: &[u16]) -> String {
    debug_assert!(n <= 62);
    let nbits = n * (n.saturating_sub(1)) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | ((rows[i] >> j) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn graph6_decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }
    if first == 126 {
        return Err(Graph6Error::Unsupported(63));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::Unsupported(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(Graph6Error::Length {
            expected: expected + 1,
            found: bytes.len(),
        });
    }
    let bit = |k: usize| ((rest[k / 6] - 63) >> (5 - k % 6)) & 1;
    for k in nbits..expected * 6 {
        if bit(k) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    let mut rows = vec![0u16; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(n, &rows)?)
}
