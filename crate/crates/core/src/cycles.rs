//! Cycles, chords, crossings, bridges and even closed walks.
//!
//! Chord positions are 0-based indices into the stored vertex sequence of a
//! cycle. Only differences of positions matter for parity, so the 0-based
//! convention agrees with the 1-based one.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(usize),
    #[error("{0:?} is not an edge of the host graph")]
    MissingEdge((usize, usize)),
    #[error("chord parity is only defined on even cycles")]
    OddCycle,
    #[error("bridges are only defined between vertex-disjoint cycles")]
    SharedVertex,
    #[error("closed walk binomials need an even walk, got length {0}")]
    OddWalk(usize),
}

/// A cycle stored in canonical orientation: the least vertex first and the
/// second vertex smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    verts: Vec<usize>,
    vertex_mask: u16,
}

impl Cycle {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Cycle, CycleError> {
        let q = verts.len();
        if q < 3 {
            return Err(CycleError::TooShort(q));
        }
        let mut mask = 0u16;
        for &v in verts {
            if v >= g.n() {
                return Err(CycleError::MissingEdge((v, v)));
            }
            if mask & (1 << v) != 0 {
                return Err(CycleError::RepeatedVertex(v));
            }
            mask |= 1 << v;
        }
        for k in 0..q {
            let (u, v) = (verts[k], verts[(k + 1) % q]);
            if !g.has_edge(u, v) {
                return Err(CycleError::MissingEdge((u, v)));
            }
        }
        Ok(Self::canonical(verts, mask))
    }

    fn canonical(verts: &[usize], mask: u16) -> Cycle {
        let q = verts.len();
        let start = (0..q).min_by_key(|&k| verts[k]).expect("nonempty");
        let mut out: Vec<usize> = (0..q).map(|k| verts[(start + k) % q]).collect();
        if out[1] > out[q - 1] {
            out[1..].reverse();
        }
        Cycle {
            verts: out,
            vertex_mask: mask,
        }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.verts.len().is_multiple_of(2)
    }

    pub fn vertex_mask(&self) -> u16 {
        self.vertex_mask
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }

    /// Whether positions `a` and `b` are consecutive around the cycle.
    pub fn positions_adjacent(&self, a: usize, b: usize) -> bool {
        let q = self.len();
        (a + 1) % q == b || (b + 1) % q == a
    }

    /// Whether `{u, v}` is one of the cycle's own edges.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(a), Some(b)) => self.positions_adjacent(a, b),
            _ => false,
        }
    }

    /// The cycle's edges as vertex pairs `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let q = self.len();
        (0..q)
            .map(|k| {
                let (a, b) = (self.verts[k], self.verts[(k + 1) % q]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// A chord `{v_i, v_j}` of a cycle, `i < j` positions in the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
    pub edge: (usize, usize),
}

/// Even-chords have odd position difference, odd-chords even difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChordParity {
    EvenChord,
    OddChord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    Any,
    Even,
    Odd,
}

impl ParityFilter {
    fn accepts(self, len: usize) -> bool {
        match self {
            ParityFilter::Any => true,
            ParityFilter::Even => len.is_multiple_of(2),
            ParityFilter::Odd => len % 2 == 1,
        }
    }
}

/// Every cycle with length in `min_len..=max_len` passing the parity filter,
/// each once in canonical orientation.
///
/// Rooted DFS: the root is the least vertex of the cycle, only larger
/// vertices are explored, and a closing path is kept only if its second
/// vertex is smaller than its last.
pub fn enumerate_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    parity: ParityFilter,
) -> Vec<Cycle> {
    let mut out = Vec::new();
    let max_len = max_len.min(g.n());
    if min_len > max_len {
        return out;
    }
    let mut path = Vec::with_capacity(max_len);
    for root in 0..g.n() {
        path.clear();
        path.push(root);
        let allowed = !((2u16 << root) - 1);
        extend(
            g,
            root,
            allowed,
            1 << root,
            &mut path,
            min_len.max(3),
            max_len,
            parity,
            &mut out,
        );
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    root: usize,
    allowed: u16,
    used: u16,
    path: &mut Vec<usize>,
    min_len: usize,
    max_len: usize,
    parity: ParityFilter,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path has a root");
    let q = path.len();
    if q >= min_len && parity.accepts(q) && path[1] < last && g.has_edge(last, root) {
        out.push(Cycle {
            verts: path.clone(),
            vertex_mask: used,
        });
    }
    if q == max_len {
        return;
    }
    for w in bits(g.neighbors(last) & allowed & !used) {
        path.push(w);
        extend(
            g,
            root,
            allowed,
            used | (1 << w),
            path,
            min_len,
            max_len,
            parity,
            out,
        );
        path.pop();
    }
}

pub fn chords(g: &Graph, c: &Cycle) -> Vec<Chord> {
    let q = c.len();
    let mut out = Vec::new();
    for i in 0..q {
        for j in i + 2..q {
            if i == 0 && j == q - 1 {
                continue;
            }
            let (u, v) = (c.verts[i], c.verts[j]);
            if g.has_edge(u, v) {
                out.push(Chord {
                    i,
                    j,
                    edge: (u.min(v), u.max(v)),
                });
            }
        }
    }
    out
}

pub fn chord_parity(c: &Cycle, ch: &Chord) -> Result<ChordParity, CycleError> {
    if !c.is_even() {
        return Err(CycleError::OddCycle);
    }
    Ok(if (ch.j - ch.i) % 2 == 1 {
        ChordParity::EvenChord
    } else {
        ChordParity::OddChord
    })
}

/// Two chords cross when their position intervals interleave and their
/// endpoints pair up along edges of the cycle.
pub fn cross_in_cycle(c: &Cycle, a: &Chord, b: &Chord) -> bool {
    let (i, j, i2, j2) = (a.i, a.j, b.i, b.j);
    let interleaved = (i < i2 && i2 < j && j < j2) || (i2 < i && i < j2 && j2 < j);
    if !interleaved {
        return false;
    }
    (c.positions_adjacent(i, i2) && c.positions_adjacent(j, j2))
        || (c.positions_adjacent(i, j2) && c.positions_adjacent(j, i2))
}

pub fn is_minimal_cycle(g: &Graph, c: &Cycle) -> bool {
    chords(g, c).is_empty()
}

/// Edges of `g` joining the two vertex-disjoint cycles.
pub fn bridges(g: &Graph, c1: &Cycle, c2: &Cycle) -> Result<Vec<(usize, usize)>, CycleError> {
    if c1.vertex_mask & c2.vertex_mask != 0 {
        return Err(CycleError::SharedVertex);
    }
    let mut out = Vec::new();
    for u in bits(c1.vertex_mask) {
        for v in bits(g.neighbors(u) & c2.vertex_mask) {
            out.push((u.min(v), u.max(v)));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A closed walk `v_1, ..., v_q, v_1`; `verts` omits the closing repeat and
/// `edges[k]` is the variable index of `{v_k, v_(k+1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub verts: Vec<usize>,
    pub edges: Vec<usize>,
}

impl ClosedWalk {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<ClosedWalk, CycleError> {
        let q = verts.len();
        let mut edges = Vec::with_capacity(q);
        for k in 0..q {
            let (u, v) = (verts[k], verts[(k + 1) % q]);
            edges.push(g.edge_index(u, v).ok_or(CycleError::MissingEdge((u, v)))?);
        }
        Ok(ClosedWalk {
            verts: verts.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Exponent difference of the walk binomial: `+1` per odd-position edge
    /// (1-based), `-1` per even-position edge.
    pub fn exponent_difference(&self, d: usize) -> Result<Vec<i32>, CycleError> {
        if self.len() % 2 == 1 {
            return Err(CycleError::OddWalk(self.len()));
        }
        let mut u = vec![0i32; d];
        for (k, &e) in self.edges.iter().enumerate() {
            u[e] += if k % 2 == 0 { 1 } else { -1 };
        }
        Ok(u)
    }
}

/// Even closed walks of length at most `max_len` whose binomials are nonzero
/// and primitive (exponent difference with gcd 1), one walk per binomial up
/// to sign, ordered by length. A non-primitive `x^(ka) - x^(kb)` is a
/// multiple of `x^a - x^b` and is never needed as a generator.
///
/// Rotating a walk by an even shift keeps its binomial and an odd shift
/// negates it, so every class has a representative starting at its least
/// vertex; the search only starts walks there.
pub fn enumerate_even_closed_walks(g: &Graph, max_len: usize) -> Vec<ClosedWalk> {
    let d = g.m();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut found: Vec<ClosedWalk> = Vec::new();
    for len in (2..=max_len).step_by(2) {
        for start in 0..g.n() {
            let mut walk = vec![start];
            walks_from(g, start, len, &mut walk, &mut |verts| {
                let w = ClosedWalk::new(g, verts).expect("walk follows edges");
                let mut u = w.exponent_difference(d).expect("even length");
                let content = u.iter().fold(0u32, |acc, &x| gcd(acc, x.unsigned_abs()));
                if content != 1 {
                    return;
                }
                if u.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    u.iter_mut().for_each(|x| *x = -*x);
                }
                if seen.insert(u) {
                    found.push(w);
                }
            });
        }
    }
    found
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn walks_from(
    g: &Graph,
    start: usize,
    len: usize,
    walk: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let last = *walk.last().expect("nonempty walk");
    if walk.len() == len {
        if g.has_edge(last, start) {
            emit(walk);
        }
        return;
    }
    let allowed = !((1u16 << start) - 1);
    for w in bits(g.neighbors(last) & allowed) {
        walk.push(w);
        walks_from(g, start, len, walk, emit);
        walk.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (k, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(k);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    /// Independent count: for every vertex subset, count Hamiltonian cycles
    /// of the induced subgraph by checking all orderings.
    fn brute_force_cycle_count(g: &Graph) -> usize {
        let mut total = 0;
        for mask in 0u16..(1 << g.n()) {
            let k = mask.count_ones() as usize;
            if k < 3 {
                continue;
            }
            let vs: Vec<usize> = bits(mask).collect();
            let mut seen = HashSet::new();
            for p in permutations(&vs[1..]) {
                let mut cyc = vec![vs[0]];
                cyc.extend(p);
                let closed = (0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k]));
                if closed {
                    seen.insert(Cycle::new(g, &cyc).unwrap());
                }
            }
            total += seen.len();
        }
        total
    }

    #[test]
    fn cycle_counts() {
        let k4 = Graph::complete(4).unwrap();
        let all = enumerate_cycles(&k4, 3, 4, ParityFilter::Any);
        assert_eq!(all.len(), 7);
        assert_eq!(all.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(
            enumerate_cycles(&Graph::cycle(6).unwrap(), 3, 6, ParityFilter::Any).len(),
            1
        );
        let k8 = Graph::complete(8).unwrap();
        let n8 = enumerate_cycles(&k8, 3, 8, ParityFilter::Any).len();
        // sum over k of C(8,k) (k-1)!/2
        let formula: usize = (3..=8)
            .map(|k| {
                let binom = (0..k).fold(1, |acc, i| acc * (8 - i) / (i + 1));
                binom * (1..k).product::<usize>() / 2
            })
            .sum();
        assert_eq!(formula, 8018);
        assert_eq!(n8, 8018);
    }

    #[test]
    fn cycle_counts_match_brute_force_on_small_graphs() {
        for g in crate::enumerate_connected(5).unwrap() {
            let fast = enumerate_cycles(&g, 3, 5, ParityFilter::Any).len();
            assert_eq!(fast, brute_force_cycle_count(&g), "{g:?}");
        }
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            enumerate_cycles(&k5, 3, 5, ParityFilter::Any).len(),
            brute_force_cycle_count(&k5)
        );
    }

    #[test]
    fn canonical_orientation() {
        let g = Graph::cycle(6).unwrap();
        let c = Cycle::new(&g, &[3, 2, 1, 0, 5, 4]).unwrap();
        assert_eq!(c.verts(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(
            Cycle::new(&g, &[0, 1, 3, 4, 5, 2]),
            Err(CycleError::MissingEdge((1, 3)))
        );
        assert_eq!(Cycle::new(&g, &[0, 1]), Err(CycleError::TooShort(2)));
    }

    #[test]
    fn chord_examples() {
        let k6 = Graph::complete(6).unwrap();
        let c6 = Cycle::new(&k6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(chords(&k6, &c6).len(), 9);
        let c4 = Graph::cycle(4).unwrap();
        let cyc4 = Cycle::new(&c4, &[0, 1, 2, 3]).unwrap();
        assert!(chords(&c4, &cyc4).is_empty());
        let w6 = Graph::wheel(5).unwrap();
        let rim = Cycle::new(&w6, &[0, 1, 2, 3, 4]).unwrap();
        assert!(chords(&w6, &rim).is_empty());
    }

    #[test]
    fn parity_examples() {
        let k6 = Graph::complete(6).unwrap();
        let c6 = Cycle::new(&k6, &[0, 1, 2, 3, 4, 5]).unwrap();
        let ch = |i, j| Chord {
            i,
            j,
            edge: (c6.verts()[i], c6.verts()[j]),
        };
        // v1v4: positions 0,3
        assert_eq!(chord_parity(&c6, &ch(0, 3)), Ok(ChordParity::EvenChord));
        assert_eq!(chord_parity(&c6, &ch(0, 2)), Ok(ChordParity::OddChord));
        let k4 = Graph::complete(4).unwrap();
        let c4 = Cycle::new(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            chord_parity(
                &c4,
                &Chord {
                    i: 0,
                    j: 2,
                    edge: (0, 2)
                }
            ),
            Ok(ChordParity::OddChord)
        );
        let tri = Cycle::new(&k4, &[0, 1, 2]).unwrap();
        assert_eq!(
            chord_parity(
                &tri,
                &Chord {
                    i: 0,
                    j: 2,
                    edge: (0, 2)
                }
            ),
            Err(CycleError::OddCycle)
        );
    }

    #[test]
    fn crossing_examples() {
        let k6 = Graph::complete(6).unwrap();
        let c6 = Cycle::new(&k6, &[0, 1, 2, 3, 4, 5]).unwrap();
        let ch = |i: usize, j: usize| Chord { i, j, edge: (i, j) };
        // {v1,v4} and {v2,v5}
        assert!(cross_in_cycle(&c6, &ch(0, 3), &ch(1, 4)));
        assert!(cross_in_cycle(&c6, &ch(1, 4), &ch(0, 3)));
        // {v1,v4} and {v2,v6}
        assert!(!cross_in_cycle(&c6, &ch(0, 3), &ch(1, 5)));
        assert!(!cross_in_cycle(&c6, &ch(0, 3), &ch(0, 3)));
    }

    #[test]
    fn minimality() {
        let k4 = Graph::complete(4).unwrap();
        for c in enumerate_cycles(&k4, 3, 4, ParityFilter::Any) {
            assert_eq!(is_minimal_cycle(&k4, &c), c.len() == 3);
            if c.len() == 4 {
                assert_eq!(chords(&k4, &c).len(), 2);
            }
        }
        let w6 = Graph::wheel(5).unwrap();
        assert!(is_minimal_cycle(
            &w6,
            &Cycle::new(&w6, &[0, 1, 2, 3, 4]).unwrap()
        ));
    }

    #[test]
    fn bridge_examples() {
        let joined =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
                .unwrap();
        let t1 = Cycle::new(&joined, &[0, 1, 2]).unwrap();
        let t2 = Cycle::new(&joined, &[3, 4, 5]).unwrap();
        assert_eq!(bridges(&joined, &t1, &t2).unwrap(), vec![(2, 3)]);

        let k6 = Graph::complete(6).unwrap();
        let a = Cycle::new(&k6, &[0, 1, 2]).unwrap();
        let b = Cycle::new(&k6, &[3, 4, 5]).unwrap();
        assert_eq!(bridges(&k6, &a, &b).unwrap().len(), 9);

        let apart =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let a = Cycle::new(&apart, &[0, 1, 2]).unwrap();
        let b = Cycle::new(&apart, &[3, 4, 5]).unwrap();
        assert!(bridges(&apart, &a, &b).unwrap().is_empty());
        let c = Cycle::new(&k6, &[2, 3, 4]).unwrap();
        let a = Cycle::new(&k6, &[0, 1, 2]).unwrap();
        assert_eq!(bridges(&k6, &a, &c), Err(CycleError::SharedVertex));
    }

    #[test]
    fn even_closed_walk_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let walks = enumerate_even_closed_walks(&c4, 8);
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].len(), 4);

        let bt = bowtie();
        let walks = enumerate_even_closed_walks(&bt, 6);
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].len(), 6);
        let u = walks[0].exponent_difference(bt.m()).unwrap();
        assert_eq!(u.iter().filter(|&&x| x > 0).sum::<i32>(), 3);

        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(enumerate_even_closed_walks(&tree, 8).is_empty());
    }

    #[test]
    fn odd_walk_has_no_binomial() {
        let k3 = Graph::complete(3).unwrap();
        let w = ClosedWalk::new(&k3, &[0, 1, 2]).unwrap();
        assert_eq!(w.exponent_difference(3), Err(CycleError::OddWalk(3)));
    }
}
