//! Labeled simple graphs on at most [`MAX_VERTICES`] vertices.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count. Every adjacency row fits in a `u16`.
pub const MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("induced subgraph needs a nonempty vertex set")]
    EmptyVertexSet,
    #[error("adjacency rows are not symmetric")]
    Asymmetric,
}

/// A simple undirected graph with adjacency stored as one bit row per vertex.
///
/// The edge list is kept sorted lexicographically on `(u, v)` with `u < v`;
/// the position of an edge in that list is its variable index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_VERTICES],
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
            edges: Vec::new(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = [0u16; MAX_VERTICES];
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_adjacency(n, &adj[..n])
    }

    /// Builds a graph from bit rows; `rows[v]` is the neighbor set of `v`.
    pub fn from_adjacency(n: usize, rows: &[u16]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        if rows.len() != n {
            return Err(GraphError::VertexCount(rows.len()));
        }
        let mut adj = [0u16; MAX_VERTICES];
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row & (1 << v) != 0 {
                return Err(GraphError::Loop(v));
            }
            adj[v] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if (adj[u] >> v) & 1 != (adj[v] >> u) & 1 {
                    return Err(GraphError::Asymmetric);
                }
            }
        }
        Ok(Self::from_rows_unchecked(n, adj))
    }

    pub(crate) fn from_rows_unchecked(n: usize, adj: [u16; MAX_VERTICES]) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            let mut higher = adj[u] & !((2u16 << u) - 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { n, adj, edges }
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexCount(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Self::empty(n)?.complement())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges)
    }

    /// Wheel on `rim + 1` vertices: a `rim`-cycle plus an apex.
    pub fn wheel(rim: usize) -> Result<Self, GraphError> {
        Self::cycle(rim)?.suspension()
    }

    /// The 3-sun: the hexagon `0..6` with the three chords `{0,2}`,
    /// `{2,4}`, `{0,4}`. Each chord spans an even number of hexagon steps
    /// and no two of them cross.
    pub fn three_sun() -> Self {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 2), (2, 4), (0, 4)]);
        Self::from_edges(6, &edges).expect("valid edge list")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u16] {
        &self.adj[..self.n]
    }

    pub(crate) fn raw_rows(&self) -> [u16; MAX_VERTICES] {
        self.adj
    }

    pub fn vertex_mask(&self) -> u16 {
        full_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Variable index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn edge_map(&self) -> EdgeIndexMap {
        EdgeIndexMap::new(self)
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let mut adj = [0u16; MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        Self::from_rows_unchecked(self.n, adj)
    }

    /// Adds an apex with the highest index, adjacent to every vertex.
    pub fn suspension(&self) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let apex = self.n;
        let mut adj = self.adj;
        for row in adj.iter_mut().take(self.n) {
            *row |= 1 << apex;
        }
        adj[apex] = full_mask(self.n);
        Ok(Self::from_rows_unchecked(n, adj))
    }

    /// Subgraph induced on `verts`, relabeled `0..|verts|` in increasing
    /// vertex order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut mask = 0u16;
        for &v in verts {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            mask |= 1 << v;
        }
        self.induced_by_mask(mask)
    }

    pub fn induced_by_mask(&self, mask: u16) -> Result<Graph, GraphError> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let kept: Vec<usize> = bits(mask).collect();
        let mut adj = [0u16; MAX_VERTICES];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Self::from_rows_unchecked(kept.len(), adj))
    }

    /// `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u16;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: p,
                    n: self.n,
                });
            }
            seen |= 1 << p;
        }
        if perm.len() != self.n {
            return Err(GraphError::VertexCount(perm.len()));
        }
        let mut adj = [0u16; MAX_VERTICES];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Self::from_rows_unchecked(self.n, adj))
    }

    /// Vertex masks of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<u16> {
        let mut out = Vec::new();
        let mut unseen = self.vertex_mask();
        while unseen != 0 {
            let start = unseen & unseen.wrapping_neg();
            let comp = self.reach(start);
            out.push(comp);
            unseen &= !comp;
        }
        out
    }

    fn reach(&self, start: u16) -> u16 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u16;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1) == self.vertex_mask()
    }

    /// A proper 2-coloring as the mask of color-0 vertices, or `None` for
    /// graphs with an odd cycle.
    pub fn bipartition(&self) -> Option<u16> {
        let mut color = [u8::MAX; MAX_VERTICES];
        let mut side0 = 0u16;
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                if color[v] == 0 {
                    side0 |= 1 << v;
                }
                for w in bits(self.adj[v]) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(side0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Perfect elimination ordering test. Maximum cardinality search visits
    /// vertices in reverse elimination order; the ordering is then verified
    /// by checking that the later neighbors of every vertex form a clique.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = [0usize; MAX_VERTICES];
        let mut visited = 0u16;
        let mut visit_order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited & (1 << v) == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex");
            visited |= 1 << v;
            visit_order.push(v);
            for w in bits(self.adj[v] & !visited) {
                weight[w] += 1;
            }
        }
        // elimination order is the reverse of the visit order, so the
        // "later" neighbors of v are those visited before it
        let mut earlier = 0u16;
        for &v in &visit_order {
            let later_nbrs = self.adj[v] & earlier;
            for u in bits(later_nbrs) {
                if (later_nbrs & !(1 << u)) & !self.adj[u] != 0 {
                    return false;
                }
            }
            earlier |= 1 << v;
        }
        true
    }

    pub fn is_co_chordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// No two edges on four distinct vertices induce exactly a matching.
    /// Disconnected graphs are never 2K2-free by definition.
    pub fn is_2k2_free(&self) -> bool {
        self.is_connected() && self.find_induced_2k2().is_none()
    }

    /// Two disjoint edges inducing a 2K2, if any.
    pub fn find_induced_2k2(&self) -> Option<((usize, usize), (usize, usize))> {
        let e = &self.edges;
        for (i, &(a, b)) in e.iter().enumerate() {
            for &(c, d) in &e[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if !self.has_edge(a, c)
                    && !self.has_edge(a, d)
                    && !self.has_edge(b, c)
                    && !self.has_edge(b, d)
                {
                    return Some(((a, b), (c, d)));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Bijection between edges and variable positions `0..d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndexMap {
    n: usize,
    table: Vec<Option<usize>>,
    edges: Vec<(usize, usize)>,
}

impl EdgeIndexMap {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut table = vec![None; n * n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            table[u * n + v] = Some(i);
            table[v * n + u] = Some(i);
        }
        EdgeIndexMap {
            n,
            table,
            edges: g.edges().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.table[u * self.n + v]
    }

    pub fn edge(&self, i: usize) -> Option<(usize, usize)> {
        self.edges.get(i).copied()
    }
}

pub(crate) fn full_mask(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

/// Iterates the set bit positions of a mask in increasing order.
pub fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_chordal(g: &Graph) -> bool {
        // every cycle of length > 3 has a chord <=> no induced cycle of length >= 4
        for mask in 0u16..(1 << g.n()) {
            if mask.count_ones() < 4 {
                continue;
            }
            let h = g.induced_by_mask(mask).unwrap();
            if h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2) {
                return false;
            }
        }
        true
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let cc5 = c5.complement();
        assert_eq!(cc5.m(), 5);
        assert!((0..5).all(|v| cc5.degree(v) == 2));
        assert!(cc5.is_connected());

        assert_eq!(Graph::complete(4).unwrap().complement().m(), 0);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.complement().edges(), &[(0, 2)]);
    }

    #[test]
    fn suspension_examples() {
        let w6 = Graph::cycle(5).unwrap().suspension().unwrap();
        assert_eq!(w6.n(), 6);
        assert_eq!(w6.m(), 10);
        assert_eq!(w6.degree(5), 5);

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.suspension().unwrap(), Graph::complete(2).unwrap());
        assert_eq!(
            Graph::complete(4).unwrap().suspension().unwrap(),
            Graph::complete(5).unwrap()
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let w6 = Graph::wheel(5).unwrap();
        assert_eq!(
            w6.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert_eq!(w6.induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap(), w6);
        assert_eq!(
            Graph::complete(5)
                .unwrap()
                .induced_subgraph(&[1, 3, 4])
                .unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(w6.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![0b0011, 0b1100]);
    }

    #[test]
    fn chordality_examples() {
        assert!(Graph::path(6).unwrap().is_chordal());
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.is_chordal());
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::complete(6).unwrap().is_chordal());
    }

    #[test]
    fn co_chordal_examples() {
        assert!(!Graph::cycle(5).unwrap().is_co_chordal());
        assert!(Graph::complete(4).unwrap().is_co_chordal());
        // complement of C6 is the triangular prism; brute force finds an
        // induced 4-cycle in it
        let c6 = Graph::cycle(6).unwrap();
        assert!(!brute_force_chordal(&c6.complement()));
        assert!(!c6.is_co_chordal());
    }

    #[test]
    fn two_k2_free_examples() {
        assert!(Graph::cycle(5).unwrap().is_2k2_free());
        let c6 = Graph::cycle(6).unwrap();
        assert!(!c6.is_2k2_free());
        assert!(c6.find_induced_2k2().is_some());
        for n in 2..=7 {
            assert!(Graph::complete(n).unwrap().is_2k2_free());
        }
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!disconnected.is_2k2_free());
    }

    #[test]
    fn chordal_matches_brute_force_on_all_small_graphs() {
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for bitsel in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bitsel >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(g.is_chordal(), brute_force_chordal(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn edge_index_map_is_bijection() {
        let g = Graph::wheel(5).unwrap();
        let map = g.edge_map();
        assert_eq!(map.len(), g.m());
        for i in 0..map.len() {
            let (u, v) = map.edge(i).unwrap();
            assert_eq!(map.index(u, v), Some(i));
            assert_eq!(map.index(v, u), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(map.index(0, 2), None);
        assert_eq!(g.clone().edge_map(), map);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(Graph::empty(0), Err(GraphError::VertexCount(0)));
        assert_eq!(Graph::empty(13), Err(GraphError::VertexCount(13)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_adjacency(2, &[0b10, 0b00]),
            Err(GraphError::Asymmetric)
        );
    }
}
