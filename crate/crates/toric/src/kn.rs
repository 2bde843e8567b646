//! A quadratic Groebner basis of the complete graph's toric ideal with the
//! vertices placed around a convex polygon, and the bases it induces on
//! subgraphs missing only polygon sides.
//!
//! For `i < j < k < l` the crossing pair `{i,k},{j,l}` is the tail of both
//! binomials on those four vertices. The weight `n^2 - s(n - s)` on an edge
//! whose endpoints are `s` apart realizes this: the function `s(n - s)` is
//! strictly concave, so each non-crossing pair weighs more than the
//! crossing one.

use torigraph_core::Graph;

use crate::binomial::Binomial;
use crate::gb::{satisfies_buchberger_criterion, ReducedGB};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ToricError;

/// Weight of the edge `{i, j}` of the `n`-gon.
pub fn circular_weight(n: usize, i: usize, j: usize) -> i64 {
    let s = i.abs_diff(j) as i64;
    let n = n as i64;
    n * n - s * (n - s)
}

/// The circular basis of `I_{K_n}` for `4 <= n <= 9`, verified.
pub fn kn_circular_gb(n: usize) -> Result<ReducedGB, ToricError> {
    if !(4..=9).contains(&n) {
        return Err(ToricError::KnOutOfRange(n));
    }
    let kn = Graph::complete(n).expect("n <= 9");
    let x = |a: usize, b: usize| kn.edge_index(a, b).expect("complete graph");
    let weights: Vec<i64> = kn
        .edges()
        .iter()
        .map(|&(a, b)| circular_weight(n, a, b))
        .collect();
    let ord = TermOrder::weighted(&weights)?;
    let mut elements = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let crossing = Monomial::product(&[x(i, k), x(j, l)]);
                    for lead in [
                        Monomial::product(&[x(i, j), x(k, l)]),
                        Monomial::product(&[x(i, l), x(j, k)]),
                    ] {
                        let f = Binomial::new(lead, crossing)?;
                        if !f.is_oriented(&ord) {
                            return Err(ToricError::VerificationFailed(format!(
                                "weight does not make {f:?} lead with its non-crossing pair"
                            )));
                        }
                        elements.push(f);
                    }
                }
            }
        }
    }
    if !satisfies_buchberger_criterion(&elements) {
        return Err(ToricError::VerificationFailed(format!(
            "circular basis of K_{n} fails the Buchberger criterion"
        )));
    }
    Ok(ReducedGB::from_elements(ord, elements))
}

/// Normalizes a polygon side of the `n`-gon, or reports it is a diagonal.
fn boundary_side(n: usize, (a, b): (usize, usize)) -> Result<(usize, usize), ToricError> {
    let (a, b) = (a.min(b), a.max(b));
    if b < n && (b == a + 1 || (a == 0 && b == n - 1)) {
        Ok((a, b))
    } else {
        Err(ToricError::NotOnBoundary((a, b)))
    }
}

/// `K_n` minus the given polygon sides.
pub fn complete_minus(n: usize, removed: &[(usize, usize)]) -> Result<Graph, ToricError> {
    let mut sides = Vec::new();
    for &e in removed {
        sides.push(boundary_side(n, e)?);
    }
    let edges: Vec<(usize, usize)> = Graph::complete(n)
        .map_err(|_| ToricError::KnOutOfRange(n))?
        .edges()
        .iter()
        .copied()
        .filter(|e| !sides.contains(e))
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("subgraph of K_n"))
}

/// Drops the elements of the circular basis whose leading monomial uses a
/// removed side. Sides never occur in a crossing pair, so what is left is
/// a quadratic basis for `K_n` minus those sides, with variables numbered
/// by that graph's sorted edge list.
pub fn eliminate_to_subgraph_gb(
    gbn: &ReducedGB,
    removed: &[(usize, usize)],
) -> Result<ReducedGB, ToricError> {
    let n = (1..=9)
        .find(|&n| n * (n - 1) / 2 == gbn.d())
        .ok_or(ToricError::KnOutOfRange(gbn.d()))?;
    let kn = Graph::complete(n).expect("n <= 9");
    let sub = complete_minus(n, removed)?;
    let keep: Vec<usize> = sub
        .edges()
        .iter()
        .map(|&(a, b)| kn.edge_index(a, b).expect("edge of K_n"))
        .collect();
    let mut map: Vec<Option<usize>> = vec![None; gbn.d()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    let mut elements = Vec::new();
    for f in gbn.elements() {
        if f.lead().remap(&map).is_none() {
            continue;
        }
        let g = f.remap(&map).ok_or_else(|| {
            ToricError::VerificationFailed(format!("{f:?} uses a removed side off its lead"))
        })?;
        elements.push(g);
    }
    if !satisfies_buchberger_criterion(&elements) {
        return Err(ToricError::VerificationFailed(
            "eliminated basis fails the Buchberger criterion".into(),
        ));
    }
    Ok(ReducedGB::from_elements(
        gbn.order().restrict(&keep),
        elements,
    ))
}

/// Vertices in polygon order such that every complement edge joins
/// neighbours on the polygon: the complement must be a disjoint union of
/// paths or a single cycle through all vertices.
fn polygon_order(comp: &Graph) -> Option<Vec<usize>> {
    let n = comp.n();
    if (0..n).any(|v| comp.degree(v) > 2) {
        return None;
    }
    let hamiltonian = n >= 3 && comp.m() == n && comp.is_connected();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for c in comp.components() {
        let verts: Vec<usize> = (0..n).filter(|&v| c & (1 << v) != 0).collect();
        let edges = comp.induced_by_mask(c).expect("component").m();
        let start = if edges + 1 == verts.len() {
            *verts
                .iter()
                .find(|&&v| comp.degree(v) <= 1)
                .expect("path end")
        } else if hamiltonian {
            0
        } else {
            return None;
        };
        let mut prev = None;
        let mut cur = start;
        loop {
            order.push(cur);
            let next = (0..n).find(|&w| comp.has_edge(cur, w) && Some(w) != prev && w != start);
            match next {
                Some(w) => {
                    prev = Some(cur);
                    cur = w;
                }
                None => break,
            }
        }
    }
    Some(order)
}

/// For a graph whose complement is a disjoint union of paths or a single
/// Hamiltonian cycle: place the vertices around a polygon so that the graph
/// is a complete graph minus polygon sides, and pull the eliminated
/// circular basis back to the graph's own edge numbering. `None` for any
/// other complement.
pub fn polygon_witness(h: &Graph) -> Result<Option<ReducedGB>, ToricError> {
    let n = h.n();
    let comp = h.complement();
    let Some(order) = polygon_order(&comp) else {
        return Ok(None);
    };
    if n < 4 {
        // at most three vertices: the toric ideal is zero
        return Ok(Some(ReducedGB::from_elements(
            TermOrder::grevlex(h.m())?,
            Vec::new(),
        )));
    }
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let removed: Vec<(usize, usize)> = comp
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u], pos[v]))
        .collect();
    let gb = eliminate_to_subgraph_gb(&kn_circular_gb(n)?, &removed)?;
    let placed = complete_minus(n, &removed)?;
    // variable of `placed` -> variable of `h`
    let back: Vec<usize> = placed
        .edges()
        .iter()
        .map(|&(a, b)| h.edge_index(order[a], order[b]).expect("same edge set"))
        .collect();
    let map: Vec<Option<usize>> = back.iter().map(|&v| Some(v)).collect();
    let elements: Vec<Binomial> = gb
        .elements()
        .iter()
        .map(|f| f.remap(&map).expect("bijection"))
        .collect();
    let ord = gb.order().permute(&back);
    if !elements.iter().all(|f| f.is_oriented(&ord)) || !satisfies_buchberger_criterion(&elements) {
        return Err(ToricError::VerificationFailed(
            "relabeled polygon basis is inconsistent".into(),
        ));
    }
    Ok(Some(ReducedGB::from_elements(ord, elements)))
}
