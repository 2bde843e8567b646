//! Integer matrices: incidence matrices of graphs, integer kernels, ranks.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use torigraph_core::Graph;

use crate::ToricError;

/// `n x m` vertex-edge incidence matrix; column `k` is the exponent vector
/// of the `k`-th edge monomial.
pub fn incidence_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; g.m()]; g.n()];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        a[u][k] = 1;
        a[v][k] = 1;
    }
    a
}

/// A basis of the integer lattice `{u : A u = 0}` for a matrix with `cols`
/// columns, via unimodular column operations. Each vector's first nonzero
/// entry is positive.
pub fn lattice_kernel_basis(a: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>, ToricError> {
    let mut m: Vec<Vec<i64>> = a.to_vec();
    if m.iter().any(|r| r.len() != cols) {
        return Err(ToricError::DimensionMismatch {
            expected: cols,
            found: m.iter().map(Vec::len).find(|&l| l != cols).unwrap_or(0),
        });
    }
    // columns of `u` track the operations applied to the columns of `m`
    let mut u: Vec<Vec<i64>> = (0..cols)
        .map(|i| (0..cols).map(|j| (i == j) as i64).collect())
        .collect();
    let mut p = 0;
    for r in 0..m.len() {
        if p == cols {
            break;
        }
        loop {
            let Some(best) = (p..cols)
                .filter(|&c| m[r][c] != 0)
                .min_by_key(|&c| m[r][c].unsigned_abs())
            else {
                break;
            };
            swap_cols(&mut m, &mut u, p, best);
            let mut done = true;
            for c in p + 1..cols {
                if m[r][c] != 0 {
                    let q = m[r][c].div_euclid(m[r][p]);
                    sub_col(&mut m, &mut u, c, p, q)?;
                    done &= m[r][c] == 0;
                }
            }
            if done {
                p += 1;
                break;
            }
        }
    }
    let mut basis: Vec<Vec<i64>> = (p..cols)
        .map(|c| u.iter().map(|row| row[c]).collect())
        .collect();
    for v in &mut basis {
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok(basis)
}

fn swap_cols(m: &mut [Vec<i64>], u: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row.swap(a, b);
    }
}

/// Column `c` -= `q` * column `p`.
fn sub_col(
    m: &mut [Vec<i64>],
    u: &mut [Vec<i64>],
    c: usize,
    p: usize,
    q: i64,
) -> Result<(), ToricError> {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row[c] = q
            .checked_mul(row[p])
            .and_then(|x| row[c].checked_sub(x))
            .ok_or(ToricError::ExponentOverflow)?;
    }
    Ok(())
}

/// Pivot columns of the reduced row echelon form over the rationals.
pub fn pivot_columns(rows: &[Vec<i64>], cols: usize) -> Vec<usize> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            for k in c..cols {
                let v = &m[i][k] * &a - &m[r][k] * &b;
                m[i][k] = v;
            }
            let g = m[i]
                .iter()
                .fold(BigInt::zero(), |acc, x| num_integer_gcd(&acc, x));
            if !g.is_zero() {
                for x in m[i].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    pivot_columns(rows, cols).len()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
        a.iter()
            .map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            incidence_matrix(&Graph::complete(2).unwrap()),
            vec![vec![1], vec![1]]
        );
        let tri = incidence_matrix(&Graph::complete(3).unwrap());
        assert_eq!(tri.len(), 3);
        for k in 0..3 {
            assert_eq!(tri.iter().map(|r| r[k]).sum::<i64>(), 2);
        }
        let c4 = incidence_matrix(&Graph::cycle(4).unwrap());
        assert_eq!(rank(&c4, 4), 3);
    }

    #[test]
    fn kernel_examples() {
        // C4 edges sorted: 01, 03, 12, 23; walk 0-1-2-3 uses 01, 12, 23, 03
        let c4 = Graph::cycle(4).unwrap();
        let k = lattice_kernel_basis(&incidence_matrix(&c4), 4).unwrap();
        assert_eq!(k, vec![vec![1, -1, -1, 1]]);
        let tree = Graph::path(5).unwrap();
        assert!(lattice_kernel_basis(&incidence_matrix(&tree), 4)
            .unwrap()
            .is_empty());
        let c6 = Graph::cycle(6).unwrap();
        let k6 = lattice_kernel_basis(&incidence_matrix(&c6), 6).unwrap();
        assert_eq!(k6.len(), 1);
        assert!(k6[0].iter().all(|x| x.abs() == 1));
        assert_eq!(mat_vec(&incidence_matrix(&c6), &k6[0]), vec![0; 6]);
    }

    #[test]
    fn kernel_rank_matches_nullity() {
        for g in torigraph_core::enumerate_connected(6).unwrap() {
            let a = incidence_matrix(&g);
            let k = lattice_kernel_basis(&a, g.m()).unwrap();
            assert_eq!(k.len(), g.m() - rank(&a, g.m()));
            for v in &k {
                assert_eq!(mat_vec(&a, v), vec![0; g.n()]);
            }
            let expected = if g.is_bipartite() { g.n() - 1 } else { g.n() };
            assert_eq!(rank(&a, g.m()), expected);
        }
    }

    #[test]
    fn pivots() {
        let rows = vec![vec![0, 2, 4], vec![0, 1, 2], vec![1, 0, 1]];
        assert_eq!(pivot_columns(&rows, 3), vec![0, 1]);
    }
}
