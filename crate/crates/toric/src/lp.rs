//! Exact linear feasibility by the two-phase simplex method's first phase,
//! over the rationals with Bland's anti-cycling rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point `z` with `eq[i] . z = eq_rhs[i]` and `ge[i] . z >= ge_rhs[i]`,
/// or `None` when the system is infeasible. Variables are free.
pub fn feasible_point(
    eq: &[Vec<i64>],
    eq_rhs: &[i64],
    ge: &[Vec<i64>],
    ge_rhs: &[i64],
    vars: usize,
) -> Option<Vec<BigRational>> {
    let rows = eq.len() + ge.len();
    let n_s = ge.len();
    // columns: z+ (vars), z- (vars), surplus (n_s), artificial (rows), rhs
    let art0 = 2 * vars + n_s;
    let width = art0 + rows + 1;
    let rhs = width - 1;
    let zero = BigRational::zero();
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for (k, (coefs, &b)) in eq
        .iter()
        .zip(eq_rhs)
        .chain(ge.iter().zip(ge_rhs))
        .enumerate()
    {
        let mut row = vec![zero.clone(); width];
        for (j, &a) in coefs.iter().enumerate() {
            row[j] = rat(a);
            row[vars + j] = rat(-a);
        }
        if k >= eq.len() {
            row[2 * vars + (k - eq.len())] = rat(-1);
        }
        row[rhs] = rat(b);
        if b < 0 {
            row.iter_mut().for_each(|x| *x = -x.clone());
        }
        row[art0 + k] = BigRational::one();
        t.push(row);
    }
    let mut basis: Vec<usize> = (art0..art0 + rows).collect();
    // phase-one objective: minimize the sum of artificials
    let mut obj = vec![zero.clone(); width];
    for row in &t {
        for j in (0..art0).chain(std::iter::once(rhs)) {
            obj[j] -= &row[j];
        }
    }
    loop {
        let Some(enter) = (0..art0).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (p, _) = leave.expect("phase one is bounded below by zero");
        pivot(&mut t, &mut obj, p, enter);
        basis[p] = enter;
    }
    if !obj[rhs].is_zero() {
        return None;
    }
    let mut z = vec![zero; vars];
    for (i, &b) in basis.iter().enumerate() {
        if b < vars {
            z[b] += &t[i][rhs];
        } else if b < 2 * vars {
            z[b - vars] -= &t[i][rhs];
        }
    }
    Some(z)
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], p: usize, c: usize) {
    let inv = t[p][c].recip();
    for x in t[p].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let prow = t[p].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    let eliminate = |row: &mut [BigRational]| {
        let f = row[c].clone();
        if f.is_zero() {
            return;
        }
        for &j in &nz {
            row[j] -= &f * &prow[j];
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != p {
            eliminate(row);
        }
    }
    eliminate(obj);
}
