//! Exact linear-algebra kernel, generic over the scalar type.
//!
//! Everything the sign-sensitive modules need: rank, kernels, linear solves,
//! determinants and nonnegative feasibility (phase-1 simplex with Bland's
//! rule). Instantiated with [`crate::Rat`] throughout the library; floats
//! satisfy the bound too and are fine for residual-style computations.

use num_traits::{Num, Signed};
use std::fmt::Debug;

pub trait Scalar: Clone + PartialEq + PartialOrd + Num + Signed + Debug {}
impl<T> Scalar for T where T: Clone + PartialEq + PartialOrd + Num + Signed + Debug {}

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref<S: Scalar>(m: &mut Vec<Vec<S>>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    rref(&mut m).len()
}

/// Rank of the matrix whose columns are the given vectors.
pub fn rank_of_columns<S: Scalar>(cols: &[Vec<S>]) -> usize {
    rank(&transpose(cols))
}

pub fn transpose<S: Scalar>(rows: &[Vec<S>]) -> Vec<Vec<S>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Basis of the null space of the matrix with the given columns:
/// vectors x with sum_j x_j col_j = 0.
pub fn kernel_basis<S: Scalar>(cols: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = cols.len();
    if n == 0 {
        return Vec::new();
    }
    let mut m = transpose(cols);
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![S::zero(); n];
        v[f] = S::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve sum_j x_j col_j = rhs. Returns one solution if the system is
/// consistent (free variables set to zero).
pub fn solve<S: Scalar>(cols: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let n = cols.len();
    let dim = rhs.len();
    let mut m: Vec<Vec<S>> = (0..dim)
        .map(|i| {
            let mut row: Vec<S> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return None; // inconsistent
    }
    let mut x = vec![S::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][n].clone();
    }
    Some(x)
}

pub fn det<S: Scalar>(rows: &[Vec<S>]) -> S {
    let n = rows.len();
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let mut d = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return S::zero();
        };
        if p != c {
            m.swap(c, p);
            d = -d;
        }
        d = d * m[c][c].clone();
        let inv = m[c][c].clone();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / inv.clone();
                for j in c..n {
                    let sub = f.clone() * m[c][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
    }
    d
}

/// Are the given points affinely independent?
pub fn affinely_independent<S: Scalar>(points: &[Vec<S>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let diffs: Vec<Vec<S>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&points[0])
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    rank(&diffs) == points.len() - 1
}

/// Find x >= 0 with Ax = b (rows of `a`), or None if infeasible.
/// Phase-1 simplex with Bland's rule; exact over the scalar field.
pub fn feasible_eq_nonneg<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return Some(Vec::new());
    }
    // tableau rows: [A | I | b], artificial basis, b made nonnegative
    let width = n + m + 1;
    let mut t: Vec<Vec<S>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<S> = Vec::with_capacity(width);
        let flip = b[i] < S::zero();
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { S::one() } else { S::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // reduced cost of column j for the phase-1 objective (sum of artificials)
        let reduced = |t: &Vec<Vec<S>>, basis: &Vec<usize>, j: usize| -> S {
            let c_j = if j >= n { S::one() } else { S::zero() };
            let mut z = S::zero();
            for i in 0..m {
                if basis[i] >= n {
                    z = z + t[i][j].clone();
                }
            }
            c_j - z
        };
        let Some(enter) = (0..n + m)
            .filter(|&j| !basis.contains(&j))
            .find(|&j| reduced(&t, &basis, j) < S::zero())
        else {
            break;
        };
        // ratio test, Bland tie-break on the leaving basis variable
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter] > S::zero() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let ri = t[i][width - 1].clone() / t[i][enter].clone();
                        let rl = t[l][width - 1].clone() / t[l][enter].clone();
                        ri < rl || (ri == rl && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            break; // unbounded direction; cannot happen for phase 1
        };
        let inv = t[l][enter].clone();
        for x in t[l].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..m {
            if i != l && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let sub = f.clone() * t[l][j].clone();
                    t[i][j] = t[i][j].clone() - sub;
                }
            }
        }
        basis[l] = enter;
    }
    // objective value = sum of basic artificial values
    let mut obj = S::zero();
    for i in 0..m {
        if basis[i] >= n {
            obj = obj + t[i][width - 1].clone();
        }
    }
    if !obj.is_zero() {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

/// Nonnegative combination: find y >= 0 with sum_j y_j col_j = rhs.
pub fn nonneg_combination<S: Scalar>(cols: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    if rhs.is_empty() {
        return Some(vec![S::zero(); cols.len()]);
    }
    let a: Vec<Vec<S>> = (0..rhs.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    feasible_eq_nonneg(&a, rhs)
}

/// Is `z` in the convex hull of `points`?
pub fn in_convex_hull<S: Scalar>(points: &[Vec<S>], z: &[S]) -> bool {
    if points.is_empty() {
        return false;
    }
    // sum l_p p = z, sum l_p = 1, l >= 0
    let dim = z.len();
    let mut a: Vec<Vec<S>> = (0..dim)
        .map(|i| points.iter().map(|p| p[i].clone()).collect())
        .collect();
    a.push(vec![S::one(); points.len()]);
    let mut b: Vec<S> = z.to_vec();
    b.push(S::one());
    feasible_eq_nonneg(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn r(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    #[test]
    fn rank_and_kernel() {
        let cols = vec![vec![r(1), r(0)], vec![r(0), r(1)], vec![r(1), r(1)]];
        assert_eq!(rank_of_columns(&cols), 2);
        let k = kernel_basis(&cols);
        assert_eq!(k.len(), 1);
        // kernel vector: combination summing to zero
        let v = &k[0];
        for i in 0..2 {
            let s: Rat = (0..3).map(|j| v[j].clone() * cols[j][i].clone()).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn feasibility() {
        // (1,1) = x*(1,0) + y*(0,1), x,y >= 0
        let a = vec![vec![r(1), r(0)], vec![r(0), r(1)]];
        let b = vec![r(1), r(1)];
        assert!(feasible_eq_nonneg(&a, &b).is_some());
        // (-1,0) needs a negative coefficient
        let b2 = vec![r(-1), r(0)];
        assert!(feasible_eq_nonneg(&a, &b2).is_none());
    }

    #[test]
    fn hull_membership() {
        let tri = vec![vec![r(0), r(0)], vec![r(2), r(0)], vec![r(0), r(2)]];
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert!(in_convex_hull(&tri, &[half.clone(), half]));
        assert!(!in_convex_hull(&tri, &[r(3), r(3)]));
    }

    #[test]
    fn determinant_sign() {
        let m = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        assert_eq!(det(&m), r(-1));
    }
}
