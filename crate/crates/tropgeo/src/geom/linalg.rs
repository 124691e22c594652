//! Dense Gaussian elimination over an exact field.
//!
//! Sizes here are tiny (ambient dimension at most four), so the solver is a
//! plain fraction-based elimination with full pivot search for a nonzero
//! entry; no pivoting strategy beyond that is needed for exact scalars.

use crate::scalar::ExactField;

/// Row echelon reduction in place; returns the pivot columns.
fn echelon<T: ExactField>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix given as rows.
pub fn rank<T: ExactField>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    echelon(&mut m).len()
}

/// One solution of `A x = b` with free variables set to zero, or `None` when
/// the system is inconsistent.
pub fn solve<T: ExactField>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.contains(&cols) {
        return None; // pivot in the rhs column: inconsistent
    }
    let mut x = vec![T::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// A basis of the nullspace of `A` (rows are functional constraints).
///
/// The empty matrix has the full standard basis as its nullspace.
pub fn nullspace<T: ExactField>(a: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    if a.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut e = vec![T::zero(); cols];
                e[i] = T::one();
                e
            })
            .collect();
    }
    let mut m: Vec<Vec<T>> = a.to_vec();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = T::zero() - m[r][f].clone();
            }
            v
        })
        .collect()
}
