//! Exact two-phase simplex with Bland's rule.
//!
//! Solves `min c·x` subject to `A x = b, x ≥ 0` over an exact ordered field.
//! Bland's rule (smallest-index entering column, smallest-basic-index tie
//! break on the ratio test) guarantees termination; with exact scalars there
//! is no tolerance anywhere. Problem sizes in this crate are tiny, so the
//! dense tableau is the right tool.

use crate::scalar::ExactField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, value: T },
    Infeasible,
    Unbounded,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>, // m rows, each n_cols + 1 wide (rhs last)
    cost: Vec<T>,      // reduced costs, last entry = -objective
    basis: Vec<usize>,
    n_cols: usize,
}

impl<T: ExactField> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= f.clone() * p.clone();
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland pivoting to optimality over the columns in `active`.
    /// Returns false when an unbounded ray is detected.
    fn optimize(&mut self, active: &[bool]) -> bool {
        loop {
            let entering = (0..self.n_cols)
                .find(|&j| active[j] && self.cost[j] < T::zero());
            let Some(c) = entering else {
                return true;
            };
            let mut leaving: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c] > T::zero() {
                    let better = match leaving {
                        None => true,
                        Some(l) => {
                            let lhs = self.rows[i][self.n_cols].clone()
                                * self.rows[l][c].clone();
                            let rhs = self.rows[l][self.n_cols].clone()
                                * self.rows[i][c].clone();
                            lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[l])
                        }
                    };
                    if better {
                        leaving = Some(i);
                    }
                }
            }
            let Some(r) = leaving else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

/// Minimizes `c·x` over `{x ≥ 0 : A x = b}`.
pub fn solve_lp<T: ExactField>(c: &[T], a: &[Vec<T>], b: &[T]) -> LpOutcome<T> {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Sign-normalize so the rhs is nonnegative, then append artificials.
    let n_cols = n + m;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
    for i in 0..m {
        let negate = b[i] < T::zero();
        let mut row: Vec<T> = Vec::with_capacity(n_cols + 1);
        for v in &a[i] {
            let v = v.clone();
            row.push(if negate { T::zero() - v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { T::one() } else { T::zero() });
        }
        let rhs = b[i].clone();
        row.push(if negate { T::zero() - rhs } else { rhs });
        rows.push(row);
    }

    // Phase one: minimize the sum of artificials.
    let mut cost = vec![T::zero(); n_cols + 1];
    for j in 0..n {
        let mut s = T::zero();
        for row in &rows {
            s += row[j].clone();
        }
        cost[j] = T::zero() - s;
    }
    let mut s = T::zero();
    for row in &rows {
        s += row[n_cols].clone();
    }
    cost[n_cols] = T::zero() - s;

    let mut tab = Tableau {
        rows,
        cost,
        basis: (n..n_cols).collect(),
        n_cols,
    };
    let active = vec![true; n_cols];
    let ok = tab.optimize(&active);
    debug_assert!(ok, "phase one is always bounded");
    if tab.cost[n_cols] < T::zero() {
        return LpOutcome::Infeasible;
    }

    // Drive leftover artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            if let Some(c) = (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                tab.pivot(i, c);
            } else {
                tab.rows.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // Phase two over the original columns.
    let mut cost2 = vec![T::zero(); n_cols + 1];
    cost2[..n].clone_from_slice(c);
    for (i, &bi) in tab.basis.iter().enumerate() {
        if !c[bi].is_zero() {
            let f = c[bi].clone();
            for (x, p) in cost2.iter_mut().zip(&tab.rows[i]) {
                *x -= f.clone() * p.clone();
            }
        }
    }
    tab.cost = cost2;
    let mut active = vec![false; n_cols];
    active[..n].fill(true);
    if !tab.optimize(&active) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![T::zero(); n];
    for (i, &bi) in tab.basis.iter().enumerate() {
        if bi < n {
            x[bi] = tab.rows[i][n_cols].clone();
        }
    }
    let value = T::zero() - tab.cost[n_cols].clone();
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_int;
    use crate::Rat;

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn feasible_optimum() {
        // min -x1 - x2  s.t.  x1 + x2 + s = 4, x1 + 3 x2 + u = 6
        let c = rv(&[-1, -1, 0, 0]);
        let a = vec![rv(&[1, 1, 1, 0]), rv(&[1, 3, 0, 1])];
        let b = rv(&[4, 6]);
        match solve_lp(&c, &a, &b) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, rat_int(-4));
                assert_eq!(x[0].clone() + x[1].clone(), rat_int(4));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        // x1 = -1 with x1 ≥ 0 via x1 + s = -1? Use equality x1 = -1.
        let c = rv(&[0]);
        let a = vec![rv(&[1])];
        let b = rv(&[-1]);
        assert_eq!(solve_lp(&c, &a, &b), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        // min -x1 s.t. x1 - x2 = 0 (x1 = x2 free to grow)
        let c = rv(&[-1, 0]);
        let a = vec![rv(&[1, -1])];
        let b = rv(&[0]);
        assert_eq!(solve_lp(&c, &a, &b), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_equalities() {
        // duplicated constraint rows are dropped as redundant
        let c = rv(&[1, 1]);
        let a = vec![rv(&[1, 1]), rv(&[1, 1])];
        let b = rv(&[2, 2]);
        match solve_lp(&c, &a, &b) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(2)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
