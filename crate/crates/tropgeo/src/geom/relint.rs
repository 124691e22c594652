//! The relative-interior criterion: does the origin lie in the relative
//! interior of the convex hull of a finite direction set?
//!
//! By the transposition theorem, exactly one of the following holds for a
//! finite set `V` of nonzero integer vectors:
//!
//! * there are strictly positive weights `λ` with `Σ λ_v v = 0`
//!   (equivalently `0 ∈ relint conv V`), or
//! * there is a functional `w` with `w·v ≥ 0` for all `v ∈ V` and `w·v > 0`
//!   for at least one.
//!
//! The second alternative is decided by a phase-one feasibility run of the
//! exact simplex on `{w : w·v ≥ 0 ∀v, Σ_v w·v ≥ 1}`; the found `w` is the
//! separating witness, reduced to a primitive integer vector.

use num_traits::{One, Zero};
use serde::Serialize;

use super::simplex::{solve_lp, LpOutcome};
use super::{dot_ii, Direction};
use crate::ratio::{primitive_integer_vector, rat_int};
use crate::{Error, Rat, Result};

/// Outcome of the relative-interior test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelintResult {
    /// True iff the origin lies in the relative interior of the hull.
    pub contains: bool,
    /// On failure, a primitive integer witness `w` with `w·v ≥ 0` for every
    /// direction and `w·v > 0` for at least one.
    pub witness: Option<Vec<i64>>,
}

/// Decides `0 ∈ relint(conv(dirs))` by exact linear programming.
pub fn relint_contains_origin(dirs: &[Direction]) -> Result<RelintResult> {
    if dirs.is_empty() {
        return Err(Error::EmptyDirections);
    }
    let n = dirs[0].dim();
    for d in dirs {
        if d.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: d.dim(),
            });
        }
    }
    let m = dirs.len();

    // Variables: w+ (n), w- (n), slack per direction (m), slack for the
    // strictness row. Constraints: v·(w+ - w-) - s_v = 0 for each v, and
    // Σ_v v·(w+ - w-) - s_0 = 1.
    let n_vars = 2 * n + m + 1;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for (i, v) in dirs.iter().enumerate() {
        let mut row = vec![Rat::zero(); n_vars];
        for k in 0..n {
            row[k] = rat_int(v[k]);
            row[n + k] = rat_int(-v[k]);
        }
        row[2 * n + i] = rat_int(-1);
        a.push(row);
    }
    let mut total = vec![0i64; n];
    for v in dirs.iter() {
        for k in 0..n {
            total[k] += v[k];
        }
    }
    let mut row = vec![Rat::zero(); n_vars];
    for k in 0..n {
        row[k] = rat_int(total[k]);
        row[n + k] = rat_int(-total[k]);
    }
    row[2 * n + m] = rat_int(-1);
    a.push(row);

    let mut b = vec![Rat::zero(); m + 1];
    b[m] = Rat::one();
    let c = vec![Rat::zero(); n_vars];

    match solve_lp(&c, &a, &b) {
        LpOutcome::Infeasible => Ok(RelintResult {
            contains: true,
            witness: None,
        }),
        LpOutcome::Optimal { x, .. } => {
            let w: Vec<Rat> = (0..n).map(|k| x[k].clone() - x[n + k].clone()).collect();
            let witness = primitive_integer_vector(&w)?;
            debug_assert!(dirs.iter().all(|v| dot_ii(&witness, v) >= 0));
            debug_assert!(dirs.iter().any(|v| dot_ii(&witness, v) > 0));
            Ok(RelintResult {
                contains: false,
                witness: Some(witness),
            })
        }
        LpOutcome::Unbounded => unreachable!("feasibility program has zero objective"),
    }
}
