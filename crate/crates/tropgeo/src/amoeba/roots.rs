//! Complex polynomial root finding for the fiber solver.
//!
//! Degrees up to 30 go through the companion matrix and a complex Schur
//! decomposition; higher degrees use Aberth-Ehrlich simultaneous iteration.
//! Every root is Newton-polished and must meet a relative residual bound
//! against the largest term magnitude, otherwise the solve reports
//! divergence.

use nalgebra::DMatrix;
use num_traits::Zero;

use crate::{Complex64, Error, Result};

/// Iteration cap shared by Aberth and the polish loop.
pub const ITERATION_CAP: usize = 200;
/// Default residual tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
const COMPANION_DEGREE_LIMIT: usize = 30;

/// Horner evaluation returning `(p(z), p'(z))`.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Largest single-term magnitude `|c_k z^k|`, the residual scale.
fn max_term_magnitude(coeffs: &[Complex64], z: Complex64) -> f64 {
    let mut zk = Complex64::new(1.0, 0.0);
    let mut best: f64 = 0.0;
    for &c in coeffs {
        best = best.max((c * zk).norm());
        zk *= z;
    }
    best
}

/// Relative residual of a candidate root.
pub fn residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = eval_with_derivative(coeffs, z);
    p.norm() / (1.0 + max_term_magnitude(coeffs, z))
}

fn companion_eigenvalues(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let m = DMatrix::<Complex64>::from_fn(deg, deg, |r, c| {
        if c + 1 == deg {
            -coeffs[r] / lead
        } else if r == c + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::zero()
        }
    });
    let schur = m.try_schur(1e-30, 10_000)?;
    let eig = schur.eigenvalues()?;
    Some(eig.iter().copied().collect())
}

fn aberth(coeffs: &[Complex64], cap: usize) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    // Cauchy bound on root magnitudes
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.3761;
            Complex64::from_polar(radius * (0.4 + 0.6 * (k + 1) as f64 / deg as f64), angle)
        })
        .collect();
    for _ in 0..cap {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p == Complex64::zero() {
                continue;
            }
            let w = if dp == Complex64::zero() {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut s = Complex64::zero();
            for j in 0..deg {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff != Complex64::zero() {
                        s += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom == Complex64::zero() { w } else { w / denom };
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    z
}

/// All complex roots (with multiplicity) of a polynomial with nonzero
/// leading and constant coefficients, deterministically ordered.
pub fn polynomial_roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    assert!(deg >= 1, "degree must be positive");
    assert!(!coeffs[deg].is_zero(), "leading coefficient must be nonzero");

    // pre-balance by the largest coefficient magnitude
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let balanced: Vec<Complex64> = coeffs.iter().map(|c| c / scale).collect();

    let mut roots = if deg == 1 {
        vec![-balanced[0] / balanced[1]]
    } else if deg <= COMPANION_DEGREE_LIMIT {
        companion_eigenvalues(&balanced).unwrap_or_else(|| aberth(&balanced, ITERATION_CAP))
    } else {
        aberth(&balanced, ITERATION_CAP)
    };

    // Newton polish in a fixed order, then enforce the residual contract.
    for z in roots.iter_mut() {
        for _ in 0..ITERATION_CAP {
            let (p, dp) = eval_with_derivative(&balanced, *z);
            if dp == Complex64::zero() {
                break;
            }
            let step = p / dp;
            *z -= step;
            if step.norm() <= 1e-15 * (1.0 + z.norm()) {
                break;
            }
        }
    }
    for &z in &roots {
        let r = residual(&balanced, z);
        if r.is_nan() || r > tol {
            return Err(Error::RootFindingDiverged { residual: r, tol });
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}
