//! Deterministic amoeba sampling.
//!
//! For `n = 1` the family itself is solved once. For `n = 2` one coordinate
//! is fixed on a grid (log-modulus uniform across the window so scaled
//! points land in it, argument uniform on the circle) and the univariate
//! fiber is solved in the other coordinate. Tentacles of the zero set can be
//! exponentially thin in either coordinate, so both coordinates take a turn
//! as the fibered one whenever the family depends on both.
//!
//! Fibers are independent; they run in parallel and are merged in fiber
//! order, so results are identical regardless of thread count.

use rayon::prelude::*;

use super::roots::polynomial_roots;
use super::{GridSpec, MonomialFamily, Scaling, Window};
use crate::ratio::rat_to_f64;
use crate::{Complex64, Error, Result};

/// Sampler configuration.
#[derive(Debug, Clone)]
pub struct SampleParams {
    pub window: Window,
    pub grid: GridSpec,
    pub tolerance: f64,
    /// Retention slack around the window; also the shrink margin used by the
    /// gap measurements.
    pub margin: f64,
    pub scaling: Scaling,
}

impl SampleParams {
    pub fn with_window(window: Window) -> Self {
        Self {
            window,
            grid: GridSpec::default(),
            tolerance: super::roots::DEFAULT_TOLERANCE,
            margin: 0.25,
            scaling: Scaling::MinPlus,
        }
    }
}

/// A scaled point cloud at one parameter value.
#[derive(Debug, Clone, PartialEq)]
pub struct AmoebaSample {
    pub t: f64,
    /// `1 / log t`, negative for `t ∈ (0,1)`.
    pub scale: f64,
    pub points: Vec<Vec<f64>>,
    pub skipped_fibers: usize,
}

/// One additive contribution to a fiber coefficient, kept in log-magnitude
/// and phase form so extreme `t^γ` ratios never overflow.
struct Addend {
    other_exponent: i64,
    fixed_exponent: i64,
    log_magnitude: f64,
    phase: f64,
}

/// Builds the dense coefficient vector of a fiber polynomial, balanced by
/// the largest addend magnitude. Returns `None` for fibers of degree zero
/// (identically zero or a nonzero constant).
fn fiber_coefficients(
    addends: &[Addend],
    ln_fixed_modulus: f64,
    theta: f64,
) -> Option<(i64, Vec<Complex64>)> {
    let max_log = addends
        .iter()
        .map(|a| a.log_magnitude + a.fixed_exponent as f64 * ln_fixed_modulus)
        .fold(f64::NEG_INFINITY, f64::max);
    if !max_log.is_finite() {
        return None;
    }
    let min_e = addends.iter().map(|a| a.other_exponent).min()?;
    let max_e = addends.iter().map(|a| a.other_exponent).max()?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (max_e - min_e + 1) as usize];
    for a in addends {
        let log = a.log_magnitude + a.fixed_exponent as f64 * ln_fixed_modulus - max_log;
        let phase = a.phase + a.fixed_exponent as f64 * theta;
        coeffs[(a.other_exponent - min_e) as usize] += Complex64::from_polar(log.exp(), phase);
    }
    // trim numerically vanished leading coefficients, then factor out z^k
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1] == Complex64::new(0.0, 0.0) {
        hi -= 1;
    }
    coeffs.truncate(hi);
    let lo = coeffs
        .iter()
        .position(|c| *c != Complex64::new(0.0, 0.0))?;
    let shift = min_e + lo as i64;
    let coeffs: Vec<Complex64> = coeffs[lo..].to_vec();
    if coeffs.len() < 2 {
        return None;
    }
    Some((shift, coeffs))
}

/// Samples the scaled amoeba of `f` at parameter `t`.
pub fn sample_amoeba(
    f: &MonomialFamily,
    t: f64,
    params: &SampleParams,
) -> Result<AmoebaSample> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidInput(format!(
            "parameter t must lie in (0,1), got {t}"
        )));
    }
    if params.window.dim() != f.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: params.window.dim(),
        });
    }
    if params.grid.moduli < 8 || params.grid.arguments < 8 {
        return Err(Error::InvalidInput(
            "grid counts must be at least 8".into(),
        ));
    }
    let ln_t = t.ln();
    let sigma = params.scaling.sign();

    match f.dimension() {
        1 => {
            let addends: Vec<Addend> = f
                .terms()
                .iter()
                .map(|term| Addend {
                    other_exponent: term.exponent[0],
                    fixed_exponent: 0,
                    log_magnitude: term.coefficient.norm().ln() + rat_to_f64(&term.valuation) * ln_t,
                    phase: term.coefficient.arg(),
                })
                .collect();
            let Some((_, coeffs)) = fiber_coefficients(&addends, 0.0, 0.0) else {
                return Err(Error::DegenerateFamily("the family is constant"));
            };
            let roots = polynomial_roots(&coeffs, params.tolerance)?;
            let mut points: Vec<Vec<f64>> = roots
                .iter()
                .map(|z| vec![sigma * z.norm().ln() / ln_t])
                .filter(|p| params.window.contains(p, params.margin))
                .collect();
            points.sort_by(|a, b| a[0].total_cmp(&b[0]));
            Ok(AmoebaSample {
                t,
                scale: 1.0 / ln_t,
                points,
                skipped_fibers: 0,
            })
        }
        2 => {
            if f.terms().iter().all(|term| term.exponent[1] == 0) {
                return Err(Error::DegenerateFamily(
                    "the family does not depend on the second variable",
                ));
            }
            let depends_on_first = f.terms().iter().any(|term| term.exponent[0] != 0);
            let mut axes = vec![0usize];
            if depends_on_first {
                axes.push(1);
            }

            let m = params.grid.moduli;
            let k = params.grid.arguments;
            let tasks: Vec<(usize, usize)> = axes
                .iter()
                .flat_map(|&axis| (0..m).map(move |i| (axis, i)))
                .collect();

            let results: Vec<Result<(Vec<Vec<f64>>, usize)>> = tasks
                .par_iter()
                .map(|&(axis, i)| {
                    let other = 1 - axis;
                    let addends: Vec<Addend> = f
                        .terms()
                        .iter()
                        .map(|term| Addend {
                            other_exponent: term.exponent[other],
                            fixed_exponent: term.exponent[axis],
                            log_magnitude: term.coefficient.norm().ln()
                                + rat_to_f64(&term.valuation) * ln_t,
                            phase: term.coefficient.arg(),
                        })
                        .collect();
                    let pitch = params.window.pitch(axis, m);
                    let u = params.window.lo[axis] + i as f64 * pitch;
                    let ln_mod = sigma * u * ln_t;
                    let mut pts = Vec::new();
                    let mut skipped = 0usize;
                    for j in 0..k {
                        let theta = 2.0 * std::f64::consts::PI * j as f64 / k as f64;
                        let Some((_, coeffs)) = fiber_coefficients(&addends, ln_mod, theta)
                        else {
                            skipped += 1;
                            continue;
                        };
                        let roots = polynomial_roots(&coeffs, params.tolerance)?;
                        for z in roots {
                            let coord = sigma * z.norm().ln() / ln_t;
                            let mut p = vec![0.0; 2];
                            p[axis] = u;
                            p[other] = coord;
                            if params.window.contains(&p, params.margin) {
                                pts.push(p);
                            }
                        }
                    }
                    Ok((pts, skipped))
                })
                .collect();

            let mut points = Vec::new();
            let mut skipped_fibers = 0;
            for r in results {
                let (pts, skipped) = r?;
                points.extend(pts);
                skipped_fibers += skipped;
            }
            points.sort_by(|a, b| {
                a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1]))
            });
            Ok(AmoebaSample {
                t,
                scale: 1.0 / ln_t,
                points,
                skipped_fibers,
            })
        }
        _ => unreachable!("families are validated to one or two variables"),
    }
}
