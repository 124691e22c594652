//! Combinatorial tropical geometry with an exact rational core, plus a
//! floating-point harness for scaled-amoeba convergence experiments.
//!
//! The crate splits into four layers:
//!
//! * [`geom`] — exact scalar/vector primitives: primitive integer directions,
//!   dense rational elimination, an exact simplex solver, the
//!   relative-interior criterion, and point-to-piece distance kernels.
//! * [`hypersurface`] — tropical polynomials `min { c_a + w·a }`, their argmin
//!   cells, linearity regions, dual regular subdivisions, and line sections.
//! * [`curve`] — weighted balanced graphs in ℝⁿ: balancing checks, monotone
//!   unbounded paths, transversal hyperplane sections, convexity witnesses,
//!   and plane curves built from bivariate tropical polynomials.
//! * [`amoeba`] — samples amoebas of monomial coefficient families at small
//!   parameters, rescales by `1/log t`, and measures directed gaps against
//!   the tropical limit.
//!
//! All combinatorial decisions are made over exact rationals ([`Rat`]);
//! floating point appears only in the amoeba sampler and distance kernels.

pub mod amoeba;
pub mod curve;
pub mod error;
pub mod geom;
pub mod hypersurface;
pub mod io;
pub mod ratio;
pub mod scalar;

/// Exact rational scalar used for every combinatorial decision.
pub type Rat = num_rational::BigRational;

/// Complex double used by the amoeba sampler.
pub type Complex64 = num_complex::Complex<f64>;

pub use error::{Error, Result};
