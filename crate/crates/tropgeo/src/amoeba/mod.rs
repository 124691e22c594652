//! Floating-point harness for scaled-amoeba convergence experiments.
//!
//! A [`MonomialFamily`] is a Laurent polynomial whose coefficients are
//! complex multiples of rational powers of a real parameter `t ∈ (0,1)`.
//! Sampling its zero set, taking coordinatewise `log|·|`, and rescaling by
//! `1/log t` produces point clouds that converge to the tropical
//! hypersurface of the family's valuations as `t → 0`; the [`gap`] module
//! measures that convergence.

pub mod gap;
pub mod roots;
pub mod sample;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::hypersurface::{Term, TropicalPolynomial};
use crate::ratio::rat_to_f64;
use crate::{Complex64, Error, Rat, Result};

pub use gap::{
    compact_avoidance_check, convergence_table, directed_gap, line_section_gap, AvoidanceReport,
    ConvergenceRow, DirectedGaps, GapReport, GapTarget, SectionGapPoint, SectionGapReport,
};
pub use sample::{sample_amoeba, AmoebaSample, SampleParams};

/// One term `coeff · t^γ · z^a` of a monomial coefficient family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyTerm {
    pub exponent: Vec<i64>,
    pub coefficient: Complex64,
    pub valuation: Rat,
}

/// A polynomial family `f_t(z) = Σ coeff_a · t^{γ_a} · z^a` over `t ∈ (0,1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialFamily {
    n: usize,
    terms: Vec<FamilyTerm>,
}

impl MonomialFamily {
    pub fn new(n: usize, mut terms: Vec<FamilyTerm>) -> Result<Self> {
        if !(1..=2).contains(&n) {
            return Err(Error::InvalidInput(
                "families are supported in one or two variables".into(),
            ));
        }
        if terms.len() < 2 {
            return Err(Error::TooFewTerms);
        }
        for t in &terms {
            if t.exponent.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.exponent.len(),
                });
            }
            if t.coefficient == Complex64::zero() {
                return Err(Error::InvalidInput(
                    "family coefficients must be nonzero".into(),
                ));
            }
        }
        terms.sort_by(|a, b| a.exponent.cmp(&b.exponent));
        if terms.windows(2).any(|w| w[0].exponent == w[1].exponent) {
            return Err(Error::InvalidInput("duplicate support point".into()));
        }
        Ok(Self { n, terms })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[FamilyTerm] {
        &self.terms
    }

    /// The tropical polynomial of the valuations, with the complex leading
    /// coefficients carried through.
    pub fn tropicalization(&self) -> TropicalPolynomial {
        TropicalPolynomial::with_terms(
            self.n,
            self.terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    valuation: t.valuation.clone(),
                    coefficient: Some(t.coefficient),
                })
                .collect(),
        )
        .expect("family terms are a valid support")
    }
}

/// Sign convention for the scaled coordinates.
///
/// `MinPlus` maps a root `z` to `log|z| / log t`, which converges onto the
/// min-plus tropical hypersurface of the valuations. `Paper` applies the
/// literal factor `-1/log t`, producing the mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scaling {
    #[default]
    MinPlus,
    Paper,
}

impl Scaling {
    /// Multiplier applied to `log|z| / log t`.
    pub fn sign(self) -> f64 {
        match self {
            Scaling::MinPlus => 1.0,
            Scaling::Paper => -1.0,
        }
    }
}

/// An axis-aligned sampling window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Window {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::InvalidInput("window bounds mismatch".into()));
        }
        if !lo.iter().zip(&hi).all(|(a, b)| a < b) {
            return Err(Error::InvalidInput("window is degenerate".into()));
        }
        Ok(Self { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// True when the point lies inside the window expanded by `slack`.
    pub fn contains(&self, p: &[f64], slack: f64) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(&x, (&lo, &hi))| x.is_finite() && x >= lo - slack && x <= hi + slack)
    }

    /// The window shrunk by `margin` on every side.
    pub fn shrink(&self, margin: f64) -> Result<Window> {
        Window::new(
            self.lo.iter().map(|x| x + margin).collect(),
            self.hi.iter().map(|x| x - margin).collect(),
        )
    }

    /// Grid pitch along an axis for a given modulus count.
    pub fn pitch(&self, axis: usize, moduli: usize) -> f64 {
        (self.hi[axis] - self.lo[axis]) / moduli as f64
    }
}

/// Fiber grid resolution: moduli per axis and arguments per modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub moduli: usize,
    pub arguments: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            moduli: 256,
            arguments: 64,
        }
    }
}

/// Converts a rational point to floats.
pub fn rat_point_to_f64(p: &[Rat]) -> Vec<f64> {
    p.iter().map(rat_to_f64).collect()
}
