//! Combinatorial tropical hypersurfaces from weighted supports.
//!
//! A tropical polynomial is a finite support `A ⊂ ℤⁿ` with rational values
//! `c_a`; it evaluates at `w ∈ ℚⁿ` to `min { c_a + w·a }` and its
//! hypersurface is the locus where that minimum is attained at least twice.
//! The min-plus convention is used throughout; max-plus input is handled at
//! the I/O layer by negating values.

pub mod section;
pub mod subdivision;

use num_traits::{One, Zero};

use crate::geom::simplex::{solve_lp, LpOutcome};
use crate::geom::{dot_ri, linalg};
use crate::ratio::rat_int;
use crate::{Complex64, Error, Rat, Result};

pub use section::{check_zero_convexity_along_line, line_section, LineSection, ZeroConvexityReport};
pub use subdivision::{dual_subdivision, SubdivisionCell};

/// One monomial: an exponent in ℤⁿ, its valuation, and an optional complex
/// leading coefficient consumed by the amoeba sampler.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub exponent: Vec<i64>,
    pub valuation: Rat,
    pub coefficient: Option<Complex64>,
}

/// A tropical polynomial `w ↦ min { c_a + w·a : a ∈ A }`.
///
/// Terms are kept sorted by exponent, so equal polynomials have equal
/// representations.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalPolynomial {
    n: usize,
    terms: Vec<Term>,
}

impl TropicalPolynomial {
    pub fn new(n: usize, terms: Vec<(Vec<i64>, Rat)>) -> Result<Self> {
        Self::with_terms(
            n,
            terms
                .into_iter()
                .map(|(exponent, valuation)| Term {
                    exponent,
                    valuation,
                    coefficient: None,
                })
                .collect(),
        )
    }

    pub fn with_terms(n: usize, mut terms: Vec<Term>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if terms.is_empty() {
            return Err(Error::InvalidInput("support is empty".into()));
        }
        for t in &terms {
            if t.exponent.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.exponent.len(),
                });
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

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, i: usize) -> &[i64] {
        &self.terms[i].exponent
    }

    fn check_point(&self, w: &[Rat]) -> Result<()> {
        if w.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Exact minimum of `c_a + w·a` over the support.
    pub fn evaluate(&self, w: &[Rat]) -> Result<Rat> {
        self.check_point(w)?;
        let mut best: Option<Rat> = None;
        for t in &self.terms {
            let v = &t.valuation + dot_ri(w, &t.exponent);
            best = Some(match best {
                None => v,
                Some(b) => b.min(v),
            });
        }
        Ok(best.expect("support is nonempty"))
    }

    /// Indices of the terms attaining the minimum at `w`, in sorted order.
    pub fn argmin_support(&self, w: &[Rat]) -> Result<Vec<usize>> {
        self.check_point(w)?;
        let values: Vec<Rat> = self
            .terms
            .iter()
            .map(|t| &t.valuation + dot_ri(w, &t.exponent))
            .collect();
        let min = values.iter().min().expect("support is nonempty").clone();
        Ok((0..self.terms.len()).filter(|&i| values[i] == min).collect())
    }

    /// True iff `w` lies on the tropical hypersurface (minimum attained at
    /// least twice). Requires at least two terms.
    pub fn contains(&self, w: &[Rat]) -> Result<bool> {
        if self.terms.len() < 2 {
            return Err(Error::TooFewTerms);
        }
        Ok(self.argmin_support(w)?.len() >= 2)
    }

    /// The closed region where monomial `a` attains the minimum, together
    /// with an exact flag for whether its interior (the open system) is
    /// nonempty.
    pub fn linearity_region(&self, a: &[i64]) -> Result<LinearityRegion> {
        let Some(idx) = self.terms.iter().position(|t| t.exponent == a) else {
            return Err(Error::UnknownExponent(a.to_vec()));
        };
        let ca = self.terms[idx].valuation.clone();
        let mut halfspaces = Vec::new();
        for (j, t) in self.terms.iter().enumerate() {
            if j == idx {
                continue;
            }
            // c_a + w·a ≤ c_b + w·b  ⟺  (a - b)·w ≤ c_b - c_a
            let normal: Vec<i64> = a.iter().zip(&t.exponent).map(|(&x, &y)| x - y).collect();
            let offset = &t.valuation - &ca;
            halfspaces.push((normal, offset));
        }
        let is_empty = !open_halfspace_system_feasible(self.n, &halfspaces);
        Ok(LinearityRegion {
            monomial: a.to_vec(),
            halfspaces,
            is_empty,
        })
    }

    /// Affine rank of the support (dimension of its affine span).
    pub fn support_rank(&self) -> usize {
        affine_rank(&self.terms.iter().map(|t| t.exponent.clone()).collect::<Vec<_>>())
    }
}

/// A domain of linearity `{w : normal·w ≤ offset for all halfspaces}`.
///
/// `is_empty` refers to the open system (all inequalities strict): true when
/// the monomial is nowhere the unique minimizer.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearityRegion {
    pub monomial: Vec<i64>,
    pub halfspaces: Vec<(Vec<i64>, Rat)>,
    pub is_empty: bool,
}

impl LinearityRegion {
    /// Exact membership in the closed region.
    pub fn contains(&self, w: &[Rat]) -> bool {
        self.halfspaces
            .iter()
            .all(|(normal, offset)| dot_ri(w, normal) <= *offset)
    }

    /// True when some constraint is tight at `w` (and `w` is a member).
    pub fn on_boundary(&self, w: &[Rat]) -> bool {
        self.contains(w)
            && self
                .halfspaces
                .iter()
                .any(|(normal, offset)| dot_ri(w, normal) == *offset)
    }
}

/// Decides whether `{w : normal·w < offset ∀ constraints}` is nonempty, by
/// maximizing the slack `t` in `normal·w + t ≤ offset, t ≤ 1`.
fn open_halfspace_system_feasible(n: usize, halfspaces: &[(Vec<i64>, Rat)]) -> bool {
    // Variables: w+ (n), w- (n), t+ , t-, slack per constraint, slack for
    // the cap t ≤ 1. Minimize -(t+ - t-).
    let m = halfspaces.len();
    let n_vars = 2 * n + 2 + m + 1;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    let mut b: Vec<Rat> = Vec::with_capacity(m + 1);
    for (i, (normal, offset)) in halfspaces.iter().enumerate() {
        let mut row = vec![Rat::zero(); n_vars];
        for k in 0..n {
            row[k] = rat_int(normal[k]);
            row[n + k] = rat_int(-normal[k]);
        }
        row[2 * n] = Rat::one();
        row[2 * n + 1] = -Rat::one();
        row[2 * n + 2 + i] = Rat::one();
        a.push(row);
        b.push(offset.clone());
    }
    let mut cap = vec![Rat::zero(); n_vars];
    cap[2 * n] = Rat::one();
    cap[2 * n + 1] = -Rat::one();
    cap[n_vars - 1] = Rat::one();
    a.push(cap);
    b.push(Rat::one());

    let mut c = vec![Rat::zero(); n_vars];
    c[2 * n] = -Rat::one();
    c[2 * n + 1] = Rat::one();

    match solve_lp(&c, &a, &b) {
        LpOutcome::Optimal { value, .. } => -value > Rat::zero(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("slack is capped at one"),
    }
}

/// Affine rank of a point set (rank of differences to the first point).
pub(crate) fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(&x, &y)| rat_int(x - y)).collect())
        .collect();
    linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::parse_rat;

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    fn univariate(pairs: &[(i64, i64)]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            1,
            pairs.iter().map(|&(a, c)| (vec![a], rat_int(c))).collect(),
        )
        .unwrap()
    }

    fn tropical_line() -> TropicalPolynomial {
        TropicalPolynomial::new(
            2,
            vec![
                (vec![0, 0], rat_int(0)),
                (vec![1, 0], rat_int(0)),
                (vec![0, 1], rat_int(0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let t = univariate(&[(0, 0), (1, 0), (2, 1)]);
        assert_eq!(t.evaluate(&rv(&[-2])).unwrap(), rat_int(-3));
        assert_eq!(t.evaluate(&rv(&[-1])).unwrap(), rat_int(-1));
        let line = tropical_line();
        assert_eq!(line.evaluate(&rv(&[2, 3])).unwrap(), rat_int(0));
    }

    #[test]
    fn argmin_examples() {
        let t = univariate(&[(0, 0), (1, 0), (2, 1)]);
        let exps = |w: &[Rat]| -> Vec<i64> {
            t.argmin_support(w)
                .unwrap()
                .into_iter()
                .map(|i| t.exponent(i)[0])
                .collect()
        };
        assert_eq!(exps(&rv(&[0])), vec![0, 1]);
        assert_eq!(exps(&[parse_rat("1/2").unwrap()]), vec![0]);
        assert_eq!(exps(&rv(&[-1])), vec![1, 2]);
    }

    #[test]
    fn contains_examples() {
        let t = univariate(&[(0, 0), (1, 0), (2, 1)]);
        assert!(t.contains(&rv(&[0])).unwrap());
        assert!(!t.contains(&[parse_rat("1/2").unwrap()]).unwrap());
        assert!(t.contains(&rv(&[-1])).unwrap());
        let single = TropicalPolynomial::new(1, vec![(vec![0], rat_int(0))]).unwrap();
        assert!(matches!(single.contains(&rv(&[0])), Err(Error::TooFewTerms)));
    }

    #[test]
    fn linearity_region_examples() {
        let line = tropical_line();
        let r = line.linearity_region(&[0, 0]).unwrap();
        assert!(!r.is_empty);
        // w1 ≥ 0 and w2 ≥ 0
        assert!(r.contains(&rv(&[1, 2])));
        assert!(!r.contains(&rv(&[-1, 2])));

        let t = univariate(&[(0, 0), (1, 0), (2, 1)]);
        let r = t.linearity_region(&[1]).unwrap();
        assert!(!r.is_empty);
        assert!(r.contains(&rv(&[-1])) && r.contains(&rv(&[0])));
        assert!(!r.contains(&rv(&[1])) && !r.contains(&rv(&[-2])));

        let t = univariate(&[(0, 0), (1, 5), (2, 1)]);
        let r = t.linearity_region(&[1]).unwrap();
        assert!(r.is_empty);
        assert!(matches!(
            t.linearity_region(&[7]),
            Err(Error::UnknownExponent(_))
        ));
    }

    #[test]
    fn degenerate_monomial_region_is_open_empty() {
        // middle term ties but is never the unique minimizer
        let t = univariate(&[(0, 0), (1, 0), (2, 0)]);
        let r = t.linearity_region(&[1]).unwrap();
        assert!(r.is_empty);
        assert!(r.contains(&rv(&[0])));
    }
}
