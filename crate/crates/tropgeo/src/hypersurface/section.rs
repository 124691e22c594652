//! Restriction of a tropical polynomial to a rational line, computed as the
//! exact lower envelope of the affine restrictions `τ ↦ c_a + (p+τd)·a`.

use num_traits::{One, Zero};

use super::TropicalPolynomial;
use crate::geom::dot_rr;
use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

/// The combinatorics of a line section: sorted breakpoints and the argmin
/// label (an exponent) of each open interval between them.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSection {
    pub base: Vec<Rat>,
    pub direction: Vec<Rat>,
    pub breakpoints: Vec<Rat>,
    pub labels: Vec<Vec<i64>>,
}

/// Zero-convexity report for one line: passes iff all interval labels are
/// pairwise distinct (distinct section components stay distinct in the
/// complement). A failure would indicate a bug, not a property of the input,
/// so it is reported rather than thrown.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroConvexityReport {
    pub section: LineSection,
    pub pass: bool,
    /// Interval indices of the first repeated label, when any.
    pub duplicate: Option<(usize, usize)>,
}

/// Computes the section of the hypersurface along `{p + τ·d}`.
///
/// The breakpoints are exactly the parameters where the restricted argmin
/// changes; errors with [`Error::LineInsideHypersurface`] when two terms tie
/// along a whole interval.
pub fn line_section(t: &TropicalPolynomial, p: &[Rat], d: &[Rat]) -> Result<LineSection> {
    let n = t.dimension();
    if p.len() != n || d.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if p.len() != n { p.len() } else { d.len() },
        });
    }
    if d.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroDirection);
    }
    if t.len() < 2 {
        return Err(Error::TooFewTerms);
    }

    let m = t.len();
    let to_rat = |a: &[i64]| -> Vec<Rat> { a.iter().map(|&x| rat_int(x)).collect() };
    let restrictions: Vec<(Rat, Rat)> = t
        .terms()
        .iter()
        .map(|term| {
            let a = to_rat(&term.exponent);
            let slope = dot_rr(d, &a);
            let intercept = &term.valuation + dot_rr(p, &a);
            (intercept, slope)
        })
        .collect();

    // Candidate breakpoints: all pairwise crossings of the restrictions.
    let mut candidates: Vec<Rat> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (ai, bi) = &restrictions[i];
            let (aj, bj) = &restrictions[j];
            if bi != bj {
                candidates.push((aj - ai) / (bi.clone() - bj.clone()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    // One probe per open interval between consecutive candidates.
    let probes: Vec<Rat> = if candidates.is_empty() {
        vec![Rat::zero()]
    } else {
        let mut ps = Vec::with_capacity(candidates.len() + 1);
        ps.push(candidates[0].clone() - Rat::one());
        for w in candidates.windows(2) {
            ps.push((w[0].clone() + w[1].clone()) / rat_int(2));
        }
        ps.push(candidates[candidates.len() - 1].clone() + Rat::one());
        ps
    };

    let mut labels_by_probe: Vec<usize> = Vec::with_capacity(probes.len());
    for tau in &probes {
        let values: Vec<Rat> = restrictions
            .iter()
            .map(|(a, b)| a + b * tau)
            .collect();
        let min = values.iter().min().expect("nonempty").clone();
        let argmin: Vec<usize> = (0..m).filter(|&i| values[i] == min).collect();
        if argmin.len() >= 2 {
            return Err(Error::LineInsideHypersurface(
                t.exponent(argmin[0]).to_vec(),
                t.exponent(argmin[1]).to_vec(),
            ));
        }
        labels_by_probe.push(argmin[0]);
    }

    // Keep only the candidates where the label actually changes.
    let mut breakpoints = Vec::new();
    let mut labels = vec![t.exponent(labels_by_probe[0]).to_vec()];
    for (k, tau) in candidates.iter().enumerate() {
        if labels_by_probe[k + 1] != labels_by_probe[k] {
            breakpoints.push(tau.clone());
            labels.push(t.exponent(labels_by_probe[k + 1]).to_vec());
        }
    }

    Ok(LineSection {
        base: p.to_vec(),
        direction: d.to_vec(),
        breakpoints,
        labels,
    })
}

/// Runs [`line_section`] and checks that the interval labels are pairwise
/// distinct.
pub fn check_zero_convexity_along_line(
    t: &TropicalPolynomial,
    p: &[Rat],
    d: &[Rat],
) -> Result<ZeroConvexityReport> {
    let section = line_section(t, p, d)?;
    let mut duplicate = None;
    'outer: for i in 0..section.labels.len() {
        for j in i + 1..section.labels.len() {
            if section.labels[i] == section.labels[j] {
                duplicate = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(ZeroConvexityReport {
        pass: duplicate.is_none(),
        section,
        duplicate,
    })
}

/// The finite hypersurface of a univariate tropical polynomial: the
/// parameters where the argmin changes.
pub fn univariate_hypersurface_points(t: &TropicalPolynomial) -> Result<Vec<Rat>> {
    if t.dimension() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: t.dimension(),
        });
    }
    Ok(line_section(t, &[Rat::zero()], &[Rat::one()])?.breakpoints)
}
