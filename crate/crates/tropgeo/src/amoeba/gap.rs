//! Directed gaps between sampled clouds and tropical targets, and the
//! experiment drivers built on them.
//!
//! Gaps are measured inside the margin-shrunk window so that truncation at
//! the window boundary never pollutes the comparison. Target pieces are
//! sampled where they cross the sampler's own grid lines (plus clipped
//! endpoints); on those points the gap measures convergence noise rather
//! than a fixed off-grid discretization floor.

use std::time::Instant;

use super::sample::{sample_amoeba, SampleParams};
use super::{MonomialFamily, Scaling, Window};
use crate::curve::{
    curve_from_plane_tropical_polynomial, hyperplane_transversal, BalancedGraph, EdgeKind,
    Hyperplane, TransversalOutcome,
};
use crate::geom::dist::{distance_point_to_pieces, Piece};
use crate::geom::{dist2_point_to_ray, dist2_point_to_segment};
use crate::hypersurface::section::univariate_hypersurface_points;
use crate::ratio::rat_to_f64;
use crate::{Error, Rat, Result};

/// What the cloud is compared against.
#[derive(Debug, Clone)]
pub enum GapTarget {
    Pieces(Vec<Piece<f64>>),
    Points(Vec<Vec<f64>>),
}

/// One-sided Kuratowski-style gaps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectedGaps {
    pub target_to_sample: f64,
    pub sample_to_target: f64,
}

/// Float pieces of a balanced graph; `mirror` negates the geometry (used for
/// the paper scaling convention).
pub fn graph_pieces(g: &BalancedGraph, mirror: bool) -> Vec<Piece<f64>> {
    let s = if mirror { -1.0 } else { 1.0 };
    let vf = |v: &[Rat]| -> Vec<f64> { v.iter().map(|x| s * rat_to_f64(x)).collect() };
    g.edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Segment { u, v } => Piece::Segment {
                a: vf(&g.vertices()[u]),
                b: vf(&g.vertices()[v]),
            },
            EdgeKind::Ray { u } => Piece::Ray {
                base: vf(&g.vertices()[u]),
                dir: e
                    .direction
                    .components()
                    .iter()
                    .map(|&k| s * k as f64)
                    .collect(),
            },
        })
        .collect()
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn nearest_cloud_distance(x: &[f64], cloud: &[Vec<f64>]) -> f64 {
    cloud
        .iter()
        .map(|p| euclid(x, p))
        .fold(f64::INFINITY, f64::min)
}

/// Parameter interval of a piece inside a box, or `None` when disjoint.
fn clip_to_box(
    base: &[f64],
    dir: &[f64],
    t_end: Option<f64>,
    win: &Window,
) -> Option<(f64, f64)> {
    let mut t0 = 0.0f64;
    let mut t1 = t_end.unwrap_or(f64::INFINITY);
    for k in 0..win.dim() {
        if dir[k] == 0.0 {
            if base[k] < win.lo[k] || base[k] > win.hi[k] {
                return None;
            }
        } else {
            let a = (win.lo[k] - base[k]) / dir[k];
            let b = (win.hi[k] - base[k]) / dir[k];
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    (t0 <= t1).then_some((t0, t1))
}

/// Deterministic samples of one piece: the clipped endpoints plus every
/// crossing of the axis grid lines `window.lo[k] + m·pitch[k]`.
fn piece_samples(
    piece: &Piece<f64>,
    shrunk: &Window,
    full: &Window,
    pitch: &[f64],
) -> Vec<Vec<f64>> {
    let (base, dir, t_end) = match piece {
        Piece::Segment { a, b } => {
            let d: Vec<f64> = a.iter().zip(b).map(|(&p, &q)| q - p).collect();
            (a.clone(), d, Some(1.0))
        }
        Piece::Ray { base, dir } => (base.clone(), dir.clone(), None),
    };
    let Some((t0, t1)) = clip_to_box(&base, &dir, t_end, shrunk) else {
        return Vec::new();
    };
    let mut params = vec![t0, t1];
    for k in 0..shrunk.dim() {
        if dir[k] == 0.0 || pitch[k] <= 0.0 {
            continue;
        }
        let c0 = base[k] + t0 * dir[k];
        let c1 = base[k] + t1 * dir[k];
        let (clo, chi) = (c0.min(c1), c0.max(c1));
        let m0 = ((clo - full.lo[k]) / pitch[k]).ceil() as i64;
        let m1 = ((chi - full.lo[k]) / pitch[k]).floor() as i64;
        for m in m0..=m1 {
            let g = full.lo[k] + m as f64 * pitch[k];
            let t = (g - base[k]) / dir[k];
            if t >= t0 && t <= t1 {
                params.push(t);
            }
        }
    }
    params.sort_by(f64::total_cmp);
    params.dedup();
    params
        .into_iter()
        .map(|t| base.iter().zip(&dir).map(|(&b, &d)| b + t * d).collect())
        .collect()
}

/// Directed gaps between a cloud and a target inside the margin-shrunk
/// window. `pitch` fixes the grid-line sampling of target pieces.
pub fn directed_gap(
    cloud: &[Vec<f64>],
    target: &GapTarget,
    window: &Window,
    margin: f64,
    pitch: &[f64],
) -> Result<DirectedGaps> {
    if cloud.is_empty() {
        return Err(Error::EmptySample);
    }
    let shrunk = window.shrink(margin)?;

    let target_points: Vec<Vec<f64>> = match target {
        GapTarget::Points(pts) => pts
            .iter()
            .filter(|p| shrunk.contains(p, 0.0))
            .cloned()
            .collect(),
        GapTarget::Pieces(pieces) => pieces
            .iter()
            .flat_map(|p| piece_samples(p, &shrunk, window, pitch))
            .collect(),
    };
    if target_points.is_empty() {
        return Err(Error::EmptyTarget);
    }
    let target_to_sample = target_points
        .iter()
        .map(|x| nearest_cloud_distance(x, cloud))
        .fold(0.0, f64::max);

    let inside: Vec<&Vec<f64>> = cloud.iter().filter(|p| shrunk.contains(p, 0.0)).collect();
    if inside.is_empty() {
        return Err(Error::EmptySample);
    }
    let sample_to_target = inside
        .iter()
        .map(|p| match target {
            GapTarget::Pieces(pieces) => distance_point_to_pieces(p, pieces).unwrap_or(f64::NAN),
            GapTarget::Points(pts) => nearest_cloud_distance(p, pts),
        })
        .fold(0.0, f64::max);

    Ok(DirectedGaps {
        target_to_sample,
        sample_to_target,
    })
}

/// The tropical limit of a family as a gap target, honoring the scaling
/// convention.
pub fn tropical_target(f: &MonomialFamily, scaling: Scaling) -> Result<GapTarget> {
    let trop = f.tropicalization();
    match f.dimension() {
        1 => {
            let sign = scaling.sign();
            let pts = univariate_hypersurface_points(&trop)?
                .iter()
                .map(|x| vec![sign * rat_to_f64(x)])
                .collect();
            Ok(GapTarget::Points(pts))
        }
        2 => {
            let g = curve_from_plane_tropical_polynomial(&trop)?;
            Ok(GapTarget::Pieces(graph_pieces(
                &g,
                scaling == Scaling::Paper,
            )))
        }
        _ => unreachable!("families are one- or two-dimensional"),
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub t: f64,
    pub scale: f64,
    pub n_points: usize,
    pub skipped: usize,
    pub gap_target_to_sample: f64,
    pub gap_sample_to_target: f64,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub rows: Vec<ConvergenceRow>,
    pub window: Window,
    pub margin: f64,
}

fn check_t_list(ts: &[f64], min_len: usize) -> Result<()> {
    if ts.len() < min_len {
        return Err(Error::InvalidInput(format!(
            "need at least {min_len} parameter values"
        )));
    }
    if ts.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
        return Err(Error::InvalidInput(
            "parameters must lie in (0,1)".into(),
        ));
    }
    if ts.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidInput(
            "parameters must be strictly decreasing".into(),
        ));
    }
    Ok(())
}

/// Samples the family at each parameter and measures both directed gaps
/// against the tropical limit.
pub fn convergence_table(
    f: &MonomialFamily,
    ts: &[f64],
    params: &SampleParams,
) -> Result<GapReport> {
    check_t_list(ts, 2)?;
    let target = tropical_target(f, params.scaling)?;
    let pitch: Vec<f64> = (0..params.window.dim())
        .map(|k| params.window.pitch(k, params.grid.moduli))
        .collect();
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let start = Instant::now();
        let sample = sample_amoeba(f, t, params)?;
        let gaps = directed_gap(&sample.points, &target, &params.window, params.margin, &pitch)?;
        rows.push(ConvergenceRow {
            t,
            scale: sample.scale,
            n_points: sample.points.len(),
            skipped: sample.skipped_fibers,
            gap_target_to_sample: gaps.target_to_sample,
            gap_sample_to_target: gaps.sample_to_target,
            runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(GapReport {
        rows,
        window: params.window.clone(),
        margin: params.margin,
    })
}

/// Exact squared distance from a rational center to the tropical limit.
fn exact_limit_distance2(f: &MonomialFamily, center: &[Rat]) -> Result<Rat> {
    let trop = f.tropicalization();
    let mut best: Option<Rat> = None;
    let mut keep = |d2: Rat| {
        best = Some(match best.take() {
            None => d2,
            Some(b) => b.min(d2),
        });
    };
    match f.dimension() {
        1 => {
            for tau in univariate_hypersurface_points(&trop)? {
                let d = &center[0] - &tau;
                keep(&d * &d);
            }
        }
        2 => {
            let g = curve_from_plane_tropical_polynomial(&trop)?;
            for e in g.edges() {
                let d2 = match e.kind {
                    EdgeKind::Segment { u, v } => dist2_point_to_segment(
                        center,
                        &g.vertices()[u],
                        &g.vertices()[v],
                    )?,
                    EdgeKind::Ray { u } => dist2_point_to_ray(
                        center,
                        &g.vertices()[u],
                        e.direction.components(),
                    )?,
                };
                keep(d2);
            }
        }
        _ => unreachable!(),
    }
    best.ok_or(Error::EmptyTarget)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvoidanceRow {
    pub t: f64,
    /// `min over cloud of (distance to center - radius)`.
    pub clearance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvoidanceReport {
    pub rows: Vec<AvoidanceRow>,
    /// Exact distance from the center to the tropical limit, as a float.
    pub limit_distance: f64,
    pub radius: f64,
    /// Index of the first parameter with positive clearance.
    pub first_positive: Option<usize>,
    /// Positive clearance for every parameter from `first_positive` on.
    pub pass: bool,
    /// Clearances never decrease from `first_positive` on.
    pub monotone: bool,
}

/// Checks that the cloud avoids a closed ball that is exactly disjoint from
/// the tropical limit.
///
/// The disjointness precondition is verified in exact arithmetic; violating
/// it is [`Error::ZMeetsTropicalLimit`].
pub fn compact_avoidance_check(
    f: &MonomialFamily,
    center: &[Rat],
    radius: &Rat,
    ts: &[f64],
    params: &SampleParams,
) -> Result<AvoidanceReport> {
    check_t_list(ts, 1)?;
    if center.len() != f.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: center.len(),
        });
    }
    let d2 = exact_limit_distance2(f, center)?;
    if d2 <= radius * radius {
        return Err(Error::ZMeetsTropicalLimit);
    }

    let sign = params.scaling.sign();
    let center_f: Vec<f64> = center.iter().map(|x| sign * rat_to_f64(x)).collect();
    let radius_f = rat_to_f64(radius);
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let sample = sample_amoeba(f, t, params)?;
        if sample.points.is_empty() {
            return Err(Error::EmptySample);
        }
        let min_dist = sample
            .points
            .iter()
            .map(|p| euclid(p, &center_f))
            .fold(f64::INFINITY, f64::min);
        rows.push(AvoidanceRow {
            t,
            clearance: min_dist - radius_f,
        });
    }
    let first_positive = rows.iter().position(|r| r.clearance > 0.0);
    let pass = match first_positive {
        Some(i) => rows[i..].iter().all(|r| r.clearance > 0.0),
        None => false,
    };
    let monotone = match first_positive {
        Some(i) => rows[i..]
            .windows(2)
            .all(|w| w[1].clearance >= w[0].clearance),
        None => false,
    };
    Ok(AvoidanceReport {
        rows,
        limit_distance: rat_to_f64(&d2).sqrt(),
        radius: radius_f,
        first_positive,
        pass,
        monotone,
    })
}

/// Per-intersection outcome of the line-section proximity experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionGapPoint {
    /// The exact tropical intersection point, as floats (mirrored under the
    /// paper scaling).
    pub point: Vec<f64>,
    pub edge: usize,
    /// Distance from the intersection point to the nearest in-tube cloud
    /// point; `None` when the tube is empty.
    pub distance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectionGapReport {
    pub t: f64,
    pub eta: f64,
    pub points: Vec<SectionGapPoint>,
    /// True when every tube contains at least one cloud point.
    pub pass: bool,
}

/// For each exact intersection of a transverse line with the tropical curve,
/// the distance to the nearest cloud point inside the tube
/// `{ y : |w·y - b| / ‖w‖ ≤ η }`.
pub fn line_section_gap(
    f: &MonomialFamily,
    t: f64,
    line: &Hyperplane,
    eta: f64,
    params: &SampleParams,
) -> Result<SectionGapReport> {
    if f.dimension() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: f.dimension(),
        });
    }
    if eta.is_nan() || eta <= 0.0 {
        return Err(Error::InvalidInput("tube radius must be positive".into()));
    }
    let g = curve_from_plane_tropical_polynomial(&f.tropicalization())?;
    let section = match hyperplane_transversal(&g, line) {
        TransversalOutcome::Section(s) => s,
        TransversalOutcome::NotTransverse(d) => return Err(Error::NotTransverse(d)),
    };
    let sample = sample_amoeba(f, t, params)?;

    let sign = params.scaling.sign();
    let w: Vec<f64> = line
        .normal
        .components()
        .iter()
        .map(|&k| k as f64)
        .collect();
    let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    let b = sign * rat_to_f64(&line.offset);
    let in_tube: Vec<&Vec<f64>> = sample
        .points
        .iter()
        .filter(|p| {
            let pairing: f64 = p.iter().zip(&w).map(|(&x, &wk)| x * wk).sum();
            (pairing - b).abs() / norm <= eta
        })
        .collect();

    let points: Vec<SectionGapPoint> = section
        .points
        .iter()
        .map(|pt| {
            let x: Vec<f64> = pt.point.iter().map(|v| sign * rat_to_f64(v)).collect();
            let distance = in_tube
                .iter()
                .map(|p| euclid(&x, p))
                .fold(f64::INFINITY, f64::min);
            SectionGapPoint {
                point: x,
                edge: pt.edge,
                distance: distance.is_finite().then_some(distance),
            }
        })
        .collect();
    let pass = !points.is_empty() && points.iter().all(|p| p.distance.is_some());
    Ok(SectionGapReport {
        t,
        eta,
        points,
        pass,
    })
}
