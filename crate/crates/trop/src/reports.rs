//! JSON report shapes and the convergence CSV writer.
//!
//! Reports mirror the library types with rationals rendered as `"p/q"`
//! strings. CSV bodies are byte-stable for a fixed config: floats use twelve
//! significant digits and wall-clock timings stay in `#` header comments.

use serde::Serialize;
use tropgeo::amoeba::{AvoidanceReport, GapReport, SectionGapReport};
use tropgeo::curve::{
    BalanceReport, IntersectionPoint, MonotonePath, TransversalOutcome, WeakBalanceReport,
    WitnessPair,
};
use tropgeo::error::Degeneracy;
use tropgeo::hypersurface::{LinearityRegion, LineSection, SubdivisionCell, TropicalPolynomial};
use tropgeo::ratio::format_rat;
use tropgeo::curve::BalancedGraph;
use tropgeo::Rat;

use crate::params::fmt_sig;

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

#[derive(Serialize)]
pub struct EvalReport {
    pub point: Vec<String>,
    pub value: String,
    pub argmin: Vec<Vec<i64>>,
    pub on_hypersurface: bool,
}

#[derive(Serialize)]
pub struct HalfspaceJson {
    pub normal: Vec<i64>,
    pub offset: String,
}

#[derive(Serialize)]
pub struct RegionJson {
    pub monomial: Vec<i64>,
    pub halfspaces: Vec<HalfspaceJson>,
    pub empty: bool,
}

impl RegionJson {
    pub fn new(r: &LinearityRegion) -> Self {
        Self {
            monomial: r.monomial.clone(),
            halfspaces: r
                .halfspaces
                .iter()
                .map(|(normal, offset)| HalfspaceJson {
                    normal: normal.clone(),
                    offset: format_rat(offset),
                })
                .collect(),
            empty: r.is_empty,
        }
    }
}

#[derive(Serialize)]
pub struct DualCellJson {
    pub members: Vec<Vec<i64>>,
    pub dim: usize,
}

pub fn dual_cells_json(t: &TropicalPolynomial, cells: &[SubdivisionCell]) -> Vec<DualCellJson> {
    cells
        .iter()
        .map(|c| DualCellJson {
            members: c.members.iter().map(|&i| t.exponent(i).to_vec()).collect(),
            dim: c.dim,
        })
        .collect()
}

#[derive(Serialize)]
pub struct LineSectionJson {
    pub base: Vec<String>,
    pub direction: Vec<String>,
    pub breakpoints: Vec<String>,
    pub labels: Vec<Vec<i64>>,
}

impl LineSectionJson {
    pub fn new(s: &LineSection) -> Self {
        Self {
            base: rats(&s.base),
            direction: rats(&s.direction),
            breakpoints: rats(&s.breakpoints),
            labels: s.labels.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ZeroConvexityJson {
    #[serde(flatten)]
    pub section: LineSectionJson,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct BalanceJson {
    pub residuals: Vec<Vec<i64>>,
    pub pass: bool,
}

impl BalanceJson {
    pub fn new(r: &BalanceReport) -> Self {
        Self {
            residuals: r.residuals.clone(),
            pass: r.pass,
        }
    }
}

#[derive(Serialize)]
pub struct WeakBalanceVertexJson {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
}

#[derive(Serialize)]
pub struct WeakBalanceJson {
    pub vertices: Vec<WeakBalanceVertexJson>,
    pub pass: bool,
}

impl WeakBalanceJson {
    pub fn new(r: &WeakBalanceReport) -> Self {
        Self {
            vertices: r
                .vertices
                .iter()
                .map(|v| WeakBalanceVertexJson {
                    pass: v.pass,
                    witness: v.witness.clone(),
                })
                .collect(),
            pass: r.pass,
        }
    }
}

#[derive(Serialize)]
pub struct PathJson {
    pub functional: Vec<i64>,
    pub start: Vec<String>,
    pub steps: Vec<PathStepJson>,
    /// Vertices visited after the start, as coordinates.
    pub vertex_trail: Vec<Vec<String>>,
    pub terminal_ray_edge: usize,
    pub terminal_direction: Vec<i64>,
}

#[derive(Serialize)]
pub struct PathStepJson {
    pub edge: usize,
    pub forward: bool,
}

impl PathJson {
    pub fn new(g: &BalancedGraph, p: &MonotonePath) -> Self {
        let terminal = p.terminal_ray();
        Self {
            functional: p.functional.clone(),
            start: rats(&p.start),
            steps: p
                .steps
                .iter()
                .map(|s| PathStepJson {
                    edge: s.edge,
                    forward: s.forward,
                })
                .collect(),
            vertex_trail: p
                .vertex_trail
                .iter()
                .map(|&v| rats(&g.vertices()[v]))
                .collect(),
            terminal_ray_edge: terminal,
            terminal_direction: g.edges()[terminal].direction.components().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct IntersectionJson {
    pub point: Vec<String>,
    pub edge: usize,
    pub sign: i8,
}

impl IntersectionJson {
    pub fn new(p: &IntersectionPoint) -> Self {
        Self {
            point: rats(&p.point),
            edge: p.edge,
            sign: p.sign,
        }
    }
}

#[derive(Serialize)]
pub struct SectionReportJson {
    pub transverse: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<IntersectionJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<Degeneracy>,
    pub pass: bool,
}

impl SectionReportJson {
    pub fn new(outcome: &TransversalOutcome) -> Self {
        match outcome {
            TransversalOutcome::Section(s) => Self {
                transverse: true,
                points: Some(s.points.iter().map(IntersectionJson::new).collect()),
                degeneracy: None,
                pass: true,
            },
            TransversalOutcome::NotTransverse(d) => Self {
                transverse: false,
                points: None,
                degeneracy: Some(d.clone()),
                pass: false,
            },
        }
    }
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub point: IntersectionJson,
    pub ascending: PathJson,
    pub descending: PathJson,
}

pub fn witnesses_json(g: &BalancedGraph, pairs: &[WitnessPair]) -> Vec<WitnessJson> {
    pairs
        .iter()
        .map(|w| WitnessJson {
            point: IntersectionJson::new(&w.point),
            ascending: PathJson::new(g, &w.ascending),
            descending: PathJson::new(g, &w.descending),
        })
        .collect()
}

#[derive(Serialize)]
pub struct SampleSummaryJson {
    pub t: f64,
    pub scale: f64,
    pub n_points: usize,
    pub skipped_fibers: usize,
}

#[derive(Serialize)]
pub struct AvoidanceJson {
    pub limit_distance: f64,
    pub radius: f64,
    pub rows: Vec<AvoidanceRowJson>,
    pub first_positive: Option<usize>,
    pub monotone: bool,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct AvoidanceRowJson {
    pub t: f64,
    pub clearance: f64,
}

impl AvoidanceJson {
    pub fn new(r: &AvoidanceReport) -> Self {
        Self {
            limit_distance: r.limit_distance,
            radius: r.radius,
            rows: r
                .rows
                .iter()
                .map(|row| AvoidanceRowJson {
                    t: row.t,
                    clearance: row.clearance,
                })
                .collect(),
            first_positive: r.first_positive,
            monotone: r.monotone,
            pass: r.pass,
        }
    }
}

#[derive(Serialize)]
pub struct SectionGapJson {
    pub t: f64,
    pub eta: f64,
    pub points: Vec<SectionGapPointJson>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct SectionGapPointJson {
    pub point: Vec<f64>,
    pub edge: usize,
    pub distance: Option<f64>,
    pub tube_empty: bool,
}

impl SectionGapJson {
    pub fn new(r: &SectionGapReport) -> Self {
        Self {
            t: r.t,
            eta: r.eta,
            points: r
                .points
                .iter()
                .map(|p| SectionGapPointJson {
                    point: p.point.clone(),
                    edge: p.edge,
                    distance: p.distance,
                    tube_empty: p.distance.is_none(),
                })
                .collect(),
            pass: r.pass,
        }
    }
}

/// Renders the convergence CSV: `#`-prefixed header comments (config echo
/// and wall-clock timings), one header row, then the data rows.
pub fn convergence_csv(report: &GapReport, config_echo: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {config_echo}\n"));
    let timings: Vec<String> = report
        .rows
        .iter()
        .map(|r| format!("{:.1}", r.runtime_ms))
        .collect();
    out.push_str(&format!("# wall_ms {}\n", timings.join(",")));
    out.push_str("t,scale,n_points,skipped,gap_t2s,gap_s2t,runtime_ms\n");
    for r in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_sig(r.t),
            fmt_sig(r.scale),
            r.n_points,
            r.skipped,
            fmt_sig(r.gap_target_to_sample),
            fmt_sig(r.gap_sample_to_target),
            fmt_sig(r.runtime_ms),
        ));
    }
    out
}
