//! `trop`: tropical geometry checks and scaled-amoeba experiments.
//!
//! Exit codes: 0 when every check passes, 1 when a property or check fails
//! (for example a nonzero balance residual or a non-transverse hyperplane),
//! 2 on input errors. Output is deterministic for a fixed configuration;
//! wall-clock timings live in `#` comment lines and the `runtime_ms`
//! column only.

mod params;
mod reports;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use tropgeo::amoeba::sample::SampleParams;
use tropgeo::amoeba::{
    compact_avoidance_check, convergence_table, line_section_gap, sample_amoeba, Window,
};
use tropgeo::curve::{
    convexity_witnesses, curve_from_plane_tropical_polynomial, hyperplane_transversal,
    monotone_unbounded_path, BalancedGraph, Hyperplane, TransversalOutcome,
};
use tropgeo::geom::primitive_vector;
use tropgeo::hypersurface::{
    check_zero_convexity_along_line, dual_subdivision, line_section, TropicalPolynomial,
};
use tropgeo::io::{FamilyFile, GraphFile, PolynomialFile};
use tropgeo::ratio::parse_rat;
use tropgeo::{Error, Rat};

use params::{
    parse_grid, parse_int_list, parse_float_list, parse_rat_list, parse_scaling, parse_window,
};
use reports::*;

#[derive(Parser)]
#[command(name = "trop", version, about = "Tropical hypersurfaces, balanced graphs, and scaled-amoeba experiments")]
struct Cli {
    /// Output directory for report files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Interpret polynomial valuations as max-plus by negating them on load.
    #[arg(long, global = true)]
    maxplus: bool,
    /// Random seed recorded in experiment configs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical polynomial operations.
    #[command(subcommand)]
    Hypersurface(HypersurfaceCmd),
    /// Weighted balanced graph operations.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Amoeba sampling and convergence experiments.
    #[command(subcommand)]
    Amoeba(AmoebaCmd),
    /// Schema and semantic validation of an input file.
    Validate { file: PathBuf },
}

#[derive(Args)]
struct LineArgs {
    /// Base point, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Direction, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    dir: String,
}

#[derive(Args)]
struct HyperplaneArgs {
    /// Primitive integer normal, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    normal: String,
    /// Rational offset "p/q".
    #[arg(long, allow_hyphen_values = true)]
    offset: String,
}

#[derive(Subcommand)]
enum HypersurfaceCmd {
    /// Evaluate at a point and report the argmin support.
    Eval {
        file: PathBuf,
        /// Evaluation point, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// All linearity regions with exact emptiness flags.
    Cells { file: PathBuf },
    /// The dual regular subdivision.
    Dual { file: PathBuf },
    /// Breakpoints and labels of a line section.
    Section {
        file: PathBuf,
        #[command(flatten)]
        line: LineArgs,
    },
    /// Check that section labels are pairwise distinct.
    Convexity0 {
        file: PathBuf,
        #[command(flatten)]
        line: LineArgs,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Per-vertex balancing residuals.
    Balance { file: PathBuf },
    /// Per-vertex weak balance with separating witnesses.
    Weakbalance { file: PathBuf },
    /// Monotone unbounded path from a point.
    Path {
        file: PathBuf,
        /// Integer functional, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Start point on the graph, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Exact transversal hyperplane section.
    Section {
        file: PathBuf,
        #[command(flatten)]
        hyperplane: HyperplaneArgs,
    },
    /// Ascending/descending escape paths at every crossing.
    Witnesses {
        file: PathBuf,
        #[command(flatten)]
        hyperplane: HyperplaneArgs,
    },
    /// Build the plane curve dual to a bivariate polynomial.
    FromPoly { file: PathBuf },
}

#[derive(Args)]
struct SampleArgs {
    /// Sampling window `x0,x1` (n=1) or `x0,x1,y0,y1` (n=2).
    #[arg(long, default_value = "-2,2,-2,2", allow_hyphen_values = true)]
    window: String,
    /// Fiber grid `M,K`: moduli and arguments.
    #[arg(long, default_value = "256,64")]
    grid: String,
    /// Root-finder residual tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Window margin for retention and gap shrinking.
    #[arg(long, default_value_t = 0.25)]
    margin: f64,
    /// Scaled-coordinate convention: minplus or paper.
    #[arg(long, default_value = "minplus")]
    scaling: String,
}

impl SampleArgs {
    fn build(&self, dim: usize) -> Result<SampleParams, CliError> {
        let mut window = parse_window(&self.window).map_err(CliError::Input)?;
        if dim == 1 && window.dim() == 2 {
            // the default window string is two-dimensional; take its x part
            window = Window::new(vec![window.lo[0]], vec![window.hi[0]])
                .map_err(|e| CliError::Input(e.to_string()))?;
        }
        Ok(SampleParams {
            window,
            grid: parse_grid(&self.grid).map_err(CliError::Input)?,
            tolerance: self.tol,
            margin: self.margin,
            scaling: parse_scaling(&self.scaling).map_err(CliError::Input)?,
        })
    }
}

#[derive(Subcommand)]
enum AmoebaCmd {
    /// Sample the scaled amoeba at one parameter.
    Sample {
        file: PathBuf,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        sample: SampleArgs,
        /// Also write the full point cloud as JSON.
        #[arg(long)]
        dump_points: bool,
    },
    /// Convergence table over a decreasing parameter list.
    Converge {
        file: PathBuf,
        /// Comma-separated decreasing parameters in (0,1).
        #[arg(long)]
        t: String,
        #[command(flatten)]
        sample: SampleArgs,
        #[arg(long)]
        dump_points: bool,
    },
    /// Clearance of the cloud from a ball disjoint from the limit.
    Avoid {
        file: PathBuf,
        /// Ball center, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        /// Ball radius "p/q".
        #[arg(long)]
        radius: String,
        #[arg(long)]
        t: String,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Distance from exact line-section points to the in-tube cloud.
    Linesection {
        file: PathBuf,
        #[command(flatten)]
        hyperplane: HyperplaneArgs,
        /// Tube radius around the line.
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        sample: SampleArgs,
    },
}

/// Failures before any check runs: unreadable files, schema violations,
/// precondition violations. These exit with code 2.
enum CliError {
    Input(String),
}

/// Library errors that mean "the check failed" rather than "the input was
/// unusable".
fn is_check_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotTransverse(_) | Error::NotWeaklyBalanced(_) | Error::RootFindingDiverged { .. }
    )
}

enum Outcome {
    Pass,
    CheckFailed(String),
}

fn load_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_polynomial(path: &Path, maxplus: bool) -> Result<TropicalPolynomial, CliError> {
    let text = load_text(path)?;
    let file: PolynomialFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut poly = file
        .into_polynomial()
        .map_err(|e| CliError::Input(e.to_string()))?;
    if maxplus {
        let terms = poly
            .terms()
            .iter()
            .map(|t| tropgeo::hypersurface::Term {
                exponent: t.exponent.clone(),
                valuation: -t.valuation.clone(),
                coefficient: t.coefficient,
            })
            .collect();
        poly = TropicalPolynomial::with_terms(poly.dimension(), terms)
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(poly)
}

fn load_graph(path: &Path) -> Result<BalancedGraph, CliError> {
    let text = load_text(path)?;
    let file: GraphFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.into_graph().map_err(|e| CliError::Input(e.to_string()))
}

fn load_family(path: &Path) -> Result<tropgeo::amoeba::MonomialFamily, CliError> {
    let text = load_text(path)?;
    let file: FamilyFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.into_family().map_err(|e| CliError::Input(e.to_string()))
}

fn parse_hyperplane(args: &HyperplaneArgs) -> Result<Hyperplane, CliError> {
    let normal = parse_int_list(&args.normal).map_err(CliError::Input)?;
    let normal = primitive_vector(&normal).map_err(|e| CliError::Input(e.to_string()))?;
    let offset = parse_rat(&args.offset).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(Hyperplane { normal, offset })
}

fn write_report<T: Serialize>(out: &Path, name: &str, value: &T) -> Result<PathBuf, CliError> {
    fs::create_dir_all(out)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", out.display())))?;
    let path = out.join(name);
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("serialization: {e}")))?;
    text.push('\n');
    fs::write(&path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn write_text(out: &Path, name: &str, text: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(out)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", out.display())))?;
    let path = out.join(name);
    fs::write(&path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

/// Maps a library error to either a check failure (exit 1) or an input
/// error (exit 2).
fn classify(e: Error) -> Result<Outcome, CliError> {
    if is_check_failure(&e) {
        Ok(Outcome::CheckFailed(e.to_string()))
    } else {
        Err(CliError::Input(e.to_string()))
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let out = &cli.out;
    match &cli.command {
        Command::Validate { file } => {
            let text = load_text(file)?;
            let diags = match tropgeo::io::validate_json(&text) {
                Ok(d) => d,
                Err(e) => return Err(CliError::Input(e.to_string())),
            };
            write_report(out, "diagnostics.json", &diags)?;
            for d in &diags {
                println!("diagnostic: {d}");
            }
            if diags.is_empty() {
                println!("valid");
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::CheckFailed(format!("{} diagnostics", diags.len())))
            }
        }
        Command::Hypersurface(cmd) => run_hypersurface(cli, cmd, out),
        Command::Curve(cmd) => run_curve(cli, cmd, out),
        Command::Amoeba(cmd) => run_amoeba(cli, cmd, out),
    }
}

fn run_hypersurface(cli: &Cli, cmd: &HypersurfaceCmd, out: &Path) -> Result<Outcome, CliError> {
    match cmd {
        HypersurfaceCmd::Eval { file, at } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let point: Vec<Rat> = parse_rat_list(at).map_err(CliError::Input)?;
            let value = poly
                .evaluate(&point)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let argmin = poly
                .argmin_support(&point)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let report = EvalReport {
                point: point.iter().map(tropgeo::ratio::format_rat).collect(),
                value: tropgeo::ratio::format_rat(&value),
                argmin: argmin.iter().map(|&i| poly.exponent(i).to_vec()).collect(),
                on_hypersurface: argmin.len() >= 2,
            };
            let path = write_report(out, "eval.json", &report)?;
            println!("value {} ({} minimizers) -> {}", report.value, report.argmin.len(), path.display());
            Ok(Outcome::Pass)
        }
        HypersurfaceCmd::Cells { file } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let regions: Vec<RegionJson> = poly
                .terms()
                .iter()
                .map(|t| {
                    poly.linearity_region(&t.exponent)
                        .map(|r| RegionJson::new(&r))
                })
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let path = write_report(out, "cells.json", &regions)?;
            println!("{} linearity regions -> {}", regions.len(), path.display());
            Ok(Outcome::Pass)
        }
        HypersurfaceCmd::Dual { file } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let cells = dual_subdivision(&poly).map_err(|e| CliError::Input(e.to_string()))?;
            let json = dual_cells_json(&poly, &cells);
            let path = write_report(out, "dual.json", &json)?;
            println!("{} cells -> {}", json.len(), path.display());
            Ok(Outcome::Pass)
        }
        HypersurfaceCmd::Section { file, line } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let p = parse_rat_list(&line.point).map_err(CliError::Input)?;
            let d = parse_rat_list(&line.dir).map_err(CliError::Input)?;
            let s = line_section(&poly, &p, &d).map_err(|e| CliError::Input(e.to_string()))?;
            let path = write_report(out, "section.json", &LineSectionJson::new(&s))?;
            println!("{} breakpoints -> {}", s.breakpoints.len(), path.display());
            Ok(Outcome::Pass)
        }
        HypersurfaceCmd::Convexity0 { file, line } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let p = parse_rat_list(&line.point).map_err(CliError::Input)?;
            let d = parse_rat_list(&line.dir).map_err(CliError::Input)?;
            let r = check_zero_convexity_along_line(&poly, &p, &d)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let json = ZeroConvexityJson {
                section: LineSectionJson::new(&r.section),
                pass: r.pass,
            };
            let path = write_report(out, "convexity0.json", &json)?;
            println!(
                "{} intervals, pass={} -> {}",
                r.section.labels.len(),
                r.pass,
                path.display()
            );
            if r.pass {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::CheckFailed("repeated section label".into()))
            }
        }
    }
}

fn run_curve(cli: &Cli, cmd: &CurveCmd, out: &Path) -> Result<Outcome, CliError> {
    match cmd {
        CurveCmd::Balance { file } => {
            let g = load_graph(file)?;
            let r = g.check_balanced();
            let path = write_report(out, "balance.json", &BalanceJson::new(&r))?;
            println!("balanced={} -> {}", r.pass, path.display());
            if r.pass {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::CheckFailed("nonzero balance residual".into()))
            }
        }
        CurveCmd::Weakbalance { file } => {
            let g = load_graph(file)?;
            let r = g
                .check_weakly_balanced()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let path = write_report(out, "weakbalance.json", &WeakBalanceJson::new(&r))?;
            println!("weakly balanced={} -> {}", r.pass, path.display());
            if r.pass {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::CheckFailed("weak balance fails".into()))
            }
        }
        CurveCmd::Path { file, w, point } => {
            let g = load_graph(file)?;
            let w = parse_int_list(w).map_err(CliError::Input)?;
            let p = parse_rat_list(point).map_err(CliError::Input)?;
            match monotone_unbounded_path(&g, &w, &p) {
                Ok(path_result) => {
                    let json = PathJson::new(&g, &path_result);
                    let path = write_report(out, "path.json", &json)?;
                    println!(
                        "{} steps, terminal ray {} -> {}",
                        json.steps.len(),
                        json.terminal_ray_edge,
                        path.display()
                    );
                    Ok(Outcome::Pass)
                }
                Err(e) => classify(e),
            }
        }
        CurveCmd::Section { file, hyperplane } => {
            let g = load_graph(file)?;
            let h = parse_hyperplane(hyperplane)?;
            let outcome = hyperplane_transversal(&g, &h);
            let json = SectionReportJson::new(&outcome);
            let path = write_report(out, "section.json", &json)?;
            match &outcome {
                TransversalOutcome::Section(s) => {
                    println!("{} crossings -> {}", s.points.len(), path.display());
                    Ok(Outcome::Pass)
                }
                TransversalOutcome::NotTransverse(d) => {
                    println!("not transverse ({d}) -> {}", path.display());
                    Ok(Outcome::CheckFailed("hyperplane is not transverse".into()))
                }
            }
        }
        CurveCmd::Witnesses { file, hyperplane } => {
            let g = load_graph(file)?;
            let h = parse_hyperplane(hyperplane)?;
            match convexity_witnesses(&g, &h) {
                Ok(pairs) => {
                    for pair in &pairs {
                        pair.ascending
                            .verify(&g)
                            .map_err(|e| CliError::Input(e.to_string()))?;
                        pair.descending
                            .verify(&g)
                            .map_err(|e| CliError::Input(e.to_string()))?;
                    }
                    let json = witnesses_json(&g, &pairs);
                    let path = write_report(out, "witnesses.json", &json)?;
                    println!("{} witness pairs -> {}", json.len(), path.display());
                    Ok(Outcome::Pass)
                }
                Err(e) => classify(e),
            }
        }
        CurveCmd::FromPoly { file } => {
            let poly = load_polynomial(file, cli.maxplus)?;
            let g = curve_from_plane_tropical_polynomial(&poly)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let path = write_report(out, "curve.json", &GraphFile::from_graph(&g))?;
            println!(
                "{} vertices, {} edges -> {}",
                g.vertices().len(),
                g.edges().len(),
                path.display()
            );
            Ok(Outcome::Pass)
        }
    }
}

fn run_amoeba(cli: &Cli, cmd: &AmoebaCmd, out: &Path) -> Result<Outcome, CliError> {
    match cmd {
        AmoebaCmd::Sample {
            file,
            t,
            sample,
            dump_points,
        } => {
            let family = load_family(file)?;
            let params = sample.build(family.dimension())?;
            match sample_amoeba(&family, *t, &params) {
                Ok(s) => {
                    let summary = SampleSummaryJson {
                        t: s.t,
                        scale: s.scale,
                        n_points: s.points.len(),
                        skipped_fibers: s.skipped_fibers,
                    };
                    let path = write_report(out, "sample.json", &summary)?;
                    if *dump_points {
                        write_report(out, "points.json", &s.points)?;
                    }
                    println!(
                        "{} points, {} skipped fibers -> {}",
                        s.points.len(),
                        s.skipped_fibers,
                        path.display()
                    );
                    Ok(Outcome::Pass)
                }
                Err(e) => classify(e),
            }
        }
        AmoebaCmd::Converge {
            file,
            t,
            sample,
            dump_points,
        } => {
            let family = load_family(file)?;
            let params = sample.build(family.dimension())?;
            let ts = parse_float_list(t).map_err(CliError::Input)?;
            match convergence_table(&family, &ts, &params) {
                Ok(report) => {
                    let echo = format!(
                        "trop amoeba converge window={} grid={} tol={:e} margin={} scaling={} seed={}",
                        sample.window, sample.grid, sample.tol, sample.margin, sample.scaling,
                        cli.seed
                    );
                    let csv = convergence_csv(&report, &echo);
                    let path = write_text(out, "converge.csv", &csv)?;
                    if *dump_points {
                        for &tv in &ts {
                            let s = sample_amoeba(&family, tv, &params)
                                .map_err(|e| CliError::Input(e.to_string()))?;
                            write_report(out, &format!("points_{tv:e}.json"), &s.points)?;
                        }
                    }
                    println!("{} rows -> {}", report.rows.len(), path.display());
                    Ok(Outcome::Pass)
                }
                Err(e) => classify(e),
            }
        }
        AmoebaCmd::Avoid {
            file,
            center,
            radius,
            t,
            sample,
        } => {
            let family = load_family(file)?;
            let params = sample.build(family.dimension())?;
            let ts = parse_float_list(t).map_err(CliError::Input)?;
            let center: Vec<Rat> = parse_rat_list(center).map_err(CliError::Input)?;
            let radius = parse_rat(radius).map_err(|e| CliError::Input(e.to_string()))?;
            match compact_avoidance_check(&family, &center, &radius, &ts, &params) {
                Ok(report) => {
                    let json = AvoidanceJson::new(&report);
                    let path = write_report(out, "avoid.json", &json)?;
                    println!(
                        "clearance rows {}, pass={} -> {}",
                        json.rows.len(),
                        json.pass,
                        path.display()
                    );
                    if report.pass {
                        Ok(Outcome::Pass)
                    } else {
                        Ok(Outcome::CheckFailed("cloud does not clear the ball".into()))
                    }
                }
                Err(e) => classify(e),
            }
        }
        AmoebaCmd::Linesection {
            file,
            hyperplane,
            eta,
            t,
            sample,
        } => {
            let family = load_family(file)?;
            let params = sample.build(family.dimension())?;
            let h = parse_hyperplane(hyperplane)?;
            match line_section_gap(&family, *t, &h, *eta, &params) {
                Ok(report) => {
                    let json = SectionGapJson::new(&report);
                    let path = write_report(out, "linesection.json", &json)?;
                    println!(
                        "{} intersection points, pass={} -> {}",
                        json.points.len(),
                        json.pass,
                        path.display()
                    );
                    if report.pass {
                        Ok(Outcome::Pass)
                    } else {
                        Ok(Outcome::CheckFailed("an intersection tube is empty".into()))
                    }
                }
                Err(e) => classify(e),
            }
        }
    }
}

fn main() -> ExitCode {
    // TROPLAB_THREADS caps fiber parallelism; 0 or unset means automatic.
    if let Ok(v) = std::env::var("TROPLAB_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::from(0),
        Ok(Outcome::CheckFailed(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}
