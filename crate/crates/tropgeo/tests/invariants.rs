//! Cross-module invariants from the design contracts, exercised on seeded
//! random instances.

mod common;

use common::*;
use rand::Rng;

use tropgeo::amoeba::sample::SampleParams;
use tropgeo::amoeba::{convergence_table, FamilyTerm, GridSpec, MonomialFamily, Window};
use tropgeo::curve::curve_from_plane_tropical_polynomial;
use tropgeo::geom::{dot_ii, dot_ri, primitive_vector, relint_contains_origin};
use tropgeo::hypersurface::{dual_subdivision, line_section};
use tropgeo::ratio::rat_int;
use tropgeo::{Complex64, Rat};

/// The argmin support at any point is exactly one cell of the dual
/// subdivision: the unique cell of maximal dimension among those contained
/// in it, and the unique minimal cell containing it.
#[test]
fn argmin_supports_are_subdivision_cells() {
    let mut rng = rng(7);
    for _ in 0..60 {
        let size = rng.gen_range(2..=8usize);
        let poly = random_polynomial(&mut rng, 2, size, 4, 30, 10);
        let cells = dual_subdivision(&poly).unwrap();
        let mut probes: Vec<Vec<Rat>> = (0..20)
            .map(|_| (0..2).map(|_| random_rat(&mut rng, 30, 7)).collect())
            .collect();
        // points exactly on the hypersurface, from a random line section
        let p: Vec<Rat> = (0..2).map(|_| random_rat(&mut rng, 10, 3)).collect();
        let d = vec![rat(1, 1), random_rat(&mut rng, 3, 2)];
        if let Ok(section) = line_section(&poly, &p, &d) {
            for tau in &section.breakpoints {
                probes.push(p.iter().zip(&d).map(|(a, b)| a + b * tau).collect());
            }
        }
        for w in probes {
            let argmin = poly.argmin_support(&w).unwrap();
            assert!(
                cells.iter().any(|c| c.members == argmin),
                "argmin {argmin:?} is not a cell"
            );
            let contained: Vec<_> = cells
                .iter()
                .filter(|c| c.members.iter().all(|m| argmin.contains(m)))
                .collect();
            let max_dim = contained.iter().map(|c| c.dim).max().unwrap();
            let top: Vec<_> = contained.iter().filter(|c| c.dim == max_dim).collect();
            assert_eq!(top.len(), 1, "maximal contained cell is unique");
            assert_eq!(top[0].members, argmin);
        }
    }
}

/// Two independent routes to the same fact: a monomial's linearity region
/// has nonempty interior exactly when its singleton is a vertex cell of the
/// dual subdivision. The left side is decided by the phase-two simplex, the
/// right by lower-hull enumeration.
#[test]
fn region_emptiness_matches_subdivision_vertices() {
    let mut rng = rng(14);
    for case in 0..50 {
        let size = rng.gen_range(2..=9usize);
        let poly = if case % 2 == 0 {
            random_polynomial(&mut rng, 2, size, 4, 30, 10)
        } else {
            // tie-heavy values exercise degenerate monomials
            random_polynomial(&mut rng, 2, size, 3, 1, 1)
        };
        let cells = dual_subdivision(&poly).unwrap();
        for (i, term) in poly.terms().iter().enumerate() {
            let region = poly.linearity_region(&term.exponent).unwrap();
            let is_vertex = cells
                .iter()
                .any(|c| c.dim == 0 && c.members == vec![i]);
            assert_eq!(
                region.is_empty, !is_vertex,
                "monomial {:?} of {:?}",
                term.exponent,
                poly.terms().iter().map(|t| t.exponent.clone()).collect::<Vec<_>>()
            );
        }
    }
}

/// A point is on the hypersurface exactly when it lies on the boundary of at
/// least two linearity regions with nonempty interior.
#[test]
fn hypersurface_points_sit_on_region_boundaries() {
    let mut rng = rng(8);
    for _ in 0..40 {
        let size = rng.gen_range(2..=7usize);
        let poly = random_polynomial(&mut rng, 2, size, 3, 20, 8);
        let regions: Vec<_> = poly
            .terms()
            .iter()
            .map(|t| poly.linearity_region(&t.exponent).unwrap())
            .collect();
        // walk a random line; breakpoints are on the hypersurface, interval
        // midpoints are off it
        let p: Vec<Rat> = (0..2).map(|_| random_rat(&mut rng, 20, 5)).collect();
        let d = loop {
            let d: Vec<Rat> = (0..2).map(|_| random_rat(&mut rng, 4, 2)).collect();
            if d.iter().any(|x| x != &rat(0, 1)) {
                break d;
            }
        };
        let Ok(section) = line_section(&poly, &p, &d) else {
            continue;
        };
        let at = |tau: &Rat| -> Vec<Rat> {
            p.iter().zip(&d).map(|(a, b)| a + b * tau).collect()
        };
        for tau in &section.breakpoints {
            let w = at(tau);
            assert!(poly.contains(&w).unwrap());
            let bounding = regions
                .iter()
                .filter(|r| !r.is_empty && r.on_boundary(&w))
                .count();
            assert!(bounding >= 2, "expected two bounding regions at {w:?}");
        }
        for pair in section.breakpoints.windows(2) {
            let mid = (pair[0].clone() + pair[1].clone()) / rat(2, 1);
            assert!(!poly.contains(&at(&mid)).unwrap());
        }
    }
}

/// Generic lifts subdivide into simplices whose normalized volumes sum to
/// the volume of the support hull; the covering identity holds for ties too.
#[test]
fn subdivision_volumes_cover_the_hull() {
    let mut rng = rng(9);
    for case in 0..40 {
        let size = rng.gen_range(3..=9usize);
        let poly = if case % 2 == 0 {
            // generic: large random numerators make ties vanishingly rare
            random_polynomial(&mut rng, 2, size, 4, 1_000_000, 9973)
        } else {
            // deliberately tie-heavy lifts
            random_polynomial(&mut rng, 2, size, 3, 2, 2)
        };
        let exps: Vec<Vec<i64>> = poly.terms().iter().map(|t| t.exponent.clone()).collect();
        let hull2 = hull_double_area(&exps);
        let cells = dual_subdivision(&poly).unwrap();
        let full: Vec<_> = cells.iter().filter(|c| c.dim == 2).collect();
        let sum2: i64 = full
            .iter()
            .map(|c| {
                let pts: Vec<Vec<i64>> =
                    c.members.iter().map(|&i| exps[i].clone()).collect();
                hull_double_area(&pts)
            })
            .sum();
        if hull2 > 0 {
            assert_eq!(sum2, hull2, "cells must tile the hull");
        }
        if case % 2 == 0 {
            assert!(
                full.iter().all(|c| c.members.len() == 3),
                "generic lifts triangulate"
            );
        }
    }
}

/// A vanishing positive integer combination forces the origin into the
/// relative interior of the direction hull.
#[test]
fn positive_combinations_imply_relint_membership() {
    let mut rng = rng(10);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4usize);
        let k = rng.gen_range(2..=5usize);
        let mut dirs = Vec::new();
        let mut total = vec![0i64; n];
        for _ in 0..k {
            let v = random_primitive(&mut rng, n, 3);
            let alpha = rng.gen_range(1..=4i64);
            for (t, &x) in total.iter_mut().zip(&v) {
                *t += alpha * x;
            }
            dirs.push(primitive_vector(&v).unwrap());
        }
        let closing: Vec<i64> = total.iter().map(|&x| -x).collect();
        if closing.iter().all(|&x| x == 0) {
            // already closed: the partial sum vanished
        } else {
            dirs.push(primitive_vector(&closing).unwrap());
        }
        let r = relint_contains_origin(&dirs).unwrap();
        assert!(r.contains, "zero-sum star {dirs:?} must contain the origin");
    }
}

/// Dual curves trace exactly the hypersurface: vertices and edge samples are
/// on it, and points are on the hypersurface iff they are on the graph.
#[test]
fn duality_membership_soundness() {
    let mut rng = rng(11);
    for _ in 0..15 {
        let size = rng.gen_range(2..=9usize);
        let poly = random_polynomial(&mut rng, 2, size, 4, 40, 15);
        let g = curve_from_plane_tropical_polynomial(&poly).unwrap();
        for v in g.vertices() {
            assert!(poly.contains(v).unwrap());
        }
        for e in 0..g.edges().len() {
            let p = g.edge_sample_point(e);
            assert!(poly.contains(&p).unwrap());
            assert!(g.locate(&p).is_some());
        }
        assert!(g.every_component_has_ray());
        for _ in 0..30 {
            let w: Vec<Rat> = (0..2).map(|_| random_rat(&mut rng, 25, 6)).collect();
            assert_eq!(
                poly.contains(&w).unwrap(),
                g.locate(&w).is_some(),
                "graph and hypersurface disagree at {w:?}"
            );
        }
    }
}

/// The evaluation along a line equals the label's affine function on every
/// interval of its section.
#[test]
fn envelope_labels_are_consistent() {
    let mut rng = rng(12);
    for _ in 0..60 {
        let n = rng.gen_range(1..=3usize);
        let size = rng.gen_range(2..=8usize);
        // one variable offers only range+1 distinct exponents
        let range = if n == 1 { 9 } else { 3 };
        let poly = random_polynomial(&mut rng, n, size, range, 25, 9);
        let p: Vec<Rat> = (0..n).map(|_| random_rat(&mut rng, 10, 4)).collect();
        let d = loop {
            let d: Vec<Rat> = (0..n).map(|_| random_rat(&mut rng, 3, 2)).collect();
            if d.iter().any(|x| x != &rat(0, 1)) {
                break d;
            }
        };
        let Ok(section) = line_section(&poly, &p, &d) else {
            continue;
        };
        let mut probes: Vec<(Rat, usize)> = Vec::new();
        match section.breakpoints.as_slice() {
            [] => probes.push((rat(0, 1), 0)),
            bps => {
                probes.push((bps[0].clone() - rat(1, 1), 0));
                for (i, pair) in bps.windows(2).enumerate() {
                    probes.push(((pair[0].clone() + pair[1].clone()) / rat(2, 1), i + 1));
                }
                probes.push((bps[bps.len() - 1].clone() + rat(1, 1), bps.len()));
            }
        }
        for (tau, interval) in probes {
            let w: Vec<Rat> = p.iter().zip(&d).map(|(a, b)| a + b * &tau).collect();
            let label = &section.labels[interval];
            let term = poly
                .terms()
                .iter()
                .find(|t| &t.exponent == label)
                .expect("label names a term");
            let expected = &term.valuation + dot_ri(&w, label);
            assert_eq!(poly.evaluate(&w).unwrap(), expected);
        }
    }
}

/// Empirical Kuratowski convergence: the target-to-sample gap never grows by
/// more than 5% per hundredfold decrease in t, on the corpus families.
#[test]
fn gap_monotonicity_across_parameters() {
    let window2 = Window::new(vec![-2.0, -2.0], vec![2.0, 2.0]).unwrap();
    let mut params = SampleParams::with_window(window2);
    params.grid = GridSpec {
        moduli: 64,
        arguments: 16,
    };
    let term = |a: &[i64], g: i64| FamilyTerm {
        exponent: a.to_vec(),
        coefficient: Complex64::new(1.0, 0.0),
        valuation: rat_int(g),
    };
    let families = vec![
        // t + z1 + z2
        MonomialFamily::new(
            2,
            vec![term(&[0, 0], 1), term(&[1, 0], 0), term(&[0, 1], 0)],
        )
        .unwrap(),
        // constant-coefficient line 1 + z1 + z2
        MonomialFamily::new(
            2,
            vec![term(&[0, 0], 0), term(&[1, 0], 0), term(&[0, 1], 0)],
        )
        .unwrap(),
        // lifted conic 1 + z1 + z2 + t z1 z2
        MonomialFamily::new(
            2,
            vec![
                term(&[0, 0], 0),
                term(&[1, 0], 0),
                term(&[0, 1], 0),
                term(&[1, 1], 1),
            ],
        )
        .unwrap(),
    ];
    for f in &families {
        let report = convergence_table(f, &[1e-2, 1e-4, 1e-6], &params).unwrap();
        let g: Vec<f64> = report
            .rows
            .iter()
            .map(|r| r.gap_target_to_sample)
            .collect();
        for pair in g.windows(2) {
            assert!(
                pair[1] <= pair[0] * 1.05,
                "gap grew beyond tolerance: {g:?}"
            );
        }
    }
}

/// Univariate families define finite targets; gaps against the breakpoint
/// set shrink with t.
#[test]
fn univariate_convergence_table() {
    let term = |a: i64, g: i64| FamilyTerm {
        exponent: vec![a],
        coefficient: Complex64::new(1.0, 0.0),
        valuation: rat_int(g),
    };
    let f = MonomialFamily::new(1, vec![term(0, 0), term(1, 0), term(2, 1)]).unwrap();
    let params = SampleParams::with_window(Window::new(vec![-2.0], vec![1.0]).unwrap());
    let report = convergence_table(&f, &[1e-2, 1e-4, 1e-6], &params).unwrap();
    let g: Vec<f64> = report
        .rows
        .iter()
        .map(|r| r.gap_target_to_sample)
        .collect();
    assert!(g[0] > g[1] && g[1] > g[2], "gaps {g:?}");
    assert!(g[2] <= 1e-3);
}

/// Path functionals pair positively with every traversed step direction on
/// seeded corpus graphs (spot-check beyond the acceptance corpus).
#[test]
fn path_steps_always_ascend() {
    let mut rng = rng(13);
    for _ in 0..10 {
        let size = rng.gen_range(3..=8usize);
        let poly = random_polynomial(&mut rng, 2, size, 3, 30, 10);
        let g = curve_from_plane_tropical_polynomial(&poly).unwrap();
        for v in 0..g.vertices().len() {
            let away = g.incident_away(v);
            for _ in 0..5 {
                let w = random_primitive(&mut rng, 2, 4);
                if !away.iter().any(|(_, d)| dot_ii(&w, d) > 0) {
                    continue;
                }
                let path =
                    tropgeo::curve::monotone_unbounded_path(&g, &w, &g.vertices()[v].clone())
                        .unwrap();
                path.verify(&g).unwrap();
            }
        }
    }
}
