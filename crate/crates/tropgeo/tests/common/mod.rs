//! Shared test support: seeded corpora and independent oracles.
//!
//! The relative-interior oracle here decides hull membership by enumerating
//! candidate separating functionals from scratch (its own rational
//! elimination), so it shares no code path with the simplex-based check it
//! validates.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropgeo::hypersurface::TropicalPolynomial;
use tropgeo::Rat;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Random rational with numerator in `[-num..=num]` and denominator in
/// `[1..=den]`.
pub fn random_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random primitive nonzero integer vector with entries in `[-bound..=bound]`.
pub fn random_primitive(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if let Ok(d) = tropgeo::geom::primitive_vector(&v) {
            return d.components().to_vec();
        }
    }
}

/// Random support of `size` distinct exponents in `[0..=range]^n` with
/// random rational values (denominators at most `den`).
pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    n: usize,
    size: usize,
    range: i64,
    num: i64,
    den: i64,
) -> TropicalPolynomial {
    let capacity = ((range + 1) as usize).pow(n as u32);
    assert!(size <= capacity, "only {capacity} distinct exponents exist");
    let mut exps: Vec<Vec<i64>> = Vec::new();
    while exps.len() < size {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=range)).collect();
        if !exps.contains(&e) {
            exps.push(e);
        }
    }
    let terms = exps
        .into_iter()
        .map(|e| (e, random_rat(rng, num, den)))
        .collect();
    TropicalPolynomial::new(n, terms).expect("generated support is valid")
}

// --- independent rational elimination -----------------------------------

fn echelon(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

fn int_rows(vs: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    vs.iter()
        .map(|v| {
            v.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

fn rank_of(vs: &[Vec<i64>]) -> usize {
    let mut m = int_rows(vs);
    echelon(&mut m).len()
}

fn nullspace_of(vs: &[Vec<i64>], cols: usize) -> Vec<Vec<BigRational>> {
    if vs.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut e = vec![BigRational::zero(); cols];
                e[i] = BigRational::one();
                e
            })
            .collect();
    }
    let mut m = int_rows(vs);
    let pivots = echelon(&mut m);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

fn dots(u: &[BigRational], v: &[i64]) -> BigRational {
    u.iter()
        .zip(v)
        .map(|(a, &b)| a * BigRational::from_integer(BigInt::from(b)))
        .sum()
}

/// Exact oracle for `0 ∈ relint(conv(dirs))` by enumerating candidate
/// separating functionals: one per subset of rank `rank(dirs) - 1`, whose
/// restriction to the span is unique up to sign.
pub fn oracle_relint_contains_origin(dirs: &[Vec<i64>]) -> bool {
    let n = dirs[0].len();
    let r = rank_of(dirs);
    assert!(r >= 1, "directions are nonzero");
    let m = dirs.len();
    for mask in 0..(1u32 << m) {
        let subset: Vec<Vec<i64>> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| dirs[i].clone())
            .collect();
        if rank_of(&subset) != r - 1 {
            continue;
        }
        // the candidate functional: vanishes on the subset, not on the span
        let basis = nullspace_of(&subset, n);
        let Some(u) = basis
            .iter()
            .find(|u| dirs.iter().any(|v| !dots(u, v).is_zero()))
        else {
            continue;
        };
        for sign in [1i64, -1] {
            let values: Vec<BigRational> = dirs
                .iter()
                .map(|v| dots(u, v) * BigRational::from_integer(BigInt::from(sign)))
                .collect();
            if values.iter().all(|x| !x.is_negative()) && values.iter().any(|x| x.is_positive())
            {
                return false; // separated: origin not in the relative interior
            }
        }
    }
    true
}

/// Float screen: directions sampled on the unit sphere; when one cleanly
/// separates the star, the origin is certainly outside the relative
/// interior. One-sided by construction.
pub fn sampled_separation_screen(dirs: &[Vec<i64>], samples: usize, seed: u64) -> bool {
    let mut rng = rng(seed);
    let n = dirs[0].len();
    for _ in 0..samples {
        let mut w: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-9 {
            continue;
        }
        for x in w.iter_mut() {
            *x /= norm;
        }
        let vals: Vec<f64> = dirs
            .iter()
            .map(|v| v.iter().zip(&w).map(|(&a, b)| a as f64 * b).sum())
            .collect();
        if vals.iter().all(|&x| x > 1e-6) {
            return true;
        }
    }
    false
}

// --- integer hull area (test-side shoelace) ------------------------------

/// Twice the area of the convex hull of integer points (monotone chain).
pub fn hull_double_area(points: &[Vec<i64>]) -> i64 {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return 0;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| -> i64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let hull = lower;
    let mut twice = 0i64;
    for i in 0..hull.len() {
        let (x1, y1) = hull[i];
        let (x2, y2) = hull[(i + 1) % hull.len()];
        twice += x1 * y2 - x2 * y1;
    }
    twice.abs()
}
