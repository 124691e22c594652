//! The regular subdivision dual to a tropical polynomial.
//!
//! Cells are the argmin sets of the evaluation functional, equivalently the
//! point sets of the lower faces of the lifted support `{(a, c_a)}`. Maximal
//! cells are found by interpolating an affine function through each affinely
//! independent `(d+1)`-subset and testing lower support; lower-dimensional
//! cells are the faces of maximal cells, enumerated recursively through
//! supporting hyperplanes. Everything is exact.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{affine_rank, TropicalPolynomial};
use crate::geom::{dot_ri, linalg};
use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

const MAX_DIMENSION: usize = 3;
const MAX_TERMS: usize = 64;

/// A cell of the dual subdivision: the indices of the support points lying on
/// one lower face, with the face's affine dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubdivisionCell {
    pub members: Vec<usize>,
    pub dim: usize,
}

/// Computes all cells (dimensions `0..=d`) of the regular subdivision induced
/// by the lifted support.
pub fn dual_subdivision(t: &TropicalPolynomial) -> Result<Vec<SubdivisionCell>> {
    let n = t.dimension();
    if n > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(n, MAX_DIMENSION));
    }
    if t.len() > MAX_TERMS {
        return Err(Error::TooManyTerms(t.len(), MAX_TERMS));
    }

    let exps: Vec<Vec<i64>> = t.terms().iter().map(|x| x.exponent.clone()).collect();
    let vals: Vec<Rat> = t.terms().iter().map(|x| x.valuation.clone()).collect();
    let m = exps.len();
    let d = affine_rank(&exps);

    let mut cells: BTreeSet<Vec<usize>> = BTreeSet::new();
    if d == 0 {
        cells.insert(vec![0]);
    } else {
        for subset in subsets(m, d + 1) {
            let pts: Vec<Vec<i64>> = subset.iter().map(|&i| exps[i].clone()).collect();
            if affine_rank(&pts) != d {
                continue;
            }
            // Interpolate u·b + β = c_b over the subset; any solution agrees
            // with the unique affine interpolant on the affine span.
            let rows: Vec<Vec<Rat>> = pts
                .iter()
                .map(|p| {
                    let mut row: Vec<Rat> = p.iter().map(|&x| rat_int(x)).collect();
                    row.push(Rat::one());
                    row
                })
                .collect();
            let rhs: Vec<Rat> = subset.iter().map(|&i| vals[i].clone()).collect();
            let sol = linalg::solve(&rows, &rhs).expect("independent interpolation system");
            let (u, beta) = (&sol[..n], &sol[n]);
            let slack: Vec<Rat> = (0..m)
                .map(|i| &vals[i] - dot_ri(u, &exps[i]) - beta)
                .collect();
            if slack.iter().any(|s| s < &Rat::zero()) {
                continue;
            }
            let members: Vec<usize> = (0..m).filter(|&i| slack[i].is_zero()).collect();
            cells.insert(members);
        }
        let maximal: Vec<Vec<usize>> = cells.iter().cloned().collect();
        for cell in maximal {
            collect_faces(&cell, &exps, &mut cells);
        }
    }

    let mut out: Vec<SubdivisionCell> = cells
        .into_iter()
        .map(|members| {
            let pts: Vec<Vec<i64>> = members.iter().map(|&i| exps[i].clone()).collect();
            SubdivisionCell {
                dim: affine_rank(&pts),
                members,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.dim, &a.members).cmp(&(b.dim, &b.members)));
    Ok(out)
}

/// Recursively inserts all proper faces of `members` (facets, then theirs).
fn collect_faces(members: &[usize], exps: &[Vec<i64>], out: &mut BTreeSet<Vec<usize>>) {
    out.insert(members.to_vec());
    let pts: Vec<Vec<i64>> = members.iter().map(|&i| exps[i].clone()).collect();
    let d = affine_rank(&pts);
    if d == 0 {
        return;
    }
    let n = exps[0].len();
    for subset in subsets(members.len(), d) {
        let c: Vec<usize> = subset.iter().map(|&k| members[k]).collect();
        let cpts: Vec<Vec<i64>> = c.iter().map(|&i| exps[i].clone()).collect();
        if affine_rank(&cpts) != d - 1 {
            continue;
        }
        let base = &cpts[0];
        let dirs: Vec<Vec<Rat>> = cpts[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(&x, &y)| rat_int(x - y)).collect())
            .collect();
        // A functional vanishing on the subset but not on the whole cell; its
        // restriction to the cell's span is unique up to scale.
        let candidates = linalg::nullspace(&dirs, n);
        let signs: Option<Vec<Rat>> = candidates.iter().find_map(|u| {
            let sigma: Vec<Rat> = members
                .iter()
                .map(|&i| {
                    let diff: Vec<Rat> = exps[i]
                        .iter()
                        .zip(base)
                        .map(|(&x, &y)| rat_int(x - y))
                        .collect();
                    crate::geom::dot_rr(u, &diff)
                })
                .collect();
            if sigma.iter().any(|s| !s.is_zero()) {
                Some(sigma)
            } else {
                None
            }
        });
        let Some(sigma) = signs else { continue };
        let supporting = sigma.iter().all(|s| s >= &Rat::zero())
            || sigma.iter().all(|s| s <= &Rat::zero());
        if !supporting {
            continue;
        }
        let face: Vec<usize> = members
            .iter()
            .zip(&sigma)
            .filter(|(_, s)| s.is_zero())
            .map(|(&i, _)| i)
            .collect();
        if !out.contains(&face) {
            collect_faces(&face, exps, out);
        }
    }
}

/// All k-subsets of `0..m` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_int;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            n,
            terms
                .iter()
                .map(|&(a, c)| (a.to_vec(), rat_int(c)))
                .collect(),
        )
        .unwrap()
    }

    fn cells_of_dim(cells: &[SubdivisionCell], d: usize) -> Vec<Vec<usize>> {
        cells
            .iter()
            .filter(|c| c.dim == d)
            .map(|c| c.members.clone())
            .collect()
    }

    #[test]
    fn univariate_generic_lift() {
        // lower hull of (0,0),(1,0),(2,1): edges {0,1} and {1,2}
        let t = poly(1, &[(&[0], 0), (&[1], 0), (&[2], 1)]);
        let cells = dual_subdivision(&t).unwrap();
        assert_eq!(cells_of_dim(&cells, 1), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(
            cells_of_dim(&cells, 0),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn univariate_lifted_middle_above() {
        // the middle point lies above the segment, single edge {0,2}
        let t = poly(1, &[(&[0], 0), (&[1], 5), (&[2], 1)]);
        let cells = dual_subdivision(&t).unwrap();
        assert_eq!(cells_of_dim(&cells, 1), vec![vec![0, 2]]);
        assert_eq!(cells_of_dim(&cells, 0), vec![vec![0], vec![2]]);
    }

    #[test]
    fn flat_triangle_is_one_cell() {
        let t = poly(2, &[(&[0, 0], 0), (&[1, 0], 0), (&[0, 1], 0)]);
        let cells = dual_subdivision(&t).unwrap();
        assert_eq!(cells_of_dim(&cells, 2), vec![vec![0, 1, 2]]);
        assert_eq!(cells_of_dim(&cells, 1).len(), 3);
        assert_eq!(cells_of_dim(&cells, 0).len(), 3);
    }

    #[test]
    fn lifted_square_splits_into_triangles() {
        let t = poly(
            2,
            &[(&[0, 0], 0), (&[0, 1], 0), (&[1, 0], 0), (&[1, 1], 1)],
        );
        let cells = dual_subdivision(&t).unwrap();
        let two = cells_of_dim(&cells, 2);
        assert_eq!(two.len(), 2);
        // terms sort to 00, 01, 10, 11; the diagonal edge joins 01 and 10
        assert!(two.contains(&vec![0, 1, 2]));
        assert!(two.contains(&vec![1, 2, 3]));
        assert!(cells_of_dim(&cells, 1).contains(&vec![1, 2]));
    }

    #[test]
    fn flat_square_is_non_simplicial() {
        let t = poly(
            2,
            &[(&[0, 0], 0), (&[0, 1], 0), (&[1, 0], 0), (&[1, 1], 0)],
        );
        let cells = dual_subdivision(&t).unwrap();
        assert_eq!(cells_of_dim(&cells, 2), vec![vec![0, 1, 2, 3]]);
        assert_eq!(cells_of_dim(&cells, 1).len(), 4); // no diagonal faces
    }

    #[test]
    fn segment_support_in_the_plane() {
        let t = poly(2, &[(&[0, 0], 0), (&[2, 0], 0)]);
        let cells = dual_subdivision(&t).unwrap();
        assert_eq!(cells_of_dim(&cells, 1), vec![vec![0, 1]]);
    }

    #[test]
    fn three_dimensional_supports() {
        // flat tetrahedron: one 3-cell, four facets, six edges, four vertices
        let t = poly(
            3,
            &[
                (&[0, 0, 0], 0),
                (&[1, 0, 0], 0),
                (&[0, 1, 0], 0),
                (&[0, 0, 1], 0),
            ],
        );
        let cells = dual_subdivision(&t).unwrap();
        let count = |d: usize| cells.iter().filter(|c| c.dim == d).count();
        assert_eq!((count(3), count(2), count(1), count(0)), (1, 4, 6, 4));

        // flat cube: non-simplicial square facets
        let corners: Vec<Vec<i64>> = (0..8)
            .map(|k| vec![k & 1, (k >> 1) & 1, (k >> 2) & 1])
            .collect();
        let t = TropicalPolynomial::new(
            3,
            corners.into_iter().map(|c| (c, rat_int(0))).collect(),
        )
        .unwrap();
        let cells = dual_subdivision(&t).unwrap();
        let count = |d: usize| cells.iter().filter(|c| c.dim == d).count();
        assert_eq!((count(3), count(2), count(1), count(0)), (1, 6, 12, 8));
        assert!(cells
            .iter()
            .filter(|c| c.dim == 2)
            .all(|c| c.members.len() == 4));
    }

    #[test]
    fn limits_enforced() {
        let t = poly(1, &[(&[0], 0), (&[1], 0)]);
        assert!(dual_subdivision(&t).is_ok());
        let t4 = TropicalPolynomial::new(
            4,
            vec![(vec![0, 0, 0, 0], rat_int(0)), (vec![1, 0, 0, 0], rat_int(0))],
        )
        .unwrap();
        assert!(matches!(
            dual_subdivision(&t4),
            Err(Error::DimensionTooLarge(4, 3))
        ));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(subsets(2, 3).is_empty());
    }
}
