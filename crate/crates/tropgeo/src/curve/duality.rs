//! Plane tropical curves dual to regular subdivisions.
//!
//! Vertices of the curve are the points dual to full-dimensional cells
//! (solutions of the tie systems); segments are dual to interior 1-cells,
//! rays to boundary 1-cells, and each edge carries the lattice length of its
//! dual subdivision edge as weight. When the support is a segment the curve
//! is a union of full lines; each is split at its point closest to the
//! origin by an artificial degree-two vertex.

use num_integer::Integer;

use super::{BalancedGraph, Edge, EdgeKind};
use crate::geom::{dot_rr, linalg, primitive_vector, Direction};
use crate::hypersurface::{dual_subdivision, SubdivisionCell, TropicalPolynomial};
use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

/// Builds the weighted balanced graph of a bivariate tropical polynomial.
pub fn curve_from_plane_tropical_polynomial(t: &TropicalPolynomial) -> Result<BalancedGraph> {
    if t.dimension() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: t.dimension(),
        });
    }
    if t.len() < 2 {
        return Err(Error::TooFewTerms);
    }
    let cells = dual_subdivision(t)?;
    let support_dim = cells.iter().map(|c| c.dim).max().unwrap_or(0);
    match support_dim {
        1 => lines_from_segment_support(t, &cells),
        2 => graph_from_full_subdivision(t, &cells),
        _ => unreachable!("two distinct exponents span at least a segment"),
    }
}

/// Lattice length of the dual edge: lattice points on the segment between
/// the extreme members, minus one.
fn lattice_length(t: &TropicalPolynomial, cell: &SubdivisionCell) -> u64 {
    let (lo, hi) = extreme_members(t, cell);
    let dx = (t.exponent(hi)[0] - t.exponent(lo)[0]).unsigned_abs();
    let dy = (t.exponent(hi)[1] - t.exponent(lo)[1]).unsigned_abs();
    dx.gcd(&dy)
}

/// Endpoints of a 1-cell: the two members extreme along the cell direction.
fn extreme_members(t: &TropicalPolynomial, cell: &SubdivisionCell) -> (usize, usize) {
    let first = cell.members[0];
    let key = |i: usize| -> (i64, i64) {
        let e = t.exponent(i);
        (e[0] - t.exponent(first)[0], e[1] - t.exponent(first)[1])
    };
    let lo = *cell
        .members
        .iter()
        .min_by_key(|&&i| key(i))
        .expect("cells are nonempty");
    let hi = *cell
        .members
        .iter()
        .max_by_key(|&&i| key(i))
        .expect("cells are nonempty");
    (lo, hi)
}

/// The unique `w` where every member of a full-dimensional cell ties.
fn dual_vertex(t: &TropicalPolynomial, cell: &SubdivisionCell) -> Vec<Rat> {
    let base = cell.members[0];
    let a0 = t.exponent(base);
    let c0 = &t.terms()[base].valuation;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &i in &cell.members[1..] {
        let ai = t.exponent(i);
        rows.push(vec![rat_int(ai[0] - a0[0]), rat_int(ai[1] - a0[1])]);
        rhs.push(c0 - &t.terms()[i].valuation);
    }
    linalg::solve(&rows, &rhs).expect("tie system of a maximal cell is consistent")
}

fn graph_from_full_subdivision(
    t: &TropicalPolynomial,
    cells: &[SubdivisionCell],
) -> Result<BalancedGraph> {
    let two_cells: Vec<&SubdivisionCell> = cells.iter().filter(|c| c.dim == 2).collect();
    let one_cells: Vec<&SubdivisionCell> = cells.iter().filter(|c| c.dim == 1).collect();

    let vertices: Vec<Vec<Rat>> = two_cells.iter().map(|c| dual_vertex(t, c)).collect();
    let mut edges = Vec::new();
    for f in &one_cells {
        let parents: Vec<usize> = two_cells
            .iter()
            .enumerate()
            .filter(|(_, c)| f.members.iter().all(|m| c.members.contains(m)))
            .map(|(i, _)| i)
            .collect();
        let weight = lattice_length(t, f);
        let (lo, hi) = extreme_members(t, f);
        let span: Vec<i64> = (0..2)
            .map(|k| t.exponent(hi)[k] - t.exponent(lo)[k])
            .collect();
        match parents.as_slice() {
            [c1, c2] => {
                let delta: Vec<Rat> = vertices[*c2]
                    .iter()
                    .zip(&vertices[*c1])
                    .map(|(a, b)| a - b)
                    .collect();
                let direction = Direction::new(crate::ratio::primitive_integer_vector(&delta)?)?;
                edges.push(Edge {
                    kind: EdgeKind::Segment { u: *c1, v: *c2 },
                    direction,
                    weight,
                });
            }
            [c] => {
                // ray perpendicular to the dual edge, oriented so the other
                // members of the parent cell grow along it
                let perp = primitive_vector(&[-span[1], span[0]])?;
                let lo_exp = t.exponent(lo);
                let grows = two_cells[*c].members.iter().any(|&m| {
                    if f.members.contains(&m) {
                        return false;
                    }
                    let d: Vec<i64> = (0..2).map(|k| t.exponent(m)[k] - lo_exp[k]).collect();
                    crate::geom::dot_ii(&perp, &d) > 0
                });
                let direction = if grows { perp } else { perp.negated() };
                edges.push(Edge {
                    kind: EdgeKind::Ray { u: *c },
                    direction,
                    weight,
                });
            }
            other => {
                return Err(Error::MalformedGraph(format!(
                    "1-cell with {} parent cells",
                    other.len()
                )))
            }
        }
    }
    BalancedGraph::new(2, vertices, edges)
}

/// Segment support: each maximal 1-cell is dual to a full line, split at its
/// rational point closest to the origin.
fn lines_from_segment_support(
    t: &TropicalPolynomial,
    cells: &[SubdivisionCell],
) -> Result<BalancedGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for f in cells.iter().filter(|c| c.dim == 1) {
        let (lo, hi) = extreme_members(t, f);
        let span: Vec<i64> = (0..2)
            .map(|k| t.exponent(hi)[k] - t.exponent(lo)[k])
            .collect();
        // tie line: span·w = c_lo - c_hi
        let rhs = &t.terms()[lo].valuation - &t.terms()[hi].valuation;
        let normal: Vec<Rat> = span.iter().map(|&k| rat_int(k)).collect();
        let len2 = dot_rr(&normal, &normal);
        let anchor: Vec<Rat> = normal.iter().map(|x| x * &rhs / &len2).collect();
        let dir = primitive_vector(&[-span[1], span[0]])?;
        let weight = lattice_length(t, f);
        let v = vertices.len();
        vertices.push(anchor);
        edges.push(Edge {
            kind: EdgeKind::Ray { u: v },
            direction: dir.clone(),
            weight,
        });
        edges.push(Edge {
            kind: EdgeKind::Ray { u: v },
            direction: dir.negated(),
            weight,
        });
    }
    BalancedGraph::new(2, vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{tropical_conic_graph, tropical_line_graph};
    use crate::ratio::parse_rat;

    fn poly(terms: &[(&[i64], &str)]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            2,
            terms
                .iter()
                .map(|&(a, c)| (a.to_vec(), parse_rat(c).unwrap()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn conic_from_lifted_square() {
        let t = poly(&[
            (&[0, 0], "0"),
            (&[1, 0], "0"),
            (&[0, 1], "0"),
            (&[1, 1], "1"),
        ]);
        let g = curve_from_plane_tropical_polynomial(&t).unwrap();
        assert_eq!(g.vertices().len(), 2);
        let expected = tropical_conic_graph();
        let mut got: Vec<Vec<Rat>> = g.vertices().to_vec();
        let mut want: Vec<Vec<Rat>> = expected.vertices().to_vec();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        let segments = g
            .edges()
            .iter()
            .filter(|e| matches!(e.kind, EdgeKind::Segment { .. }))
            .count();
        let rays = g
            .edges()
            .iter()
            .filter(|e| matches!(e.kind, EdgeKind::Ray { .. }))
            .count();
        assert_eq!((segments, rays), (1, 4));
        assert!(g.edges().iter().all(|e| e.weight == 1));
        assert!(g.check_balanced().pass);
    }

    #[test]
    fn segment_support_gives_a_split_line() {
        let t = poly(&[(&[0, 0], "0"), (&[2, 0], "0")]);
        let g = curve_from_plane_tropical_polynomial(&t).unwrap();
        assert_eq!(g.vertices().len(), 1);
        assert_eq!(g.vertices()[0], vec![rat_int(0), rat_int(0)]);
        assert_eq!(g.edges().len(), 2);
        let mut dirs: Vec<Vec<i64>> = g
            .edges()
            .iter()
            .map(|e| e.direction.components().to_vec())
            .collect();
        dirs.sort();
        assert_eq!(dirs, vec![vec![0, -1], vec![0, 1]]);
        assert!(g.edges().iter().all(|e| e.weight == 2));
        assert!(g.check_balanced().pass);
    }

    #[test]
    fn tropical_line_from_flat_triangle() {
        let t = poly(&[(&[0, 0], "0"), (&[1, 0], "0"), (&[0, 1], "0")]);
        let g = curve_from_plane_tropical_polynomial(&t).unwrap();
        let want = tropical_line_graph();
        assert_eq!(g.vertices(), want.vertices());
        let mut got: Vec<Vec<i64>> = g
            .edges()
            .iter()
            .map(|e| e.direction.components().to_vec())
            .collect();
        got.sort();
        assert_eq!(got, vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
        assert!(g.check_balanced().pass);
    }

    #[test]
    fn membership_matches_the_hypersurface() {
        let t = poly(&[
            (&[0, 0], "0"),
            (&[1, 0], "0"),
            (&[0, 1], "0"),
            (&[1, 1], "1"),
        ]);
        let g = curve_from_plane_tropical_polynomial(&t).unwrap();
        for v in g.vertices() {
            assert!(t.contains(v).unwrap());
        }
        for e in 0..g.edges().len() {
            let p = g.edge_sample_point(e);
            assert!(t.contains(&p).unwrap());
        }
        // a point off the curve
        let off = vec![rat_int(5), rat_int(3)];
        assert!(!t.contains(&off).unwrap());
        assert!(g.locate(&off).is_none());
    }

    #[test]
    fn too_few_terms_rejected() {
        let t = TropicalPolynomial::new(2, vec![(vec![0, 0], rat_int(0))]).unwrap();
        assert!(matches!(
            curve_from_plane_tropical_polynomial(&t),
            Err(Error::TooFewTerms)
        ));
    }
}
