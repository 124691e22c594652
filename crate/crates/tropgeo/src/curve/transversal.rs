//! Exact transversal hyperplane sections and convexity witnesses.
//!
//! A hyperplane is transverse to the graph when no vertex lies on it and no
//! edge annihilated by its normal meets it; every crossing is then a single
//! point in an edge's relative interior. Degeneracy is data, not failure:
//! the outcome type carries every vertex hit and tangent edge found.

use num_traits::Zero;

use super::path::{monotone_unbounded_path, MonotonePath};
use super::{BalancedGraph, EdgeKind};
use crate::error::Degeneracy;
use crate::geom::{dot_ii, dot_ri, Direction};
use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

/// A rational hyperplane `{x : w·x = b}` with primitive normal `w`; the
/// normal is the positive side.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub normal: Direction,
    pub offset: Rat,
}

/// One transversal crossing: the exact point, the crossed edge, and the sign
/// of `w·v_e` under the edge's stored orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionPoint {
    pub point: Vec<Rat>,
    pub edge: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransversalSection {
    pub hyperplane: Hyperplane,
    pub points: Vec<IntersectionPoint>,
}

/// Either a section or the exact degeneracy data.
#[derive(Debug, Clone, PartialEq)]
pub enum TransversalOutcome {
    Section(TransversalSection),
    NotTransverse(Degeneracy),
}

/// Intersects the graph with a hyperplane, exactly.
pub fn hyperplane_transversal(g: &BalancedGraph, h: &Hyperplane) -> TransversalOutcome {
    let w = h.normal.components();
    let heights: Vec<Rat> = g
        .vertices()
        .iter()
        .map(|x| dot_ri(x, w) - &h.offset)
        .collect();

    let mut degeneracy = Degeneracy {
        vertices_on: Vec::new(),
        tangent_edges: Vec::new(),
    };
    for (i, hv) in heights.iter().enumerate() {
        if hv.is_zero() {
            degeneracy.vertices_on.push(i);
        }
    }
    for (e, edge) in g.edges().iter().enumerate() {
        if dot_ii(w, edge.direction.components()) != 0 {
            continue;
        }
        // the pairing vanishes along the edge, so it meets the hyperplane
        // exactly when its base height vanishes
        let meets = match edge.kind {
            EdgeKind::Segment { u, .. } | EdgeKind::Ray { u } => heights[u].is_zero(),
        };
        if meets {
            degeneracy.tangent_edges.push(e);
        }
    }
    if !degeneracy.vertices_on.is_empty() || !degeneracy.tangent_edges.is_empty() {
        return TransversalOutcome::NotTransverse(degeneracy);
    }

    let mut points = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let pairing = dot_ii(w, edge.direction.components());
        if pairing == 0 {
            continue;
        }
        let (u, limit) = match edge.kind {
            EdgeKind::Segment { u, v } => {
                // λ along the stored direction, measured to the far endpoint
                let chord: Vec<Rat> = g.vertices()[v]
                    .iter()
                    .zip(&g.vertices()[u])
                    .map(|(a, b)| a - b)
                    .collect();
                let dir: Vec<Rat> = edge
                    .direction
                    .components()
                    .iter()
                    .map(|&k| rat_int(k))
                    .collect();
                let len2 = crate::geom::dot_rr(&dir, &dir);
                (u, Some(crate::geom::dot_rr(&chord, &dir) / len2))
            }
            EdgeKind::Ray { u } => (u, None),
        };
        let lambda = -heights[u].clone() / rat_int(pairing);
        let inside = lambda > Rat::zero()
            && match &limit {
                Some(total) => &lambda < total,
                None => true,
            };
        if inside {
            let point: Vec<Rat> = g.vertices()[u]
                .iter()
                .zip(edge.direction.components())
                .map(|(x, &d)| x + &lambda * rat_int(d))
                .collect();
            debug_assert!(dot_ri(&point, w) == h.offset);
            points.push(IntersectionPoint {
                point,
                edge: e,
                sign: if pairing > 0 { 1 } else { -1 },
            });
        }
    }
    TransversalOutcome::Section(TransversalSection {
        hyperplane: h.clone(),
        points,
    })
}

/// Ascending and descending escape paths from one crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessPair {
    pub point: IntersectionPoint,
    pub ascending: MonotonePath,
    pub descending: MonotonePath,
}

/// For each transversal crossing, the pair of monotone unbounded paths along
/// `w` and `-w` starting on the crossed edge. Together they certify that the
/// sphere class around the crossing cannot bound in the complement.
pub fn convexity_witnesses(g: &BalancedGraph, h: &Hyperplane) -> Result<Vec<WitnessPair>> {
    let section = match hyperplane_transversal(g, h) {
        TransversalOutcome::Section(s) => s,
        TransversalOutcome::NotTransverse(d) => return Err(Error::NotTransverse(d)),
    };
    let weak = g.check_weakly_balanced()?;
    if let Some(v) = weak.vertices.iter().position(|x| !x.pass) {
        return Err(Error::NotWeaklyBalanced(v));
    }
    let w = h.normal.components();
    let neg: Vec<i64> = w.iter().map(|&x| -x).collect();
    section
        .points
        .into_iter()
        .map(|pt| {
            let ascending = monotone_unbounded_path(g, w, &pt.point)?;
            let descending = monotone_unbounded_path(g, &neg, &pt.point)?;
            debug_assert_eq!(ascending.steps[0].edge, pt.edge);
            debug_assert_eq!(descending.steps[0].edge, pt.edge);
            Ok(WitnessPair {
                point: pt,
                ascending,
                descending,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{tropical_conic_graph, tropical_line_graph};
    use crate::geom::primitive_vector;
    use crate::ratio::parse_rat;

    fn horizontal(offset: &str) -> Hyperplane {
        Hyperplane {
            normal: primitive_vector(&[0, 1]).unwrap(),
            offset: parse_rat(offset).unwrap(),
        }
    }

    #[test]
    fn conic_horizontal_section() {
        let g = tropical_conic_graph();
        match hyperplane_transversal(&g, &horizontal("1/2")) {
            TransversalOutcome::Section(s) => {
                assert_eq!(s.points.len(), 1);
                let p = &s.points[0];
                assert_eq!(p.point, vec![rat_int(0), parse_rat("1/2").unwrap()]);
                assert_eq!(p.sign, 1);
                assert_eq!(
                    g.edges()[p.edge].direction.components(),
                    &[0, 1]
                );
            }
            other => panic!("expected a section, got {other:?}"),
        }
    }

    #[test]
    fn vertex_on_hyperplane_reported() {
        let g = tropical_conic_graph();
        match hyperplane_transversal(&g, &horizontal("0")) {
            TransversalOutcome::NotTransverse(d) => {
                assert!(d.vertices_on.contains(&0));
            }
            other => panic!("expected degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn tangent_ray_reported() {
        let g = tropical_conic_graph();
        match hyperplane_transversal(&g, &horizontal("-1")) {
            TransversalOutcome::NotTransverse(d) => {
                // the west ray at (-1,-1) lies inside the hyperplane
                assert!(d.tangent_edges.contains(&3));
                assert!(d.vertices_on.contains(&1));
            }
            other => panic!("expected degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn conic_witnesses() {
        let g = tropical_conic_graph();
        let pairs = convexity_witnesses(&g, &horizontal("1/2")).unwrap();
        assert_eq!(pairs.len(), 1);
        let pair = &pairs[0];
        pair.ascending.verify(&g).unwrap();
        pair.descending.verify(&g).unwrap();
        // ascending escapes straight up the north ray
        assert_eq!(pair.ascending.steps.len(), 1);
        // descending runs down to (0,0), along the diagonal, out the south ray
        assert_eq!(pair.descending.vertex_trail, vec![0, 1]);
        assert_eq!(
            g.edges()[pair.descending.terminal_ray()]
                .direction
                .components(),
            &[0, -1]
        );
    }

    #[test]
    fn line_witnesses() {
        let g = tropical_line_graph();
        let pairs = convexity_witnesses(&g, &horizontal("1/2")).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(
            pairs[0].point.point,
            vec![rat_int(0), parse_rat("1/2").unwrap()]
        );
    }

    #[test]
    fn unbalanced_graph_rejected() {
        use crate::curve::{BalancedGraph, Edge, EdgeKind};
        let z = || rat_int(0);
        let star = BalancedGraph::new(
            2,
            vec![vec![z(), z()]],
            vec![
                Edge {
                    kind: EdgeKind::Ray { u: 0 },
                    direction: primitive_vector(&[1, 0]).unwrap(),
                    weight: 1,
                },
                Edge {
                    kind: EdgeKind::Ray { u: 0 },
                    direction: primitive_vector(&[0, 1]).unwrap(),
                    weight: 1,
                },
            ],
        )
        .unwrap();
        assert!(matches!(
            convexity_witnesses(&star, &horizontal("1/2")),
            Err(Error::NotWeaklyBalanced(0))
        ));
    }
}
