//! Weighted balanced graphs in ℝⁿ: finite one-dimensional rational polyhedral
//! complexes with positive integral edge weights and primitive directions.

pub mod duality;
pub mod path;
pub mod transversal;

use num_traits::Zero;

use crate::geom::{dot_rr, primitive_vector, relint_contains_origin, Direction};
use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

pub use duality::curve_from_plane_tropical_polynomial;
pub use path::{monotone_unbounded_path, MonotonePath, PathStep};
pub use transversal::{
    convexity_witnesses, hyperplane_transversal, Hyperplane, IntersectionPoint,
    TransversalOutcome, TransversalSection, WitnessPair,
};

/// Edge shape: a segment between two vertices, or a ray leaving one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeKind {
    Segment { u: usize, v: usize },
    Ray { u: usize },
}

/// A weighted edge. For segments, `direction` is the primitive vector of
/// `position(v) - position(u)`; for rays it points along the unbounded side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub kind: EdgeKind,
    pub direction: Direction,
    pub weight: u64,
}

/// A finite one-complex in ℚⁿ with weighted edges.
#[derive(Debug, Clone, PartialEq)]
pub struct BalancedGraph {
    n: usize,
    vertices: Vec<Vec<Rat>>,
    edges: Vec<Edge>,
}

/// Where a point sits on a graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Location {
    Vertex(usize),
    /// Interior of an edge, with the rational parameter along the stored
    /// direction (segments: `0 < λ < 1` of the chord; rays: `λ > 0`).
    EdgeInterior(usize, Rat),
}

/// Per-vertex residuals of the balancing condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub residuals: Vec<Vec<i64>>,
    pub pass: bool,
}

/// Per-vertex outcome of the weak-balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBalanceVertex {
    pub pass: bool,
    /// A separating functional when the vertex fails.
    pub witness: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBalanceReport {
    pub vertices: Vec<WeakBalanceVertex>,
    pub pass: bool,
}

impl BalancedGraph {
    /// Validates and builds a graph. Segment directions must equal the
    /// primitive vector of the endpoint difference; every vertex must carry
    /// at least one edge.
    pub fn new(n: usize, vertices: Vec<Vec<Rat>>, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedGraph("dimension must be positive".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != n {
                return Err(Error::MalformedGraph(format!(
                    "vertex {i} has dimension {} instead of {n}",
                    v.len()
                )));
            }
        }
        let mut covered = vec![false; vertices.len()];
        for (e, edge) in edges.iter().enumerate() {
            if edge.direction.dim() != n {
                return Err(Error::MalformedGraph(format!(
                    "edge {e} direction has wrong dimension"
                )));
            }
            if edge.weight == 0 {
                return Err(Error::MalformedGraph(format!("edge {e} has zero weight")));
            }
            match edge.kind {
                EdgeKind::Segment { u, v } => {
                    if u >= vertices.len() || v >= vertices.len() {
                        return Err(Error::MalformedGraph(format!(
                            "edge {e} references a missing vertex"
                        )));
                    }
                    if vertices[u] == vertices[v] {
                        return Err(Error::MalformedGraph(format!(
                            "edge {e} endpoints coincide"
                        )));
                    }
                    let delta: Vec<Rat> = vertices[v]
                        .iter()
                        .zip(&vertices[u])
                        .map(|(a, b)| a - b)
                        .collect();
                    let prim = crate::ratio::primitive_integer_vector(&delta)?;
                    if prim != edge.direction.components() {
                        return Err(Error::MalformedGraph(format!(
                            "edge {e} direction {:?} is not the primitive vector of the endpoint difference {prim:?}",
                            edge.direction.components()
                        )));
                    }
                    covered[u] = true;
                    covered[v] = true;
                }
                EdgeKind::Ray { u } => {
                    if u >= vertices.len() {
                        return Err(Error::MalformedGraph(format!(
                            "edge {e} references a missing vertex"
                        )));
                    }
                    covered[u] = true;
                }
            }
        }
        if let Some(i) = covered.iter().position(|&c| !c) {
            return Err(Error::MalformedGraph(format!(
                "vertex {i} is isolated"
            )));
        }
        Ok(Self {
            n,
            vertices,
            edges,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Away-pointing primitive directions of all edges incident on a vertex,
    /// with their edge indices.
    pub fn incident_away(&self, vertex: usize) -> Vec<(usize, Vec<i64>)> {
        let mut out = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            match edge.kind {
                EdgeKind::Segment { u, v } => {
                    if u == vertex {
                        out.push((e, edge.direction.components().to_vec()));
                    }
                    if v == vertex {
                        out.push((e, edge.direction.negated().components().to_vec()));
                    }
                }
                EdgeKind::Ray { u } => {
                    if u == vertex {
                        out.push((e, edge.direction.components().to_vec()));
                    }
                }
            }
        }
        out
    }

    /// Weighted sum of away-pointing directions at each vertex; passes when
    /// every residual vanishes.
    pub fn check_balanced(&self) -> BalanceReport {
        let mut residuals = Vec::with_capacity(self.vertices.len());
        for v in 0..self.vertices.len() {
            let mut acc = vec![0i128; self.n];
            for (e, away) in self.incident_away(v) {
                let w = self.edges[e].weight as i128;
                for (k, &d) in away.iter().enumerate() {
                    acc[k] += w * d as i128;
                }
            }
            residuals.push(
                acc.into_iter()
                    .map(|x| i64::try_from(x).expect("residual overflow"))
                    .collect::<Vec<i64>>(),
            );
        }
        let pass = residuals
            .iter()
            .all(|r| r.iter().all(|&x| x == 0));
        BalanceReport { residuals, pass }
    }

    /// Weak balance at each vertex: the origin must lie in the relative
    /// interior of the hull of the away directions.
    pub fn check_weakly_balanced(&self) -> Result<WeakBalanceReport> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in 0..self.vertices.len() {
            let dirs: Vec<Direction> = self
                .incident_away(v)
                .into_iter()
                .map(|(_, d)| primitive_vector(&d).expect("directions are primitive"))
                .collect();
            let r = relint_contains_origin(&dirs)?;
            vertices.push(WeakBalanceVertex {
                pass: r.contains,
                witness: r.witness,
            });
        }
        let pass = vertices.iter().all(|v| v.pass);
        Ok(WeakBalanceReport { vertices, pass })
    }

    /// Exact location of a point on the graph, when it lies on it.
    pub fn locate(&self, p: &[Rat]) -> Option<Location> {
        if p.len() != self.n {
            return None;
        }
        if let Some(i) = self.vertices.iter().position(|v| v.as_slice() == p) {
            return Some(Location::Vertex(i));
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let base = match edge.kind {
                EdgeKind::Segment { u, .. } | EdgeKind::Ray { u } => &self.vertices[u],
            };
            let diff: Vec<Rat> = p.iter().zip(base).map(|(a, b)| a - b).collect();
            // p = base + λ·dir with the stored primitive direction
            let dir: Vec<Rat> = edge
                .direction
                .components()
                .iter()
                .map(|&k| rat_int(k))
                .collect();
            let len2 = dot_rr(&dir, &dir);
            let lambda = dot_rr(&diff, &dir) / len2.clone();
            let residual: Vec<Rat> = diff
                .iter()
                .zip(&dir)
                .map(|(d, v)| d.clone() - &lambda * v)
                .collect();
            if !residual.iter().all(|x| x.is_zero()) {
                continue;
            }
            if lambda <= Rat::zero() {
                continue;
            }
            match edge.kind {
                EdgeKind::Segment { u, v } => {
                    let chord: Vec<Rat> = self.vertices[v]
                        .iter()
                        .zip(&self.vertices[u])
                        .map(|(a, b)| a - b)
                        .collect();
                    let total = dot_rr(&chord, &dir) / len2;
                    if lambda < total {
                        return Some(Location::EdgeInterior(e, lambda));
                    }
                }
                EdgeKind::Ray { .. } => {
                    return Some(Location::EdgeInterior(e, lambda));
                }
            }
        }
        None
    }

    /// True when every connected component contains at least one ray.
    pub fn every_component_has_ray(&self) -> bool {
        let mut comp: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
            }
            comp[i]
        }
        for edge in &self.edges {
            if let EdgeKind::Segment { u, v } = edge.kind {
                let (ru, rv) = (find(&mut comp, u), find(&mut comp, v));
                comp[ru] = rv;
            }
        }
        let mut has_ray = vec![false; self.vertices.len()];
        for edge in &self.edges {
            if let EdgeKind::Ray { u } = edge.kind {
                let r = find(&mut comp, u);
                has_ray[r] = true;
            }
        }
        (0..self.vertices.len()).all(|i| {
            let r = find(&mut comp, i);
            has_ray[r]
        })
    }

    /// The midpoint of a segment or a point one unit along a ray; used by
    /// membership tests.
    pub fn edge_sample_point(&self, e: usize) -> Vec<Rat> {
        let edge = &self.edges[e];
        match edge.kind {
            EdgeKind::Segment { u, v } => self.vertices[u]
                .iter()
                .zip(&self.vertices[v])
                .map(|(a, b)| (a + b) / rat_int(2))
                .collect(),
            EdgeKind::Ray { u } => self.vertices[u]
                .iter()
                .zip(edge.direction.components())
                .map(|(a, &d)| a + rat_int(d))
                .collect(),
        }
    }
}

/// The standard tropical line graph: one vertex at the origin with rays
/// east, north, and southwest. Used across tests and docs.
pub fn tropical_line_graph() -> BalancedGraph {
    let z = || rat_int(0);
    BalancedGraph::new(
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
            Edge {
                kind: EdgeKind::Ray { u: 0 },
                direction: primitive_vector(&[-1, -1]).unwrap(),
                weight: 1,
            },
        ],
    )
    .unwrap()
}

/// The tropical conic graph dual to the unit square lifted at `(1,1)`:
/// vertices `(0,0)` and `(-1,-1)`, the diagonal segment, and four rays.
pub fn tropical_conic_graph() -> BalancedGraph {
    let r = rat_int;
    BalancedGraph::new(
        2,
        vec![vec![r(0), r(0)], vec![r(-1), r(-1)]],
        vec![
            Edge {
                kind: EdgeKind::Segment { u: 1, v: 0 },
                direction: primitive_vector(&[1, 1]).unwrap(),
                weight: 1,
            },
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
            Edge {
                kind: EdgeKind::Ray { u: 1 },
                direction: primitive_vector(&[-1, 0]).unwrap(),
                weight: 1,
            },
            Edge {
                kind: EdgeKind::Ray { u: 1 },
                direction: primitive_vector(&[0, -1]).unwrap(),
                weight: 1,
            },
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::parse_rat;

    fn star(dirs: &[&[i64]], weights: &[u64]) -> BalancedGraph {
        let n = dirs[0].len();
        let origin = vec![rat_int(0); n];
        let edges = dirs
            .iter()
            .zip(weights)
            .map(|(d, &w)| Edge {
                kind: EdgeKind::Ray { u: 0 },
                direction: primitive_vector(d).unwrap(),
                weight: w,
            })
            .collect();
        BalancedGraph::new(n, vec![origin], edges).unwrap()
    }

    #[test]
    fn balance_examples() {
        let line = tropical_line_graph();
        let r = line.check_balanced();
        assert!(r.pass);
        assert_eq!(r.residuals, vec![vec![0, 0]]);

        let two = star(&[&[1, 0], &[0, 1]], &[1, 1]);
        let r = two.check_balanced();
        assert!(!r.pass);
        assert_eq!(r.residuals, vec![vec![1, 1]]);

        let vertical = star(&[&[0, 1], &[0, -1]], &[2, 2]);
        assert!(vertical.check_balanced().pass);
    }

    #[test]
    fn weak_balance_examples() {
        assert!(tropical_line_graph().check_weakly_balanced().unwrap().pass);

        let two = star(&[&[1, 0], &[0, 1]], &[1, 1]);
        let r = two.check_weakly_balanced().unwrap();
        assert!(!r.pass);
        assert!(r.vertices[0].witness.is_some());

        let three = star(&[&[1, 0], &[-1, 0], &[0, 1]], &[1, 1, 1]);
        let r = three.check_weakly_balanced().unwrap();
        assert!(!r.pass);
        assert_eq!(r.vertices[0].witness.as_deref(), Some(&[0i64, 1][..]));
    }

    #[test]
    fn conic_is_balanced() {
        let conic = tropical_conic_graph();
        assert!(conic.check_balanced().pass);
        assert!(conic.check_weakly_balanced().unwrap().pass);
        assert!(conic.every_component_has_ray());
    }

    #[test]
    fn validation_rejects_bad_graphs() {
        let z = || rat_int(0);
        // wrong segment direction
        let bad = BalancedGraph::new(
            2,
            vec![vec![z(), z()], vec![rat_int(1), rat_int(1)]],
            vec![Edge {
                kind: EdgeKind::Segment { u: 0, v: 1 },
                direction: primitive_vector(&[1, 0]).unwrap(),
                weight: 1,
            }],
        );
        assert!(matches!(bad, Err(Error::MalformedGraph(_))));
        // isolated vertex
        let bad = BalancedGraph::new(2, vec![vec![z(), z()]], vec![]);
        assert!(matches!(bad, Err(Error::MalformedGraph(_))));
    }

    #[test]
    fn locate_points() {
        let conic = tropical_conic_graph();
        assert_eq!(
            conic.locate(&[rat_int(0), rat_int(0)]),
            Some(Location::Vertex(0))
        );
        let half = parse_rat("-1/2").unwrap();
        match conic.locate(&[half.clone(), half]) {
            Some(Location::EdgeInterior(0, _)) => {}
            other => panic!("expected interior of the diagonal, got {other:?}"),
        }
        // on the east ray
        match conic.locate(&[rat_int(3), rat_int(0)]) {
            Some(Location::EdgeInterior(1, l)) => assert_eq!(l, rat_int(3)),
            other => panic!("expected ray interior, got {other:?}"),
        }
        assert_eq!(conic.locate(&[rat_int(5), rat_int(7)]), None);
    }
}
