//! Monotone unbounded paths in weakly balanced graphs.
//!
//! At every vertex of a weakly balanced graph with an incident edge not
//! annihilated by the functional, some incident edge strictly ascends; the
//! greedy walk below follows the steepest such edge (ties broken by the
//! lexicographically largest primitive direction) and must reach a ray in at
//! most `|V|` steps, because the functional strictly increases from vertex
//! to vertex.

use super::{BalancedGraph, EdgeKind, Location};
use crate::geom::{dot_ii, dot_ri};
use crate::{Error, Rat, Result};

/// One traversal step: an edge, walked along (`forward`) or against its
/// stored direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub edge: usize,
    pub forward: bool,
}

/// A path along which a fixed integer functional strictly increases without
/// bound, ending in a ray.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonePath {
    pub functional: Vec<i64>,
    pub start: Vec<Rat>,
    pub steps: Vec<PathStep>,
    /// Vertices visited after the start point, in order. Empty when the path
    /// immediately escapes along a ray.
    pub vertex_trail: Vec<usize>,
}

impl MonotonePath {
    /// The edge index of the terminal ray.
    pub fn terminal_ray(&self) -> usize {
        self.steps.last().expect("paths are nonempty").edge
    }

    /// Oriented direction of a step.
    fn step_direction(g: &BalancedGraph, step: &PathStep) -> Vec<i64> {
        let d = &g.edges()[step.edge].direction;
        if step.forward {
            d.components().to_vec()
        } else {
            d.negated().components().to_vec()
        }
    }

    /// Checks every type invariant against the underlying graph: steps chain
    /// through shared vertices, the functional strictly increases along the
    /// vertex trail, every step ascends, and the final step is a ray with
    /// positive pairing.
    pub fn verify(&self, g: &BalancedGraph) -> Result<()> {
        let fail = |msg: String| Err(Error::MalformedGraph(msg));
        if self.steps.is_empty() {
            return fail("path has no steps".into());
        }
        for step in &self.steps {
            let d = Self::step_direction(g, step);
            if dot_ii(&self.functional, &d) <= 0 {
                return fail(format!("step over edge {} does not ascend", step.edge));
            }
        }
        let last = self.steps.last().unwrap();
        match g.edges()[last.edge].kind {
            EdgeKind::Ray { .. } => {
                if !last.forward {
                    return fail("terminal ray is traversed toward its base".into());
                }
            }
            EdgeKind::Segment { .. } => {
                return fail("path does not end in a ray".into());
            }
        }
        // chain consistency: step k ends where step k+1 begins
        if self.vertex_trail.len() != self.steps.len() - 1 {
            return fail(format!(
                "trail length {} does not match {} steps",
                self.vertex_trail.len(),
                self.steps.len()
            ));
        }
        for (k, &vtx) in self.vertex_trail.iter().enumerate() {
            let arriving = &self.steps[k];
            let arrive_at = match g.edges()[arriving.edge].kind {
                EdgeKind::Segment { u, v } => {
                    if arriving.forward {
                        v
                    } else {
                        u
                    }
                }
                EdgeKind::Ray { u } => u, // backward over a ray lands at its base
            };
            if arrive_at != vtx {
                return fail(format!("step {k} does not arrive at vertex {vtx}"));
            }
            let leaving = &self.steps[k + 1];
            let leave_from = match g.edges()[leaving.edge].kind {
                EdgeKind::Segment { u, v } => {
                    if leaving.forward {
                        u
                    } else {
                        v
                    }
                }
                EdgeKind::Ray { u } => u,
            };
            if leave_from != vtx {
                return fail(format!("step {} does not leave from vertex {vtx}", k + 1));
            }
        }
        // strict increase of the functional over start then trail
        let mut prev = dot_ri(&self.start, &self.functional);
        for &vtx in &self.vertex_trail {
            let val = dot_ri(&g.vertices()[vtx], &self.functional);
            if val <= prev {
                return fail(format!("functional does not increase at vertex {vtx}"));
            }
            prev = val;
        }
        if self.vertex_trail.len() > g.vertices().len() {
            return fail("path visits more vertices than the graph has".into());
        }
        Ok(())
    }
}

/// Greedy choice among ascending away-directions: maximal pairing, then
/// lexicographically largest direction.
fn best_ascending(
    candidates: &[(usize, Vec<i64>)],
    w: &[i64],
) -> Option<(usize, Vec<i64>)> {
    candidates
        .iter()
        .filter(|(_, d)| dot_ii(w, d) > 0)
        .max_by(|(_, a), (_, b)| dot_ii(w, a).cmp(&dot_ii(w, b)).then(a.cmp(b)))
        .cloned()
}

/// Builds the monotone unbounded path from `p` ascending the functional `w`.
///
/// Preconditions are enforced: the graph must be weakly balanced, `p` must
/// lie on the graph, and some edge at `p` must pair nontrivially with `w`.
pub fn monotone_unbounded_path(
    g: &BalancedGraph,
    w: &[i64],
    p: &[Rat],
) -> Result<MonotonePath> {
    if w.len() != g.dimension() {
        return Err(Error::DimensionMismatch {
            expected: g.dimension(),
            got: w.len(),
        });
    }
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let weak = g.check_weakly_balanced()?;
    if let Some(v) = weak.vertices.iter().position(|x| !x.pass) {
        return Err(Error::NotWeaklyBalanced(v));
    }
    let location = g.locate(p).ok_or(Error::PointNotOnGraph)?;

    let mut steps: Vec<PathStep> = Vec::new();
    let mut trail: Vec<usize> = Vec::new();

    // Resolve the first move; a ray taken forward terminates immediately.
    let mut current: Option<usize> = match location {
        Location::Vertex(v) => Some(v),
        Location::EdgeInterior(e, _) => {
            let edge = &g.edges()[e];
            let d = edge.direction.components();
            let pairing = dot_ii(w, d);
            if pairing == 0 {
                return Err(Error::NoAscendingEdge);
            }
            let forward = pairing > 0;
            steps.push(PathStep { edge: e, forward });
            match edge.kind {
                EdgeKind::Segment { u, v } => Some(if forward { v } else { u }),
                EdgeKind::Ray { u } => {
                    if forward {
                        None
                    } else {
                        Some(u)
                    }
                }
            }
        }
    };
    if let Some(v) = current {
        if !steps.is_empty() {
            trail.push(v);
        }
    }

    let mut visited = vec![false; g.vertices().len()];
    let mut first_vertex = steps.is_empty();
    while let Some(v) = current {
        assert!(!visited[v], "monotone path revisited vertex {v}");
        visited[v] = true;
        let candidates = g.incident_away(v);
        let Some((e, d)) = best_ascending(&candidates, w) else {
            if first_vertex {
                // at the start vertex nothing ascends: either everything is
                // annihilated (precondition violation) or weak balance would
                // have produced an ascending edge
                return Err(Error::NoAscendingEdge);
            }
            unreachable!("weak balance guarantees an ascending edge");
        };
        first_vertex = false;
        let edge = &g.edges()[e];
        let forward = edge.direction.components() == d.as_slice();
        steps.push(PathStep { edge: e, forward });
        current = match edge.kind {
            EdgeKind::Segment { u, v: other } => {
                let next = if forward { other } else { u };
                trail.push(next);
                Some(next)
            }
            EdgeKind::Ray { .. } => None,
        };
    }

    let path = MonotonePath {
        functional: w.to_vec(),
        start: p.to_vec(),
        steps,
        vertex_trail: trail,
    };
    debug_assert!(path.verify(g).is_ok());
    Ok(path)
}
