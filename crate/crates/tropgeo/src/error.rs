//! Crate-wide error type.

use serde::Serialize;

/// Degeneracy data explaining why a hyperplane fails to be transverse.
///
/// A hyperplane can be degenerate in two ways at once (a vertex on the
/// hyperplane and a tangent edge inside it); both lists are reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degeneracy {
    /// Vertices lying exactly on the hyperplane.
    pub vertices_on: Vec<usize>,
    /// Edges with `w·v_e = 0` that meet the hyperplane.
    pub tangent_edges: Vec<usize>,
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vertices on hyperplane: {:?}, tangent edges: {:?}",
            self.vertices_on, self.tangent_edges
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("direction list is empty")]
    EmptyDirections,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate piece: {0}")]
    DegeneratePiece(&'static str),
    #[error("operation needs at least two terms")]
    TooFewTerms,
    #[error("exponent {0:?} is not in the support")]
    UnknownExponent(Vec<i64>),
    #[error("dimension {0} exceeds supported limit {1}")]
    DimensionTooLarge(usize, usize),
    #[error("support has {0} terms, above the supported limit {1}")]
    TooManyTerms(usize, usize),
    #[error("line direction is zero")]
    ZeroDirection,
    #[error("line lies inside the hypersurface: terms {0:?} and {1:?} tie on a whole interval")]
    LineInsideHypersurface(Vec<i64>, Vec<i64>),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("point does not lie on the graph")]
    PointNotOnGraph,
    #[error("no incident edge ascends along the functional at the start point")]
    NoAscendingEdge,
    #[error("graph is not weakly balanced at vertex {0}")]
    NotWeaklyBalanced(usize),
    #[error("hyperplane is not transverse to the curve ({0})")]
    NotTransverse(Degeneracy),
    #[error("root finding diverged: residual {residual:e} above tolerance {tol:e}")]
    RootFindingDiverged { residual: f64, tol: f64 },
    #[error("degenerate family: {0}")]
    DegenerateFamily(&'static str),
    #[error("no sample points inside the window")]
    EmptySample,
    #[error("target does not meet the margin-shrunk window")]
    EmptyTarget,
    #[error("compact set meets the tropical limit")]
    ZMeetsTropicalLimit,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
