//! Float distance kernels, generic over the float width.

use num_traits::Float;

use crate::{Error, Result};

/// A one-dimensional polyhedral piece with float coordinates.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece<F> {
    Segment { a: Vec<F>, b: Vec<F> },
    Ray { base: Vec<F>, dir: Vec<F> },
}

fn dot<F: Float>(x: &[F], y: &[F]) -> F {
    x.iter()
        .zip(y)
        .fold(F::zero(), |acc, (&a, &b)| acc + a * b)
}

/// Euclidean distance from `x` to the closed piece, by orthogonal projection
/// clamped to the piece's parameter range.
pub fn distance_point_to_piece<F: Float>(x: &[F], piece: &Piece<F>) -> Result<F> {
    let (base, dir, clamp_upper) = match piece {
        Piece::Segment { a, b } => {
            let dir: Vec<F> = a.iter().zip(b).map(|(&p, &q)| q - p).collect();
            (a, dir, true)
        }
        Piece::Ray { base, dir } => (base, dir.clone(), false),
    };
    let len2 = dot(&dir, &dir);
    if len2 == F::zero() {
        return Err(Error::DegeneratePiece(match piece {
            Piece::Segment { .. } => "segment endpoints coincide",
            Piece::Ray { .. } => "ray direction is zero",
        }));
    }
    let off: Vec<F> = x.iter().zip(base).map(|(&p, &q)| p - q).collect();
    let mut t = dot(&off, &dir) / len2;
    if t < F::zero() {
        t = F::zero();
    }
    if clamp_upper && t > F::one() {
        t = F::one();
    }
    let d2 = off
        .iter()
        .zip(&dir)
        .fold(F::zero(), |acc, (&o, &d)| {
            let r = o - t * d;
            acc + r * r
        });
    Ok(d2.sqrt())
}

/// Distance from `x` to the nearest of several pieces.
pub fn distance_point_to_pieces<F: Float>(x: &[F], pieces: &[Piece<F>]) -> Result<F> {
    let mut best = F::infinity();
    for p in pieces {
        let d = distance_point_to_piece(x, p)?;
        if d < best {
            best = d;
        }
    }
    Ok(best)
}
