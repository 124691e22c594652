//! Exact scalar/vector primitives shared by every other module.
//!
//! Everything here is immutable after construction and pure; all decisions
//! (sign tests, containment, the relative-interior criterion) are exact over
//! rationals. The only floating point lives in [`dist`].

pub mod dist;
pub mod linalg;
pub mod relint;
pub mod simplex;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::ratio::rat_int;
use crate::{Error, Rat, Result};

pub use dist::{distance_point_to_piece, Piece};
pub use relint::{relint_contains_origin, RelintResult};

/// A primitive integer direction: not all zero, gcd of absolute values one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction(Vec<i64>);

impl Direction {
    /// Wraps components that are already primitive.
    pub fn new(components: Vec<i64>) -> Result<Self> {
        let d = primitive_vector(&components)?;
        if d.0 != components {
            return Err(Error::InvalidInput(format!(
                "direction {components:?} is not primitive"
            )));
        }
        Ok(d)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// The opposite direction (also primitive).
    pub fn negated(&self) -> Direction {
        Direction(self.0.iter().map(|x| -x).collect())
    }
}

impl std::ops::Deref for Direction {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

/// Divides an integer vector by the gcd of its absolute values.
///
/// The result is parallel to the input with the same orientation.
pub fn primitive_vector(v: &[i64]) -> Result<Direction> {
    let mut g: i64 = 0;
    for &x in v {
        g = g.gcd(&x);
    }
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(Direction(v.iter().map(|&x| x / g).collect()))
}

/// Integer dot product, accumulated without overflow for the sizes used here.
pub fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x as i128) * (y as i128))
        .sum::<i128>()
        .try_into()
        .expect("integer dot product overflow")
}

/// Dot product of a rational vector with an integer vector.
pub fn dot_ri(w: &[Rat], a: &[i64]) -> Rat {
    debug_assert_eq!(w.len(), a.len());
    let mut acc = Rat::zero();
    for (x, &k) in w.iter().zip(a) {
        if k != 0 {
            acc += x * rat_int(k);
        }
    }
    acc
}

/// Dot product of two rational vectors.
pub fn dot_rr(x: &[Rat], y: &[Rat]) -> Rat {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Rat::zero();
    for (a, b) in x.iter().zip(y) {
        acc += a * b;
    }
    acc
}

fn sub(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Exact squared distance from a rational point to a closed segment.
pub fn dist2_point_to_segment(x: &[Rat], a: &[Rat], b: &[Rat]) -> Result<Rat> {
    let ab = sub(b, a);
    let len2 = dot_rr(&ab, &ab);
    if len2.is_zero() {
        return Err(Error::DegeneratePiece("segment endpoints coincide"));
    }
    let ax = sub(x, a);
    let mut t = dot_rr(&ax, &ab) / len2;
    if t < Rat::zero() {
        t = Rat::zero();
    } else if t > Rat::one() {
        t = Rat::one();
    }
    let diff: Vec<Rat> = ax
        .iter()
        .zip(&ab)
        .map(|(u, v)| u.clone() - &t * v)
        .collect();
    Ok(dot_rr(&diff, &diff))
}

/// Exact squared distance from a rational point to a closed ray.
pub fn dist2_point_to_ray(x: &[Rat], base: &[Rat], dir: &[i64]) -> Result<Rat> {
    let d: Vec<Rat> = dir.iter().map(|&k| rat_int(k)).collect();
    let len2 = dot_rr(&d, &d);
    if len2.is_zero() {
        return Err(Error::DegeneratePiece("ray direction is zero"));
    }
    let bx = sub(x, base);
    let mut t = dot_rr(&bx, &d) / len2;
    if t < Rat::zero() {
        t = Rat::zero();
    }
    let diff: Vec<Rat> = bx.iter().zip(&d).map(|(u, v)| u.clone() - &t * v).collect();
    Ok(dot_rr(&diff, &diff))
}

use num_traits::One;
