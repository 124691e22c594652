//! Scalar trait bounds for the numeric kernels.
//!
//! The elimination, simplex, and envelope kernels are written against
//! [`ExactField`]; the `Ord` bound deliberately shuts out IEEE floats, so the
//! kernels can only be instantiated at scalars with exact comparison (the
//! crate uses [`crate::Rat`]). Float kernels take `num_traits::Float`.

use num_traits::{Num, NumAssign, Signed};

/// An exactly ordered field scalar: rationals, or any other exact ordered
/// field with total comparison.
pub trait ExactField: Num + NumAssign + Signed + Ord + Clone {}

impl<T: Num + NumAssign + Signed + Ord + Clone> ExactField for T {}
