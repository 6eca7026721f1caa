//! Scalar abstraction: the algebra is generic over the coefficient type.
//!
//! Twist values are ±1, so products of integer elements stay integral; the
//! `i64` instantiation gives an exact arithmetic path used heavily by the
//! identity tests, while `f32`/`f64` cover numerical work.

use std::fmt::{Debug, Display};

use num_traits::{Float, NumAssign, Signed};

use crate::dyadic::Sign;

/// Coefficient type of a twisted group algebra element.
pub trait Scalar:
    Copy + Signed + NumAssign + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// True unless the value is NaN or infinite (always true for integers).
    fn is_finite_scalar(self) -> bool {
        true
    }

    /// Equality under the crate's comparison policy: exact for integer
    /// scalars, relative with a small absolute floor for floats.
    fn close_to(self, other: Self) -> bool {
        self == other
    }

    /// Multiply by a twist sign (−1 or +1).
    #[inline]
    fn apply_sign(self, s: Sign) -> Self {
        if s < 0 {
            -self
        } else {
            self
        }
    }
}

impl Scalar for i32 {}
impl Scalar for i64 {}

impl Scalar for f32 {
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }

    // f32 has ~7 significant digits; use a correspondingly looser policy.
    fn close_to(self, other: Self) -> bool {
        let diff = (self - other).abs();
        diff <= 1e-6 || diff <= 1e-5 * self.abs().max(other.abs())
    }
}

impl Scalar for f64 {
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }

    // Relative 1e-9 with absolute floor 1e-12: products are degree-2 with
    // unit-magnitude signs, so error growth is benign at desk scale.
    fn close_to(self, other: Self) -> bool {
        let diff = (self - other).abs();
        diff <= 1e-12 || diff <= 1e-9 * self.abs().max(other.abs())
    }
}

/// Floating-point scalars, for operations that need square roots or division.
pub trait Real: Scalar + Float {
    fn from_f64(v: f64) -> Self {
        num_traits::cast(v).expect("f64 fits in any Real")
    }

    fn to_f64(self) -> f64 {
        num_traits::cast(self).expect("Real fits in f64")
    }
}

impl<T: Scalar + Float> Real for T {}
