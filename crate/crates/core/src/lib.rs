//! A twisted-group-algebra kernel for the dyadic (XOR) group.
//!
//! A sign function sgn: G×G → {−1,+1} turns the group algebra of G into a
//! twisted algebra with basis product i_p i_q = sgn(p,q) i_{pq}. Over the
//! XOR group, one choice of sign yields the Cayley-Dickson tower
//! (ℂ, ℍ, 𝕆, sedenions, …) and another yields the Clifford algebra Cl(n,0);
//! this crate implements both sign recursions, validates their algebraic
//! identities against independent brute-force oracles, and provides the
//! sequence-space experiments around products on ℓ².
//!
//! Core math is generic over the scalar type through [`scalar::Scalar`]:
//! `f32`/`f64` for numerical work and `i64` for the exact integer paths the
//! identity tests rely on (twist values are ±1, so integer inputs give
//! integer outputs).
//!
//! ```
//! use twistalg::{AlgebraContext, Element, Twist};
//!
//! // i9 · i11 = −i2 in the sedenions.
//! let ctx = AlgebraContext::new(Twist::CayleyDickson, 4)?;
//! let product = ctx.mul(
//!     &Element::<i64>::basis(4, 9)?,
//!     &Element::<i64>::basis(4, 11)?,
//! )?;
//! assert_eq!(product.to_string(), "-i2");
//! # Ok::<(), twistalg::Error>(())
//! ```

pub mod algebra;
pub mod cd_oracle;
pub mod clifford;
pub mod dyadic;
mod error;
pub mod experiments;
pub mod group;
pub mod scalar;
pub mod twist;

pub use algebra::{convolution, AlgebraContext, BasisProductTable, Element, SignMatrix};
pub use dyadic::{GroupElement, Sign};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use scalar::{Real, Scalar};
pub use twist::{PropertyReport, Twist, TwistProperty, TwistTable};

/// Single-precision element.
pub type Element32 = Element<f32>;
/// Double-precision element, the default numerical representation.
pub type Element64 = Element<f64>;
/// Exact integer element; closed under products since twist values are ±1.
pub type ElementInt = Element<i64>;
