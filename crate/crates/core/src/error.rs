//! Crate-wide error type.

use crate::dyadic::GroupElement;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension exponent {n} exceeds the cap of {max} (tables grow as 4^n)")]
    DimensionTooLarge { n: u32, max: u32 },

    #[error("group order {order} exceeds the cap of {max} for exhaustive scans")]
    GroupTooLarge { order: usize, max: usize },

    #[error("not a group: {reason}")]
    NotAGroup { reason: String },

    #[error("operands are defined on different groups")]
    GroupMismatch,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("twist is not invertive: sgn(p,p⁻¹) ≠ sgn(p⁻¹,p) at p = {p}")]
    TwistNotInvertive { p: GroupElement },

    #[error("twist is not proper; first failing pair (p,q) = ({p},{q})")]
    TwistNotProper { p: GroupElement, q: GroupElement },

    #[error("twist is not associative; first failing triple (p,q,r) = ({p},{q},{r})")]
    TwistNotAssociative {
        p: GroupElement,
        q: GroupElement,
        r: GroupElement,
    },

    #[error("operation requires the {required} twist, context uses {actual}")]
    UnsupportedTwist {
        required: &'static str,
        actual: &'static str,
    },

    #[error("cannot invert the zero element")]
    ZeroElement,

    #[error("pair trees have different depths: {left} vs {right}")]
    DepthMismatch { left: u32, right: u32 },

    #[error("basis product i_{p} i_{q} did not reduce to a signed basis vector")]
    NotSignedBasis { p: GroupElement, q: GroupElement },

    #[error("malformed e-notation `{text}`: {reason}")]
    MalformedENotation { text: String, reason: String },

    #[error("malformed element `{text}`: {reason}")]
    MalformedElement { text: String, reason: String },

    #[error("non-finite coefficient at index {index}")]
    NonFiniteCoefficient { index: usize },

    #[error("malformed csv: {reason}")]
    MalformedCsv { reason: String },

    #[error("malformed json: {0}")]
    MalformedJson(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
