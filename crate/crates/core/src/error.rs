use thiserror::Error;

use crate::hfunc::HValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has half-integer exponents after normalization (nonzero linking number?)")]
    NonIntegralExponents,
    #[error("polynomial is not symmetric under t -> t^-1")]
    NotSymmetric,
    #[error("no eventually-linear tail within the computed window")]
    TailNotRecognized,
    #[error("invalid torus knot parameters T({p},{q})")]
    InvalidTorusParameters { p: i64, q: i64 },
    #[error("input is not consistent with an L-space link: {0}")]
    NotLSpaceConsistent(HValidationReport),
    #[error("both signs of the Alexander polynomial give valid but different H-functions")]
    AmbiguousSign,
    #[error("Alexander polynomial has odd exponents; linking number is not zero")]
    NonZeroLinking,
    #[error("h(0,0) = 0, the link is the unlink")]
    TrivialLink,
    #[error("component {0} is not an unknot")]
    ComponentNotUnknot(u8),
    #[error("invalid Spin^c label {i} for framing {p}")]
    InvalidSpinc { p: i64, i: i64 },
    #[error("surgery coefficient must be nonzero")]
    ZeroFraming,
    #[error("framing {0} must be positive here")]
    NonPositiveFraming(i64),
    #[error("truncation {b} too small, need b > {min}")]
    TruncationTooSmall { b: i64, min: i64 },
    #[error("torsion contribution unknown: K is not asserted to be an L-space knot")]
    TorsionUnknown,
    #[error("Spin^c label mismatch: {0}")]
    LabelMismatch(String),
    #[error("malformed table: {0}")]
    InvalidTable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
