use alloc::vec::Vec;
use core::fmt;

use crate::params::Violation;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An eigenvalue has zero real part.
    NonHyperbolic,
    /// A real eigenvalue pair that must be split is not.
    EqualEigenvalues,
    /// A spiral ratio α or β would vanish.
    ZeroRatio,
    /// The transition map has zero determinant.
    Singular,
    /// α or β is zero where a nonzero value is required.
    ZeroArgument,
    /// α = β for a complex-complex pair.
    NonGeneric,
    /// θ₀ is a multiple of π/2, so s± is undefined.
    DegenerateAngle,
    /// Frame angles coincide where they must be distinct.
    FrameDegenerate,
    /// The pair is in (TT): no tangency lines, no modulus.
    InTt,
    ZeroAlpha,
    /// A ray lies on an invariant axis of the real foliation.
    RayOnInvariantManifold,
    /// The two rays do not lie in one open quadrant of the real foliation.
    RaysNotInOneQuadrant,
    /// The angular travel does not connect the two rays.
    InconsistentTravel,
    /// The tangency lines do not determine a sector as required.
    FrameConstructionFailed,
    /// The integrated leaf never reached the target ray.
    NoCrossing,
    /// Sign-change counting met a near-zero minimum without a sign change.
    InconclusiveNearBoundary,
    /// A classification lacks a field required by the decision table.
    IncompatibleClassifications,
    /// The transition map is needed for a (2-1) connection.
    MissingTransition,
    /// The frame angles are needed for a (2-1)ℝℝ connection.
    MissingFrames,
    /// Structurally invalid input.
    InvalidSpec(&'static str),
    /// An argument is outside the domain of the operation.
    Domain(&'static str),
    GenericityViolation(Vec<Violation>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonHyperbolic => f.write_str("eigenvalue with zero real part"),
            Error::EqualEigenvalues => f.write_str("real eigenvalue pair is not split"),
            Error::ZeroRatio => f.write_str("spiral ratio would be zero"),
            Error::Singular => f.write_str("transition map is singular"),
            Error::ZeroArgument => f.write_str("argument must be nonzero"),
            Error::NonGeneric => f.write_str("alpha equals beta"),
            Error::DegenerateAngle => f.write_str("theta0 is a multiple of pi/2"),
            Error::FrameDegenerate => f.write_str("frame angles coincide"),
            Error::InTt => f.write_str("pair is in the transverse class (TT)"),
            Error::ZeroAlpha => f.write_str("alpha must be nonzero"),
            Error::RayOnInvariantManifold => f.write_str("ray lies on an invariant axis"),
            Error::RaysNotInOneQuadrant => f.write_str("rays are not in one open quadrant"),
            Error::InconsistentTravel => f.write_str("angular travel does not join the rays"),
            Error::FrameConstructionFailed => f.write_str("could not construct the sector frame"),
            Error::NoCrossing => f.write_str("leaf did not reach the target ray"),
            Error::InconclusiveNearBoundary => f.write_str("tangency count inconclusive near a boundary"),
            Error::IncompatibleClassifications => f.write_str("classification lacks a required invariant"),
            Error::MissingTransition => f.write_str("(2-1) connection needs a transition map"),
            Error::MissingFrames => f.write_str("(2-1)RR connection needs frame angles"),
            Error::InvalidSpec(why) => write!(f, "invalid connection spec: {why}"),
            Error::Domain(why) => write!(f, "argument out of domain: {why}"),
            Error::GenericityViolation(v) => {
                f.write_str("genericity violated:")?;
                for x in v {
                    write!(f, " {x}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for Error {}
