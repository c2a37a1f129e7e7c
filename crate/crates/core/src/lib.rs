//! Topological invariants of heteroclinic saddle connections in 3D.
//!
//! The crate works from the linear data of a connection Γ = W^u(p) ∩ W^s(q):
//! the eigenvalues of both saddles, the differential of the transition map
//! between the two cross-sections and, for the real-real case, the traces of
//! the invariant planes on the section. From this it computes the subset tag,
//! membership in the transverse class (TT), the type (I)/(II), the moduli Ψ
//! and Υ, and decides topological equivalence of two connections.
//!
//! Every closed form has a numerical counterpart in [`oracle`] that works from
//! the planar vector fields directly.
//!
//! Angle conventions: ℝP(1) data lives in `[0, π)`; the normal-form rotations
//! `theta0`, `theta1` of [`params::NormalizedParams`] are clockwise angles in
//! `(−π, π]`, while [`params::factor_transition`] reports counter-clockwise ones.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod equivalence;
pub mod error;
pub mod foliation;
pub mod holonomy;
pub mod linalg;
pub mod math;
pub mod oracle;
pub mod params;
pub mod quadratic;
pub mod tangency;

pub use equivalence::{classify, equivalent, Classification, EquivalenceVerdict, Rule, Verdict};
pub use error::{Error, Result};
pub use params::{
    factor_transition, morse_subset, normalize, validate_genericity, ConnectionSpec, EigenBlock, FrameAngles,
    NormalizedParams, SaddleData, Subset, TransitionMap, Violation,
};
pub use tangency::{RrType, TangencyLocus, TtVerdict};

/// Relative band inside which a (TT) threshold comparison is reported as a boundary case.
pub const TOL_BOUNDARY: f64 = 1e-9;
