//! Numerical checks that work from the planar vector fields alone.
//!
//! Nothing here calls the closed forms of [`crate::tangency`] or
//! [`crate::holonomy`]: tangency lines are located by sampling the cross
//! determinant, holonomies by integrating leaves.

pub mod leaves;
pub mod ode;
pub mod rr;
pub mod sampling;
pub mod shooting;

pub use ode::Tolerances;
pub use sampling::{count_sign_changes, count_tangency_directions_oracle, tangency_directions, SignChanges};
pub use shooting::{holonomy_ode_oracle, oracle_psi, oracle_upsilon, OracleModulus};
