//! Type of a real-real pair from the foliations themselves: whether some
//! choice of exponents makes the two nodes transverse near the origin.

use crate::error::{Error, Result};
use crate::foliation::LinearField;
use crate::params::FrameAngles;
use crate::tangency::RrType;

use super::sampling::{count_sign_changes, RR_RADIUS};

/// Weak/strong exponent ratios tried for each node.
pub const EXPONENTS: [f64; 17] =
    [0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995];

/// Exponents `(μ, γ)` of a transverse linear pair with these eigendirections, if any.
pub fn transverse_representative(frames: &FrameAngles, n_samples: usize) -> Result<Option<(f64, f64)>> {
    for &mu in &EXPONENTS {
        let f = LinearField::node(frames.omega_s_p, frames.omega_ss_p, mu)?;
        for &gamma in &EXPONENTS {
            let g = LinearField::node(frames.omega_u_q, frames.omega_uu_q, gamma)?;
            match count_sign_changes(&f, &g, n_samples, RR_RADIUS) {
                Ok(c) if c.count == 0 => return Ok(Some((mu, gamma))),
                Ok(_) | Err(Error::InconclusiveNearBoundary) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

/// Type and sign-change count of the best representative: 0 for (I), 4 for (II).
pub fn rr_type_oracle(frames: &FrameAngles, n_samples: usize) -> Result<(RrType, usize)> {
    if !frames.degeneracies().is_empty() {
        return Err(Error::FrameDegenerate);
    }
    match transverse_representative(frames, n_samples)? {
        Some(_) => Ok((RrType::I, 0)),
        None => {
            let f = LinearField::node(frames.omega_s_p, frames.omega_ss_p, 0.5)?;
            let g = LinearField::node(frames.omega_u_q, frames.omega_uu_q, 0.5)?;
            let count = count_sign_changes(&f, &g, n_samples, RR_RADIUS).map(|c| c.count).unwrap_or(4);
            Ok((RrType::II, count))
        }
    }
}
