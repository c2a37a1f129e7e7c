//! Holonomies by integrating leaves from Δ to Δ′, and the moduli built from them.

use crate::error::{Error, Result};
use crate::foliation::{cross, LinearField};
use crate::holonomy::HolonomyRatio;
use crate::linalg::{det2, dot, norm, scale, signed_angle, unit, Mat2, Vec2};
use crate::math::{abs, atan2, ln, FRAC_PI_2, PI, TAU};

use super::ode::{shoot, Tolerances};
use super::sampling::tangency_directions;

/// Samples used to locate tangency lines for the shooting moduli.
const LINE_SAMPLES: usize = 4096;

/// Follow the leaf of `field` through `start` to the ray at angle `target`,
/// sweeping the angle of less than π between the two rays.
pub fn holonomy_ode_oracle(field: &LinearField, start: Vec2, target: f64, tol: &Tolerances) -> Result<HolonomyRatio> {
    let r0 = norm(start);
    if !(r0 > 0.0) || !r0.is_finite() {
        return Err(Error::Domain("start point must be a finite nonzero vector"));
    }
    let u0 = scale(start, 1.0 / r0);
    let ut = unit(target);
    let travel = signed_angle(u0, ut);
    if abs(travel) <= tol.crossing {
        return HolonomyRatio::from_log(0.0);
    }
    let side = if travel > 0.0 { 1.0 } else { -1.0 };
    let omega = field.angular_velocity(u0);
    if omega == 0.0 {
        return Err(Error::NoCrossing);
    }
    let time = side * omega.signum();
    let f = |y: Vec2| scale(field.eval(y), time);
    let event = |y: Vec2| side * det2(ut, y) / norm(y);
    let inside = |y: Vec2| side * det2(u0, y) >= -1e-9 * norm(y) && dot(y, u0) + dot(y, ut) > -norm(y);
    let end = shoot(f, start, event, inside, tol)?;
    HolonomyRatio::from_log(ln(norm(end) / r0))
}

/// Leaf of `g` followed backwards from the end of `f`'s leaf: the ratio of `g⁻¹∘f`.
pub fn composed_oracle(
    f: &LinearField,
    g: &LinearField,
    delta: f64,
    delta_prime: f64,
    tol: &Tolerances,
) -> Result<HolonomyRatio> {
    let start = unit(delta);
    let fr = holonomy_ode_oracle(f, start, delta_prime, tol)?;
    let mid = scale(unit(delta_prime), fr.value());
    let back = holonomy_ode_oracle(g, mid, delta, tol)?;
    HolonomyRatio::from_log(fr.log + back.log)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleModulus {
    pub value: f64,
    /// Ray angles of Δ and Δ′ as found by sampling.
    pub delta: f64,
    pub delta_prime: f64,
    pub f: HolonomyRatio,
    pub g: HolonomyRatio,
}

fn two_lines(f: &LinearField, g: &LinearField) -> Result<(f64, f64)> {
    let lines = tangency_directions(f, g, LINE_SAMPLES)?;
    match lines.as_slice() {
        [a, b] => Ok((*a, *b)),
        [] => Err(Error::InTt),
        _ => Err(Error::FrameConstructionFailed),
    }
}

/// Ψ from the fields `X_α` and `(x − βy/λ, λβx + y)` by sampling and shooting.
pub fn oracle_psi(alpha: f64, beta: f64, lambda: f64, tol: &Tolerances) -> Result<OracleModulus> {
    let f = LinearField::logarithmic(alpha);
    let g = LinearField::new(Mat2::new(1.0, -beta / lambda, lambda * beta, 1.0));
    let (a, b) = two_lines(&f, &g)?;
    let want = -(beta - alpha).signum();
    let (delta, delta_prime) = if cross(&f, &g, unit((a + b) / 2.0)) * want > 0.0 { (a, b) } else { (b, a + PI) };
    let fr = holonomy_ode_oracle(&f, unit(delta), delta_prime, tol)?;
    let gr = holonomy_ode_oracle(&g, unit(delta), delta_prime, tol)?;
    Ok(OracleModulus { value: alpha / TAU * (fr.log - gr.log), delta, delta_prime, f: fr, g: gr })
}

/// Υ for a real field `real` and a spiral field `spiral` of ratio `beta`,
/// with Δ the first line met by a leaf of `real` leaving the origin.
pub fn oracle_upsilon_fields(
    real: &LinearField,
    spiral: &LinearField,
    beta: f64,
    tol: &Tolerances,
) -> Result<OracleModulus> {
    let (a, b) = two_lines(real, spiral)?;
    if (a < FRAC_PI_2) != (b < FRAC_PI_2) {
        return Err(Error::FrameConstructionFailed);
    }
    // forward time moves leaves of the real node away from the origin
    let turning = real.angular_velocity(unit((a + b) / 2.0));
    let (delta, delta_prime) = if turning > 0.0 { (a, b) } else { (b, a) };
    let fr = holonomy_ode_oracle(spiral, unit(delta), delta_prime, tol)?;
    let gr = holonomy_ode_oracle(real, unit(delta), delta_prime, tol)?;
    Ok(OracleModulus { value: beta / TAU * (fr.log - gr.log), delta, delta_prime, f: fr, g: gr })
}

/// Υ(β, μ, s, θ₀) with `λ = s + √(s² + 1)` passed directly.
pub fn oracle_upsilon(beta: f64, mu: f64, lambda: f64, theta0: f64, tol: &Tolerances) -> Result<OracleModulus> {
    let push = Mat2::rotation(-theta0).mul(&Mat2::diag(1.0, lambda));
    let spiral = LinearField::logarithmic(beta).pushed(&push);
    oracle_upsilon_fields(&LinearField::new(Mat2::diag(1.0, mu)), &spiral, beta, tol)
}

/// Υ of the complex-real pair straight from its own fields.
pub fn oracle_upsilon_cr(alpha: f64, gamma: f64, lambda: f64, theta1: f64, tol: &Tolerances) -> Result<OracleModulus> {
    let push = Mat2::rotation(theta1).mul(&Mat2::diag(1.0, 1.0 / lambda));
    let spiral = LinearField::logarithmic(alpha).pushed(&push);
    oracle_upsilon_fields(&LinearField::new(Mat2::diag(1.0, gamma)), &spiral, alpha, tol)
}

/// Angle of a point, for building start points on rays.
pub fn ray_angle(p: Vec2) -> f64 {
    atan2(p[1], p[0])
}
