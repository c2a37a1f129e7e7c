//! Tangency analysis of the one-complex pairs and the type of real-real pairs.
//!
//! For the real-complex pair the discriminant is a quadratic in the stretch
//! `S = λ − 1/λ = 2s`; [`s_bounds`] and the branch bound of [`is_tt_rc`] are
//! values of `S`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::math::{abs, close, cos, line_distance, sin, sqrt, wrap, wrap_line, FRAC_PI_2, PI};
use crate::params::{t_s, FrameAngles};
use crate::quadratic::{double_line, root_lines};
use crate::TOL_BOUNDARY;

/// `|sin θ₀·cos θ₀|` below this counts as `θ₀ = kπ/2`.
pub const ANGLE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TtVerdict {
    pub in_tt: bool,
    /// The deciding inequality holds with equality up to [`TOL_BOUNDARY`].
    pub boundary: bool,
    /// Discriminant at the evaluated parameters.
    pub witness: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocusKind {
    None,
    Double,
    Pair,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TangencyLocus {
    pub kind: LocusKind,
    /// Directions in `[0, π)`, increasing.
    pub angles: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RrType {
    I,
    II,
}

impl fmt::Display for RrType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RrType::I => "I",
            RrType::II => "II",
        })
    }
}

fn nonzero(x: f64) -> Result<f64> {
    if x == 0.0 {
        Err(Error::ZeroArgument)
    } else if !x.is_finite() {
        Err(Error::Domain("argument must be finite"))
    } else {
        Ok(x)
    }
}

/// Threshold on `t` below which a complex-complex pair is transverse.
pub fn psi(alpha: f64, beta: f64) -> Result<f64> {
    let ab = nonzero(alpha)? * nonzero(beta)?;
    let root = sqrt((alpha * alpha + 1.0) * (beta * beta + 1.0));
    Ok(if ab > 0.0 {
        // (√P − 1)/|αβ| without cancellation
        (alpha * alpha + beta * beta + ab * ab) / (ab * (root + 1.0))
    } else {
        (root + 1.0) / abs(ab)
    })
}

/// `Δ(t) = 4(α²β²t² + 2αβt − (α² + β² + α²β²))`, the discriminant of [`cc_quadratic`].
pub fn cc_discriminant(alpha: f64, beta: f64, t: f64) -> f64 {
    let ab = alpha * beta;
    4.0 * (ab * ab * t * t + 2.0 * ab * t - (alpha * alpha + beta * beta + ab * ab))
}

/// Coefficients `[a, b, c]` of `det(X_α, X_β^λ)` on the line `y = 1`, up to sign.
pub fn cc_quadratic(alpha: f64, beta: f64, lambda: f64) -> [f64; 3] {
    [alpha - lambda * beta, alpha * beta * (lambda - 1.0 / lambda), alpha - beta / lambda]
}

pub fn is_tt_cc(alpha: f64, beta: f64, t: f64) -> Result<TtVerdict> {
    let psi = psi(alpha, beta)?;
    if close(alpha, beta, 1e-12) {
        return Err(Error::NonGeneric);
    }
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::Domain("t must be at least 1"));
    }
    let boundary = abs(t - psi) <= TOL_BOUNDARY * psi;
    Ok(TtVerdict { in_tt: t <= psi || boundary, boundary, witness: cc_discriminant(alpha, beta, t) })
}

pub fn tangency_lines_cc(alpha: f64, beta: f64, lambda: f64) -> Result<TangencyLocus> {
    if !(lambda > 0.0) {
        return Err(Error::Domain("lambda must be positive"));
    }
    let (t, _) = t_s(if lambda >= 1.0 { lambda } else { 1.0 / lambda });
    let verdict = is_tt_cc(alpha, beta, t)?;
    let [a, b, c] = cc_quadratic(alpha, beta, lambda);
    Ok(locus(&verdict, a, b, c))
}

fn locus(verdict: &TtVerdict, a: f64, b: f64, c: f64) -> TangencyLocus {
    if verdict.boundary {
        return TangencyLocus { kind: LocusKind::Double, angles: alloc::vec![double_line(a, b, c)] };
    }
    if verdict.in_tt {
        return TangencyLocus { kind: LocusKind::None, angles: Vec::new() };
    }
    let angles = root_lines(a, b, c);
    let kind = if angles.len() == 2 { LocusKind::Pair } else { LocusKind::Double };
    TangencyLocus { kind, angles }
}

/// `(μ₋, μ₊) = 1 + 2β² ∓ 2|β|√(1 + β²)`.
pub fn mu_bounds(beta: f64) -> Result<(f64, f64)> {
    let b = abs(nonzero(beta)?);
    // μ± = (√(1+β²) ± |β|)²
    let up = sqrt(1.0 + b * b) + b;
    let plus = up * up;
    Ok((1.0 / plus, plus))
}

/// Coefficients `(A, B, C)` of the real-complex discriminant `A·S² + B·S + C`.
pub fn rc_coefficients(beta: f64, mu: f64, theta0: f64) -> (f64, f64, f64) {
    let cs = cos(theta0) * sin(theta0);
    let a = beta * beta * cs * cs * (mu - 1.0) * (mu - 1.0);
    let b = 2.0 * beta * cs * (mu * mu - 1.0);
    let c = mu * mu - 2.0 * mu * (1.0 + 2.0 * beta * beta) + 1.0;
    (a, b, c)
}

/// Real-complex discriminant at the stretch `S`.
pub fn rc_discriminant(beta: f64, mu: f64, stretch: f64, theta0: f64) -> f64 {
    let (a, b, c) = rc_coefficients(beta, mu, theta0);
    (a * stretch + b) * stretch + c
}

/// Coefficients `[a, b, c]` of the real-complex tangency quadratic on `y = 1`.
pub fn rc_quadratic(beta: f64, mu: f64, lambda: f64, theta0: f64) -> [f64; 3] {
    let (sn, cs) = (sin(theta0), cos(theta0));
    let sc = sn * cs;
    let inv = 1.0 / lambda;
    [
        beta * (sn * sn * inv + lambda * cs * cs),
        1.0 + beta * sc * (inv - lambda) - mu * (1.0 + beta * sc * (lambda - inv)),
        beta * mu * (cs * cs * inv + lambda * sn * sn),
    ]
}

/// Roots of `A·S² + B·S + C`, smaller first.
pub fn s_bounds(beta: f64, mu: f64, theta0: f64) -> Result<(f64, f64)> {
    nonzero(beta)?;
    check_mu(mu)?;
    let cs = cos(theta0) * sin(theta0);
    if abs(cs) <= ANGLE_TOL {
        return Err(Error::DegenerateAngle);
    }
    let (_, _, c) = rc_coefficients(beta, mu, theta0);
    let big = -beta * ((mu + 1.0) + 2.0 * sqrt(mu * (beta * beta + 1.0)));
    let small = beta * beta * c / big;
    let den = beta * beta * (mu - 1.0) * cs;
    let (x, y) = (big / den, small / den);
    Ok(if x <= y { (x, y) } else { (y, x) })
}

fn check_mu(mu: f64) -> Result<f64> {
    if !(mu > 0.0) || mu == 1.0 || !mu.is_finite() {
        return Err(Error::Domain("mu must be positive and different from 1"));
    }
    Ok(mu)
}

/// Negative `s` is the pair with `λ` replaced by `1/λ`, which is the same
/// foliation as the one with `λ` and `θ₀ − π/2`.
pub fn canonical_rc(s: f64, theta0: f64) -> (f64, f64) {
    if s < 0.0 {
        (-s, crate::math::wrap_rotation(theta0 - FRAC_PI_2))
    } else {
        (s, theta0)
    }
}

pub fn is_tt_rc(beta: f64, mu: f64, s: f64, theta0: f64) -> Result<TtVerdict> {
    nonzero(beta)?;
    check_mu(mu)?;
    if !s.is_finite() || !theta0.is_finite() {
        return Err(Error::Domain("s and theta0 must be finite"));
    }
    let (s, theta0) = canonical_rc(s, theta0);
    let stretch = 2.0 * s;
    let witness = rc_discriminant(beta, mu, stretch, theta0);
    let (mu_m, mu_p) = mu_bounds(beta)?;
    let near = |x: f64, y: f64| close(x, y, TOL_BOUNDARY);
    let on_mu_bound = near(mu, mu_m) || near(mu, mu_p);
    let cs = cos(theta0) * sin(theta0);

    let (inside, boundary) = if abs(cs) <= ANGLE_TOL {
        (mu_m <= mu && mu <= mu_p, on_mu_bound)
    } else if on_mu_bound {
        let bound = -2.0 * (mu + 1.0) / (beta * cs * (mu - 1.0));
        (stretch <= bound, near(stretch, bound) || near(stretch, 0.0))
    } else if mu_m < mu && mu < mu_p {
        let (_, s_big) = s_bounds(beta, mu, theta0)?;
        (stretch <= s_big, near(stretch, s_big))
    } else {
        let (s_small, s_big) = s_bounds(beta, mu, theta0)?;
        if s_small > 0.0 {
            (s_small <= stretch && stretch <= s_big, near(stretch, s_small) || near(stretch, s_big))
        } else {
            (false, near(stretch, s_big))
        }
    };
    Ok(TtVerdict { in_tt: inside || boundary, boundary, witness })
}

/// Time reversal sends the complex-real pair to a real-complex one with `1/λ` and `−θ₁`.
pub fn is_tt_cr(alpha: f64, gamma: f64, lambda: f64, theta1: f64) -> Result<TtVerdict> {
    if !(lambda > 0.0) {
        return Err(Error::Domain("lambda must be positive"));
    }
    let (_, s) = t_s(lambda);
    is_tt_rc(alpha, gamma, -s, -theta1)
}

pub fn tangency_lines_rc(beta: f64, mu: f64, lambda: f64, theta0: f64) -> Result<TangencyLocus> {
    if !(lambda > 0.0) {
        return Err(Error::Domain("lambda must be positive"));
    }
    let (_, s) = t_s(lambda);
    let verdict = is_tt_rc(beta, mu, s, theta0)?;
    let [a, b, c] = rc_quadratic(beta, mu, lambda, theta0);
    Ok(locus(&verdict, a, b, c))
}

/// Tangency lines of the complex-real pair, in the section coordinates where q's foliation is standard.
pub fn tangency_lines_cr(alpha: f64, gamma: f64, lambda: f64, theta1: f64) -> Result<TangencyLocus> {
    tangency_lines_rc(alpha, gamma, 1.0 / lambda, -theta1)
}

/// Strictly inside the counter-clockwise arc of ℝP(1) from `from` to `to`.
fn in_arc(x: f64, from: f64, to: f64) -> bool {
    let span = wrap_line(to - from);
    let pos = wrap_line(x - from);
    pos > 0.0 && pos < span
}

/// Whether `{a, b}` and `{c, d}` interleave on ℝP(1).
pub fn separates(a: f64, b: f64, c: f64, d: f64) -> bool {
    in_arc(c, a, b) != in_arc(d, a, b)
}

/// Type (I) exactly when `{ω_s, ω_uu}` and `{ω_u, ω_ss}` interleave: only
/// then does some linear pair with these eigendirections have no tangency.
pub fn rr_type(frames: &FrameAngles) -> Result<RrType> {
    let values = [frames.omega_s_p, frames.omega_u_q, frames.omega_ss_p, frames.omega_uu_q];
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("frame angles must be finite"));
    }
    if !frames.degeneracies().is_empty() {
        return Err(Error::FrameDegenerate);
    }
    let [s, u, ss, uu] = values.map(|x| wrap(x, PI));
    Ok(if separates(s, uu, u, ss) { RrType::I } else { RrType::II })
}

/// Smallest distance between frame angles, for sampling generic frames.
pub fn frame_margin(frames: &FrameAngles) -> f64 {
    let v = [frames.omega_s_p, frames.omega_u_q, frames.omega_ss_p, frames.omega_uu_q];
    let mut m = f64::INFINITY;
    for i in 0..4 {
        for j in i + 1..4 {
            m = m.min(line_distance(v[i], v[j]));
        }
    }
    m
}
