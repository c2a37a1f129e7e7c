//! Holonomy between the two tangency lines and the moduli Ψ and Υ built from it.
//!
//! All three foliation families are invariant under homotheties, so a holonomy
//! between two rays is multiplication by a constant. Ratios are carried as
//! natural logarithms to stay finite for steep spirals.

use crate::error::{Error, Result};
use crate::foliation::{complex_push, cross, LinearField};
use crate::linalg::{norm, signed_angle, unit};
use crate::math::{abs, cos, exp, line_distance, ln, sin, sqrt, wrap, FRAC_PI_2, PI, TAU};
use crate::tangency::{canonical_rc, is_tt_cc, is_tt_rc, tangency_lines_cc, tangency_lines_rc, LocusKind};

/// Which naming rule picked Δ and Δ′.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameRule {
    /// Counter-clockwise arc through the cone where `det(X_α, X_β^λ)` has the sign of `α − β`.
    Cc,
    /// Order in which a leaf of the real foliation leaving the origin meets the lines.
    Rc,
}

/// The sector S₀ between the tangency lines, as the rays bounding it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectorFrame {
    /// Angle of the ray on Δ.
    pub delta: f64,
    /// Angle of the ray on Δ′, equal to `delta + travel`.
    pub delta_prime: f64,
    /// Signed angular displacement from Δ to Δ′ through S₀; `0 < |travel| < π`.
    pub travel: f64,
    pub rule: FrameRule,
}

impl SectorFrame {
    pub fn delta_line(&self) -> f64 {
        crate::math::wrap_line(self.delta)
    }

    pub fn delta_prime_line(&self) -> f64 {
        crate::math::wrap_line(self.delta_prime)
    }

    pub fn width(&self) -> f64 {
        abs(self.travel)
    }

    /// Ray through the middle of S₀.
    pub fn bisector(&self) -> f64 {
        self.delta + self.travel / 2.0
    }
}

/// Homothety ratio of a holonomy map, stored as its logarithm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolonomyRatio {
    pub log: f64,
}

impl HolonomyRatio {
    pub fn from_log(log: f64) -> Result<Self> {
        if log.is_finite() {
            Ok(HolonomyRatio { log })
        } else {
            Err(Error::Domain("holonomy ratio is not a finite positive number"))
        }
    }

    pub fn value(&self) -> f64 {
        exp(self.log)
    }
}

pub fn sector_frame_cc(alpha: f64, beta: f64, lambda: f64) -> Result<SectorFrame> {
    let locus = tangency_lines_cc(alpha, beta, lambda)?;
    if locus.kind != LocusKind::Pair {
        return Err(Error::InTt);
    }
    let (a, b) = (locus.angles[0], locus.angles[1]);
    let f = LinearField::logarithmic(alpha);
    let g = LinearField::complex(beta, lambda, 0.0);
    let want = if beta - alpha > 0.0 { -1.0 } else { 1.0 };
    let cones = [(a, b - a), (b, a + PI - b)];
    for (start, width) in cones {
        let d = cross(&f, &g, unit(start + width / 2.0));
        if d * want > 0.0 {
            return Ok(SectorFrame { delta: start, delta_prime: start + width, travel: width, rule: FrameRule::Cc });
        }
    }
    Err(Error::FrameConstructionFailed)
}

pub fn sector_frame_rc(beta: f64, mu: f64, lambda: f64, theta0: f64) -> Result<SectorFrame> {
    let locus = tangency_lines_rc(beta, mu, lambda, theta0)?;
    if locus.kind != LocusKind::Pair {
        return Err(Error::InTt);
    }
    let (a, b) = (locus.angles[0], locus.angles[1]);
    let off_axis = |x: f64| line_distance(x, 0.0) > 1e-12 && line_distance(x, FRAC_PI_2) > 1e-12;
    let same_quadrant = (a < FRAC_PI_2) == (b < FRAC_PI_2);
    if !(off_axis(a) && off_axis(b) && same_quadrant) {
        return Err(Error::FrameConstructionFailed);
    }
    // leaves leave the origin tangent to the weak axis
    let weak = if mu < 1.0 { FRAC_PI_2 } else { 0.0 };
    let (first, second) = if line_distance(a, weak) < line_distance(b, weak) { (a, b) } else { (b, a) };
    Ok(SectorFrame { delta: first, delta_prime: second, travel: second - first, rule: FrameRule::Rc })
}

/// Radial scaling `exp(travel/α)` along a leaf of `X_α` turning from φ₁ to φ₂.
pub fn log_spiral_holonomy_ratio(alpha: f64, phi1: f64, phi2: f64, travel: f64) -> Result<HolonomyRatio> {
    if alpha == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    let mismatch = wrap(travel - (phi2 - phi1), TAU);
    if mismatch.min(TAU - mismatch) > 1e-9 {
        return Err(Error::InconsistentTravel);
    }
    HolonomyRatio::from_log(travel / alpha)
}

/// Holonomy of the spiral foliation pushed by `R(−θ₀)·diag(1, λ)` across the frame.
pub fn pushed_spiral_holonomy_ratio(beta: f64, lambda: f64, theta0: f64, frame: &SectorFrame) -> Result<HolonomyRatio> {
    if beta == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let inv = complex_push(lambda, theta0).inverse().ok_or(Error::Singular)?;
    let w1 = inv.apply(unit(frame.delta));
    let w2 = inv.apply(unit(frame.delta_prime));
    let travel = if frame.travel == 0.0 { 0.0 } else { signed_angle(w1, w2) };
    let phi1 = crate::math::atan2(w1[1], w1[0]);
    let spiral = log_spiral_holonomy_ratio(beta, phi1, phi1 + travel, travel)?;
    HolonomyRatio::from_log(ln(norm(w1)) - ln(norm(w2)) + spiral.log)
}

/// Holonomy of `Y_μ` between two rays in one open quadrant; leaves are `y = C·x^μ`.
pub fn real_holonomy_ratio(mu: f64, phi1: f64, phi2: f64) -> Result<HolonomyRatio> {
    if !(mu > 0.0) || mu == 1.0 || !mu.is_finite() {
        return Err(Error::Domain("mu must be positive and different from 1"));
    }
    let (s1, c1, s2, c2) = (sin(phi1), cos(phi1), sin(phi2), cos(phi2));
    let tiny = 1e-12;
    if abs(s1) < tiny || abs(c1) < tiny || abs(s2) < tiny || abs(c2) < tiny {
        return Err(Error::RayOnInvariantManifold);
    }
    if (s1 > 0.0) != (s2 > 0.0) || (c1 > 0.0) != (c2 > 0.0) {
        return Err(Error::RaysNotInOneQuadrant);
    }
    let tan_ratio = abs((s1 / c1) / (s2 / c2));
    HolonomyRatio::from_log(ln(tan_ratio) / (1.0 - mu) + ln(abs(c1 / c2)))
}

/// The pieces of Ψ: frame, both holonomies, and `ratio_H = f/g`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsiParts {
    pub frame: SectorFrame,
    pub f: HolonomyRatio,
    pub g: HolonomyRatio,
    pub ratio_h: HolonomyRatio,
    pub value: f64,
}

pub fn psi_parts(alpha: f64, beta: f64, t: f64) -> Result<PsiParts> {
    if is_tt_cc(alpha, beta, t)?.in_tt {
        return Err(Error::InTt);
    }
    let lambda = t + sqrt((t - 1.0) * (t + 1.0));
    let frame = sector_frame_cc(alpha, beta, lambda)?;
    let f = log_spiral_holonomy_ratio(alpha, frame.delta, frame.delta_prime, frame.travel)?;
    let g = pushed_spiral_holonomy_ratio(beta, lambda, 0.0, &frame)?;
    // H = g⁻¹∘f
    let ratio_h = HolonomyRatio::from_log(f.log - g.log)?;
    let value = alpha / TAU * ratio_h.log;
    Ok(PsiParts { frame, f, g, ratio_h, value })
}

/// `Ψ(α, β, t) = (α/2π)·log ratio_H`, defined off (TT).
pub fn psi_modulus(alpha: f64, beta: f64, t: f64) -> Result<f64> {
    psi_parts(alpha, beta, t).map(|p| p.value)
}

/// The pieces of Υ: frame, both holonomies, and `ν = f/g`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UpsilonParts {
    pub frame: SectorFrame,
    pub f: HolonomyRatio,
    pub g: HolonomyRatio,
    pub nu: HolonomyRatio,
    pub value: f64,
}

pub fn upsilon_parts(beta: f64, mu: f64, s: f64, theta0: f64) -> Result<UpsilonParts> {
    if is_tt_rc(beta, mu, s, theta0)?.in_tt {
        return Err(Error::InTt);
    }
    let (s, theta0) = canonical_rc(s, theta0);
    let lambda = s + sqrt(s * s + 1.0);
    let frame = sector_frame_rc(beta, mu, lambda, theta0)?;
    let f = pushed_spiral_holonomy_ratio(beta, lambda, theta0, &frame)?;
    let g = real_holonomy_ratio(mu, frame.delta, frame.delta_prime)?;
    let nu = HolonomyRatio::from_log(f.log - g.log)?;
    let value = beta / TAU * nu.log;
    Ok(UpsilonParts { frame, f, g, nu, value })
}

/// `Υ(β, μ, s, θ₀) = (β/2π)·log ν`, defined off (TT). Negative `s` is re-canonicalized.
pub fn upsilon_modulus(beta: f64, mu: f64, s: f64, theta0: f64) -> Result<f64> {
    upsilon_parts(beta, mu, s, theta0).map(|p| p.value)
}

/// `Υ(α, γ, −s, −θ₁)` for a complex-real connection.
pub fn upsilon_cr(alpha: f64, gamma: f64, lambda: f64, theta1: f64) -> Result<f64> {
    let (_, s) = crate::params::t_s(lambda);
    upsilon_modulus(alpha, gamma, -s, -theta1)
}
