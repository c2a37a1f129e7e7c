//! Scalar helpers on top of `libm` so the crate stays `no_std`.

pub use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}
#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}
#[inline]
pub fn tan(x: f64) -> f64 {
    libm::tan(x)
}
#[inline]
pub fn atan(x: f64) -> f64 {
    libm::atan(x)
}
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}
#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}
#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}
#[inline]
pub fn pow(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}
#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}
#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

/// Reduce an angle to `[0, period)`.
pub fn wrap(a: f64, period: f64) -> f64 {
    let r = a - period * floor(a / period);
    // `a` slightly below a multiple of the period can round up to `period`
    if r >= period {
        0.0
    } else {
        r
    }
}

/// Direction of a line through the origin, in `[0, π)`.
pub fn wrap_line(a: f64) -> f64 {
    wrap(a, PI)
}

/// Rotation angle in `(−π, π]`.
pub fn wrap_rotation(a: f64) -> f64 {
    let r = wrap(a, TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Distance between two lines through the origin, in `[0, π/2]`.
pub fn line_distance(a: f64, b: f64) -> f64 {
    let d = wrap_line(a - b);
    if d > FRAC_PI_2 {
        PI - d
    } else {
        d
    }
}

/// `|a − b| ≤ tol·max(1, |a|, |b|)`.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    abs(a - b) <= tol * max3(1.0, abs(a), abs(b))
}

pub(crate) fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.max(b).max(c)
}
