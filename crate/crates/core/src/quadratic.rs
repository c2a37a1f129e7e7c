//! Lines through the origin on which a binary quadratic form vanishes.
//!
//! Tangency conditions restricted to the chart `y = 1` are quadratics in `x`;
//! reading them as the form `a·x² + b·x·y + c·y²` keeps the line `y = 0`, which
//! the chart misses when `a = 0`.

use alloc::vec::Vec;

use crate::math::{atan2, sqrt, wrap_line};

fn line(dx: f64, dy: f64) -> f64 {
    wrap_line(atan2(dy, dx))
}

/// `b² − 4ac`.
pub fn discriminant(a: f64, b: f64, c: f64) -> f64 {
    b * b - 4.0 * a * c
}

/// Direction of the double root, assuming the discriminant vanishes.
pub fn double_line(a: f64, b: f64, _c: f64) -> f64 {
    if a == 0.0 && b == 0.0 {
        0.0
    } else {
        line(-b, 2.0 * a)
    }
}

/// Distinct root lines in `[0, π)`, sorted; empty when the discriminant is negative.
pub fn root_lines(a: f64, b: f64, c: f64) -> Vec<f64> {
    let disc = discriminant(a, b, c);
    if disc < 0.0 || !disc.is_finite() {
        return Vec::new();
    }
    if disc == 0.0 {
        return alloc::vec![double_line(a, b, c)];
    }
    let sq = sqrt(disc);
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    // x₁ = q/a along (q, a); x₂ = c/q along (c, q)
    let mut out = alloc::vec![line(q, a), line(c, q)];
    out.sort_by(f64::total_cmp);
    out
}
