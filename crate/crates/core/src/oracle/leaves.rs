//! Leaf tracing and polyline intersection counting.

use alloc::vec::Vec;

use crate::foliation::LinearField;
use crate::linalg::{det2, norm, Vec2};

/// Step of the tracer in units of the local radius.
pub const TRACE_STEP: f64 = 0.02;

fn direction(field: &LinearField, p: Vec2, sign: f64) -> Vec2 {
    let v = field.eval(p);
    let n = norm(v);
    if n == 0.0 {
        return [0.0, 0.0];
    }
    let k = sign * norm(p) / n;
    [v[0] * k, v[1] * k]
}

fn rk4(field: &LinearField, p: Vec2, h: f64, sign: f64) -> Vec2 {
    let add = |a: Vec2, b: Vec2, k: f64| [a[0] + k * b[0], a[1] + k * b[1]];
    let k1 = direction(field, p, sign);
    let k2 = direction(field, add(p, k1, h / 2.0), sign);
    let k3 = direction(field, add(p, k2, h / 2.0), sign);
    let k4 = direction(field, add(p, k3, h), sign);
    [
        p[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        p[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}

fn half_leaf<K: Fn(Vec2) -> bool>(
    field: &LinearField,
    seed: Vec2,
    sign: f64,
    keep: &K,
    h: f64,
    max_points: usize,
) -> Vec<Vec2> {
    let mut out = Vec::new();
    let mut p = seed;
    while out.len() < max_points {
        let next = rk4(field, p, h, sign);
        if !next[0].is_finite() || !next[1].is_finite() || next == p {
            break;
        }
        out.push(next);
        if !keep(next) {
            break;
        }
        p = next;
    }
    out
}

/// Leaf through `seed`, followed both ways while `keep` holds; the first
/// point outside is kept so the polyline reaches the boundary.
///
/// The parametrization moves a fixed fraction `h` of the current radius per
/// step, which resolves spirals and nodes alike near the origin.
pub fn trace_leaf<K: Fn(Vec2) -> bool>(
    field: &LinearField,
    seed: Vec2,
    keep: K,
    h: f64,
    max_points: usize,
) -> Vec<Vec2> {
    let mut back = half_leaf(field, seed, -1.0, &keep, h, max_points);
    back.reverse();
    back.push(seed);
    back.extend(half_leaf(field, seed, 1.0, &keep, h, max_points));
    back
}

#[derive(Clone, Copy)]
struct Bbox {
    lo: Vec2,
    hi: Vec2,
}

impl Bbox {
    fn of(points: &[Vec2]) -> Bbox {
        let mut b = Bbox { lo: points[0], hi: points[0] };
        for p in points {
            b.lo = [b.lo[0].min(p[0]), b.lo[1].min(p[1])];
            b.hi = [b.hi[0].max(p[0]), b.hi[1].max(p[1])];
        }
        b
    }

    fn overlaps(&self, o: &Bbox) -> bool {
        self.lo[0] <= o.hi[0] && o.lo[0] <= self.hi[0] && self.lo[1] <= o.hi[1] && o.lo[1] <= self.hi[1]
    }
}

fn side(a: Vec2, b: Vec2, c: Vec2) -> bool {
    det2([b[0] - a[0], b[1] - a[1]], [c[0] - a[0], c[1] - a[1]]) >= 0.0
}

/// Segments cross; a crossing through a shared vertex counts once.
fn crosses(p1: Vec2, p2: Vec2, q1: Vec2, q2: Vec2) -> bool {
    side(p1, p2, q1) != side(p1, p2, q2) && side(q1, q2, p1) != side(q1, q2, p2)
}

const CHUNK: usize = 16;

/// Number of crossings between two polylines.
pub fn count_intersections(a: &[Vec2], b: &[Vec2]) -> usize {
    if a.len() < 2 || b.len() < 2 {
        return 0;
    }
    let chunks = |pts: &[Vec2]| -> Vec<(usize, usize, Bbox)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i + 1 < pts.len() {
            let j = (i + CHUNK).min(pts.len() - 1);
            out.push((i, j, Bbox::of(&pts[i..=j])));
            i = j;
        }
        out
    };
    let (ca, cb) = (chunks(a), chunks(b));
    let mut count = 0;
    for &(i0, i1, ba) in &ca {
        for &(j0, j1, bb) in &cb {
            if !ba.overlaps(&bb) {
                continue;
            }
            for i in i0..i1 {
                for j in j0..j1 {
                    if crosses(a[i], a[i + 1], b[j], b[j + 1]) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::norm;

    #[test]
    fn crossing_lines() {
        let a = [[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]];
        let b = [[0.0, -1.0], [0.0, 1.0]];
        assert_eq!(count_intersections(&a, &b), 1);
        let c = [[-1.0, 0.5], [1.0, 0.5]];
        assert_eq!(count_intersections(&a, &c), 0);
    }

    #[test]
    fn node_leaf_reaches_origin_and_boundary() {
        let f = LinearField::real(0.3);
        let leaf = trace_leaf(&f, [0.3, 0.2], |p| norm(p) < 1.0 && norm(p) > 1e-4, TRACE_STEP, 100_000);
        assert!(norm(leaf[0]) <= 1e-4);
        assert!(norm(*leaf.last().unwrap()) >= 1.0);
        // leaves of Y_μ are y = C·x^μ
        let c = 0.2 / crate::math::pow(0.3, 0.3);
        for p in &leaf {
            assert!((p[1] - c * crate::math::pow(p[0], 0.3)).abs() < 1e-6 * (1.0 + p[1].abs()));
        }
    }
}
