//! Aspect-ratio families and rectangles built from pairs of curve chords.
//!
//! Two chords `{x,y}` and `{w,z}` with a common midpoint and equal length are
//! the diagonals of an inscribed rectangle. If `θ ∈ (0, π)` is the angle from
//! the first diagonal to the second, the side ratio `|γ(w)-γ(x)| / |γ(y)-γ(w)|`
//! is `tan(θ/2)`, so the family `k` of `n` is the one with `θ = πk/n`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::curve::CurveModel;
use crate::error::{Error, Result};
use crate::mobius::{circle_distance, MobiusPoint};

/// Largest distance from the nearest family angle accepted when labeling.
pub const FAMILY_ANGLE_LIMIT: f64 = 0.1;
/// Diagonals shorter than this fraction of the diameter are degenerate.
pub const DIAGONAL_TOLERANCE: f64 = 1e-8;

/// The family `tan(πk/2n)` of target aspect ratios.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AspectFamily {
    pub n: u32,
    pub k: u32,
    pub ratio: f64,
}

impl AspectFamily {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadN(n));
        }
        if k == 0 || k >= n {
            return Err(Error::BadK { n, k });
        }
        Ok(AspectFamily {
            n,
            k,
            ratio: (PI * k as f64 / (2 * n) as f64).tan(),
        })
    }

    /// Angle `πk/n` between the diagonals of a family member.
    pub fn diagonal_angle(&self) -> f64 {
        PI * self.k as f64 / self.n as f64
    }
}

/// All families of `n`, ordered by `k`.
pub fn family_ratios(n: u32) -> Result<Vec<AspectFamily>> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    (1..n).map(|k| AspectFamily::new(n, k)).collect()
}

/// Reports ratios as `max(r, 1/r)`, since a rectangle's aspect ratio is only
/// defined up to reciprocal.
pub fn canonical_ratio(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonpositiveRatio(r));
    }
    Ok(r.max(1.0 / r))
}

/// An inscribed rectangle with vertices `γ(x), γ(w), γ(y), γ(z)` in
/// counterclockwise order; `{x,y}` and `{w,z}` are its diagonals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub params: [f64; 4],
    pub vertices: [Complex64; 4],
    pub family: AspectFamily,
    /// Max of midpoint and diagonal-length mismatch, over the curve diameter.
    /// Solver output also folds in the diagonal-angle equation.
    pub residual: f64,
    pub ratio_measured: f64,
}

impl Rectangle {
    pub fn canonical_ratio(&self) -> f64 {
        self.ratio_measured.max(1.0 / self.ratio_measured)
    }

    /// Common midpoint of the diagonals (average of the two midpoints).
    pub fn center(&self) -> Complex64 {
        self.vertices.iter().sum::<Complex64>() / 4.0
    }

    /// Checks the three defining properties with absolute tolerance `tol`
    /// on lengths and relative tolerance `tol` on the ratio.
    pub fn satisfies_invariants(&self, tol: f64) -> bool {
        let [a, b, c, d] = self.vertices;
        let midpoint_gap = ((a + c) - (b + d)).norm() / 2.0;
        let length_gap = ((c - a).norm() - (d - b).norm()).abs();
        let target = self.family.ratio;
        let ratio_ok = (self.ratio_measured - target).abs() <= tol * target
            || (self.ratio_measured - 1.0 / target).abs() <= tol / target;
        midpoint_gap <= tol && length_gap <= tol && ratio_ok
    }
}

fn signed_area(pts: &[Complex64; 4]) -> f64 {
    (0..4)
        .map(|i| {
            let (p, q) = (pts[i], pts[(i + 1) % 4]);
            p.re * q.im - p.im * q.re
        })
        .sum::<f64>()
        / 2.0
}

/// Builds the rectangle whose diagonals are the chords `p` and `q`.
///
/// The family is the nearest `k` to `θ n / π`; diagonal angles more than
/// [`FAMILY_ANGLE_LIMIT`] from every `πk/n` with `0 < k < n` are rejected.
pub fn rect_from_pairs(
    model: &CurveModel,
    p: &MobiusPoint,
    q: &MobiusPoint,
    n: u32,
    separation: f64,
) -> Result<Rectangle> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    let distance = p.distance(q);
    if distance < separation {
        return Err(Error::SamePair {
            distance,
            separation,
        });
    }
    let diameter = model.diameter();
    let (x, y) = (p.x(), p.y());
    let (mut w, mut z) = (q.x(), q.y());
    let (gx, gy) = (model.eval(x, 0), model.eval(y, 0));
    let (mut gw, mut gz) = (model.eval(w, 0), model.eval(z, 0));
    let (d1, d2) = (gy - gx, gz - gw);
    let shortest = d1.norm().min(d2.norm());
    if !(shortest >= DIAGONAL_TOLERANCE * diameter) {
        return Err(Error::DegenerateDiagonal { length: shortest });
    }

    let angle = (d2 / d1).arg().rem_euclid(PI);
    let k = (angle * n as f64 / PI).round() as u32;
    let offset = (angle - PI * k as f64 / n as f64).abs();
    if k == 0 || k >= n || offset > FAMILY_ANGLE_LIMIT {
        return Err(Error::NotInFamily { angle, offset });
    }

    let residual = ((gx + gy) * 0.5 - (gw + gz) * 0.5)
        .norm()
        .max((d1.norm() - d2.norm()).abs())
        / diameter;

    if signed_area(&[gx, gw, gy, gz]) < 0.0 {
        std::mem::swap(&mut w, &mut z);
        std::mem::swap(&mut gw, &mut gz);
    }
    Ok(Rectangle {
        params: [x, w, y, z],
        vertices: [gx, gw, gy, gz],
        family: AspectFamily::new(n, k)?,
        residual,
        ratio_measured: (angle / 2.0).tan(),
    })
}

// Relabelings of the 4-cycle (x, w, y, z): rotations and reflections.
const DIHEDRAL: [[usize; 4]; 8] = [
    [0, 1, 2, 3],
    [1, 2, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 1, 2],
    [3, 2, 1, 0],
    [2, 1, 0, 3],
    [1, 0, 3, 2],
    [0, 3, 2, 1],
];

/// Parameter distance between two rectangles, minimized over relabelings.
pub fn param_distance(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    DIHEDRAL
        .iter()
        .map(|perm| {
            (0..4)
                .map(|i| circle_distance(a[i], b[perm[i]]))
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

fn by_family_then_x(a: &Rectangle, b: &Rectangle) -> Ordering {
    a.family
        .k
        .cmp(&b.family.k)
        .then(a.params[0].total_cmp(&b.params[0]))
        .then(a.residual.total_cmp(&b.residual))
}

/// Collapses rectangles of the same family whose parameters agree within
/// `tol_param` up to relabeling, keeping the lowest residual. Output is
/// sorted by `(k, x)`.
pub fn dedup(rects: Vec<Rectangle>, tol_param: f64) -> Vec<Rectangle> {
    let mut order = rects;
    order.sort_by(|a, b| {
        a.residual
            .total_cmp(&b.residual)
            .then(by_family_then_x(a, b))
    });
    let mut kept: Vec<Rectangle> = Vec::new();
    for r in order {
        let duplicate = kept.iter().any(|k| {
            k.family.n == r.family.n
                && k.family.k == r.family.k
                && param_distance(&k.params, &r.params) <= tol_param
        });
        if !duplicate {
            kept.push(r);
        }
    }
    kept.sort_by(by_family_then_x);
    kept
}
