//! Points of the Möbius strip of unordered circle pairs and the map
//! `μ{x,y} = ((γ(x)+γ(y))/2, (γ(y)-γ(x))^{2n})`.

use std::f64::consts::{PI, TAU};

use nalgebra::Matrix4x2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::curve::CurveModel;

const ANTIPODAL_TIE: f64 = 1e-12;

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Shortest distance between two angles on the circle, in `[0, π]`.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(b - a);
    d.min(TAU - d)
}

/// An unordered pair `{x, y}` of circle parameters in canonical form.
///
/// Both angles lie in `[0, 2π)` and the counterclockwise arc from `x` to `y`
/// has length in `[0, π]`; antipodal pairs put the smaller angle first.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MobiusPoint {
    x: f64,
    y: f64,
}

impl MobiusPoint {
    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Counterclockwise arc length from `x` to `y`, in `[0, π]`.
    pub fn span(&self) -> f64 {
        wrap_angle(self.y - self.x)
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == self.y
    }

    /// Distance on the strip: the better of the two matchings of endpoints,
    /// each scored by its larger circle distance.
    pub fn distance(&self, other: &MobiusPoint) -> f64 {
        let straight = circle_distance(self.x, other.x).max(circle_distance(self.y, other.y));
        let crossed = circle_distance(self.x, other.y).max(circle_distance(self.y, other.x));
        straight.min(crossed)
    }
}

/// Canonical representative of `{x, y}`; symmetric in its arguments.
pub fn canonicalize(x: f64, y: f64) -> MobiusPoint {
    let (x, y) = (wrap_angle(x), wrap_angle(y));
    let forward = wrap_angle(y - x);
    if (forward - PI).abs() <= ANTIPODAL_TIE {
        MobiusPoint {
            x: x.min(y),
            y: x.max(y),
        }
    } else if forward > PI {
        MobiusPoint { x: y, y: x }
    } else {
        MobiusPoint { x, y }
    }
}

/// Both components of `μ` at a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuValue {
    pub mid: Complex64,
    pub pow: Complex64,
}

/// Evaluates `μ` with exponent `2n`; well defined on unordered pairs since the
/// exponent is even. Requires `n ≥ 2`.
pub fn mu_map(model: &CurveModel, n: u32, p: &MobiusPoint) -> MuValue {
    let gx = model.eval(p.x, 0);
    let gy = model.eval(p.y, 0);
    MuValue {
        mid: (gx + gy) * 0.5,
        pow: (gy - gx).powu(2 * n),
    }
}

/// Analytic Jacobian of `(Re mid, Im mid, Re pow, Im pow)` with respect to
/// `(x, y)` at the canonical representative.
pub fn mu_jacobian(model: &CurveModel, n: u32, p: &MobiusPoint) -> Matrix4x2<f64> {
    let (gx, dx) = model.eval_with_derivative(p.x);
    let (gy, dy) = model.eval_with_derivative(p.y);
    let chord = gy - gx;
    // d/dw w^{2n} = 2n w^{2n-1}
    let scale = chord.powu(2 * n - 1) * (2 * n) as f64;
    let mid_x = dx * 0.5;
    let mid_y = dy * 0.5;
    let pow_x = -scale * dx;
    let pow_y = scale * dy;
    Matrix4x2::new(
        mid_x.re, mid_y.re, //
        mid_x.im, mid_y.im, //
        pow_x.re, pow_y.re, //
        pow_x.im, pow_y.im,
    )
}

fn second_singular_value(jac: &Matrix4x2<f64>) -> f64 {
    let sv = jac.singular_values();
    sv[0].min(sv[1])
}

/// Sampled check that `dμ` has rank 2 away from the diagonal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImmersionReport {
    pub n: u32,
    pub grid_size: usize,
    pub diagonal_margin: f64,
    /// Smallest second singular value over grid points with span ≥ margin.
    pub min_sigma2: f64,
    /// Where `min_sigma2` was attained.
    pub argmin: MobiusPoint,
    /// Smallest second singular value over the diagonal samples. In `(x, y)`
    /// coordinates both columns coincide there, so this is zero up to rounding.
    pub diagonal_min_sigma2: f64,
    /// Off-diagonal points whose `σ₂` is below `1e-9 · σ₁`.
    pub near_degenerate: Vec<MobiusPoint>,
}

/// Scans a `grid_size × grid_size` grid of canonical points (`x` over the
/// circle, span over `[margin, π]`) and reports the smallest `σ₂` of `dμ`.
/// The diagonal is sampled separately.
pub fn immersion_audit(
    model: &CurveModel,
    n: u32,
    grid_size: usize,
    diagonal_margin: f64,
) -> ImmersionReport {
    let grid_size = grid_size.max(2);
    let mut min_sigma2 = f64::INFINITY;
    let mut argmin = canonicalize(0.0, PI);
    let mut near_degenerate = Vec::new();
    for a in 0..grid_size {
        let x = TAU * a as f64 / grid_size as f64;
        for b in 0..grid_size {
            let span = diagonal_margin + (PI - diagonal_margin) * b as f64 / (grid_size - 1) as f64;
            if span <= 0.0 {
                continue;
            }
            let p = canonicalize(x, x + span);
            let jac = mu_jacobian(model, n, &p);
            let sv = jac.singular_values();
            let (hi, lo) = (sv[0].max(sv[1]), sv[0].min(sv[1]));
            if lo < min_sigma2 {
                min_sigma2 = lo;
                argmin = p;
            }
            if lo <= 1e-9 * hi {
                near_degenerate.push(p);
            }
        }
    }
    let diagonal_min_sigma2 = (0..grid_size)
        .map(|a| {
            let x = TAU * a as f64 / grid_size as f64;
            second_singular_value(&mu_jacobian(model, n, &canonicalize(x, x)))
        })
        .fold(f64::INFINITY, f64::min);
    ImmersionReport {
        n,
        grid_size,
        diagonal_margin,
        min_sigma2,
        argmin,
        diagonal_min_sigma2,
        near_degenerate,
    }
}
