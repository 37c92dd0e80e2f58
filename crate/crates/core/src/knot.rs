//! The boundary knot of `μ(M)` near `ℂ × {0}` and the torus-knot data
//! attached to it.
//!
//! Near the diagonal of the strip, the level set `|γ(y) - γ(x)| = ε` is a loop
//! of short chords. Its image under `μ`, with the second component scaled to
//! unit modulus, is a curve in `ℂ × S¹` which should wind once around the
//! curve interior and `2n` times around the circle factor, like
//! `K_n : g ↦ (g, g^{2n})`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::curve::CurveModel;
use crate::error::{Error, Result};

/// Tolerance on `|g| = 1` accepted by [`kn_point`].
pub const UNIT_TOLERANCE: f64 = 1e-12;
/// Loops closer than this to the base point are rejected.
pub const BASE_POINT_CLEARANCE: f64 = 1e-9;
/// Winding sums must be within this many turns of an integer.
pub const WINDING_TOLERANCE: f64 = 1e-6;
/// Sample count of the chord-length scan along each starting parameter.
const CHORD_SCAN: usize = 1024;

/// A closed polyline in `ℂ × S¹`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryLoop {
    /// Samples `(plane point, unit direction)`; the last repeats the first.
    pub points: Vec<(Complex64, Complex64)>,
    /// Chord length defining the level set (tube radius `ε^{2n}` in `|pow|`).
    pub epsilon: f64,
    /// Point the first component is wound around.
    pub base_point: Complex64,
}

impl BoundaryLoop {
    /// Closes `points` and normalizes the second entries to unit modulus.
    pub fn closed(
        mut points: Vec<(Complex64, Complex64)>,
        epsilon: f64,
        base_point: Complex64,
    ) -> Self {
        for p in &mut points {
            p.1 /= p.1.norm();
        }
        if let Some(&first) = points.first() {
            points.push(first);
        }
        BoundaryLoop {
            points,
            epsilon,
            base_point,
        }
    }

    /// The same loop traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        BoundaryLoop {
            points,
            epsilon: self.epsilon,
            base_point: self.base_point,
        }
    }
}

/// A point of `K_n`: `(g, g^{2n})` for `|g| = 1`.
pub fn kn_point(n: u32, g: Complex64) -> Result<(Complex64, Complex64)> {
    let modulus = g.norm();
    if (modulus - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NotUnitModulus(modulus));
    }
    Ok((g, g.powu(2 * n)))
}

/// `K_n` sampled at `samples` uniform points of the circle, wound around 0.
pub fn kn_loop(n: u32, samples: usize) -> Result<BoundaryLoop> {
    let points = (0..samples)
        .map(|m| kn_point(n, Complex64::cis(TAU * m as f64 / samples as f64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryLoop::closed(points, 1.0, Complex64::new(0.0, 0.0)))
}

/// Parameter offset `s ∈ (0, π]` with `|γ(x+s) - γ(x)| = ε`, if unique.
fn chord_partner(model: &CurveModel, x: f64, epsilon: f64) -> Result<f64> {
    let gx = model.eval(x, 0);
    let gap = |s: f64| (model.eval(x + s, 0) - gx).norm() - epsilon;
    let step = PI / CHORD_SCAN as f64;
    let mut bracket = None;
    let mut crossings = 0;
    let mut prev = gap(0.0);
    for m in 1..=CHORD_SCAN {
        let s = step * m as f64;
        let cur = gap(s);
        if (prev < 0.0) != (cur < 0.0) {
            crossings += 1;
            if bracket.is_none() {
                bracket = Some((s - step, s));
            }
        }
        prev = cur;
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Err(Error::EpsilonTooLarge {
            epsilon,
            reason: format!("no chord of that length starts at θ = {x:.6}"),
        });
    };
    if crossings > 1 {
        return Err(Error::EpsilonTooLarge {
            epsilon,
            reason: format!("level set is not a single graph over x (θ = {x:.6})"),
        });
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Traces `{ {x, y} : |γ(y) - γ(x)| = ε }` near the diagonal and maps it by `μ`.
///
/// `samples` starting parameters `x` are spread uniformly; for each the
/// partner `y = x + s(x)` is the unique root of the chord-length equation
/// with `s ∈ (0, π]`. The plane component is the chord midpoint and the
/// circle component is `((γ(y) - γ(x)) / ε)^{2n}`.
pub fn boundary_loop(
    model: &CurveModel,
    n: u32,
    epsilon: f64,
    samples: usize,
) -> Result<BoundaryLoop> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::EpsilonTooLarge {
            epsilon,
            reason: "epsilon must be positive and finite".into(),
        });
    }
    if epsilon >= model.diameter() {
        return Err(Error::EpsilonTooLarge {
            epsilon,
            reason: format!("exceeds the curve diameter {}", model.diameter()),
        });
    }
    let samples = samples.max(8);
    let step = TAU / samples as f64;
    let mut offsets = Vec::with_capacity(samples);
    for m in 0..samples {
        offsets.push(chord_partner(model, step * m as f64, epsilon)?);
    }
    // s(x) must move continuously along the loop
    let max_jump = (0..samples)
        .map(|m| (offsets[(m + 1) % samples] - offsets[m]).abs())
        .fold(0.0, f64::max);
    if max_jump > 2.0 * step {
        return Err(Error::EpsilonTooLarge {
            epsilon,
            reason: format!("chord partner jumps by {max_jump:.4} rad between samples"),
        });
    }
    let points = offsets
        .iter()
        .enumerate()
        .map(|(m, s)| {
            let x = step * m as f64;
            let (gx, gy) = (model.eval(x, 0), model.eval(x + s, 0));
            ((gx + gy) * 0.5, ((gy - gx) / epsilon).powu(2 * n))
        })
        .collect();
    Ok(BoundaryLoop::closed(points, epsilon, model.centroid(1024)))
}

fn winding(values: impl Iterator<Item = Complex64>) -> Result<i64> {
    let values: Vec<Complex64> = values.collect();
    let total: f64 = values.windows(2).map(|w| (w[1] / w[0]).arg()).sum();
    let turns = total / TAU;
    if (turns - turns.round()).abs() > WINDING_TOLERANCE {
        return Err(Error::NonIntegerWinding { turns });
    }
    Ok(turns.round() as i64)
}

/// Winding of the plane component about the base point and of the circle
/// component about 0, from summed principal angle increments.
pub fn winding_invariants(lp: &BoundaryLoop) -> Result<(i64, i64)> {
    let nearest = lp
        .points
        .iter()
        .map(|p| (p.0 - lp.base_point).norm())
        .fold(f64::INFINITY, f64::min);
    if nearest < BASE_POINT_CLEARANCE {
        return Err(Error::BasePointOnLoop { distance: nearest });
    }
    let w1 = winding(lp.points.iter().map(|p| p.0 - lp.base_point))?;
    let w2 = winding(lp.points.iter().map(|p| p.1))?;
    Ok((w1, w2))
}

/// The torus knot `T(2n, 2n-1)` as a closed positive braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusKnotId {
    pub p: u32,
    pub q: u32,
    pub braid_strands: u32,
    /// Generator indices; a negative entry is an inverse generator.
    pub braid_word: Vec<i32>,
}

impl TorusKnotId {
    /// One-line text form: signed generator indices separated by spaces.
    pub fn braid_text(&self) -> String {
        self.braid_word
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn exponent_sum(&self) -> i64 {
        self.braid_word.iter().map(|g| g.signum() as i64).sum()
    }
}

/// `(σ₁ σ₂ … σ_{p-1})^q` with `p = 2n`, `q = 2n - 1`.
pub fn torus_braid_word(n: u32) -> Result<TorusKnotId> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    let (p, q) = (2 * n, 2 * n - 1);
    let braid_word = (0..q).flat_map(|_| 1..p as i32).collect();
    Ok(TorusKnotId {
        p,
        q,
        braid_strands: p,
        braid_word,
    })
}

/// Lower bound `n - 1` on the nonorientable 4-genus of `T(2n, 2n-1)`, due to
/// Batson. This returns the published value; nothing is computed.
pub fn batson_bound(n: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    Ok(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> CurveModel {
        CurveModel::from_fourier(&[Complex64::new(1.0, 0.0)], 1).unwrap()
    }

    #[test]
    fn kn_examples() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(kn_point(3, one).unwrap(), (one, one));
        let g = Complex64::cis(PI / 6.0);
        let (a, b) = kn_point(3, g).unwrap();
        assert_eq!(a, g);
        assert!((b + one).norm() < 1e-14);
        let (_, b) = kn_point(2, Complex64::i()).unwrap();
        assert!((b - one).norm() < 1e-15);
        assert!(matches!(
            kn_point(2, Complex64::new(1.1, 0.0)),
            Err(Error::NotUnitModulus(_))
        ));
    }

    #[test]
    fn kn_loop_windings() {
        for n in 2..=6 {
            let lp = kn_loop(n, 256).unwrap();
            assert_eq!(winding_invariants(&lp).unwrap(), (1, 2 * n as i64));
        }
    }

    #[test]
    fn circle_boundary_loop() {
        let eps = 0.1;
        let lp = boundary_loop(&circle(), 3, eps, 512).unwrap();
        let radius = (1.0 - (eps / 2.0) * (eps / 2.0)).sqrt();
        for (mid, dir) in &lp.points {
            assert!((mid.norm() - radius).abs() < 1e-12);
            assert!((dir.norm() - 1.0).abs() < 1e-12);
        }
        assert_eq!(lp.points.first(), lp.points.last());
        assert_eq!(winding_invariants(&lp).unwrap(), (1, 6));
        assert_eq!(winding_invariants(&lp.reversed()).unwrap(), (-1, -6));
    }

    #[test]
    fn shrinking_epsilon_approaches_curve() {
        let c = circle();
        let lp = boundary_loop(&c, 3, 1e-4, 64).unwrap();
        for (m, (mid, _)) in lp.points.iter().take(64).enumerate() {
            let x = TAU * m as f64 / 64.0;
            assert!((mid - c.eval(x, 0)).norm() < 1e-4);
        }
    }

    #[test]
    fn epsilon_too_large() {
        let c = circle();
        assert!(matches!(
            boundary_loop(&c, 3, 4.0, 64),
            Err(Error::EpsilonTooLarge { .. })
        ));
        assert!(matches!(
            boundary_loop(&c, 3, 10.0, 64),
            Err(Error::EpsilonTooLarge { .. })
        ));
        assert!(matches!(
            boundary_loop(&c, 3, 0.0, 64),
            Err(Error::EpsilonTooLarge { .. })
        ));
    }

    #[test]
    fn base_point_on_loop() {
        let lp = BoundaryLoop::closed(
            vec![
                (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
                (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)),
                (Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)),
            ],
            0.1,
            Complex64::new(0.0, 0.0),
        );
        assert!(matches!(
            winding_invariants(&lp),
            Err(Error::BasePointOnLoop { .. })
        ));
    }

    #[test]
    fn braid_words() {
        let t = torus_braid_word(2).unwrap();
        assert_eq!((t.p, t.q, t.braid_strands), (4, 3, 4));
        assert_eq!(t.braid_word, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert_eq!(t.exponent_sum(), 9);
        assert_eq!(t.braid_text(), "1 2 3 1 2 3 1 2 3");
        assert_eq!(torus_braid_word(3).unwrap().braid_word.len(), 25);
        assert_eq!(torus_braid_word(1), Err(Error::BadN(1)));
    }

    #[test]
    fn bound_values() {
        assert_eq!(batson_bound(3), Ok(2));
        assert_eq!(batson_bound(2), Ok(1));
        assert_eq!(batson_bound(10), Ok(9));
        assert_eq!(batson_bound(1), Err(Error::BadN(1)));
    }
}
