//! Smooth Jordan curves as truncated trigonometric series.
//!
//! A curve is stored as `γ(θ) = Σ_{j=-J..J} c_j e^{ijθ}`, which is exactly
//! periodic, infinitely differentiable and has closed-form derivatives.
//! Models are validated on a parameter grid: the speed `|γ'|` must stay away
//! from zero and parameters at least `δ_sep` apart on the circle must map to
//! distinct points.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Grid used when a model is validated on construction.
pub const DEFAULT_VALIDATION_GRID: usize = 256;
/// Minimum circle distance between parameters compared by the chord check.
pub const DEFAULT_SEPARATION: f64 = 0.1;
/// Speed threshold, relative to the curve diameter.
pub const SPEED_THRESHOLD: f64 = 1e-6;
/// Chord threshold, relative to the curve diameter.
pub const CHORD_THRESHOLD: f64 = 1e-6;
/// Minimum number of points in a `samples` curve file.
pub const MIN_FILE_SAMPLES: usize = 16;

/// On-disk description of a curve.
///
/// Fourier coefficients are listed for `j = j_min ..= j_min + len - 1`; sample
/// lists are treated as uniformly spaced in parameter and must not repeat
/// their first point at the end.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CurveSpec {
    Fourier { coeffs: Vec<[f64; 2]>, j_min: i64 },
    Samples { points: Vec<[f64; 2]> },
}

impl CurveSpec {
    /// Default fitting degree for a sample list of length `len`.
    pub fn default_degree(len: usize) -> usize {
        ((len.saturating_sub(1)) / 2).clamp(1, 16)
    }

    /// Builds and validates the model. `degree` is only consulted for sample
    /// lists and defaults to [`CurveSpec::default_degree`].
    pub fn to_model(&self, degree: Option<usize>) -> Result<CurveModel> {
        match self {
            CurveSpec::Fourier { coeffs, j_min } => {
                let coeffs: Vec<Complex64> =
                    coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect();
                CurveModel::from_fourier(&coeffs, *j_min)
            }
            CurveSpec::Samples { points } => {
                if points.len() < MIN_FILE_SAMPLES {
                    return Err(Error::InvalidSpec(format!(
                        "{} samples given, at least {MIN_FILE_SAMPLES} required",
                        points.len()
                    )));
                }
                if points.first() == points.last() {
                    return Err(Error::InvalidSpec(
                        "first sample repeated at the end".into(),
                    ));
                }
                if points.iter().flatten().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidSpec("non-finite sample".into()));
                }
                let samples: Vec<Complex64> =
                    points.iter().map(|p| Complex64::new(p[0], p[1])).collect();
                let degree = degree.unwrap_or_else(|| Self::default_degree(samples.len()));
                fit_from_samples(&samples, degree)
            }
        }
    }
}

/// Result of [`CurveModel::validate_jordan`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub grid_size: usize,
    pub separation: f64,
    pub diameter: f64,
    pub min_speed: f64,
    pub min_chord: f64,
    pub signed_area: f64,
    /// Set when the input was clockwise and the parameter was reversed.
    pub reversed: bool,
}

/// An immutable trigonometric-polynomial curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveModel {
    degree: usize,
    // coefficient of e^{ijθ} at index j + degree, for value, γ' and γ''
    coeffs: [Vec<Complex64>; 3],
    diameter: f64,
    reversed: bool,
    report: Option<ValidationReport>,
}

impl CurveModel {
    /// Builds a model from coefficients `c_{j_min}, c_{j_min+1}, ...` and
    /// validates it with the default grid. Clockwise input is reversed.
    pub fn from_fourier(coeffs: &[Complex64], j_min: i64) -> Result<Self> {
        let mut model = Self::from_fourier_unvalidated(coeffs, j_min)?;
        if model.signed_area() < 0.0 {
            model = model.reversed_orientation();
        }
        let report = model.validate_jordan(DEFAULT_VALIDATION_GRID, DEFAULT_SEPARATION)?;
        model.report = Some(report);
        Ok(model)
    }

    /// Builds a model without orientation fix-up or validation.
    pub fn from_fourier_unvalidated(coeffs: &[Complex64], j_min: i64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("no coefficients".into()));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidSpec("non-finite coefficient".into()));
        }
        let j_max = j_min + coeffs.len() as i64 - 1;
        let degree = j_min.abs().max(j_max.abs()) as usize;
        if degree < 1 {
            return Err(Error::InvalidSpec("degree must be at least 1".into()));
        }
        let mut values = vec![Complex64::new(0.0, 0.0); 2 * degree + 1];
        for (offset, c) in coeffs.iter().enumerate() {
            let j = j_min + offset as i64;
            values[(j + degree as i64) as usize] = *c;
        }
        Ok(Self::from_symmetric(values, false))
    }

    fn from_symmetric(values: Vec<Complex64>, reversed: bool) -> Self {
        let degree = (values.len() - 1) / 2;
        let first: Vec<Complex64> = values
            .iter()
            .enumerate()
            .map(|(idx, c)| c * Complex64::new(0.0, idx as f64 - degree as f64))
            .collect();
        let second: Vec<Complex64> = values
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let j = idx as f64 - degree as f64;
                c * (-j * j)
            })
            .collect();
        let mut model = CurveModel {
            degree,
            coeffs: [values, first, second],
            diameter: 0.0,
            reversed,
            report: None,
        };
        model.diameter = model.grid_diameter(DEFAULT_VALIDATION_GRID);
        model
    }

    /// The same curve traversed with `θ ↦ -θ` (swaps `c_j` and `c_{-j}`).
    pub fn reversed_orientation(&self) -> Self {
        let mut values = self.coeffs[0].clone();
        values.reverse();
        Self::from_symmetric(values, !self.reversed)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `e^{ijθ}`; zero outside `-J..=J`.
    pub fn coefficient(&self, j: i64) -> Complex64 {
        let idx = j + self.degree as i64;
        if idx < 0 || idx as usize >= self.coeffs[0].len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[0][idx as usize]
        }
    }

    /// Coefficients for `j = -J ..= J`.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs[0]
    }

    /// Largest distance between points of a 256-sample grid.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Cached report from construction, if the model was validated.
    pub fn report(&self) -> Option<&ValidationReport> {
        self.report.as_ref()
    }

    /// Whether the input was clockwise and got reversed on ingestion.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Signed enclosed area `π Σ j |c_j|²`; positive for counterclockwise curves.
    pub fn signed_area(&self) -> f64 {
        self.coeffs[0]
            .iter()
            .enumerate()
            .map(|(idx, c)| (idx as f64 - self.degree as f64) * c.norm_sqr())
            .sum::<f64>()
            * PI
    }

    /// Value (`order = 0`), first or second derivative at `theta`.
    ///
    /// # Panics
    /// If `order > 2`.
    pub fn eval(&self, theta: f64, order: usize) -> Complex64 {
        assert!(order <= 2, "derivative order {order} not supported");
        let z = Complex64::cis(theta);
        Self::horner(&self.coeffs[order], z) * Complex64::cis(-(self.degree as f64) * theta)
    }

    /// `(γ(θ), γ'(θ))` sharing one set of trigonometric evaluations.
    pub fn eval_with_derivative(&self, theta: f64) -> (Complex64, Complex64) {
        let z = Complex64::cis(theta);
        let shift = Complex64::cis(-(self.degree as f64) * theta);
        (
            Self::horner(&self.coeffs[0], z) * shift,
            Self::horner(&self.coeffs[1], z) * shift,
        )
    }

    fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Points `γ(2πm/size)` for `m = 0..size`.
    pub fn sample(&self, size: usize) -> Vec<Complex64> {
        (0..size)
            .map(|m| self.eval(TAU * m as f64 / size as f64, 0))
            .collect()
    }

    /// Mean of the uniform parameter samples; used as the interior base point.
    pub fn centroid(&self, size: usize) -> Complex64 {
        let pts = self.sample(size);
        pts.iter().sum::<Complex64>() / pts.len() as f64
    }

    fn grid_diameter(&self, size: usize) -> f64 {
        let pts = self.sample(size);
        let mut best = 0.0f64;
        for (a, p) in pts.iter().enumerate() {
            for q in &pts[a + 1..] {
                best = best.max((p - q).norm());
            }
        }
        best
    }

    /// Checks the Jordan-curve hypotheses on a `grid_size` parameter grid.
    ///
    /// Fails with [`Error::DegenerateVelocity`] when `min |γ'|` is at most
    /// `1e-6 · diameter`, and with [`Error::SelfIntersecting`] when two grid
    /// parameters at circle distance `≥ separation` are closer than
    /// `1e-6 · diameter` or the grid polyline crosses itself.
    pub fn validate_jordan(&self, grid_size: usize, separation: f64) -> Result<ValidationReport> {
        if grid_size < 64 {
            return Err(Error::GridTooSmall(grid_size));
        }
        let thetas: Vec<f64> = (0..grid_size)
            .map(|m| TAU * m as f64 / grid_size as f64)
            .collect();
        let pts: Vec<Complex64> = thetas.iter().map(|&t| self.eval(t, 0)).collect();

        let mut diameter = 0.0f64;
        for (a, p) in pts.iter().enumerate() {
            for q in &pts[a + 1..] {
                diameter = diameter.max((p - q).norm());
            }
        }
        let scale: f64 = self.coeffs[0].iter().map(|c| c.norm()).sum();
        if !(diameter > 1e-12 * scale) {
            return Err(Error::DegenerateCurve);
        }

        let (min_speed, slow_theta) = thetas.iter().map(|&t| (self.eval(t, 1).norm(), t)).fold(
            (f64::INFINITY, 0.0),
            |best, cur| if cur.0 < best.0 { cur } else { best },
        );
        let speed_threshold = SPEED_THRESHOLD * diameter;
        if !(min_speed > speed_threshold) {
            return Err(Error::DegenerateVelocity {
                min_speed,
                theta: slow_theta,
                threshold: speed_threshold,
            });
        }

        let mut min_chord = f64::INFINITY;
        let mut closest = (0.0, 0.0);
        for a in 0..grid_size {
            for b in a + 1..grid_size {
                let gap = (thetas[b] - thetas[a]).min(TAU - (thetas[b] - thetas[a]));
                if gap < separation {
                    continue;
                }
                let chord = (pts[a] - pts[b]).norm();
                if chord < min_chord {
                    min_chord = chord;
                    closest = (thetas[a], thetas[b]);
                }
            }
        }
        if !(min_chord > CHORD_THRESHOLD * diameter) {
            return Err(Error::SelfIntersecting {
                chord: min_chord,
                theta1: closest.0,
                theta2: closest.1,
            });
        }
        if let Some((a, b)) = polyline_crossing(&pts) {
            return Err(Error::SelfIntersecting {
                chord: 0.0,
                theta1: thetas[a],
                theta2: thetas[b],
            });
        }

        Ok(ValidationReport {
            grid_size,
            separation,
            diameter,
            min_speed,
            min_chord,
            signed_area: self.signed_area(),
            reversed: self.reversed,
        })
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// First pair of non-adjacent closed-polyline edges that properly cross.
fn polyline_crossing(pts: &[Complex64]) -> Option<(usize, usize)> {
    let m = pts.len();
    for a in 0..m {
        let (p0, p1) = (pts[a], pts[(a + 1) % m]);
        for b in a + 2..m {
            if a == 0 && b == m - 1 {
                continue;
            }
            let (q0, q1) = (pts[b], pts[(b + 1) % m]);
            let d1 = cross(p1 - p0, q0 - p0);
            let d2 = cross(p1 - p0, q1 - p0);
            let d3 = cross(q1 - q0, p0 - q0);
            let d4 = cross(q1 - q0, p1 - q0);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                return Some((a, b));
            }
        }
    }
    None
}

/// Trigonometric least-squares fit of degree `degree` to uniformly
/// parameterized samples, followed by validation.
///
/// With `N ≥ 2J + 1` samples the exponentials `e^{ijθ_m}`, `|j| ≤ J`, are
/// orthogonal on the sample grid, so the least-squares coefficients are the
/// discrete Fourier coefficients; `N = 2J + 1` interpolates.
pub fn fit_from_samples(samples: &[Complex64], degree: usize) -> Result<CurveModel> {
    if degree < 1 {
        return Err(Error::InvalidSpec("degree must be at least 1".into()));
    }
    let needed = 2 * degree + 1;
    if samples.len() < needed {
        return Err(Error::TooFewSamples {
            got: samples.len(),
            needed,
            degree,
        });
    }
    let len = samples.len() as i64;
    let count = len as f64;
    let coeffs: Vec<Complex64> = (-(degree as i64)..=degree as i64)
        .map(|j| {
            samples
                .iter()
                .enumerate()
                .map(|(m, p)| {
                    p * Complex64::cis(-TAU * (j * m as i64).rem_euclid(len) as f64 / count)
                })
                .sum::<Complex64>()
                / count
        })
        .collect();
    CurveModel::from_fourier(&coeffs, -(degree as i64))
}
