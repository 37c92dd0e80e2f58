//! Search for inscribed rectangles of a fixed family.
//!
//! For family `(n, k)` the unknowns are four curve parameters `(x, w, y, z)`
//! and the equations are
//!
//! ```text
//! f1 + i f2 = ((γ(x)+γ(y)) - (γ(w)+γ(z))) / 2D
//! f3        = (|γ(y)-γ(x)| - |γ(z)-γ(w)|) / D
//! f4        = arg[(γ(z)-γ(w)) / (γ(y)-γ(x))] - πk/n    (mod π, in (-π/2, π/2])
//! ```
//!
//! with `D` the curve diameter. A root is a pair of equal chords with common
//! midpoint meeting at angle `πk/n`, i.e. a point where `μ` takes the same
//! value on two distinct pairs. Seeds come from local minima of `|f|²` on a
//! product of canonical pair grids; each seed is polished by damped Newton.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{CurveModel, DEFAULT_SEPARATION, DEFAULT_VALIDATION_GRID};
use crate::error::{Error, Result};
use crate::mobius::{canonicalize, wrap_angle};
use crate::rectangle::{
    dedup, family_ratios, rect_from_pairs, AspectFamily, Rectangle, DIAGONAL_TOLERANCE,
};

/// Condition number above which the Newton system is treated as singular.
pub const SINGULAR_CONDITION: f64 = 1e12;
/// Smallest backtracking step.
pub const MIN_STEP: f64 = 1.0 / 1024.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Seed grid points per circle parameter.
    pub grid: usize,
    /// Max-norm residual accepted as a root (normalized by diameter).
    pub tol_residual: f64,
    pub max_iter: usize,
    /// Initial Newton step length, halved on backtracking.
    pub damping: f64,
    /// Minimum strip distance between the two diagonals' parameter pairs.
    pub separation: f64,
    /// Zero keeps the seed grid at `θ = 0`; other values shift it by a
    /// seeded random fraction of a cell.
    pub seed: u64,
    /// Cap on refined seeds per family, lowest seed residual first.
    pub max_seeds: usize,
    /// Parameter distance under which two roots are the same rectangle.
    pub dedup_tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            grid: 48,
            tol_residual: 1e-10,
            max_iter: 50,
            damping: 1.0,
            separation: 0.15,
            seed: 0,
            max_seeds: 4096,
            dedup_tol: 1e-6,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if self.grid < 8 {
            return bad("grid must be at least 8");
        }
        if !(self.tol_residual > 0.0) {
            return bad("tol_residual must be positive");
        }
        if !(self.separation > 0.0) {
            return bad("separation must be positive");
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return bad("damping must lie in (0, 1]");
        }
        if self.max_iter == 0 || self.max_seeds == 0 {
            return bad("max_iter and max_seeds must be positive");
        }
        if !(self.dedup_tol >= 0.0) {
            return bad("dedup_tol must be nonnegative");
        }
        Ok(())
    }
}

/// The four equations evaluated at a parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemResidual {
    pub f: [f64; 4],
}

impl SystemResidual {
    pub fn max_norm(&self) -> f64 {
        self.f.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn norm(&self) -> f64 {
        self.f.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn vector(&self) -> Vector4<f64> {
        Vector4::from(self.f)
    }
}

/// Reduces an angle modulo π into `(-π/2, π/2]`.
pub fn wrap_half_turn(a: f64) -> f64 {
    let r = a - PI * (a / PI).round();
    if r <= -PI / 2.0 {
        r + PI
    } else if r > PI / 2.0 {
        r - PI
    } else {
        r
    }
}

struct Evaluated {
    residual: SystemResidual,
    jacobian: Matrix4<f64>,
}

fn evaluate(model: &CurveModel, family: &AspectFamily, params: &[f64; 4]) -> Result<Evaluated> {
    let diameter = model.diameter();
    let [(gx, vx), (gw, vw), (gy, vy), (gz, vz)] = params.map(|t| model.eval_with_derivative(t));
    let (d1, d2) = (gy - gx, gz - gw);
    let (l1, l2) = (d1.norm(), d2.norm());
    let shortest = l1.min(l2);
    if !(shortest >= DIAGONAL_TOLERANCE * diameter) {
        return Err(Error::DegenerateDiagonal { length: shortest });
    }
    let mid = ((gx + gy) - (gw + gz)) / (2.0 * diameter);
    let angle = wrap_half_turn((d2 / d1).arg() - family.diagonal_angle());
    let residual = SystemResidual {
        f: [mid.re, mid.im, (l1 - l2) / diameter, angle],
    };

    let half = 0.5 / diameter;
    let mid_cols = [vx * half, -vw * half, vy * half, -vz * half];
    // d|d|/dt = Re(conj(d) d') / |d|, d arg(d)/dt = Im(d'/d)
    let len_cols = [
        -(d1.conj() * vx).re / l1,
        (d2.conj() * vw).re / l2,
        (d1.conj() * vy).re / l1,
        -(d2.conj() * vz).re / l2,
    ];
    let ang_cols = [(vx / d1).im, -(vw / d2).im, -(vy / d1).im, (vz / d2).im];
    let mut jacobian = Matrix4::zeros();
    for c in 0..4 {
        jacobian[(0, c)] = mid_cols[c].re;
        jacobian[(1, c)] = mid_cols[c].im;
        jacobian[(2, c)] = len_cols[c] / diameter;
        jacobian[(3, c)] = ang_cols[c];
    }
    Ok(Evaluated { residual, jacobian })
}

/// Residual of the rectangle system at `params = (x, w, y, z)`.
pub fn residual(
    model: &CurveModel,
    family: &AspectFamily,
    params: &[f64; 4],
) -> Result<SystemResidual> {
    evaluate(model, family, params).map(|e| e.residual)
}

/// Analytic 4×4 Jacobian; column `c` is the derivative along `params[c]`.
pub fn system_jacobian(
    model: &CurveModel,
    family: &AspectFamily,
    params: &[f64; 4],
) -> Result<Matrix4<f64>> {
    evaluate(model, family, params).map(|e| e.jacobian)
}

fn condition_number(jac: &Matrix4<f64>) -> f64 {
    let sv = jac.singular_values();
    let (hi, lo) = (sv.max(), sv.min());
    if lo > 0.0 {
        hi / lo
    } else {
        f64::INFINITY
    }
}

/// Result of a successful [`newton_refine`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NewtonOutcome {
    pub params: [f64; 4],
    pub residual: SystemResidual,
    /// Max-norm of the final residual.
    pub residual_norm: f64,
    pub iterations: usize,
    /// Condition number of the Jacobian at the returned point exceeds
    /// [`SINGULAR_CONDITION`] (e.g. a continuum of rectangles on a circle).
    pub rank_deficient: bool,
}

/// Damped Newton iteration on the rectangle system.
///
/// Steps solve `J δ = -f` in the least-squares sense through the SVD with
/// singular values below `1e-12 σ_max` dropped, so rank-deficient roots are
/// approached along the minimum-norm direction. Each step starts at
/// `config.damping` and is halved until `|f|₂` decreases, down to `2⁻¹⁰`.
pub fn newton_refine(
    model: &CurveModel,
    family: &AspectFamily,
    start: &[f64; 4],
    config: &SearchConfig,
) -> Result<NewtonOutcome> {
    let mut params = start.map(wrap_angle);
    let mut current = evaluate(model, family, &params)?;
    let mut iterations = 0;
    loop {
        let norm = current.residual.max_norm();
        if norm <= config.tol_residual {
            return Ok(NewtonOutcome {
                params,
                residual: current.residual,
                residual_norm: norm,
                iterations,
                rank_deficient: condition_number(&current.jacobian) > SINGULAR_CONDITION,
            });
        }
        if iterations >= config.max_iter {
            let condition = condition_number(&current.jacobian);
            if condition > SINGULAR_CONDITION {
                return Err(Error::SingularJacobian { condition });
            }
            return Err(Error::NoConvergence {
                iterations,
                residual: norm,
            });
        }

        let svd = current.jacobian.svd(true, true);
        let cutoff = svd.singular_values.max() * 1e-12;
        let step = match svd.solve(&(-current.residual.vector()), cutoff) {
            Ok(step) if step.iter().all(|v| v.is_finite()) => step,
            _ => {
                return Err(Error::SingularJacobian {
                    condition: condition_number(&current.jacobian),
                })
            }
        };

        let merit = current.residual.norm();
        let mut t = config.damping;
        let mut accepted = None;
        while t >= MIN_STEP {
            let trial: [f64; 4] = std::array::from_fn(|c| wrap_angle(params[c] + t * step[c]));
            if let Ok(next) = evaluate(model, family, &trial) {
                let decreased = next.residual.norm() < merit;
                if decreased || t / 2.0 < MIN_STEP {
                    accepted = Some((trial, next));
                    break;
                }
            }
            t /= 2.0;
        }
        let Some((trial, next)) = accepted else {
            return Err(Error::NoConvergence {
                iterations,
                residual: norm,
            });
        };
        params = trial;
        current = next;
        iterations += 1;
    }
}

/// Non-fatal conditions noticed while searching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchWarning {
    /// A family produced no rectangle.
    EmptyFamily { k: u32 },
    /// No family produced a rectangle. For a smooth Jordan curve at least one
    /// must exist, so this is a solver shortfall.
    NoRectangles,
    /// Some roots had a Jacobian condition number above 1e12.
    NearSingular { k: u32, count: usize },
}

/// Rectangles of one family plus search statistics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySearch {
    pub family: AspectFamily,
    pub rectangles: Vec<Rectangle>,
    pub seeds: usize,
    pub near_singular: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: u32,
    pub families: Vec<FamilySearch>,
    pub warnings: Vec<SearchWarning>,
}

impl SearchOutcome {
    /// All rectangles, sorted by `(k, residual)`.
    pub fn rectangles(&self) -> Vec<Rectangle> {
        self.families
            .iter()
            .flat_map(|f| f.rectangles.iter().cloned())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.families.iter().all(|f| f.rectangles.is_empty())
    }
}

// Chord between grid angles i and i + span.
#[derive(Clone, Copy)]
struct GridChord {
    xi: usize,
    yi: usize,
    mid: Complex64,
    len: f64,
    dir: f64,
    valid: bool,
}

struct SeedGrid {
    size: usize,
    angles: Vec<f64>,
    chords: Vec<GridChord>,
    neighbors: Vec<Vec<usize>>,
}

impl SeedGrid {
    fn new(model: &CurveModel, size: usize, offset: f64) -> Self {
        let h = TAU / size as f64;
        let angles: Vec<f64> = (0..size)
            .map(|i| wrap_angle(offset + i as f64 * h))
            .collect();
        let pts: Vec<Complex64> = angles.iter().map(|&t| model.eval(t, 0)).collect();
        let spans = size / 2;
        let floor = DIAGONAL_TOLERANCE * model.diameter();
        let id = |i: usize, s: usize| i * spans + (s - 1);

        let mut chords = Vec::with_capacity(size * spans);
        for i in 0..size {
            for s in 1..=spans {
                let j = (i + s) % size;
                let d = pts[j] - pts[i];
                chords.push(GridChord {
                    xi: i,
                    yi: j,
                    mid: (pts[i] + pts[j]) * 0.5,
                    len: d.norm(),
                    dir: d.arg(),
                    valid: d.norm() >= floor,
                });
            }
        }

        // canonical id of the chord (i + a, span + b), if off the diagonal
        let shifted = |i: usize, s: usize, a: isize, b: isize| -> Option<usize> {
            let i2 = (i as isize + a).rem_euclid(size as isize) as usize;
            let s2 = s as isize + b;
            if s2 <= 0 || s2 >= size as isize {
                return None;
            }
            let s2 = s2 as usize;
            if s2 <= spans {
                Some(id(i2, s2))
            } else {
                Some(id((i2 + s2) % size, size - s2))
            }
        };
        let mut neighbors = Vec::with_capacity(chords.len());
        for i in 0..size {
            for s in 1..=spans {
                let mut list = Vec::with_capacity(8);
                for a in -1..=1 {
                    for b in -1..=1 {
                        if a == 0 && b == 0 {
                            continue;
                        }
                        if let Some(nb) = shifted(i, s, a, b) {
                            if nb != id(i, s) && !list.contains(&nb) {
                                list.push(nb);
                            }
                        }
                    }
                }
                neighbors.push(list);
            }
        }
        SeedGrid {
            size,
            angles,
            chords,
            neighbors,
        }
    }

    fn steps_apart(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b);
        d.min(self.size - d)
    }

    fn separated(&self, p: usize, q: usize, min_steps: f64) -> bool {
        let (a, b) = (&self.chords[p], &self.chords[q]);
        if !(a.valid && b.valid) {
            return false;
        }
        let straight = self
            .steps_apart(a.xi, b.xi)
            .max(self.steps_apart(a.yi, b.yi));
        let crossed = self
            .steps_apart(a.xi, b.yi)
            .max(self.steps_apart(a.yi, b.xi));
        straight.min(crossed) as f64 >= min_steps
    }

    fn start(&self, p: usize, q: usize) -> [f64; 4] {
        let (a, b) = (&self.chords[p], &self.chords[q]);
        [
            self.angles[a.xi],
            self.angles[b.xi],
            self.angles[a.yi],
            self.angles[b.yi],
        ]
    }

    /// Grid points `(p, q)` whose `|f|²` is no larger than at any of the 80
    /// neighbors, sorted by that value.
    fn local_minima(
        &self,
        family: &AspectFamily,
        diameter: f64,
        separation: f64,
    ) -> Vec<(f64, usize, usize)> {
        let count = self.chords.len();
        let angle = family.diagonal_angle();
        let min_steps = separation * self.size as f64 / TAU - 1e-9;
        let merit: Vec<f64> = (0..count * count)
            .into_par_iter()
            .map(|idx| {
                let (p, q) = (idx / count, idx % count);
                if !self.separated(p, q, min_steps) {
                    return f64::INFINITY;
                }
                let (a, b) = (&self.chords[p], &self.chords[q]);
                let mid = (a.mid - b.mid).norm() / diameter;
                let len = (a.len - b.len) / diameter;
                let ang = wrap_half_turn(b.dir - a.dir - angle);
                mid * mid + len * len + ang * ang
            })
            .collect();

        let mut minima: Vec<(f64, usize, usize)> = (0..count * count)
            .into_par_iter()
            .filter_map(|idx| {
                let value = merit[idx];
                if !value.is_finite() {
                    return None;
                }
                let (p, q) = (idx / count, idx % count);
                let q_near = || std::iter::once(q).chain(self.neighbors[q].iter().copied());
                for np in std::iter::once(p).chain(self.neighbors[p].iter().copied()) {
                    for nq in q_near() {
                        if merit[np * count + nq] < value {
                            return None;
                        }
                    }
                }
                Some((value, p, q))
            })
            .collect();
        minima.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        minima
    }
}

fn ensure_validated(model: &CurveModel) -> Result<()> {
    if model.report().is_none() {
        model.validate_jordan(DEFAULT_VALIDATION_GRID, DEFAULT_SEPARATION)?;
    }
    Ok(())
}

fn grid_offset(config: &SearchConfig) -> f64 {
    if config.seed == 0 {
        0.0
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.gen::<f64>() * TAU / config.grid as f64
    }
}

/// Searches one family. Every returned rectangle has residual at most
/// `config.tol_residual` and family `family.k`.
pub fn find_family(
    model: &CurveModel,
    family: &AspectFamily,
    config: &SearchConfig,
) -> Result<FamilySearch> {
    config.validate()?;
    ensure_validated(model)?;
    let grid = SeedGrid::new(model, config.grid, grid_offset(config));
    family_search(model, family, config, &grid)
}

fn family_search(
    model: &CurveModel,
    family: &AspectFamily,
    config: &SearchConfig,
    grid: &SeedGrid,
) -> Result<FamilySearch> {
    let mut seeds = grid.local_minima(family, model.diameter(), config.separation);
    seeds.truncate(config.max_seeds);

    let refined: Vec<(Rectangle, bool)> = seeds
        .par_iter()
        .filter_map(|&(_, p, q)| {
            let outcome = newton_refine(model, family, &grid.start(p, q), config).ok()?;
            let [x, w, y, z] = outcome.params;
            let mut rect = rect_from_pairs(
                model,
                &canonicalize(x, y),
                &canonicalize(w, z),
                family.n,
                config.separation,
            )
            .ok()?;
            rect.residual = rect.residual.max(outcome.residual_norm);
            (rect.family.k == family.k && rect.residual <= config.tol_residual)
                .then_some((rect, outcome.rank_deficient))
        })
        .collect();

    let near_singular = refined.iter().filter(|(_, flagged)| *flagged).count();
    let mut rectangles = dedup(
        refined.into_iter().map(|(r, _)| r).collect(),
        config.dedup_tol,
    );
    rectangles.sort_by(|a, b| {
        a.residual
            .total_cmp(&b.residual)
            .then(a.params[0].total_cmp(&b.params[0]))
    });
    Ok(FamilySearch {
        family: *family,
        rectangles,
        seeds: seeds.len(),
        near_singular,
    })
}

/// Searches every family of `n`; output is ordered by `(k, residual)`.
/// An empty result is reported as a warning, not an error.
pub fn find_rectangles(model: &CurveModel, n: u32, config: &SearchConfig) -> Result<SearchOutcome> {
    let families = family_ratios(n)?;
    find_families(model, n, &families, config)
}

/// Like [`find_rectangles`] restricted to the given families of `n`.
pub fn find_families(
    model: &CurveModel,
    n: u32,
    families: &[AspectFamily],
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    config.validate()?;
    ensure_validated(model)?;
    if n < 2 {
        return Err(Error::BadN(n));
    }
    let grid = SeedGrid::new(model, config.grid, grid_offset(config));
    let mut results = Vec::with_capacity(families.len());
    let mut warnings = Vec::new();
    for family in families {
        if family.n != n {
            return Err(Error::BadK { n, k: family.k });
        }
        let search = family_search(model, family, config, &grid)?;
        if search.rectangles.is_empty() {
            warnings.push(SearchWarning::EmptyFamily { k: family.k });
        }
        if search.near_singular > 0 {
            warnings.push(SearchWarning::NearSingular {
                k: family.k,
                count: search.near_singular,
            });
        }
        results.push(search);
    }
    let outcome = SearchOutcome {
        n,
        families: results,
        warnings,
    };
    let mut outcome = outcome;
    if outcome.is_empty() {
        outcome.warnings.push(SearchWarning::NoRectangles);
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> CurveModel {
        CurveModel::from_fourier(&[Complex64::new(1.0, 0.0)], 1).unwrap()
    }

    fn ellipse(a: f64, b: f64) -> CurveModel {
        CurveModel::from_fourier(
            &[
                Complex64::new((a - b) / 2.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new((a + b) / 2.0, 0.0),
            ],
            -1,
        )
        .unwrap()
    }

    #[test]
    fn wrap_half_turn_range() {
        for a in [-7.0, -PI / 2.0, -0.3, 0.0, PI / 2.0, 2.0, 9.5] {
            let w = wrap_half_turn(a);
            assert!(w > -PI / 2.0 && w <= PI / 2.0 + 1e-15);
            let turns = (a - w) / PI;
            assert!((turns - turns.round()).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_circle_root() {
        let fam = AspectFamily::new(3, 2).unwrap();
        let params = [0.0, 2.0 * PI / 3.0, PI, 2.0 * PI / 3.0 + PI];
        let r = residual(&circle(), &fam, &params).unwrap();
        assert!(r.max_norm() < 1e-15, "{r:?}");
    }

    #[test]
    fn identical_pairs_leave_angle_equation() {
        let fam = AspectFamily::new(3, 2).unwrap();
        let r = residual(&ellipse(2.0, 1.0), &fam, &[0.4, 0.4, 2.5, 2.5]).unwrap();
        assert_eq!(&r.f[..3], &[0.0, 0.0, 0.0]);
        assert!((r.f[3] - wrap_half_turn(-2.0 * PI / 3.0)).abs() < 1e-15);
        assert!((r.f[3] - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ellipse_closed_form_roots() {
        // vertices (±2 cos t, ±sin t) with (b/a) tan t = √3
        let t = (2.0 * 3f64.sqrt()).atan();
        let e = ellipse(2.0, 1.0);
        let k2 = AspectFamily::new(3, 2).unwrap();
        let k1 = AspectFamily::new(3, 1).unwrap();
        let r2 = residual(&e, &k2, &[PI - t, t, 2.0 * PI - t, PI + t]).unwrap();
        let r1 = residual(&e, &k1, &[t, PI - t, PI + t, 2.0 * PI - t]).unwrap();
        assert!(r2.max_norm() < 1e-14, "{r2:?}");
        assert!(r1.max_norm() < 1e-14, "{r1:?}");
    }

    #[test]
    fn degenerate_diagonal() {
        let fam = AspectFamily::new(3, 1).unwrap();
        assert!(matches!(
            residual(&circle(), &fam, &[1.0, 2.0, 1.0, 4.0]),
            Err(Error::DegenerateDiagonal { .. })
        ));
    }

    #[test]
    fn config_validation() {
        let mut c = SearchConfig::default();
        assert!(c.validate().is_ok());
        c.grid = 7;
        assert!(c.validate().is_err());
        let c = SearchConfig {
            damping: 0.0,
            ..SearchConfig::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn newton_fixed_point() {
        let fam = AspectFamily::new(3, 2).unwrap();
        let t = (2.0 * 3f64.sqrt()).atan();
        let start = [PI - t, t, 2.0 * PI - t, PI + t];
        let out =
            newton_refine(&ellipse(2.0, 1.0), &fam, &start, &SearchConfig::default()).unwrap();
        assert_eq!(out.iterations, 0);
        assert!(!out.rank_deficient);
    }

    #[test]
    fn newton_near_circle_root() {
        let fam = AspectFamily::new(3, 2).unwrap();
        let exact = [0.0, 2.0 * PI / 3.0, PI, 5.0 * PI / 3.0];
        let start = [
            0.04,
            2.0 * PI / 3.0 - 0.05,
            PI + 0.03,
            5.0 * PI / 3.0 - 0.02,
        ];
        let config = SearchConfig {
            tol_residual: 1e-12,
            ..SearchConfig::default()
        };
        let out = newton_refine(&circle(), &fam, &start, &config).unwrap();
        assert!(out.residual_norm <= 1e-12);
        assert!(out.iterations <= 10, "{} iterations", out.iterations);
        // continuum of rotated rectangles: rank 3 at the root
        assert!(out.rank_deficient);
        let sv = system_jacobian(&circle(), &fam, &exact)
            .unwrap()
            .singular_values();
        assert!(sv.min() < 1e-12 * sv.max());
    }
}
