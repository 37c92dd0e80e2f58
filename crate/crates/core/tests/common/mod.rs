#![allow(dead_code)]

use inscribed::CurveModel;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn circle() -> CurveModel {
    CurveModel::from_fourier(&[Complex64::new(1.0, 0.0)], 1).unwrap()
}

/// `a cos θ + i b sin θ`.
pub fn ellipse(a: f64, b: f64) -> CurveModel {
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

/// Unit circle plus a degree-`degree` perturbation with `|c_j| ≤ 0.15·0.6^|j|`.
pub fn random_curve(seed: u64, degree: i64) -> CurveModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coeffs: Vec<Complex64> = (-degree..=degree)
            .map(|j| {
                let base = if j == 1 { 1.0 } else { 0.0 };
                let bound = 0.15 * 0.6f64.powi(j.abs() as i32);
                Complex64::new(base, 0.0)
                    + Complex64::from_polar(
                        rng.gen::<f64>() * bound,
                        rng.gen::<f64>() * std::f64::consts::TAU,
                    )
            })
            .collect();
        if let Ok(m) = CurveModel::from_fourier(&coeffs, -degree) {
            return m;
        }
    }
}
