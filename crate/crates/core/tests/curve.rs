mod common;

use std::f64::consts::{PI, TAU};

use inscribed::{fit_from_samples, CurveModel, Error};
use num_complex::Complex64;
use proptest::prelude::*;

fn samples(count: usize, f: impl Fn(f64) -> Complex64) -> Vec<Complex64> {
    (0..count)
        .map(|m| f(TAU * m as f64 / count as f64))
        .collect()
}

// Naive DFT, written out independently of the fitting code.
fn dft_coefficient(pts: &[Complex64], j: i64) -> Complex64 {
    let n = pts.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, p) in pts.iter().enumerate() {
        let phase = -(j as f64) * TAU * m as f64 / n;
        acc += p * Complex64::new(phase.cos(), phase.sin());
    }
    acc / n
}

#[test]
fn unit_circle_fit() {
    let pts = samples(256, Complex64::cis);
    assert!((dft_coefficient(&pts, 1) - 1.0).norm() < 1e-12);
    let model = fit_from_samples(&pts, 8).unwrap();
    for j in -8..=8 {
        let want = if j == 1 { 1.0 } else { 0.0 };
        assert!(
            (model.coefficient(j) - want).norm() <= 1e-12,
            "c_{j} = {}",
            model.coefficient(j)
        );
    }
}

#[test]
fn figure_eight_rejected() {
    let eight = |t: f64| Complex64::new((2.0 * t).sin(), t.sin());
    let pts = samples(256, eight);
    // brute-force oracle: two samples far apart in parameter that coincide
    let mut closest = f64::INFINITY;
    for a in 0..256 {
        for b in a + 1..256 {
            let gap = (b - a).min(256 - (b - a)) as f64 * TAU / 256.0;
            if gap >= 0.1 {
                closest = closest.min((pts[a] - pts[b]).norm());
            }
        }
    }
    assert!(closest < 1e-12);
    assert!(matches!(
        fit_from_samples(&pts, 8),
        Err(Error::SelfIntersecting { .. })
    ));
}

#[test]
fn crossing_between_grid_points_is_caught() {
    // a figure eight whose crossing parameters are off the validation grid
    let shift = 0.5 * TAU / 256.0;
    // sin 2θ + i sin θ = (i/2)e^{-2iθ} - (1/2)e^{-iθ} + (1/2)e^{iθ} - (i/2)e^{2iθ}
    let coeffs = [
        Complex64::new(0.0, 0.5) * Complex64::cis(-2.0 * shift),
        Complex64::new(-0.5, 0.0) * Complex64::cis(-shift),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0) * Complex64::cis(shift),
        Complex64::new(0.0, -0.5) * Complex64::cis(2.0 * shift),
    ];
    // crossing at θ = -shift and π - shift, both mid-cell
    let m = CurveModel::from_fourier_unvalidated(&coeffs, -2).unwrap();
    assert!((m.eval(-shift, 0) - m.eval(PI - shift, 0)).norm() < 1e-12);
    assert!(matches!(
        m.validate_jordan(256, 0.1),
        Err(Error::SelfIntersecting { .. })
    ));
}

#[test]
fn interpolation_regime_reproduces_samples() {
    for degree in [1usize, 3, 6, 10] {
        let count = 2 * degree + 1;
        let pts = samples(count, |t| {
            Complex64::new(
                1.3 * t.cos() + 0.1 * (3.0 * t).sin(),
                t.sin() + 0.05 * (2.0 * t).cos(),
            )
        });
        let model = fit_from_samples(&pts, degree).unwrap();
        for (m, p) in pts.iter().enumerate() {
            let t = TAU * m as f64 / count as f64;
            assert!((model.eval(t, 0) - p).norm() <= 1e-9);
        }
    }
}

#[test]
fn clockwise_samples_reversed() {
    let pts = samples(64, |t| Complex64::cis(-t));
    let model = fit_from_samples(&pts, 4).unwrap();
    assert!(model.was_reversed());
    assert!(model.signed_area() > 0.0);
    assert!((model.signed_area() - PI).abs() < 1e-12);
}

fn arb_model() -> impl Strategy<Value = CurveModel> {
    any::<u64>().prop_map(|seed| common::random_curve(seed, 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn periodic_in_theta(model in arb_model(), theta in -10.0f64..10.0) {
        for order in 0..=2 {
            let a = model.eval(theta, order);
            let b = model.eval(theta + TAU, order);
            prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn derivatives_match_centered_differences(model in arb_model()) {
        let h = 1e-5;
        for m in 0..100 {
            let theta = TAU * (m as f64 + 0.37) / 100.0;
            for order in 1..=2 {
                let exact = model.eval(theta, order);
                let fd = (model.eval(theta + h, order - 1) - model.eval(theta - h, order - 1)) / (2.0 * h);
                prop_assert!((exact - fd).norm() <= 1e-6 * (1.0 + exact.norm()));
            }
        }
    }
}
