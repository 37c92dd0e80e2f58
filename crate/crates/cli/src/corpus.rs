//! Seeded random corpora of smooth Jordan curves: the unit circle plus a
//! decaying Fourier perturbation.

use std::f64::consts::TAU;

use inscribed::CurveModel;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Draws per curve before generation gives up.
pub const MAX_RETRIES: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub seed: u64,
    pub degree: usize,
    /// `|c_j| ≤ scale · decay^|j|` for the perturbation.
    pub decay: f64,
    pub scale: f64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 20,
            seed: 42,
            degree: 4,
            decay: 0.6,
            scale: 0.15,
        }
    }
}

impl CorpusSpec {
    fn check(&self) -> Result<(), CliError> {
        if self.degree < 1 {
            return Err(CliError::Usage("corpus degree must be at least 1".into()));
        }
        if !(self.scale >= 0.0 && self.scale.is_finite()) {
            return Err(CliError::Usage(
                "corpus scale must be a nonnegative number".into(),
            ));
        }
        if !(self.decay > 0.0 && self.decay.is_finite()) {
            return Err(CliError::Usage("corpus decay must be positive".into()));
        }
        Ok(())
    }

    /// Generates `count` validated curves from one ChaCha8 stream. Draws that
    /// fail validation are discarded and redrawn.
    pub fn generate(&self) -> Result<Vec<CurveModel>, CliError> {
        self.check()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let degree = self.degree as i64;
        (0..self.count)
            .map(|index| {
                for _ in 0..MAX_RETRIES {
                    let coeffs: Vec<Complex64> = (-degree..=degree)
                        .map(|j| {
                            let base = if j == 1 { 1.0 } else { 0.0 };
                            let bound = self.scale * self.decay.powi(j.abs() as i32);
                            let radius = rng.gen::<f64>() * bound;
                            let phase = rng.gen::<f64>() * TAU;
                            Complex64::new(base, 0.0) + Complex64::from_polar(radius, phase)
                        })
                        .collect();
                    if let Ok(model) = CurveModel::from_fourier(&coeffs, -degree) {
                        return Ok(model);
                    }
                }
                Err(CliError::Generation { index })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let spec = CorpusSpec {
            count: 3,
            ..CorpusSpec::default()
        };
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }

    #[test]
    fn zero_scale_is_the_circle() {
        let spec = CorpusSpec {
            count: 1,
            scale: 0.0,
            ..CorpusSpec::default()
        };
        let m = &spec.generate().unwrap()[0];
        assert_eq!(m.coefficient(1), Complex64::new(1.0, 0.0));
        assert!((m.diameter() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn impossible_corpus_fails() {
        // perturbations this large always self-intersect or stall
        let spec = CorpusSpec {
            count: 1,
            scale: 50.0,
            decay: 1.0,
            degree: 8,
            ..CorpusSpec::default()
        };
        assert!(matches!(
            spec.generate(),
            Err(CliError::Generation { index: 0 })
        ));
    }
}
