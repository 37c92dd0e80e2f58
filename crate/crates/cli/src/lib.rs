//! Batch commands around the `inscribed` library: `find`, `verify-corpus`
//! and `knot`.
//!
//! Exit codes: 0 on success, 1 on input or generation errors, 2 when a
//! search finds no rectangle at all (a solver shortfall, since every smooth
//! Jordan curve has one).

pub mod corpus;
pub mod report;
pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;
use inscribed::{
    batson_bound, boundary_loop, family_ratios, find_families, torus_braid_word,
    winding_invariants, AspectFamily, CurveModel, CurveSpec, SearchConfig,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::CorpusSpec;
use crate::report::{to_json, CellReport, CorpusReport, KnotReport, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_EMPTY: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: invalid curve file: {message}")]
    Parse { path: PathBuf, message: String },
    #[error(transparent)]
    Curve(#[from] inscribed::Error),
    #[error("{0}")]
    Usage(String),
    #[error(
        "corpus curve {index}: no valid curve after {} draws",
        corpus::MAX_RETRIES
    )]
    Generation { index: usize },
    #[error("{source}; try --epsilon {suggested}")]
    Epsilon {
        #[source]
        source: inscribed::Error,
        suggested: f64,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

fn read_curve(path: &Path, degree: Option<usize>) -> Result<CurveModel, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let spec: CurveSpec = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    Ok(spec.to_model(degree)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_n(n: u32) -> Result<(), CliError> {
    if n < 2 {
        return Err(inscribed::Error::BadN(n).into());
    }
    Ok(())
}

#[derive(Args, Clone, Debug)]
pub struct FindArgs {
    /// Curve JSON file (`fourier` or `samples`).
    #[arg(long)]
    pub curve: PathBuf,
    #[arg(long)]
    pub n: u32,
    /// Restrict the search to family k.
    #[arg(long)]
    pub k: Option<u32>,
    /// Seed grid points per parameter.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Residual tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Fitting degree for `samples` curves.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Record wall time in the report (makes reports run-dependent).
    #[arg(long)]
    pub timing: bool,
}

pub struct FindOutcome {
    pub report: RunReport,
    pub exit_code: i32,
}

fn search_config(grid: Option<usize>, tol: Option<f64>) -> Result<SearchConfig, CliError> {
    let mut config = SearchConfig::default();
    if let Some(grid) = grid {
        config.grid = grid;
    }
    if let Some(tol) = tol {
        config.tol_residual = tol;
    }
    config.validate()?;
    Ok(config)
}

pub fn run_find(args: &FindArgs) -> Result<FindOutcome, CliError> {
    let started = Instant::now();
    check_n(args.n)?;
    let model = read_curve(&args.curve, args.degree)?;
    let config = search_config(args.grid, args.tol)?;
    let families: Vec<AspectFamily> = match args.k {
        Some(k) => vec![AspectFamily::new(args.n, k)?],
        None => family_ratios(args.n)?,
    };
    let outcome = find_families(&model, args.n, &families, &config)?;
    let mut report = RunReport::new(&model, &outcome, &config);
    if args.timing {
        report.wall_time_s = Some(started.elapsed().as_secs_f64());
    }
    write_output(args.out.as_deref(), &to_json(&report))?;
    if let Some(path) = &args.svg {
        let text = svg::render(&model, &outcome.rectangles());
        fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    let exit_code = if outcome.is_empty() {
        eprintln!(
            "no inscribed rectangle found for n = {} (grid {}, tol {:e}); every smooth Jordan curve has one, \
             so this is a search shortfall: try a finer --grid",
            args.n, config.grid, config.tol_residual
        );
        EXIT_EMPTY
    } else {
        EXIT_OK
    };
    Ok(FindOutcome { report, exit_code })
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub count: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub n_min: u32,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Perturbation degree.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 0.6)]
    pub decay: f64,
    /// Perturbation scale relative to the unit circle.
    #[arg(long, default_value_t = 0.15)]
    pub scale: f64,
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub timing: bool,
}

pub struct VerifyOutcome {
    pub report: CorpusReport,
    pub table: String,
    pub exit_code: i32,
}

pub fn run_verify_corpus(args: &VerifyArgs) -> Result<VerifyOutcome, CliError> {
    let started = Instant::now();
    check_n(args.n_min)?;
    if args.n_max < args.n_min {
        return Err(CliError::Usage(format!(
            "--n-max {} below --n-min {}",
            args.n_max, args.n_min
        )));
    }
    let config = search_config(args.grid, args.tol)?;
    let corpus = CorpusSpec {
        count: args.count,
        seed: args.seed,
        degree: args.degree,
        decay: args.decay,
        scale: args.scale,
    };
    let curves = corpus.generate()?;
    let jobs: Vec<(usize, u32)> = (0..curves.len())
        .flat_map(|c| (args.n_min..=args.n_max).map(move |n| (c, n)))
        .collect();
    let cells = jobs
        .par_iter()
        .map(|&(c, n)| {
            let model = &curves[c];
            let outcome = inscribed::find_rectangles(model, n, &config)?;
            let rects = outcome.rectangles();
            Ok(CellReport {
                curve: c,
                curve_digest: report::curve_digest(model),
                n,
                families_found: outcome
                    .families
                    .iter()
                    .filter(|f| !f.rectangles.is_empty())
                    .map(|f| f.family.k)
                    .collect(),
                rectangles: rects.len(),
                min_residual: rects.iter().map(|r| r.residual).reduce(f64::min),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let empty_cells = cells.iter().filter(|c| c.rectangles == 0).count();
    let mut table = format!(
        "{:>5} {:>3} {:>12} {:>6} {:>14}\n",
        "curve", "n", "families", "rects", "min_residual"
    );
    for cell in &cells {
        let fams: Vec<String> = cell.families_found.iter().map(|k| k.to_string()).collect();
        let residual = cell
            .min_residual
            .map_or("-".to_string(), |r| format!("{r:.3e}"));
        table.push_str(&format!(
            "{:>5} {:>3} {:>12} {:>6} {:>14}\n",
            cell.curve,
            cell.n,
            if fams.is_empty() {
                "none".to_string()
            } else {
                fams.join(",")
            },
            cell.rectangles,
            residual
        ));
    }
    table.push_str(&format!("{} cells, {} empty\n", cells.len(), empty_cells));

    let report = CorpusReport {
        corpus,
        n_min: args.n_min,
        n_max: args.n_max,
        config,
        cells,
        empty_cells,
        wall_time_s: args.timing.then(|| started.elapsed().as_secs_f64()),
    };
    if let Some(path) = &args.out {
        write_output(Some(path), &to_json(&report))?;
    }
    let exit_code = if empty_cells == 0 {
        EXIT_OK
    } else {
        EXIT_EMPTY
    };
    Ok(VerifyOutcome {
        report,
        table,
        exit_code,
    })
}

#[derive(Args, Clone, Debug)]
pub struct KnotArgs {
    #[arg(long)]
    pub curve: PathBuf,
    #[arg(long)]
    pub n: u32,
    /// Chord length of the level set traced near the diagonal.
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the braid word, one line, to this file.
    #[arg(long)]
    pub braid_out: Option<PathBuf>,
    #[arg(long)]
    pub degree: Option<usize>,
}

// Halve epsilon until the loop can be traced.
fn suggest_epsilon(model: &CurveModel, n: u32, epsilon: f64, samples: usize) -> f64 {
    let mut trial = epsilon.min(model.diameter()) / 2.0;
    for _ in 0..40 {
        if boundary_loop(model, n, trial, samples).is_ok() {
            return trial;
        }
        trial /= 2.0;
    }
    trial
}

pub fn run_knot(args: &KnotArgs) -> Result<KnotReport, CliError> {
    check_n(args.n)?;
    let model = read_curve(&args.curve, args.degree)?;
    let lp = match boundary_loop(&model, args.n, args.epsilon, args.samples) {
        Ok(lp) => lp,
        Err(source @ inscribed::Error::EpsilonTooLarge { .. }) => {
            let suggested = suggest_epsilon(&model, args.n, args.epsilon, args.samples);
            return Err(CliError::Epsilon { source, suggested });
        }
        Err(e) => return Err(e.into()),
    };
    let (w1, w2) = winding_invariants(&lp)?;
    let torus_knot = torus_braid_word(args.n)?;
    let expected = [1, 2 * args.n as i64];
    let report = KnotReport {
        curve_digest: report::curve_digest(&model),
        n: args.n,
        epsilon: args.epsilon,
        samples: args.samples,
        windings: [w1, w2],
        expected_windings: expected,
        matches_kn: [w1, w2] == expected,
        braid_word: torus_knot.braid_text(),
        torus_knot,
        batson_bound: batson_bound(args.n)?,
        loop_points: lp
            .points
            .iter()
            .map(|(m, d)| [m.re, m.im, d.re, d.im])
            .collect(),
    };
    write_output(args.out.as_deref(), &to_json(&report))?;
    if let Some(path) = &args.braid_out {
        fs::write(path, format!("{}\n", report.braid_word)).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(report)
}
