//! JSON report types and serialization.
//!
//! Floats are written in exponent form with 17 significant digits so that a
//! report round-trips every `f64` exactly and identical runs give identical
//! bytes.

use std::io;

use inscribed::{CurveModel, Rectangle, SearchConfig, SearchOutcome, SearchWarning, TorusKnotId};
use serde::ser::Serialize;
use serde::Deserialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use sha2::{Digest, Sha256};

use crate::corpus::CorpusSpec;

/// Hex SHA-256 of the coefficients `c_{-J} … c_J`, each as little-endian
/// `(re, im)` doubles.
pub fn curve_digest(model: &CurveModel) -> String {
    let mut hasher = Sha256::new();
    for c in model.coefficients() {
        hasher.update(c.re.to_le_bytes());
        hasher.update(c.im.to_le_bytes());
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportWarning {
    EmptyFamily {
        k: u32,
    },
    NoRectangles,
    NearSingular {
        k: u32,
        count: usize,
    },
    /// Clockwise input; parameter reversed on ingestion.
    OrientationReversed,
}

impl From<&SearchWarning> for ReportWarning {
    fn from(w: &SearchWarning) -> Self {
        match *w {
            SearchWarning::EmptyFamily { k } => ReportWarning::EmptyFamily { k },
            SearchWarning::NoRectangles => ReportWarning::NoRectangles,
            SearchWarning::NearSingular { k, count } => ReportWarning::NearSingular { k, count },
        }
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct RectangleReport {
    pub params: [f64; 4],
    pub vertices: [[f64; 2]; 4],
    pub ratio_measured: f64,
    pub canonical_ratio: f64,
    pub residual: f64,
}

impl From<&Rectangle> for RectangleReport {
    fn from(r: &Rectangle) -> Self {
        RectangleReport {
            params: r.params,
            vertices: r.vertices.map(|v| [v.re, v.im]),
            ratio_measured: r.ratio_measured,
            canonical_ratio: r.canonical_ratio(),
            residual: r.residual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct FamilyReport {
    pub k: u32,
    pub ratio: f64,
    pub canonical_ratio: f64,
    pub rectangles: Vec<RectangleReport>,
}

/// Output of `find`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct RunReport {
    pub curve_digest: String,
    pub n: u32,
    pub config: SearchConfig,
    pub families: Vec<FamilyReport>,
    pub warnings: Vec<ReportWarning>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl RunReport {
    pub fn new(model: &CurveModel, outcome: &SearchOutcome, config: &SearchConfig) -> Self {
        let mut warnings: Vec<ReportWarning> = Vec::new();
        if model.was_reversed() {
            warnings.push(ReportWarning::OrientationReversed);
        }
        warnings.extend(outcome.warnings.iter().map(ReportWarning::from));
        RunReport {
            curve_digest: curve_digest(model),
            n: outcome.n,
            config: config.clone(),
            families: outcome
                .families
                .iter()
                .map(|f| FamilyReport {
                    k: f.family.k,
                    ratio: f.family.ratio,
                    canonical_ratio: f.family.ratio.max(1.0 / f.family.ratio),
                    rectangles: f.rectangles.iter().map(RectangleReport::from).collect(),
                })
                .collect(),
            warnings,
            wall_time_s: None,
        }
    }

    pub fn rectangle_count(&self) -> usize {
        self.families.iter().map(|f| f.rectangles.len()).sum()
    }
}

/// One `(curve, n)` cell of a corpus sweep.
#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct CellReport {
    pub curve: usize,
    pub curve_digest: String,
    pub n: u32,
    pub families_found: Vec<u32>,
    pub rectangles: usize,
    pub min_residual: Option<f64>,
}

/// Output of `verify-corpus`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct CorpusReport {
    pub corpus: CorpusSpec,
    pub n_min: u32,
    pub n_max: u32,
    pub config: SearchConfig,
    pub cells: Vec<CellReport>,
    pub empty_cells: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

/// Output of `knot`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
pub struct KnotReport {
    pub curve_digest: String,
    pub n: u32,
    pub epsilon: f64,
    pub samples: usize,
    pub windings: [i64; 2],
    pub expected_windings: [i64; 2],
    pub matches_kn: bool,
    pub torus_knot: TorusKnotId,
    pub braid_word: String,
    pub batson_bound: u32,
    /// `[Re mid, Im mid, Re dir, Im dir]` per sample; the last repeats the first.
    pub loop_points: Vec<[f64; 4]>,
}

/// Pretty-printing formatter that writes floats with 17 significant digits.
struct SignificantDigits(PrettyFormatter<'static>);

impl Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

/// Serializes `value` as indented JSON with 17-significant-digit floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut buf, SignificantDigits(PrettyFormatter::new()));
    value
        .serialize(&mut ser)
        .expect("report types serialize infallibly");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}
