//! Inscribed rectangles of aspect ratio `tan(πk/2n)` in smooth Jordan curves.
//!
//! A curve `γ` gives a map from unordered pairs `{x, y}` of circle parameters
//! to `ℂ²`,
//!
//! ```text
//! μ{x,y} = ((γ(x) + γ(y)) / 2, (γ(y) - γ(x))^{2n}),
//! ```
//!
//! and two distinct pairs with the same image are the diagonals of an
//! inscribed rectangle whose diagonals meet at a multiple of `π/n`. The
//! crate locates such coincidences numerically ([`solver`]), builds and
//! labels the rectangles ([`rectangle`]), and traces the boundary knot of
//! `μ` near `ℂ × {0}` ([`knot`]).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod error;
pub mod knot;
pub mod mobius;
pub mod rectangle;
pub mod solver;

pub use curve::{fit_from_samples, CurveModel, CurveSpec, ValidationReport};
pub use error::{Error, Result};
pub use knot::{
    batson_bound, boundary_loop, kn_loop, kn_point, torus_braid_word, winding_invariants,
    BoundaryLoop, TorusKnotId,
};
pub use mobius::{
    canonicalize, immersion_audit, mu_jacobian, mu_map, ImmersionReport, MobiusPoint, MuValue,
};
pub use rectangle::{
    canonical_ratio, dedup, family_ratios, rect_from_pairs, AspectFamily, Rectangle,
};
pub use solver::{
    find_families, find_family, find_rectangles, newton_refine, residual, system_jacobian,
    NewtonOutcome, SearchConfig, SearchOutcome, SearchWarning, SystemResidual,
};
