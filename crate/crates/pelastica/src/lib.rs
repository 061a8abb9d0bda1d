//! Toolkit for plane closed curves: nonlinear elastic energies of the form
//! `integral of f(kappa) ds`, numerical minimization of the p-elastic energy
//! at fixed enclosed area, curve surgery constructions (centrosymmetrization,
//! ramp-and-plateau perturbations, notch removal, convex-arc reduction), and
//! batch verification of isoperimetric-type curvature inequalities.
//!
//! Curves live on a uniform arc-length grid as tangent-angle samples
//! ([`curve::AngleCurve`]) or as closed polylines ([`curve::PointCurve`]).
//! See the `examples/` directory for one runnable program per capability and
//! the `pelastica` binary for the batch command-line interface.

// `!(p > 1.0)` style guards are NaN-rejecting on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod bounds;
pub mod cli;
pub mod curve;
pub mod energy;
pub mod error;
pub mod generators;
pub mod geom;
pub mod io;
pub mod optimize;
pub mod render;
pub mod surgery;

pub use curve::{AngleCurve, CurveMetrics, PointCurve};
pub use energy::{CurvatureIntegrand, EnergyReport};
pub use error::{CurveError, Result};
pub use geom::Vec2;
pub use optimize::{OptimizationResult, OptimizerConfig};
pub use surgery::{Chord, SurgeryReport};
