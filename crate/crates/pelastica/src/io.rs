//! JSON schemas for curves, integrands and reports.
//!
//! Curve files are either tangent-angle records
//! `{"format":"angle","L":...,"turning":...,"theta":[...]}` or vertex lists
//! `{"format":"points","points":[[x,y],...]}`. Numbers round-trip exactly
//! (shortest representation that reparses to the same f64).

use crate::curve::{AngleCurve, PointCurve};
use crate::error::{CurveError, Result};
use crate::geom::Vec2;
use crate::optimize::OptimizationResult;
use crate::surgery::SurgeryReport;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// On-disk curve record.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum CurveJson {
    Angle {
        #[serde(rename = "L")]
        length: f64,
        turning: i32,
        theta: Vec<f64>,
    },
    Points {
        points: Vec<(f64, f64)>,
    },
}

impl CurveJson {
    pub fn from_angle(curve: &AngleCurve) -> Self {
        CurveJson::Angle {
            length: curve.length(),
            turning: curve.turning(),
            theta: curve.theta().to_vec(),
        }
    }

    pub fn from_points(curve: &PointCurve) -> Self {
        CurveJson::Points {
            points: curve.points().iter().map(|p| (p.x, p.y)).collect(),
        }
    }

    /// Convert to an [`AngleCurve`] with `n` samples. Angle records must
    /// already carry `n` samples or they are resampled through their
    /// reconstruction; point records are resampled directly.
    pub fn into_angle(self, n: usize) -> Result<AngleCurve> {
        match self {
            CurveJson::Angle {
                length,
                turning,
                theta,
            } => {
                let mut curve = AngleCurve::new(length, theta, turning)?;
                curve.project_closure()?;
                if curve.n() == n {
                    Ok(curve)
                } else {
                    AngleCurve::from_points(&curve.to_points(Vec2::ZERO)?, n)
                }
            }
            CurveJson::Points { points } => {
                let pc =
                    PointCurve::new(points.into_iter().map(|(x, y)| Vec2::new(x, y)).collect())?;
                AngleCurve::from_points(&pc, n)
            }
        }
    }
}

pub fn read_curve(path: &Path, n: usize) -> Result<AngleCurve> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CurveError::BadConfig(format!("{}: {e}", path.display())))?;
    let json: CurveJson = serde_json::from_str(&text)
        .map_err(|e| CurveError::BadConfig(format!("{}: {e}", path.display())))?;
    json.into_angle(n)
}

pub fn write_curve(path: &Path, curve: &AngleCurve) -> Result<()> {
    let json = serde_json::to_string_pretty(&CurveJson::from_angle(curve))
        .expect("curve serialization cannot fail");
    std::fs::write(path, json)
        .map_err(|e| CurveError::BadConfig(format!("{}: {e}", path.display())))
}

/// Serializable mirror of [`SurgeryReport`] with curves embedded in the
/// curve schema.
#[derive(Debug, Serialize)]
pub struct SurgeryReportJson {
    pub construction: crate::surgery::Construction,
    pub input: CurveJson,
    pub output: CurveJson,
    pub energy_before: f64,
    pub energy_after: f64,
    pub area_before: f64,
    pub area_after: f64,
}

impl SurgeryReportJson {
    pub fn from_report(r: &SurgeryReport) -> Self {
        SurgeryReportJson {
            construction: r.construction,
            input: CurveJson::from_angle(&r.input),
            output: CurveJson::from_angle(&r.output),
            energy_before: r.energy_before,
            energy_after: r.energy_after,
            area_before: r.area_before,
            area_after: r.area_after,
        }
    }
}

/// Serializable mirror of [`OptimizationResult`]: final curve, scalar
/// diagnostics, and the per-iteration history.
#[derive(Debug, Serialize)]
pub struct OptimizationResultJson {
    pub curve: CurveJson,
    pub converged: bool,
    pub stayed_simple: bool,
    pub outer_iters: usize,
    pub el_alpha: f64,
    pub el_residual: f64,
    pub circularity: f64,
    pub q_p: f64,
    pub history: Vec<crate::optimize::IterationRecord>,
}

impl OptimizationResultJson {
    pub fn from_result(r: &OptimizationResult) -> Self {
        OptimizationResultJson {
            curve: CurveJson::from_angle(&r.curve),
            converged: r.converged,
            stayed_simple: r.stayed_simple,
            outer_iters: r.outer_iters,
            el_alpha: r.el_alpha,
            el_residual: r.el_residual,
            circularity: r.circularity,
            q_p: r.q_p,
            history: r.history.clone(),
        }
    }
}
