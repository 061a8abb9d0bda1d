//! Discrete representations of closed plane curves and their elementary
//! geometric quantities.
//!
//! An [`AngleCurve`] stores a closed curve as tangent-angle samples on a
//! uniform arc-length grid: sample `theta[k]` is the direction of edge `k`,
//! an edge of length `ds = length / n` whose midpoint sits at arc position
//! `(k + 1/2) * ds`. Between midpoints the angle is interpolated linearly,
//! so the curvature `(theta[k+1] - theta[k]) / ds` is exact on each cell and
//! the total turning telescopes to `2 * pi * turning` identically.
//!
//! A [`PointCurve`] is a plain closed polyline used for input/output and for
//! geometric predicates (area, hull, width, diameter, centroid).

use crate::error::{CurveError, Result};
use crate::geom::{self, Vec2};
use std::f64::consts::{PI, TAU};

/// Minimum number of samples for either representation.
pub const MIN_SAMPLES: usize = 8;

/// Default relative tolerance for the closure defect of an [`AngleCurve`].
pub const DEFAULT_CLOSURE_TOL: f64 = 1e-8;

/// Wrap an angle to the principal range `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut r = a % TAU;
    if r > PI {
        r -= TAU;
    } else if r <= -PI {
        r += TAU;
    }
    r
}

/// Closed curve as tangent-angle samples on a uniform arc-length grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleCurve {
    length: f64,
    theta: Vec<f64>,
    turning: i32,
}

impl AngleCurve {
    /// Build from raw samples. Validates sample count and finiteness but not
    /// closure: raw input may violate it and must be projected (see
    /// [`AngleCurve::project_closure`]) before reconstruction.
    pub fn new(length: f64, theta: Vec<f64>, turning: i32) -> Result<Self> {
        if theta.len() < MIN_SAMPLES {
            return Err(CurveError::TooFewSamples {
                min: MIN_SAMPLES,
                got: theta.len(),
            });
        }
        if !length.is_finite() || length <= 0.0 || theta.iter().any(|t| !t.is_finite()) {
            return Err(CurveError::NonFinite);
        }
        Ok(AngleCurve {
            length,
            theta,
            turning,
        })
    }

    /// Resample a simple counterclockwise polyline to `n` uniform arc-length
    /// tangent-angle samples. The angle sequence is unwrapped (no 2-pi jumps)
    /// starting from the principal angle of the first edge, the turning
    /// number is the unwrapped total change over one loop, and the result is
    /// projected onto the closure constraint.
    pub fn from_points(curve: &PointCurve, n: usize) -> Result<Self> {
        if n < MIN_SAMPLES {
            return Err(CurveError::TooFewSamples {
                min: MIN_SAMPLES,
                got: n,
            });
        }
        let area = geom::polygon_signed_area(curve.points());
        if area <= 0.0 {
            return Err(CurveError::Clockwise(area));
        }
        curve.check_simple()?;

        let pts = curve.points();
        let m = pts.len();
        // Cumulative arc length along the input polygon, including the
        // closing edge.
        let mut cum = Vec::with_capacity(m + 1);
        cum.push(0.0);
        for i in 0..m {
            let seg = (pts[(i + 1) % m] - pts[i]).norm();
            cum.push(cum[i] + seg);
        }
        let perimeter = cum[m];
        if perimeter <= 0.0 {
            return Err(CurveError::Degenerate("zero perimeter".into()));
        }

        // Walk the polygon placing resampled vertices at s = k * P / n.
        let mut resampled = Vec::with_capacity(n);
        let mut seg = 0usize;
        for k in 0..n {
            let s = perimeter * k as f64 / n as f64;
            while seg + 1 < m && cum[seg + 1] <= s {
                seg += 1;
            }
            let t = (s - cum[seg]) / (cum[seg + 1] - cum[seg]);
            let a = pts[seg];
            let b = pts[(seg + 1) % m];
            resampled.push(a + (b - a) * t);
        }

        // Edge directions of the resampled polygon, unwrapped.
        let mut raw = Vec::with_capacity(n);
        for k in 0..n {
            let e = resampled[(k + 1) % n] - resampled[k];
            if e.norm() < 1e-300 {
                return Err(CurveError::Degenerate(format!(
                    "resampled edge {k} collapsed"
                )));
            }
            raw.push(e.y.atan2(e.x));
        }
        let mut theta = Vec::with_capacity(n);
        theta.push(wrap_angle(raw[0]));
        let mut total = 0.0;
        for k in 0..n {
            let step = wrap_angle(raw[(k + 1) % n] - raw[k]);
            total += step;
            if k + 1 < n {
                theta.push(theta[k] + step);
            }
        }
        let turning = (total / TAU).round() as i32;

        let mut out = AngleCurve {
            length: perimeter,
            theta,
            turning,
        };
        out.project_closure()?;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn turning(&self) -> i32 {
        self.turning
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Arc-length grid spacing `L / N`.
    pub fn ds(&self) -> f64 {
        self.length / self.theta.len() as f64
    }

    /// Curvature samples `kappa[i] = (theta[i+1] - theta[i]) / ds` with the
    /// periodic wrap `theta[N] = theta[0] + 2 pi turning`. The weighted sum
    /// `ds * sum(kappa)` telescopes to `2 pi turning` exactly.
    pub fn curvature(&self) -> Vec<f64> {
        let n = self.n();
        let ds = self.ds();
        let mut k = Vec::with_capacity(n);
        for i in 0..n {
            let next = if i + 1 == n {
                self.theta[0] + TAU * self.turning as f64
            } else {
                self.theta[i + 1]
            };
            k.push((next - self.theta[i]) / ds);
        }
        k
    }

    /// `std(kappa) / mean(kappa)`; zero exactly for circles.
    pub fn circularity(&self) -> f64 {
        let k = self.curvature();
        let mean = k.iter().sum::<f64>() / k.len() as f64;
        let var = k.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / k.len() as f64;
        var.sqrt() / mean.abs()
    }

    /// L1 closure defect `|ds * sum(cos)| + |ds * sum(sin)|`.
    pub fn closure_defect(&self) -> f64 {
        let (cx, cy) = self.closure_sums();
        let ds = self.ds();
        (ds * cx).abs() + (ds * cy).abs()
    }

    fn closure_sums(&self) -> (f64, f64) {
        let mut cx = 0.0;
        let mut cy = 0.0;
        for &t in &self.theta {
            cx += t.cos();
            cy += t.sin();
        }
        (cx, cy)
    }

    /// Project the angle samples onto the closure constraint set
    /// `sum(cos) = sum(sin) = 0` by Gauss-Newton on the two residuals
    /// (minimal-norm correction to first order).
    pub fn project_closure(&mut self) -> Result<()> {
        project_closure_samples(&mut self.theta)
    }

    /// Reconstructed polygon vertices starting at `origin`. Vertex `k+1` is
    /// reached from vertex `k` by a step of length `ds` in direction
    /// `theta[k]` (midpoint rule for the integral of `(cos, sin)`).
    pub fn vertices(&self, origin: Vec2) -> Vec<Vec2> {
        let ds = self.ds();
        let mut pts = Vec::with_capacity(self.n());
        let mut p = origin;
        pts.push(p);
        for &t in &self.theta[..self.n() - 1] {
            p = p + Vec2::dir(t) * ds;
            pts.push(p);
        }
        pts
    }

    /// Reconstruct a [`PointCurve`], checking the closure defect against
    /// `tol * length` first.
    pub fn to_points_with_tol(&self, origin: Vec2, tol: f64) -> Result<PointCurve> {
        let defect = self.closure_defect();
        if defect > tol * self.length {
            return Err(CurveError::ClosureDefect {
                defect,
                tol: tol * self.length,
            });
        }
        PointCurve::new(self.vertices(origin))
    }

    /// Reconstruct with the default closure tolerance.
    pub fn to_points(&self, origin: Vec2) -> Result<PointCurve> {
        self.to_points_with_tol(origin, DEFAULT_CLOSURE_TOL)
    }

    /// Enclosed area of the reconstructed polygon (shoelace).
    pub fn area(&self) -> f64 {
        geom::polygon_signed_area(&self.vertices(Vec2::ZERO))
    }

    /// Enclosed area by the double angle sum
    /// `1/2 ds^2 sum_{j<i} sin(theta[i] - theta[j])`; agrees with the
    /// shoelace area of the reconstruction exactly when the curve closes.
    pub fn gauss_green_area(&self) -> f64 {
        let n = self.n();
        let ds = self.ds();
        let mut acc = 0.0;
        for i in 1..n {
            let ti = self.theta[i];
            let mut row = 0.0;
            for j in 0..i {
                row += (ti - self.theta[j]).sin();
            }
            acc += row;
        }
        0.5 * ds * ds * acc
    }

    /// True iff every angle increment is at least `-tol` (the tangent angle
    /// is nondecreasing up to tolerance, i.e. the region is convex).
    pub fn is_convex(&self, tol: f64) -> bool {
        self.curvature().iter().all(|&k| k * self.ds() >= -tol)
    }

    /// Max deviation from `theta(s + L/2) = theta(s) + pi` over the grid;
    /// infinite for odd sample counts.
    pub fn centrosymmetry_defect(&self) -> f64 {
        let n = self.n();
        if n % 2 != 0 {
            return f64::INFINITY;
        }
        let half = n / 2;
        let mut worst: f64 = 0.0;
        for k in 0..half {
            worst = worst.max((self.theta[k + half] - self.theta[k] - PI).abs());
        }
        worst
    }

    /// Piecewise-linear tangent angle at arc position `s` (samples live at
    /// edge midpoints; periodic extension `theta(s + L) = theta(s) + 2 pi
    /// turning`).
    pub fn theta_at(&self, s: f64) -> f64 {
        let n = self.n();
        let ds = self.ds();
        let turn = TAU * self.turning as f64;
        let wraps = (s / self.length).floor();
        let sw = s - wraps * self.length;
        let u = sw / ds - 0.5;
        let k = u.floor();
        let frac = u - k;
        let ki = k as isize;
        let (a, b) = if ki < 0 {
            (self.theta[n - 1] - turn, self.theta[0])
        } else if ki as usize >= n - 1 {
            (self.theta[n - 1], self.theta[0] + turn)
        } else {
            (self.theta[ki as usize], self.theta[ki as usize + 1])
        };
        a + frac * (b - a) + wraps * turn
    }

    /// Point at arc position `s` on the reconstructed polygon (vertex `k` at
    /// `s = k * ds`, linear along edges), with vertex 0 at `origin`.
    pub fn point_at(&self, s: f64, origin: Vec2) -> Vec2 {
        let n = self.n();
        let ds = self.ds();
        let sw = s.rem_euclid(self.length);
        let k = ((sw / ds).floor() as usize).min(n - 1);
        let frac = sw / ds - k as f64;
        let verts = self.vertices(origin);
        verts[k] + Vec2::dir(self.theta[k]) * (frac * ds)
    }

    /// Dilation by `lambda > 0`: same angles, scaled length.
    pub fn scaled(&self, lambda: f64) -> AngleCurve {
        AngleCurve {
            length: self.length * lambda,
            theta: self.theta.clone(),
            turning: self.turning,
        }
    }

    /// Rigid rotation by `phi` (adds a constant to every sample).
    pub fn rotated(&self, phi: f64) -> AngleCurve {
        AngleCurve {
            length: self.length,
            theta: self.theta.iter().map(|t| t + phi).collect(),
            turning: self.turning,
        }
    }
}

/// Gauss-Newton projection of raw angle samples onto the closure constraint
/// set `sum(cos) = sum(sin) = 0`; the minimal-norm correction to first
/// order. Also used by the optimizer to keep iterates on the closure
/// manifold.
pub fn project_closure_samples(theta: &mut [f64]) -> Result<()> {
    let n = theta.len() as f64;
    let sums = |theta: &[f64]| -> (f64, f64) {
        let (mut cx, mut cy) = (0.0, 0.0);
        for &t in theta {
            cx += t.cos();
            cy += t.sin();
        }
        (cx, cy)
    };
    for _ in 0..60 {
        let (cx, cy) = sums(theta);
        if cx.abs() + cy.abs() <= 1e-13 * n {
            return Ok(());
        }
        let (mut ss, mut cc, mut sc) = (0.0, 0.0, 0.0);
        for &t in theta.iter() {
            let (s, c) = t.sin_cos();
            ss += s * s;
            cc += c * c;
            sc += s * c;
        }
        // J J^T for J = [-sin; cos].
        let det = ss * cc - sc * sc;
        if det.abs() < 1e-12 * n * n {
            return Err(CurveError::ClosureProjection(
                "closure Jacobian is singular (straight or degenerate curve)".into(),
            ));
        }
        let u1 = (-cx * cc - cy * sc) / det;
        let u2 = (-cy * ss - cx * sc) / det;
        for t in theta.iter_mut() {
            let (s, c) = t.sin_cos();
            *t += -s * u1 + c * u2;
        }
    }
    let (cx, cy) = sums(theta);
    if cx.abs() + cy.abs() <= 1e-10 * n {
        Ok(())
    } else {
        Err(CurveError::ClosureProjection(format!(
            "did not converge (residual {:.3e})",
            cx.abs() + cy.abs()
        )))
    }
}

/// Closed polyline of vertices, implicitly closed (the last vertex connects
/// back to the first).
#[derive(Debug, Clone, PartialEq)]
pub struct PointCurve {
    points: Vec<Vec2>,
}

impl PointCurve {
    pub fn new(points: Vec<Vec2>) -> Result<Self> {
        if points.len() < MIN_SAMPLES {
            return Err(CurveError::TooFewSamples {
                min: MIN_SAMPLES,
                got: points.len(),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(CurveError::NonFinite);
        }
        let n = points.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if (points[j] - points[i]).norm() == 0.0 {
                return Err(CurveError::DuplicateVertex(i, j));
            }
        }
        Ok(PointCurve { points })
    }

    pub fn from_xy(xy: &[(f64, f64)]) -> Result<Self> {
        Self::new(xy.iter().map(|&(x, y)| Vec2::new(x, y)).collect())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    /// Enclosed (shoelace) area; a non-positive result signals an
    /// orientation violation and is reported as an error.
    pub fn area(&self) -> Result<f64> {
        let a = geom::polygon_signed_area(&self.points);
        if a <= 0.0 {
            Err(CurveError::Clockwise(a))
        } else {
            Ok(a)
        }
    }

    pub fn perimeter(&self) -> f64 {
        geom::polygon_perimeter(&self.points)
    }

    /// Area-weighted centroid of the enclosed region.
    pub fn centroid(&self) -> Vec2 {
        geom::polygon_centroid(&self.points)
    }

    /// Exhaustive segment-pair self-intersection test (adjacent segments
    /// excluded). Quadratic, which is fine at desk scale (N <= 4096).
    pub fn check_simple(&self) -> Result<()> {
        let n = self.points.len();
        for i in 0..n {
            let a1 = self.points[i];
            let a2 = self.points[(i + 1) % n];
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue; // closing edge is adjacent to edge 0
                }
                let b1 = self.points[j];
                let b2 = self.points[(j + 1) % n];
                if geom::segments_intersect(a1, a2, b1, b2) {
                    return Err(CurveError::SelfIntersecting(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.check_simple().is_ok()
    }

    pub fn translated(&self, d: Vec2) -> PointCurve {
        PointCurve {
            points: self.points.iter().map(|&p| p + d).collect(),
        }
    }

    pub fn transformed(&self, angle: f64, scale: f64, shift: Vec2) -> PointCurve {
        PointCurve {
            points: self
                .points
                .iter()
                .map(|&p| p.rotate(angle) * scale + shift)
                .collect(),
        }
    }
}

/// Width and diameter of the curve's convex hull. For nonconvex input these
/// equal the width/diameter of the region's hull, the standard extension.
pub fn width_diameter(curve: &PointCurve) -> Result<(f64, f64)> {
    let hull = geom::convex_hull(curve.points());
    if hull.len() < 3 {
        return Err(CurveError::Degenerate(
            "collinear input has no width".into(),
        ));
    }
    Ok((geom::hull_width(&hull), geom::hull_diameter(&hull)))
}

/// Bundle of the elementary geometric quantities of a closed curve.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CurveMetrics {
    pub length: f64,
    pub area: f64,
    pub width: f64,
    pub diameter: f64,
    pub convex: bool,
    pub centroid: Vec2,
}

impl CurveMetrics {
    pub fn of(curve: &PointCurve) -> Result<CurveMetrics> {
        let area = curve.area()?;
        let (width, diameter) = width_diameter(curve)?;
        let hull = geom::convex_hull(curve.points());
        let hull_area = geom::polygon_signed_area(&hull);
        let convex = hull_area <= area * (1.0 + 1e-9);
        Ok(CurveMetrics {
            length: curve.perimeter(),
            area,
            width,
            diameter,
            convex,
            centroid: curve.centroid(),
        })
    }
}

/// Symmetric Hausdorff distance between two closed polylines
/// (vertex-to-segment, both directions).
pub fn hausdorff_distance(a: &PointCurve, b: &PointCurve) -> f64 {
    directed_hausdorff(a.points(), b.points()).max(directed_hausdorff(b.points(), a.points()))
}

fn directed_hausdorff(from: &[Vec2], to: &[Vec2]) -> f64 {
    let n = to.len();
    let mut worst: f64 = 0.0;
    for &p in from {
        let mut best = f64::INFINITY;
        for i in 0..n {
            let d = geom::point_segment_distance(p, to[i], to[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        worst = worst.max(best);
    }
    worst
}
