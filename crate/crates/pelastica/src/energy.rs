//! Curvature energies `E_f = integral of f(kappa) ds`, the p-elastic
//! energies `F_p` and `F_p+`, the scale-invariant quotient, disc energies,
//! and numerical checks of the two integrand hypotheses (g-convexity and
//! the f-monotonicity inequality) under which discs are optimal.

use crate::curve::AngleCurve;
use crate::error::{CurveError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The curvature integrand `f`. Built-ins are `|t|^p` and `max(t,0)^p`
/// (`p > 1`); arbitrary sampled integrands interpolate monotone-cubically
/// inside their grid and error outside it.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurvatureIntegrand {
    Power { p: f64 },
    PositivePower { p: f64 },
    Tabulated { t: Vec<f64>, f: Vec<f64> },
}

impl CurvatureIntegrand {
    pub fn power(p: f64) -> Result<Self> {
        if !(p > 1.0) {
            return Err(CurveError::BadExponent(p));
        }
        Ok(CurvatureIntegrand::Power { p })
    }

    pub fn positive_power(p: f64) -> Result<Self> {
        if !(p > 1.0) {
            return Err(CurveError::BadExponent(p));
        }
        Ok(CurvatureIntegrand::PositivePower { p })
    }

    /// Tabulated integrand on a strictly increasing grid. Enforces the
    /// represented-domain conditions `f >= 0`, `f(t) > 0` for `t > 0`, and
    /// `f(0) = 0` when 0 is a knot.
    pub fn tabulated(t: Vec<f64>, f: Vec<f64>) -> Result<Self> {
        if t.len() != f.len() || t.len() < 2 {
            return Err(CurveError::BadIntegrand(
                "table needs >= 2 equal-length knot/value rows".into(),
            ));
        }
        for w in t.windows(2) {
            if !(w[1] > w[0]) {
                return Err(CurveError::BadIntegrand(
                    "knots must strictly increase".into(),
                ));
            }
        }
        for (&ti, &fi) in t.iter().zip(&f) {
            if !ti.is_finite() || !fi.is_finite() {
                return Err(CurveError::BadIntegrand("non-finite table entry".into()));
            }
            if fi < 0.0 {
                return Err(CurveError::BadIntegrand(format!("f({ti}) = {fi} < 0")));
            }
            if ti > 0.0 && fi == 0.0 {
                return Err(CurveError::BadIntegrand(format!("f({ti}) = 0 but t > 0")));
            }
            if ti == 0.0 && fi != 0.0 {
                return Err(CurveError::BadIntegrand(format!("f(0) = {fi} != 0")));
            }
        }
        Ok(CurvatureIntegrand::Tabulated { t, f })
    }

    /// Evaluate `f` at `x`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            CurvatureIntegrand::Power { p } => Ok(x.abs().powf(*p)),
            CurvatureIntegrand::PositivePower { p } => Ok(x.max(0.0).powf(*p)),
            CurvatureIntegrand::Tabulated { t, f } => hermite_eval(t, f, x).map(|(v, _)| v),
        }
    }

    /// One-sided/interpolated derivative of `f` at `x`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        match self {
            CurvatureIntegrand::Power { p } => Ok(p * x.abs().powf(p - 1.0) * x.signum()),
            CurvatureIntegrand::PositivePower { p } => {
                Ok(if x > 0.0 { p * x.powf(p - 1.0) } else { 0.0 })
            }
            CurvatureIntegrand::Tabulated { t, f } => hermite_eval(t, f, x).map(|(_, d)| d),
        }
    }
}

/// Fritsch-Carlson monotone cubic Hermite evaluation; returns (value,
/// derivative). Errors outside the knot range rather than extrapolating.
fn hermite_eval(ts: &[f64], ys: &[f64], x: f64) -> Result<(f64, f64)> {
    let n = ts.len();
    if x < ts[0] || x > ts[n - 1] {
        return Err(CurveError::TabulatedOutOfRange(x, ts[0], ts[n - 1]));
    }
    // Secants and limited tangents.
    let mut d = vec![0.0; n - 1];
    for k in 0..n - 1 {
        d[k] = (ys[k + 1] - ys[k]) / (ts[k + 1] - ts[k]);
    }
    let mut m = vec![0.0; n];
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for k in 1..n - 1 {
        m[k] = if d[k - 1] * d[k] <= 0.0 {
            0.0
        } else {
            0.5 * (d[k - 1] + d[k])
        };
    }
    for k in 0..n - 1 {
        if d[k] == 0.0 {
            m[k] = 0.0;
            m[k + 1] = 0.0;
        } else {
            let a = m[k] / d[k];
            let b = m[k + 1] / d[k];
            let s = a * a + b * b;
            if s > 9.0 {
                let tau = 3.0 / s.sqrt();
                m[k] = tau * a * d[k];
                m[k + 1] = tau * b * d[k];
            }
        }
    }
    let k = match ts.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => i.min(n - 2),
        Err(i) => i - 1,
    };
    let h = ts[k + 1] - ts[k];
    let u = (x - ts[k]) / h;
    let (u2, u3) = (u * u, u * u * u);
    let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    let h10 = u3 - 2.0 * u2 + u;
    let h01 = -2.0 * u3 + 3.0 * u2;
    let h11 = u3 - u2;
    let value = h00 * ys[k] + h10 * h * m[k] + h01 * ys[k + 1] + h11 * h * m[k + 1];
    let dh00 = (6.0 * u2 - 6.0 * u) / h;
    let dh10 = 3.0 * u2 - 4.0 * u + 1.0;
    let dh01 = (-6.0 * u2 + 6.0 * u) / h;
    let dh11 = 3.0 * u2 - 2.0 * u;
    let deriv = dh00 * ys[k] + dh10 * m[k] + dh01 * ys[k + 1] + dh11 * m[k + 1];
    Ok((value, deriv))
}

fn require_turning_one(curve: &AngleCurve) -> Result<()> {
    if curve.turning() != 1 {
        return Err(CurveError::BadTurning(curve.turning()));
    }
    Ok(())
}

/// `E_f = ds * sum f(kappa_i)`.
pub fn energy_ef(curve: &AngleCurve, f: &CurvatureIntegrand) -> Result<f64> {
    require_turning_one(curve)?;
    let ds = curve.ds();
    let mut acc = 0.0;
    for k in curve.curvature() {
        acc += f.eval(k)?;
    }
    Ok(ds * acc)
}

/// Energy of the arc between arc positions `s1 < s2 <= s1 + L`: the exact
/// integral of `f` of the piecewise-constant curvature over that window.
/// Arc energies of a partition sum to `E_f` exactly.
pub fn arc_energy(curve: &AngleCurve, f: &CurvatureIntegrand, s1: f64, s2: f64) -> Result<f64> {
    assert!(s2 > s1 && s2 - s1 <= curve.length() * (1.0 + 1e-12));
    let n = curve.n() as isize;
    let ds = curve.ds();
    let kappa = curve.curvature();
    // Curvature cell k spans [ (k+1/2) ds, (k+3/2) ds ).
    let k_start = ((s1 / ds) - 0.5).floor() as isize;
    let k_end = ((s2 / ds) - 0.5).ceil() as isize;
    let mut acc = 0.0;
    for k in k_start..=k_end {
        let lo = (k as f64 + 0.5) * ds;
        let hi = lo + ds;
        let overlap = (hi.min(s2) - lo.max(s1)).max(0.0);
        if overlap > 0.0 {
            let idx = k.rem_euclid(n) as usize;
            acc += overlap * f.eval(kappa[idx])?;
        }
    }
    Ok(acc)
}

/// `F_p = (1/2)^{2/p} (ds * sum |kappa_i|^p)^{2/p}`.
pub fn energy_fp(curve: &AngleCurve, p: f64) -> Result<f64> {
    require_turning_one(curve)?;
    if !(p > 1.0) {
        return Err(CurveError::BadExponent(p));
    }
    let s = kappa_lp_pth_power(curve, p, false);
    Ok(0.5f64.powf(2.0 / p) * s.powf(2.0 / p))
}

/// `F_p+`: same as [`energy_fp`] with the negative part of the curvature
/// dropped (`kappa_+ = max(kappa, 0)`).
pub fn energy_fp_plus(curve: &AngleCurve, p: f64) -> Result<f64> {
    require_turning_one(curve)?;
    if !(p > 1.0) {
        return Err(CurveError::BadExponent(p));
    }
    let s = kappa_lp_pth_power(curve, p, true);
    Ok(0.5f64.powf(2.0 / p) * s.powf(2.0 / p))
}

/// `ds * sum |kappa_i|^p` (or with `kappa_+`), i.e. `||kappa||_p^p`.
/// Note `F_p^{p/2} = (1/2) ||kappa||_p^p`.
pub fn kappa_lp_pth_power(curve: &AngleCurve, p: f64, positive_part: bool) -> f64 {
    let ds = curve.ds();
    let mut acc = 0.0;
    for k in curve.curvature() {
        let v = if positive_part { k.max(0.0) } else { k.abs() };
        acc += v.powf(p);
    }
    ds * acc
}

/// Scale-invariant quotient `F^{p/(p-1)} * A` with `F = F_p` or `F_p+`.
/// Equals `pi^{(p+1)/(p-1)}` exactly on circles and is larger on every other
/// simple closed curve.
pub fn quotient_qp(curve: &AngleCurve, p: f64, plus: bool) -> Result<f64> {
    let f = if plus {
        energy_fp_plus(curve, p)?
    } else {
        energy_fp(curve, p)?
    };
    let area = curve.area();
    if area <= 0.0 {
        return Err(CurveError::Degenerate(format!(
            "non-positive enclosed area {area}"
        )));
    }
    Ok(f.powf(p / (p - 1.0)) * area)
}

/// Energy of the boundary of a disc of radius `R`: `2 pi R f(1/R)`.
pub fn disc_energy(radius: f64, f: &CurvatureIntegrand) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(CurveError::Degenerate(format!("radius {radius} <= 0")));
    }
    Ok(2.0 * PI * radius * f.eval(1.0 / radius)?)
}

/// Report of the g-convexity check (`g(t) = f(1/sqrt(t)) sqrt(t)` convex).
#[derive(Debug, Clone, Serialize)]
pub struct GConvexityReport {
    pub convex: bool,
    /// Smallest second divided difference of g over the grid.
    pub min_second_difference: f64,
}

/// Check convexity of `g(t) = f(1/sqrt(t)) sqrt(t)` on a strictly increasing
/// grid of `t > 0` via second divided differences.
pub fn check_g_convexity(f: &CurvatureIntegrand, grid: &[f64]) -> Result<GConvexityReport> {
    if grid.len() < 3 {
        return Err(CurveError::BadConfig(
            "g-convexity grid needs >= 3 points".into(),
        ));
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) || w[0] <= 0.0 {
            return Err(CurveError::BadConfig(
                "g-convexity grid must be strictly increasing and positive".into(),
            ));
        }
    }
    let g: Vec<f64> = grid
        .iter()
        .map(|&t| f.eval(1.0 / t.sqrt()).map(|v| v * t.sqrt()))
        .collect::<Result<_>>()?;
    let mut min_dd = f64::INFINITY;
    for i in 1..grid.len() - 1 {
        let sl = (g[i] - g[i - 1]) / (grid[i] - grid[i - 1]);
        let sr = (g[i + 1] - g[i]) / (grid[i + 1] - grid[i]);
        let dd = (sr - sl) / (grid[i + 1] - grid[i - 1]);
        min_dd = min_dd.min(dd);
    }
    let gmax = g.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    let span = grid[grid.len() - 1] - grid[0];
    let tol = 1e-9 * gmax / (span * span);
    Ok(GConvexityReport {
        convex: min_dd >= -tol,
        min_second_difference: min_dd,
    })
}

/// Default evaluation grid for [`check_g_convexity`]: 64 log-spaced points
/// over a positive interval (typically `[kappa_min^2, kappa_max^2]` of the
/// curve under study).
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 3);
    let (la, lb) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// The default g-convexity grid for a concrete curve: 64 log-spaced points
/// spanning the squared-curvature range (widened for near-constant
/// curvature, clamped away from zero for curves with straight pieces).
pub fn g_grid_for_curve(curve: &AngleCurve) -> Vec<f64> {
    let kappa = curve.curvature();
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for k in kappa {
        let k2 = k * k;
        if k2 > 0.0 {
            lo = lo.min(k2);
        }
        hi = hi.max(k2);
    }
    if !lo.is_finite() || hi <= 0.0 {
        return log_grid(0.25, 4.0, 64);
    }
    lo = lo.max(1e-6 * hi);
    if hi < 2.0 * lo {
        lo *= 0.5;
        hi *= 2.0;
    }
    log_grid(lo, hi, 64)
}

/// Report of the monotonicity inequality `s f'(s) >= integral_0^s f(r)/r dr`.
#[derive(Debug, Clone, Serialize)]
pub struct FMonotoneReport {
    pub holds: bool,
    pub worst_margin: f64,
}

/// Check the f-monotonicity inequality on a grid of `s > 0`. The right side
/// is integrated by composite Simpson on geometrically shrinking panels
/// toward 0 so integrable endpoint singularities converge; divergence is
/// reported as an error.
pub fn check_f_monotone(f: &CurvatureIntegrand, grid: &[f64]) -> Result<FMonotoneReport> {
    if grid.is_empty() || grid.iter().any(|&s| s <= 0.0) {
        return Err(CurveError::BadConfig(
            "monotonicity grid must be positive".into(),
        ));
    }
    let mut worst = f64::INFINITY;
    let mut scale = 0.0f64;
    for &s in grid {
        let lhs = s * f.derivative(s)?;
        let rhs = integral_f_over_r(f, s)?;
        scale = scale.max(lhs.abs()).max(rhs.abs());
        worst = worst.min(lhs - rhs);
    }
    Ok(FMonotoneReport {
        holds: worst >= -1e-9 * scale.max(f64::MIN_POSITIVE),
        worst_margin: worst,
    })
}

/// `integral_0^s f(r)/r dr` by octave panels `[s 2^{-k-1}, s 2^{-k}]`.
fn integral_f_over_r(f: &CurvatureIntegrand, s: f64) -> Result<f64> {
    let integrand = |r: f64| f.eval(r).map(|v| v / r);
    let mut total = 0.0;
    let mut prev_panel = f64::INFINITY;
    let mut stalled = 0;
    for k in 0..64 {
        let hi = s * 0.5f64.powi(k);
        let lo = 0.5 * hi;
        // Composite Simpson with 8 subintervals per octave.
        let m = 8;
        let h = (hi - lo) / m as f64;
        let mut panel = integrand(lo)? + integrand(hi)?;
        for j in 1..m {
            let w = if j % 2 == 1 { 4.0 } else { 2.0 };
            panel += w * integrand(lo + j as f64 * h)?;
        }
        panel *= h / 3.0;
        total += panel;
        if panel.abs() >= prev_panel.abs() * 0.999 {
            stalled += 1;
            if stalled >= 8 && panel.abs() > 1e-12 * total.abs() {
                return Err(CurveError::QuadratureDivergence);
            }
        } else {
            stalled = 0;
        }
        if panel.abs() < 1e-16 * total.abs() {
            // Geometric tail estimate from the last observed ratio.
            let ratio = (panel.abs() / prev_panel.abs()).min(0.95);
            total += panel * ratio / (1.0 - ratio);
            return Ok(total);
        }
        prev_panel = panel;
    }
    Ok(total)
}

/// Energy summary of a curve: `E_f`, both p-elastic energies and both
/// scale-invariant quotients.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyReport {
    pub e_f: f64,
    pub f_p: f64,
    pub f_p_plus: f64,
    pub q_p: f64,
    pub q_p_plus: f64,
}

impl EnergyReport {
    pub fn evaluate(curve: &AngleCurve, f: &CurvatureIntegrand, p: f64) -> Result<EnergyReport> {
        Ok(EnergyReport {
            e_f: energy_ef(curve, f)?,
            f_p: energy_fp(curve, p)?,
            f_p_plus: energy_fp_plus(curve, p)?,
            q_p: quotient_qp(curve, p, false)?,
            q_p_plus: quotient_qp(curve, p, true)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::PointCurve;
    use crate::geom::Vec2;
    use approx::assert_relative_eq;
    use std::f64::consts::TAU;

    fn circle(radius: f64, n: usize) -> AngleCurve {
        let theta: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
        AngleCurve::new(TAU * radius, theta, 1).unwrap()
    }

    fn ellipse(a: f64, b: f64, n: usize) -> AngleCurve {
        let m = 4 * n;
        let pts: Vec<Vec2> = (0..m)
            .map(|k| {
                let t = TAU * k as f64 / m as f64;
                Vec2::new(a * t.cos(), b * t.sin())
            })
            .collect();
        AngleCurve::from_points(&PointCurve::new(pts).unwrap(), n).unwrap()
    }

    #[test]
    fn ef_circle_examples() {
        let sq = CurvatureIntegrand::power(2.0).unwrap();
        assert_relative_eq!(
            energy_ef(&circle(1.0, 256), &sq).unwrap(),
            TAU,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            energy_ef(&circle(2.0, 256), &sq).unwrap(),
            PI,
            max_relative = 1e-12
        );
        let cube_plus = CurvatureIntegrand::positive_power(3.0).unwrap();
        assert_relative_eq!(
            energy_ef(&circle(1.0, 256), &cube_plus).unwrap(),
            TAU,
            max_relative = 1e-12
        );
    }

    #[test]
    fn fp_circle_examples() {
        assert_relative_eq!(
            energy_fp(&circle(1.0, 512), 2.0).unwrap(),
            PI,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            energy_fp(&circle(1.0, 512), 3.0).unwrap(),
            PI.powf(2.0 / 3.0),
            max_relative = 1e-12
        );
        assert_relative_eq!(
            energy_fp(&circle(2.0, 512), 2.0).unwrap(),
            PI / 2.0,
            max_relative = 1e-12
        );
        // E^2 A = pi^3 for the unit circle at p = 2 (up to grid area error).
        let c = circle(1.0, 1024);
        let q = energy_fp(&c, 2.0).unwrap().powi(2) * c.area();
        assert_relative_eq!(q, PI.powi(3), max_relative = 1e-5);
        assert!(matches!(
            energy_fp(&c, 1.0),
            Err(CurveError::BadExponent(_))
        ));
    }

    #[test]
    fn quotient_circle_all_p() {
        for p in [1.25, 1.5, 2.0, 3.0, 5.0] {
            for radius in [0.5, 1.0, 2.0] {
                let q = quotient_qp(&circle(radius, 1024), p, false).unwrap();
                let expect = PI.powf((p + 1.0) / (p - 1.0));
                assert_relative_eq!(q, expect, max_relative = 1e-5);
            }
        }
    }

    #[test]
    fn quotient_scale_invariance() {
        let e = ellipse(2.0, 1.0, 512);
        let q0 = quotient_qp(&e, 2.0, false).unwrap();
        for lambda in [0.5, 2.0, 10.0] {
            let q = quotient_qp(&e.scaled(lambda), 2.0, false).unwrap();
            assert_relative_eq!(q, q0, max_relative = 1e-10);
        }
    }

    #[test]
    fn quotient_ellipse_matches_quadrature_oracle() {
        // Oracle: F_2 = (1/2) closed integral of kappa^2 ds on the analytic
        // ellipse, by fine composite Simpson in t.
        let (a, b): (f64, f64) = (2.0, 1.0);
        let m = 1 << 16;
        let mut acc = 0.0;
        for j in 0..m {
            let t = TAU * (j as f64 + 0.5) / m as f64;
            let g = a * a * t.sin().powi(2) + b * b * t.cos().powi(2);
            acc += (a * b / g.powf(1.5)).powi(2) * g.sqrt();
        }
        let f2 = 0.5 * acc * TAU / m as f64;
        let oracle = f2 * f2 * (PI * a * b);
        assert!(oracle > PI.powi(3));

        let q = quotient_qp(&ellipse(a, b, 1024), 2.0, false).unwrap();
        assert!(q > PI.powi(3));
        assert_relative_eq!(q, oracle, max_relative = 1e-3);
    }

    #[test]
    fn disc_energy_examples_and_mixing() {
        let sq = CurvatureIntegrand::power(2.0).unwrap();
        assert_relative_eq!(disc_energy(1.0, &sq).unwrap(), TAU, max_relative = 1e-14);
        assert_relative_eq!(disc_energy(2.0, &sq).unwrap(), PI, max_relative = 1e-14);
        // Disc mixing: average of the energies dominates the energy of the
        // area-averaged disc.
        let mixed = 0.5 * (disc_energy(1.0, &sq).unwrap() + disc_energy(2.0, &sq).unwrap());
        let r_avg = (2.5f64).sqrt();
        let e_avg = disc_energy(r_avg, &sq).unwrap();
        assert_relative_eq!(mixed, 1.5 * PI, max_relative = 1e-14);
        assert_relative_eq!(e_avg, TAU / r_avg, max_relative = 1e-14);
        assert!(mixed >= e_avg);
    }

    #[test]
    fn disc_energy_decreasing_in_radius() {
        for p in [1.5, 2.0, 3.0] {
            let f = CurvatureIntegrand::power(p).unwrap();
            let mut prev = f64::INFINITY;
            for i in 1..40 {
                let r = 0.25 * i as f64;
                let e = disc_energy(r, &f).unwrap();
                assert!(e < prev, "p={p} r={r}");
                prev = e;
            }
        }
    }

    #[test]
    fn g_convexity_powers_and_sqrt_table() {
        let grid = log_grid(0.25, 4.0, 64);
        for p in [1.5, 2.0] {
            let f = CurvatureIntegrand::power(p).unwrap();
            let rep = check_g_convexity(&f, &grid).unwrap();
            assert!(rep.convex, "p={p}: {rep:?}");
        }
        // Curve-derived default grids work for a circle (constant kappa)
        // and an eccentric ellipse.
        let f = CurvatureIntegrand::power(2.0).unwrap();
        for curve in [circle(1.0, 128), ellipse(2.0, 1.0, 256)] {
            let grid = g_grid_for_curve(&curve);
            assert!(check_g_convexity(&f, &grid).unwrap().convex);
        }
        // Tabulated f = sqrt(t): g(t) = t^{1/4} is concave, so the check
        // must report false (oracle: g'' = -3/16 t^{-7/4} < 0).
        let ts: Vec<f64> = (0..257).map(|i| 4.0 * i as f64 / 256.0).collect();
        let fs: Vec<f64> = ts.iter().map(|t| t.sqrt()).collect();
        let f = CurvatureIntegrand::tabulated(ts, fs).unwrap();
        let rep = check_g_convexity(&f, &log_grid(0.3, 3.0, 64)).unwrap();
        assert!(!rep.convex);
        assert!(rep.min_second_difference < 0.0);
    }

    #[test]
    fn f_monotone_powers_and_sqrt_table() {
        let grid = [0.25, 0.5, 1.0, 2.0, 4.0];
        let sq = CurvatureIntegrand::power(2.0).unwrap();
        let rep = check_f_monotone(&sq, &grid).unwrap();
        assert!(rep.holds);
        // Closed forms at s = 1: lhs = 2, rhs = 1/2.
        let rhs = super::integral_f_over_r(&sq, 1.0).unwrap();
        assert_relative_eq!(rhs, 0.5, max_relative = 1e-8);

        for p in [1.5, 3.0] {
            let f = CurvatureIntegrand::power(p).unwrap();
            assert!(check_f_monotone(&f, &grid).unwrap().holds);
        }

        // Tabulated f = sqrt(t): lhs = sqrt(s)/2, rhs = 2 sqrt(s); fails.
        let ts: Vec<f64> = (0..513).map(|i| 4.0 * i as f64 / 512.0).collect();
        let fs: Vec<f64> = ts.iter().map(|t| t.sqrt()).collect();
        let f = CurvatureIntegrand::tabulated(ts, fs).unwrap();
        let rep = check_f_monotone(&f, &[1.0, 2.0]).unwrap();
        assert!(!rep.holds);
        assert!(rep.worst_margin < -1.0);
    }

    #[test]
    fn fp_plus_le_fp_with_equality_on_convex() {
        let e = ellipse(2.0, 1.0, 512);
        let fp = energy_fp(&e, 2.0).unwrap();
        let fpp = energy_fp_plus(&e, 2.0).unwrap();
        assert_relative_eq!(fp, fpp, max_relative = 1e-12);

        // Nonconvex peanut: strict inequality.
        let m = 2048;
        let pts: Vec<Vec2> = (0..m)
            .map(|k| {
                let phi = TAU * k as f64 / m as f64;
                let r = 1.0 + 0.6 * (2.0 * phi).cos();
                Vec2::new(r * phi.cos(), r * phi.sin())
            })
            .collect();
        let peanut = AngleCurve::from_points(&PointCurve::new(pts).unwrap(), 512).unwrap();
        let fp = energy_fp(&peanut, 2.0).unwrap();
        let fpp = energy_fp_plus(&peanut, 2.0).unwrap();
        assert!(fpp < fp);
    }

    #[test]
    fn arc_energy_additivity() {
        let e = ellipse(2.0, 1.0, 256);
        let f = CurvatureIntegrand::power(2.0).unwrap();
        let total = energy_ef(&e, &f).unwrap();
        for split in [0.3, 1.7, 4.2] {
            let a = arc_energy(&e, &f, 0.0, split).unwrap();
            let b = arc_energy(&e, &f, split, e.length()).unwrap();
            assert_relative_eq!(a + b, total, max_relative = 1e-12);
        }
    }

    #[test]
    fn tabulated_out_of_range_errors() {
        let f = CurvatureIntegrand::tabulated(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 4.0]).unwrap();
        assert!(f.eval(1.5).is_ok());
        assert!(matches!(
            f.eval(3.0),
            Err(CurveError::TabulatedOutOfRange(..))
        ));
        let c = circle(0.25, 64); // kappa = 4, outside the table
        assert!(energy_ef(&c, &f).is_err());
    }
}
