//! Constrained minimization of the p-elastic energy `F_p` over tangent-angle
//! curves at fixed enclosed area.
//!
//! Variables are the angle samples plus the total length. The two closure
//! constraints are enforced exactly: every trial point is projected back
//! onto the manifold `sum cos = sum sin = 0` and gradients are tangent-
//! projected (the closure sums are bounded, so carrying multipliers for
//! them invites saturation; projection does not). The area defect is the
//! one augmented-Lagrangian constraint: its multiplier refreshes each outer
//! iteration and the penalty grows while the defect fails to halve. Inner
//! iterations are projected gradient descent with a Barzilai-Borwein step
//! and Armijo backtracking, so the augmented objective is nonincreasing
//! across accepted steps. The rotation gauge (a constant added to every
//! angle) is tangent and gradient-neutral, and is normalized to
//! `theta[0] = 0` when the result is packaged.

use crate::curve::AngleCurve;
use crate::energy;
use crate::error::{CurveError, Result};
use crate::geom::Vec2;
use serde::Serialize;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Serialize)]
pub struct OptimizerConfig {
    /// Exponent of the p-elastic energy (> 1).
    pub p: f64,
    /// Enclosed-area target (> 0).
    pub target_area: f64,
    /// Grid size; the initial curve must carry exactly this many samples.
    pub n: usize,
    pub max_outer: usize,
    pub max_inner: usize,
    /// Initial quadratic penalty and its growth factor.
    pub penalty_init: f64,
    pub penalty_growth: f64,
    /// Inner stop on the step length (relative).
    pub step_tol: f64,
    /// Stop on the augmented-gradient norm.
    pub grad_tol: f64,
    /// Stop on the normalized constraint defects (closure relative to L,
    /// area relative to the target).
    pub constraint_tol: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            p: 2.0,
            target_area: std::f64::consts::PI,
            n: 256,
            max_outer: 40,
            max_inner: 30_000,
            penalty_init: 10.0,
            penalty_growth: 10.0,
            step_tol: 1e-14,
            grad_tol: 1e-6,
            constraint_tol: 1e-9,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.p > 1.0) {
            return Err(CurveError::BadExponent(self.p));
        }
        if !(self.target_area > 0.0) {
            return Err(CurveError::BadConfig("target_area must be > 0".into()));
        }
        if self.n < crate::curve::MIN_SAMPLES {
            return Err(CurveError::BadConfig("grid too small".into()));
        }
        if !(self.grad_tol > 0.0 && self.constraint_tol > 0.0 && self.step_tol > 0.0) {
            return Err(CurveError::BadConfig("tolerances must be > 0".into()));
        }
        Ok(())
    }
}

/// One accepted inner step.
#[derive(Debug, Clone, Serialize)]
pub struct IterationRecord {
    pub outer: usize,
    pub f_p: f64,
    /// `|area - target| / target`.
    pub area_defect: f64,
    /// L1 closure defect relative to the length.
    pub closure_defect: f64,
    pub grad_norm: f64,
    /// Augmented objective (comparable only within one outer iteration).
    pub aug_objective: f64,
    /// Scale-invariant quotient of the iterate.
    pub q_p: f64,
}

#[derive(Debug, Clone)]
pub struct OptimizationResult {
    pub curve: AngleCurve,
    pub history: Vec<IterationRecord>,
    /// Fitted stationarity constant (signed; compare magnitudes).
    pub el_alpha: f64,
    /// Relative Euler-Lagrange residual of the final curve.
    pub el_residual: f64,
    /// `std(kappa)/mean(kappa)` of the final curve.
    pub circularity: f64,
    /// Final scale-invariant quotient.
    pub q_p: f64,
    pub converged: bool,
    /// False if a periodic spot check ever found a self-intersection.
    pub stayed_simple: bool,
    pub outer_iters: usize,
}

/// `F_p` and its analytic gradient with respect to every angle sample and
/// the length. The angle gradient acts through the two adjacent curvature
/// cells; the length gradient is `2(1-p)/p * F_p / L`.
pub fn objective_and_gradient(theta: &[f64], length: f64, p: f64) -> (f64, Vec<f64>, f64) {
    let n = theta.len();
    let ds = length / n as f64;
    // Curvature per cell with the turning-1 wrap.
    let mut kappa = vec![0.0; n];
    for i in 0..n {
        let next = if i + 1 == n {
            theta[0] + TAU
        } else {
            theta[i + 1]
        };
        kappa[i] = (next - theta[i]) / ds;
    }
    let mut s_sum = 0.0;
    let mut phi = vec![0.0; n]; // |kappa|^{p-1} sgn(kappa)
    for i in 0..n {
        let a = kappa[i].abs();
        let ap1 = a.powf(p - 1.0);
        s_sum += ap1 * a;
        phi[i] = ap1 * kappa[i].signum();
    }
    let s = ds * s_sum;
    let cp = 0.5f64.powf(2.0 / p);
    let f = cp * s.powf(2.0 / p);
    let coef = 2.0 * cp * s.powf(2.0 / p - 1.0);
    let mut grad = vec![0.0; n];
    for j in 0..n {
        let prev = phi[(j + n - 1) % n];
        grad[j] = coef * (prev - phi[j]);
    }
    let grad_l = 2.0 * (1.0 - p) / p * f / length;
    (f, grad, grad_l)
}

/// Shoelace area of the reconstruction (origin at vertex 0) and its analytic
/// gradient.
fn area_value_grad(theta: &[f64], length: f64) -> (f64, Vec<f64>, f64) {
    let n = theta.len();
    let ds = length / n as f64;
    let mut verts = Vec::with_capacity(n);
    let mut p = Vec2::ZERO;
    verts.push(p);
    for &t in &theta[..n - 1] {
        p = p + Vec2::dir(t) * ds;
        verts.push(p);
    }
    let mut area = 0.0;
    for k in 0..n - 1 {
        area += verts[k].cross(verts[k + 1]);
    }
    area *= 0.5;
    let last = verts[n - 1];
    let mut grad = vec![0.0; n];
    for (i, g) in grad.iter_mut().enumerate().take(n - 1) {
        let w = last - verts[i] - verts[i + 1];
        // d/d theta_i of the shoelace sum: -(ds/2) * u_i . w
        let u = Vec2::dir(theta[i]);
        *g = -(0.5 * ds) * u.dot(w);
    }
    (area, grad, 2.0 * area / length)
}

/// Raw constraint values `(c_x, c_y, area - target)` where `c_x, c_y` are
/// the closure sums `ds * sum cos`, `ds * sum sin`.
pub fn constraints(theta: &[f64], length: f64, target_area: f64) -> [f64; 3] {
    let n = theta.len();
    let ds = length / n as f64;
    let (mut cx, mut cy) = (0.0, 0.0);
    for &t in theta {
        cx += t.cos();
        cy += t.sin();
    }
    let (area, _, _) = area_value_grad(theta, length);
    [ds * cx, ds * cy, area - target_area]
}

/// Analytic Jacobian of [`constraints`]: per-constraint gradients in the
/// angle samples plus the length column.
pub fn constraints_jacobian(theta: &[f64], length: f64) -> ([Vec<f64>; 3], [f64; 3]) {
    let n = theta.len();
    let ds = length / n as f64;
    let (mut cx, mut cy) = (0.0, 0.0);
    let mut jx = vec![0.0; n];
    let mut jy = vec![0.0; n];
    for (i, &t) in theta.iter().enumerate() {
        let (s, c) = t.sin_cos();
        cx += c;
        cy += s;
        jx[i] = -ds * s;
        jy[i] = ds * c;
    }
    let (area, ja, dal) = area_value_grad(theta, length);
    let _ = area;
    ([jx, jy, ja], [ds * cx / length, ds * cy / length, dal])
}

/// Remove from `g` its components along the closure constraint gradients
/// (the normals of the closure manifold), i.e. solve `(J J^T) u = J g` for
/// the 2-row Jacobian `J = [-sin theta; cos theta]` and subtract `J^T u`.
fn tangent_project(theta: &[f64], g: &mut [f64]) {
    let (mut ss, mut cc, mut sc) = (0.0, 0.0, 0.0);
    let (mut b1, mut b2) = (0.0, 0.0);
    for (&t, &gi) in theta.iter().zip(g.iter()) {
        let (s, c) = t.sin_cos();
        ss += s * s;
        cc += c * c;
        sc += s * c;
        b1 += -s * gi;
        b2 += c * gi;
    }
    let det = ss * cc - sc * sc;
    if det.abs() < 1e-12 * (theta.len() as f64).powi(2) {
        return; // degenerate normals; leave the gradient untouched
    }
    let u1 = (b1 * cc - b2 * (-sc)) / det;
    let u2 = (ss * b2 - (-sc) * b1) / det;
    for (t, gi) in theta.iter().zip(g.iter_mut()) {
        let (s, c) = t.sin_cos();
        *gi -= -s * u1 + c * u2;
    }
}

struct AugEval {
    value: f64,
    /// Tangent-projected gradient in the angle samples.
    grad_theta: Vec<f64>,
    grad_l: f64,
    f_p: f64,
    area: f64,
    /// Normalized area defect `(A - a0) / a0`.
    c_area: f64,
}

/// Augmented Lagrangian in the area constraint, evaluated on the closure
/// manifold (iterates are kept exactly closed by projection, so the two
/// closure constraints carry no multipliers; their normal directions are
/// removed from the gradient instead).
fn aug_eval(theta: &[f64], length: f64, p: f64, a0: f64, lambda: f64, mu: f64) -> AugEval {
    let (f, mut gt, mut gl) = objective_and_gradient(theta, length, p);
    let (area, ga, gal) = area_value_grad(theta, length);
    let c = (area - a0) / a0;
    let w = lambda + mu * c;
    for (g, gai) in gt.iter_mut().zip(&ga) {
        *g += w * gai / a0;
    }
    gl += w * gal / a0;
    tangent_project(theta, &mut gt);
    AugEval {
        value: f + lambda * c + 0.5 * mu * c * c,
        grad_theta: gt,
        grad_l: gl,
        f_p: f,
        area,
        c_area: c,
    }
}

fn grad_norm(e: &AugEval) -> f64 {
    let mut acc = e.grad_l * e.grad_l;
    for g in &e.grad_theta {
        acc += g * g;
    }
    acc.sqrt()
}

/// Least-squares area multiplier `argmin || grad F + lambda grad c ||` over
/// the closure tangent space; exact at stationary points, harmless
/// elsewhere.
fn least_squares_multiplier(theta: &[f64], length: f64, p: f64, a0: f64) -> f64 {
    let (_, mut gf, gfl) = objective_and_gradient(theta, length, p);
    let (_, mut ga, gal) = area_value_grad(theta, length);
    tangent_project(theta, &mut gf);
    tangent_project(theta, &mut ga);
    let mut num = gfl * gal / a0;
    let mut den = (gal / a0) * (gal / a0);
    for (f, a) in gf.iter().zip(&ga) {
        num += f * a / a0;
        den += (a / a0) * (a / a0);
    }
    if den > 1e-300 {
        -num / den
    } else {
        0.0
    }
}

/// Minimize `F_p` at fixed enclosed area from the given initial curve.
///
/// Iterates live on the closure manifold: every trial point is projected
/// back onto `sum cos = sum sin = 0`, so only the area constraint carries an
/// augmented-Lagrangian multiplier. Reaching `max_outer` without meeting the
/// tolerances is reported through `converged = false`, not as an error.
pub fn minimize_fp(initial: &AngleCurve, cfg: &OptimizerConfig) -> Result<OptimizationResult> {
    cfg.validate()?;
    if initial.turning() != 1 {
        return Err(CurveError::BadTurning(initial.turning()));
    }
    if initial.n() != cfg.n {
        return Err(CurveError::BadConfig(format!(
            "initial curve has {} samples, config asks {}",
            initial.n(),
            cfg.n
        )));
    }
    let mut work = initial.clone();
    work.project_closure()?;
    let a_init = work.area();
    if a_init <= 0.0 {
        return Err(CurveError::Degenerate(format!(
            "initial enclosed area {a_init} <= 0"
        )));
    }
    // Start feasible in area; the angles are untouched.
    let work = work.scaled((cfg.target_area / a_init).sqrt());

    let n = cfg.n;
    let a0 = cfg.target_area;
    let p = cfg.p;
    let mut theta: Vec<f64> = work.theta().to_vec();
    let mut length = work.length();
    let mut lambda = least_squares_multiplier(&theta, length, p, a0);
    let mut mu = cfg.penalty_init;
    let trace = std::env::var("PELASTICA_TRACE").is_ok();
    let mut history = Vec::new();
    let mut stayed_simple = true;
    let mut converged = false;
    let mut outer_done = 0;
    let mut prev_cmax = f64::INFINITY;
    let mut accepted_total = 0usize;

    'outer: for outer in 0..cfg.max_outer {
        let inner_tol = cfg.grad_tol.max(1e-4 * 0.2f64.powi(outer as i32));
        let mut e = aug_eval(&theta, length, p, a0, lambda, mu);
        let mut step = 1e-3 / grad_norm(&e).max(1.0);
        let mut inner = 0usize;
        while inner < cfg.max_inner {
            inner += 1;
            let gnorm = grad_norm(&e);
            if gnorm <= inner_tol {
                break;
            }
            let g2 = gnorm * gnorm;
            // Safety cap: no angle sample moves more than 0.5 rad and the
            // length changes at most 20% in one step.
            let ginf = e
                .grad_theta
                .iter()
                .fold(e.grad_l.abs() / (0.2 * length), |m, g| m.max(g.abs() / 0.5));
            let t_cap = if ginf > 0.0 { 1.0 / ginf } else { 1e8 };
            let mut t = step.clamp(1e-14, 1e8).min(t_cap);
            let mut accepted = None;
            for _ in 0..60 {
                let mut th_new: Vec<f64> = theta
                    .iter()
                    .zip(&e.grad_theta)
                    .map(|(x, g)| x - t * g)
                    .collect();
                let l_new = length - t * e.grad_l;
                if l_new > 1e-8 * work.length()
                    && crate::curve::project_closure_samples(&mut th_new).is_ok()
                {
                    let cand = aug_eval(&th_new, l_new, p, a0, lambda, mu);
                    let ok = cand.value.is_finite()
                        && cand.area > 0.5 * a0
                        && cand.area < 10.0 * a0
                        && cand.value <= e.value - 1e-4 * t * g2;
                    if ok {
                        accepted = Some((th_new, l_new, cand));
                        break;
                    }
                }
                t *= 0.5;
            }
            let Some((th_new, l_new, cand)) = accepted else {
                break; // no verifiable decrease left at this multiplier
            };
            // Barzilai-Borwein step for the next iteration.
            let (mut sy, mut ss_d, mut yy) = (0.0, 0.0, 0.0);
            for i in 0..n {
                let sd = th_new[i] - theta[i];
                let yd = cand.grad_theta[i] - e.grad_theta[i];
                sy += sd * yd;
                ss_d += sd * sd;
                yy += yd * yd;
            }
            let sdl = l_new - length;
            let ydl = cand.grad_l - e.grad_l;
            sy += sdl * ydl;
            ss_d += sdl * sdl;
            yy += ydl * ydl;
            step = if sy > 0.0 {
                (ss_d / sy).min(sy / yy.max(1e-300)).clamp(1e-14, 1e8)
            } else {
                t * 2.0
            };

            theta = th_new;
            length = l_new;
            let step_rel = ss_d.sqrt() / (1.0 + length);
            e = cand;
            accepted_total += 1;

            history.push(IterationRecord {
                outer,
                f_p: e.f_p,
                area_defect: e.c_area.abs(),
                closure_defect: closure_defect_rel(&theta, length),
                grad_norm: grad_norm(&e),
                aug_objective: e.value,
                q_p: e.f_p.powf(p / (p - 1.0)) * e.area,
            });
            if accepted_total % 256 == 0 && stayed_simple {
                stayed_simple = spot_check_simple(&theta, length);
            }
            if step_rel < cfg.step_tol {
                break;
            }
        }

        outer_done = outer + 1;
        let cmax = e.c_area.abs();
        if trace {
            eprintln!(
                "outer {outer}: inner {inner}, f_p {:.6}, L {length:.4}, area {:.4}, cmax {cmax:.3e}, grad {:.3e}, mu {mu:.1e}, lambda {lambda:.4}",
                e.f_p, e.area, grad_norm(&e)
            );
        }
        if grad_norm(&e) <= cfg.grad_tol && cmax <= cfg.constraint_tol {
            converged = true;
            break 'outer;
        }
        lambda += mu * e.c_area;
        // Grow the penalty only while the constraint is genuinely unmet and
        // failed to halve; growing it on noise-level defects would amplify
        // rounding into the augmented gradient.
        if cmax > cfg.constraint_tol && cmax > 0.5 * prev_cmax {
            mu = (mu * cfg.penalty_growth).min(1e12);
        }
        prev_cmax = cmax;
    }

    // Normalize the rotation gauge to theta[0] = 0 (a neutral symmetry the
    // descent never excites) and close exactly.
    let base = theta[0];
    let mut final_curve = AngleCurve::new(length, theta, 1)?.rotated(-base);
    final_curve.project_closure()?;
    if stayed_simple {
        stayed_simple = final_curve
            .to_points_with_tol(Vec2::ZERO, 1.0)
            .map(|pc| pc.is_simple())
            .unwrap_or(false);
    }
    let (el_alpha, el_residual) = el_residual(&final_curve, p)?;
    let q_p = energy::quotient_qp(&final_curve, p, false)?;
    Ok(OptimizationResult {
        circularity: final_curve.circularity(),
        curve: final_curve,
        history,
        el_alpha,
        el_residual,
        q_p,
        converged,
        stayed_simple,
        outer_iters: outer_done,
    })
}

fn closure_defect_rel(theta: &[f64], length: f64) -> f64 {
    let ds = length / theta.len() as f64;
    let (mut cx, mut cy) = (0.0, 0.0);
    for &t in theta {
        cx += t.cos();
        cy += t.sin();
    }
    ((ds * cx).abs() + (ds * cy).abs()) / length
}

fn spot_check_simple(theta: &[f64], length: f64) -> bool {
    AngleCurve::new(length, theta.to_vec(), 1)
        .ok()
        .and_then(|c| crate::curve::PointCurve::new(c.vertices(Vec2::ZERO)).ok())
        .map(|pc| pc.is_simple())
        .unwrap_or(false)
}

/// Least-squares fit of the stationarity relation
/// `kappa^p = alpha * (gamma - centroid) . n` over all samples; returns the
/// fitted `alpha` (signed) and the relative residual. Minimizers of `F_p`
/// at fixed area satisfy it with residual ~ 0.
pub fn el_residual(curve: &AngleCurve, p: f64) -> Result<(f64, f64)> {
    if curve.turning() != 1 {
        return Err(CurveError::BadTurning(curve.turning()));
    }
    let n = curve.n();
    let verts = curve.vertices(Vec2::ZERO);
    let centroid = crate::geom::polygon_centroid(&verts);
    let theta = curve.theta();
    let kappa = curve.curvature();
    let mut lhs = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for v in 0..n {
        // Vertex v sits between edges v-1 and v; its curvature is the cell
        // value kappa[v-1] and its normal bisects the edge directions.
        let prev = if v == 0 {
            theta[n - 1] - TAU
        } else {
            theta[v - 1]
        };
        let psi = 0.5 * (prev + theta[v]);
        let normal = Vec2::dir(psi).perp();
        let k = kappa[(v + n - 1) % n];
        lhs.push(k.abs().powf(p) * k.signum());
        rhs.push((verts[v] - centroid).dot(normal));
    }
    let d2: f64 = rhs.iter().map(|d| d * d).sum();
    let l2: f64 = lhs.iter().map(|w| w * w).sum();
    if d2 < 1e-30 * l2.max(1e-300) {
        return Err(CurveError::DegenerateFit(
            "support term (gamma - centroid) . n vanishes".into(),
        ));
    }
    let alpha = lhs.iter().zip(&rhs).map(|(w, d)| w * d).sum::<f64>() / d2;
    let mut res2 = 0.0;
    for (w, d) in lhs.iter().zip(&rhs) {
        let r = w - alpha * d;
        res2 += r * r;
    }
    Ok((alpha, (res2 / l2).sqrt()))
}
