//! Named curve generators and seeded random families.
//!
//! Analytic shapes are sampled directly in tangent-angle space: the dense
//! parametric tangent direction is unwrapped, resampled at uniform arc
//! length, and projected onto the closure constraint. Curves built this way
//! are simple by construction (star-shaped polar graphs and support-function
//! ovals), so no quadratic self-intersection test is needed here.

use crate::curve::{wrap_angle, AngleCurve};
use crate::error::Result;
use crate::geom::Vec2;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Circle of radius `r`: the exact discrete curve with constant curvature.
pub fn circle(r: f64, n: usize) -> AngleCurve {
    let theta: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    AngleCurve::new(TAU * r, theta, 1).expect("valid circle parameters")
}

/// Axis-aligned ellipse with semi-axes `a >= b > 0`.
pub fn ellipse(a: f64, b: f64, n: usize) -> Result<AngleCurve> {
    from_parametric(n, |t| {
        let p = Vec2::new(a * t.cos(), b * t.sin());
        let d = Vec2::new(-a * t.sin(), b * t.cos());
        (p, d)
    })
}

/// Polar graph `r(phi) = 1 + amp * cos(lobes * phi)`; the classic two-lobe
/// peanut is `amp = 0.6`, `lobes = 2`. Requires `amp < 1` so `r > 0`.
pub fn peanut(amp: f64, lobes: u32, n: usize) -> Result<AngleCurve> {
    polar(n, |phi| {
        let c = (lobes as f64 * phi).cos();
        let s = (lobes as f64 * phi).sin();
        (1.0 + amp * c, -amp * lobes as f64 * s)
    })
}

/// Star-shaped curve from a polar radius function and its derivative.
pub fn polar(n: usize, rf: impl Fn(f64) -> (f64, f64)) -> Result<AngleCurve> {
    from_parametric(n, |phi| {
        let (r, rp) = rf(phi);
        let (s, c) = phi.sin_cos();
        let p = Vec2::new(r * c, r * s);
        let d = Vec2::new(rp * c - r * s, rp * s + r * c);
        (p, d)
    })
}

/// Strictly convex oval from a support function `h(phi)` with `h + h'' > 0`;
/// the boundary point for outer normal direction `phi` is
/// `(h cos - h' sin, h sin + h' cos)` and the curvature radius is `h + h''`.
pub fn support_oval(n: usize, h: impl Fn(f64) -> (f64, f64, f64)) -> Result<AngleCurve> {
    from_parametric(n, |phi| {
        let (h0, h1, h2) = h(phi);
        let (s, c) = phi.sin_cos();
        let p = Vec2::new(h0 * c - h1 * s, h0 * s + h1 * c);
        // gamma'(phi) = (h + h'') * tangent, tangent = (-sin, cos).
        let rho = h0 + h2;
        let d = Vec2::new(-rho * s, rho * c);
        (p, d)
    })
}

/// Egg-shaped convex oval with a single axis of symmetry (not
/// centrosymmetric): support function `1 + 0.12 cos(2 phi) + 0.06 cos(3 phi)`,
/// which keeps the curvature radius `h + h'' >= 0.16`.
pub fn egg_oval(n: usize) -> Result<AngleCurve> {
    support_oval(n, |phi| {
        let h = 1.0 + 0.12 * (2.0 * phi).cos() + 0.06 * (3.0 * phi).cos();
        let h1 = -0.24 * (2.0 * phi).sin() - 0.18 * (3.0 * phi).sin();
        let h2 = -0.48 * (2.0 * phi).cos() - 0.54 * (3.0 * phi).cos();
        (h, h1, h2)
    })
}

/// Seeded random perturbed circle: `r(phi) = 1 + sum a_m cos(m phi + phase)`
/// over modes 2..=6 with total amplitude below `max_amp` (must stay well
/// under 1 so the curve remains simple and smooth).
pub fn perturbed_circle(seed: u64, max_amp: f64, n: usize) -> Result<AngleCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modes: Vec<(f64, f64, f64)> = (2..=6)
        .map(|m| {
            let amp: f64 = rng.random_range(0.0..1.0);
            let phase: f64 = rng.random_range(0.0..TAU);
            (m as f64, amp, phase)
        })
        .collect();
    let total: f64 = modes.iter().map(|&(_, a, _)| a).sum();
    let scale = if total > 0.0 {
        max_amp * rng.random_range(0.05..1.0) / total
    } else {
        0.0
    };
    polar(n, move |phi| {
        let mut r = 1.0;
        let mut rp = 0.0;
        for &(m, a, ph) in &modes {
            r += scale * a * (m * phi + ph).cos();
            rp -= scale * a * m * (m * phi + ph).sin();
        }
        (r, rp)
    })
}

/// Seeded random strictly convex oval via a random support function with
/// modes 2..=5; amplitudes are scaled so `h + h'' >= 0.25`, which keeps the
/// curvature positive and bounded.
pub fn random_convex_oval(seed: u64, n: usize) -> Result<AngleCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0001);
    let modes: Vec<(f64, f64, f64)> = (2..=5)
        .map(|m| {
            let amp: f64 = rng.random_range(0.2..1.0);
            let phase: f64 = rng.random_range(0.0..TAU);
            (m as f64, amp, phase)
        })
        .collect();
    // sum (m^2 - 1) |b_m| <= 0.75 guarantees h + h'' >= 0.25.
    let weight: f64 = modes.iter().map(|&(m, a, _)| (m * m - 1.0) * a).sum();
    let scale = 0.75 * rng.random_range(0.15..1.0) / weight;
    support_oval(n, move |phi| {
        let mut h = 1.0;
        let mut h1 = 0.0;
        let mut h2 = 0.0;
        for &(m, a, ph) in &modes {
            let b = scale * a;
            h += b * (m * phi + ph).cos();
            h1 -= b * m * (m * phi + ph).sin();
            h2 -= b * m * m * (m * phi + ph).cos();
        }
        (h, h1, h2)
    })
}

/// Seeded random peanut: two-lobe polar graph with amplitude in
/// [0.35, 0.65] and a random rotation.
pub fn random_peanut(seed: u64, n: usize) -> Result<AngleCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0002);
    let amp: f64 = rng.random_range(0.35..0.65);
    let rot: f64 = rng.random_range(0.0..TAU);
    polar(n, move |phi| {
        let c = (2.0 * (phi + rot)).cos();
        let s = (2.0 * (phi + rot)).sin();
        (1.0 + amp * c, -2.0 * amp * s)
    })
}

/// Resample a parametric closed curve `t in [0, 2 pi) -> (point, velocity)`
/// to `n` uniform arc-length tangent-angle samples.
fn from_parametric(n: usize, f: impl Fn(f64) -> (Vec2, Vec2)) -> Result<AngleCurve> {
    let dense = (8 * n).max(4096);
    // Tangent direction and speed at dense midpoints.
    let mut speeds = Vec::with_capacity(dense);
    let mut angles = Vec::with_capacity(dense);
    for j in 0..dense {
        let t = TAU * (j as f64 + 0.5) / dense as f64;
        let (_, d) = f(t);
        speeds.push(d.norm());
        angles.push(d.y.atan2(d.x));
    }
    // Unwrap the dense angle sequence.
    let mut unwrapped = Vec::with_capacity(dense);
    unwrapped.push(wrap_angle(angles[0]));
    for j in 1..dense {
        let step = wrap_angle(angles[j] - angles[j - 1]);
        unwrapped.push(unwrapped[j - 1] + step);
    }
    let closing = wrap_angle(angles[0] - angles[dense - 1]);
    let total = unwrapped[dense - 1] + closing - unwrapped[0];
    let turning = (total / TAU).round() as i32;

    // Cumulative arc length at dense cell boundaries (midpoint rule).
    let dt = TAU / dense as f64;
    let mut cum = Vec::with_capacity(dense + 1);
    cum.push(0.0);
    for j in 0..dense {
        cum.push(cum[j] + speeds[j] * dt);
    }
    let length = cum[dense];

    // Sample the unwrapped angle at uniform arc-length midpoints.
    let ds = length / n as f64;
    let mut theta = Vec::with_capacity(n);
    let mut j = 0usize;
    for k in 0..n {
        let s = (k as f64 + 0.5) * ds;
        while j + 1 < dense && cum[j + 1] < s {
            j += 1;
        }
        // Angle of dense cell j is attributed to its arc midpoint.
        let mid_j = 0.5 * (cum[j] + cum[j + 1]);
        let (a, b, ma, mb) = if s < mid_j {
            if j == 0 {
                (
                    unwrapped[dense - 1] - TAU * turning as f64,
                    unwrapped[0],
                    0.5 * (cum[dense - 1] + cum[dense]) - length,
                    mid_j,
                )
            } else {
                (
                    unwrapped[j - 1],
                    unwrapped[j],
                    0.5 * (cum[j - 1] + cum[j]),
                    mid_j,
                )
            }
        } else if j + 1 == dense {
            // Interpolate into cell 0 of the next period.
            (
                unwrapped[dense - 1],
                unwrapped[0] + TAU * turning as f64,
                mid_j,
                0.5 * (cum[0] + cum[1]) + length,
            )
        } else {
            (
                unwrapped[j],
                unwrapped[j + 1],
                mid_j,
                0.5 * (cum[j + 1] + cum[j + 2]),
            )
        };
        let frac = if mb > ma { (s - ma) / (mb - ma) } else { 0.0 };
        theta.push(a + frac.clamp(0.0, 1.0) * (b - a));
    }

    let mut out = AngleCurve::new(length, theta, turning)?;
    out.project_closure()?;
    Ok(out)
}
