//! Cut-and-paste constructions on closed curves: equal-area parallel-tangent
//! chords, centrosymmetrization, the ramp-and-plateau angle perturbation,
//! parallel-segment notch removal, and the reduction of a two-lobe nonconvex
//! curve to a pair of convex sets with a disc comparison.
//!
//! All constructions work on the piecewise-linear tangent-angle model of an
//! [`AngleCurve`] (angle interpolated linearly between edge midpoints), for
//! which arc energies are exact integrals and resampling a glued angle
//! profile can only decrease the energy of a convex integrand (the sampled
//! curvature of each output cell is the cell average of the profile slope).

use crate::curve::{AngleCurve, PointCurve};
use crate::energy::{self, CurvatureIntegrand};
use crate::error::{CurveError, Result};
use crate::geom::{self, Vec2};
use serde::Serialize;
use std::f64::consts::PI;

/// Tolerance (radians) for the centrosymmetry precondition checks.
const SYMMETRY_TOL: f64 = 1e-6;

/// Chord between two boundary points with parallel tangents.
#[derive(Debug, Clone, Serialize)]
pub struct Chord {
    /// Arc-length parameters of the endpoints, `0 <= s1 < s2 < L + s1`.
    pub s1: f64,
    pub s2: f64,
    pub midpoint: Vec2,
    /// `|theta(s2) - theta(s1) - pi|`; zero up to rounding by construction.
    pub tangent_gap: f64,
    /// Enclosed areas of the two sides (arc `[s1, s2]` first).
    pub area_split: (f64, f64),
}

/// Which construction produced a [`SurgeryReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Centrosymmetrize,
    PerturbTheta,
    NotchRemoval,
    ConvexArcReduction,
}

/// Before/after ledger of a surgery operation.
#[derive(Debug, Clone)]
pub struct SurgeryReport {
    pub input: AngleCurve,
    pub output: AngleCurve,
    pub energy_before: f64,
    pub energy_after: f64,
    pub area_before: f64,
    pub area_after: f64,
    pub construction: Construction,
}

/// Solve `theta(s) = target` for `s` in `[lo, hi]` on the piecewise-linear
/// angle model, assuming `theta` is nondecreasing there; returns the
/// leftmost solution.
fn invert_theta(curve: &AngleCurve, target: f64, lo: f64, hi: f64) -> Result<f64> {
    let t_lo = curve.theta_at(lo);
    let t_hi = curve.theta_at(hi);
    if !(t_lo <= target + 1e-12 && target <= t_hi + 1e-12) {
        return Err(CurveError::ChordSearchFailed(format!(
            "target angle {target:.6} outside [{t_lo:.6}, {t_hi:.6}]"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    // Bisection on the monotone interpolant, then a linear solve inside the
    // final cell for an exact-in-cell answer.
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if curve.theta_at(m) < target {
            a = m;
        } else {
            b = m;
        }
        if b - a < 1e-13 * curve.length() {
            break;
        }
    }
    let (ta, tb) = (curve.theta_at(a), curve.theta_at(b));
    if tb > ta {
        Ok(a + (target - ta) / (tb - ta) * (b - a))
    } else {
        Ok(a)
    }
}

/// Arc position `s2 > s1` with `theta(s2) = theta(s1) + pi` (antipodal
/// tangent) for a convex curve.
fn antipodal(curve: &AngleCurve, s1: f64) -> Result<f64> {
    invert_theta(curve, curve.theta_at(s1) + PI, s1, s1 + curve.length())
}

/// Split areas for the chord through `P(s1)` and `P(s2)`: polygon areas of
/// both boundary arcs closed by the chord. The two values sum to the total
/// enclosed area up to rounding.
fn chord_split(curve: &AngleCurve, s1: f64, s2: f64) -> (f64, f64) {
    let verts = curve.vertices(Vec2::ZERO);
    let ds = curve.ds();
    let n = curve.n();
    let side = |from: f64, to: f64| -> f64 {
        let mut poly = Vec::new();
        poly.push(curve.point_at(from, Vec2::ZERO));
        let mut k = (from / ds).floor() as i64 + 1;
        while (k as f64) * ds < to {
            poly.push(verts[(k.rem_euclid(n as i64)) as usize]);
            k += 1;
        }
        poly.push(curve.point_at(to, Vec2::ZERO));
        geom::polygon_signed_area(&poly)
    };
    (side(s1, s2), side(s2, s1 + curve.length()))
}

/// Find a chord with parallel endpoint tangents that splits the enclosed
/// area in half, by bisection of the (continuous) area imbalance over half a
/// period of antipodal pairs.
pub fn find_equal_area_parallel_chord(curve: &AngleCurve) -> Result<Chord> {
    if curve.turning() != 1 {
        return Err(CurveError::BadTurning(curve.turning()));
    }
    if !curve.is_convex(1e-9) {
        return Err(CurveError::NotConvex);
    }
    let total = curve.area();
    let tol = 1e-7 * total;
    let imbalance = |s1: f64| -> Result<f64> {
        let s2 = antipodal(curve, s1)?;
        let (a1, a2) = chord_split(curve, s1, s2);
        Ok(a1 - a2)
    };

    // Probe, take an immediate near-zero, otherwise bracket a sign change.
    let probes = (curve.n() / 2).max(32);
    let upper = antipodal(curve, 0.0)?;
    let mut bracket: Option<(f64, f64, f64)> = None;
    let mut prev: Option<(f64, f64)> = None;
    let mut best = (f64::INFINITY, 0.0);
    for j in 0..=probes {
        let s = upper * j as f64 / probes as f64;
        let d = imbalance(s)?;
        if d.abs() < best.0 {
            best = (d.abs(), s);
        }
        if d.abs() <= tol {
            bracket = None;
            best = (d.abs(), s);
            break;
        }
        if let Some((ps, pd)) = prev {
            if pd.signum() != d.signum() {
                bracket = Some((ps, s, pd));
                break;
            }
        }
        prev = Some((s, d));
    }

    let s1 = if let Some((mut a, mut b, da)) = bracket {
        for _ in 0..100 {
            let m = 0.5 * (a + b);
            let dm = imbalance(m)?;
            if dm.abs() <= 1e-9 * total {
                a = m;
                b = m;
                break;
            }
            if dm.signum() == da.signum() {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    } else if best.0 <= tol {
        best.1
    } else {
        return Err(CurveError::ChordSearchFailed(
            "no sign change in the area imbalance; discretization too coarse".into(),
        ));
    };

    let s2 = antipodal(curve, s1)?;
    let (a1, a2) = chord_split(curve, s1, s2);
    if (a1 - a2).abs() > 1e-6 * total {
        return Err(CurveError::ChordSearchFailed(format!(
            "residual imbalance {:.3e} exceeds tolerance",
            (a1 - a2).abs()
        )));
    }
    let p1 = curve.point_at(s1, Vec2::ZERO);
    let p2 = curve.point_at(s2, Vec2::ZERO);
    Ok(Chord {
        s1,
        s2,
        midpoint: (p1 + p2) * 0.5,
        tangent_gap: (curve.theta_at(s2) - curve.theta_at(s1) - PI).abs(),
        area_split: (a1, a2),
    })
}

/// Close the boundary arc `[s_start, s_start + half_len]` (whose endpoint
/// tangents differ by exactly pi) with its half-turn rotation: the output
/// angle profile is the arc profile followed by the same profile shifted by
/// pi, sampled on `m` uniform cells (`m` even). Exactly centrosymmetric and
/// closed by construction.
fn glue_half_turn(curve: &AngleCurve, s_start: f64, half_len: f64, m: usize) -> Result<AngleCurve> {
    assert!(m >= 8 && m % 2 == 0);
    let out_len = 2.0 * half_len;
    let ds_out = out_len / m as f64;
    let half = m / 2;
    let mut theta = vec![0.0; m];
    for k in 0..half {
        let u = (k as f64 + 0.5) * ds_out;
        theta[k] = curve.theta_at(s_start + u);
        theta[k + half] = theta[k] + PI;
    }
    let mut out = AngleCurve::new(out_len, theta, 1)?;
    out.project_closure()?;
    Ok(out)
}

/// Outcome of [`centrosymmetrize`]: the ledger plus the chord used.
#[derive(Debug, Clone)]
pub struct CentrosymmetrizeOutcome {
    pub report: SurgeryReport,
    pub chord: Chord,
    /// True if the kept (lower-energy) arc was `[s1, s2]`.
    pub kept_first_arc: bool,
}

/// Replace a convex curve by the union of its lower-energy equal-area half
/// and the half-turn rotation of that half about the chord midpoint. Never
/// increases `E_f` for convex `f` and preserves the enclosed area up to the
/// grid; the output is exactly centrosymmetric.
pub fn centrosymmetrize(
    curve: &AngleCurve,
    f: &CurvatureIntegrand,
) -> Result<CentrosymmetrizeOutcome> {
    let chord = find_equal_area_parallel_chord(curve)?;
    let total_energy = energy::energy_ef(curve, f)?;
    let e_first = energy::arc_energy(curve, f, chord.s1, chord.s2)?;
    let e_second = total_energy - e_first;
    let kept_first_arc = e_first <= e_second;

    let (start, half_len) = if kept_first_arc {
        (chord.s1, chord.s2 - chord.s1)
    } else {
        (chord.s2, curve.length() - (chord.s2 - chord.s1))
    };
    let m = curve.n() + curve.n() % 2;
    let output = glue_half_turn(curve, start, half_len, m)?;

    let report = SurgeryReport {
        energy_before: total_energy,
        energy_after: energy::energy_ef(&output, f)?,
        area_before: curve.area(),
        area_after: output.area(),
        input: curve.clone(),
        output,
        construction: Construction::Centrosymmetrize,
    };
    Ok(CentrosymmetrizeOutcome {
        report,
        chord,
        kept_first_arc,
    })
}

/// Measured and predicted first-order effects of the ramp-and-plateau
/// perturbation.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbationEstimates {
    /// Measured change of `F_p^{p/2}` (i.e. of `1/2 ||kappa||_p^p`).
    pub de_measured: f64,
    /// First-order bound `eps * delta^p * 2^{p-1}` with `delta = theta'(0)`.
    pub de_bound: f64,
    /// Measured change of the enclosed area (second order in eps).
    pub da_measured: f64,
    /// Curvature at the perturbation site.
    pub delta: f64,
}

/// Build the centrosymmetric perturbation that replaces the angle profile on
/// `[0, eps]` by a double-slope ramp on `[0, eps/2]` and a constant plateau
/// on `[eps/2, eps]` (repeated antipodally), creating two parallel straight
/// segments of length `eps/2` while changing `F_p^{p/2}` by at most
/// `eps * theta'(0)^p * 2^{p-1}` to first order and the area only to second
/// order.
pub fn perturb_theta_eps(
    curve: &AngleCurve,
    eps: f64,
    p: f64,
) -> Result<(AngleCurve, PerturbationEstimates)> {
    if !(p > 1.0) {
        return Err(CurveError::BadExponent(p));
    }
    let n = curve.n();
    let ds = curve.ds();
    if n % 2 != 0 || curve.centrosymmetry_defect() > SYMMETRY_TOL {
        return Err(CurveError::NotCentrosymmetric(
            curve.centrosymmetry_defect(),
        ));
    }
    if !curve.is_convex(1e-9) {
        return Err(CurveError::NotConvex);
    }
    if !(eps >= 4.0 * ds) {
        return Err(CurveError::EpsBelowResolution { eps, min: 4.0 * ds });
    }
    if eps > 0.5 * curve.length() {
        return Err(CurveError::BadConfig(format!(
            "eps {eps} exceeds half the curve length"
        )));
    }

    let base = curve.theta_at(0.0);
    let theta_eps_rel = curve.theta_at(eps) - base;
    let delta = (curve.theta_at(ds * 0.25) - curve.theta_at(-ds * 0.25)) / (ds * 0.5);

    let half = n / 2;
    let mut theta = vec![0.0; n];
    for k in 0..half {
        let s = (k as f64 + 0.5) * ds;
        let rel = if s <= 0.5 * eps {
            (2.0 * s / eps) * theta_eps_rel
        } else if s <= eps {
            theta_eps_rel
        } else {
            curve.theta_at(s) - base
        };
        theta[k] = base + rel;
        theta[k + half] = base + rel + PI;
    }
    let mut perturbed = AngleCurve::new(curve.length(), theta, 1)?;
    perturbed.project_closure()?;

    let de_measured = 0.5
        * (energy::kappa_lp_pth_power(&perturbed, p, false)
            - energy::kappa_lp_pth_power(curve, p, false));
    let estimates = PerturbationEstimates {
        de_measured,
        de_bound: eps * delta.powf(p) * 2f64.powf(p - 1.0),
        da_measured: perturbed.area() - curve.area(),
        delta,
    };
    Ok((perturbed, estimates))
}

/// Outcome of [`notch_removal`]: the ledger plus the straight length removed
/// per side and the input width.
#[derive(Debug, Clone)]
pub struct NotchOutcome {
    pub report: SurgeryReport,
    /// Straight length removed from each of the two parallel segments.
    pub sigma: f64,
    /// Width of the input region (used by the area-drop estimate).
    pub width: f64,
}

/// Remove the pair of antipodal straight segments produced by
/// [`perturb_theta_eps`]: one boundary arc is translated along the segment
/// direction, the zero-curvature samples are excised grid-exactly, and the
/// two arcs glue with unchanged interior angles. The energy is preserved
/// exactly (straight segments carry zero energy for `f(0) = 0`) and the
/// area drops by at least roughly `width/2 * sigma`.
pub fn notch_removal(curve: &AngleCurve, f: &CurvatureIntegrand) -> Result<NotchOutcome> {
    let n = curve.n();
    if n % 2 != 0 || curve.centrosymmetry_defect() > SYMMETRY_TOL {
        return Err(CurveError::NotCentrosymmetric(
            curve.centrosymmetry_defect(),
        ));
    }
    let theta = curve.theta();
    let half = n / 2;

    // Maximal run of consecutive equal samples (a straight segment of
    // z+1 edges has z zero turns); search the first half, the antipodal
    // run follows by symmetry.
    let mut best: Option<(usize, usize)> = None; // (start sample, run length in samples)
    let mut k = 0usize;
    while k < half {
        let mut len = 1usize;
        while k + len < n && (theta[k + len] - theta[k + len - 1]).abs() <= 1e-13 {
            len += 1;
        }
        if len >= 2 {
            let better = match best {
                None => true,
                Some((_, blen)) => len > blen,
            };
            if better {
                best = Some((k, len));
            }
        }
        k += len;
    }
    let Some((start, run_len)) = best else {
        return Err(CurveError::NoParallelSegments);
    };
    let z = run_len - 1; // samples to remove per side
    let sigma = z as f64 * curve.ds();

    // Keep one sample of each run, drop the other z (and the antipodal z).
    let drop_a = (start + 1)..(start + run_len);
    let drop_b = (start + half + 1)..(start + half + run_len);
    let mut new_theta = Vec::with_capacity(n - 2 * z);
    for (i, &t) in theta.iter().enumerate() {
        if drop_a.contains(&i) || drop_b.contains(&i) {
            continue;
        }
        new_theta.push(t);
    }
    debug_assert_eq!(new_theta.len(), n - 2 * z);
    let new_len = curve.ds() * new_theta.len() as f64;
    let mut output = AngleCurve::new(new_len, new_theta, 1)?;
    output.project_closure()?;

    let (width, _) = crate::curve::width_diameter(&curve.to_points(Vec2::ZERO)?)?;
    let report = SurgeryReport {
        energy_before: energy::energy_ef(curve, f)?,
        energy_after: energy::energy_ef(&output, f)?,
        area_before: curve.area(),
        area_after: output.area(),
        input: curve.clone(),
        output,
        construction: Construction::NotchRemoval,
    };
    Ok(NotchOutcome {
        report,
        sigma,
        width,
    })
}

/// Three-way energy comparison of the convex-arc reduction.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionComparison {
    pub e_input: f64,
    /// Mean energy of the two closed convex curves cut from the lobes.
    pub mean_e_halves: f64,
    /// Mean energy of the two discs with the lobes' areas.
    pub mean_e_discs: f64,
    /// Energy of the single disc with the averaged area.
    pub e_disc: f64,
}

/// Outcome of [`reduce_two_convex_arcs`].
#[derive(Debug, Clone)]
pub struct ReductionOutcome {
    pub lobes: Vec<SurgeryReport>,
    pub chords: Vec<Chord>,
    pub comparison: ReductionComparison,
}

/// For a nonconvex simple curve holding two disjoint convex regions (the
/// two-lobe easy case), cut each lobe at a parallel-tangent chord lying
/// inside the region, close both cuts by half-turn rotation, and compare the
/// input energy against the mean of the two closed halves and against the
/// disc energies. The general multi-cut reduction is out of scope and is
/// reported as an error rather than silently attempted.
pub fn reduce_two_convex_arcs(
    curve: &AngleCurve,
    f: &CurvatureIntegrand,
) -> Result<ReductionOutcome> {
    if curve.turning() != 1 {
        return Err(CurveError::BadTurning(curve.turning()));
    }
    if curve.is_convex(1e-9) {
        return Err(CurveError::NoQualifyingChords(
            "input is convex; nothing to reduce".into(),
        ));
    }
    let points: PointCurve = curve.to_points(Vec2::ZERO)?;
    points.check_simple()?;

    // Maximal cyclic runs of nonnegative-curvature cells.
    let n = curve.n();
    let ds = curve.ds();
    let kappa = curve.curvature();
    let nonneg: Vec<bool> = kappa.iter().map(|&k| k >= -1e-9).collect();
    let mut runs: Vec<(usize, usize)> = Vec::new(); // (first cell, cell count)
    if let Some(first_neg) = nonneg.iter().position(|&b| !b) {
        let mut i = first_neg;
        let mut visited = 0usize;
        while visited < n {
            while visited < n && !nonneg[i % n] {
                i += 1;
                visited += 1;
            }
            if visited >= n {
                break;
            }
            let start = i % n;
            let mut len = 0usize;
            while visited < n && nonneg[i % n] {
                i += 1;
                len += 1;
                visited += 1;
            }
            runs.push((start, len));
        }
    }
    if runs.len() < 2 {
        return Err(CurveError::NoQualifyingChords(format!(
            "found {} convex run(s); the two-lobe case needs two",
            runs.len()
        )));
    }
    runs.sort_by_key(|&(_, len)| std::cmp::Reverse(len));
    runs.truncate(2);
    runs.sort_by_key(|&(start, _)| start);

    let verts = points.points();
    let mut chords = Vec::new();
    let mut lobe_curves = Vec::new();
    for &(start_cell, len) in &runs {
        // Cell c spans [(c+1/2) ds, (c+3/2) ds] in arc length; the run is
        // the interval where the angle profile is nondecreasing.
        let s_lo = (start_cell as f64 + 0.5) * ds;
        let s_hi = s_lo + len as f64 * ds;
        let t_lo = curve.theta_at(s_lo);
        let t_hi = curve.theta_at(s_hi);
        let turn = t_hi - t_lo;
        if turn <= PI + 1e-9 {
            return Err(CurveError::NoQualifyingChords(format!(
                "convex run at cell {start_cell} turns only {turn:.3} rad (< pi)"
            )));
        }
        // Scan chord placements across the run, centered first.
        let slack = turn - PI;
        let offsets = 17i64;
        let mut found = None;
        'scan: for j in 0..offsets {
            // 0, -1, +1, -2, +2, ... in units of slack/offsets around center.
            let step = (j + 1) / 2 * if j % 2 == 1 { 1 } else { -1 };
            let mid = 0.5 * (t_lo + t_hi) + step as f64 * slack / offsets as f64;
            if mid - PI / 2.0 < t_lo - 1e-12 || mid + PI / 2.0 > t_hi + 1e-12 {
                continue;
            }
            let u = invert_theta(curve, mid - PI / 2.0, s_lo, s_hi)?;
            let v = invert_theta(curve, mid + PI / 2.0, s_lo, s_hi)?;
            if v - u < 4.0 * ds {
                continue;
            }
            // The chord must lie inside the region: no crossing with any
            // boundary edge away from the endpoints, interior midpoint.
            let pu = curve.point_at(u, Vec2::ZERO);
            let pv = curve.point_at(v, Vec2::ZERO);
            let dir = pv - pu;
            let (qa, qb) = (pu + dir * 1e-6, pv - dir * 1e-6);
            let (eu, ev) = ((u / ds).floor() as usize % n, (v / ds).floor() as usize % n);
            for e in 0..n {
                if e == eu || e == ev {
                    continue;
                }
                if geom::segments_intersect(qa, qb, verts[e], verts[(e + 1) % n]) {
                    continue 'scan;
                }
            }
            if !geom::point_in_polygon(verts, (pu + pv) * 0.5) {
                continue 'scan;
            }
            found = Some((u, v));
            break;
        }
        let Some((u, v)) = found else {
            return Err(CurveError::NoQualifyingChords(
                "no interior parallel-tangent chord in a convex run".into(),
            ));
        };

        let (cut_area, rest_area) = chord_split(curve, u, v);
        let pu = curve.point_at(u, Vec2::ZERO);
        let pv = curve.point_at(v, Vec2::ZERO);
        chords.push(Chord {
            s1: u,
            s2: v,
            midpoint: (pu + pv) * 0.5,
            tangent_gap: (curve.theta_at(v) - curve.theta_at(u) - PI).abs(),
            area_split: (cut_area, rest_area),
        });

        let m = (((2.0 * (v - u) / ds).ceil() as usize + 1) & !1usize).max(64);
        lobe_curves.push(glue_half_turn(curve, u, v - u, m)?);
    }

    // Chords of the two lobes must not cross each other (disjoint regions).
    let c0 = (
        curve.point_at(chords[0].s1, Vec2::ZERO),
        curve.point_at(chords[0].s2, Vec2::ZERO),
    );
    let c1 = (
        curve.point_at(chords[1].s1, Vec2::ZERO),
        curve.point_at(chords[1].s2, Vec2::ZERO),
    );
    if geom::segments_intersect(c0.0, c0.1, c1.0, c1.1) {
        return Err(CurveError::NoQualifyingChords(
            "lobe chords intersect; regions are not disjoint".into(),
        ));
    }

    let e_input = energy::energy_ef(curve, f)?;
    let area_before = curve.area();
    let mut lobes = Vec::new();
    let mut e_halves = Vec::new();
    let mut areas = Vec::new();
    for lobe in &lobe_curves {
        let e = energy::energy_ef(lobe, f)?;
        e_halves.push(e);
        areas.push(lobe.area());
        lobes.push(SurgeryReport {
            input: curve.clone(),
            output: lobe.clone(),
            energy_before: e_input,
            energy_after: e,
            area_before,
            area_after: lobe.area(),
            construction: Construction::ConvexArcReduction,
        });
    }
    let mean_e_halves = 0.5 * (e_halves[0] + e_halves[1]);
    let r1 = (areas[0] / PI).sqrt();
    let r2 = (areas[1] / PI).sqrt();
    let mean_e_discs = 0.5 * (energy::disc_energy(r1, f)? + energy::disc_energy(r2, f)?);
    let r_avg = (0.5 * (areas[0] + areas[1]) / PI).sqrt();
    let e_disc = energy::disc_energy(r_avg, f)?;

    Ok(ReductionOutcome {
        lobes,
        chords,
        comparison: ReductionComparison {
            e_input,
            mean_e_halves,
            mean_e_discs,
            e_disc,
        },
    })
}
