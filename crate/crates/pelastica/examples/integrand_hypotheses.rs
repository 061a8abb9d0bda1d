//! Check the two integrand hypotheses that make discs optimal, and the disc
//! mixing inequality they imply.
//!
//! For f(t) = t^p with p > 1: g(t) = f(1/sqrt(t)) sqrt(t) is convex and
//! s f'(s) >= integral_0^s f(r)/r dr. A tabulated f(t) = sqrt(t) violates
//! both. Convexity of g is exactly what makes the disc energy 2 pi R f(1/R)
//! convex in R^2, so averaging two disc energies dominates the energy of
//! the disc with averaged area.

use pelastica::energy::{
    check_f_monotone, check_g_convexity, disc_energy, log_grid, CurvatureIntegrand,
};

fn main() -> pelastica::Result<()> {
    let grid = log_grid(0.25, 4.0, 64);
    let sgrid = [0.25, 0.5, 1.0, 2.0, 4.0];

    for p in [1.5, 2.0, 3.0] {
        let f = CurvatureIntegrand::power(p)?;
        let g = check_g_convexity(&f, &grid)?;
        let m = check_f_monotone(&f, &sgrid)?;
        println!(
            "f = |t|^{p}:  g convex: {} (min 2nd diff {:+.3e}); monotonicity holds: {} (worst margin {:+.3e})",
            g.convex, g.min_second_difference, m.holds, m.worst_margin
        );
    }

    // A sub-linear integrand violates both hypotheses.
    let ts: Vec<f64> = (0..=512).map(|i| 4.0 * i as f64 / 512.0).collect();
    let fs: Vec<f64> = ts.iter().map(|t| t.sqrt()).collect();
    let f = CurvatureIntegrand::tabulated(ts, fs)?;
    let g = check_g_convexity(&f, &log_grid(0.3, 3.0, 64))?;
    let m = check_f_monotone(&f, &[0.5, 1.0, 2.0])?;
    println!(
        "f = sqrt(t):  g convex: {} (min 2nd diff {:+.3e}); monotonicity holds: {} (worst margin {:+.3e})",
        g.convex, g.min_second_difference, m.holds, m.worst_margin
    );

    println!("\ndisc mixing for f = t^2 (averages dominate the averaged disc):");
    let f = CurvatureIntegrand::power(2.0)?;
    for (r1, r2) in [(1.0, 2.0), (0.5, 1.5), (1.0, 4.0)] {
        let mean = 0.5 * (disc_energy(r1, &f)? + disc_energy(r2, &f)?);
        let r_avg = (0.5 * (r1 * r1 + r2 * r2)).sqrt();
        let mixed = disc_energy(r_avg, &f)?;
        println!(
            "  R1 = {r1}, R2 = {r2}: mean {mean:.6} >= mixed {mixed:.6}  ({})",
            mean >= mixed
        );
    }
    Ok(())
}
