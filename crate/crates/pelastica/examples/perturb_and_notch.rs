//! The ramp-and-plateau perturbation and the notch removal that follows it.
//!
//! Starting from a circle, the perturbation steepens the angle profile on
//! [0, eps/2], holds it constant on [eps/2, eps], and repeats antipodally;
//! the energy change is first order in eps with an explicit bound while the
//! area change is second order. The plateau creates two parallel straight
//! segments, and removing them drops area without touching the energy.

use pelastica::energy::CurvatureIntegrand;
use pelastica::generators;
use pelastica::surgery::{notch_removal, perturb_theta_eps};

fn main() -> pelastica::Result<()> {
    let n = 4096;
    let p = 2.0;
    let circle = generators::circle(1.0, n);
    let f = CurvatureIntegrand::power(p)?;

    println!(
        "{:>8} {:>14} {:>14} {:>12} {:>14}",
        "eps", "dE measured", "dE bound", "ratio", "dA measured"
    );
    let mut prev_da: Option<f64> = None;
    for eps in [0.1, 0.05, 0.025, 0.0125] {
        let (_, est) = perturb_theta_eps(&circle, eps, p)?;
        println!(
            "{eps:>8} {:>14.6e} {:>14.6e} {:>12.4} {:>14.6e}",
            est.de_measured,
            est.de_bound,
            est.de_measured / est.de_bound,
            est.da_measured
        );
        if let Some(prev) = prev_da {
            println!(
                "{:>8} area-change decay ratio: {:.2}",
                "",
                prev.abs() / est.da_measured.abs()
            );
        }
        prev_da = Some(est.da_measured);
    }

    let (perturbed, _) = perturb_theta_eps(&circle, 0.1, p)?;
    let out = notch_removal(&perturbed, &f)?;
    println!();
    println!("notch removal after eps = 0.1:");
    println!("  straight length removed per side: {:.6}", out.sigma);
    println!(
        "  energy {:.9} -> {:.9}",
        out.report.energy_before, out.report.energy_after
    );
    println!(
        "  area   {:.9} -> {:.9}  (drop {:.6}, width/2 * sigma = {:.6})",
        out.report.area_before,
        out.report.area_after,
        out.report.area_before - out.report.area_after,
        0.5 * out.width * out.sigma
    );
    Ok(())
}
