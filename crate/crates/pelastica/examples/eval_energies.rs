//! Evaluate curvature energies and geometric metrics on a few named curves.
//!
//! Circles are the quantitative anchor: F_2 = pi on the unit circle and the
//! scale-invariant quotient Q_p equals pi^{(p+1)/(p-1)} on every circle.

use pelastica::curve::CurveMetrics;
use pelastica::energy::{CurvatureIntegrand, EnergyReport};
use pelastica::generators;
use pelastica::Vec2;
use std::f64::consts::PI;

fn main() -> pelastica::Result<()> {
    let n = 1024;
    let f = CurvatureIntegrand::power(2.0)?;
    let curves = vec![
        ("circle r=1".to_string(), generators::circle(1.0, n)),
        ("circle r=2".to_string(), generators::circle(2.0, n)),
        ("ellipse 2:1".to_string(), generators::ellipse(2.0, 1.0, n)?),
        ("peanut 0.6".to_string(), generators::peanut(0.6, 2, n)?),
        ("egg oval".to_string(), generators::egg_oval(n)?),
    ];

    println!(
        "{:<12} {:>9} {:>9} {:>9} {:>9} {:>10} {:>10}",
        "curve", "length", "area", "width", "diam", "F_2", "Q_2"
    );
    for (name, curve) in &curves {
        let m = CurveMetrics::of(&curve.to_points(Vec2::ZERO)?)?;
        let e = EnergyReport::evaluate(curve, &f, 2.0)?;
        println!(
            "{:<12} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>10.6} {:>10.6}",
            name, m.length, m.area, m.width, m.diameter, e.f_p, e.q_p
        );
    }

    println!();
    println!(
        "circle anchor: Q_2 = {:.9}, pi^3 = {:.9}",
        EnergyReport::evaluate(&curves[0].1, &f, 2.0)?.q_p,
        PI.powi(3)
    );
    for p in [1.25, 1.5, 2.0, 3.0, 5.0] {
        let q = pelastica::energy::quotient_qp(&curves[0].1, p, false)?;
        println!(
            "p = {p:<5}  Q_p = {q:>14.8}   pi^((p+1)/(p-1)) = {:>14.8}",
            PI.powf((p + 1.0) / (p - 1.0))
        );
    }
    Ok(())
}
