//! Reduce a nonconvex two-lobe curve to a pair of convex regions and compare
//! energies against discs: the input energy dominates the mean of the two
//! closed halves, which dominates the mean of the two equal-area discs,
//! which dominates the single disc of averaged area.

use pelastica::energy::CurvatureIntegrand;
use pelastica::render::{render, Shape, Style};
use pelastica::surgery::reduce_two_convex_arcs;
use pelastica::{generators, Vec2};

fn main() -> pelastica::Result<()> {
    let peanut = generators::peanut(0.6, 2, 1024)?;
    let f = CurvatureIntegrand::power(2.0)?;
    let out = reduce_two_convex_arcs(&peanut, &f)?;

    let c = &out.comparison;
    println!("E_f(input)        = {:.6}", c.e_input);
    println!("mean E_f(halves)  = {:.6}", c.mean_e_halves);
    println!("mean E_f(discs)   = {:.6}", c.mean_e_discs);
    println!("E_f(avg disc)     = {:.6}", c.e_disc);
    println!();
    for (i, lobe) in out.lobes.iter().enumerate() {
        println!(
            "lobe {i}: area {:.6}, energy {:.6}, convex {}",
            lobe.area_after,
            lobe.energy_after,
            lobe.output.is_convex(1e-9)
        );
    }

    let mut shapes = vec![Shape {
        points: peanut.vertices(Vec2::ZERO),
        closed: true,
        style: Style::solid("#1f77b4"),
    }];
    for chord in &out.chords {
        shapes.push(Shape {
            points: vec![
                peanut.point_at(chord.s1, Vec2::ZERO),
                peanut.point_at(chord.s2, Vec2::ZERO),
            ],
            closed: false,
            style: Style::dashed("#d62728"),
        });
    }
    std::fs::write("reduce_before.svg", render(&shapes)).expect("write svg");
    let halves: Vec<Shape> = out
        .lobes
        .iter()
        .map(|l| Shape {
            points: l.output.vertices(Vec2::ZERO),
            closed: true,
            style: Style::solid("#2ca02c"),
        })
        .collect();
    std::fs::write("reduce_after.svg", render(&halves)).expect("write svg");
    println!("\nwrote reduce_before.svg / reduce_after.svg");
    Ok(())
}
