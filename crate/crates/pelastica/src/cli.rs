//! Batch command-line interface: energy evaluation, fixed-area minimization,
//! surgery constructions, inequality verification over seeded families, and
//! parameter sweeps. Every command echoes its resolved manifest next to its
//! outputs; identical manifests produce byte-identical CSV/JSON.
//!
//! Exit codes: 0 success, 1 error, 2 not-converged / not-applicable.

use crate::bounds;
use crate::curve::{AngleCurve, CurveMetrics};
use crate::energy::{CurvatureIntegrand, EnergyReport};
use crate::error::CurveError;
use crate::generators;
use crate::geom::Vec2;
use crate::io::{self, OptimizationResultJson, SurgeryReportJson};
use crate::optimize::{minimize_fp, OptimizerConfig};
use crate::render::{self, Shape, Style};
use crate::surgery;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
/// Not converged (minimize) or construction not applicable (surgery).
pub const EXIT_NOT_APPLICABLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pelastica",
    about = "Plane closed curves: curvature energies, fixed-area minimization, surgery, inequality checks",
    after_help = "Generators: circle:R | ellipse:A:B | peanut:AMP:LOBES | egg | \
                  polygon-smooth:SEED (random smooth convex oval) | perturbed:SEED\n\
                  Integrands: power:P | positive_power:P | @file.json | inline JSON"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate energies and metrics of curves.
    Eval(EvalArgs),
    /// Minimize F_p at fixed enclosed area.
    Minimize(MinimizeArgs),
    /// Run a surgery construction and write its before/after ledger.
    Surgery(SurgeryArgs),
    /// Verify curvature inequalities over seeded curve families.
    Verify(VerifyArgs),
    /// Sweep energies over a (curve, p, N) grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Args, Clone)]
struct CurveSource {
    /// Curve JSON files (angle or points format).
    #[arg(long = "input")]
    input: Vec<PathBuf>,
    /// Named generators (see --help footer).
    #[arg(long = "generator")]
    generator: Vec<String>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    source: CurveSource,
    /// Comma-separated exponent list (each > 1).
    #[arg(long = "p", value_delimiter = ',', default_value = "2")]
    p: Vec<f64>,
    /// Curvature integrand for E_f.
    #[arg(long = "f", default_value = "power:2")]
    f: String,
    /// Grid size (power of two in [64, 4096]).
    #[arg(long = "N", default_value_t = 256)]
    n_grid: usize,
    #[arg(long = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct MinimizeArgs {
    #[command(flatten)]
    source: CurveSource,
    #[arg(long = "p", value_delimiter = ',', default_value = "2")]
    p: Vec<f64>,
    /// Target enclosed area (defaults to the initial curve's area).
    #[arg(long = "area")]
    area: Option<f64>,
    #[arg(long = "N", default_value_t = 256)]
    n_grid: usize,
    #[arg(long = "max-outer", default_value_t = 40)]
    max_outer: usize,
    /// Convergence tolerance for gradient and constraints.
    #[arg(long = "tol")]
    tol: Option<f64>,
    #[arg(long = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SurgeryArgs {
    #[command(flatten)]
    source: CurveSource,
    /// Construction: centrosymmetrize | perturb | notch | reduce.
    #[arg(long = "op")]
    op: String,
    #[arg(long = "f", default_value = "power:2")]
    f: String,
    /// Exponent for the perturbation energy bound.
    #[arg(long = "p", value_delimiter = ',', default_value = "2")]
    p: Vec<f64>,
    /// Perturbation arc length (perturb; optional pre-step for notch).
    #[arg(long = "eps")]
    eps: Option<f64>,
    #[arg(long = "N", default_value_t = 256)]
    n_grid: usize,
    #[arg(long = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Curve family: perturbed-circles | convex | peanuts | mixed.
    #[arg(long = "family", default_value = "mixed")]
    family: String,
    /// Number of seeded samples.
    #[arg(long = "n", default_value_t = 50)]
    count: usize,
    #[arg(long = "p", value_delimiter = ',', default_value = "1.5,2,3")]
    p: Vec<f64>,
    /// Checks to run (default depends on the family):
    /// isop, isop_plus, kubota, length_lower, theta_growth, diameter.
    #[arg(long = "checks", value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long = "seed", default_value_t = 42)]
    seed: u64,
    #[arg(long = "N", default_value_t = 2048)]
    n_grid: usize,
    #[arg(long = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    source: CurveSource,
    #[arg(long = "p", value_delimiter = ',', default_value = "1.5,2,3")]
    p: Vec<f64>,
    /// Grid sizes to sweep.
    #[arg(long = "N", value_delimiter = ',', default_value = "256")]
    n_grid: Vec<usize>,
    #[arg(long = "f", default_value = "power:2")]
    f: String,
    #[arg(long = "out")]
    out: PathBuf,
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // Keep exit code 2 reserved for not-converged/not-applicable.
            let _ = e.print();
            return EXIT_ERROR;
        }
    };
    let outcome = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Minimize(a) => cmd_minimize(a),
        Command::Surgery(a) => cmd_surgery(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CurveError::NoQualifyingChords(_) | CurveError::NoParallelSegments => {
                    EXIT_NOT_APPLICABLE
                }
                _ => EXIT_ERROR,
            }
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

type CmdResult = crate::error::Result<i32>;

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    command: &'a str,
    inputs: Vec<String>,
    generators: &'a [String],
    p: &'a [f64],
    f: Option<&'a str>,
    n_grid: Vec<usize>,
    area: Option<f64>,
    eps: Option<f64>,
    op: Option<&'a str>,
    family: Option<&'a str>,
    count: Option<usize>,
    seed: Option<u64>,
    checks: &'a [String],
    out: String,
}

impl<'a> Manifest<'a> {
    fn validate(&self) -> crate::error::Result<()> {
        for &p in self.p {
            if !(p > 1.0) {
                return Err(CurveError::BadExponent(p));
            }
        }
        for &n in &self.n_grid {
            if !(64..=4096).contains(&n) || !n.is_power_of_two() {
                return Err(CurveError::BadConfig(format!(
                    "N must be a power of two in [64, 4096], got {n}"
                )));
            }
        }
        Ok(())
    }

    fn write(&self, out: &Path) -> crate::error::Result<()> {
        std::fs::create_dir_all(out)
            .map_err(|e| CurveError::BadConfig(format!("{}: {e}", out.display())))?;
        write_text(
            &out.join("manifest.json"),
            &serde_json::to_string_pretty(self).expect("manifest serializes"),
        )
    }
}

fn write_text(path: &Path, text: &str) -> crate::error::Result<()> {
    std::fs::write(path, text)
        .map_err(|e| CurveError::BadConfig(format!("{}: {e}", path.display())))
}

/// Parse a generator spec like `circle:1.0` or `polygon-smooth:7`.
fn build_generator(spec: &str, n: usize) -> crate::error::Result<(String, AngleCurve)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = |m: &str| CurveError::BadConfig(format!("generator `{spec}`: {m}"));
    let parse = |s: &str| s.parse::<f64>().map_err(|_| bad("not a number"));
    let curve = match parts[0] {
        "circle" => {
            let r = if parts.len() > 1 {
                parse(parts[1])?
            } else {
                1.0
            };
            generators::circle(r, n)
        }
        "ellipse" => {
            if parts.len() != 3 {
                return Err(bad("expected ellipse:A:B"));
            }
            generators::ellipse(parse(parts[1])?, parse(parts[2])?, n)?
        }
        "peanut" => {
            let amp = if parts.len() > 1 {
                parse(parts[1])?
            } else {
                0.6
            };
            let lobes = if parts.len() > 2 {
                parts[2]
                    .parse::<u32>()
                    .map_err(|_| bad("lobes not an integer"))?
            } else {
                2
            };
            generators::peanut(amp, lobes, n)?
        }
        "egg" => generators::egg_oval(n)?,
        "polygon-smooth" | "oval" => {
            let seed = if parts.len() > 1 {
                parts[1]
                    .parse::<u64>()
                    .map_err(|_| bad("seed not an integer"))?
            } else {
                0
            };
            generators::random_convex_oval(seed, n)?
        }
        "perturbed" => {
            let seed = if parts.len() > 1 {
                parts[1]
                    .parse::<u64>()
                    .map_err(|_| bad("seed not an integer"))?
            } else {
                0
            };
            generators::perturbed_circle(seed, 0.3, n)?
        }
        other => return Err(bad(&format!("unknown generator `{other}`"))),
    };
    Ok((spec.replace(':', "_"), curve))
}

fn parse_integrand(spec: &str) -> crate::error::Result<CurvatureIntegrand> {
    if spec.starts_with('{') {
        return serde_json::from_str(spec)
            .map_err(|e| CurveError::BadConfig(format!("integrand JSON: {e}")));
    }
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CurveError::BadConfig(format!("{path}: {e}")))?;
        return serde_json::from_str(&text)
            .map_err(|e| CurveError::BadConfig(format!("{path}: {e}")));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let p: f64 = parts
        .get(1)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CurveError::BadConfig(format!("integrand `{spec}`: missing exponent")))?;
    match parts[0] {
        "power" => CurvatureIntegrand::power(p),
        "positive_power" => CurvatureIntegrand::positive_power(p),
        other => Err(CurveError::BadConfig(format!(
            "unknown integrand `{other}`"
        ))),
    }
}

/// Collect curves from files and generator specs, in manifest order.
fn collect_curves(src: &CurveSource, n: usize) -> crate::error::Result<Vec<(String, AngleCurve)>> {
    let mut curves = Vec::new();
    for path in &src.input {
        let curve = io::read_curve(path, n)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        curves.push((name, curve));
    }
    for spec in &src.generator {
        curves.push(build_generator(spec, n)?);
    }
    if curves.is_empty() {
        return Err(CurveError::BadConfig(
            "no curves given; use --input or --generator".into(),
        ));
    }
    Ok(curves)
}

fn curve_shape(curve: &AngleCurve, style: Style) -> Shape {
    Shape {
        points: curve.vertices(Vec2::ZERO),
        closed: true,
        style,
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn cmd_eval(args: EvalArgs) -> CmdResult {
    let manifest = Manifest {
        command: "eval",
        inputs: args
            .source
            .input
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        generators: &args.source.generator,
        p: &args.p,
        f: Some(&args.f),
        n_grid: vec![args.n_grid],
        area: None,
        eps: None,
        op: None,
        family: None,
        count: None,
        seed: None,
        checks: &[],
        out: args.out.display().to_string(),
    };
    manifest.validate()?;
    manifest.write(&args.out)?;
    let f = parse_integrand(&args.f)?;
    let curves = collect_curves(&args.source, args.n_grid)?;

    #[derive(Serialize)]
    struct Row<'a> {
        curve: &'a str,
        p: f64,
        #[serde(flatten)]
        metrics: CurveMetrics,
        #[serde(flatten)]
        energy: EnergyReport,
    }

    let mut csv =
        String::from("curve,p,length,area,width,diameter,convex,e_f,f_p,f_p_plus,q_p,q_p_plus\n");
    let mut rows = Vec::new();
    for (name, curve) in &curves {
        let metrics = CurveMetrics::of(&curve.to_points(Vec2::ZERO)?)?;
        for &p in &args.p {
            let energy = EnergyReport::evaluate(curve, &f, p)?;
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                name,
                fmt_f64(p),
                fmt_f64(metrics.length),
                fmt_f64(metrics.area),
                fmt_f64(metrics.width),
                fmt_f64(metrics.diameter),
                metrics.convex,
                fmt_f64(energy.e_f),
                fmt_f64(energy.f_p),
                fmt_f64(energy.f_p_plus),
                fmt_f64(energy.q_p),
                fmt_f64(energy.q_p_plus),
            );
            rows.push(Row {
                curve: name,
                p,
                metrics: metrics.clone(),
                energy,
            });
        }
    }
    write_text(&args.out.join("eval.csv"), &csv)?;
    write_text(
        &args.out.join("eval.json"),
        &serde_json::to_string_pretty(&rows).expect("rows serialize"),
    )?;
    println!("eval: {} rows -> {}", rows.len(), args.out.display());
    Ok(EXIT_OK)
}

fn cmd_minimize(args: MinimizeArgs) -> CmdResult {
    let manifest = Manifest {
        command: "minimize",
        inputs: args
            .source
            .input
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        generators: &args.source.generator,
        p: &args.p,
        f: None,
        n_grid: vec![args.n_grid],
        area: args.area,
        eps: None,
        op: None,
        family: None,
        count: None,
        seed: None,
        checks: &[],
        out: args.out.display().to_string(),
    };
    manifest.validate()?;
    manifest.write(&args.out)?;
    let curves = collect_curves(&args.source, args.n_grid)?;
    let mut all_converged = true;
    for (name, initial) in &curves {
        write_text(
            &args.out.join(format!("{name}_initial.svg")),
            &render::render(&[curve_shape(initial, Style::solid("#1f77b4"))]),
        )?;
        for &p in &args.p {
            let mut cfg = OptimizerConfig {
                p,
                target_area: args.area.unwrap_or_else(|| initial.area()),
                n: args.n_grid,
                max_outer: args.max_outer,
                ..Default::default()
            };
            if let Some(tol) = args.tol {
                cfg.grad_tol = tol;
                cfg.constraint_tol = tol;
            }
            let result = minimize_fp(initial, &cfg)?;
            all_converged &= result.converged;

            let tag = format!("{name}_p{}", fmt_f64(p));
            write_text(
                &args.out.join(format!("{tag}_result.json")),
                &serde_json::to_string_pretty(&OptimizationResultJson::from_result(&result))
                    .expect("result serializes"),
            )?;
            // Standalone curve file, pipeable back into eval/surgery.
            io::write_curve(
                &args.out.join(format!("{tag}_final_curve.json")),
                &result.curve,
            )?;
            let mut history = String::from(
                "step,outer,f_p,area_defect,closure_defect,grad_norm,aug_objective,q_p\n",
            );
            for (i, rec) in result.history.iter().enumerate() {
                let _ = writeln!(
                    history,
                    "{},{},{},{},{},{},{},{}",
                    i,
                    rec.outer,
                    fmt_f64(rec.f_p),
                    fmt_f64(rec.area_defect),
                    fmt_f64(rec.closure_defect),
                    fmt_f64(rec.grad_norm),
                    fmt_f64(rec.aug_objective),
                    fmt_f64(rec.q_p),
                );
            }
            write_text(&args.out.join(format!("{tag}_history.csv")), &history)?;
            write_text(
                &args.out.join(format!("{tag}_final.svg")),
                &render::render(&[curve_shape(&result.curve, Style::solid("#2ca02c"))]),
            )?;
            println!(
                "minimize {tag}: converged={} circularity={:.3e} el_residual={:.3e} q_p={:.9}",
                result.converged, result.circularity, result.el_residual, result.q_p
            );
        }
    }
    Ok(if all_converged {
        EXIT_OK
    } else {
        EXIT_NOT_APPLICABLE
    })
}

fn cmd_surgery(args: SurgeryArgs) -> CmdResult {
    let manifest = Manifest {
        command: "surgery",
        inputs: args
            .source
            .input
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        generators: &args.source.generator,
        p: &args.p,
        f: Some(&args.f),
        n_grid: vec![args.n_grid],
        area: None,
        eps: args.eps,
        op: Some(&args.op),
        family: None,
        count: None,
        seed: None,
        checks: &[],
        out: args.out.display().to_string(),
    };
    manifest.validate()?;
    manifest.write(&args.out)?;
    let f = parse_integrand(&args.f)?;
    let curves = collect_curves(&args.source, args.n_grid)?;
    let p = args.p[0];

    for (name, curve) in &curves {
        match args.op.as_str() {
            "centrosymmetrize" => {
                let out = surgery::centrosymmetrize(curve, &f)?;
                let chord_pts = vec![
                    curve.point_at(out.chord.s1, Vec2::ZERO),
                    curve.point_at(out.chord.s2, Vec2::ZERO),
                ];
                write_text(
                    &args.out.join(format!("{name}_report.json")),
                    &report_json(&out.report, serde_json::json!({"chord": out.chord})),
                )?;
                write_text(
                    &args.out.join(format!("{name}_before.svg")),
                    &render::render(&[
                        curve_shape(&out.report.input, Style::solid("#1f77b4")),
                        Shape {
                            points: chord_pts,
                            closed: false,
                            style: Style::dashed("#d62728"),
                        },
                    ]),
                )?;
                write_text(
                    &args.out.join(format!("{name}_after.svg")),
                    &render::render(&[curve_shape(&out.report.output, Style::solid("#2ca02c"))]),
                )?;
                println!(
                    "surgery centrosymmetrize {name}: E {} -> {} area {} -> {}",
                    out.report.energy_before,
                    out.report.energy_after,
                    out.report.area_before,
                    out.report.area_after
                );
            }
            "perturb" => {
                let eps = args.eps.ok_or_else(|| {
                    CurveError::BadConfig("--eps required for --op perturb".into())
                })?;
                let (perturbed, est) = surgery::perturb_theta_eps(curve, eps, p)?;
                let report = surgery::SurgeryReport {
                    input: curve.clone(),
                    energy_before: energy_half_power(curve, p),
                    energy_after: energy_half_power(&perturbed, p),
                    area_before: curve.area(),
                    area_after: perturbed.area(),
                    output: perturbed,
                    construction: surgery::Construction::PerturbTheta,
                };
                write_text(
                    &args.out.join(format!("{name}_report.json")),
                    &report_json(&report, serde_json::json!({"estimates": est})),
                )?;
                render_pair(&args.out, name, &report)?;
                println!(
                    "surgery perturb {name}: dE {} bound {} dA {}",
                    est.de_measured, est.de_bound, est.da_measured
                );
            }
            "notch" => {
                let staged;
                let source = if let Some(eps) = args.eps {
                    let (perturbed, _) = surgery::perturb_theta_eps(curve, eps, p)?;
                    staged = perturbed;
                    &staged
                } else {
                    curve
                };
                let out = surgery::notch_removal(source, &f)?;
                write_text(
                    &args.out.join(format!("{name}_report.json")),
                    &report_json(
                        &out.report,
                        serde_json::json!({"sigma": out.sigma, "width": out.width}),
                    ),
                )?;
                render_pair(&args.out, name, &out.report)?;
                println!(
                    "surgery notch {name}: sigma {} area drop {}",
                    out.sigma,
                    out.report.area_before - out.report.area_after
                );
            }
            "reduce" => {
                let out = surgery::reduce_two_convex_arcs(curve, &f)?;
                let lobes: Vec<SurgeryReportJson> = out
                    .lobes
                    .iter()
                    .map(SurgeryReportJson::from_report)
                    .collect();
                let doc = serde_json::json!({
                    "comparison": out.comparison,
                    "chords": out.chords,
                    "lobes": lobes,
                });
                write_text(
                    &args.out.join(format!("{name}_report.json")),
                    &serde_json::to_string_pretty(&doc).expect("report serializes"),
                )?;
                let mut shapes = vec![curve_shape(curve, Style::solid("#1f77b4"))];
                for chord in &out.chords {
                    shapes.push(Shape {
                        points: vec![
                            curve.point_at(chord.s1, Vec2::ZERO),
                            curve.point_at(chord.s2, Vec2::ZERO),
                        ],
                        closed: false,
                        style: Style::dashed("#d62728"),
                    });
                }
                write_text(
                    &args.out.join(format!("{name}_before.svg")),
                    &render::render(&shapes),
                )?;
                let after: Vec<Shape> = out
                    .lobes
                    .iter()
                    .map(|l| curve_shape(&l.output, Style::solid("#2ca02c")))
                    .collect();
                write_text(
                    &args.out.join(format!("{name}_after.svg")),
                    &render::render(&after),
                )?;
                println!(
                    "surgery reduce {name}: E_input {} mean_halves {} mean_discs {} E_disc {}",
                    out.comparison.e_input,
                    out.comparison.mean_e_halves,
                    out.comparison.mean_e_discs,
                    out.comparison.e_disc
                );
            }
            other => {
                return Err(CurveError::BadConfig(format!(
                    "unknown surgery op `{other}` (centrosymmetrize | perturb | notch | reduce)"
                )))
            }
        }
    }
    Ok(EXIT_OK)
}

fn energy_half_power(curve: &AngleCurve, p: f64) -> f64 {
    0.5 * crate::energy::kappa_lp_pth_power(curve, p, false)
}

fn report_json(report: &surgery::SurgeryReport, extra: serde_json::Value) -> String {
    let mut doc =
        serde_json::to_value(SurgeryReportJson::from_report(report)).expect("report serializes");
    if let (Some(obj), Some(add)) = (doc.as_object_mut(), extra.as_object()) {
        for (k, v) in add {
            obj.insert(k.clone(), v.clone());
        }
    }
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

fn render_pair(
    out: &Path,
    name: &str,
    report: &surgery::SurgeryReport,
) -> crate::error::Result<()> {
    write_text(
        &out.join(format!("{name}_before.svg")),
        &render::render(&[curve_shape(&report.input, Style::solid("#1f77b4"))]),
    )?;
    write_text(
        &out.join(format!("{name}_after.svg")),
        &render::render(&[curve_shape(&report.output, Style::solid("#2ca02c"))]),
    )
}

/// Family members for `verify`, in deterministic seed order.
fn family_curves(
    family: &str,
    count: usize,
    seed: u64,
    n: usize,
) -> crate::error::Result<Vec<(String, AngleCurve)>> {
    let mut curves = Vec::with_capacity(count);
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        let (name, curve) = match family {
            "perturbed-circles" => (
                format!("perturbed_{s}"),
                generators::perturbed_circle(s, 0.3, n)?,
            ),
            "convex" => (format!("oval_{s}"), generators::random_convex_oval(s, n)?),
            "peanuts" => (format!("peanut_{s}"), generators::random_peanut(s, n)?),
            "mixed" => match i % 3 {
                0 => (
                    format!("perturbed_{s}"),
                    generators::perturbed_circle(s, 0.3, n)?,
                ),
                1 => (format!("oval_{s}"), generators::random_convex_oval(s, n)?),
                _ => (format!("peanut_{s}"), generators::random_peanut(s, n)?),
            },
            other => {
                return Err(CurveError::BadConfig(format!(
                    "unknown family `{other}` (perturbed-circles | convex | peanuts | mixed)"
                )))
            }
        };
        curves.push((name, curve));
    }
    Ok(curves)
}

const CONVEX_CHECKS: [&str; 4] = ["kubota", "length_lower", "theta_growth", "diameter"];

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let manifest = Manifest {
        command: "verify",
        inputs: vec![],
        generators: &[],
        p: &args.p,
        f: None,
        n_grid: vec![args.n_grid],
        area: None,
        eps: None,
        op: None,
        family: Some(&args.family),
        count: Some(args.count),
        seed: Some(args.seed),
        checks: &args.checks,
        out: args.out.display().to_string(),
    };
    manifest.validate()?;
    manifest.write(&args.out)?;

    let checks: Vec<String> = if args.checks.is_empty() {
        let mut c = vec!["isop".to_string(), "isop_plus".to_string()];
        if args.family == "convex" {
            c.extend(CONVEX_CHECKS.iter().map(|s| s.to_string()));
        }
        c
    } else {
        args.checks.clone()
    };
    for c in &checks {
        let known = ["isop", "isop_plus"].contains(&c.as_str())
            || CONVEX_CHECKS.contains(&c.as_str())
            || c == "curvature_lower";
        if !known {
            return Err(CurveError::BadConfig(format!("unknown check `{c}`")));
        }
    }

    let curves = family_curves(&args.family, args.count, args.seed, args.n_grid)?;
    let mut csv = String::from("name,p,curve_id,lhs,rhs,margin,passed\n");
    let (mut passed, mut total) = (0usize, 0usize);
    for (name, curve) in &curves {
        for &p in &args.p {
            for check in &checks {
                let bc = match check.as_str() {
                    "isop" => bounds::check_isop(curve, p, false)?,
                    "isop_plus" => bounds::check_isop(curve, p, true)?,
                    "kubota" => bounds::check_kubota(curve)?,
                    "length_lower" => bounds::check_length_lower(curve, p)?,
                    "theta_growth" => bounds::check_theta_growth(curve, p)?,
                    "diameter" => bounds::check_diameter_bound(curve, p)?,
                    "curvature_lower" => bounds::check_curvature_lower(curve, p)?,
                    _ => unreachable!(),
                };
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{}",
                    bc.name,
                    bc.p.map(fmt_f64).unwrap_or_default(),
                    name,
                    fmt_f64(bc.lhs),
                    fmt_f64(bc.rhs),
                    fmt_f64(bc.margin),
                    bc.passed
                );
                total += 1;
                if bc.passed {
                    passed += 1;
                }
            }
        }
    }
    write_text(&args.out.join("checks.csv"), &csv)?;
    println!("verify {}: {passed}/{total} checks passed", args.family);
    Ok(if passed == total { EXIT_OK } else { EXIT_ERROR })
}

fn cmd_sweep(args: SweepArgs) -> CmdResult {
    let manifest = Manifest {
        command: "sweep",
        inputs: args
            .source
            .input
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        generators: &args.source.generator,
        p: &args.p,
        f: Some(&args.f),
        n_grid: args.n_grid.clone(),
        area: None,
        eps: None,
        op: None,
        family: None,
        count: None,
        seed: None,
        checks: &[],
        out: args.out.display().to_string(),
    };
    manifest.validate()?;
    manifest.write(&args.out)?;
    let f = parse_integrand(&args.f)?;

    let mut csv = String::from("curve,N,p,length,area,e_f,f_p,f_p_plus,q_p,q_p_plus\n");
    let mut rows = 0usize;
    for &n in &args.n_grid {
        let curves = collect_curves(&args.source, n)?;
        for (name, curve) in &curves {
            for &p in &args.p {
                let e = EnergyReport::evaluate(curve, &f, p)?;
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{},{},{}",
                    name,
                    n,
                    fmt_f64(p),
                    fmt_f64(curve.length()),
                    fmt_f64(curve.area()),
                    fmt_f64(e.e_f),
                    fmt_f64(e.f_p),
                    fmt_f64(e.f_p_plus),
                    fmt_f64(e.q_p),
                    fmt_f64(e.q_p_plus),
                );
                rows += 1;
            }
        }
    }
    write_text(&args.out.join("sweep.csv"), &csv)?;
    println!("sweep: {rows} rows -> {}", args.out.display());
    Ok(EXIT_OK)
}
