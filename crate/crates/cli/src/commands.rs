use rayon::prelude::*;
use serde::Serialize;

use sdiff_core::harmonics::{orthonormality_residual, parity_residual};
use sdiff_core::klein::{torus_basis, torus_element};
use sdiff_core::weather::{self, WeatherScenario, PRESET_NAMES};
use sdiff_core::{
    count_basis, enumerate_basis, klein_sweep, preset, ricci_analytic, ricci_analytic_sphere,
    ricci_numeric_estimate, ricci_partial_sums, sectional_curvature_oracle, sectional_klein,
    sectional_torus, sphere_sweep, BasisKind, KleinBasisElement, LatticeMode, OracleMethod,
    Rescale, SphereField, Surface, TorusKind,
};

use crate::error::{CliError, Result};
use crate::output::{float, Num, Sink};
use crate::{
    BlanketArgs, Cli, Command, CurvatureArgs, Format, HarmonicsCheckArgs, OracleCheckArgs,
    RicciArgs, WeatherArgs,
};

pub const CSV_HEADER: &str = "surface,idx1,idx2,kind,curvature";
pub const ORACLE_TOL: f64 = 1e-9;
pub const ORTHONORMALITY_TOL: f64 = 1e-8;
pub const PARITY_TOL: f64 = 1e-10;

pub fn dispatch(cli: &Cli) -> Result<()> {
    let mut sink = Sink::open(cli.out.as_deref())?;
    let result = match &cli.command {
        Command::Curvature(a) => curvature(cli, a, &mut sink),
        Command::Blanket(a) => blanket(cli, a, &mut sink),
        Command::Ricci(a) => ricci(cli, a, &mut sink),
        Command::Weather(a) => weather(cli, a, &mut sink),
        Command::OracleCheck(a) => oracle_check(cli, a, &mut sink),
        Command::HarmonicsCheck(a) => harmonics_check(cli, a, &mut sink),
    };
    // flush what was written even when a check fails
    let flushed = sink.finish();
    result.and(flushed)
}

fn require<T>(value: Option<T>, flag: &str, surface: Surface) -> Result<T> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for surface {surface}")))
}

/// Basis element of the given family, or of the real family when it admits `k`.
fn klein_element(k: LatticeMode, kind: Option<BasisKind>) -> Result<KleinBasisElement> {
    let kind = kind.unwrap_or_else(|| {
        let real = BasisKind::for_index(true, k);
        if real.admits(k) {
            real
        } else {
            BasisKind::for_index(false, k)
        }
    });
    Ok(KleinBasisElement::new(kind, k)?)
}

fn torus_kind(s: Option<&str>) -> Result<TorusKind> {
    match s {
        None | Some("cos") => Ok(TorusKind::Cos),
        Some("sin") => Ok(TorusKind::Sin),
        Some(other) => Err(CliError::Usage(format!(
            "torus element kind must be cos or sin, got '{other}'"
        ))),
    }
}

fn sphere_field_on(field: SphereField, surface: Surface, l: i64) -> Result<()> {
    if surface == Surface::Rp2 {
        if !field.descends_to_rp2() {
            return Err(
                sdiff_core::Error::NotDefined(format!("{field} does not descend to rp2")).into(),
            );
        }
        if l % 2 == 0 {
            return Err(sdiff_core::Error::Domain(format!(
                "harmonics of even degree {l} do not descend to rp2"
            ))
            .into());
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Index {
    k1: i64,
    k2: i64,
    kind: &'static str,
}

#[derive(Serialize)]
struct CurvatureReport {
    surface: &'static str,
    direction: serde_json::Value,
    plane: serde_json::Value,
    curvature: Num,
    norm_convention: &'static str,
    method: &'static str,
}

fn curvature(cli: &Cli, a: &CurvatureArgs, sink: &mut Sink) -> Result<()> {
    let area = cli.torus_area;
    let (direction, plane, idx, kind, value) = match a.surface {
        Surface::Klein => {
            let xi = klein_element(require(a.k, "k", a.surface)?, a.kind)?;
            let eta_kind = a
                .eta_kind
                .as_deref()
                .map(str::parse::<BasisKind>)
                .transpose()?;
            let eta = klein_element(require(a.eta, "eta", a.surface)?, eta_kind)?;
            let c = sectional_klein(&xi, &eta.to_fourier(area))?;
            let (xk, ek) = (xi.kind().unwrap().name(), eta.kind().unwrap().name());
            (
                serde_json::json!(Index {
                    k1: xi.k.k1,
                    k2: xi.k.k2,
                    kind: xk
                }),
                serde_json::json!(Index {
                    k1: eta.k.k1,
                    k2: eta.k.k2,
                    kind: ek
                }),
                (eta.k.k1, eta.k.k2),
                ek,
                c,
            )
        }
        Surface::Torus => {
            let k = require(a.k, "k", a.surface)?;
            let l = require(a.eta, "eta", a.surface)?;
            let kind = torus_kind(a.eta_kind.as_deref())?;
            let c = sectional_torus(k, &torus_element(kind, l, area))?;
            (
                serde_json::json!(Index {
                    k1: k.k1,
                    k2: k.k2,
                    kind: "cos"
                }),
                serde_json::json!(Index {
                    k1: l.k1,
                    k2: l.k2,
                    kind: kind.name()
                }),
                (l.k1, l.k2),
                kind.name(),
                c,
            )
        }
        Surface::Sphere | Surface::Rp2 => {
            let (l, m) = require(a.lm, "lm", a.surface)?;
            sphere_field_on(a.field, a.surface, l)?;
            let c = a.field.sectional(l, m)?;
            (
                serde_json::json!({ "field": a.field.name() }),
                serde_json::json!({ "l": l, "m": m }),
                (l, m),
                "ylm",
                c,
            )
        }
    };
    let value = cli.norm_convention.apply(a.surface, value);
    match cli.format {
        Format::Csv => {
            sink.line(&format!("{CSV_HEADER},norm_convention"))?;
            sink.line(&format!(
                "{},{},{},{kind},{},{}",
                a.surface,
                idx.0,
                idx.1,
                float(value),
                cli.norm_convention
            ))
        }
        Format::Json => sink.json(&CurvatureReport {
            surface: a.surface.name(),
            direction,
            plane,
            curvature: Num(value),
            norm_convention: cli.norm_convention.name(),
            method: "closed_form",
        }),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum SweepRecord {
    Lattice {
        surface: &'static str,
        k1: i64,
        k2: i64,
        kind: &'static str,
        value: Num,
        method: &'static str,
    },
    Harmonic {
        surface: &'static str,
        l: i64,
        m: i64,
        value: Num,
        method: &'static str,
    },
}

impl SweepRecord {
    fn csv(&self) -> String {
        match self {
            SweepRecord::Lattice {
                surface,
                k1,
                k2,
                kind,
                value,
                ..
            } => {
                format!("{surface},{k1},{k2},{kind},{}", float(value.0))
            }
            SweepRecord::Harmonic {
                surface,
                l,
                m,
                value,
                ..
            } => {
                format!("{surface},{l},{m},ylm,{}", float(value.0))
            }
        }
    }
}

fn blanket(cli: &Cli, a: &BlanketArgs, sink: &mut Sink) -> Result<()> {
    let (area, conv, surface) = (cli.torus_area, cli.norm_convention, a.surface);
    let lattice = |k1, k2, kind, c| SweepRecord::Lattice {
        surface: surface.name(),
        k1,
        k2,
        kind,
        value: Num(conv.apply(surface, c)),
        method: "closed_form",
    };
    let records: Vec<SweepRecord> = match surface {
        Surface::Klein => {
            let xi = klein_element(a.k, a.kind)?;
            klein_sweep(&xi, a.radius, area)?
                .into_iter()
                .map(|(kind, e, c)| lattice(e.k.k1, e.k.k2, kind.name(), c))
                .collect()
        }
        Surface::Torus => sdiff_core::torus_sweep(a.k, a.radius, area)?
            .into_iter()
            .map(|(kind, l, c)| lattice(l.k1, l.k2, kind.name(), c))
            .collect(),
        Surface::Sphere | Surface::Rp2 => sphere_sweep(a.field, surface, a.l_min, a.l_max)?
            .into_iter()
            .map(|(mode, c)| SweepRecord::Harmonic {
                surface: surface.name(),
                l: mode.l,
                m: mode.m,
                value: Num(conv.apply(surface, c)),
                method: "closed_form",
            })
            .collect(),
    };
    match cli.format {
        Format::Csv => {
            sink.line(CSV_HEADER)?;
            records.iter().try_for_each(|r| sink.line(&r.csv()))
        }
        Format::Json => sink.json(&records),
    }
}

#[derive(Serialize)]
struct PartialSum {
    #[serde(rename = "R")]
    radius: Num,
    count: u64,
    value: Num,
}

#[derive(Serialize)]
struct RicciReport<D: Serialize> {
    surface: &'static str,
    direction: serde_json::Value,
    norm_convention: &'static str,
    analytic: Num,
    partial_sums: Vec<PartialSum>,
    diagnostics: D,
}

#[derive(Serialize)]
struct KleinDiagnostics {
    r_max: Num,
    basis_size: u64,
    excluded: u64,
    relative_error: Num,
}

#[derive(Serialize)]
struct SphereDiagnostics {
    l_max: i64,
    count: u64,
    empirical_mean: Num,
    profile_mean: Num,
    profile_riemann_sum: Num,
    profile_integral: Num,
    analytic: Num,
}

fn ricci(cli: &Cli, a: &RicciArgs, sink: &mut Sink) -> Result<()> {
    let (conv, surface) = (cli.norm_convention, a.surface);
    let scale = |x: f64| Num(conv.apply(surface, x));
    match surface {
        Surface::Klein => {
            let xi = klein_element(a.k, a.kind)?;
            let analytic = ricci_analytic(xi.k, cli.torus_area);
            let sums = ricci_partial_sums(&xi, a.r_max, a.step, cli.torus_area)?;
            let last = sums.last().expect("at least one radius");
            let basis_size = count_basis(a.r_max);
            let report = RicciReport {
                surface: surface.name(),
                direction: serde_json::json!(Index {
                    k1: xi.k.k1,
                    k2: xi.k.k2,
                    kind: xi.kind().unwrap().name()
                }),
                norm_convention: conv.name(),
                analytic: scale(analytic),
                partial_sums: sums
                    .iter()
                    .map(|p| PartialSum {
                        radius: Num(p.radius),
                        count: p.count,
                        value: scale(p.value),
                    })
                    .collect(),
                diagnostics: KleinDiagnostics {
                    r_max: Num(a.r_max),
                    basis_size,
                    excluded: basis_size - last.count,
                    relative_error: Num((last.value - analytic).abs() / analytic.abs()),
                },
            };
            sink.json(&report)
        }
        Surface::Sphere | Surface::Rp2 => {
            let analytic = ricci_analytic_sphere(a.field, surface)?;
            if a.step.is_nan() || a.step < 1.0 {
                return Err(sdiff_core::Error::Domain("step must be at least 1".into()).into());
            }
            let step = a.step as i64;
            let mut degrees: Vec<i64> = (1..)
                .map(|i| i * step)
                .take_while(|&l| l < a.l_max)
                .filter(|&l| l >= 5)
                .collect();
            degrees.push(a.l_max);
            let estimates = degrees
                .iter()
                .map(|&l| ricci_numeric_estimate(a.field, surface, l))
                .collect::<sdiff_core::Result<Vec<_>>>()?;
            let d = estimates.last().unwrap();
            let report = RicciReport {
                surface: surface.name(),
                direction: serde_json::json!({ "field": a.field.name() }),
                norm_convention: conv.name(),
                analytic: scale(analytic),
                partial_sums: estimates
                    .iter()
                    .map(|e| PartialSum {
                        radius: Num(e.l_max as f64),
                        count: e.count,
                        value: scale(e.empirical_mean),
                    })
                    .collect(),
                diagnostics: SphereDiagnostics {
                    l_max: d.l_max,
                    count: d.count,
                    empirical_mean: scale(d.empirical_mean),
                    profile_mean: scale(d.profile_mean),
                    profile_riemann_sum: scale(d.profile_riemann_sum),
                    profile_integral: scale(d.profile_integral),
                    analytic: scale(d.analytic),
                },
            };
            sink.json(&report)
        }
        Surface::Torus => Err(CliError::Usage(
            "ricci supports klein, sphere and rp2".into(),
        )),
    }
}

#[derive(Serialize)]
struct WeatherRow {
    name: String,
    rescale: &'static str,
    alpha: Num,
    k: Num,
}

impl WeatherRow {
    fn from_scenario(name: &str, s: &WeatherScenario) -> Result<Self> {
        let r = weather::evaluate(name, s)?;
        Ok(WeatherRow {
            name: r.name,
            rescale: r.rescale.name(),
            alpha: Num(r.alpha),
            k: Num(r.k),
        })
    }
}

fn weather(cli: &Cli, a: &WeatherArgs, sink: &mut Sink) -> Result<()> {
    let mut rows = Vec::new();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut s = WeatherScenario::from_config_str(&text)?;
        if let Some(r) = a.rescale {
            s.rescale = r;
        }
        rows.push(WeatherRow::from_scenario("config", &s)?);
    } else {
        let rescales = match a.rescale {
            Some(r) => vec![r],
            None => vec![Rescale::Equator, Rescale::Area],
        };
        for r in rescales {
            for name in &PRESET_NAMES[..4] {
                rows.push(WeatherRow::from_scenario(name, &preset(name, r)?)?);
            }
        }
        if a.rescale != Some(Rescale::Area) {
            for name in &PRESET_NAMES[4..] {
                rows.push(WeatherRow::from_scenario(
                    name,
                    &preset(name, Rescale::Equator)?,
                )?);
            }
            let mut alt = preset("sphere_e03", Rescale::Equator)?;
            alt.v_rapid = weather::e03_rapid_alternative();
            rows.push(WeatherRow::from_scenario("sphere_e03_alt_speed", &alt)?);
        }
    }
    match cli.format {
        Format::Csv => {
            sink.line("name,rescale,alpha,k")?;
            for r in &rows {
                sink.line(&format!(
                    "{},{},{},{}",
                    r.name,
                    r.rescale,
                    float(r.alpha.0),
                    float(r.k.0)
                ))?;
            }
            Ok(())
        }
        Format::Json => sink.json(&rows),
    }
}

#[derive(Serialize)]
struct OracleSummary {
    surface: &'static str,
    radius: Num,
    planes: usize,
    max_rel_err: Num,
    tolerance: Num,
    pass: bool,
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn both_oracles(
    u: &sdiff_core::FourierVector,
    v: &sdiff_core::FourierVector,
    closed: f64,
) -> sdiff_core::Result<f64> {
    let t = sectional_curvature_oracle(u, v, OracleMethod::Tensor)?;
    let s = sectional_curvature_oracle(u, v, OracleMethod::ShortFormula)?;
    Ok(rel_err(closed, t).max(rel_err(closed, s)))
}

fn klein_check(radius: f64, area: f64) -> sdiff_core::Result<(usize, f64)> {
    let basis = enumerate_basis(radius);
    let vecs: Vec<_> = basis.iter().map(|(_, e)| e.to_fourier(area)).collect();
    let per_row = (0..basis.len())
        .into_par_iter()
        .map(|i| {
            let mut worst = 0.0f64;
            for (j, eta) in vecs.iter().enumerate() {
                if i != j {
                    let c = sectional_klein(&basis[i].1, eta)?;
                    worst = worst.max(both_oracles(&vecs[i], eta, c)?);
                }
            }
            Ok(worst)
        })
        .collect::<sdiff_core::Result<Vec<f64>>>()?;
    let n = basis.len();
    Ok((
        n * n.saturating_sub(1),
        per_row.into_iter().fold(0.0, f64::max),
    ))
}

fn torus_check(radius: f64, area: f64) -> sdiff_core::Result<(usize, f64)> {
    let basis = torus_basis(radius);
    let dirs: Vec<LatticeMode> = basis
        .iter()
        .filter(|(kind, _)| *kind == TorusKind::Cos)
        .map(|&(_, k)| k)
        .collect();
    let per_dir = dirs
        .par_iter()
        .map(|&k| {
            let zeta = torus_element(TorusKind::Cos, k, area);
            let (mut planes, mut worst) = (0usize, 0.0f64);
            for &(kind, l) in &basis {
                if kind == TorusKind::Cos && l == k {
                    continue;
                }
                let eta = torus_element(kind, l, area);
                let c = sectional_torus(k, &eta)?;
                worst = worst.max(both_oracles(&zeta, &eta, c)?);
                planes += 1;
            }
            Ok((planes, worst))
        })
        .collect::<sdiff_core::Result<Vec<_>>>()?;
    Ok(per_dir
        .into_iter()
        .fold((0, 0.0), |(n, w), (m, x)| (n + m, f64::max(w, x))))
}

fn oracle_check(cli: &Cli, a: &OracleCheckArgs, sink: &mut Sink) -> Result<()> {
    let surfaces = match a.surface {
        None => vec![Surface::Klein, Surface::Torus],
        Some(s @ (Surface::Klein | Surface::Torus)) => vec![s],
        Some(s) => {
            return Err(CliError::Usage(format!(
                "oracle-check covers klein and torus, got {s}"
            )))
        }
    };
    let mut summaries = Vec::new();
    for surface in surfaces {
        let (planes, worst) = match surface {
            Surface::Klein => klein_check(a.radius, cli.torus_area)?,
            _ => torus_check(a.radius, cli.torus_area)?,
        };
        summaries.push(OracleSummary {
            surface: surface.name(),
            radius: Num(a.radius),
            planes,
            max_rel_err: Num(worst),
            tolerance: Num(ORACLE_TOL),
            pass: worst <= ORACLE_TOL,
        });
    }
    match cli.format {
        Format::Csv => {
            sink.line("surface,radius,planes,max_rel_err,tolerance,pass")?;
            for s in &summaries {
                sink.line(&format!(
                    "{},{},{},{},{},{}",
                    s.surface,
                    float(s.radius.0),
                    s.planes,
                    float(s.max_rel_err.0),
                    float(s.tolerance.0),
                    s.pass
                ))?;
            }
        }
        Format::Json => sink.json(&summaries)?,
    }
    match summaries.iter().find(|s| !s.pass) {
        Some(s) => Err(CliError::Verification(format!(
            "{}: closed form and oracles differ by {:e}",
            s.surface, s.max_rel_err.0
        ))),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct Check {
    check: &'static str,
    residual: Num,
    tolerance: Num,
    pass: bool,
}

fn harmonics_check(cli: &Cli, a: &HarmonicsCheckArgs, sink: &mut Sink) -> Result<()> {
    if a.lmax < 0 {
        return Err(sdiff_core::Error::Domain(format!(
            "lmax must be non-negative, got {}",
            a.lmax
        ))
        .into());
    }
    let n_theta = (2 * a.lmax + 4) as usize;
    let ortho = orthonormality_residual(a.lmax);
    let parity = parity_residual(a.lmax, n_theta, 2 * n_theta);
    let checks = [
        Check {
            check: "orthonormality",
            residual: Num(ortho),
            tolerance: Num(ORTHONORMALITY_TOL),
            pass: ortho <= ORTHONORMALITY_TOL,
        },
        Check {
            check: "parity",
            residual: Num(parity),
            tolerance: Num(PARITY_TOL),
            pass: parity <= PARITY_TOL,
        },
    ];
    match cli.format {
        Format::Csv => {
            sink.line("check,residual,tolerance,pass")?;
            for c in &checks {
                sink.line(&format!(
                    "{},{},{},{}",
                    c.check,
                    float(c.residual.0),
                    float(c.tolerance.0),
                    c.pass
                ))?;
            }
        }
        Format::Json => sink.json(&checks)?,
    }
    match checks.iter().find(|c| !c.pass) {
        Some(c) => Err(CliError::Verification(format!(
            "{} residual {:e} above {:e}",
            c.check, c.residual.0, c.tolerance.0
        ))),
        None => Ok(()),
    }
}
