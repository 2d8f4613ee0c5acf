//! `sdiff`: curvature computations for area-preserving diffeomorphism groups.

mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sdiff_core::{BasisKind, LatticeMode, NormConvention, Rescale, SphereField, Surface};

use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "sdiff",
    version,
    about = "Sectional and Ricci curvatures of SDiff on the torus, Klein bottle, sphere and RP2"
)]
pub struct Cli {
    /// Area of the covering torus
    #[arg(long, global = true, default_value_t = sdiff_core::DEFAULT_TORUS_AREA)]
    pub torus_area: f64,

    /// Norm of fields on a non-orientable surface: that of the lift, or half of it
    #[arg(long, global = true, default_value = "isometric", value_parser = parse_from_str::<NormConvention>)]
    pub norm_convention: NormConvention,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Weather scenario file with `key = value` lines
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sectional curvature of one plane
    Curvature(CurvatureArgs),
    /// Curvatures of one direction against every basis element up to a cutoff
    Blanket(BlanketArgs),
    /// Normalized Ricci curvature and its partial averages
    Ricci(RicciArgs),
    /// Digits of forecast accuracy lost per month
    Weather(WeatherArgs),
    /// Compare closed forms with the curvature tensor and the short formula
    OracleCheck(OracleCheckArgs),
    /// Orthonormality and parity of spherical harmonics
    HarmonicsCheck(HarmonicsCheckArgs),
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    #[arg(long, value_parser = parse_from_str::<Surface>)]
    pub surface: Surface,
    /// Direction index `k1,k2` (klein, torus)
    #[arg(long, value_parser = parse_mode)]
    pub k: Option<LatticeMode>,
    /// Family of the direction (klein); defaults to the real family when admissible
    #[arg(long, value_parser = parse_from_str::<BasisKind>)]
    pub kind: Option<BasisKind>,
    /// Second index `l1,l2` (klein, torus)
    #[arg(long, value_parser = parse_mode)]
    pub eta: Option<LatticeMode>,
    /// Family of the second element: a basis kind on klein, `cos` or `sin` on torus
    #[arg(long)]
    pub eta_kind: Option<String>,
    #[arg(long, default_value = "e03", value_parser = parse_from_str::<SphereField>)]
    pub field: SphereField,
    /// Spherical harmonic degree and order `l,m` (sphere, rp2)
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub lm: Option<(i64, i64)>,
}

#[derive(Debug, Args)]
pub struct BlanketArgs {
    #[arg(long, value_parser = parse_from_str::<Surface>)]
    pub surface: Surface,
    #[arg(long, value_parser = parse_mode, default_value = "20,10")]
    pub k: LatticeMode,
    #[arg(long, value_parser = parse_from_str::<BasisKind>)]
    pub kind: Option<BasisKind>,
    /// Cutoff on `‖l‖` (klein, torus)
    #[arg(long, default_value_t = 50.0)]
    pub radius: f64,
    #[arg(long, default_value = "e03", value_parser = parse_from_str::<SphereField>)]
    pub field: SphereField,
    #[arg(long, default_value_t = 2)]
    pub l_min: i64,
    #[arg(long, default_value_t = 100)]
    pub l_max: i64,
}

#[derive(Debug, Args)]
pub struct RicciArgs {
    #[arg(long, value_parser = parse_from_str::<Surface>)]
    pub surface: Surface,
    #[arg(long, value_parser = parse_mode, default_value = "0,1")]
    pub k: LatticeMode,
    #[arg(long, value_parser = parse_from_str::<BasisKind>)]
    pub kind: Option<BasisKind>,
    /// Largest cutoff radius (klein)
    #[arg(long, default_value_t = 100.0)]
    pub r_max: f64,
    /// Spacing of reported cutoffs (radius on klein, degree on the sphere)
    #[arg(long, default_value_t = 10.0)]
    pub step: f64,
    #[arg(long, default_value = "e03", value_parser = parse_from_str::<SphereField>)]
    pub field: SphereField,
    #[arg(long, default_value_t = 100)]
    pub l_max: i64,
}

#[derive(Debug, Args)]
pub struct WeatherArgs {
    /// Only this rescaling; both when omitted
    #[arg(long, value_parser = parse_from_str::<Rescale>)]
    pub rescale: Option<Rescale>,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    #[arg(long, default_value_t = 6.0)]
    pub radius: f64,
    /// `klein`, `torus`, or both when omitted
    #[arg(long, value_parser = parse_from_str::<Surface>)]
    pub surface: Option<Surface>,
}

#[derive(Debug, Args)]
pub struct HarmonicsCheckArgs {
    #[arg(long, default_value_t = 6)]
    pub lmax: i64,
}

fn parse_from_str<T>(s: &str) -> std::result::Result<T, String>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| e.to_string())
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two integers 'a,b', got '{s}'"))?;
    let int = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("'{t}': {e}"));
    Ok((int(a)?, int(b)?))
}

fn parse_mode(s: &str) -> std::result::Result<LatticeMode, String> {
    parse_pair(s).map(LatticeMode::from)
}

fn run(cli: Cli) -> Result<()> {
    if !(cli.torus_area > 0.0 && cli.torus_area.is_finite()) {
        return Err(sdiff_core::Error::InvalidArea(cli.torus_area).into());
    }
    if cli.config.is_some() && !matches!(cli.command, Command::Weather(_)) {
        return Err(CliError::Usage(
            "--config applies to the weather subcommand only".into(),
        ));
    }
    match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| commands::dispatch(&cli)),
        None => commands::dispatch(&cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
