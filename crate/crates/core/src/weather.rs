//! Error growth estimates from the normalized Ricci curvature of a trade-wind flow.

use std::f64::consts::{LOG10_E, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::DEFAULT_TORUS_AREA;

/// 30 days of 24 hours.
pub const HOURS_PER_MONTH: f64 = 720.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rescale {
    /// Match the model equator to the Earth's equator.
    Equator,
    /// Match the model area to the Earth's surface area.
    Area,
}

impl Rescale {
    pub fn name(self) -> &'static str {
        match self {
            Rescale::Equator => "equator",
            Rescale::Area => "area",
        }
    }
}

impl fmt::Display for Rescale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rescale {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equator" => Ok(Rescale::Equator),
            "area" => Ok(Rescale::Area),
            _ => Err(Error::Config(format!("unknown rescale '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeatherScenario {
    pub norm_v: f64,
    pub ricci: f64,
    pub v_rapid: f64,
    pub s_orb: f64,
    #[serde(rename = "equator_E")]
    pub equator_e: f64,
    #[serde(rename = "area_S")]
    pub area_s: f64,
    pub rescale: Rescale,
    pub earth_equator_km: f64,
    pub earth_area_km2: f64,
    pub wind_speed_kmh: f64,
}

pub const PRESET_NAMES: [&str; 6] = [
    "klein",
    "torus",
    "rp2",
    "sphere_e03",
    "sphere_e02_ric",
    "sphere_e02_inf",
];

impl WeatherScenario {
    fn with_defaults(
        norm_v: f64,
        ricci: f64,
        v_rapid: f64,
        s_orb: f64,
        equator_e: f64,
        area_s: f64,
        rescale: Rescale,
    ) -> Self {
        WeatherScenario {
            norm_v,
            ricci,
            v_rapid,
            s_orb,
            equator_e,
            area_s,
            rescale,
            earth_equator_km: 40_000.0,
            earth_area_km2: 5.1e8,
            wind_speed_kmh: 100.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ricci.is_nan() || self.ricci >= 0.0 {
            return Err(Error::Domain(format!(
                "ricci must be negative, got {}",
                self.ricci
            )));
        }
        let positive = [
            ("norm_v", self.norm_v),
            ("v_rapid", self.v_rapid),
            ("s_orb", self.s_orb),
            ("equator_E", self.equator_e),
            ("area_S", self.area_s),
            ("earth_equator_km", self.earth_equator_km),
            ("earth_area_km2", self.earth_area_km2),
            ("wind_speed_kmh", self.wind_speed_kmh),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    /// Model-to-Earth length factor `c_M`.
    pub fn c_m(&self) -> f64 {
        match self.rescale {
            Rescale::Equator => self.earth_equator_km / self.equator_e,
            Rescale::Area => (self.earth_area_km2 / self.area_s).sqrt(),
        }
    }

    /// Parses `key = value` lines; `#` starts a comment.
    ///
    /// The six model quantities are required; `rescale` defaults to `equator`
    /// and the Earth constants to their usual values.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut s = WeatherScenario::with_defaults(
            f64::NAN,
            f64::NAN,
            f64::NAN,
            f64::NAN,
            f64::NAN,
            f64::NAN,
            Rescale::Equator,
        );
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", no + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "rescale" {
                s.rescale = value.parse()?;
                continue;
            }
            let v: f64 = value.parse().map_err(|_| {
                Error::Config(format!("line {}: '{value}' is not a number", no + 1))
            })?;
            let slot = match key {
                "norm_v" => &mut s.norm_v,
                "ricci" => &mut s.ricci,
                "v_rapid" => &mut s.v_rapid,
                "s_orb" => &mut s.s_orb,
                "equator_E" => &mut s.equator_e,
                "area_S" => &mut s.area_s,
                "earth_equator_km" => &mut s.earth_equator_km,
                "earth_area_km2" => &mut s.earth_area_km2,
                "wind_speed_kmh" => &mut s.wind_speed_kmh,
                _ => {
                    return Err(Error::Config(format!(
                        "line {}: unknown key '{key}'",
                        no + 1
                    )))
                }
            };
            *slot = v;
        }
        for (name, v) in [
            ("norm_v", s.norm_v),
            ("ricci", s.ricci),
            ("v_rapid", s.v_rapid),
            ("s_orb", s.s_orb),
            ("equator_E", s.equator_e),
            ("area_S", s.area_s),
        ] {
            if v.is_nan() {
                return Err(Error::Config(format!("missing key '{name}'")));
            }
        }
        s.validate()?;
        Ok(s)
    }
}

/// `α = s_orb ‖v‖ √(-Ric) / |v|_rapid`, growth exponent per revolution of the fastest particles.
pub fn alpha(s: &WeatherScenario) -> Result<f64> {
    s.validate()?;
    Ok(s.s_orb * s.norm_v * (-s.ricci).sqrt() / s.v_rapid)
}

/// `k = ‖v‖ √(-Ric) / (|v|_rapid c_M) · hours · wind · log₁₀ e`
pub fn digits_per_month(s: &WeatherScenario) -> Result<f64> {
    s.validate()?;
    Ok(s.norm_v * (-s.ricci).sqrt() / (s.v_rapid * s.c_m())
        * HOURS_PER_MONTH
        * s.wind_speed_kmh
        * LOG10_E)
}

/// Built-in scenarios.
///
/// The torus and Klein bottle use the trade wind `sin(x2) ∂/∂x1` on the
/// `2π × 2π` torus. The sphere and projective plane use the zonal field `e⁰₃`
/// with fastest speed `(2/3)√(14/(5 S_{RP²}))`; the alternative value
/// `√(28/(5 S_{S²}))` does not reproduce the tabulated exponents.
/// `sphere_e02_inf` replaces the Ricci curvature of `e⁰₂` by a quarter of the
/// infimum of its sectional curvatures, `-15/(32π)`.
pub fn preset(name: &str, rescale: Rescale) -> Result<WeatherScenario> {
    let st = DEFAULT_TORUS_AREA;
    let (s2, rp2) = (4.0 * PI, 2.0 * PI);
    let torus_rapid = 1.0;
    let e03_rapid = 2.0 / 3.0 * (14.0 / (5.0 * rp2)).sqrt();
    let e03_orbit = 4.0 * PI / 15f64.sqrt();
    let e02_rapid = 0.5 * (15.0 / (2.0 * s2)).sqrt();
    let e02_orbit = PI * 2f64.sqrt();
    let w = WeatherScenario::with_defaults;
    Ok(match name {
        "klein" => w(
            (st / 2.0).sqrt(),
            -3.0 / (8.0 * st),
            torus_rapid,
            2.0 * PI,
            2.0 * PI,
            st / 2.0,
            rescale,
        ),
        "torus" => w(
            (st / 2.0).sqrt(),
            -3.0 / (8.0 * st),
            torus_rapid,
            2.0 * PI,
            2.0 * PI,
            st,
            rescale,
        ),
        "rp2" => w(
            1.0,
            -15.0 / (2.0 * s2),
            e03_rapid,
            e03_orbit,
            PI,
            rp2,
            rescale,
        ),
        "sphere_e03" => w(
            1.0,
            -15.0 / (2.0 * s2),
            e03_rapid,
            e03_orbit,
            2.0 * PI,
            s2,
            rescale,
        ),
        "sphere_e02_ric" => w(1.0, -3.0 / s2, e02_rapid, e02_orbit, 2.0 * PI, s2, rescale),
        "sphere_e02_inf" => w(
            1.0,
            -0.25 * 15.0 / (8.0 * PI),
            e02_rapid,
            e02_orbit,
            2.0 * PI,
            s2,
            rescale,
        ),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

/// `√(28/(5 S_{S²}))`, the other fastest speed quoted for the `e⁰₃` trade wind.
pub fn e03_rapid_alternative() -> f64 {
    (28.0 / (5.0 * 4.0 * PI)).sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeatherRecord {
    pub name: String,
    pub rescale: Rescale,
    pub alpha: f64,
    pub k: f64,
}

pub fn evaluate(name: &str, s: &WeatherScenario) -> Result<WeatherRecord> {
    Ok(WeatherRecord {
        name: name.to_string(),
        rescale: s.rescale,
        alpha: alpha(s)?,
        k: digits_per_month(s)?,
    })
}
