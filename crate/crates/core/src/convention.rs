use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Surface {
    Torus,
    Klein,
    Sphere,
    Rp2,
}

impl Surface {
    pub fn name(self) -> &'static str {
        match self {
            Surface::Torus => "torus",
            Surface::Klein => "klein",
            Surface::Sphere => "sphere",
            Surface::Rp2 => "rp2",
        }
    }

    pub fn is_non_orientable(self) -> bool {
        matches!(self, Surface::Klein | Surface::Rp2)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Surface {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus" => Ok(Surface::Torus),
            "klein" => Ok(Surface::Klein),
            "sphere" | "s2" => Ok(Surface::Sphere),
            "rp2" => Ok(Surface::Rp2),
            _ => Err(Error::Domain(format!("unknown surface '{s}'"))),
        }
    }
}

/// Norm on fields of a non-orientable quotient.
///
/// `Isometric` gives a field the norm of its lift to the double cover, so
/// curvatures equal those computed upstairs. `Half` integrates over the
/// quotient only (half the squared norm), which doubles sectional curvatures.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormConvention {
    #[default]
    Isometric,
    Half,
}

impl NormConvention {
    pub fn name(self) -> &'static str {
        match self {
            NormConvention::Isometric => "isometric",
            NormConvention::Half => "half",
        }
    }

    /// Multiplier applied to a curvature computed on the cover.
    pub fn factor(self, surface: Surface) -> f64 {
        match (self, surface.is_non_orientable()) {
            (NormConvention::Half, true) => 2.0,
            _ => 1.0,
        }
    }

    pub fn apply(self, surface: Surface, curvature: f64) -> f64 {
        self.factor(surface) * curvature
    }
}

impl fmt::Display for NormConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "isometric" => Ok(NormConvention::Isometric),
            "half" => Ok(NormConvention::Half),
            _ => Err(Error::Domain(format!("unknown norm convention '{s}'"))),
        }
    }
}
