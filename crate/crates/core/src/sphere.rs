//! Closed-form curvatures of the sphere and projective plane groups in planes
//! through the zonal fields `e⁰₁`, `e⁰₂`, `e⁰₃`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convention::Surface;
use crate::error::{Error, Result};
use crate::harmonics::SphericalMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SphereField {
    E01,
    E02,
    E03,
}

impl SphereField {
    pub fn name(self) -> &'static str {
        match self {
            SphereField::E01 => "e01",
            SphereField::E02 => "e02",
            SphereField::E03 => "e03",
        }
    }

    /// Degree of the zonal field.
    pub fn degree(self) -> i64 {
        match self {
            SphereField::E01 => 1,
            SphereField::E02 => 2,
            SphereField::E03 => 3,
        }
    }

    /// Smallest partner degree the closed form accepts.
    pub fn min_degree(self) -> i64 {
        self.degree()
    }

    pub fn sectional(self, l: i64, m: i64) -> Result<f64> {
        match self {
            SphereField::E01 => sectional_e01(l, m),
            SphereField::E02 => sectional_e02(l, m),
            SphereField::E03 => sectional_e03(l, m),
        }
    }

    pub fn descends_to_rp2(self) -> bool {
        self.degree() % 2 == 1
    }
}

impl fmt::Display for SphereField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SphereField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e01" => Ok(SphereField::E01),
            "e02" => Ok(SphereField::E02),
            "e03" => Ok(SphereField::E03),
            _ => Err(Error::Domain(format!("unknown zonal field '{s}'"))),
        }
    }
}

fn check_mode(l: i64, m: i64, min_l: i64, what: &str) -> Result<()> {
    SphericalMode::new(l, m)?;
    if l < min_l {
        return Err(Error::Domain(format!("{what} needs l >= {min_l}, got {l}")));
    }
    Ok(())
}

/// Coefficients `(ϑ, ϱ, γ)` of the `e⁰₃` formula.
pub fn theta_rho_gamma(l: i64, m: i64) -> Result<(f64, f64, f64)> {
    check_mode(l, m, 3, "theta_rho_gamma")?;
    let (l, m2) = (l as f64, (m * m) as f64);
    let sq = ((l * l - m2) / ((2.0 * l + 1.0) * (2.0 * l - 1.0))
        + ((l + 1.0).powi(2) - m2) / ((2.0 * l + 3.0) * (2.0 * l + 1.0))
        - 0.2)
        .powi(2)
        / 8.0;
    let up = ((l + 2.0).powi(2) - m2) * ((l + 1.0).powi(2) - m2);
    let down = ((l - 1.0).powi(2) - m2) * (l * l - m2);
    let up_den = 8.0 * (2.0 * l + 1.0) * (2.0 * l + 3.0).powi(2) * (2.0 * l + 5.0);
    let down_den = 8.0 * (2.0 * l - 3.0) * (2.0 * l - 1.0).powi(2) * (2.0 * l + 1.0);
    let ll1 = l * (l + 1.0);
    let theta = up * ll1 / (up_den * (l + 2.0) * (l + 3.0))
        + down * ll1 / (down_den * (l - 2.0) * (l - 1.0))
        + sq;
    let rho = up / up_den + down / down_den + sq;
    let gamma = up * (l + 2.0) * (l + 3.0) / (up_den * ll1)
        + down * (l - 2.0) * (l - 1.0) / (down_den * ll1)
        + sq;
    Ok((theta, rho, gamma))
}

/// `C(e⁰₃, e^m_l) = -(525 m²/(32π)) (3γ - 2(12/(l(l+1)) + 1)ϱ - (12/(l(l+1)) - 1)² ϑ)`
pub fn sectional_e03(l: i64, m: i64) -> Result<f64> {
    check_mode(l, m, 3, "sectional_e03")?;
    if (l, m) == (3, 0) {
        return Err(Error::DegeneratePlane);
    }
    let (theta, rho, gamma) = theta_rho_gamma(l, m)?;
    let h = 12.0 / (l * (l + 1)) as f64;
    let m2 = (m * m) as f64;
    Ok(-525.0 * m2 / (32.0 * PI)
        * (3.0 * gamma - 2.0 * (h + 1.0) * rho - (h - 1.0).powi(2) * theta))
}

/// `C(e⁰₂, e^m_l)` with `c_l = 6/(l(l+1))`, `b_l = (l+1)/(l-1)`, `a^m_l = (l²-m²)/(4l²-1)`.
///
/// The first bracket carries `(1 - c_l)²`.
pub fn sectional_e02(l: i64, m: i64) -> Result<f64> {
    check_mode(l, m, 2, "sectional_e02")?;
    if (l, m) == (2, 0) {
        return Err(Error::DegeneratePlane);
    }
    let lf = l as f64;
    let m2 = (m * m) as f64;
    let c = 6.0 / (lf * (lf + 1.0));
    let b = |n: f64| (n + 1.0) / (n - 1.0);
    let a = |n: f64| (n * n - m2) / (4.0 * n * n - 1.0);
    let (al, al1, bl, bl1) = (a(lf), a(lf + 1.0), b(lf), b(lf + 1.0));
    Ok(15.0 * m2 / (32.0 * PI)
        * ((1.0 - c).powi(2) * (al * bl + al1 / bl1) + 2.0 * (1.0 + c) * (al + al1)
            - 3.0 * (al / bl + al1 * bl1)))
}

/// `C(e⁰₁, e^m_l) = 3m²/(8π l²(l+1)²)`
pub fn sectional_e01(l: i64, m: i64) -> Result<f64> {
    check_mode(l, m, 1, "sectional_e01")?;
    if (l, m) == (1, 0) {
        return Err(Error::DegeneratePlane);
    }
    let lf = l as f64;
    Ok(3.0 * (m * m) as f64 / (8.0 * PI * lf * lf * (lf + 1.0).powi(2)))
}

fn check_q(q: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&q) {
        Ok(())
    } else {
        Err(Error::Domain(format!("q = {q} outside [-1, 1]")))
    }
}

/// `-(525/(32π)) q⁴ (1 - q²)`
pub fn asymptotic_e03(q: f64) -> Result<f64> {
    check_q(q)?;
    Ok(-525.0 / (32.0 * PI) * q.powi(4) * (1.0 - q * q))
}

/// `-(15/(8π)) q⁴`
pub fn asymptotic_e02(q: f64) -> Result<f64> {
    check_q(q)?;
    Ok(-15.0 / (8.0 * PI) * q.powi(4))
}

/// `-175/(72π)`, the minimum of the `e⁰₃` profile.
pub fn e03_infimum() -> f64 {
    -175.0 / (72.0 * PI)
}

fn asymptotic(field: SphereField, q: f64) -> Result<f64> {
    match field {
        SphereField::E02 => asymptotic_e02(q),
        SphereField::E03 => asymptotic_e03(q),
        SphereField::E01 => Err(Error::NotDefined("no asymptotic profile for e01".into())),
    }
}

/// `∫_{-1}^{1}` of the asymptotic profile.
pub fn profile_integral(field: SphereField) -> Result<f64> {
    match field {
        SphereField::E02 => Ok(-3.0 / (4.0 * PI)),
        SphereField::E03 => Ok(-15.0 / (8.0 * PI)),
        SphereField::E01 => Err(Error::NotDefined("no asymptotic profile for e01".into())),
    }
}

fn check_surface(field: SphereField, surface: Surface) -> Result<()> {
    match surface {
        Surface::Sphere => Ok(()),
        Surface::Rp2 if field.descends_to_rp2() => Ok(()),
        Surface::Rp2 => Err(Error::NotDefined(format!(
            "{field} is not anti-invariant and does not descend to rp2"
        ))),
        _ => Err(Error::Domain(format!(
            "{surface} is not a spherical surface"
        ))),
    }
}

/// Normalized Ricci curvature in the direction of a zonal field.
pub fn ricci_analytic_sphere(field: SphereField, surface: Surface) -> Result<f64> {
    check_surface(field, surface)?;
    match field {
        SphereField::E03 => Ok(-15.0 / (8.0 * PI)),
        SphereField::E02 => Ok(-3.0 / (4.0 * PI)),
        SphereField::E01 => Err(Error::NotDefined("no Ricci constant for e01".into())),
    }
}

/// All `(l, m)` with `l ≤ l_max` that the closed form for `field` accepts on
/// `surface`, in lexicographic order, paired with `C(field, e^m_l)`.
///
/// The plane spanned by the field with itself is left out.
pub fn sphere_sweep(
    field: SphereField,
    surface: Surface,
    l_min: i64,
    l_max: i64,
) -> Result<Vec<(SphericalMode, f64)>> {
    check_surface(field, surface)?;
    let start = l_min.max(field.min_degree());
    let mut out = Vec::new();
    for l in start..=l_max {
        if surface == Surface::Rp2 && l % 2 == 0 {
            continue;
        }
        for m in -l..=l {
            if (l, m) == (field.degree(), 0) {
                continue;
            }
            out.push((SphericalMode { l, m }, field.sectional(l, m)?));
        }
    }
    Ok(out)
}

/// Numerical companion to [`ricci_analytic_sphere`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RicciDiagnostic {
    pub l_max: i64,
    pub count: u64,
    /// Mean of the closed-form sectional curvatures over the sweep.
    pub empirical_mean: f64,
    /// Mean of the asymptotic profile at `q = m/l` over the same modes.
    pub profile_mean: f64,
    /// `Σ_m profile(m/L) / L` at the top degree `L`, a Riemann sum with spacing `1/L`.
    pub profile_riemann_sum: f64,
    pub profile_integral: f64,
    pub analytic: f64,
}

pub fn ricci_numeric_estimate(
    field: SphereField,
    surface: Surface,
    l_max: i64,
) -> Result<RicciDiagnostic> {
    if l_max < 5 {
        return Err(Error::Domain(format!(
            "l_max must be at least 5, got {l_max}"
        )));
    }
    let analytic = ricci_analytic_sphere(field, surface)?;
    let sweep = sphere_sweep(field, surface, 0, l_max)?;
    let count = sweep.len() as u64;
    let empirical_mean = sweep.iter().map(|(_, c)| c).sum::<f64>() / count as f64;
    let mut profile_sum = 0.0;
    for (mode, _) in &sweep {
        profile_sum += asymptotic(field, mode.m as f64 / mode.l as f64)?;
    }
    let top = if surface == Surface::Rp2 && l_max % 2 == 0 {
        l_max - 1
    } else {
        l_max
    };
    let mut riemann = 0.0;
    for m in -top..=top {
        riemann += asymptotic(field, m as f64 / top as f64)?;
    }
    Ok(RicciDiagnostic {
        l_max,
        count,
        empirical_mean,
        profile_mean: profile_sum / count as f64,
        profile_riemann_sum: riemann / top as f64,
        profile_integral: profile_integral(field)?,
        analytic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_symmetry_and_zero() {
        assert_eq!(
            theta_rho_gamma(5, 3).unwrap(),
            theta_rho_gamma(5, -3).unwrap()
        );
        for (l, m) in [(3, 1), (7, 4), (10, 10)] {
            let (t, r, g) = theta_rho_gamma(l, m).unwrap();
            assert!(t >= 0.0 && r >= 0.0 && g >= 0.0 && t.is_finite());
        }
        assert!(theta_rho_gamma(2, 1).is_err());
    }

    #[test]
    fn e03_domain() {
        assert!(sectional_e03(2, 1).is_err());
        assert_eq!(sectional_e03(3, 0), Err(Error::DegeneratePlane));
        assert_eq!(sectional_e03(7, 0).unwrap(), 0.0);
        assert!(sectional_e03(4, 5).is_err());
        assert_eq!(sectional_e03(9, 4).unwrap(), sectional_e03(9, -4).unwrap());
    }

    #[test]
    fn e03_sign_structure() {
        for l in 3..=5 {
            assert!(sectional_e03(l, 1).unwrap() > 0.0);
        }
        assert!(sectional_e03(400, 1).unwrap().abs() < 1e-4);
    }

    #[test]
    fn e02_examples() {
        let v = sectional_e02(2, 2).unwrap();
        assert!((v + 15.0 / (28.0 * PI)).abs() < 1e-14);
        assert_eq!(sectional_e02(5, 0).unwrap(), 0.0);
        let v = sectional_e02(50, 50).unwrap();
        assert!((v / (-15.0 / (8.0 * PI)) - 1.0).abs() < 0.05);
        assert!(sectional_e02(1, 0).is_err());
    }

    #[test]
    fn e01_examples() {
        assert!((sectional_e01(1, 1).unwrap() - 3.0 / (32.0 * PI)).abs() < 1e-15);
        assert_eq!(sectional_e01(4, 0).unwrap(), 0.0);
        assert!(
            (sectional_e01(10, 10).unwrap() - 300.0 / (8.0 * PI * 100.0 * 121.0)).abs() < 1e-15
        );
    }

    #[test]
    fn profiles() {
        assert!((asymptotic_e03(4.0 / 7.0).unwrap() + 0.3749).abs() < 1e-4);
        assert!((asymptotic_e03((2.0f64 / 3.0).sqrt()).unwrap() - e03_infimum()).abs() < 1e-12);
        assert_eq!(asymptotic_e03(0.0).unwrap(), 0.0);
        assert_eq!(asymptotic_e03(1.0).unwrap(), 0.0);
        assert_eq!(asymptotic_e02(0.0).unwrap(), 0.0);
        assert!(asymptotic_e03(1.5).is_err());
        assert!(asymptotic_e02(-1.01).is_err());
    }

    #[test]
    fn ricci_constants() {
        assert_eq!(
            ricci_analytic_sphere(SphereField::E03, Surface::Sphere).unwrap(),
            -15.0 / (8.0 * PI)
        );
        assert_eq!(
            ricci_analytic_sphere(SphereField::E03, Surface::Rp2).unwrap(),
            -15.0 / (4.0 * 2.0 * PI)
        );
        assert_eq!(
            ricci_analytic_sphere(SphereField::E02, Surface::Sphere).unwrap(),
            -3.0 / (4.0 * PI)
        );
        assert!(matches!(
            ricci_analytic_sphere(SphereField::E02, Surface::Rp2),
            Err(Error::NotDefined(_))
        ));
    }

    #[test]
    fn sweep_counts() {
        let s = sphere_sweep(SphereField::E03, Surface::Sphere, 2, 10).unwrap();
        let expect: i64 = (3..=10).map(|l| 2 * l + 1).sum::<i64>() - 1;
        assert_eq!(s.len() as i64, expect);
        let r = sphere_sweep(SphereField::E03, Surface::Rp2, 0, 10).unwrap();
        assert!(r.iter().all(|(mode, _)| mode.in_rp2()));
    }

    #[test]
    fn numeric_diagnostic() {
        let d = ricci_numeric_estimate(SphereField::E03, Surface::Sphere, 200).unwrap();
        assert!(d.empirical_mean.is_finite() && d.profile_mean.is_finite());
        assert!((d.profile_riemann_sum - d.profile_integral).abs() < 1e-3);
        let r = ricci_numeric_estimate(SphereField::E03, Surface::Rp2, 201).unwrap();
        let s = ricci_numeric_estimate(SphereField::E03, Surface::Sphere, 201).unwrap();
        assert!((r.profile_mean - s.profile_mean).abs() < 0.01);
        assert!(ricci_numeric_estimate(SphereField::E03, Surface::Sphere, 4).is_err());
    }
}
