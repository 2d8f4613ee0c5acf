//! Associated Legendre functions and spherical harmonics without the Condon–Shortley phase.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree/order pair `(l, m)` with `|m| ≤ l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SphericalMode {
    pub l: i64,
    pub m: i64,
}

impl SphericalMode {
    pub fn new(l: i64, m: i64) -> Result<Self> {
        if l < 0 || m.abs() > l {
            return Err(Error::Domain(format!("invalid spherical mode ({l},{m})")));
        }
        Ok(SphericalMode { l, m })
    }

    /// Fields with odd `l` are the ones that descend to the projective plane.
    pub fn in_rp2(self) -> bool {
        self.l % 2 == 1
    }

    /// `l(l+1)`
    pub fn eigenvalue(self) -> f64 {
        (self.l * (self.l + 1)) as f64
    }
}

/// `P^m_l(z)` for `0 ≤ m ≤ l`, no `(-1)^m` factor.
pub fn legendre_p(l: i64, m: i64, z: f64) -> Result<f64> {
    if !(0..=l).contains(&m) {
        return Err(Error::Domain(format!(
            "legendre_p needs 0 <= m <= l, got ({l},{m})"
        )));
    }
    if !(-1.0..=1.0).contains(&z) {
        return Err(Error::Domain(format!(
            "legendre_p argument {z} outside [-1, 1]"
        )));
    }
    let s = (1.0 - z * z).sqrt();
    let mut pmm = 1.0;
    for i in 1..=m {
        pmm *= (2 * i - 1) as f64 * s;
    }
    if l == m {
        return Ok(pmm);
    }
    let mut prev = pmm;
    let mut cur = z * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = (z * (2 * ll - 1) as f64 * cur - (ll + m - 1) as f64 * prev) / (ll - m) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Normalized `sqrt((2l+1)/(4π) (l-m)!/(l+m)!) P^m_l(z)` for `m ≥ 0`, stable for large `l`.
fn normalized_legendre(l: i64, m: i64, z: f64) -> f64 {
    let s = (1.0 - z * z).max(0.0).sqrt();
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for i in 1..=m {
        pmm *= ((2 * i - 1) as f64 / (2 * i) as f64).sqrt() * s;
    }
    pmm *= ((2 * m + 1) as f64).sqrt();
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = z * ((2 * m + 3) as f64).sqrt() * pmm;
    for ll in (m + 2)..=l {
        let (lf, mf) = (ll as f64, m as f64);
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let b = (((lf - 1.0).powi(2) - mf * mf) / (4.0 * (lf - 1.0).powi(2) - 1.0)).sqrt();
        let next = a * (z * cur - b * prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `Y^m_l(θ, φ)`; negative orders satisfy `Y^{-m}_l = (-1)^m conj(Y^m_l)`.
pub fn evaluate_ylm(l: i64, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    SphericalMode::new(l, m)?;
    let am = m.abs();
    let y = Complex64::from_polar(normalized_legendre(l, am, theta.cos()), am as f64 * phi);
    if m >= 0 {
        Ok(y)
    } else if am % 2 == 0 {
        Ok(y.conj())
    } else {
        Ok(-y.conj())
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n <= 1 { 1.0 } else { p0 };
            dp = nf * (z * pn - pn1) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Largest deviation of the Gram matrix of `{Y^m_l : l ≤ l_max}` from the identity.
pub fn orthonormality_residual(l_max: i64) -> f64 {
    let nz = (l_max + 2) as usize;
    let nphi = (2 * l_max + 3) as usize;
    let (zs, ws) = gauss_legendre(nz);
    let modes: Vec<(i64, i64)> = (0..=l_max)
        .flat_map(|l| (-l..=l).map(move |m| (l, m)))
        .collect();
    let samples: Vec<Vec<Complex64>> = modes
        .iter()
        .map(|&(l, m)| {
            let mut row = Vec::with_capacity(nz * nphi);
            for &z in &zs {
                for j in 0..nphi {
                    let phi = TAU * j as f64 / nphi as f64;
                    row.push(evaluate_ylm(l, m, z.acos(), phi).unwrap());
                }
            }
            row
        })
        .collect();
    let dphi = TAU / nphi as f64;
    let mut worst: f64 = 0.0;
    for a in 0..modes.len() {
        for b in 0..=a {
            let mut acc = Complex64::new(0.0, 0.0);
            for (iz, w) in ws.iter().enumerate() {
                for j in 0..nphi {
                    let idx = iz * nphi + j;
                    acc += samples[a][idx] * samples[b][idx].conj() * (w * dphi);
                }
            }
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((acc - target).norm());
        }
    }
    worst
}

/// Largest `|Y(π-θ, π+φ) - (-1)^l Y(θ, φ)|` over an `n_theta × n_phi` grid, `l ≤ l_max`.
pub fn parity_residual(l_max: i64, n_theta: usize, n_phi: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for l in 0..=l_max {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        for m in -l..=l {
            for i in 0..n_theta {
                let theta = PI * (i as f64 + 0.5) / n_theta as f64;
                for j in 0..n_phi {
                    let phi = TAU * j as f64 / n_phi as f64;
                    let y = evaluate_ylm(l, m, theta, phi).unwrap();
                    let yi = evaluate_ylm(l, m, PI - theta, PI + phi).unwrap();
                    worst = worst.max((yi - y * sign).norm());
                }
            }
        }
    }
    worst
}
