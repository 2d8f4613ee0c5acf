//! Closed-form curvatures of the torus and Klein bottle groups.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::inner_product;
use crate::basis::{enumerate_basis, BasisKind, KleinBasisElement};
use crate::error::{Error, Result};
use crate::mode::LatticeMode;
use crate::vector::FourierVector;

/// Relative orthogonality tolerance for closed-form preconditions.
pub const ORTHO_TOL: f64 = 1e-9;

fn check_orthogonal(u: &FourierVector, v: &FourierVector) -> Result<()> {
    let uu = inner_product(u, u)?.re;
    let vv = inner_product(v, v)?.re;
    if !(uu > 0.0 && vv > 0.0) {
        return Err(Error::DegeneratePlane);
    }
    let r = inner_product(u, v)?.norm() / (uu * vv).sqrt();
    if r > 1.0 - ORTHO_TOL {
        return Err(Error::DegeneratePlane);
    }
    if r > ORTHO_TOL {
        return Err(Error::NotOrthogonal(r));
    }
    Ok(())
}

fn weighted_norm(eta: &FourierVector) -> f64 {
    eta.iter()
        .map(|(l, b)| b.norm_sqr() * l.norm2() as f64)
        .sum()
}

fn pow4(x: f64) -> f64 {
    let x2 = x * x;
    x2 * x2
}

/// Plane through `a e_k + ā e_{-k}` and `η`:
/// `-1/(2S‖k‖²) Σ_l (k×l)⁴/‖k+l‖² |a b_l + ā b_{2k+l}|²`, normalized.
fn single_pair(k: LatticeMode, a: Complex64, eta: &FourierVector) -> f64 {
    let area = eta.area();
    let candidates: BTreeSet<LatticeMode> =
        eta.support().flat_map(|l| [l, l - k.scale(2)]).collect();
    let mut sum = 0.0;
    for l in candidates {
        let s = k + l;
        let c = k.cross(l) as f64;
        if c == 0.0 || s.is_zero() {
            continue;
        }
        let w = a * eta.get(l) + a.conj() * eta.get(l + k.scale(2));
        sum += pow4(c) / s.norm2() as f64 * w.norm_sqr();
    }
    -sum / (2.0 * area * k.norm2() as f64) / (a.norm_sqr() * weighted_norm(eta))
}

/// Sectional curvature of the torus group in the plane of `ζ_k = cos(k·x)` and `η`.
pub fn sectional_torus(k: LatticeMode, eta: &FourierVector) -> Result<f64> {
    if k.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    if !eta.is_real_valued() {
        return Err(Error::NotRealValued);
    }
    let half = Complex64::new(0.5, 0.0);
    let zeta = FourierVector::from_terms([(k, half), (-k, half)], eta.area());
    check_orthogonal(&zeta, eta)?;
    Ok(single_pair(k, half, eta))
}

/// Sectional curvature of the Klein bottle group in the plane of `ξ_k` and `η`.
///
/// For `k1, k2 ≥ 1` this is the three-sum closed form. On the axes the four
/// modes of `ξ_k` coincide in pairs, so `ξ_k` is a single conjugate pair and the
/// torus form with the merged coefficient applies.
pub fn sectional_klein(xi: &KleinBasisElement, eta: &FourierVector) -> Result<f64> {
    if !eta.is_klein() {
        return Err(Error::NotKlein);
    }
    let area = eta.area();
    let xv = xi.to_fourier(area);
    if xv.is_empty() || eta.is_empty() {
        return Err(Error::DegeneratePlane);
    }
    check_orthogonal(&xv, eta)?;
    let k = xi.k;
    if k.k1 == 0 || k.k2 == 0 {
        return Ok(single_pair(k, xv.get(k), eta));
    }
    Ok(three_sum(k, xi.a, eta))
}

fn three_sum(k: LatticeMode, a: Complex64, eta: &FourierVector) -> f64 {
    let area = eta.area();
    let kb = k.flip();
    let nk = k.norm2() as f64;
    let aa = a * a;
    let a2 = a.norm_sqr();
    let candidates: BTreeSet<LatticeMode> =
        eta.support().flat_map(|l| [l, l - k.scale(2)]).collect();
    let mut s1 = 0.0;
    for l in candidates {
        let s = k + l;
        let c = k.cross(l) as f64;
        if c == 0.0 || s.is_zero() {
            continue;
        }
        let w = a * eta.get(l) + a.conj() * eta.get(l + k.scale(2));
        s1 += pow4(c) / s.norm2() as f64 * w.norm_sqr();
    }
    s1 *= -1.0 / (2.0 * area * nk);

    let (mut s2, mut s3) = (0.0, 0.0);
    for (l, b) in eta.iter() {
        let p1 = eta.get(-k + kb - l);
        let p2 = eta.get(-k - kb - l);
        let t1 = (aa * b * p1).re;
        let t2 = (b * p2).re * a2;
        let s = k + l;
        if !s.is_zero() {
            let c1 = kb.cross(s) as f64;
            let c2 = k.cross(l) as f64;
            s2 += c1 * c1 * c2 * c2 / s.norm2() as f64 * (t1 + t2);
        }
        s3 += (l.k1 * l.k1) as f64 * t1 + (l.k2 * l.k2) as f64 * t2;
    }
    let sign = if k.k2.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    s2 *= sign / (area * nk);
    let k12 = (k.k1 * k.k1) as f64 * (k.k2 * k.k2) as f64;
    s3 *= -sign * 4.0 * k12 / (area * nk);

    (s1 + s2 + s3) / (a2 * weighted_norm(eta))
}

fn admissible(k: LatticeMode) -> bool {
    BasisKind::ALL.into_iter().any(|kind| kind.admits(k))
}

/// Four-term formula for two basis elements whose indices differ in both coordinates.
pub fn sectional_klein_pair(k: LatticeMode, l: LatticeMode, area: f64) -> Result<f64> {
    for idx in [k, l] {
        if !admissible(idx) {
            return Err(Error::InvalidBasisIndex {
                kind: "any",
                index: idx,
            });
        }
    }
    if k.k1 == l.k1 || k.k2 == l.k2 {
        return Err(Error::PairHypothesis { k, l });
    }
    let mut sum = 0.0;
    for j in [l, l.flip()] {
        let c4 = pow4(k.cross(j) as f64);
        for s in [k + j, k - j] {
            if !s.is_zero() {
                sum += c4 / s.norm2() as f64;
            }
        }
    }
    Ok(-sum / (4.0 * area * k.norm2() as f64 * l.norm2() as f64))
}

/// Limit of the positive sequence `C(ξ_k, η_{(m,k2)})` as `m → ∞` (`k1 ≥ k2`; symmetric otherwise).
pub fn pos_sequence_limit(k: LatticeMode, area: f64) -> f64 {
    let (p, q) = if k.k1 >= k.k2 {
        (k.k1 as f64, k.k2 as f64)
    } else {
        (k.k2 as f64, k.k1 as f64)
    };
    q * q / (2.0 * k.norm2() as f64 * area) * (4.0 * p * p - 3.0 * q * q)
}

/// Element `η_{(m,k2)}` (or `η_{(k1,m)}` when `k1 < k2`) of the same reality as `ξ`.
pub fn pos_sequence_element(xi: &KleinBasisElement, m: i64) -> Result<KleinBasisElement> {
    let kind = xi
        .kind()
        .ok_or_else(|| Error::Domain("direction must be a basis element".into()))?;
    let k = xi.k;
    let idx = if k.k1 >= k.k2 {
        if m == k.k1 {
            return Err(Error::ParallelIndex(LatticeMode::new(m, k.k2)));
        }
        LatticeMode::new(m, k.k2)
    } else {
        if m == k.k2 {
            return Err(Error::ParallelIndex(LatticeMode::new(k.k1, m)));
        }
        LatticeMode::new(k.k1, m)
    };
    KleinBasisElement::new(BasisKind::for_index(kind.is_real(), idx), idx)
}

/// `-(‖k‖²/(2S)) (sin⁴(λ-κ) + sin⁴(λ+κ))`, `κ = atan2(k2, k1)`.
pub fn asymptotic_limit(k: LatticeMode, lambda: f64, area: f64) -> f64 {
    let kappa = k.angle();
    -(k.norm2() as f64) / (2.0 * area)
        * ((lambda - kappa).sin().powi(4) + (lambda + kappa).sin().powi(4))
}

/// `9‖k‖²/(2S) + 2 min(k1², k2²)/S`
pub fn curvature_bound(k: LatticeMode, area: f64) -> f64 {
    let m = (k.k1 * k.k1).min(k.k2 * k.k2) as f64;
    9.0 * k.norm2() as f64 / (2.0 * area) + 2.0 * m / area
}

/// `-3‖k‖²/(8S)`
pub fn ricci_analytic(k: LatticeMode, area: f64) -> f64 {
    -3.0 * k.norm2() as f64 / (8.0 * area)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RicciPartialSum {
    #[serde(rename = "R")]
    pub radius: f64,
    /// Basis elements averaged over; the element equal to the direction is left out.
    pub count: u64,
    pub value: f64,
}

/// `C(ξ, ℰ_l)` for every basis element with `‖l‖ ≤ R` other than `ξ` itself,
/// in enumeration order. Evaluated in parallel; the output order is fixed.
pub fn klein_sweep(
    xi: &KleinBasisElement,
    radius: f64,
    area: f64,
) -> Result<Vec<(BasisKind, KleinBasisElement, f64)>> {
    let kind = xi.kind();
    enumerate_basis(radius)
        .into_par_iter()
        .filter(|(ek, e)| !(Some(*ek) == kind && e.k == xi.k))
        .map(|(ek, e)| sectional_klein(xi, &e.to_fourier(area)).map(|c| (ek, e, c)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusKind {
    Cos,
    Sin,
}

impl TorusKind {
    pub fn name(self) -> &'static str {
        match self {
            TorusKind::Cos => "cos",
            TorusKind::Sin => "sin",
        }
    }
}

/// `cos(l·x)` or `sin(l·x)` as a Fourier vector.
pub fn torus_element(kind: TorusKind, l: LatticeMode, area: f64) -> FourierVector {
    let (a, b) = match kind {
        TorusKind::Cos => (Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)),
        TorusKind::Sin => (Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5)),
    };
    FourierVector::from_terms([(l, a), (-l, b)], area)
}

/// Real Fourier basis `{cos(l·x), sin(l·x)}` over the upper half plane, `‖l‖ ≤ R`.
pub fn torus_basis(radius: f64) -> Vec<(TorusKind, LatticeMode)> {
    let top = if radius >= 0.0 {
        radius.floor() as i64
    } else {
        -1
    };
    let r2 = radius * radius;
    let mut out = Vec::new();
    for l1 in -top..=top {
        for l2 in 0..=top {
            let l = LatticeMode::new(l1, l2);
            if (l2 == 0 && l1 <= 0) || l.norm2() as f64 > r2 {
                continue;
            }
            out.push((TorusKind::Cos, l));
            out.push((TorusKind::Sin, l));
        }
    }
    out.sort_by_key(|(kind, l)| (l.norm2(), l.k1, l.k2, *kind));
    out
}

/// `C(ζ_k, ·)` over [`torus_basis`], leaving out `ζ_k` itself.
pub fn torus_sweep(
    k: LatticeMode,
    radius: f64,
    area: f64,
) -> Result<Vec<(TorusKind, LatticeMode, f64)>> {
    torus_basis(radius)
        .into_par_iter()
        .filter(|(kind, l)| !(*kind == TorusKind::Cos && (*l == k || *l == -k)))
        .map(|(kind, l)| sectional_torus(k, &torus_element(kind, l, area)).map(|c| (kind, l, c)))
        .collect()
}

/// Averages of `C(ξ, ℰ_l)` over `‖l‖ ≤ R` for `R = step, 2·step, …, R_max`.
///
/// Sums run in enumeration order, so the result does not depend on the
/// thread count. A radius holding no elements reports `count = 0`, `value = 0`.
pub fn ricci_partial_sums(
    xi: &KleinBasisElement,
    r_max: f64,
    step: f64,
    area: f64,
) -> Result<Vec<RicciPartialSum>> {
    if !(step > 0.0 && r_max > 0.0) {
        return Err(Error::Domain("radius and step must be positive".into()));
    }
    if xi.kind().is_none() {
        return Err(Error::Domain("direction must be a basis element".into()));
    }
    let values = klein_sweep(xi, r_max, area)?;

    let mut radii = Vec::new();
    let mut i = 1u64;
    loop {
        let r = step * i as f64;
        if r > r_max * (1.0 + 1e-12) {
            break;
        }
        radii.push(r);
        i += 1;
    }
    if radii.last().is_none_or(|&r| r < r_max * (1.0 - 1e-12)) {
        radii.push(r_max);
    }

    let mut out = Vec::with_capacity(radii.len());
    let (mut sum, mut pos) = (0.0, 0usize);
    for r in radii {
        let r2 = r * r;
        while pos < values.len() && values[pos].1.k.norm2() as f64 <= r2 {
            sum += values[pos].2;
            pos += 1;
        }
        let value = if pos == 0 { 0.0 } else { sum / pos as f64 };
        out.push(RicciPartialSum {
            radius: r,
            count: pos as u64,
            value,
        });
    }
    Ok(out)
}

/// Mean of `(4 cos2λ cos2κ - cos4λ cos4κ)/8` over the directions `λ` of
/// `enumerate_basis(R)`, in units of `‖k‖²/S`.
pub fn f_lambda_average(kappa: f64, radius: f64) -> f64 {
    let basis = enumerate_basis(radius);
    if basis.is_empty() {
        return 0.0;
    }
    let (c2, c4) = ((2.0 * kappa).cos(), (4.0 * kappa).cos());
    let sum: f64 = basis
        .iter()
        .map(|(_, e)| {
            let lam = e.k.angle();
            (4.0 * (2.0 * lam).cos() * c2 - (4.0 * lam).cos() * c4) / 8.0
        })
        .sum();
    sum / basis.len() as f64
}
