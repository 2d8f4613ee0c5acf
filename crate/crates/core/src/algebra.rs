//! Mode rules of the complexified Fourier algebra and their bilinear extensions.

use num_complex::Complex64;

use crate::error::Result;
use crate::mode::LatticeMode;
use crate::vector::FourierVector;

/// `{e_k, e_l} = (k×l) e_{k+l}`
pub fn bracket_coefficient(k: LatticeMode, l: LatticeMode) -> f64 {
    k.cross(l) as f64
}

/// `B(e_k, e_l) = (k×l) ‖k‖²/‖k+l‖² e_{k+l}`, zero when `k + l = 0`.
pub fn b_coefficient(k: LatticeMode, l: LatticeMode) -> f64 {
    let s = k + l;
    if s.is_zero() {
        return 0.0;
    }
    (k.cross(l) * k.norm2()) as f64 / s.norm2() as f64
}

/// `∇_{e_k} e_l = (k×l)(k·l + ‖l‖²)/‖k+l‖² e_{k+l}`, zero when `k + l = 0`.
pub fn nabla_coefficient(k: LatticeMode, l: LatticeMode) -> f64 {
    let s = k + l;
    if s.is_zero() {
        return 0.0;
    }
    (k.cross(l) * (k.dot(l) + l.norm2())) as f64 / s.norm2() as f64
}

fn bilinear(
    u: &FourierVector,
    v: &FourierVector,
    rule: impl Fn(LatticeMode, LatticeMode) -> f64,
) -> Result<FourierVector> {
    let area = u.same_area(v)?;
    let mut out = FourierVector::zero(area).with_drop_tolerance(u.drop_tolerance());
    for (k, a) in u.iter() {
        for (l, b) in v.iter() {
            let c = rule(k, l);
            if c != 0.0 {
                out.add_term(k + l, a * b * c);
            }
        }
    }
    Ok(out)
}

/// Complex-bilinear extension of `⟨e_k, e_l⟩ = ‖k‖² S_T δ_{k+l,0}`.
///
/// For real-valued operands this is the L² product and the result is real.
pub fn inner_product(u: &FourierVector, v: &FourierVector) -> Result<Complex64> {
    let area = u.same_area(v)?;
    Ok(u.iter()
        .map(|(k, a)| a * v.get(-k) * (k.norm2() as f64))
        .sum::<Complex64>()
        * area)
}

/// Hermitian product `Σ u_k conj(v_k) ‖k‖² S_T`; agrees with
/// [`inner_product`] on real-valued operands.
pub fn hermitian_product(u: &FourierVector, v: &FourierVector) -> Result<Complex64> {
    let area = u.same_area(v)?;
    Ok(u.iter()
        .map(|(k, a)| a * v.get(k).conj() * (k.norm2() as f64))
        .sum::<Complex64>()
        * area)
}

pub fn poisson_bracket(u: &FourierVector, v: &FourierVector) -> Result<FourierVector> {
    bilinear(u, v, bracket_coefficient)
}

pub fn b_operator(u: &FourierVector, v: &FourierVector) -> Result<FourierVector> {
    bilinear(u, v, b_coefficient)
}

pub fn covariant_derivative(u: &FourierVector, v: &FourierVector) -> Result<FourierVector> {
    bilinear(u, v, nabla_coefficient)
}

/// `R(u,v)w = -∇_u ∇_v w + ∇_v ∇_u w + ∇_{[u,v]} w`
pub fn curvature_operator(
    u: &FourierVector,
    v: &FourierVector,
    w: &FourierVector,
) -> Result<FourierVector> {
    let uvw = covariant_derivative(u, &covariant_derivative(v, w)?)?;
    let vuw = covariant_derivative(v, &covariant_derivative(u, w)?)?;
    let bw = covariant_derivative(&poisson_bracket(u, v)?, w)?;
    vuw.sub(&uvw)?.add(&bw)
}

/// `d_{uv} = (u×v)²/‖u+v‖`, defined as 0 when `u + v = 0`.
pub fn d_coefficient(u: LatticeMode, v: LatticeMode) -> f64 {
    let s = u + v;
    if s.is_zero() {
        return 0.0;
    }
    let c = u.cross(v) as f64;
    c * c / s.norm()
}

/// `R_{klmn} = (d_ln d_km - d_lm d_kn) S_T` if `k+l+m+n = 0`, else 0.
pub fn riemann_quadruple(
    k: LatticeMode,
    l: LatticeMode,
    m: LatticeMode,
    n: LatticeMode,
    area: f64,
) -> f64 {
    if !(k + l + m + n).is_zero() {
        return 0.0;
    }
    (d_coefficient(l, n) * d_coefficient(k, m) - d_coefficient(l, m) * d_coefficient(k, n)) * area
}
