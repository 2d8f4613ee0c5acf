//! Brute-force sectional curvature on finite supports.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    b_operator, curvature_operator, inner_product, poisson_bracket, riemann_quadruple,
};
use crate::error::{Error, Result};
use crate::vector::FourierVector;

/// Relative threshold on the Gram determinant below which a plane counts as degenerate.
pub const DEGENERATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMethod {
    /// Quadruple sum of Riemann tensor components over all support modes.
    Tensor,
    /// `⟨δ,δ⟩ + 2⟨α,β⟩ - 3⟨α,α⟩ - 4⟨B_u,B_v⟩` on an orthonormalized pair.
    ShortFormula,
    /// `⟨R(u,v)u, v⟩` with `R` assembled from covariant derivatives.
    Connection,
}

/// `⟨R(u,v)u, v⟩ = Σ u_k v_l u_m v_n R_{klmn}`.
pub fn curvature_form(u: &FourierVector, v: &FourierVector) -> Result<Complex64> {
    let area = u.same_area(v)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, a) in u.iter() {
        for (l, b) in v.iter() {
            for (m, c) in u.iter() {
                let n = -(k + l + m);
                let d = v.get(n);
                if d.norm() == 0.0 {
                    continue;
                }
                let r = riemann_quadruple(k, l, m, n, area);
                if r != 0.0 {
                    acc += a * b * c * d * r;
                }
            }
        }
    }
    Ok(acc)
}

fn gram(u: &FourierVector, v: &FourierVector) -> Result<(f64, f64, f64)> {
    if !u.is_real_valued() || !v.is_real_valued() {
        return Err(Error::NotRealValued);
    }
    let uu = inner_product(u, u)?.re;
    let vv = inner_product(v, v)?.re;
    let uv = inner_product(u, v)?.re;
    let den = uu * vv - uv * uv;
    if !(uu > 0.0 && vv > 0.0) || den <= DEGENERATE_TOL * uu * vv {
        return Err(Error::DegeneratePlane);
    }
    Ok((uu, uv, den))
}

pub fn sectional_curvature_oracle(
    u: &FourierVector,
    v: &FourierVector,
    method: OracleMethod,
) -> Result<f64> {
    let (uu, uv, den) = gram(u, v)?;
    match method {
        OracleMethod::Tensor => Ok(curvature_form(u, v)?.re / den),
        OracleMethod::Connection => {
            let r = curvature_operator(u, v, u)?;
            Ok(inner_product(&r, v)?.re / den)
        }
        OracleMethod::ShortFormula => {
            let e1 = u.scale_real(1.0 / uu.sqrt());
            let w = v.axpy(Complex64::new(-uv / uu, 0.0), u)?;
            let ww = inner_product(&w, &w)?.re;
            let e2 = w.scale_real(1.0 / ww.sqrt());
            Ok(short_formula(&e1, &e2)?)
        }
    }
}

/// Short formula on an orthonormal pair.
pub fn short_formula(u: &FourierVector, v: &FourierVector) -> Result<f64> {
    let buv = b_operator(u, v)?;
    let bvu = b_operator(v, u)?;
    let delta = buv.add(&bvu)?.scale_real(0.5);
    let beta = buv.sub(&bvu)?.scale_real(0.5);
    let alpha = poisson_bracket(u, v)?.scale_real(0.5);
    let bu = b_operator(u, u)?.scale_real(0.5);
    let bv = b_operator(v, v)?.scale_real(0.5);
    let ip = |x: &FourierVector, y: &FourierVector| inner_product(x, y).map(|c| c.re);
    Ok(ip(&delta, &delta)? + 2.0 * ip(&alpha, &beta)?
        - 3.0 * ip(&alpha, &alpha)?
        - 4.0 * ip(&bu, &bv)?)
}
