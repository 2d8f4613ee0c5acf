use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mode::LatticeMode;

/// Area of the `2π × 2π` torus.
pub const DEFAULT_TORUS_AREA: f64 = 4.0 * PI * PI;

/// Relative tolerance used by the reality and Klein flags.
pub const FLAG_TOL: f64 = 1e-12;

/// Finite sparse combination `Σ b_l e_l` of torus modes, zero-mean.
///
/// Coefficients are kept in a `BTreeMap` so every iteration is in lattice
/// order and sums are reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierVector {
    coeffs: BTreeMap<LatticeMode, Complex64>,
    area: f64,
    drop_tol: f64,
}

pub(crate) fn check_area(area: f64) -> Result<f64> {
    if area.is_finite() && area > 0.0 {
        Ok(area)
    } else {
        Err(Error::InvalidArea(area))
    }
}

impl Default for FourierVector {
    fn default() -> Self {
        FourierVector::zero(DEFAULT_TORUS_AREA)
    }
}

impl FourierVector {
    /// Zero vector on a torus of the given area.
    ///
    /// Panics if `area` is not positive; use [`FourierVector::try_zero`] for
    /// untrusted input.
    pub fn zero(area: f64) -> Self {
        Self::try_zero(area).expect("torus area must be positive")
    }

    pub fn try_zero(area: f64) -> Result<Self> {
        Ok(FourierVector {
            coeffs: BTreeMap::new(),
            area: check_area(area)?,
            drop_tol: 0.0,
        })
    }

    /// Single mode `c · e_k`.
    pub fn mode(k: impl Into<LatticeMode>, c: Complex64, area: f64) -> Self {
        let mut v = FourierVector::zero(area);
        v.add_term(k.into(), c);
        v
    }

    pub fn from_terms<I, K>(terms: I, area: f64) -> Self
    where
        I: IntoIterator<Item = (K, Complex64)>,
        K: Into<LatticeMode>,
    {
        let mut v = FourierVector::zero(area);
        for (k, c) in terms {
            v.add_term(k.into(), c);
        }
        v
    }

    /// Coefficients with modulus at or below `tol` are discarded from now on.
    pub fn with_drop_tolerance(mut self, tol: f64) -> Self {
        self.drop_tol = tol.max(0.0);
        let t = self.drop_tol;
        self.coeffs.retain(|_, c| c.norm() > t);
        self
    }

    pub fn drop_tolerance(&self) -> f64 {
        self.drop_tol
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Accumulates `c` onto the coefficient of `e_k`. The mean mode is ignored.
    pub fn add_term(&mut self, k: LatticeMode, c: Complex64) {
        if k.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.norm() <= self.drop_tol {
            self.coeffs.remove(&k);
        }
    }

    pub fn get(&self, k: LatticeMode) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticeMode, Complex64)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    pub fn support(&self) -> impl Iterator<Item = LatticeMode> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn same_area(&self, other: &FourierVector) -> Result<f64> {
        if self.area == other.area {
            Ok(self.area)
        } else {
            Err(Error::AreaMismatch {
                left: self.area,
                right: other.area,
            })
        }
    }

    pub fn scale(&self, c: Complex64) -> FourierVector {
        let mut out = FourierVector {
            coeffs: BTreeMap::new(),
            area: self.area,
            drop_tol: self.drop_tol,
        };
        for (k, b) in self.iter() {
            out.add_term(k, b * c);
        }
        out
    }

    pub fn scale_real(&self, c: f64) -> FourierVector {
        self.scale(Complex64::new(c, 0.0))
    }

    /// `self + c · other`
    pub fn axpy(&self, c: Complex64, other: &FourierVector) -> Result<FourierVector> {
        self.same_area(other)?;
        let mut out = self.clone();
        for (k, b) in other.iter() {
            out.add_term(k, c * b);
        }
        Ok(out)
    }

    pub fn add(&self, other: &FourierVector) -> Result<FourierVector> {
        self.axpy(Complex64::new(1.0, 0.0), other)
    }

    pub fn sub(&self, other: &FourierVector) -> Result<FourierVector> {
        self.axpy(Complex64::new(-1.0, 0.0), other)
    }

    fn flag_tol(&self) -> f64 {
        FLAG_TOL * self.max_abs()
    }

    /// `b_{-l} = conj(b_l)` for every `l`.
    pub fn is_real_valued(&self) -> bool {
        let tol = self.flag_tol();
        self.iter()
            .all(|(k, b)| (self.get(-k) - b.conj()).norm() <= tol)
    }

    /// Real-valued and `b_{l̄} = (-1)^{l2+1} conj(b_l)` for every `l`.
    pub fn is_klein(&self) -> bool {
        let tol = self.flag_tol();
        self.is_real_valued()
            && self.iter().all(|(k, b)| {
                let s = if k.k2.rem_euclid(2) == 0 { -1.0 } else { 1.0 };
                (self.get(k.flip()) - b.conj() * s).norm() <= tol
            })
    }

    /// Point value `Σ b_l exp(i l·x)`.
    pub fn evaluate(&self, x1: f64, x2: f64) -> Complex64 {
        self.iter()
            .map(|(k, b)| b * Complex64::from_polar(1.0, k.k1 as f64 * x1 + k.k2 as f64 * x2))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mean_mode_and_zeros_dropped() {
        let mut v = FourierVector::default();
        v.add_term(LatticeMode::ZERO, c(1.0, 0.0));
        v.add_term(LatticeMode::new(1, 0), c(2.0, 0.0));
        v.add_term(LatticeMode::new(1, 0), c(-2.0, 0.0));
        assert!(v.is_empty());
    }

    #[test]
    fn drop_tolerance_applies() {
        let v = FourierVector::from_terms([((1, 0), c(1e-14, 0.0)), ((0, 1), c(1.0, 0.0))], 1.0)
            .with_drop_tolerance(1e-12);
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn flags() {
        let cos = FourierVector::from_terms([((0, 1), c(0.5, 0.0)), ((0, -1), c(0.5, 0.0))], 1.0);
        assert!(cos.is_real_valued());
        assert!(cos.is_klein());
        let cos2 = FourierVector::from_terms([((0, 2), c(0.5, 0.0)), ((0, -2), c(0.5, 0.0))], 1.0);
        assert!(cos2.is_real_valued());
        assert!(!cos2.is_klein());
        let half = FourierVector::mode((1, 1), c(1.0, 0.0), 1.0);
        assert!(!half.is_real_valued());
    }

    #[test]
    fn bad_area_rejected() {
        assert!(FourierVector::try_zero(0.0).is_err());
        assert!(FourierVector::try_zero(f64::NAN).is_err());
    }
}
