//! Anti-invariant stream functions on the torus cover of the Klein bottle.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mode::LatticeMode;
use crate::vector::FourierVector;

/// `I(x1, x2) = (2π - x1, π + x2)`, reduced to `[0, 2π)²`.
pub fn involution_klein(x1: f64, x2: f64) -> (f64, f64) {
    ((TAU - x1).rem_euclid(TAU), (PI + x2).rem_euclid(TAU))
}

/// The four trigonometric families of the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    /// `4 cos(k1 x1) cos(k2 x2)`, `k2` odd
    CosCos,
    /// `4 cos(k1 x1) sin(k2 x2)`, `k2` odd
    CosSin,
    /// `±4 sin(k1 x1) sin(k2 x2)`, `k2` even, `k1, k2 ≥ 1`
    SinSin,
    /// `4 sin(k1 x1) cos(k2 x2)`, `k2` even, `k1 ≥ 1`
    SinCos,
}

impl BasisKind {
    pub const ALL: [BasisKind; 4] = [
        BasisKind::CosCos,
        BasisKind::CosSin,
        BasisKind::SinSin,
        BasisKind::SinCos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::CosCos => "cos_cos",
            BasisKind::CosSin => "cos_sin",
            BasisKind::SinSin => "sin_sin",
            BasisKind::SinCos => "sin_cos",
        }
    }

    /// Coefficient `a_k` of `e_k`: 1 for the real families, `-i` for the imaginary ones.
    pub fn coefficient(self) -> Complex64 {
        if self.is_real() {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, BasisKind::CosCos | BasisKind::SinSin)
    }

    fn odd_k2(self) -> bool {
        matches!(self, BasisKind::CosCos | BasisKind::CosSin)
    }

    /// Family with the given reality and the parity of `k2`.
    pub fn for_index(real: bool, k: LatticeMode) -> BasisKind {
        match (real, k.k2.rem_euclid(2) == 1) {
            (true, true) => BasisKind::CosCos,
            (false, true) => BasisKind::CosSin,
            (true, false) => BasisKind::SinSin,
            (false, false) => BasisKind::SinCos,
        }
    }

    pub fn admits(self, k: LatticeMode) -> bool {
        if k.k1 < 0 || k.k2 < 0 || k.is_zero() {
            return false;
        }
        if (k.k2.rem_euclid(2) == 1) != self.odd_k2() {
            return false;
        }
        let in_re = k.k2 != 0 && !(k.k1 == 0 && k.k2 % 2 == 0);
        let in_im = !(k.k1 == 0 && k.k2 % 2 == 0);
        if self.is_real() {
            in_re
        } else {
            in_im
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Domain(format!("unknown basis kind '{s}'")))
    }
}

/// Compressed element `ξ_k = a e_k + ā e_{-k} + s ā e_{k̄} + s a e_{-k̄}`, `s = (-1)^{k2+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KleinBasisElement {
    pub k: LatticeMode,
    pub a: Complex64,
}

impl KleinBasisElement {
    /// Basis element of the given family; fails outside the index sets.
    pub fn new(kind: BasisKind, k: impl Into<LatticeMode>) -> Result<Self> {
        let k = k.into();
        if !kind.admits(k) {
            return Err(Error::InvalidBasisIndex {
                kind: kind.name(),
                index: k,
            });
        }
        Ok(KleinBasisElement {
            k,
            a: kind.coefficient(),
        })
    }

    /// Element with an arbitrary coefficient; `k` must lie in `ℕ₀² \ {0}`.
    pub fn general(k: impl Into<LatticeMode>, a: Complex64) -> Result<Self> {
        let k = k.into();
        if k.k1 < 0 || k.k2 < 0 || k.is_zero() {
            return Err(Error::Domain(format!(
                "index {k} not in the first quadrant"
            )));
        }
        Ok(KleinBasisElement { k, a })
    }

    /// Family if `a_k` is purely real or purely imaginary.
    pub fn kind(&self) -> Option<BasisKind> {
        let kind = if self.a.im == 0.0 {
            BasisKind::for_index(true, self.k)
        } else if self.a.re == 0.0 {
            BasisKind::for_index(false, self.k)
        } else {
            return None;
        };
        kind.admits(self.k).then_some(kind)
    }

    pub fn sign(&self) -> f64 {
        if self.k.k2.rem_euclid(2) == 1 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn to_fourier(&self, area: f64) -> FourierVector {
        let (k, a, s) = (self.k, self.a, self.sign());
        FourierVector::from_terms(
            [
                (k, a),
                (-k, a.conj()),
                (k.flip(), a.conj() * s),
                (-k.flip(), a * s),
            ],
            area,
        )
    }
}

/// `FourierVector` of the basis element `(kind, k)`.
pub fn basis_element(
    kind: BasisKind,
    k: impl Into<LatticeMode>,
    area: f64,
) -> Result<FourierVector> {
    Ok(KleinBasisElement::new(kind, k)?.to_fourier(area))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexSets {
    pub radius: f64,
    pub members_re: Vec<LatticeMode>,
    pub members_im: Vec<LatticeMode>,
}

fn quarter_disk(radius: f64) -> Vec<LatticeMode> {
    let r2 = radius * radius;
    let top = if radius >= 0.0 {
        radius.floor() as i64
    } else {
        -1
    };
    let mut out = Vec::new();
    for x in 0..=top {
        for y in 0..=top {
            if ((x * x + y * y) as f64) <= r2 {
                out.push(LatticeMode::new(x, y));
            }
        }
    }
    out
}

impl IndexSets {
    pub fn new(radius: f64) -> Self {
        let pts = quarter_disk(radius);
        let members_re = pts
            .iter()
            .copied()
            .filter(|&k| BasisKind::for_index(true, k).admits(k))
            .collect();
        let members_im = pts
            .iter()
            .copied()
            .filter(|&k| BasisKind::for_index(false, k).admits(k))
            .collect();
        IndexSets {
            radius,
            members_re,
            members_im,
        }
    }
}

/// Lattice points of `ℕ₀²` in the closed disk of radius `R`.
pub fn lattice_count(radius: f64) -> u64 {
    if radius < 0.0 {
        return 0;
    }
    let r2 = radius * radius;
    let top = radius.floor() as i64;
    (0..=top)
        .map(|x| {
            let mut y = ((r2 - (x * x) as f64).max(0.0)).sqrt().floor() as i64;
            while ((x * x + (y + 1) * (y + 1)) as f64) <= r2 {
                y += 1;
            }
            while y >= 0 && ((x * x + y * y) as f64) > r2 {
                y -= 1;
            }
            (y + 1) as u64
        })
        .sum()
}

/// `|𝓑_R| = 2(A(R) - ⌊R/2⌋ - 1) - ⌊R⌋`
pub fn count_basis(radius: f64) -> u64 {
    if radius < 1.0 {
        return 0;
    }
    let a = lattice_count(radius);
    let half = (radius / 2.0).floor() as u64;
    let whole = radius.floor() as u64;
    2 * (a - half - 1) - whole
}

/// All basis elements with `‖l‖ ≤ R`, ordered by `‖l‖²` then `(l1, l2, kind)`.
pub fn enumerate_basis(radius: f64) -> Vec<(BasisKind, KleinBasisElement)> {
    let mut out: Vec<(BasisKind, KleinBasisElement)> = quarter_disk(radius)
        .into_iter()
        .flat_map(|k| {
            BasisKind::ALL
                .into_iter()
                .filter_map(move |kind| KleinBasisElement::new(kind, k).ok().map(|e| (kind, e)))
        })
        .collect();
    out.sort_by_key(|(kind, e)| (e.k.norm2(), e.k.k1, e.k.k2, *kind));
    out
}

/// `max |f(I(x)) + f(x)|` over a `samples × samples` grid of `[0, 2π)²`.
pub fn anti_invariance_check(f: &FourierVector, samples: usize) -> Result<f64> {
    if !f.is_real_valued() {
        return Err(Error::NotRealValued);
    }
    let h = TAU / samples as f64;
    let mut worst: f64 = 0.0;
    for i in 0..samples {
        for j in 0..samples {
            let (x1, x2) = (i as f64 * h, j as f64 * h);
            let (y1, y2) = involution_klein(x1, x2);
            worst = worst.max((f.evaluate(y1, y2) + f.evaluate(x1, x2)).norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inner_product, poisson_bracket};
    use crate::vector::DEFAULT_TORUS_AREA as S;
    use proptest::prelude::*;

    fn m(a: i64, b: i64) -> LatticeMode {
        LatticeMode::new(a, b)
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        let d = |x: f64, y: f64| {
            let t = (x - y).rem_euclid(TAU);
            t.min(TAU - t)
        };
        d(a.0, b.0) < 1e-12 && d(a.1, b.1) < 1e-12
    }

    #[test]
    fn involution_examples() {
        assert!(close(involution_klein(0.0, 0.0), (0.0, PI)));
        assert!(close(involution_klein(PI, PI / 2.0), (PI, 1.5 * PI)));
        let (a, b) = involution_klein(1.0, 2.0);
        assert!(close(involution_klein(a, b), (1.0, 2.0)));
    }

    #[test]
    fn cos_cos_modes() {
        let v = basis_element(BasisKind::CosCos, (1, 1), S).unwrap();
        assert_eq!(v.len(), 4);
        for k in [m(1, 1), m(-1, -1), m(1, -1), m(-1, 1)] {
            assert_eq!(v.get(k), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn trade_wind() {
        let v = basis_element(BasisKind::CosSin, (0, 1), S).unwrap();
        for &x2 in &[0.3, 1.1, 2.9] {
            let f = v.evaluate(0.7, x2);
            assert!((f.re - 4.0 * f64::sin(x2)).abs() < 1e-12 && f.im.abs() < 1e-12);
        }
    }

    #[test]
    fn parity_mismatch_rejected() {
        assert!(matches!(
            basis_element(BasisKind::CosCos, (1, 2), S),
            Err(Error::InvalidBasisIndex { .. })
        ));
        assert!(basis_element(BasisKind::SinSin, (0, 2), S).is_err());
        assert!(basis_element(BasisKind::SinSin, (3, 0), S).is_err());
        assert!(basis_element(BasisKind::SinCos, (3, 0), S).is_ok());
        assert!(basis_element(BasisKind::SinCos, (0, 4), S).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_basis(1.0), 3);
        assert_eq!(count_basis(2.0), 6);
        let b = enumerate_basis(1.0);
        let idx: Vec<_> = b.iter().map(|(_, e)| e.k).collect();
        assert_eq!(idx, vec![m(0, 1), m(0, 1), m(1, 0)]);
        let r = 100.0;
        let ratio = count_basis(r) as f64 / (PI / 2.0 * r * r);
        assert!((ratio - 1.0).abs() < 0.05);
    }

    #[test]
    fn counting_matches_enumeration() {
        for r in 1..=60 {
            let r = r as f64;
            assert_eq!(count_basis(r), enumerate_basis(r).len() as u64, "R={r}");
            let sets = IndexSets::new(r);
            assert_eq!(
                count_basis(r),
                (sets.members_re.len() + sets.members_im.len()) as u64
            );
        }
        for r in [1.5, 2.3, 7.99, 10.01] {
            assert_eq!(count_basis(r), enumerate_basis(r).len() as u64, "R={r}");
        }
    }

    #[test]
    fn index_sets_exclusions() {
        let s = IndexSets::new(6.0);
        assert!(s
            .members_re
            .iter()
            .all(|k| k.k2 != 0 && !(k.k1 == 0 && k.k2 % 2 == 0)));
        assert!(s.members_im.iter().all(|k| !(k.k1 == 0 && k.k2 % 2 == 0)));
        assert!(s.members_im.contains(&m(4, 0)));
    }

    #[test]
    fn enumeration_ordered_and_klein() {
        let b = enumerate_basis(6.0);
        for w in b.windows(2) {
            assert!(w[0].1.k.norm2() <= w[1].1.k.norm2());
        }
        for (kind, e) in &b {
            assert_eq!(e.kind(), Some(*kind));
            assert!(e.to_fourier(S).is_klein());
        }
    }

    #[test]
    fn orthogonal_up_to_radius_five() {
        let b: Vec<_> = enumerate_basis(5.0)
            .iter()
            .map(|(_, e)| e.to_fourier(S))
            .collect();
        for i in 0..b.len() {
            assert!(inner_product(&b[i], &b[i]).unwrap().re > 0.0);
            for j in 0..i {
                assert!(
                    inner_product(&b[i], &b[j]).unwrap().norm() < 1e-9,
                    "{i} {j}"
                );
            }
        }
    }

    #[test]
    fn anti_invariance() {
        for (_, e) in enumerate_basis(5.0) {
            let r = anti_invariance_check(&e.to_fourier(S), 64).unwrap();
            assert!(r < 1e-12, "{:?}: {r}", e);
        }
        let g = KleinBasisElement::general((2, 3), Complex64::new(1.0, 1.0)).unwrap();
        assert!(anti_invariance_check(&g.to_fourier(S), 64).unwrap() < 1e-12);
        let cos2 = FourierVector::from_terms(
            [
                ((0, 2), Complex64::new(0.5, 0.0)),
                ((0, -2), Complex64::new(0.5, 0.0)),
            ],
            S,
        );
        let r = anti_invariance_check(&cos2, 64).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bracket_of_two_elements_is_klein() {
        let a = basis_element(BasisKind::CosCos, (1, 1), S).unwrap();
        let b = basis_element(BasisKind::CosCos, (2, 1), S).unwrap();
        assert!(poisson_bracket(&a, &b).unwrap().is_klein());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn bracket_closure(i in 0usize..10_000, j in 0usize..10_000) {
            let b = enumerate_basis(6.0);
            let u = b[i % b.len()].1.to_fourier(S);
            let v = b[j % b.len()].1.to_fourier(S);
            prop_assert!(poisson_bracket(&u, &v).unwrap().is_klein());
        }

        #[test]
        fn general_elements_are_klein(k1 in 0i64..8, k2 in 0i64..8, re in -2.0f64..2.0, im in -2.0f64..2.0) {
            prop_assume!(k1 + k2 > 0);
            let e = KleinBasisElement::general((k1, k2), Complex64::new(re, im)).unwrap();
            prop_assert!(e.to_fourier(S).is_klein());
        }
    }
}
