use proptest::prelude::*;
use sdiff_core::klein::{torus_basis, torus_element};
use sdiff_core::{
    enumerate_basis, sectional_curvature_oracle, sectional_klein, sectional_klein_pair,
    sectional_torus, Complex64, FourierVector, LatticeMode, OracleMethod, DEFAULT_TORUS_AREA as S,
};

fn agree(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()) + 1e-15
}

#[test]
fn klein_closed_form_against_both_oracles() {
    let basis = enumerate_basis(6.0);
    let vecs: Vec<FourierVector> = basis.iter().map(|(_, e)| e.to_fourier(S)).collect();
    let mut planes = 0;
    for (i, (_, xi)) in basis.iter().enumerate() {
        for (j, eta) in vecs.iter().enumerate() {
            if i == j {
                continue;
            }
            let c = sectional_klein(xi, eta).unwrap();
            let t = sectional_curvature_oracle(&vecs[i], eta, OracleMethod::Tensor).unwrap();
            let s = sectional_curvature_oracle(&vecs[i], eta, OracleMethod::ShortFormula).unwrap();
            assert!(
                agree(c, t, 1e-9),
                "{:?} {:?}: closed {c} tensor {t}",
                xi,
                basis[j].1
            );
            assert!(
                agree(t, s, 1e-9),
                "{:?} {:?}: tensor {t} short {s}",
                xi,
                basis[j].1
            );
            planes += 1;
        }
    }
    assert!(planes > 2000);
}

#[test]
fn connection_route_matches_tensor() {
    let basis = enumerate_basis(4.0);
    let vecs: Vec<FourierVector> = basis.iter().map(|(_, e)| e.to_fourier(S)).collect();
    for i in 0..vecs.len() {
        for j in 0..vecs.len() {
            if i == j {
                continue;
            }
            let t = sectional_curvature_oracle(&vecs[i], &vecs[j], OracleMethod::Tensor).unwrap();
            let n =
                sectional_curvature_oracle(&vecs[i], &vecs[j], OracleMethod::Connection).unwrap();
            assert!(agree(t, n, 1e-9), "{i} {j}: {t} {n}");
        }
    }
}

#[test]
fn pair_formula_matches_closed_form() {
    let basis = enumerate_basis(7.0);
    for (_, xi) in &basis {
        for (_, eta) in &basis {
            if xi.k.k1 == eta.k.k1 || xi.k.k2 == eta.k.k2 {
                continue;
            }
            let p = sectional_klein_pair(xi.k, eta.k, S).unwrap();
            let c = sectional_klein(xi, &eta.to_fourier(S)).unwrap();
            assert!(agree(p, c, 1e-9), "{:?} {:?}: {p} {c}", xi, eta);
        }
    }
}

#[test]
fn torus_closed_form_against_oracle() {
    let basis = torus_basis(5.0);
    for &(kk, k) in &basis {
        if kk != sdiff_core::TorusKind::Cos {
            continue;
        }
        let zeta = torus_element(kk, k, S);
        for &(lk, l) in &basis {
            if lk == kk && l == k {
                continue;
            }
            let eta = torus_element(lk, l, S);
            let c = sectional_torus(k, &eta).unwrap();
            let t = sectional_curvature_oracle(&zeta, &eta, OracleMethod::Tensor).unwrap();
            assert!(c <= 0.0);
            assert!(agree(c, t, 1e-9), "{k} {lk:?}{l}: {c} {t}");
        }
    }
}

fn random_real(terms: &[(i64, i64, f64, f64)]) -> FourierVector {
    let mut v = FourierVector::zero(S);
    for &(a, b, re, im) in terms {
        let c = Complex64::new(re, im);
        v.add_term(LatticeMode::new(a, b), c);
        v.add_term(LatticeMode::new(-a, -b), c.conj());
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torus_random_eta(terms in proptest::collection::vec((-5i64..=5, -5i64..=5, -1.0f64..1.0, -1.0f64..1.0), 1..6)) {
        let k = LatticeMode::new(1, 2);
        // remove the ζ_k component so η is orthogonal to cos(k·x)
        let mut eta = random_real(&terms);
        let b = eta.get(k);
        eta.add_term(k, Complex64::new(-b.re, 0.0));
        eta.add_term(-k, Complex64::new(-b.re, 0.0));
        prop_assume!(!eta.is_empty());
        let zeta = torus_element(sdiff_core::TorusKind::Cos, k, S);
        let t = sectional_curvature_oracle(&zeta, &eta, OracleMethod::Tensor);
        prop_assume!(t.is_ok());
        let c = sectional_torus(k, &eta).unwrap();
        prop_assert!(c <= 0.0);
        prop_assert!(agree(c, t.unwrap(), 1e-9));
    }

    #[test]
    fn klein_random_eta(
        xi_idx in 0usize..200,
        picks in proptest::collection::vec((0usize..200, -1.0f64..1.0), 1..5),
    ) {
        let basis = enumerate_basis(6.0);
        let xi = basis[xi_idx % basis.len()].1;
        let mut eta = FourierVector::zero(S);
        for (i, w) in picks {
            let i = i % basis.len();
            if basis[i].1.k == xi.k && basis[i].0 == basis[xi_idx % basis.len()].0 {
                continue;
            }
            eta = eta.axpy(Complex64::new(w, 0.0), &basis[i].1.to_fourier(S)).unwrap();
        }
        prop_assume!(eta.max_abs() > 1e-6);
        let c = sectional_klein(&xi, &eta).unwrap();
        let t = sectional_curvature_oracle(&xi.to_fourier(S), &eta, OracleMethod::Tensor).unwrap();
        prop_assert!(agree(c, t, 1e-9), "{} {}", c, t);
    }
}
