use std::f64::consts::PI;

use proptest::prelude::*;
use sdiff_core::weather::{self, WeatherScenario};
use sdiff_core::{
    alpha, asymptotic_e02, asymptotic_e03, curvature_bound, digits_per_month, pos_sequence_element,
    preset, sectional_e02, sectional_e03, sectional_klein, sectional_klein_pair, BasisKind,
    KleinBasisElement, LatticeMode, Rescale, DEFAULT_TORUS_AREA as S,
};

fn basis_strategy(radius: i64) -> impl Strategy<Value = KleinBasisElement> {
    (0..=radius, 0..=radius, 0usize..4).prop_filter_map(
        "outside the index sets",
        move |(a, b, i)| {
            let k = LatticeMode::new(a, b);
            if k.norm2() > radius * radius {
                return None;
            }
            KleinBasisElement::new(BasisKind::ALL[i], k).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pair_formula_negative_and_bounded(xi in basis_strategy(30), eta in basis_strategy(30)) {
        let (k, l) = (xi.k, eta.k);
        prop_assume!(k.k1 != l.k1 && k.k2 != l.k2);
        let c = sectional_klein_pair(k, l, S).unwrap();
        let lower = -(k.norm2().min(l.norm2()) as f64) / S;
        prop_assert!(c < 0.0);
        prop_assert!(c >= lower * (1.0 + 1e-12), "{} < {}", c, lower);
    }

    #[test]
    fn lemma_bound_dominates(xi in basis_strategy(20), eta in basis_strategy(20)) {
        prop_assume!(!(xi.k == eta.k && xi.kind() == eta.kind()));
        let c = sectional_klein(&xi, &eta.to_fourier(S)).unwrap();
        prop_assert!(c.abs() <= curvature_bound(xi.k, S) * (1.0 + 1e-12));
    }

    #[test]
    fn sphere_depends_on_m_squared(l in 3i64..60, m in 0i64..60) {
        prop_assume!(m <= l);
        prop_assert_eq!(sectional_e03(l, m).ok(), sectional_e03(l, -m).ok());
        prop_assert_eq!(sectional_e02(l, m).ok(), sectional_e02(l, -m).ok());
    }

    #[test]
    fn alpha_invariant_under_metric_scaling(c in 1e-3f64..1e3, name in 0usize..6) {
        let s = preset(weather::PRESET_NAMES[name], Rescale::Equator).unwrap();
        let scaled = WeatherScenario { norm_v: s.norm_v * c, ricci: s.ricci / (c * c), ..s.clone() };
        let (a, b) = (alpha(&s).unwrap(), alpha(&scaled).unwrap());
        prop_assert!((a - b).abs() <= 1e-12 * a);
        let (ka, kb) = (digits_per_month(&s).unwrap(), digits_per_month(&scaled).unwrap());
        prop_assert!((ka - kb).abs() <= 1e-12 * ka);
    }
}

#[test]
fn table_one_sequence_increases_past_25() {
    let xi = KleinBasisElement::new(BasisKind::SinSin, (20, 10)).unwrap();
    let mut prev = f64::NEG_INFINITY;
    for m in 25..=1000 {
        let eta = pos_sequence_element(&xi, m).unwrap();
        let c = sectional_klein(&xi, &eta.to_fourier(S)).unwrap();
        assert!(c > prev, "m = {m}: {c} <= {prev}");
        prev = c;
    }
}

#[test]
fn e03_positive_only_at_m_one() {
    for l in 3..=5 {
        assert!(sectional_e03(l, 1).unwrap() > 0.0);
    }
    let tail: Vec<f64> = [20, 80, 320]
        .iter()
        .map(|&l| sectional_e03(l, 1).unwrap().abs())
        .collect();
    assert!(tail[0] > tail[1] && tail[1] > tail[2] && tail[2] < 1e-4);
    for l in 3..=40 {
        for m in 2..=l {
            assert!(sectional_e03(l, m).unwrap() < 0.0, "({l},{m})");
        }
    }
}

#[test]
fn sphere_profiles_are_approached() {
    for q in [0.3, 0.57, 0.8] {
        let e3: Vec<f64> = [20, 40, 80, 160, 320]
            .iter()
            .map(|&l| {
                let m = (q * l as f64).round() as i64;
                (sectional_e03(l, m).unwrap() - asymptotic_e03(m as f64 / l as f64).unwrap()).abs()
            })
            .collect();
        let e2: Vec<f64> = [20, 40, 80, 160, 320]
            .iter()
            .map(|&l| {
                let m = (q * l as f64).round() as i64;
                (sectional_e02(l, m).unwrap() - asymptotic_e02(m as f64 / l as f64).unwrap()).abs()
            })
            .collect();
        for w in e3.windows(2).chain(e2.windows(2)) {
            assert!(w[1] < w[0], "q = {q}: {e3:?} {e2:?}");
        }
    }
}

#[test]
fn e03_never_below_infimum() {
    let inf = -175.0 / (72.0 * PI);
    for l in 3..=100 {
        for m in -l..=l {
            if (l, m) != (3, 0) {
                assert!(sectional_e03(l, m).unwrap() >= inf - 1e-6);
            }
        }
    }
}

#[test]
fn area_rescaling_separates_covers_by_sqrt2() {
    let k = |n| digits_per_month(&preset(n, Rescale::Area).unwrap()).unwrap();
    assert!((k("torus") / k("klein") - 2f64.sqrt()).abs() < 1e-9);
    assert!((k("sphere_e03") / k("rp2") - 2f64.sqrt()).abs() < 1e-9);
}
