//! The sphere closed forms against an independent expansion for zonal directions.
//!
//! For `u = e⁰_n` and `v = e^m_l` the bracket and `B` terms reduce to
//! multiplication of `Y^m_l` by polynomials in `z = cos θ`, which is expanded
//! exactly with the three-term recurrence `z Y_l = A_l Y_{l+1} + A_{l-1} Y_{l-1}`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use sdiff_core::{sectional_e01, sectional_e02, sectional_e03};

fn a_coef(l: i64, m: i64) -> f64 {
    if l < m.abs() {
        return 0.0;
    }
    let (lf, mf) = (l as f64, m as f64);
    (((lf + 1.0).powi(2) - mf * mf) / ((2.0 * lf + 1.0) * (2.0 * lf + 3.0))).sqrt()
}

fn mul_z(v: &BTreeMap<i64, f64>, m: i64) -> BTreeMap<i64, f64> {
    let mut out = BTreeMap::new();
    for (&l, &c) in v {
        *out.entry(l + 1).or_insert(0.0) += a_coef(l, m) * c;
        if l > m.abs() {
            *out.entry(l - 1).or_insert(0.0) += a_coef(l - 1, m) * c;
        }
    }
    out
}

/// `C(e⁰_n, e^m_l)` where `dY⁰_n/dz = Σ poly[p] z^p`.
fn zonal_oracle(n: i64, poly: &[f64], l: i64, m: i64) -> f64 {
    let lu = (n * (n + 1)) as f64;
    let lv = (l * (l + 1)) as f64;
    let mut cur = BTreeMap::from([(l, 1.0)]);
    let mut res: BTreeMap<i64, f64> = BTreeMap::new();
    for &c in poly {
        for (&k, &v) in &cur {
            *res.entry(k).or_insert(0.0) += c * v;
        }
        cur = mul_z(&cur, m);
    }
    let mut total = 0.0;
    for (&lp, &c) in &res {
        if lp == 0 {
            continue;
        }
        let h = m as f64 * c / (lu.sqrt() * lv.sqrt());
        let lam = (lp * (lp + 1)) as f64;
        total += h * h * ((lu - lv).powi(2) / lam + 2.0 * (lu + lv) - 3.0 * lam);
    }
    total / 4.0
}

fn check(
    n: i64,
    poly: &[f64],
    f: fn(i64, i64) -> sdiff_core::Result<f64>,
    l_range: std::ops::RangeInclusive<i64>,
) {
    for l in l_range {
        for m in -l..=l {
            if (l, m) == (n, 0) {
                continue;
            }
            let c = f(l, m).unwrap();
            let o = zonal_oracle(n, poly, l, m);
            assert!(
                (c - o).abs() <= 1e-10 * (1.0 + o.abs()),
                "n={n} ({l},{m}): {c} vs {o}"
            );
        }
    }
}

#[test]
fn e03_matches_expansion() {
    let c3 = 0.25 * (7.0 / PI).sqrt();
    check(3, &[-3.0 * c3, 0.0, 15.0 * c3], sectional_e03, 3..=40);
}

#[test]
fn e02_matches_expansion() {
    check(2, &[0.0, 1.5 * (5.0 / PI).sqrt()], sectional_e02, 2..=40);
}

#[test]
fn e01_matches_expansion() {
    check(1, &[0.5 * (3.0 / PI).sqrt()], sectional_e01, 1..=40);
}
