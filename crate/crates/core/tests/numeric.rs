use std::f64::consts::PI;

use mzv_core::hcore::Composition;
use mzv_core::hopf::hshuffle_basis;
use mzv_core::mzvnum::{zeta_star_numeric, zeta_truncated, NumericConfig, SumMode};
use mzv_core::stuffle::stuffle_basis;

const ZETA3: f64 = 1.202_056_903_159_594_3;

fn c(v: &[u32]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

fn cfg(terms: u64) -> NumericConfig {
    NumericConfig::new(terms, 5e-3, SumMode::Nested).unwrap()
}

#[test]
fn depth_one_tail_is_bracketed_by_integrals() {
    // ∫_{N+1}^∞ x^{−m} dx < ζ(m) − ζ_N(m) < ∫_N^∞ x^{−m} dx
    let exact = [(2, PI * PI / 6.0), (3, ZETA3), (4, PI.powi(4) / 90.0)];
    for n in [100u64, 2000] {
        for (m, z) in exact {
            let tail = z - zeta_truncated(&c(&[m]), &cfg(n)).unwrap();
            let k = (m - 1) as f64;
            let lo = 1.0 / (k * ((n + 1) as f64).powf(k));
            let hi = 1.0 / (k * (n as f64).powf(k));
            assert!(lo < tail && tail < hi, "m={m} N={n}: tail {tail:e} not in ({lo:e}, {hi:e})");
        }
    }
}

#[test]
fn truncated_stuffle_is_exact() {
    let n = cfg(2000);
    let (a, b) = (c(&[2]), c(&[3]));
    let product = zeta_truncated(&a, &n).unwrap() * zeta_truncated(&b, &n).unwrap();
    let via_stuffle = zeta_star_numeric(&stuffle_basis(&a, &b), &n).unwrap();
    assert!((product - via_stuffle).abs() < 1e-12, "{product} vs {via_stuffle}");
}

#[test]
fn products_agree_with_both_expansions() {
    let n = cfg(2000);
    let product = (PI * PI / 6.0) * ZETA3;
    let (a, b) = (c(&[2]), c(&[3]));
    for (name, v) in [("stuffle", stuffle_basis(&a, &b)), ("shuffle", hshuffle_basis(&a, &b))] {
        let got = zeta_star_numeric(&v, &n).unwrap();
        assert!((got - product).abs() < 5e-3, "{name}: {got} vs {product}");
    }
}

#[test]
fn truncation_converges_monotonically() {
    for s in [c(&[2]), c(&[2, 1]), c(&[3, 1, 1]), c(&[2, 2])] {
        let values: Vec<f64> = [10u64, 50, 200, 1000].iter().map(|&n| zeta_truncated(&s, &cfg(n)).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]), "{s}: {values:?}");
    }
}

#[test]
fn euler_identity_within_tolerance() {
    let n = cfg(2000);
    let gap = zeta_truncated(&c(&[3]), &n).unwrap() - zeta_truncated(&c(&[2, 1]), &n).unwrap();
    assert!(gap.abs() < 5e-3, "{gap:e}");
}
