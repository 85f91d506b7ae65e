//! The shuffle Hopf algebra on ℋ≥0: the product `⧢̃`, the recursive
//! coproduct `Δ̃`, its Chen-fraction descent, counit, antipode, and the
//! axiom checks.

mod antipode;
pub mod check;
mod coproduct;

use std::collections::HashMap;
use std::sync::RwLock;

use num::BigInt;
use once_cell::sync::Lazy;

use crate::hcore::{Composition, HTensorVector, HVector, Rational};
use crate::words;

pub use crate::hcore::counit;
pub use antipode::{antipode, antipode_basis, convolution};
pub use coproduct::{
    check_order_independence, coderivation_rhs, coproduct, coproduct_vec, descended_coproduct,
    descended_coproduct_on, shifted_step, shifted_step_with, CoproductEngine, Family, LeftOp,
    ShiftedTensor,
};

static SHUFFLE_CACHE: Lazy<RwLock<HashMap<(Composition, Composition), HVector>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `[a] ⧢̃ [b] = ρ⁻¹(ρ(a) ⧢ ρ(b))` on basis elements. Memoized.
pub fn hshuffle_basis(a: &Composition, b: &Composition) -> HVector {
    if a.is_unit() {
        return HVector::basis(b.clone());
    }
    if b.is_unit() {
        return HVector::basis(a.clone());
    }
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = SHUFFLE_CACHE.read().unwrap().get(&key) {
        return v.clone();
    }
    let sh = words::shuffle(&words::rho(a), &words::rho(b));
    // Every word in the shuffle ends in x1, so ρ⁻¹ is total here.
    let v = words::rho_inv_vec(&sh).expect("shuffle of ρ-images stays in ℚ⟨x0,x1⟩x1");
    SHUFFLE_CACHE.write().unwrap().insert(key, v.clone());
    v
}

/// Bilinear shuffle product on ℋ≥0.
pub fn hshuffle(a: &HVector, b: &HVector) -> HVector {
    let mut out = HVector::zero();
    for (s, c) in a.iter() {
        for (t, d) in b.iter() {
            out.add_scaled(&hshuffle_basis(s, t), &(c * d));
        }
    }
    out
}

/// Componentwise product `(a ⊗ b)·(c ⊗ d) = (a ⧢̃ c) ⊗ (b ⧢̃ d)` on ℋ≥0 ⊗ ℋ≥0.
pub fn tensor_hshuffle(x: &HTensorVector, y: &HTensorVector) -> HTensorVector {
    let mut out = HTensorVector::zero();
    for ((a, b), c) in x.iter() {
        for ((p, q), d) in y.iter() {
            let left = hshuffle_basis(a, p);
            let right = hshuffle_basis(b, q);
            let cd = c * d;
            for (l, u) in left.iter() {
                for (r, v) in right.iter() {
                    out.add_term((l.clone(), r.clone()), &cd * u * v);
                }
            }
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Closed form of `[s] ⧢̃ [t]`:
///
/// `Σ_{i=0}^{t−1} C(s+i−1, i)[s+i, t−i] + Σ_{j=0}^{s−1} C(t+j−1, j)[t+j, s−j]`.
///
/// The first sum collects the shuffles whose final `x_1` comes from `ρ([t])`,
/// the second those ending with the `x_1` of `ρ([s])`. Letting the first sum
/// run to `s−1` instead (with the second to `t−1`) would produce entries
/// `t−i ≤ 0` whenever `s > t`; the ranges above are the ones the word shuffle
/// dictates, and they agree with [`hshuffle`].
pub fn euler_depth1(s: u32, t: u32) -> HVector {
    assert!(s >= 1 && t >= 1, "euler_depth1 needs positive arguments");
    let mut out = HVector::zero();
    for i in 0..t {
        out.add_term(Composition::from_positive(vec![s + i, t - i]), binomial(s + i - 1, i));
    }
    for j in 0..s {
        out.add_term(Composition::from_positive(vec![t + j, s - j]), binomial(t + j - 1, j));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::int;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn hv(terms: &[(i64, &[u32])]) -> HVector {
        terms.iter().map(|(k, s)| (c(s), int(*k))).collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(hshuffle_basis(&c(&[1]), &c(&[1])), hv(&[(2, &[1, 1])]));
        assert_eq!(hshuffle_basis(&c(&[2]), &c(&[1])), hv(&[(2, &[2, 1]), (1, &[1, 2])]));
        assert_eq!(hshuffle_basis(&c(&[2]), &c(&[2])), hv(&[(2, &[2, 2]), (4, &[3, 1])]));
        assert_eq!(hshuffle_basis(&Composition::unit(), &c(&[3])), hv(&[(1, &[3])]));
    }

    #[test]
    fn delta_is_not_a_derivation() {
        use crate::hcore::delta;
        let one = HVector::basis(c(&[1]));
        let lhs = delta(1, &hshuffle(&one, &one));
        assert_eq!(lhs, hv(&[(2, &[2, 1])]));
        let rhs = hshuffle(&delta(1, &one), &one) + hshuffle(&one, &delta(1, &one));
        assert_eq!(rhs, hv(&[(4, &[2, 1]), (2, &[1, 2])]));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_depth1(1, 1), hv(&[(2, &[1, 1])]));
        assert_eq!(euler_depth1(2, 1), hv(&[(2, &[2, 1]), (1, &[1, 2])]));
        assert_eq!(euler_depth1(3, 2), hshuffle_basis(&c(&[3]), &c(&[2])));
    }
}
