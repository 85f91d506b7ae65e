//! The weight-raising operators `δ_i` and `∂̂_i = δ_i − δ_{i−1}` on ℋ≥0.

use std::collections::BTreeMap;

use num::BigInt;

use super::composition::Composition;
use super::linear::{int, Rational};
use super::{HTensorVector, HVector};

/// Variant of the boundary case `∂̂_{k+1}` used by the coproduct recursion.
///
/// `FlippedBoundarySign` negates the `i = k+1` formula. It exists only so the
/// verification suites can demonstrate that they detect a broken operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum DhatRule {
    #[default]
    Standard,
    FlippedBoundarySign,
}

/// `δ_i` on a basis element. Indices outside `1..=depth` give 0.
pub fn delta_basis(i: i64, s: &Composition) -> HVector {
    let k = s.depth() as i64;
    let mut out = HVector::zero();
    if i < 1 || i > k {
        return out;
    }
    for j in 0..i as usize {
        out.add_term(s.bumped(j), int(s.entries()[j] as i64));
    }
    out
}

pub fn delta(i: i64, v: &HVector) -> HVector {
    v.map_linear(|s| delta_basis(i, s))
}

/// `∂̂_i` on a basis element via the direct formulas:
/// `s_i[…,s_i+1,…]` for `1 ≤ i ≤ k`, `−Σ_j s_j[…,s_j+1,…]` for `i = k+1`, else 0.
pub fn dhat_basis(i: i64, s: &Composition) -> HVector {
    dhat_basis_with(DhatRule::Standard, i, s)
}

pub fn dhat_basis_with(rule: DhatRule, i: i64, s: &Composition) -> HVector {
    let k = s.depth() as i64;
    if i >= 1 && i <= k {
        let pos = (i - 1) as usize;
        return HVector::term(s.bumped(pos), int(s.entries()[pos] as i64));
    }
    if i == k + 1 && k >= 1 {
        let sign = match rule {
            DhatRule::Standard => -1,
            DhatRule::FlippedBoundarySign => 1,
        };
        let mut out = HVector::zero();
        for (j, &e) in s.entries().iter().enumerate() {
            out.add_term(s.bumped(j), int(sign * e as i64));
        }
        return out;
    }
    HVector::zero()
}

pub fn dhat(i: i64, v: &HVector) -> HVector {
    v.map_linear(|s| dhat_basis(i, s))
}

pub fn dhat_with(rule: DhatRule, i: i64, v: &HVector) -> HVector {
    v.map_linear(|s| dhat_basis_with(rule, i, s))
}

fn factorial(n: u32) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

/// `(Π_i ∂̂_i^{s_i−1}/(s_i−1)!) [1,…,1]`, which reproduces `[s]`.
pub fn build_via_dhat(s: &Composition) -> HVector {
    let mut v = HVector::basis(Composition::ones(s.depth()));
    for (pos, &e) in s.entries().iter().enumerate() {
        let i = pos as i64 + 1;
        for _ in 1..e {
            v = dhat(i, &v);
        }
        v = v.scale(&(factorial(e - 1).recip()));
    }
    v
}

/// Splits `v` into weight-homogeneous components.
pub fn grade(v: &HVector) -> BTreeMap<u32, HVector> {
    let mut out: BTreeMap<u32, HVector> = BTreeMap::new();
    for (s, c) in v.iter() {
        out.entry(s.weight()).or_default().add_term(s.clone(), c.clone());
    }
    out
}

/// Counit of ℋ≥0: the coefficient of `𝟏`.
pub fn counit(v: &HVector) -> Rational {
    v.coeff(&Composition::unit())
}

/// Applies `A ⊗ B` where both are plain linear operators on ℋ≥0.
pub fn tensor_apply<F, G>(t: &HTensorVector, f: F, g: G) -> HTensorVector
where
    F: FnMut(&Composition) -> HVector,
    G: FnMut(&Composition) -> HVector,
{
    super::linear::map_tensor(t, f, g)
}
