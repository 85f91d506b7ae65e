//! The locality coproduct `Δ^ch` on Chen fractions.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use super::{d_basis, ChenFraction, FracTensorVector, FracVector};
use crate::hcore::{int, ReductionOrder};

/// Values of `Δ^ch` on `⟨s; x_1,…,x_k⟩`, keyed by `s`. Other variable choices
/// are obtained by relabelling, since `Δ^ch` commutes with renaming variables.
static STANDARD_CACHE: Lazy<RwLock<HashMap<Vec<u32>, FracTensorVector>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// All-ones case: deconcatenation of the variable sequence.
fn deconcat_ones(vars: &[u32]) -> FracTensorVector {
    (0..=vars.len())
        .map(|j| {
            let left = ChenFraction::from_parts(vec![1; j], vars[..j].to_vec());
            let right = ChenFraction::from_parts(vec![1; vars.len() - j], vars[j..].to_vec());
            ((left, right), int(1))
        })
        .collect()
}

/// `(id ⊗ d + d ⊗ id)` for `d = d_{i,j}`.
fn coderivation_step(i: u32, j: u32, t: &FracTensorVector) -> FracTensorVector {
    let mut out = FracTensorVector::zero();
    for ((l, r), c) in t.iter() {
        for (r2, a) in d_basis(i, j, r).iter() {
            out.add_term((l.clone(), r2.clone()), c * a);
        }
        for (l2, a) in d_basis(i, j, l).iter() {
            out.add_term((l2.clone(), r.clone()), c * a);
        }
    }
    out
}

fn compute(f: &ChenFraction, order: ReductionOrder, cached: bool) -> FracTensorVector {
    if f.is_one() {
        return FracTensorVector::basis((ChenFraction::one(), ChenFraction::one()));
    }
    let Some(pos) = order.pick(f.exponents()) else {
        return deconcat_ones(f.variables());
    };
    let mut lower = f.exponents().to_vec();
    lower[pos] -= 1;
    let lower = ChenFraction::from_parts(lower, f.variables().to_vec());
    let prev = if cached { standard_lookup(&lower) } else { compute(&lower, order, false) };
    let i = f.variables()[pos];
    let j = if pos == 0 { 0 } else { f.variables()[pos - 1] };
    coderivation_step(i, j, &prev).scale(&int(lower.exponents()[pos] as i64).recip())
}

fn standard_lookup(f: &ChenFraction) -> FracTensorVector {
    let key = f.exponents().to_vec();
    let hit = STANDARD_CACHE.read().unwrap().get(&key).cloned();
    let standard = match hit {
        Some(t) => t,
        None => {
            let std_frac = ChenFraction::from_parts(key.clone(), (1..=key.len() as u32).collect());
            let t = compute(&std_frac, ReductionOrder::Rightmost, true);
            STANDARD_CACHE.write().unwrap().entry(key).or_insert(t).clone()
        }
    };
    let vars = f.variables();
    if vars.iter().enumerate().all(|(p, &v)| v == p as u32 + 1) {
        return standard;
    }
    standard.map_basis(|(l, r)| {
        let rename = |v: u32| vars[v as usize - 1];
        (l.relabel(rename), r.relabel(rename))
    })
}

/// `Δ^ch(f)`, reducing the rightmost exponent ≥ 2 first. Memoized.
pub fn chen_coproduct(f: &ChenFraction) -> FracTensorVector {
    standard_lookup(f)
}

pub fn chen_coproduct_vec(v: &FracVector) -> FracTensorVector {
    v.map_linear(chen_coproduct)
}

/// `Δ^ch(f)` computed from scratch along the given reduction order.
pub fn chen_coproduct_with_order(f: &ChenFraction, order: ReductionOrder) -> FracTensorVector {
    compute(f, order, false)
}
