use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use crate::chenfrac::{self, ChenFraction};
use crate::error::Result;
use crate::hcore::{
    delta_basis, dhat_basis_with, int, Composition, DhatRule, HTensorVector, HVector,
    ReductionOrder,
};

/// An operator family `{f_i}_{i∈ℤ}` on ℋ≥0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Delta,
    Dhat(DhatRule),
}

impl Family {
    pub fn apply_basis(self, i: i64, s: &Composition) -> HVector {
        match self {
            Family::Delta => delta_basis(i, s),
            Family::Dhat(rule) => dhat_basis_with(rule, i, s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftOp {
    Identity,
    Op(Family, i64),
}

impl LeftOp {
    fn apply_basis(self, s: &Composition) -> HVector {
        match self {
            LeftOp::Identity => HVector::basis(s.clone()),
            LeftOp::Op(family, i) => family.apply_basis(i, s),
        }
    }
}

/// The shifted tensor `A ⊗̌ f_i`, sending `[s] ⊗ [t]` to `A[s] ⊗ f_{i−dep(s)}[t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftedTensor {
    pub left: LeftOp,
    pub right: Family,
    pub index: i64,
}

impl ShiftedTensor {
    pub fn apply(&self, t: &HTensorVector) -> HTensorVector {
        let mut out = HTensorVector::zero();
        for ((l, r), c) in t.iter() {
            let right = self.right.apply_basis(self.index - l.depth() as i64, r);
            if right.is_zero() {
                continue;
            }
            let left = self.left.apply_basis(l);
            for (a, x) in left.iter() {
                for (b, y) in right.iter() {
                    out.add_term((a.clone(), b.clone()), c * x * y);
                }
            }
        }
        out
    }
}

/// `(id ⊗̌ f_i + f_i ⊗ id) T`.
pub fn coderivation_rhs(family: Family, i: i64, t: &HTensorVector) -> HTensorVector {
    let mut out = ShiftedTensor { left: LeftOp::Identity, right: family, index: i }.apply(t);
    for ((l, r), c) in t.iter() {
        for (a, x) in family.apply_basis(i, l).iter() {
            out.add_term((a.clone(), r.clone()), c * x);
        }
    }
    out
}

/// One recursion step `(id ⊗̌ ∂̂_i + ∂̂_i ⊗ id) T`.
pub fn shifted_step(i: i64, t: &HTensorVector) -> HTensorVector {
    shifted_step_with(DhatRule::Standard, i, t)
}

pub fn shifted_step_with(rule: DhatRule, i: i64, t: &HTensorVector) -> HTensorVector {
    coderivation_rhs(Family::Dhat(rule), i, t)
}

fn deconcat_ones(k: usize) -> HTensorVector {
    (0..=k)
        .map(|j| ((Composition::ones(j), Composition::ones(k - j)), int(1)))
        .collect()
}

/// Evaluates the recursive coproduct `Δ̃` with a fixed reduction order and
/// memoizes results per composition.
pub struct CoproductEngine {
    rule: DhatRule,
    order: ReductionOrder,
    cache: RwLock<HashMap<Composition, HTensorVector>>,
}

static STANDARD: Lazy<CoproductEngine> =
    Lazy::new(|| CoproductEngine::new(DhatRule::Standard, ReductionOrder::Rightmost));

impl CoproductEngine {
    pub fn new(rule: DhatRule, order: ReductionOrder) -> Self {
        CoproductEngine { rule, order, cache: RwLock::new(HashMap::new()) }
    }

    /// The shared engine: standard operators, rightmost reduction.
    pub fn standard() -> &'static CoproductEngine {
        &STANDARD
    }

    pub fn rule(&self) -> DhatRule {
        self.rule
    }

    pub fn coproduct(&self, s: &Composition) -> HTensorVector {
        if let Some(t) = self.cache.read().unwrap().get(s) {
            return t.clone();
        }
        let t = match self.order.pick(s.entries()) {
            _ if s.is_unit() => HTensorVector::basis((Composition::unit(), Composition::unit())),
            None => deconcat_ones(s.depth()),
            Some(pos) => {
                let lower = s.lowered(pos);
                let prev = self.coproduct(&lower);
                let step = shifted_step_with(self.rule, pos as i64 + 1, &prev);
                step.scale(&int(lower.entries()[pos] as i64).recip())
            }
        };
        self.cache.write().unwrap().entry(s.clone()).or_insert(t).clone()
    }

    pub fn coproduct_vec(&self, v: &HVector) -> HTensorVector {
        v.map_linear(|s| self.coproduct(s))
    }
}

/// `Δ̃([s])`.
pub fn coproduct(s: &Composition) -> HTensorVector {
    CoproductEngine::standard().coproduct(s)
}

pub fn coproduct_vec(v: &HVector) -> HTensorVector {
    CoproductEngine::standard().coproduct_vec(v)
}

/// Applies the recursion along one explicit sequence of 0-based positions,
/// starting from `[1,…,1]`.
fn coproduct_along(depth: usize, path: &[usize]) -> HTensorVector {
    let mut t = deconcat_ones(depth);
    let mut cur = vec![1u32; depth];
    for &pos in path {
        t = shifted_step(pos as i64 + 1, &t).scale(&int(cur[pos] as i64).recip());
        cur[pos] += 1;
    }
    t
}

/// All distinct orderings of the multiset in which position `p` occurs `counts[p]` times.
fn multiset_orders(counts: &mut [u32], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(cur.clone());
        return;
    }
    for p in 0..counts.len() {
        if counts[p] > 0 {
            counts[p] -= 1;
            cur.push(p);
            multiset_orders(counts, cur, out);
            cur.pop();
            counts[p] += 1;
        }
    }
}

/// Recomputes `Δ̃(s)` along every admissible reduction order (weight ≤ 7) or
/// along the leftmost-first and rightmost-first orders (above), and reports
/// whether all results agree with each other and with [`coproduct`].
pub fn check_order_independence(s: &Composition) -> bool {
    let mut counts: Vec<u32> = s.entries().iter().map(|&e| e - 1).collect();
    let mut paths = Vec::new();
    if s.weight() <= 7 {
        multiset_orders(&mut counts, &mut Vec::new(), &mut paths);
    } else {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (p, &c) in counts.iter().enumerate() {
            left.extend(std::iter::repeat_n(p, c as usize));
        }
        for (p, &c) in counts.iter().enumerate().rev() {
            right.extend(std::iter::repeat_n(p, c as usize));
        }
        paths.push(left);
        paths.push(right);
    }
    let reference = coproduct(s);
    paths.iter().all(|p| coproduct_along(s.depth(), p) == reference)
}

/// `(π⊗π) Δ^ch(⟨s; x_1,…,x_k⟩)`.
pub fn descended_coproduct(s: &Composition) -> HTensorVector {
    chenfrac::pi_tensor(&chenfrac::chen_coproduct(&ChenFraction::standard(s)))
}

/// `(π⊗π) Δ^ch(⟨s; vars⟩)` for an explicit choice of distinct variables.
pub fn descended_coproduct_on(s: &Composition, vars: &[u32]) -> Result<HTensorVector> {
    let f = ChenFraction::with_variables(s, vars.to_vec())?;
    Ok(chenfrac::pi_tensor(&chenfrac::chen_coproduct(&f)))
}
