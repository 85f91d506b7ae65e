//! Exhaustive checks of the bialgebra and Hopf axioms for `(ℋ≥0, ⧢̃, Δ̃)`.
//!
//! Every check returns one [`CheckOutcome`] per weight. The engine argument
//! selects the coproduct under test so that a deliberately broken operator
//! can be shown to fail.

use crate::hcore::{
    compositions_of_weight, delta_basis, Composition, DhatRule, HTensor3, HVector,
};
use crate::chenfrac::{self, ChenFraction};
use crate::report::{run_check, CheckOutcome, Report};

use super::{
    antipode_basis, coderivation_rhs, descended_coproduct, descended_coproduct_on, hshuffle_basis,
    tensor_hshuffle, CoproductEngine, Family,
};

fn coassoc_sides(engine: &CoproductEngine, s: &Composition) -> (HTensor3, HTensor3) {
    let d = engine.coproduct(s);
    let mut left = HTensor3::zero();
    let mut right = HTensor3::zero();
    for ((a, b), c) in d.iter() {
        for ((b1, b2), x) in engine.coproduct(b).iter() {
            left.add_term((a.clone(), b1.clone(), b2.clone()), c * x);
        }
        for ((a1, a2), x) in engine.coproduct(a).iter() {
            right.add_term((a1.clone(), a2.clone(), b.clone()), c * x);
        }
    }
    (left, right)
}

pub fn coassociativity(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("coassoc", weight, &compositions_of_weight(weight), |s| {
        let (l, r) = coassoc_sides(engine, s);
        (l != r).then(|| format!("{s}: (id⊗Δ)Δ and (Δ⊗id)Δ differ"))
    })
}

pub fn counit_laws(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("counit", weight, &compositions_of_weight(weight), |s| {
        let d = engine.coproduct(s);
        let expect = HVector::basis(s.clone());
        let left: HVector = d.iter().filter(|((a, _), _)| a.is_unit()).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: HVector = d.iter().filter(|((_, b), _)| b.is_unit()).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        if left != expect {
            Some(format!("{s}: (ε⊗id)Δ = {left:?}"))
        } else if right != expect {
            Some(format!("{s}: (id⊗ε)Δ = {right:?}"))
        } else {
            None
        }
    })
}

pub fn grading(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("grading", weight, &compositions_of_weight(weight), |s| {
        engine
            .coproduct(s)
            .support()
            .find(|(a, b)| a.weight() + b.weight() != weight)
            .map(|(a, b)| format!("{s}: term {a}⊗{b} has the wrong weight"))
    })
}

/// All ordered pairs of compositions with total weight exactly `weight`.
pub fn pairs_of_weight(weight: u32) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for wa in 0..=weight {
        for a in compositions_of_weight(wa) {
            for b in compositions_of_weight(weight - wa) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// `Δ̃(a ⧢̃ b) = Δ̃(a) · Δ̃(b)` on all basis pairs of total weight `weight`.
pub fn homomorphism(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("hom", weight, &pairs_of_weight(weight), |(a, b)| {
        let lhs = engine.coproduct_vec(&hshuffle_basis(a, b));
        let rhs = tensor_hshuffle(&engine.coproduct(a), &engine.coproduct(b));
        (lhs != rhs).then(|| format!("{a}⧢{b}: Δ(a⧢b) ≠ Δ(a)Δ(b)"))
    })
}

/// `Δ̃ f_i = (id ⊗̌ f_i + f_i ⊗ id) Δ̃` for `1 ≤ i ≤ max_index` on sources of
/// the given weight.
pub fn shifted_coderivation(engine: &CoproductEngine, family: Family, source_weight: u32, max_index: i64) -> CheckOutcome {
    let name = match family {
        Family::Delta => "coderivation_delta",
        Family::Dhat(_) => "coderivation_dhat",
    };
    run_check(name, source_weight, &compositions_of_weight(source_weight), |s| {
        let d = engine.coproduct(s);
        (1..=max_index).find_map(|i| {
            let lhs = engine.coproduct_vec(&family.apply_basis(i, s));
            let rhs = coderivation_rhs(family, i, &d);
            (lhs != rhs).then(|| format!("{s}, i={i}: Δf_i ≠ (id⊗̌f_i + f_i⊗id)Δ"))
        })
    })
}

/// `S ⋆ id = id ⋆ S = uε`, convolution taken against the engine's coproduct.
pub fn antipode_laws(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("antipode", weight, &compositions_of_weight(weight), |s| {
        let expected = if s.is_unit() { HVector::basis(Composition::unit()) } else { HVector::zero() };
        let d = engine.coproduct(s);
        let mut left = HVector::zero();
        let mut right = HVector::zero();
        for ((a, b), c) in d.iter() {
            for (x, u) in antipode_basis(a).iter() {
                left.add_scaled(&hshuffle_basis(x, b), &(c * u));
            }
            for (y, u) in antipode_basis(b).iter() {
                right.add_scaled(&hshuffle_basis(a, y), &(c * u));
            }
        }
        if left != expected {
            Some(format!("{s}: S⋆id ≠ uε"))
        } else if right != expected {
            Some(format!("{s}: id⋆S ≠ uε"))
        } else {
            None
        }
    })
}

/// `Δ̃ = (π⊗π)Δ^ch` on `⟨s; x_1,…,x_k⟩` and on a second, shuffled choice of variables.
pub fn descent(engine: &CoproductEngine, weight: u32) -> CheckOutcome {
    run_check("descent", weight, &compositions_of_weight(weight), |s| {
        let own = engine.coproduct(s);
        if own != descended_coproduct(s) {
            return Some(format!("{s}: Δ̃ ≠ (π⊗π)Δ^ch"));
        }
        let k = s.depth() as u32;
        let vars: Vec<u32> = (1..=k).map(|j| 2 * (k - j) + 3).collect();
        match descended_coproduct_on(s, &vars) {
            Ok(t) if t == own => None,
            _ => Some(format!("{s}: descent depends on the variable choice {vars:?}")),
        }
    })
}

/// `π ∘ ∂_{ℓ_i} = δ_i ∘ π` on `⟨s; x_1,…,x_k⟩` with `s` of the given weight,
/// for every variable index `ℓ_i = i` and for one absent variable.
pub fn intertwining(weight: u32) -> CheckOutcome {
    run_check("intertwining", weight, &compositions_of_weight(weight), |s| {
        let f = ChenFraction::standard(s);
        (1..=s.depth() as u32 + 1).find_map(|i| {
            let lhs = chenfrac::pi_vec(&chenfrac::partial(i, &f));
            let rhs = delta_basis(i as i64, s);
            (lhs != rhs).then(|| format!("{s}, i={i}: π∂_i ≠ δ_iπ"))
        })
    })
}

pub fn order_independence(weight: u32) -> CheckOutcome {
    run_check("order_independence", weight, &compositions_of_weight(weight), |s| {
        (!super::check_order_independence(s)).then(|| format!("{s}: reduction orders disagree"))
    })
}

/// Runs the full suite up to `max_weight` against `engine`.
///
/// Coassociativity, counit, grading, antipode, and descent run on every
/// weight `≤ max_weight`; the homomorphism check on pairs of total weight
/// `≤ max_weight`; the shifted-coderivation checks on sources of weight
/// `< max_weight` (so every coproduct involved stays within the bound) for
/// `1 ≤ i ≤ max_weight + 1`.
pub fn check_hopf_with(engine: &CoproductEngine, max_weight: u32) -> Report {
    let mut report = Report::default();
    let max_index = max_weight as i64 + 1;
    for w in 0..=max_weight {
        report.outcomes.push(coassociativity(engine, w));
        report.outcomes.push(counit_laws(engine, w));
        report.outcomes.push(grading(engine, w));
        report.outcomes.push(homomorphism(engine, w));
        if w < max_weight {
            report.outcomes.push(shifted_coderivation(engine, Family::Dhat(engine.rule()), w, max_index));
            report.outcomes.push(shifted_coderivation(engine, Family::Delta, w, max_index));
        }
        report.outcomes.push(antipode_laws(engine, w));
        report.outcomes.push(descent(engine, w));
        report.outcomes.push(intertwining(w));
        if engine.rule() == DhatRule::Standard {
            report.outcomes.push(order_independence(w));
        }
    }
    report
}

/// [`check_hopf_with`] on the standard coproduct.
pub fn check_hopf(max_weight: u32) -> Report {
    check_hopf_with(CoproductEngine::standard(), max_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::ReductionOrder;

    #[test]
    fn small_suites_pass() {
        for w in [1, 4] {
            let r = check_hopf(w);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn flipped_sign_is_caught_by_weight_three() {
        let bad = CoproductEngine::new(DhatRule::FlippedBoundarySign, ReductionOrder::Rightmost);
        let r = check_hopf_with(&bad, 3);
        let fail = r.first_failure().expect("mutation must be detected");
        assert!(fail.weight <= 3);
    }
}
