//! Exhaustive checks of the locality bialgebra structure on Chen fractions,
//! plus a seeded pointwise-evaluation oracle for the locality product.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    chen_coproduct, chen_coproduct_vec, chen_coproduct_with_order, counit_frac, eval, eval_vec,
    fractions_on, mul_local, partial, partial_vec, ChenFraction, FracTensorVector, FracVector,
};
use crate::hcore::ReductionOrder;
use crate::report::{run_check, Report};

/// Bounds for [`check_chen`].
#[derive(Clone, Debug)]
pub struct ChenConfig {
    /// Coassociativity, counit, grading, locality, and order independence.
    pub coalgebra_weight: u32,
    pub coalgebra_depth: usize,
    /// Per-factor weight for the homomorphism, Leibniz, and eval checks.
    pub factor_weight: u32,
    /// Commutation of the `∂_m` and the coderivation identity.
    pub derivation_weight: u32,
    pub points_per_pair: usize,
    pub seed: u64,
}

impl Default for ChenConfig {
    fn default() -> Self {
        ChenConfig {
            coalgebra_weight: 6,
            coalgebra_depth: 3,
            factor_weight: 4,
            derivation_weight: 5,
            points_per_pair: 20,
            seed: 0,
        }
    }
}

/// Largest value drawn for a coordinate. Every coordinate is a positive
/// integer, so no partial sum in a denominator can vanish.
pub const MAX_COORDINATE: i64 = 97;

const POOLS: [&[u32]; 2] = [&[1, 2, 3, 4, 5, 6], &[5, 2, 7, 1, 9, 4]];
const ODD: &[u32] = &[1, 3, 5, 7];
const EVEN_REVERSED: &[u32] = &[8, 6, 4, 2];

/// Fractions of exactly `weight` on each variable pool, plus `1` at weight 0.
fn single_cases(weight: u32, max_depth: usize) -> Vec<ChenFraction> {
    if weight == 0 {
        return vec![ChenFraction::one()];
    }
    let mut out: Vec<ChenFraction> = POOLS
        .iter()
        .flat_map(|pool| fractions_on(pool, weight, max_depth))
        .filter(|f| f.weight() == weight)
        .collect();
    out.sort();
    out.dedup();
    out
}

fn with_one(mut v: Vec<ChenFraction>) -> Vec<ChenFraction> {
    v.insert(0, ChenFraction::one());
    v
}

/// Local pairs `(f, g)` with `f` on odd variables and `g` on even variables
/// in reverse order, grouped by total weight.
fn local_pairs(max_factor_weight: u32) -> BTreeMap<u32, Vec<(ChenFraction, ChenFraction)>> {
    let left = with_one(fractions_on(ODD, max_factor_weight, ODD.len()));
    let right = with_one(fractions_on(EVEN_REVERSED, max_factor_weight, EVEN_REVERSED.len()));
    let mut out: BTreeMap<u32, Vec<_>> = BTreeMap::new();
    for f in &left {
        for g in &right {
            out.entry(f.weight() + g.weight()).or_default().push((f.clone(), g.clone()));
        }
    }
    out
}

/// Each variable of `f` followed by one index absent from it.
fn test_variables(f: &ChenFraction) -> Vec<u32> {
    let mut v = f.variables().to_vec();
    v.push(f.variables().iter().max().copied().unwrap_or(0) + 1);
    v
}

fn tensor_mul(x: &FracTensorVector, y: &FracTensorVector) -> Result<FracTensorVector, String> {
    let mut out = FracTensorVector::zero();
    for ((a, b), c) in x.iter() {
        for ((p, q), d) in y.iter() {
            let l = mul_local(&FracVector::basis(a.clone()), &FracVector::basis(p.clone())).map_err(|e| e.to_string())?;
            let r = mul_local(&FracVector::basis(b.clone()), &FracVector::basis(q.clone())).map_err(|e| e.to_string())?;
            let cd = c * d;
            for (u, x) in l.iter() {
                for (v, y) in r.iter() {
                    out.add_term((u.clone(), v.clone()), &cd * x * y);
                }
            }
        }
    }
    Ok(out)
}

fn coderivation_rhs(m: u32, t: &FracTensorVector) -> FracTensorVector {
    let mut out = FracTensorVector::zero();
    for ((a, b), c) in t.iter() {
        for (x, u) in partial(m, a).iter() {
            out.add_term((x.clone(), b.clone()), c * u);
        }
        for (y, u) in partial(m, b).iter() {
            out.add_term((a.clone(), y.clone()), c * u);
        }
    }
    out
}

fn coassociative(f: &ChenFraction) -> bool {
    let d = chen_coproduct(f);
    let mut left = super::FracTensor3::zero();
    let mut right = super::FracTensor3::zero();
    for ((a, b), c) in d.iter() {
        for ((b1, b2), x) in chen_coproduct(b).iter() {
            left.add_term((a.clone(), b1.clone(), b2.clone()), c * x);
        }
        for ((a1, a2), x) in chen_coproduct(a).iter() {
            right.add_term((a1.clone(), a2.clone(), b.clone()), c * x);
        }
    }
    left == right
}

fn counit_holds(f: &ChenFraction) -> bool {
    let d = chen_coproduct(f);
    let expect = FracVector::basis(f.clone());
    let left: FracVector = d
        .iter()
        .map(|((a, b), c)| (b.clone(), c * counit_frac(&FracVector::basis(a.clone()))))
        .collect();
    let right: FracVector = d
        .iter()
        .map(|((a, b), c)| (a.clone(), c * counit_frac(&FracVector::basis(b.clone()))))
        .collect();
    left == expect && right == expect
}

fn locality_violation(f: &ChenFraction) -> Option<String> {
    let vars = f.variable_set();
    chen_coproduct(f).support().find_map(|(a, b)| {
        let (va, vb) = (a.variable_set(), b.variable_set());
        if a.weight() + b.weight() != f.weight() {
            Some(format!("{f}: term {a}⊗{b} breaks the grading"))
        } else if !va.is_subset(&vars) || !vb.is_subset(&vars) {
            Some(format!("{f}: term {a}⊗{b} uses foreign variables"))
        } else if !va.is_disjoint(&vb) {
            Some(format!("{f}: term {a}⊗{b} is not local"))
        } else {
            None
        }
    })
}

fn random_points(rng: &mut ChaCha8Rng, vars: &BTreeSet<u32>, n: usize) -> Vec<BTreeMap<u32, crate::Rational>> {
    (0..n)
        .map(|_| vars.iter().map(|&v| (v, crate::hcore::int(rng.gen_range(1..=MAX_COORDINATE)))).collect())
        .collect()
}

/// Runs the full Chen-fraction suite. Outcomes carry the total weight of the
/// fraction (or of the pair) under test.
pub fn check_chen(cfg: &ChenConfig) -> Report {
    let mut report = Report::default();

    for w in 0..=cfg.coalgebra_weight {
        let cases = single_cases(w, cfg.coalgebra_depth);
        report.outcomes.push(run_check("chen_coassoc", w, &cases, |f| {
            (!coassociative(f)).then(|| format!("{f}: (id⊗Δ)Δ ≠ (Δ⊗id)Δ"))
        }));
        report.outcomes.push(run_check("chen_counit", w, &cases, |f| {
            (!counit_holds(f)).then(|| format!("{f}: counit law fails"))
        }));
        report.outcomes.push(run_check("chen_grading_locality", w, &cases, locality_violation));
        report.outcomes.push(run_check("chen_order_independence", w, &cases, |f| {
            let l = chen_coproduct_with_order(f, ReductionOrder::Leftmost);
            let r = chen_coproduct_with_order(f, ReductionOrder::Rightmost);
            (l != r || r != chen_coproduct(f)).then(|| format!("{f}: reduction orders disagree"))
        }));
    }

    for w in 0..=cfg.derivation_weight {
        let cases = single_cases(w, usize::MAX);
        report.outcomes.push(run_check("chen_commutation", w, &cases, |f| {
            let vars = test_variables(f);
            let one = FracVector::basis(f.clone());
            vars.iter().find_map(|&m| {
                vars.iter().find_map(|&n| {
                    let mn = partial_vec(m, &partial_vec(n, &one));
                    let nm = partial_vec(n, &partial_vec(m, &one));
                    (mn != nm).then(|| format!("{f}: ∂_{m}∂_{n} ≠ ∂_{n}∂_{m}"))
                })
            })
        }));
        report.outcomes.push(run_check("chen_coderivation", w, &cases, |f| {
            let d = chen_coproduct(f);
            test_variables(f).into_iter().find_map(|m| {
                let lhs = chen_coproduct_vec(&partial(m, f));
                (lhs != coderivation_rhs(m, &d)).then(|| format!("{f}: Δ∂_{m} ≠ (id⊗∂_{m} + ∂_{m}⊗id)Δ"))
            })
        }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (w, pairs) in local_pairs(cfg.factor_weight) {
        report.outcomes.push(run_check("chen_hom", w, &pairs, |(f, g)| {
            let fg = match mul_local(&FracVector::basis(f.clone()), &FracVector::basis(g.clone())) {
                Ok(v) => v,
                Err(e) => return Some(e.to_string()),
            };
            match tensor_mul(&chen_coproduct(f), &chen_coproduct(g)) {
                Ok(rhs) if rhs == chen_coproduct_vec(&fg) => None,
                Ok(_) => Some(format!("{f}·{g}: Δ(fg) ≠ Δ(f)Δ(g)")),
                Err(e) => Some(e),
            }
        }));
        report.outcomes.push(run_check("chen_leibniz", w, &pairs, |(f, g)| {
            let (fv, gv) = (FracVector::basis(f.clone()), FracVector::basis(g.clone()));
            let mut vars: Vec<u32> = test_variables(f);
            vars.extend(test_variables(g));
            let leibniz = |m: u32| -> crate::Result<bool> {
                let lhs = partial_vec(m, &mul_local(&fv, &gv)?);
                let rhs = mul_local(&partial(m, f), &gv)? + mul_local(&fv, &partial(m, g))?;
                Ok(lhs == rhs)
            };
            vars.into_iter().find_map(|m| match leibniz(m) {
                Ok(true) => None,
                Ok(false) => Some(format!("{f}·{g}: Leibniz rule fails for ∂_{m}")),
                Err(e) => Some(e.to_string()),
            })
        }));

        let with_points: Vec<_> = pairs
            .into_iter()
            .map(|(f, g)| {
                let vars: BTreeSet<u32> = f.variable_set().union(&g.variable_set()).copied().collect();
                let pts = random_points(&mut rng, &vars, cfg.points_per_pair);
                (f, g, pts)
            })
            .collect();
        report.outcomes.push(run_check("chen_eval_oracle", w, &with_points, |(f, g, pts)| {
            let fg = match mul_local(&FracVector::basis(f.clone()), &FracVector::basis(g.clone())) {
                Ok(v) => v,
                Err(e) => return Some(e.to_string()),
            };
            pts.iter().find_map(|p| {
                let values = eval_vec(&fg, p).and_then(|lhs| Ok((lhs, eval(f, p)? * eval(g, p)?)));
                match values {
                    Ok((lhs, rhs)) if lhs == rhs => None,
                    Ok((lhs, rhs)) => Some(format!("{f}·{g} at {p:?}: {lhs} ≠ {rhs}")),
                    Err(e) => Some(e.to_string()),
                }
            })
        }));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = ChenConfig {
            coalgebra_weight: 4,
            coalgebra_depth: 3,
            factor_weight: 2,
            derivation_weight: 3,
            points_per_pair: 3,
            seed: 1,
        };
        let r = check_chen(&cfg);
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn pairs_are_local() {
        for pairs in local_pairs(3).values() {
            for (f, g) in pairs {
                assert!(super::super::frac_local(f, g));
            }
        }
    }
}
