use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use super::{coproduct, hshuffle_basis};
use crate::hcore::{Composition, HVector};

static CACHE: Lazy<RwLock<HashMap<Composition, HVector>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// The antipode on a basis element, by the connected-graded recursion
/// `S(x) = −x − Σ S(x′) ⧢̃ x″` over the reduced coproduct.
pub fn antipode_basis(s: &Composition) -> HVector {
    if s.is_unit() {
        return HVector::basis(Composition::unit());
    }
    if let Some(v) = CACHE.read().unwrap().get(s) {
        return v.clone();
    }
    let unit = Composition::unit();
    let full = coproduct(s);
    let one = crate::hcore::int(1);
    assert_eq!(full.coeff(&(unit.clone(), s.clone())), one, "Δ̃({s}) lacks 𝟏⊗{s}");
    assert_eq!(full.coeff(&(s.clone(), unit.clone())), one, "Δ̃({s}) lacks {s}⊗𝟏");
    let reduced = full.filter(|(l, r)| !(l.is_unit() && r == s) && !(r.is_unit() && l == s));

    let mut out = -HVector::basis(s.clone());
    for ((l, r), c) in reduced.iter() {
        assert!(
            l.weight() > 0 && r.weight() > 0,
            "reduced coproduct of {s} has a term {l}⊗{r} with a weight-0 factor"
        );
        for (a, x) in antipode_basis(l).iter() {
            out.add_scaled(&hshuffle_basis(a, r), &-(c * x));
        }
    }
    CACHE.write().unwrap().entry(s.clone()).or_insert(out).clone()
}

pub fn antipode(v: &HVector) -> HVector {
    v.map_linear(antipode_basis)
}

/// Convolution `m(f ⊗ g) Δ̃(s)` with `m = ⧢̃`.
pub fn convolution<F, G>(f: F, g: G, s: &Composition) -> HVector
where
    F: Fn(&Composition) -> HVector,
    G: Fn(&Composition) -> HVector,
{
    let mut out = HVector::zero();
    for ((l, r), c) in coproduct(s).iter() {
        let fl = f(l);
        let gr = g(r);
        for (a, x) in fl.iter() {
            for (b, y) in gr.iter() {
                out.add_scaled(&hshuffle_basis(a, b), &(c * x * y));
            }
        }
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

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_basis(&Composition::unit()), HVector::basis(Composition::unit()));
        assert_eq!(antipode_basis(&c(&[1])), HVector::term(c(&[1]), int(-1)));
        assert_eq!(antipode_basis(&c(&[2])), HVector::term(c(&[2]), int(-1)));
    }

    #[test]
    fn convolution_with_identity_is_counit() {
        let id = |s: &Composition| HVector::basis(s.clone());
        for s in crate::hcore::compositions_up_to(5) {
            let expected = if s.is_unit() { HVector::basis(Composition::unit()) } else { HVector::zero() };
            assert_eq!(convolution(antipode_basis, id, &s), expected, "S⋆id on {s}");
            assert_eq!(convolution(id, antipode_basis, &s), expected, "id⋆S on {s}");
        }
    }
}
