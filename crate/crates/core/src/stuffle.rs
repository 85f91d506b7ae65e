//! The stuffle (quasi-shuffle) product on ℋ≥0, admissibility, and the
//! extended double shuffle generators `[s]∗[t] − [s]⧢̃[t]`.

use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hcore::{compositions_up_to, Composition, HVector};
use crate::hopf::hshuffle_basis;

/// `s` is empty or starts with an entry `≥ 2`, i.e. indexes a convergent series.
pub fn is_admissible(s: &Composition) -> bool {
    s.entries().first().is_none_or(|&e| e >= 2)
}

static CACHE: Lazy<RwLock<HashMap<(Composition, Composition), HVector>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn prepend(head: u32, v: &HVector) -> HVector {
    v.map_basis(|s| {
        let mut e = Vec::with_capacity(s.depth() + 1);
        e.push(head);
        e.extend_from_slice(s.entries());
        Composition::from_positive(e)
    })
}

/// `[a] ∗ [b]` on basis elements, by
/// `[a₁,u]∗[b₁,v] = [a₁, u∗[b₁,v]] + [b₁, [a₁,u]∗v] + [a₁+b₁, u∗v]`. Memoized.
pub fn stuffle_basis(a: &Composition, b: &Composition) -> HVector {
    if a.is_unit() {
        return HVector::basis(b.clone());
    }
    if b.is_unit() {
        return HVector::basis(a.clone());
    }
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = CACHE.read().unwrap().get(&key) {
        return v.clone();
    }
    let (a1, u) = (a.entries()[0], a.suffix(1));
    let (b1, v) = (b.entries()[0], b.suffix(1));
    let mut out = prepend(a1, &stuffle_basis(&u, b));
    out += &prepend(b1, &stuffle_basis(a, &v));
    out += &prepend(a1 + b1, &stuffle_basis(&u, &v));
    CACHE.write().unwrap().insert(key, out.clone());
    out
}

/// Bilinear stuffle product.
pub fn stuffle(a: &HVector, b: &HVector) -> HVector {
    let mut out = HVector::zero();
    for (s, c) in a.iter() {
        for (t, d) in b.iter() {
            out.add_scaled(&stuffle_basis(s, t), &(c * d));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdsKind {
    /// Both sources admissible and nonunit.
    General,
    /// Left source is `[1]`, right source admissible.
    LeadingOne,
}

impl EdsKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdsKind::General => "general",
            EdsKind::LeadingOne => "leading-1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdsGenerator {
    pub kind: EdsKind,
    pub sources: (Composition, Composition),
    /// `a ∗ b − a ⧢̃ b`.
    pub value: HVector,
}

impl EdsGenerator {
    pub fn new(a: &Composition, b: &Composition) -> Self {
        let kind = if *a == Composition::ones(1) { EdsKind::LeadingOne } else { EdsKind::General };
        let value = stuffle_basis(a, b) - hshuffle_basis(a, b);
        EdsGenerator { kind, sources: (a.clone(), b.clone()), value }
    }

    pub fn weight(&self) -> u32 {
        self.sources.0.weight() + self.sources.1.weight()
    }
}

/// All double shuffle generators from source pairs of total weight
/// `≤ max_weight`, ordered by (total weight, left source, right source).
///
/// Pairs whose value is zero are dropped, and a value already produced by an
/// earlier pair is not repeated.
pub fn eds_generators(max_weight: u32) -> Result<Vec<EdsGenerator>> {
    if max_weight < 3 {
        return Err(Error::Domain(format!("eds_generators needs max_weight ≥ 3, got {max_weight}")));
    }
    let admissible: Vec<Composition> = compositions_up_to(max_weight)
        .into_iter()
        .filter(|s| !s.is_unit() && is_admissible(s))
        .collect();
    let one = Composition::ones(1);
    let mut pairs: Vec<(Composition, Composition)> = Vec::new();
    for b in &admissible {
        if b.weight() < max_weight {
            pairs.push((one.clone(), b.clone()));
        }
        for a in &admissible {
            if a.weight() + b.weight() <= max_weight {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    pairs.sort_by(|x, y| {
        (x.0.weight() + x.1.weight(), &x.0, &x.1).cmp(&(y.0.weight() + y.1.weight(), &y.0, &y.1))
    });
    let all: Vec<EdsGenerator> = pairs.par_iter().map(|(a, b)| EdsGenerator::new(a, b)).collect();

    let mut seen = BTreeSet::new();
    Ok(all
        .into_iter()
        .filter(|g| !g.value.is_zero() && seen.insert(g.value.iter().map(|(s, c)| (s.clone(), c.clone())).collect::<Vec<_>>()))
        .collect())
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
    fn admissibility() {
        assert!(is_admissible(&c(&[2, 1])));
        assert!(!is_admissible(&c(&[1, 2])));
        assert!(is_admissible(&Composition::unit()));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(stuffle_basis(&c(&[1]), &c(&[2])), hv(&[(1, &[1, 2]), (1, &[2, 1]), (1, &[3])]));
        assert_eq!(stuffle_basis(&c(&[2]), &c(&[3])), hv(&[(1, &[2, 3]), (1, &[3, 2]), (1, &[5])]));
        assert_eq!(stuffle_basis(&Composition::unit(), &c(&[4, 1])), hv(&[(1, &[4, 1])]));
        assert_eq!(stuffle_basis(&c(&[1]), &c(&[1])), hv(&[(2, &[1, 1]), (1, &[2])]));
    }

    #[test]
    fn weight_three_generator() {
        let g = eds_generators(3).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].kind, EdsKind::LeadingOne);
        assert_eq!(g[0].value, hv(&[(1, &[3]), (-1, &[2, 1])]));
    }

    #[test]
    fn weight_four_contains_two_two() {
        let g = eds_generators(4).unwrap();
        let expected = hv(&[(1, &[4]), (-4, &[3, 1])]);
        assert!(g.iter().any(|x| x.sources == (c(&[2]), c(&[2])) && x.value == expected));
        assert!(g.iter().all(|x| x.value.support().all(is_admissible)));
    }

    #[test]
    fn small_bound_is_rejected() {
        assert!(eds_generators(2).is_err());
    }
}
