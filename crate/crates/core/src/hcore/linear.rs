//! Sparse finite linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::iter::FromIterator;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Zero};

/// Exact rational scalar. `BigRational` keeps itself in lowest terms with a
/// positive denominator after every operation.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A formal linear combination `Σ c_b · b` over an ordered basis.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration follows the basis ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(b, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, x) in other.iter() {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Linear extension of a basis map `b ↦ f(b)`.
    pub fn map_linear<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Linear extension of a basis-to-basis map.
    pub fn map_basis<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Fallible version of [`LinComb::map_linear`].
    pub fn try_map_linear<C, E, F>(&self, mut f: F) -> Result<LinComb<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<LinComb<C>, E>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b)?, c);
        }
        Ok(out)
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter<F: FnMut(&B) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: Ord> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (b, c) in iter {
            v.add_term(b, c);
        }
        v
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -&self
    }
}

impl<B: Ord + Clone> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scale(rhs)
    }
}

/// Tensor product of two combinations, `(Σ a_i u_i) ⊗ (Σ b_j v_j) = Σ a_i b_j u_i ⊗ v_j`.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// Applies `f ⊗ g` to a two-fold tensor combination.
pub fn map_tensor<A, B, C, D, F, G>(t: &LinComb<(A, B)>, mut f: F, mut g: G) -> LinComb<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
    F: FnMut(&A) -> LinComb<C>,
    G: FnMut(&B) -> LinComb<D>,
{
    let mut out = LinComb::zero();
    for ((x, y), c) in t.iter() {
        let fx = f(x);
        if fx.is_zero() {
            continue;
        }
        let gy = g(y);
        for (u, a) in fx.iter() {
            for (v, b) in gy.iter() {
                out.add_term((u.clone(), v.clone()), c * a * b);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zeros() {
        let mut v: LinComb<u32> = LinComb::basis(3);
        v.add_term(3, int(-1));
        assert!(v.is_zero());
        v.add_term(1, int(0));
        assert!(v.is_zero());
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn tensor_is_bilinear() {
        let a: LinComb<u32> = [(1, int(2)), (2, int(3))].into_iter().collect();
        let b: LinComb<u32> = [(5, rat(1, 2))].into_iter().collect();
        let t = tensor(&a, &b);
        assert_eq!(t.coeff(&(1, 5)), int(1));
        assert_eq!(t.coeff(&(2, 5)), rat(3, 2));
        assert_eq!(t.len(), 2);
    }
}
