//! Chen fractions
//! `⟨s_1,…,s_k; x_{i_1},…,x_{i_k}⟩ = 1/((x_{i_1}+⋯+x_{i_k})^{s_1}(x_{i_2}+⋯+x_{i_k})^{s_2}⋯x_{i_k}^{s_k})`
//! with their locality relation and product, the derivations `∂_m = −∂/∂x_m`,
//! the coproduct `Δ^ch`, and an exact evaluator.

mod coproduct;
pub mod suite;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::hcore::{int, Composition, HTensorVector, HVector, LinComb, Rational};
use crate::words::{self, Word};

pub use coproduct::{chen_coproduct, chen_coproduct_vec, chen_coproduct_with_order};

pub type FracVector = LinComb<ChenFraction>;
pub type FracTensorVector = LinComb<(ChenFraction, ChenFraction)>;
pub type FracTensor3 = LinComb<(ChenFraction, ChenFraction, ChenFraction)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ChenFraction {
    exponents: Vec<u32>,
    variables: Vec<u32>,
}

impl ChenFraction {
    pub fn new(exponents: Vec<u32>, variables: Vec<u32>) -> Result<Self> {
        if exponents.len() != variables.len() {
            return Err(Error::InvalidFraction(format!(
                "{} exponents but {} variables",
                exponents.len(),
                variables.len()
            )));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidFraction("exponents must be ≥ 1".into()));
        }
        if variables.contains(&0) {
            return Err(Error::InvalidFraction("variable indices must be ≥ 1".into()));
        }
        let distinct: BTreeSet<_> = variables.iter().collect();
        if distinct.len() != variables.len() {
            return Err(Error::InvalidFraction("variable indices must be distinct".into()));
        }
        Ok(ChenFraction { exponents, variables })
    }

    pub(crate) fn from_parts(exponents: Vec<u32>, variables: Vec<u32>) -> Self {
        debug_assert!(ChenFraction::new(exponents.clone(), variables.clone()).is_ok());
        ChenFraction { exponents, variables }
    }

    /// The constant function 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// `⟨s; x_1,…,x_k⟩`.
    pub fn standard(s: &Composition) -> Self {
        let k = s.depth() as u32;
        ChenFraction::from_parts(s.entries().to_vec(), (1..=k).collect())
    }

    pub fn with_variables(s: &Composition, variables: Vec<u32>) -> Result<Self> {
        ChenFraction::new(s.entries().to_vec(), variables)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn variables(&self) -> &[u32] {
        &self.variables
    }

    pub fn weight(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.exponents.len()
    }

    pub fn variable_set(&self) -> BTreeSet<u32> {
        self.variables.iter().copied().collect()
    }

    /// Exponent sequence as a composition (the projection `π` on a basis element).
    pub fn composition(&self) -> Composition {
        Composition::from_positive(self.exponents.clone())
    }

    fn position_of(&self, var: u32) -> Option<usize> {
        self.variables.iter().position(|&v| v == var)
    }

    fn bumped(&self, pos: usize) -> Self {
        let mut e = self.exponents.clone();
        e[pos] += 1;
        ChenFraction { exponents: e, variables: self.variables.clone() }
    }

    /// Renames variables through `map`, which must be injective on them.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Self {
        ChenFraction {
            exponents: self.exponents.clone(),
            variables: self.variables.iter().map(|&v| map(v)).collect(),
        }
    }
}

impl Ord for ChenFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.depth().cmp(&other.depth()))
            .then_with(|| self.exponents.cmp(&other.exponents))
            .then_with(|| self.variables.cmp(&other.variables))
    }
}

impl PartialOrd for ChenFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ChenFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "<[{}];({})>", join(&self.exponents), join(&self.variables))
    }
}

/// Locality: disjoint variable sets. The constant 1 is local to everything.
pub fn frac_local(f: &ChenFraction, g: &ChenFraction) -> bool {
    shared_variable(f, g).is_none()
}

fn shared_variable(f: &ChenFraction, g: &ChenFraction) -> Option<u32> {
    f.variables.iter().copied().find(|v| g.variables.contains(v))
}

/// Bilinear extension: every pair of support elements must be local.
pub fn frac_local_vec(f: &FracVector, g: &FracVector) -> bool {
    f.support().all(|a| g.support().all(|b| frac_local(a, b)))
}

/// `φ(⟨s; x_{i_1}…x_{i_k}⟩) = x_0^{s_1−1}x_{i_1}⋯x_0^{s_k−1}x_{i_k}`.
pub fn phi(f: &ChenFraction) -> Word {
    let mut letters = Vec::with_capacity(f.weight() as usize);
    for (&e, &v) in f.exponents.iter().zip(&f.variables) {
        letters.extend(std::iter::repeat_n(0, (e - 1) as usize));
        letters.push(v);
    }
    Word::new(letters)
}

pub fn phi_inv(w: &Word) -> Result<ChenFraction> {
    if !w.is_w1() {
        return Err(Error::Domain(format!("{w} is not in W_1")));
    }
    let mut exponents = Vec::new();
    let mut variables = Vec::new();
    let mut run = 1;
    for &l in w.letters() {
        if l == 0 {
            run += 1;
        } else {
            exponents.push(run);
            variables.push(l);
            run = 1;
        }
    }
    Ok(ChenFraction::from_parts(exponents, variables))
}

/// `π = ρ⁻¹ ∘ ψ ∘ φ`, evaluated through the word encodings.
pub fn pi(f: &ChenFraction) -> Composition {
    let w = words::psi(&phi(f)).expect("φ lands in W_1");
    words::rho_inv(&w).expect("ψ lands in ℚ⟨x0,x1⟩x1")
}

pub fn pi_vec(v: &FracVector) -> HVector {
    v.map_basis(pi)
}

pub fn pi_tensor(t: &FracTensorVector) -> HTensorVector {
    t.map_basis(|(a, b)| (pi(a), pi(b)))
}

/// Product of two local basis fractions, `φ⁻¹(φ(f) ⧢ φ(g))`.
pub fn mul_local_basis(f: &ChenFraction, g: &ChenFraction) -> Result<FracVector> {
    if let Some(variable) = shared_variable(f, g) {
        return Err(Error::LocalityViolation { left: f.to_string(), right: g.to_string(), variable });
    }
    let sh = words::shuffle(&phi(f), &phi(g));
    sh.try_map_linear(|w| phi_inv(w).map(FracVector::basis))
}

/// Locality product on vectors. Fails without partial results if any pair of
/// support elements shares a variable.
pub fn mul_local(f: &FracVector, g: &FracVector) -> Result<FracVector> {
    for a in f.support() {
        for b in g.support() {
            if let Some(variable) = shared_variable(a, b) {
                return Err(Error::LocalityViolation { left: a.to_string(), right: b.to_string(), variable });
            }
        }
    }
    let mut out = FracVector::zero();
    for (a, c) in f.iter() {
        for (b, d) in g.iter() {
            out.add_scaled(&mul_local_basis(a, b)?, &(c * d));
        }
    }
    Ok(out)
}

/// `∂_m f = −∂f/∂x_m` in the Chen basis. If `x_m` is the `i`-th variable,
/// this is `Σ_{j≤i} s_j ⟨…,s_j+1,…⟩`; otherwise 0.
pub fn partial(m: u32, f: &ChenFraction) -> FracVector {
    let mut out = FracVector::zero();
    if let Some(i) = f.position_of(m) {
        for j in 0..=i {
            out.add_term(f.bumped(j), int(f.exponents[j] as i64));
        }
    }
    out
}

pub fn partial_vec(m: u32, v: &FracVector) -> FracVector {
    v.map_linear(|f| partial(m, f))
}

/// `d_{i,j} = ∂_i − ∂_j`, with `∂_0 = 0`.
pub fn d_op(i: u32, j: u32, v: &FracVector) -> FracVector {
    v.map_linear(|f| d_basis(i, j, f))
}

pub(crate) fn d_basis(i: u32, j: u32, f: &ChenFraction) -> FracVector {
    if i == j {
        return FracVector::zero();
    }
    let mut out = if i == 0 { FracVector::zero() } else { partial(i, f) };
    if j != 0 {
        out -= &partial(j, f);
    }
    out
}

/// Rebuilds `⟨s; vars⟩` as
/// `(Π_j d_{i_j,i_{j−1}}^{s_j−1}/(s_j−1)!) ⟨1,…,1; vars⟩` with `i_0 = 0`.
pub fn build_frac_via_d(s: &Composition, vars: &[u32]) -> Result<FracVector> {
    if vars.len() != s.depth() {
        return Err(Error::InvalidFraction(format!(
            "{} variables for a composition of depth {}",
            vars.len(),
            s.depth()
        )));
    }
    let base = ChenFraction::new(vec![1; vars.len()], vars.to_vec())?;
    let mut v = FracVector::basis(base);
    for (pos, &e) in s.entries().iter().enumerate() {
        let prev = if pos == 0 { 0 } else { vars[pos - 1] };
        let mut fact = Rational::one();
        for n in 1..e {
            v = d_op(vars[pos], prev, &v);
            fact *= int(n as i64);
        }
        v = v.scale(&fact.recip());
    }
    Ok(v)
}

/// Coefficient of the constant fraction 1.
pub fn counit_frac(v: &FracVector) -> Rational {
    v.coeff(&ChenFraction::one())
}

/// Exact value of `f` at a rational point.
pub fn eval(f: &ChenFraction, assignment: &BTreeMap<u32, Rational>) -> Result<Rational> {
    let mut values = Vec::with_capacity(f.depth());
    for &v in &f.variables {
        values.push(assignment.get(&v).ok_or(Error::MissingVariable(v))?.clone());
    }
    let mut result = Rational::one();
    let mut tail = Rational::zero();
    for j in (0..f.depth()).rev() {
        tail += &values[j];
        if tail.is_zero() {
            return Err(Error::Pole { factor: j + 1 });
        }
        result /= num::pow(tail.clone(), f.exponents[j] as usize);
    }
    Ok(result)
}

pub fn eval_vec(v: &FracVector, assignment: &BTreeMap<u32, Rational>) -> Result<Rational> {
    let mut total = Rational::zero();
    for (f, c) in v.iter() {
        total += c * eval(f, assignment)?;
    }
    Ok(total)
}

/// All Chen fractions `⟨s; vars⟩` with `s` ranging over compositions of
/// weight `1..=max_weight` and depth `≤ max_depth`, where `vars` is the first
/// `depth(s)` entries of `pool`.
pub fn fractions_on(pool: &[u32], max_weight: u32, max_depth: usize) -> Vec<ChenFraction> {
    crate::hcore::compositions_up_to(max_weight)
        .into_iter()
        .filter(|s| s.depth() <= max_depth && s.depth() <= pool.len())
        .map(|s| ChenFraction::from_parts(s.entries().to_vec(), pool[..s.depth()].to_vec()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::rat;

    fn cf(e: &[u32], v: &[u32]) -> ChenFraction {
        ChenFraction::new(e.to_vec(), v.to_vec()).unwrap()
    }

    fn point(p: &[(u32, i64)]) -> BTreeMap<u32, Rational> {
        p.iter().map(|&(k, v)| (k, int(v))).collect()
    }

    #[test]
    fn construction_checks() {
        assert!(ChenFraction::new(vec![1, 2], vec![1]).is_err());
        assert!(ChenFraction::new(vec![0], vec![1]).is_err());
        assert!(ChenFraction::new(vec![1], vec![0]).is_err());
        assert!(ChenFraction::new(vec![1, 1], vec![3, 3]).is_err());
        assert!(ChenFraction::new(vec![], vec![]).unwrap().is_one());
    }

    #[test]
    fn locality_examples() {
        assert!(frac_local(&cf(&[1], &[1]), &cf(&[1], &[2])));
        assert!(!frac_local(&cf(&[1, 1], &[1, 2]), &cf(&[2], &[2])));
        assert!(frac_local(&ChenFraction::one(), &cf(&[3], &[9])));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&cf(&[1], &[1])), Word::new(vec![1]));
        assert_eq!(phi(&cf(&[2, 1], &[3, 5])), Word::new(vec![0, 3, 5]));
        assert_eq!(phi(&ChenFraction::one()), Word::empty());
        let f = cf(&[3, 1, 2], &[4, 2, 9]);
        assert_eq!(phi_inv(&phi(&f)).unwrap(), f);
    }

    #[test]
    fn pi_matches_exponents() {
        let f = cf(&[3, 1, 2], &[4, 2, 9]);
        assert_eq!(pi(&f), f.composition());
        assert_eq!(pi(&ChenFraction::one()), Composition::unit());
    }

    #[test]
    fn product_examples() {
        let x = FracVector::basis(cf(&[1], &[1]));
        let y = FracVector::basis(cf(&[1], &[2]));
        let expected: FracVector = [(cf(&[1, 1], &[2, 1]), int(1)), (cf(&[1, 1], &[1, 2]), int(1))].into_iter().collect();
        assert_eq!(mul_local(&x, &y).unwrap(), expected);
        let one = FracVector::basis(ChenFraction::one());
        assert_eq!(mul_local(&one, &x).unwrap(), x);
        assert!(matches!(mul_local(&x, &x), Err(Error::LocalityViolation { variable: 1, .. })));
    }

    #[test]
    fn mul_local_fails_atomically() {
        let f: FracVector = [(cf(&[1], &[1]), int(1)), (cf(&[1], &[3]), int(1))].into_iter().collect();
        let g = FracVector::basis(cf(&[2], &[3]));
        assert!(mul_local(&f, &g).is_err());
    }

    #[test]
    fn partial_examples() {
        let f = cf(&[1, 1], &[1, 2]);
        let expected: FracVector = [(cf(&[2, 1], &[1, 2]), int(1)), (cf(&[1, 2], &[1, 2]), int(1))].into_iter().collect();
        assert_eq!(partial(2, &f), expected);
        assert!(partial(3, &f).is_zero());
        assert!(partial(1, &ChenFraction::one()).is_zero());
    }

    #[test]
    fn d_op_examples() {
        let f = FracVector::basis(cf(&[1, 1], &[1, 2]));
        assert_eq!(d_op(2, 1, &f), FracVector::basis(cf(&[1, 2], &[1, 2])));
        assert!(d_op(1, 1, &f).is_zero());
        assert!(d_op(5, 6, &FracVector::basis(cf(&[1], &[1]))).is_zero());
        assert_eq!(d_op(1, 0, &f), partial_vec(1, &f));
    }

    #[test]
    fn build_frac_examples() {
        for (s, v) in [(vec![1, 1], vec![1, 2]), (vec![2, 1], vec![1, 2]), (vec![1, 2], vec![1, 2]), (vec![3, 1, 2], vec![5, 2, 7])] {
            let comp = Composition::new(s.clone()).unwrap();
            assert_eq!(build_frac_via_d(&comp, &v).unwrap(), FracVector::basis(cf(&s, &v)));
        }
        assert!(build_frac_via_d(&Composition::new(vec![1]).unwrap(), &[1, 2]).is_err());
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit_frac(&FracVector::basis(ChenFraction::one())), int(1));
        assert_eq!(counit_frac(&FracVector::basis(cf(&[2], &[1]))), int(0));
        let v: FracVector = [(ChenFraction::one(), int(3)), (cf(&[1], &[2]), int(-1))].into_iter().collect();
        assert_eq!(counit_frac(&v), int(3));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval(&cf(&[1], &[1]), &point(&[(1, 2)])).unwrap(), rat(1, 2));
        assert_eq!(eval(&cf(&[1, 1], &[1, 2]), &point(&[(1, 1), (2, 1)])).unwrap(), rat(1, 2));
        assert!(matches!(eval(&cf(&[2], &[1]), &point(&[(1, 0)])), Err(Error::Pole { .. })));
        assert!(matches!(eval(&cf(&[1, 1], &[1, 2]), &point(&[(1, 1)])), Err(Error::MissingVariable(2))));
        assert_eq!(eval(&ChenFraction::one(), &BTreeMap::new()).unwrap(), int(1));
    }
}
