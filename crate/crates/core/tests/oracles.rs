//! Independent oracles: brute-force word shuffles and a quotient-rule
//! differentiator for products of inverse powers of linear forms.

use std::collections::BTreeMap;

use mzv_core::chenfrac::{self, ChenFraction, FracVector};
use mzv_core::hcore::{compositions_up_to, int, Composition, HVector, Rational};
use mzv_core::hopf::{euler_depth1, hshuffle_basis};
use mzv_core::words::{self, Word, WordVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every interleaving of `u` and `w`, by choosing which positions hold `u`.
fn brute_shuffle(u: &[u32], w: &[u32]) -> BTreeMap<Vec<u32>, i64> {
    let n = u.len() + w.len();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut word = Vec::with_capacity(n);
        for p in 0..n {
            if mask & (1 << p) != 0 {
                word.push(u[i]);
                i += 1;
            } else {
                word.push(w[j]);
                j += 1;
            }
        }
        *out.entry(word).or_insert(0) += 1;
    }
    out
}

fn as_word_vector(m: &BTreeMap<Vec<u32>, i64>) -> WordVector {
    m.iter().map(|(w, &c)| (Word::new(w.clone()), int(c))).collect()
}

fn rho_letters(s: &Composition) -> Vec<u32> {
    let mut out = Vec::new();
    for &e in s.entries() {
        out.extend(std::iter::repeat_n(0, e as usize - 1));
        out.push(1);
    }
    out
}

fn comp_from_rho(letters: &[u32]) -> Composition {
    let mut entries = Vec::new();
    let mut run = 1;
    for &l in letters {
        if l == 0 {
            run += 1;
        } else {
            entries.push(run);
            run = 1;
        }
    }
    Composition::new(entries).unwrap()
}

#[test]
fn word_shuffle_matches_brute_force() {
    let alphabet_words: Vec<Vec<u32>> = (0..=4usize)
        .flat_map(|len| {
            (0..3u32.pow(len as u32)).map(move |code| {
                (0..len).map(|p| (code / 3u32.pow(p as u32)) % 3).collect::<Vec<u32>>()
            })
        })
        .collect();
    for u in alphabet_words.iter().filter(|w| w.len() <= 3) {
        for w in &alphabet_words {
            let expected = as_word_vector(&brute_shuffle(u, w));
            assert_eq!(words::shuffle(&Word::new(u.clone()), &Word::new(w.clone())), expected, "{u:?} ⧢ {w:?}");
        }
    }
}

#[test]
fn composition_shuffle_matches_brute_force() {
    let comps = compositions_up_to(6);
    for a in &comps {
        for b in &comps {
            if a.weight() + b.weight() > 8 {
                continue;
            }
            let expected: HVector = brute_shuffle(&rho_letters(a), &rho_letters(b))
                .iter()
                .map(|(w, &c)| (comp_from_rho(w), int(c)))
                .collect();
            assert_eq!(hshuffle_basis(a, b), expected, "{a} ⧢ {b}");
        }
    }
}

#[test]
fn euler_closed_form_matches_brute_force() {
    for s in 1..=6 {
        for t in 1..=6 {
            let a = Composition::new(vec![s]).unwrap();
            let b = Composition::new(vec![t]).unwrap();
            let expected: HVector = brute_shuffle(&rho_letters(&a), &rho_letters(&b))
                .iter()
                .map(|(w, &c)| (comp_from_rho(w), int(c)))
                .collect();
            assert_eq!(euler_depth1(s, t), expected, "s={s} t={t}");
        }
    }
}

/// A product `Π_j L_j^{−e_j}` of inverse powers of linear forms, each form
/// being a sum of variables. This is the whole differentiator's data model.
struct InversePowers {
    factors: Vec<(Vec<u32>, u32)>,
}

impl InversePowers {
    fn of(f: &ChenFraction) -> Self {
        let vars = f.variables();
        let factors = f.exponents().iter().enumerate().map(|(j, &e)| (vars[j..].to_vec(), e)).collect();
        InversePowers { factors }
    }

    fn value(&self, p: &BTreeMap<u32, Rational>) -> Rational {
        let mut v = int(1);
        for (form, e) in &self.factors {
            let l: Rational = form.iter().map(|x| p[x].clone()).sum();
            for _ in 0..*e {
                v /= l.clone();
            }
        }
        v
    }

    /// `−∂/∂x_m` at `p` by the quotient rule: `d(L^{−e}) = −e L^{−e−1} dL`.
    fn neg_derivative(&self, m: u32, p: &BTreeMap<u32, Rational>) -> Rational {
        let f = self.value(p);
        let mut total = int(0);
        for (form, e) in &self.factors {
            if form.contains(&m) {
                let l: Rational = form.iter().map(|x| p[x].clone()).sum();
                total += &f * int(*e as i64) / l;
            }
        }
        total
    }
}

fn fractions(max_weight: u32) -> Vec<ChenFraction> {
    let pools: [&[u32]; 2] = [&[1, 2, 3, 4], &[3, 1, 4, 2]];
    pools.iter().flat_map(|p| chenfrac::fractions_on(p, max_weight, 4)).collect()
}

#[test]
fn partial_matches_quotient_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in fractions(4) {
        let oracle = InversePowers::of(&f);
        for _ in 0..10 {
            let p: BTreeMap<u32, Rational> = (1..=5).map(|v| (v, int(rng.gen_range(1..=97)))).collect();
            for m in 1..=5 {
                let got = chenfrac::eval_vec(&chenfrac::partial(m, &f), &p).unwrap();
                assert_eq!(got, oracle.neg_derivative(m, &p), "∂_{m} {f} at {p:?}");
            }
        }
    }
}

#[test]
fn partial_example_matches_oracle_symbolically() {
    // −∂/∂x_2 of 1/((x_1+x_2)x_2) = 1/((x_1+x_2)^2 x_2) + 1/((x_1+x_2) x_2^2).
    let f = ChenFraction::new(vec![1, 1], vec![1, 2]).unwrap();
    let expected: FracVector = [
        (ChenFraction::new(vec![2, 1], vec![1, 2]).unwrap(), int(1)),
        (ChenFraction::new(vec![1, 2], vec![1, 2]).unwrap(), int(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(chenfrac::partial(2, &f), expected);
}

#[test]
fn product_example_is_pointwise() {
    // 1/x · 1/y = 1/((x+y)x) + 1/((x+y)y)
    let x = FracVector::basis(ChenFraction::new(vec![1], vec![1]).unwrap());
    let y = FracVector::basis(ChenFraction::new(vec![1], vec![2]).unwrap());
    let prod = chenfrac::mul_local(&x, &y).unwrap();
    assert_eq!(prod.len(), 2);
    let p: BTreeMap<u32, Rational> = [(1, int(3)), (2, int(5))].into_iter().collect();
    assert_eq!(chenfrac::eval_vec(&prod, &p).unwrap(), Rational::new(1.into(), 15.into()));
}
