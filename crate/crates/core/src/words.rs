//! Words over the alphabet `{x_0, x_1, x_2, …}` with the shuffle product,
//! deconcatenation, the encodings `ρ`, `ψ`, and the locality relation on `W_1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hcore::{Composition, LinComb};

/// A letter `x_i`; index 0 is `x_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

/// A word; the empty word is the unit `𝟏`. Ordered by length, then letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

pub type WordVector = LinComb<Word>;
pub type WordTensor = LinComb<(Word, Word)>;

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter(&self, pos: usize) -> Letter {
        Letter(self.0[pos])
    }

    fn with_last(&self, letter: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        Word(v)
    }

    /// Positive letter indices occurring in the word, in order of appearance.
    pub fn positive_indices(&self) -> Vec<u32> {
        self.0.iter().copied().filter(|&l| l > 0).collect()
    }

    /// Whether the word lies in `W_1`: empty, or ending in a positive letter
    /// with every positive index occurring at most once.
    pub fn is_w1(&self) -> bool {
        if self.0.is_empty() {
            return true;
        }
        if *self.0.last().unwrap() == 0 {
            return false;
        }
        let mut seen = BTreeSet::new();
        self.positive_indices().into_iter().all(|i| seen.insert(i))
    }

    fn require_w1(&self) -> Result<()> {
        if self.is_w1() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{self} is not in W_1 (must end in a positive letter with distinct positive indices)"
            )))
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        for l in &self.0 {
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

/// Shuffle product of two words: all interleavings preserving the internal
/// order of each, counted with multiplicity.
///
/// Evaluated by the last-letter recursion
/// `ua ⧢ wb = (u ⧢ wb)a + (ua ⧢ w)b` over a table of prefix pairs.
pub fn shuffle(u: &Word, w: &Word) -> WordVector {
    let (m, n) = (u.len(), w.len());
    // row[j] holds u[..i] ⧢ w[..j] for the current i.
    let mut row: Vec<WordVector> = (0..=n).map(|j| WordVector::basis(Word(w.0[..j].to_vec()))).collect();
    for i in 1..=m {
        let a = u.0[i - 1];
        let mut next: Vec<WordVector> = Vec::with_capacity(n + 1);
        next.push(WordVector::basis(Word(u.0[..i].to_vec())));
        for j in 1..=n {
            let b = w.0[j - 1];
            let mut cell = WordVector::zero();
            for (x, c) in row[j].iter() {
                cell.add_term(x.with_last(a), c.clone());
            }
            for (x, c) in next[j - 1].iter() {
                cell.add_term(x.with_last(b), c.clone());
            }
            next.push(cell);
        }
        row = next;
    }
    row.pop().unwrap()
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_vec(a: &WordVector, b: &WordVector) -> WordVector {
    let mut out = WordVector::zero();
    for (u, c) in a.iter() {
        for (w, d) in b.iter() {
            out.add_scaled(&shuffle(u, w), &(c * d));
        }
    }
    out
}

/// Deconcatenation coproduct `w ↦ Σ_i w[..i] ⊗ w[i..]`.
pub fn deconcat(w: &Word) -> WordTensor {
    (0..=w.len())
        .map(|i| ((Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())), crate::hcore::int(1)))
        .collect()
}

pub fn deconcat_vec(v: &WordVector) -> WordTensor {
    v.map_linear(deconcat)
}

/// `ρ([s_1,…,s_k]) = x_0^{s_1−1}x_1 ⋯ x_0^{s_k−1}x_1`.
pub fn rho(s: &Composition) -> Word {
    let mut letters = Vec::with_capacity(s.weight() as usize);
    for &e in s.entries() {
        letters.extend(std::iter::repeat_n(0, (e - 1) as usize));
        letters.push(1);
    }
    Word(letters)
}

pub fn rho_vec(v: &crate::hcore::HVector) -> WordVector {
    v.map_basis(rho)
}

/// Inverse of [`rho`] on `{𝟏} ∪ ℚ⟨x_0,x_1⟩x_1`.
pub fn rho_inv(w: &Word) -> Result<Composition> {
    if w.is_empty() {
        return Ok(Composition::unit());
    }
    if let Some(&bad) = w.0.iter().find(|&&l| l >= 2) {
        return Err(Error::Domain(format!("{w} contains letter x{bad}; only x0 and x1 are allowed")));
    }
    if *w.0.last().unwrap() != 1 {
        return Err(Error::Domain(format!("{w} does not end in x1")));
    }
    let mut entries = Vec::new();
    let mut run = 1u32;
    for &l in &w.0 {
        if l == 0 {
            run += 1;
        } else {
            entries.push(run);
            run = 1;
        }
    }
    Ok(Composition::from_positive(entries))
}

pub fn rho_inv_vec(v: &WordVector) -> Result<crate::hcore::HVector> {
    v.try_map_linear(|w| rho_inv(w).map(crate::hcore::HVector::basis))
}

/// `ψ`: replaces every positive letter by `x_1`. Defined on `W_1`.
pub fn psi(w: &Word) -> Result<Word> {
    w.require_w1()?;
    Ok(Word(w.0.iter().map(|&l| if l == 0 { 0 } else { 1 }).collect()))
}

pub fn psi_vec(v: &WordVector) -> Result<WordVector> {
    v.try_map_linear(|w| psi(w).map(WordVector::basis))
}

/// Locality on `W_1`: disjoint sets of positive indices.
pub fn word_local(u: &Word, w: &Word) -> Result<bool> {
    u.require_w1()?;
    w.require_w1()?;
    let left: BTreeSet<u32> = u.positive_indices().into_iter().collect();
    Ok(w.positive_indices().iter().all(|i| !left.contains(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::int;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec())
    }

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&w(&[1]), &w(&[1])), WordVector::term(w(&[1, 1]), int(2)));
        let expected: WordVector = [(w(&[0, 1, 1]), int(2)), (w(&[1, 0, 1]), int(1))].into_iter().collect();
        assert_eq!(shuffle(&w(&[0, 1]), &w(&[1])), expected);
        let u = w(&[2, 0, 5]);
        assert_eq!(shuffle(&Word::empty(), &u), WordVector::basis(u.clone()));
        assert_eq!(shuffle(&u, &Word::empty()), WordVector::basis(u));
    }

    #[test]
    fn deconcat_examples() {
        let d = deconcat(&w(&[0, 1]));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(Word::empty(), w(&[0, 1]))), int(1));
        assert_eq!(d.coeff(&(w(&[0]), w(&[1]))), int(1));
        assert_eq!(d.coeff(&(w(&[0, 1]), Word::empty())), int(1));
        assert_eq!(deconcat(&Word::empty()), WordTensor::basis((Word::empty(), Word::empty())));
        assert_eq!(deconcat(&w(&[1])).len(), 2);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&c(&[2, 1])), w(&[0, 1, 1]));
        assert_eq!(rho(&c(&[3])), w(&[0, 0, 1]));
        assert_eq!(rho(&Composition::unit()), Word::empty());
        assert_eq!(rho_inv(&w(&[0, 1, 1])).unwrap(), c(&[2, 1]));
        assert!(matches!(rho_inv(&w(&[0])), Err(Error::Domain(_))));
        assert!(matches!(rho_inv(&w(&[0, 2])), Err(Error::Domain(_))));
        assert_eq!(rho_inv(&Word::empty()).unwrap(), Composition::unit());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w(&[0, 3, 7])).unwrap(), w(&[0, 1, 1]));
        assert_eq!(psi(&Word::empty()).unwrap(), Word::empty());
        assert!(matches!(psi(&w(&[3, 3])), Err(Error::Domain(_))));
        assert!(matches!(psi(&w(&[3, 0])), Err(Error::Domain(_))));
    }

    #[test]
    fn locality_examples() {
        assert!(word_local(&w(&[0, 1]), &w(&[2])).unwrap());
        assert!(!word_local(&w(&[0, 1]), &w(&[1])).unwrap());
        assert!(word_local(&Word::empty(), &w(&[0, 5])).unwrap());
        assert!(word_local(&w(&[1, 1]), &w(&[2])).is_err());
    }
}
