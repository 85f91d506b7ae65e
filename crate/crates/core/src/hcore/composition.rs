use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of positive integers `[s_1,…,s_k]`, the basis of ℋ≥0.
///
/// The empty composition is the unit `𝟏`. Ordering is by weight, then depth,
/// then lexicographic entries, which is the canonical term order everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&e| e == 0) {
            return Err(Error::InvalidComposition(format!(
                "entry {} at position {} is not a positive integer",
                entries[pos], pos
            )));
        }
        Ok(Composition(entries))
    }

    /// Builds a composition from entries already known to be positive.
    pub(crate) fn from_positive(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e >= 1));
        Composition(entries)
    }

    pub fn unit() -> Self {
        Composition(Vec::new())
    }

    /// `[1,…,1]` with `k` entries.
    pub fn ones(k: usize) -> Self {
        Composition(vec![1; k])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Copy with entry `pos` (0-based) raised by one.
    pub fn bumped(&self, pos: usize) -> Self {
        let mut e = self.0.clone();
        e[pos] += 1;
        Composition(e)
    }

    /// Copy with entry `pos` (0-based) lowered by one; the entry must be ≥ 2.
    pub fn lowered(&self, pos: usize) -> Self {
        assert!(self.0[pos] >= 2, "cannot lower entry {} of {}", pos, self);
        let mut e = self.0.clone();
        e[pos] -= 1;
        Composition(e)
    }

    pub fn concat(&self, other: &Composition) -> Self {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Composition(e)
    }

    pub fn prefix(&self, len: usize) -> Self {
        Composition(self.0[..len].to_vec())
    }

    pub fn suffix(&self, start: usize) -> Self {
        Composition(self.0[start..].to_vec())
    }

    pub fn all_ones(&self) -> bool {
        self.0.iter().all(|&e| e == 1)
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Composition::new(v)
    }
}

/// All compositions of exactly `weight`, in canonical order.
pub fn compositions_of_weight(weight: u32) -> Vec<Composition> {
    fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            rec(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All compositions with weight at most `max_weight`, including `𝟏`, in canonical order.
pub fn compositions_up_to(max_weight: u32) -> Vec<Composition> {
    (0..=max_weight).flat_map(compositions_of_weight).collect()
}
