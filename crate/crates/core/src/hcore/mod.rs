//! Compositions, exact sparse linear combinations over them, and the
//! operator families `δ_i`, `∂̂_i` that drive the coproduct recursion.

mod composition;
pub mod linear;
mod operators;

pub use composition::{compositions_of_weight, compositions_up_to, Composition};
pub use linear::{int, map_tensor, rat, tensor, LinComb, Rational};
pub use operators::{
    build_via_dhat, counit, delta, delta_basis, dhat, dhat_basis, dhat_basis_with, dhat_with,
    grade, tensor_apply, DhatRule,
};

/// An element of ℋ≥0.
pub type HVector = LinComb<Composition>;

/// An element of ℋ≥0 ⊗ ℋ≥0.
pub type HTensorVector = LinComb<(Composition, Composition)>;

/// An element of ℋ≥0 ⊗ ℋ≥0 ⊗ ℋ≥0, used for coassociativity.
pub type HTensor3 = LinComb<(Composition, Composition, Composition)>;

/// Which position a recursion on exponents reduces first when several
/// entries exceed 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ReductionOrder {
    /// Largest index first.
    #[default]
    Rightmost,
    /// Smallest index first.
    Leftmost,
}

impl ReductionOrder {
    /// 0-based position to reduce in `entries`, or `None` when all entries are 1.
    pub fn pick(self, entries: &[u32]) -> Option<usize> {
        match self {
            ReductionOrder::Rightmost => entries.iter().rposition(|&e| e >= 2),
            ReductionOrder::Leftmost => entries.iter().position(|&e| e >= 2),
        }
    }
}
