//! Text syntax for compositions, words, Chen fractions, and their linear
//! combinations, plus LaTeX and JSON serialization.
//!
//! A linear combination is `term (('+'|'-') term)*` or the literal `0`. A term
//! is an optional sign, an optional rational coefficient `p` or `p/q`, an
//! optional `*`, and a basis token:
//!
//! | token | meaning |
//! |---|---|
//! | `[2,1]`, `[]`, `𝟏` | composition (or the unit) |
//! | `x0x1x3`, `x0 x1 x3` | word |
//! | `<[2,1];(1,3)>` | Chen fraction on `x_1, x_3` |
//! | `a⊗b`, `a (x) b` | tensor of two tokens |
//!
//! Whitespace is ignored between tokens. Printing emits terms in canonical
//! basis order, so `parse(print(v)) == v`.

mod json;
mod latex;
mod text;

pub use json::{from_json, roundtrip_json, to_json, JsonForm};
pub use latex::{format_latex, format_zeta_relation, LatexBasis};
pub use text::{
    format_frac_tensor, format_frac_vector, format_htensor, format_hvector, format_text,
    format_word_vector, parse_chen, parse_composition, parse_frac_tensor, parse_frac_vector,
    parse_htensor, parse_hvector, parse_word, parse_word_vector, TextBasis,
};
