use crate::chenfrac::ChenFraction;
use crate::hcore::{Composition, HVector, LinComb, Rational};
use crate::words::Word;

use super::text::join_terms;

pub trait LatexBasis {
    fn latex(&self) -> String;
}

impl LatexBasis for Composition {
    fn latex(&self) -> String {
        if self.is_unit() {
            "{\\bf 1}".into()
        } else {
            self.to_string()
        }
    }
}

impl LatexBasis for Word {
    fn latex(&self) -> String {
        if self.is_empty() {
            return "{\\bf 1}".into();
        }
        self.letters().iter().map(|l| format!("x_{{{l}}}")).collect()
    }
}

impl LatexBasis for ChenFraction {
    /// Two-row bracket: exponents on top, variables below.
    fn latex(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let top: Vec<String> = self.exponents().iter().map(|e| e.to_string()).collect();
        let bottom: Vec<String> = self.variables().iter().map(|v| format!("x_{{{v}}}")).collect();
        format!(
            "\\left[\\begin{{smallmatrix}}{}\\\\{}\\end{{smallmatrix}}\\right]",
            top.join(" & "),
            bottom.join(" & ")
        )
    }
}

impl<A: LatexBasis, B: LatexBasis> LatexBasis for (A, B) {
    fn latex(&self) -> String {
        format!("{}\\otimes {}", self.0.latex(), self.1.latex())
    }
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn format_latex<B: Ord + Clone + LatexBasis>(v: &LinComb<B>) -> String {
    join_terms(v.iter().map(|(b, c)| (c, b.latex())), latex_coeff)
}

/// Renders `v` as a relation among zeta values, e.g. `\zeta(3)-\zeta(2,1)=0`.
pub fn format_zeta_relation(v: &HVector) -> String {
    let lhs = join_terms(
        v.iter().map(|(s, c)| {
            let basis = if s.is_unit() {
                "1".to_string()
            } else {
                let e: Vec<String> = s.entries().iter().map(|x| x.to_string()).collect();
                format!("\\zeta({})", e.join(","))
            };
            (c, basis)
        }),
        latex_coeff,
    );
    format!("{lhs}=0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parserio::{parse_frac_vector, parse_htensor, parse_hvector};

    #[test]
    fn tensor_rendering() {
        let t = parse_htensor("[]⊗[1,2] + [1]⊗[2]").unwrap();
        assert_eq!(format_latex(&t), "{\\bf 1}\\otimes [1,2]+[1]\\otimes [2]");
        let t = parse_htensor("-[2]⊗[1]").unwrap();
        assert_eq!(format_latex(&t), "-[2]\\otimes [1]");
    }

    #[test]
    fn zeta_relation() {
        let v = parse_hvector("[3]-[2,1]").unwrap();
        assert_eq!(format_zeta_relation(&v), "\\zeta(3)-\\zeta(2,1)=0");
    }

    #[test]
    fn coefficients_and_fractions() {
        assert_eq!(format_latex(&parse_hvector("-1/2[1]+2[2]").unwrap()), "-\\frac{1}{2}[1]+2[2]");
        let f = parse_frac_vector("<[1,1];(1,2)>").unwrap();
        assert_eq!(
            format_latex(&f),
            "\\left[\\begin{smallmatrix}1 & 1\\\\x_{1} & x_{2}\\end{smallmatrix}\\right]"
        );
    }
}
