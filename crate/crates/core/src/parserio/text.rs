use num::{BigInt, Signed, Zero};

use crate::chenfrac::{ChenFraction, FracTensorVector, FracVector};
use crate::error::{Error, Result};
use crate::hcore::{Composition, HTensorVector, HVector, LinComb, Rational};
use crate::words::{Word, WordVector};

const UNIT: char = '𝟏';

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, at: usize, expected: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: at, expected: expected.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(self.pos, format!("'{token}'"))
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn number(&mut self, what: &str) -> Result<(usize, u32)> {
        match self.digits() {
            Some((at, d)) => match d.parse::<u32>() {
                Ok(n) => Ok((at, n)),
                Err(_) => self.err(at, format!("{what} small enough to fit in 32 bits")),
            },
            None => self.err(self.pos, what.to_string()),
        }
    }

    /// `[n,…]` with every entry `≥ min`, returning the entries.
    fn bracket_list(&mut self, open: &str, close: &str, min: u32, what: &str) -> Result<Vec<u32>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            let (at, n) = self.number(what)?;
            if n < min {
                return self.err(at, format!("{what} ≥ {min}"));
            }
            out.push(n);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(",") {
                return self.err(self.pos, format!("',' or '{close}'"));
            }
        }
    }

    fn unit(&mut self) -> bool {
        self.eat(&UNIT.to_string()) || self.eat("[]")
    }

    fn composition(&mut self) -> Result<Composition> {
        if self.eat(&UNIT.to_string()) {
            return Ok(Composition::unit());
        }
        match self.peek() {
            Some('[') => Ok(Composition::from_positive(self.bracket_list("[", "]", 1, "composition entry")?)),
            _ => self.err(self.pos, "composition such as [2,1]"),
        }
    }

    fn word(&mut self) -> Result<Word> {
        if self.unit() {
            return Ok(Word::empty());
        }
        if self.peek() != Some('x') {
            return self.err(self.pos, "word such as x0x1");
        }
        let mut letters = Vec::new();
        while self.peek() == Some('x') {
            self.pos += 1;
            if !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                return self.err(self.pos, "letter index after 'x'");
            }
            letters.push(self.number("letter index")?.1);
        }
        Ok(Word::new(letters))
    }

    fn fraction(&mut self) -> Result<ChenFraction> {
        if self.unit() {
            return Ok(ChenFraction::one());
        }
        self.skip_ws();
        let start = self.pos;
        if !self.eat("<") {
            return self.err(self.pos, "Chen fraction such as <[2,1];(1,3)>");
        }
        let exponents = self.bracket_list("[", "]", 1, "exponent")?;
        self.expect(";")?;
        let variables = self.bracket_list("(", ")", 1, "variable index")?;
        self.expect(">")?;
        ChenFraction::new(exponents, variables).or_else(|e| self.err(start, format!("valid Chen fraction ({e})")))
    }

    fn tensor_sep(&mut self) -> Result<()> {
        if self.eat("⊗") || self.eat("(x)") {
            Ok(())
        } else {
            self.err(self.pos, "'⊗' or '(x)'")
        }
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let Some((_, num)) = self.digits() else { return Ok(None) };
        let num: BigInt = num.parse().expect("digits");
        if self.eat("/") {
            let (at, den) = match self.digits() {
                Some((at, d)) => (at, d.parse::<BigInt>().expect("digits")),
                None => return self.err(self.pos, "denominator"),
            };
            if den.is_zero() {
                return self.err(at, "nonzero denominator");
            }
            Ok(Some(Rational::new(num, den)))
        } else {
            Ok(Some(Rational::from_integer(num)))
        }
    }

    /// Parses a full linear combination and requires the input to be consumed.
    fn lincomb<B: Ord + Clone>(&mut self, mut atom: impl FnMut(&mut Self) -> Result<B>) -> Result<LinComb<B>> {
        if self.src.trim() == "0" {
            return Ok(LinComb::zero());
        }
        let mut out = LinComb::zero();
        let mut first = true;
        loop {
            if self.at_end() {
                return self.err(self.pos, "term");
            }
            let mut negative = false;
            if self.eat("+") {
            } else if self.eat("-") || self.eat("−") {
                negative = true;
            } else if !first {
                return self.err(self.pos, "'+' or '-'");
            }
            let mut c = self.coefficient()?.unwrap_or_else(|| Rational::from_integer(1.into()));
            self.eat("*");
            let b = atom(self)?;
            if negative {
                c = -c;
            }
            out.add_term(b, c);
            first = false;
            if self.at_end() {
                return Ok(out);
            }
            if !matches!(self.peek(), Some('+' | '-' | '−')) {
                return self.err(self.pos, "'+' or '-'");
            }
        }
    }

    fn single<T>(&mut self, atom: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        let v = atom(self)?;
        if !self.at_end() {
            return self.err(self.pos, "end of input");
        }
        Ok(v)
    }
}

pub fn parse_composition(text: &str) -> Result<Composition> {
    Parser::new(text).single(Parser::composition)
}

pub fn parse_word(text: &str) -> Result<Word> {
    Parser::new(text).single(Parser::word)
}

pub fn parse_chen(text: &str) -> Result<ChenFraction> {
    Parser::new(text).single(Parser::fraction)
}

pub fn parse_hvector(text: &str) -> Result<HVector> {
    Parser::new(text).lincomb(Parser::composition)
}

pub fn parse_htensor(text: &str) -> Result<HTensorVector> {
    Parser::new(text).lincomb(|p| {
        let a = p.composition()?;
        p.tensor_sep()?;
        Ok((a, p.composition()?))
    })
}

pub fn parse_word_vector(text: &str) -> Result<WordVector> {
    Parser::new(text).lincomb(Parser::word)
}

pub fn parse_frac_vector(text: &str) -> Result<FracVector> {
    Parser::new(text).lincomb(Parser::fraction)
}

pub fn parse_frac_tensor(text: &str) -> Result<FracTensorVector> {
    Parser::new(text).lincomb(|p| {
        let a = p.fraction()?;
        p.tensor_sep()?;
        Ok((a, p.fraction()?))
    })
}

/// Basis elements with a plain-text rendering that [`parse_hvector`] and
/// friends accept back.
pub trait TextBasis {
    fn text(&self) -> String;
}

impl TextBasis for Composition {
    fn text(&self) -> String {
        self.to_string()
    }
}

impl TextBasis for Word {
    fn text(&self) -> String {
        self.to_string()
    }
}

impl TextBasis for ChenFraction {
    fn text(&self) -> String {
        self.to_string()
    }
}

impl<A: TextBasis, B: TextBasis> TextBasis for (A, B) {
    fn text(&self) -> String {
        format!("{}⊗{}", self.0.text(), self.1.text())
    }
}

/// Joins `(coefficient, rendered basis)` pairs as `a+2b-1/2c`; unit
/// coefficients are omitted and `0` stands for the empty sum.
pub(crate) fn join_terms<'a>(
    terms: impl Iterator<Item = (&'a Rational, String)>,
    coeff: impl Fn(&Rational) -> String,
) -> String {
    let mut out = String::new();
    for (c, basis) in terms {
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let abs = c.abs();
        if !abs.is_integer() || abs.numer() != &BigInt::from(1) {
            out.push_str(&coeff(&abs));
        }
        out.push_str(&basis);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_text<B: Ord + Clone + TextBasis>(v: &LinComb<B>) -> String {
    join_terms(v.iter().map(|(b, c)| (c, b.text())), |c| c.to_string())
}

pub fn format_hvector(v: &HVector) -> String {
    format_text(v)
}

pub fn format_htensor(v: &HTensorVector) -> String {
    format_text(v)
}

pub fn format_word_vector(v: &WordVector) -> String {
    format_text(v)
}

pub fn format_frac_vector(v: &FracVector) -> String {
    format_text(v)
}

pub fn format_frac_tensor(v: &FracTensorVector) -> String {
    format_text(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcore::{int, rat};

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn offset(r: Result<impl std::fmt::Debug>) -> usize {
        match r {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn hvector_examples() {
        assert_eq!(parse_hvector("[2,1]").unwrap(), HVector::basis(c(&[2, 1])));
        let v = parse_hvector("2[3,1]+[2,2]").unwrap();
        assert_eq!(v.coeff(&c(&[3, 1])), int(2));
        assert_eq!(v.coeff(&c(&[2, 2])), int(1));
        assert_eq!(offset(parse_hvector("[2,0]")), 3);
        assert_eq!(parse_hvector(" - 1/2 * [1] + 𝟏 ").unwrap().coeff(&c(&[1])), rat(-1, 2));
        assert_eq!(parse_hvector("[]").unwrap(), HVector::basis(Composition::unit()));
        assert!(parse_hvector("0").unwrap().is_zero());
    }

    #[test]
    fn error_offsets() {
        assert_eq!(offset(parse_hvector("[2,")), 3);
        assert_eq!(offset(parse_hvector("[1] [2]")), 4);
        assert_eq!(offset(parse_hvector("")), 0);
        assert_eq!(offset(parse_hvector("1/0[1]")), 2);
        assert_eq!(offset(parse_chen("<[1,1];(2,2)>")), 0);
        assert_eq!(offset(parse_hvector("[1]+")), 4);
    }

    #[test]
    fn other_types() {
        assert_eq!(parse_word("x0 x1 x3").unwrap(), Word::new(vec![0, 1, 3]));
        assert_eq!(parse_word("x0x1x3").unwrap(), Word::new(vec![0, 1, 3]));
        assert_eq!(parse_chen("<[2,1];(1,3)>").unwrap(), ChenFraction::new(vec![2, 1], vec![1, 3]).unwrap());
        assert_eq!(parse_chen("<[];()>").unwrap(), ChenFraction::one());
        let t = parse_htensor("[](x)[1,2] - [2]⊗[1]").unwrap();
        assert_eq!(t.coeff(&(c(&[2]), c(&[1]))), int(-1));
        assert_eq!(t.coeff(&(Composition::unit(), c(&[1, 2]))), int(1));
    }

    #[test]
    fn printing() {
        assert_eq!(format_hvector(&parse_hvector("[2,1]").unwrap()), "[2,1]");
        let t = parse_htensor("[1,2]⊗[] + []⊗[1,2] + [1]⊗[2] - [2]⊗[1]").unwrap();
        assert_eq!(format_htensor(&t), "[]⊗[1,2]+[1]⊗[2]-[2]⊗[1]+[1,2]⊗[]");
        assert_eq!(format_hvector(&HVector::zero()), "0");
        assert_eq!(format_hvector(&parse_hvector("-1/2[1]+3[2]").unwrap()), "-1/2[1]+3[2]");
    }
}
