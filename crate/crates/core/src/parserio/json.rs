use num::{BigInt, Signed, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chenfrac::{ChenFraction, FracTensorVector, FracVector};
use crate::error::{Error, Result};
use crate::hcore::{Composition, HTensorVector, HVector, LinComb, Rational};
use crate::words::{Word, WordVector};

/// Types with a fixed JSON schema. Coefficients are always strings `"p/q"`
/// with `q > 0`; vectors list their terms in canonical order.
pub trait JsonForm: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

pub fn to_json<T: JsonForm>(v: &T) -> Value {
    v.to_json()
}

pub fn from_json<T: JsonForm>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    T::from_json(&v)
}

/// Serializes to a JSON string and reads it back.
pub fn roundtrip_json<T: JsonForm>(v: &T) -> Result<T> {
    from_json(&v.to_json().to_string())
}

fn coeff_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn parse_coeff(s: &str) -> Result<Rational> {
    let bad = || Error::Schema(format!("coefficient {s:?} is not of the form \"p/q\" with q > 0"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let p_body = p.strip_prefix('-').unwrap_or(p);
    if !digits(p_body) || !digits(q) {
        return Err(bad());
    }
    let (p, q): (BigInt, BigInt) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
    if q.is_zero() || q.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn decode<T: DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Schema(e.to_string()))
}

fn encode<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
struct Terms<T> {
    terms: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct CompTerm {
    coeff: String,
    comp: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct CompTensorTerm {
    coeff: String,
    left: Vec<u32>,
    right: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct WordForm {
    letters: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct WordTerm {
    coeff: String,
    letters: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct FracForm {
    exponents: Vec<u32>,
    variables: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct FracTerm {
    coeff: String,
    frac: FracForm,
}

#[derive(Serialize, Deserialize)]
struct FracTensorTerm {
    coeff: String,
    left: FracForm,
    right: FracForm,
}

fn comp(entries: Vec<u32>) -> Result<Composition> {
    Composition::new(entries).map_err(|e| Error::Schema(e.to_string()))
}

fn frac_form(f: &ChenFraction) -> FracForm {
    FracForm { exponents: f.exponents().to_vec(), variables: f.variables().to_vec() }
}

fn frac(form: FracForm) -> Result<ChenFraction> {
    ChenFraction::new(form.exponents, form.variables).map_err(|e| Error::Schema(e.to_string()))
}

fn collect<B: Ord + Clone, T>(terms: Vec<T>, mut f: impl FnMut(T) -> Result<(B, Rational)>) -> Result<LinComb<B>> {
    let mut out = LinComb::zero();
    for t in terms {
        let (b, c) = f(t)?;
        out.add_term(b, c);
    }
    Ok(out)
}

impl JsonForm for Composition {
    fn to_json(&self) -> Value {
        encode(&self.entries())
    }

    fn from_json(v: &Value) -> Result<Self> {
        comp(decode(v)?)
    }
}

impl JsonForm for HVector {
    fn to_json(&self) -> Value {
        let terms = self.iter().map(|(s, c)| CompTerm { coeff: coeff_string(c), comp: s.entries().to_vec() }).collect();
        encode(&Terms { terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let t: Terms<CompTerm> = decode(v)?;
        collect(t.terms, |x| Ok((comp(x.comp)?, parse_coeff(&x.coeff)?)))
    }
}

impl JsonForm for HTensorVector {
    fn to_json(&self) -> Value {
        let terms = self
            .iter()
            .map(|((a, b), c)| CompTensorTerm {
                coeff: coeff_string(c),
                left: a.entries().to_vec(),
                right: b.entries().to_vec(),
            })
            .collect();
        encode(&Terms { terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let t: Terms<CompTensorTerm> = decode(v)?;
        collect(t.terms, |x| Ok(((comp(x.left)?, comp(x.right)?), parse_coeff(&x.coeff)?)))
    }
}

impl JsonForm for Word {
    fn to_json(&self) -> Value {
        encode(&WordForm { letters: self.letters().to_vec() })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: WordForm = decode(v)?;
        Ok(Word::new(w.letters))
    }
}

impl JsonForm for WordVector {
    fn to_json(&self) -> Value {
        let terms = self.iter().map(|(w, c)| WordTerm { coeff: coeff_string(c), letters: w.letters().to_vec() }).collect();
        encode(&Terms { terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let t: Terms<WordTerm> = decode(v)?;
        collect(t.terms, |x| Ok((Word::new(x.letters), parse_coeff(&x.coeff)?)))
    }
}

impl JsonForm for ChenFraction {
    fn to_json(&self) -> Value {
        encode(&frac_form(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        frac(decode(v)?)
    }
}

impl JsonForm for FracVector {
    fn to_json(&self) -> Value {
        let terms = self.iter().map(|(f, c)| FracTerm { coeff: coeff_string(c), frac: frac_form(f) }).collect();
        encode(&Terms { terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let t: Terms<FracTerm> = decode(v)?;
        collect(t.terms, |x| Ok((frac(x.frac)?, parse_coeff(&x.coeff)?)))
    }
}

impl JsonForm for FracTensorVector {
    fn to_json(&self) -> Value {
        let terms = self
            .iter()
            .map(|((a, b), c)| FracTensorTerm { coeff: coeff_string(c), left: frac_form(a), right: frac_form(b) })
            .collect();
        encode(&Terms { terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let t: Terms<FracTensorTerm> = decode(v)?;
        collect(t.terms, |x| Ok(((frac(x.left)?, frac(x.right)?), parse_coeff(&x.coeff)?)))
    }
}
