//! Noncommutative polynomials with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Alphabet, Order, Word, WordError};

pub type Rational = BigRational;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `p` or `p/q`.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    Zero,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A finite linear combination of words. No zero coefficient is ever stored.
///
/// Terms are kept sorted deg-lex, so the deg-lex leading term is the last
/// entry; other orders scan.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn one() -> Self {
        NcPolynomial::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        NcPolynomial::monomial(w, Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut p = NcPolynomial::zero();
        p.add_term(w, c);
        p
    }

    /// `u - v`, the usual encoding of a relation `u = v`.
    pub fn binomial(u: Word, v: Word) -> Self {
        let mut p = NcPolynomial::from_word(u);
        p.add_term(v, -Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut p = NcPolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending deg-lex order.
    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// Adds `c·w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · a · f · b`
    pub fn add_scaled_sandwich(&mut self, c: &Rational, a: &Word, f: &NcPolynomial, b: &Word) {
        if c.is_zero() {
            return;
        }
        for (w, k) in &f.terms {
            self.add_term(w.sandwich(a, b), c * k);
        }
    }

    pub fn leading(&self, order: Order) -> Result<(&Word, &Rational), PolyError> {
        let found = match order {
            Order::DegLex => self.terms.iter().next_back(),
            Order::Lex => self
                .terms
                .iter()
                .max_by(|(u, _), (v, _)| order.compare(u, v)),
        };
        found.ok_or(PolyError::Zero)
    }

    pub fn leading_word(&self, order: Order) -> Result<&Word, PolyError> {
        self.leading(order).map(|(w, _)| w)
    }

    /// Removes and returns the deg-lex leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, Rational)> {
        self.terms.pop_last()
    }

    pub fn make_monic(&self, order: Order) -> Result<NcPolynomial, PolyError> {
        let (_, lc) = self.leading(order)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }

    pub fn is_monic(&self, order: Order) -> bool {
        matches!(self.leading(order), Ok((_, c)) if c.is_one())
    }

    pub fn scale(&self, c: &Rational) -> NcPolynomial {
        if c.is_zero() {
            return NcPolynomial::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn concat_product(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &Word, b: &Word) -> NcPolynomial {
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(a, b), c.clone()))
                .collect(),
        }
    }

    /// Applies a letter substitution to every word.
    pub fn map_words<F: FnMut(&Word) -> Word>(&self, mut f: F) -> NcPolynomial {
        NcPolynomial::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<(), WordError> {
        self.terms.keys().try_for_each(|w| alphabet.check(w))
    }

    /// Human form, highest term first: `a*b - 1/2 b*a + 1`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = alphabet.render(w);
            if mag.is_one() {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&format_rational(&mag));
            } else {
                out.push_str(&format!("({}) {}", format_rational(&mag), word));
            }
        }
        out
    }

    /// JSON-friendly terms, highest first.
    pub fn to_json_terms(&self, alphabet: &Alphabet) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| JsonTerm {
                coeff: format_rational(c),
                word: alphabet.render(w),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub word: String,
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| {
                let letters: Vec<String> = w.letters().iter().map(|l| l.0.to_string()).collect();
                format!("{}·[{}]", format_rational(c), letters.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.concat_product(rhs)
    }
}
