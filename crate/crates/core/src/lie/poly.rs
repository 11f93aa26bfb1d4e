//! Lie polynomials in the NLSW basis.

use std::collections::btree_map;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{format_rational, NcPolynomial, Rational};
use crate::word::{lex_cmp, Alphabet, Word};

use super::lyndon::{bracket_letters, is_alsw_letters, standard_split};
use super::tree::{lie_expand, LieMonomial};
use super::{LieError, Nlsw};

/// A finite combination of NLSWs, keyed by their underlying ALSW.
///
/// The expansion of `[u]` has leading word `u` with coefficient 1, so the
/// leading word of a Lie polynomial is its deg-lex greatest key.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LiePolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl LiePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `[u]`.
    pub fn basis(u: &Word) -> Result<Self, LieError> {
        if u.is_empty() {
            return Err(LieError::EmptyWord);
        }
        if !is_alsw_letters(u.letters()) {
            return Err(LieError::NotAlsw(u.clone()));
        }
        Ok(Self::basis_unchecked(u.clone()))
    }

    pub(crate) fn basis_unchecked(u: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(u, Rational::one());
        LiePolynomial { terms }
    }

    pub fn from_nlsw(n: &Nlsw) -> Self {
        Self::basis_unchecked(n.word())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(
        terms: I,
    ) -> Result<Self, LieError> {
        let mut p = LiePolynomial::zero();
        for (w, c) in terms {
            if w.is_empty() {
                return Err(LieError::EmptyWord);
            }
            if !is_alsw_letters(w.letters()) {
                return Err(LieError::NotAlsw(w));
            }
            p.add_term(w, c);
        }
        Ok(p)
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

    /// `(ALSW, coefficient)` pairs, ascending deg-lex.
    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Word) -> Rational {
        self.terms.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, u: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &LiePolynomial) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> LiePolynomial {
        let mut out = LiePolynomial::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.leading().map(|(w, _)| w)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    pub fn make_monic(&self) -> Result<LiePolynomial, LieError> {
        let (_, c) = self.leading().ok_or(LieError::Zero)?;
        Ok(self.scale(&c.recip()))
    }

    /// Associative expansion `Σ c · expand([u])`.
    pub fn expand(&self) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (w, c) in &self.terms {
            let e = lie_expand(&bracket_letters(w.letters()));
            out.add_scaled_sandwich(c, &Word::empty(), &e, &Word::empty());
        }
        out
    }

    /// Terms written as NLSW brackets, greatest first:
    /// `[a,b] - (1/2) [[a,b],b]`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                let s = format_rational(&mag);
                if mag.is_integer() {
                    out.push_str(&s);
                } else {
                    out.push('(');
                    out.push_str(&s);
                    out.push(')');
                }
                out.push(' ');
            }
            out.push_str(&bracket_letters(w.letters()).render(alphabet));
        }
        out
    }
}

impl fmt::Debug for LiePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|(w, c)| (bracket_letters(w.letters()), format_rational(c))),
            )
            .finish()
    }
}

impl Add for &LiePolynomial {
    type Output = LiePolynomial;
    fn add(self, rhs: &LiePolynomial) -> LiePolynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &LiePolynomial {
    type Output = LiePolynomial;
    fn sub(self, rhs: &LiePolynomial) -> LiePolynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &LiePolynomial {
    type Output = LiePolynomial;
    fn neg(self) -> LiePolynomial {
        self.scale(&-Rational::one())
    }
}

/// Brackets in the NLSW basis, memoizing products of basis elements.
#[derive(Default)]
pub struct Bracketer {
    cache: HashMap<(Word, Word), LiePolynomial>,
}

impl Bracketer {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[[u], [v]]` for ALSWs `u`, `v`.
    pub fn basis_bracket(&mut self, u: &Word, v: &Word) -> LiePolynomial {
        if u == v {
            return LiePolynomial::zero();
        }
        if lex_cmp(u.letters(), v.letters()).is_lt() {
            return -&self.basis_bracket(v, u);
        }
        let key = (u.clone(), v.clone());
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let uv = u.concat(v);
        let out = match standard_split(u.letters()) {
            Some(k) if lex_cmp(&u.letters()[k..], v.letters()).is_gt() => {
                // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
                let u1 = u.prefix(k);
                let u2 = u.suffix_from(k);
                let left = self.basis_bracket(&u1, v);
                let t1 = self.bracket(&left, &LiePolynomial::basis_unchecked(u2.clone()));
                let right = self.basis_bracket(&u2, v);
                let t2 = self.bracket(&LiePolynomial::basis_unchecked(u1), &right);
                &t1 + &t2
            }
            _ => {
                debug_assert!(is_alsw_letters(uv.letters()));
                LiePolynomial::basis_unchecked(uv)
            }
        };
        self.cache.insert(key, out.clone());
        out
    }

    pub fn bracket(&mut self, p: &LiePolynomial, q: &LiePolynomial) -> LiePolynomial {
        let mut out = LiePolynomial::zero();
        for (u, c) in p.terms() {
            for (v, d) in q.terms() {
                let b = self.basis_bracket(u, v);
                out.add_scaled(&(c * d), &b);
            }
        }
        out
    }

    pub fn to_basis(&mut self, m: &LieMonomial) -> LiePolynomial {
        match m {
            LieMonomial::Leaf(l) => LiePolynomial::basis_unchecked(Word::letter(*l)),
            LieMonomial::Bracket(a, b) => {
                let pa = self.to_basis(a);
                let pb = self.to_basis(b);
                self.bracket(&pa, &pb)
            }
        }
    }
}

/// Rewrites an arbitrary bracketing in the NLSW basis.
pub fn to_nlsw_basis(m: &LieMonomial) -> LiePolynomial {
    Bracketer::new().to_basis(m)
}
