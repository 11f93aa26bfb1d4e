//! Arbitrary bracketings and their associative expansion.

use std::fmt;

use num_traits::One;

use crate::poly::{NcPolynomial, Rational};
use crate::word::{Alphabet, Letter, Word};

/// A bracketed word: a generator or `[left, right]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieMonomial {
    Leaf(Letter),
    Bracket(Box<LieMonomial>, Box<LieMonomial>),
}

impl LieMonomial {
    pub fn bracket(l: LieMonomial, r: LieMonomial) -> Self {
        LieMonomial::Bracket(Box::new(l), Box::new(r))
    }

    /// `[[x1, x2], x3] …`
    pub fn left_normed(letters: &[Letter]) -> Option<Self> {
        let (first, rest) = letters.split_first()?;
        Some(rest.iter().fold(LieMonomial::Leaf(*first), |acc, &l| {
            LieMonomial::bracket(acc, LieMonomial::Leaf(l))
        }))
    }

    /// The underlying associative word.
    pub fn word(&self) -> Word {
        let mut v = Vec::new();
        self.push_letters(&mut v);
        Word::from(v)
    }

    fn push_letters(&self, out: &mut Vec<Letter>) {
        match self {
            LieMonomial::Leaf(l) => out.push(*l),
            LieMonomial::Bracket(a, b) => {
                a.push_letters(out);
                b.push_letters(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            LieMonomial::Leaf(_) => 1,
            LieMonomial::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn children(&self) -> Option<(&LieMonomial, &LieMonomial)> {
        match self {
            LieMonomial::Leaf(_) => None,
            LieMonomial::Bracket(a, b) => Some((a, b)),
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            LieMonomial::Leaf(l) => alphabet.name(*l).to_string(),
            LieMonomial::Bracket(a, b) => {
                format!("[{},{}]", a.render(alphabet), b.render(alphabet))
            }
        }
    }
}

impl fmt::Debug for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieMonomial::Leaf(l) => write!(f, "{}", l.0),
            LieMonomial::Bracket(a, b) => write!(f, "[{a:?},{b:?}]"),
        }
    }
}

/// Expansion into the free associative algebra via `[u,v] = uv - vu`.
pub fn lie_expand(m: &LieMonomial) -> NcPolynomial {
    match m {
        LieMonomial::Leaf(l) => NcPolynomial::monomial(Word::letter(*l), Rational::one()),
        LieMonomial::Bracket(a, b) => commutator(&lie_expand(a), &lie_expand(b)),
    }
}

pub(crate) fn commutator(p: &NcPolynomial, q: &NcPolynomial) -> NcPolynomial {
    &p.concat_product(q) - &q.concat_product(p)
}
