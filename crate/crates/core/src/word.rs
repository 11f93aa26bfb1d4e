//! Alphabets, associative words and the two word orders.
//!
//! A [`Letter`] stores its precedence rank directly: a larger rank is a
//! greater generator. An [`Alphabet`] lists generator names in strictly
//! descending precedence, so the first listed name gets the highest rank.
//!
//! Two orders live here and are never mixed implicitly:
//!
//! * [`lex_cmp`] compares letter by letter, and a proper prefix is *greater*
//!   than any of its extensions (`ab < a`). This is the order behind
//!   Lyndon-Shirshov words.
//! * [`deglex_cmp`] compares by length first, then letter by letter. This is
//!   the monomial order used for leading words. It is also the derived `Ord`
//!   on [`Word`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("letter rank {rank} is outside an alphabet of {size} generators")]
    ForeignLetter { rank: u16, size: usize },
    #[error("pattern must be a nonempty word")]
    EmptyPattern,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// A generator, identified by its precedence rank (larger is greater).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter(pub u16);

/// Ordered generator set. Cheap to clone.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

#[derive(PartialEq, Eq)]
struct AlphabetInner {
    // Listing order: index 0 is the greatest generator.
    names: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.inner.names.iter()).finish()
    }
}

impl Alphabet {
    /// Builds an alphabet from names listed greatest first.
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        assert!(names.len() <= u16::MAX as usize, "alphabet too large");
        let n = names.len();
        let mut lookup = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            let letter = Letter((n - 1 - i) as u16);
            if lookup.insert(name.clone(), letter).is_some() {
                return Err(WordError::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Alphabet {
            inner: Arc::new(AlphabetInner { names, lookup }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    /// Generator names, greatest first.
    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Letters, greatest first (same order as [`Alphabet::names`]).
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        let n = self.len();
        (0..n).map(move |i| Letter((n - 1 - i) as u16))
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.inner.lookup.get(name).copied()
    }

    pub fn name(&self, letter: Letter) -> &str {
        let n = self.len();
        &self.inner.names[n - 1 - letter.0 as usize]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (letter.0 as usize) < self.len()
    }

    /// Rejects words that use letters this alphabet does not have.
    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        match w.letters().iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(WordError::ForeignLetter {
                rank: l.0,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, WordError> {
        names
            .iter()
            .map(|n| {
                self.letter(n)
                    .ok_or_else(|| WordError::UnknownGenerator((*n).to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from)
    }

    pub fn lex_compare(&self, u: &Word, v: &Word) -> Result<Ordering, WordError> {
        self.check(u)?;
        self.check(v)?;
        Ok(lex_cmp(u.letters(), v.letters()))
    }

    pub fn deglex_compare(&self, u: &Word, v: &Word) -> Result<Ordering, WordError> {
        self.check(u)?;
        self.check(v)?;
        Ok(deglex_cmp(u.letters(), v.letters()))
    }

    /// Renders `w` with `sep` between generator names; the empty word is `1`.
    pub fn render_with(&self, w: &Word, sep: &str) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<&str> = w.letters().iter().map(|&l| self.name(l)).collect();
        parts.join(sep)
    }

    pub fn render(&self, w: &Word) -> String {
        self.render_with(w, "*")
    }
}

/// An element of the free monoid: a finite sequence of letters.
///
/// `Ord` is deg-lex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &Word, b: &Word) -> Word {
        let mut v = Vec::with_capacity(a.len() + self.len() + b.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&b.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, k: usize) -> Word {
        self.slice(0, k)
    }

    pub fn suffix_from(&self, k: usize) -> Word {
        self.slice(k, self.len())
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        !pattern.is_empty()
            && self
                .0
                .windows(pattern.len())
                .any(|win| win == pattern.letters())
    }

    /// Rank of the greatest letter, if any.
    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

/// Lexicographic order in which a proper prefix is greater (`ab < a`).
pub fn lex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    for (x, y) in u.iter().zip(v) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    // One is a prefix of the other; the shorter one wins.
    v.len().cmp(&u.len())
}

/// Length first, then letter by letter.
pub fn deglex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Which word order to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    #[default]
    DegLex,
    Lex,
}

impl Order {
    pub fn compare(self, u: &Word, v: &Word) -> Ordering {
        match self {
            Order::DegLex => deglex_cmp(u.letters(), v.letters()),
            Order::Lex => lex_cmp(u.letters(), v.letters()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Order::DegLex => "deglex",
            Order::Lex => "lex",
        }
    }
}

/// A located subword: `prefix · pattern · suffix` is the searched word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub prefix: Word,
    pub suffix: Word,
}

impl Occurrence {
    pub fn new(prefix: Word, suffix: Word) -> Self {
        Occurrence { prefix, suffix }
    }

    pub fn at(w: &Word, start: usize, len: usize) -> Self {
        Occurrence {
            prefix: w.prefix(start),
            suffix: w.suffix_from(start + len),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.prefix.is_empty() && self.suffix.is_empty()
    }

    pub fn replay(&self, pattern: &Word) -> Word {
        pattern.sandwich(&self.prefix, &self.suffix)
    }
}

/// Every occurrence of `u` in `w`, by increasing prefix length.
pub fn find_subwords(w: &Word, u: &Word) -> Result<Vec<Occurrence>, WordError> {
    if u.is_empty() {
        return Err(WordError::EmptyPattern);
    }
    if u.len() > w.len() {
        return Ok(Vec::new());
    }
    Ok(w.letters()
        .windows(u.len())
        .enumerate()
        .filter(|(_, win)| *win == u.letters())
        .map(|(i, _)| Occurrence::at(w, i, u.len()))
        .collect())
}

/// Lengths `k` for which the length-`k` suffix of `u` equals the length-`k`
/// prefix of `v`, with `k` strictly shorter than both words. Ascending.
pub fn find_overlaps(u: &Word, v: &Word) -> Vec<usize> {
    let (u, v) = (u.letters(), v.letters());
    let max = u.len().min(v.len());
    (1..max).filter(|&k| u[u.len() - k..] == v[..k]).collect()
}
