//! Plactic monoids: Schensted insertion, tableaux, and presentations in
//! standard and row generators.
//!
//! Letters of `X = {x1 < … < xn}` are the integers `1..=n`.

use std::collections::HashMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::composition::{system_ambiguities, Composition};
use crate::par::Parallelism;
use crate::poly::NcPolynomial;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, Word};

use super::{oriented, CatalogError};

/// Largest alphabet with single-digit generator names.
pub const PLACTIC_MAX_N: usize = 9;

/// A nonempty nondecreasing word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row(Vec<usize>);

impl Row {
    pub fn new(letters: Vec<usize>) -> Result<Self, CatalogError> {
        if letters.is_empty() {
            return Err(CatalogError::BadParameter("a row is nonempty".into()));
        }
        if letters.windows(2).any(|p| p[0] > p[1]) || letters[0] == 0 {
            return Err(CatalogError::BadParameter(format!(
                "{letters:?} is not a row"
            )));
        }
        Ok(Row(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` dominates `other`: not longer, and letterwise strictly greater.
    pub fn dominates(&self, other: &Row) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(r, s)| r > s)
    }

    pub fn digits(&self) -> String {
        self.0.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

/// `R·x`: append `x` if that keeps a row, else replace the leftmost letter
/// strictly greater than `x` and return it as the bumped letter.
pub fn schensted_insert(r: &Row, x: usize) -> (Option<usize>, Row) {
    let mut letters = r.0.clone();
    match letters.iter().position(|&y| y > x) {
        None => {
            letters.push(x);
            (None, Row(letters))
        }
        Some(i) => {
            let y = std::mem::replace(&mut letters[i], x);
            (Some(y), Row(letters))
        }
    }
}

/// Result of multiplying two rows in the plactic monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowProduct {
    Single(Row),
    /// `upper` dominates `lower`; as a word, `upper·lower`.
    Pair {
        upper: Row,
        lower: Row,
    },
}

impl RowProduct {
    pub fn rows(&self) -> Vec<Row> {
        match self {
            RowProduct::Single(r) => vec![r.clone()],
            RowProduct::Pair { upper, lower } => vec![upper.clone(), lower.clone()],
        }
    }
}

/// `R·S`, inserting the letters of `S` into `R` left to right.
pub fn row_product(r: &Row, s: &Row) -> RowProduct {
    let mut lower = r.clone();
    let mut bumped = Vec::new();
    for &x in &s.0 {
        let (y, next) = schensted_insert(&lower, x);
        lower = next;
        bumped.extend(y);
    }
    if bumped.is_empty() {
        RowProduct::Single(lower)
    } else {
        RowProduct::Pair {
            upper: Row(bumped),
            lower,
        }
    }
}

/// A semistandard tableau built by row insertion. `rows[0]` is the first
/// (longest, bottom) row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Row>,
}

impl Tableau {
    pub fn new() -> Self {
        Tableau::default()
    }

    pub fn from_word(w: &[usize]) -> Self {
        let mut t = Tableau::new();
        for &x in w {
            t.insert(x);
        }
        t
    }

    pub fn insert(&mut self, mut x: usize) {
        for row in &mut self.rows {
            let (bumped, next) = schensted_insert(row, x);
            *row = next;
            match bumped {
                None => return,
                Some(y) => x = y,
            }
        }
        self.rows.push(Row(vec![x]));
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Row::len).collect()
    }

    /// Rows from the top (shortest) down, concatenated.
    pub fn row_reading(&self) -> Vec<usize> {
        self.rows
            .iter()
            .rev()
            .flat_map(|r| r.0.iter().copied())
            .collect()
    }

    /// Columns left to right, each read top down.
    pub fn column_reading(&self) -> Vec<usize> {
        let width = self.rows.first().map_or(0, Row::len);
        let mut out = Vec::new();
        for c in 0..width {
            for r in self.rows.iter().rev() {
                if let Some(&x) = r.0.get(c) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Rows as a word over the row generators, top down.
    pub fn row_word(&self) -> Vec<Row> {
        self.rows.iter().rev().cloned().collect()
    }
}

fn check_n(n: usize) -> Result<(), CatalogError> {
    if !(2..=PLACTIC_MAX_N).contains(&n) {
        return Err(CatalogError::BadParameter(format!(
            "plactic alphabets need 2 <= n <= {PLACTIC_MAX_N}, got {n}"
        )));
    }
    Ok(())
}

/// Generators `n > … > 1`.
pub fn plactic_alphabet(n: usize) -> Result<Alphabet, CatalogError> {
    check_n(n)?;
    Ok(Alphabet::new((1..=n).rev().map(|i| i.to_string()))?)
}

/// Letters of `w` as integers, for words over [`plactic_alphabet`].
pub fn plactic_digits(alphabet: &Alphabet, w: &Word) -> Vec<usize> {
    w.letters()
        .iter()
        .map(|&l| alphabet.name(l).parse().expect("digit generators"))
        .collect()
}

pub fn plactic_word(alphabet: &Alphabet, digits: &[usize]) -> Result<Word, CatalogError> {
    digits
        .iter()
        .map(|d| {
            alphabet
                .letter(&d.to_string())
                .ok_or_else(|| CatalogError::BadParameter(format!("no generator {d}")))
        })
        .collect()
}

/// The Knuth relations `kij = ikj` (`i <= j < k`) and `jki = jik`
/// (`i < j <= k`).
pub fn plactic_standard(n: usize) -> Result<Presentation, CatalogError> {
    let x = plactic_alphabet(n)?;
    let w = |d: [usize; 3]| plactic_word(&x, &d).expect("in range");
    let mut rels = Vec::new();
    for k in 1..=n {
        for j in 1..k {
            for i in 1..=j {
                rels.push(oriented(w([k, i, j]), w([i, k, j])));
            }
        }
    }
    for k in 1..=n {
        for j in 1..=k {
            for i in 1..j {
                rels.push(oriented(w([j, k, i]), w([j, i, k])));
            }
        }
    }
    rels.sort_by(|p, q| {
        p.leading_word(crate::word::Order::DegLex)
            .ok()
            .cmp(&q.leading_word(crate::word::Order::DegLex).ok())
    });
    Ok(Presentation::monoid(x, rels)?)
}

/// The eleven-relation Gröbner–Shirshov basis of the plactic monoid on
/// three letters.
pub fn plactic3_basis() -> Presentation {
    let x = plactic_alphabet(3).expect("n = 3");
    let pairs = [
        ("332", "323"),
        ("322", "232"),
        ("331", "313"),
        ("311", "131"),
        ("221", "212"),
        ("211", "121"),
        ("231", "213"),
        ("312", "132"),
        ("3212", "2321"),
        ("32131", "31321"),
        ("32321", "32132"),
    ];
    let digits = |s: &str| s.bytes().map(|b| (b - b'0') as usize).collect::<Vec<_>>();
    let rels = pairs
        .iter()
        .map(|(u, v)| {
            NcPolynomial::binomial(
                plactic_word(&x, &digits(u)).expect("in range"),
                plactic_word(&x, &digits(v)).expect("in range"),
            )
        })
        .collect();
    Presentation::monoid(x, rels)
        .expect("valid")
        .with_expected("gsb", "yes")
        .with_expected("relations", 11)
}

/// All rows over `1..=n` of length at most `max_len`, greatest first in
/// the deg-lex order on `X*`.
pub fn rows_up_to(n: usize, max_len: usize) -> Vec<Row> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for r in &layer {
            let from = r.last().copied().unwrap_or(1);
            for x in from..=n {
                let mut s = r.clone();
                s.push(x);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned().map(Row));
        layer = next;
    }
    out.sort_by(|a, b| (b.len(), &b.0).cmp(&(a.len(), &a.0)));
    out
}

/// The plactic monoid in row generators, truncated to rows of length at
/// most `max_len`.
#[derive(Clone, Debug)]
pub struct PlacticRows {
    pub n: usize,
    pub max_len: usize,
    /// Generators, greatest first, parallel to the alphabet.
    pub rows: Vec<Row>,
    pub presentation: Presentation,
    /// Pairs `R·S` whose product needs a row longer than `max_len`.
    pub dropped: usize,
    index: HashMap<Row, Letter>,
}

/// Outcome of checking the row relations on the ambiguities that the
/// truncation can decide.
#[derive(Clone, Debug)]
pub struct BoundedCertificate {
    pub max_len: usize,
    pub checked: usize,
    /// Ambiguities whose plactic class has a row longer than `max_len`.
    pub skipped: usize,
    pub failures: Vec<Composition>,
}

impl BoundedCertificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `R·S = R'·S'` for all rows of length at most `max_len` whose product
/// stays within that bound. Generators are named `r` followed by the
/// digits of the row.
pub fn plactic_rows(n: usize, max_len: usize) -> Result<PlacticRows, CatalogError> {
    check_n(n)?;
    if max_len == 0 {
        return Err(CatalogError::BadParameter(
            "max_len must be positive".into(),
        ));
    }
    let rows = rows_up_to(n, max_len);
    let alphabet = Alphabet::new(rows.iter().map(|r| format!("r{r}")))?;
    let index: HashMap<Row, Letter> = rows
        .iter()
        .map(|r| {
            (
                r.clone(),
                alphabet.letter(&format!("r{r}")).expect("declared"),
            )
        })
        .collect();
    let mut rels = Vec::new();
    let mut dropped = 0;
    for r in &rows {
        for s in &rows {
            let lhs = Word::from(vec![index[r], index[s]]);
            let product = row_product(r, s);
            let rhs: Option<Word> = product
                .rows()
                .iter()
                .map(|p| index.get(p).copied())
                .collect();
            match rhs {
                None => dropped += 1,
                Some(rhs) if rhs != lhs => rels.push(oriented(lhs, rhs)),
                Some(_) => {}
            }
        }
    }
    let generators = rows.len();
    let presentation = Presentation::monoid(alphabet, rels)?
        .with_expected("generators", generators)
        .with_expected("gsb", "bounded");
    Ok(PlacticRows {
        n,
        max_len,
        rows,
        presentation,
        dropped,
        index,
    })
}

impl PlacticRows {
    pub fn letter(&self, r: &Row) -> Option<Letter> {
        self.index.get(r).copied()
    }

    pub fn row(&self, l: Letter) -> &Row {
        &self.rows[self.rows.len() - 1 - l.0 as usize]
    }

    /// The underlying word over `X`.
    pub fn flatten(&self, w: &Word) -> Vec<usize> {
        w.letters()
            .iter()
            .flat_map(|&l| self.row(l).0.iter().copied())
            .collect()
    }

    /// Checks every composition whose ambiguity `w` has a plactic class
    /// with all rows of length at most `max_len`. In that class every
    /// row factor of every word is a nondecreasing subsequence, hence no
    /// longer than the first tableau row, so no dropped relation is ever
    /// needed.
    pub fn bounded_certificate(
        &self,
        par: &Parallelism,
    ) -> Result<BoundedCertificate, CatalogError> {
        let system = self.presentation.rewrite_system()?;
        let ambs = system_ambiguities(&system, None);
        let in_bounds: Vec<bool> = par.map(&ambs, |a| {
            let t = Tableau::from_word(&self.flatten(&a.w));
            t.rows().first().map_or(0, Row::len) <= self.max_len
        });
        let todo: Vec<_> = ambs
            .into_iter()
            .zip(&in_bounds)
            .filter(|(_, &ok)| ok)
            .map(|(a, _)| a)
            .collect();
        let skipped = in_bounds.iter().filter(|&&ok| !ok).count();
        let verdicts = par.map(&todo, |a| {
            let f = &system.relation(a.f_id).expect("live").poly;
            let g = &system.relation(a.g_id).expect("live").poly;
            let v = a.value(f, g);
            let trivial = system.reduce(&v).is_zero();
            (v, trivial)
        });
        let checked = todo.len();
        let failures = todo
            .into_iter()
            .zip(verdicts)
            .filter(|(_, (_, trivial))| !trivial)
            .map(|(a, (v, _))| a.into_composition(v))
            .collect();
        Ok(BoundedCertificate {
            max_len: self.max_len,
            checked,
            skipped,
            failures,
        })
    }
}

/// Rewrites words over the (untruncated) row alphabet with the relations
/// `R·S → R'·S'`, computing each relation when it is needed.
#[derive(Clone, Copy, Debug, Default)]
pub struct RowRewriter;

impl RowRewriter {
    /// Rewrites the pair at `i, i+1`. `None` if it is irreducible.
    pub fn rewrite_at(&self, w: &[Row], i: usize) -> Option<Vec<Row>> {
        let (r, s) = (&w[i], &w[i + 1]);
        if r.dominates(s) {
            return None;
        }
        let mut out = w[..i].to_vec();
        out.extend(row_product(r, s).rows());
        out.extend_from_slice(&w[i + 2..]);
        Some(out)
    }

    /// Leftmost rewriting to an irreducible word.
    pub fn normal_form(&self, w: &[Row]) -> Vec<Row> {
        let mut cur = w.to_vec();
        while let Some(i) =
            (0..cur.len().saturating_sub(1)).find(|&i| !cur[i].dominates(&cur[i + 1]))
        {
            cur = self.rewrite_at(&cur, i).expect("reducible pair");
        }
        cur
    }
}

/// A random row over `1..=n` of length `1..=max_len`.
pub fn random_row<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Row {
    let len = rng.gen_range(1..=max_len);
    let mut v: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n)).collect();
    v.sort_unstable();
    Row(v)
}

/// One row triple whose two bracketings disagree with each other or with
/// the tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityFailure {
    pub triple: [Row; 3],
    pub left: Vec<Row>,
    pub right: Vec<Row>,
    pub tableau: Vec<Row>,
}

#[derive(Clone, Debug)]
pub struct AssociativityReport {
    pub trials: usize,
    pub failures: Vec<AssociativityFailure>,
}

/// For seeded random rows `R, S, T`, compares the normal forms of
/// `(R·S)·T` and `R·(S·T)` with the tableau of `RST`.
pub fn row_associativity_trials(
    n: usize,
    max_len: usize,
    trials: usize,
    seed: u64,
    par: &Parallelism,
) -> Result<AssociativityReport, CatalogError> {
    check_n(n)?;
    if max_len == 0 {
        return Err(CatalogError::BadParameter(
            "max_len must be positive".into(),
        ));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let triples: Vec<[Row; 3]> = (0..trials)
        .map(|_| {
            [
                random_row(&mut rng, n, max_len),
                random_row(&mut rng, n, max_len),
                random_row(&mut rng, n, max_len),
            ]
        })
        .collect();
    let rw = RowRewriter;
    let outcomes = par.map(&triples, |t| {
        let w = t.to_vec();
        let left = rw
            .rewrite_at(&w, 0)
            .map_or_else(|| rw.normal_form(&w), |v| rw.normal_form(&v));
        let right = rw
            .rewrite_at(&w, 1)
            .map_or_else(|| rw.normal_form(&w), |v| rw.normal_form(&v));
        let letters: Vec<usize> = t.iter().flat_map(|r| r.0.iter().copied()).collect();
        let tableau = Tableau::from_word(&letters).row_word();
        if left == right && left == tableau {
            None
        } else {
            Some(AssociativityFailure {
                triple: t.clone(),
                left,
                right,
                tableau,
            })
        }
    });
    Ok(AssociativityReport {
        trials,
        failures: outcomes.into_iter().flatten().collect(),
    })
}
