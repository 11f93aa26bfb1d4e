//! Reduction modulo a set of monic polynomials.
//!
//! Rewriting always replaces the occurrence of the smallest relation id, and
//! among its occurrences the leftmost one. Normal forms are therefore
//! deterministic even when the system is not confluent.

use std::sync::Arc;

use num_traits::One;

use thiserror::Error;

use crate::index::SubwordIndex;
use crate::poly::{format_rational, NcPolynomial, PolyError, Rational};
use crate::word::{Alphabet, Occurrence, Order, Word, WordError};

/// Default ceiling on `irr_words` degree.
pub const DEFAULT_IRR_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("relation {0} is not monic")]
    NotMonic(usize),
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("relation {0} duplicates relation {1}")]
    Duplicate(usize, usize),
    #[error("{0} order is not a monomial well-order; rewrite systems use deglex")]
    NotMonomialOrder(&'static str),
    #[error("cannot reduce the zero polynomial")]
    ZeroPolynomial,
    #[error("max_deg {requested} exceeds the configured cap {cap}")]
    DegreeCap { requested: usize, cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

impl From<PolyError> for RewriteError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Zero => RewriteError::ZeroPolynomial,
            PolyError::Word(w) => RewriteError::Word(w),
        }
    }
}

/// A monic relation split into its leading word and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub poly: NcPolynomial,
    pub lead: Word,
    /// `poly - lead`
    pub tail: NcPolynomial,
}

impl Relation {
    /// `poly` must be monic under deg-lex.
    pub fn new(poly: NcPolynomial) -> Option<Self> {
        let (lead, c) = poly.leading(Order::DegLex).ok()?;
        if !c.is_one() {
            return None;
        }
        let lead = lead.clone();
        let mut tail = poly.clone();
        tail.add_term(lead.clone(), -Rational::one());
        Some(Relation { poly, lead, tail })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub relation: usize,
    pub occurrence: Occurrence,
    pub coeff: Rational,
}

/// Rewrites applied during a reduction, in order.
///
/// `input = output + Σ coeff · prefix · relation · suffix`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.steps.extend(other.steps);
    }

    /// Rebuilds the reduced input from `output`, looking relations up by id.
    pub fn replay_with<'a, F>(&self, output: &NcPolynomial, mut lookup: F) -> NcPolynomial
    where
        F: FnMut(usize) -> &'a NcPolynomial,
    {
        let mut acc = output.clone();
        for s in &self.steps {
            acc.add_scaled_sandwich(
                &s.coeff,
                &s.occurrence.prefix,
                lookup(s.relation),
                &s.occurrence.suffix,
            );
        }
        acc
    }

    pub fn replay(&self, output: &NcPolynomial, system: &RewriteSystem) -> NcPolynomial {
        self.replay_with(output, |id| {
            &system
                .relation(id)
                .expect("trace names a relation outside the system")
                .poly
        })
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> serde_json::Value {
        serde_json::Value::Array(
            self.steps
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "relation": s.relation,
                        "prefix": alphabet.render(&s.occurrence.prefix),
                        "suffix": alphabet.render(&s.occurrence.suffix),
                        "coeff": format_rational(&s.coeff),
                    })
                })
                .collect(),
        )
    }
}

/// A set of monic relations indexed by leading word.
///
/// Ids are stable: removing a relation leaves a hole rather than shifting
/// later ids.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    relations: Vec<Option<Arc<Relation>>>,
    index: SubwordIndex,
    live: usize,
}

impl RewriteSystem {
    pub fn empty(alphabet: Alphabet) -> Self {
        RewriteSystem {
            alphabet,
            relations: Vec::new(),
            index: SubwordIndex::new(),
            live: 0,
        }
    }

    /// Strict constructor: every relation must be nonzero, monic and
    /// distinct. Relation `i` gets id `i`.
    pub fn new(
        alphabet: Alphabet,
        order: Order,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self, RewriteError> {
        if order != Order::DegLex {
            return Err(RewriteError::NotMonomialOrder(order.name()));
        }
        let mut rels = Vec::with_capacity(relations.len());
        for (i, p) in relations.into_iter().enumerate() {
            p.check(&alphabet)?;
            if p.is_zero() {
                return Err(RewriteError::ZeroRelation(i));
            }
            let r = Relation::new(p).ok_or(RewriteError::NotMonic(i))?;
            if let Some(j) = rels.iter().position(|q: &Relation| q.poly == r.poly) {
                return Err(RewriteError::Duplicate(i, j));
            }
            rels.push(r);
        }
        let index = SubwordIndex::build(rels.iter().map(|r| &r.lead));
        let live = rels.len();
        Ok(RewriteSystem {
            alphabet,
            relations: rels.into_iter().map(|r| Some(Arc::new(r))).collect(),
            index,
            live,
        })
    }

    /// Lenient constructor: scales every relation to be monic and drops
    /// zeros and duplicates.
    pub fn from_polynomials<I>(alphabet: Alphabet, relations: I) -> Result<Self, RewriteError>
    where
        I: IntoIterator<Item = NcPolynomial>,
    {
        let mut kept: Vec<NcPolynomial> = Vec::new();
        for p in relations {
            if p.is_zero() {
                continue;
            }
            let m = p.make_monic(Order::DegLex)?;
            if !kept.contains(&m) {
                kept.push(m);
            }
        }
        RewriteSystem::new(alphabet, Order::DegLex, kept)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> Order {
        Order::DegLex
    }

    /// Number of live relations.
    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// One past the largest id ever used.
    pub fn id_bound(&self) -> usize {
        self.relations.len()
    }

    pub fn relation(&self, id: usize) -> Option<&Relation> {
        self.relations.get(id).and_then(|r| r.as_deref())
    }

    /// Live relations with their ids, ascending by id.
    pub fn relations(&self) -> impl Iterator<Item = (usize, &Relation)> {
        self.relations
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_deref().map(|r| (i, r)))
    }

    pub fn polynomials(&self) -> Vec<NcPolynomial> {
        self.relations().map(|(_, r)| r.poly.clone()).collect()
    }

    /// Adds a monic relation under the next free id.
    pub(crate) fn push(&mut self, rel: Relation) -> usize {
        let id = self.relations.len();
        self.index.insert(id, rel.lead.clone());
        self.relations.push(Some(Arc::new(rel)));
        self.live += 1;
        id
    }

    pub(crate) fn retire(&mut self, id: usize) -> Option<Arc<Relation>> {
        let r = self.relations.get_mut(id)?.take()?;
        self.index.remove(id);
        self.live -= 1;
        Some(r)
    }

    /// Ids renumbered densely in the given order.
    pub(crate) fn compacted(&self, ids: &[usize]) -> RewriteSystem {
        let rels: Vec<Relation> = ids
            .iter()
            .map(|&i| self.relation(i).expect("live id").clone())
            .collect();
        let index = SubwordIndex::build(rels.iter().map(|r| &r.lead));
        RewriteSystem {
            alphabet: self.alphabet.clone(),
            live: rels.len(),
            relations: rels.into_iter().map(|r| Some(Arc::new(r))).collect(),
            index,
        }
    }

    /// Where the smallest-id relation first occurs in `w`.
    pub fn find_reducer(&self, w: &Word) -> Option<(usize, Occurrence)> {
        self.index
            .first_hit(w.letters())
            .map(|h| (h.id, Occurrence::at(w, h.start, h.len)))
    }

    /// Every relation occurrence inside `w`, by id then position.
    pub fn reducers_of(&self, w: &Word) -> Vec<(usize, Occurrence)> {
        self.index
            .all_hits(w.letters())
            .into_iter()
            .map(|h| (h.id, Occurrence::at(w, h.start, h.len)))
            .collect()
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.index.contains_any(w.letters())
    }

    /// One rewrite of the greatest reducible term of `f`, or `None` when
    /// every term is irreducible.
    pub fn reduce_step(
        &self,
        f: &NcPolynomial,
    ) -> Result<Option<(NcPolynomial, ReductionStep)>, RewriteError> {
        if f.is_zero() {
            return Err(RewriteError::ZeroPolynomial);
        }
        for (w, c) in f.terms().rev() {
            if let Some((id, occ)) = self.find_reducer(w) {
                let rel = self.relation(id).expect("index is consistent");
                let mut out = f.clone();
                out.add_scaled_sandwich(&-c.clone(), &occ.prefix, &rel.poly, &occ.suffix);
                let step = ReductionStep {
                    relation: id,
                    occurrence: occ,
                    coeff: c.clone(),
                };
                return Ok(Some((out, step)));
            }
        }
        Ok(None)
    }

    fn reduce_impl(
        &self,
        f: &NcPolynomial,
        mut trace: Option<&mut ReductionTrace>,
    ) -> NcPolynomial {
        let mut work = f.clone();
        let mut out = NcPolynomial::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_reducer(&w) {
                Some((id, occ)) => {
                    let rel = self.relation(id).expect("index is consistent");
                    work.add_scaled_sandwich(&-c.clone(), &occ.prefix, &rel.tail, &occ.suffix);
                    if let Some(t) = trace.as_deref_mut() {
                        t.steps.push(ReductionStep {
                            relation: id,
                            occurrence: occ,
                            coeff: c,
                        });
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    /// Full normal form with the rewrites that produced it.
    pub fn normal_form(&self, f: &NcPolynomial) -> (NcPolynomial, ReductionTrace) {
        let mut trace = ReductionTrace::default();
        let nf = self.reduce_impl(f, Some(&mut trace));
        (nf, trace)
    }

    /// Normal form without recording a trace.
    pub fn reduce(&self, f: &NcPolynomial) -> NcPolynomial {
        self.reduce_impl(f, None)
    }

    pub fn reduce_word(&self, w: &Word) -> NcPolynomial {
        self.reduce(&NcPolynomial::from_word(w.clone()))
    }

    /// All irreducible words of length at most `max_deg`, ascending deg-lex.
    pub fn irr_words(&self, max_deg: usize) -> Result<Vec<Word>, RewriteError> {
        self.irr_words_capped(max_deg, DEFAULT_IRR_CAP)
    }

    pub fn irr_words_capped(&self, max_deg: usize, cap: usize) -> Result<Vec<Word>, RewriteError> {
        if max_deg > cap {
            return Err(RewriteError::DegreeCap {
                requested: max_deg,
                cap,
            });
        }
        let mut letters: Vec<_> = self.alphabet.letters().collect();
        letters.sort();
        let mut all = Vec::new();
        let mut level = vec![Word::empty()];
        if self.is_reducible(&Word::empty()) {
            level.clear();
        }
        for deg in 0..=max_deg {
            all.extend(level.iter().cloned());
            if deg == max_deg {
                break;
            }
            let mut next = Vec::new();
            for w in &level {
                for &l in &letters {
                    let mut v = w.letters().to_vec();
                    v.push(l);
                    let cand = Word::from(v);
                    if !self.is_reducible(&cand) {
                        next.push(cand);
                    }
                }
            }
            level = next;
        }
        Ok(all)
    }

    /// Number of irreducible words of each length `0..=max_deg`.
    pub fn irr_counts(&self, max_deg: usize) -> Result<Vec<usize>, RewriteError> {
        let words = self.irr_words_capped(max_deg, max_deg.max(DEFAULT_IRR_CAP))?;
        let mut counts = vec![0; max_deg + 1];
        for w in words {
            counts[w.len()] += 1;
        }
        Ok(counts)
    }

    pub fn render(&self) -> Vec<String> {
        self.relations()
            .map(|(_, r)| r.poly.render(&self.alphabet))
            .collect()
    }
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self
                .relations()
                .map(|(i, r)| (i, &r.poly))
                .eq(other.relations().map(|(i, r)| (i, &r.poly)))
    }
}
