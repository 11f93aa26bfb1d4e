//! Inclusion and intersection compositions of monic associative polynomials.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::par::Parallelism;
use crate::poly::{JsonTerm, NcPolynomial};
use crate::rewrite::RewriteSystem;
use crate::word::{find_overlaps, find_subwords, Alphabet, Order, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parent {0} is not monic")]
    NotMonic(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositionKind {
    Inclusion,
    Intersection,
}

/// Where two leading words meet. Enough to rebuild the composition value
/// from the parents.
///
/// For inclusion `w = lead(f)` and `lead(g)` sits at `position` inside it.
/// For intersection `w = lead(f)·b = a·lead(g)` and `position = |a|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub w: Word,
    pub kind: CompositionKind,
    pub f_id: usize,
    pub g_id: usize,
    pub position: usize,
}

impl Ambiguity {
    /// `(a, b)` such that the value is `f·b - a·g` (intersection) or
    /// `f - a·g·b` (inclusion).
    pub fn contexts(&self, f_lead_len: usize, g_lead_len: usize) -> (Word, Word) {
        match self.kind {
            CompositionKind::Inclusion => (
                self.w.prefix(self.position),
                self.w.suffix_from(self.position + g_lead_len),
            ),
            CompositionKind::Intersection => {
                (self.w.prefix(self.position), self.w.suffix_from(f_lead_len))
            }
        }
    }

    pub fn value(&self, f: &NcPolynomial, g: &NcPolynomial) -> NcPolynomial {
        let flen = f.leading_word(Order::DegLex).map_or(0, Word::len);
        let glen = g.leading_word(Order::DegLex).map_or(0, Word::len);
        let (a, b) = self.contexts(flen, glen);
        let empty = Word::empty();
        let mut v = match self.kind {
            CompositionKind::Inclusion => f.clone(),
            CompositionKind::Intersection => f.sandwich(&empty, &b),
        };
        let minus_one = -crate::poly::int(1);
        match self.kind {
            CompositionKind::Inclusion => v.add_scaled_sandwich(&minus_one, &a, g, &b),
            CompositionKind::Intersection => v.add_scaled_sandwich(&minus_one, &a, g, &empty),
        }
        v
    }

    pub fn into_composition(self, value: NcPolynomial) -> Composition {
        Composition {
            kind: self.kind,
            f_id: self.f_id,
            g_id: self.g_id,
            w: self.w,
            position: self.position,
            value,
        }
    }
}

impl PartialOrd for Ambiguity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical processing order: `w` deg-lex, then kind, parents, position.
impl Ord for Ambiguity {
    fn cmp(&self, other: &Self) -> Ordering {
        self.w
            .cmp(&other.w)
            .then(self.kind.cmp(&other.kind))
            .then(self.f_id.cmp(&other.f_id))
            .then(self.g_id.cmp(&other.g_id))
            .then(self.position.cmp(&other.position))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub f_id: usize,
    pub g_id: usize,
    pub w: Word,
    pub position: usize,
    pub value: NcPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub kind: CompositionKind,
    pub w: String,
    pub f_id: usize,
    pub g_id: usize,
    pub value: Vec<JsonTerm>,
}

impl Composition {
    pub fn ambiguity(&self) -> Ambiguity {
        Ambiguity {
            w: self.w.clone(),
            kind: self.kind,
            f_id: self.f_id,
            g_id: self.g_id,
            position: self.position,
        }
    }

    pub fn report(&self, alphabet: &Alphabet) -> CompositionReport {
        CompositionReport {
            kind: self.kind,
            w: alphabet.render(&self.w),
            f_id: self.f_id,
            g_id: self.g_id,
            value: self.value.to_json_terms(alphabet),
        }
    }
}

fn lead_of(id: usize, p: &NcPolynomial) -> Result<&Word, CompositionError> {
    if !p.is_monic(Order::DegLex) {
        return Err(CompositionError::NotMonic(id));
    }
    Ok(p.leading_word(Order::DegLex)
        .expect("monic implies nonzero"))
}

/// Intersection ambiguities of `lead(f)` followed by `lead(g)`.
pub fn intersection_ambiguities(
    f_id: usize,
    f_lead: &Word,
    g_id: usize,
    g_lead: &Word,
) -> Vec<Ambiguity> {
    find_overlaps(f_lead, g_lead)
        .into_iter()
        .map(|k| Ambiguity {
            w: f_lead.concat(&g_lead.suffix_from(k)),
            kind: CompositionKind::Intersection,
            f_id,
            g_id,
            position: f_lead.len() - k,
        })
        .collect()
}

/// Inclusion ambiguities of `lead(g)` inside `lead(f)`. The identity
/// placement of a relation inside itself is skipped.
pub fn inclusion_ambiguities(
    f_id: usize,
    f_lead: &Word,
    g_id: usize,
    g_lead: &Word,
) -> Vec<Ambiguity> {
    find_subwords(f_lead, g_lead)
        .unwrap_or_default()
        .into_iter()
        .filter(|occ| !(f_id == g_id && occ.is_trivial()))
        .map(|occ| Ambiguity {
            w: f_lead.clone(),
            kind: CompositionKind::Inclusion,
            f_id,
            g_id,
            position: occ.prefix.len(),
        })
        .collect()
}

/// Every ambiguity between an ordered pair of leading words.
pub fn pair_ambiguities(f_id: usize, f_lead: &Word, g_id: usize, g_lead: &Word) -> Vec<Ambiguity> {
    let mut v = intersection_ambiguities(f_id, f_lead, g_id, g_lead);
    v.extend(inclusion_ambiguities(f_id, f_lead, g_id, g_lead));
    v
}

pub fn intersection_compositions(
    f_id: usize,
    f: &NcPolynomial,
    g_id: usize,
    g: &NcPolynomial,
) -> Result<Vec<Composition>, CompositionError> {
    let (fl, gl) = (lead_of(f_id, f)?, lead_of(g_id, g)?);
    Ok(intersection_ambiguities(f_id, fl, g_id, gl)
        .into_iter()
        .map(|a| {
            let v = a.value(f, g);
            a.into_composition(v)
        })
        .collect())
}

pub fn inclusion_compositions(
    f_id: usize,
    f: &NcPolynomial,
    g_id: usize,
    g: &NcPolynomial,
) -> Result<Vec<Composition>, CompositionError> {
    let (fl, gl) = (lead_of(f_id, f)?, lead_of(g_id, g)?);
    Ok(inclusion_ambiguities(f_id, fl, g_id, gl)
        .into_iter()
        .map(|a| {
            let v = a.value(f, g);
            a.into_composition(v)
        })
        .collect())
}

pub fn is_trivial(c: &Composition, system: &RewriteSystem) -> bool {
    system.reduce(&c.value).is_zero()
}

/// All ambiguities among live relations, both orders of every pair and
/// every self-pair, with `|w| <= max_deg` when given. Canonically sorted.
pub fn system_ambiguities(system: &RewriteSystem, max_deg: Option<usize>) -> Vec<Ambiguity> {
    let rels: Vec<(usize, &Word)> = system.relations().map(|(i, r)| (i, &r.lead)).collect();
    let mut out = Vec::new();
    for &(fi, fl) in &rels {
        for &(gi, gl) in &rels {
            out.extend(
                pair_ambiguities(fi, fl, gi, gl)
                    .into_iter()
                    .filter(|a| max_deg.is_none_or(|d| a.w.len() <= d)),
            );
        }
    }
    out.sort();
    out
}

/// Every composition of the system with nonzero normal form, ordered by
/// ambiguity. Each returned value is the unreduced composition.
pub fn nontrivial_compositions(
    system: &RewriteSystem,
    max_deg: Option<usize>,
    par: &Parallelism,
) -> Vec<Composition> {
    let ambs = system_ambiguities(system, max_deg);
    let verdicts = par.map(&ambs, |a| {
        let f = &system.relation(a.f_id).expect("live").poly;
        let g = &system.relation(a.g_id).expect("live").poly;
        let v = a.value(f, g);
        let trivial = system.reduce(&v).is_zero();
        (v, trivial)
    });
    ambs.into_iter()
        .zip(verdicts)
        .filter(|(_, (_, trivial))| !trivial)
        .map(|(a, (v, _))| a.into_composition(v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::rewrite::RewriteSystem;

    fn alpha(names: &[&str]) -> Alphabet {
        Alphabet::new(names.iter().copied()).unwrap()
    }

    fn w(x: &Alphabet, s: &str) -> Word {
        if s == "1" {
            return Word::empty();
        }
        s.chars()
            .map(|c| x.letter(&c.to_string()).unwrap())
            .collect()
    }

    fn poly(x: &Alphabet, terms: &[(i64, &str)]) -> NcPolynomial {
        NcPolynomial::from_terms(terms.iter().map(|(c, s)| (w(x, s), int(*c))))
    }

    #[test]
    fn commutator_intersection() {
        let x = alpha(&["x", "y", "z"]);
        let f = poly(&x, &[(1, "xy"), (-1, "yx")]);
        let g = poly(&x, &[(1, "yz"), (-1, "zy")]);
        let cs = intersection_compositions(0, &f, 1, &g).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].w, w(&x, "xyz"));
        assert_eq!(cs[0].value, poly(&x, &[(1, "xzy"), (-1, "yxz")]));
        let h = poly(&x, &[(1, "xz"), (-1, "zx")]);
        let s = RewriteSystem::new(x.clone(), Order::DegLex, vec![f, g, h]).unwrap();
        assert!(is_trivial(&cs[0], &s));
    }

    #[test]
    fn self_overlaps() {
        let x = alpha(&["a", "b"]);
        let f = poly(&x, &[(1, "ab"), (-1, "ba")]);
        assert!(intersection_compositions(0, &f, 0, &f).unwrap().is_empty());
        let f = poly(&x, &[(1, "aba"), (-1, "b")]);
        let cs = intersection_compositions(0, &f, 0, &f).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].w, w(&x, "ababa"));
        assert_eq!(cs[0].value, poly(&x, &[(1, "abb"), (-1, "bba")]));
    }

    #[test]
    fn inclusion_examples() {
        let x = alpha(&["a", "b", "c"]);
        let f = poly(&x, &[(1, "abab"), (-1, "b")]);
        let g = poly(&x, &[(1, "ba"), (-1, "c")]);
        let cs = inclusion_compositions(0, &f, 1, &g).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].w, w(&x, "abab"));
        assert_eq!(cs[0].value, poly(&x, &[(1, "acb"), (-1, "b")]));

        let h = poly(&x, &[(1, "cc"), (-1, "b")]);
        assert!(inclusion_compositions(0, &f, 1, &h).unwrap().is_empty());

        let aa = poly(&x, &[(1, "aa"), (-1, "1")]);
        let a = poly(&x, &[(1, "a")]);
        let cs = inclusion_compositions(0, &aa, 1, &a).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!((cs[0].position, cs[1].position), (0, 1));
    }

    #[test]
    fn triviality() {
        let x = alpha(&["a", "b", "c"]);
        let s = RewriteSystem::new(
            x.clone(),
            Order::DegLex,
            vec![poly(&x, &[(1, "ab"), (-1, "ba")])],
        )
        .unwrap();
        let zero = Composition {
            kind: CompositionKind::Inclusion,
            f_id: 0,
            g_id: 0,
            w: w(&x, "ab"),
            position: 0,
            value: NcPolynomial::zero(),
        };
        assert!(is_trivial(&zero, &s));
        let c = Composition {
            value: poly(&x, &[(1, "acb"), (-1, "b")]),
            ..zero
        };
        assert!(!is_trivial(&c, &s));
    }

    #[test]
    fn non_monic_rejected() {
        let x = alpha(&["a", "b"]);
        let f = poly(&x, &[(2, "ab")]);
        let g = poly(&x, &[(1, "b")]);
        assert_eq!(
            intersection_compositions(0, &f, 1, &g).unwrap_err(),
            CompositionError::NotMonic(0)
        );
        assert_eq!(
            inclusion_compositions(1, &g, 0, &f).unwrap_err(),
            CompositionError::NotMonic(0)
        );
    }
}
