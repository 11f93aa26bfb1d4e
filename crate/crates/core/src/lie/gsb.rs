//! Relative bracketing, Lie compositions and Lie normal forms.

use num_traits::One;

use crate::composition::{pair_ambiguities, Ambiguity, CompositionKind};
use crate::index::SubwordIndex;
use crate::par::Parallelism;
use crate::poly::{NcPolynomial, Rational};
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::word::{Alphabet, Letter, Word};

use super::lyndon::{alsw_factorization, is_alsw_letters, standard_split};
use super::poly::{Bracketer, LiePolynomial};
use super::LieError;

/// `[a s b]` relative to `lead(s)`: the normal `s`-word whose expansion
/// has leading word `a·lead(s)·b`.
pub fn special_bracket(a: &Word, s: &LiePolynomial, b: &Word) -> Result<LiePolynomial, LieError> {
    special_bracket_with(&mut Bracketer::new(), a, s, b)
}

pub(crate) fn special_bracket_with(
    br: &mut Bracketer,
    a: &Word,
    s: &LiePolynomial,
    b: &Word,
) -> Result<LiePolynomial, LieError> {
    let u = s.leading_word().ok_or(LieError::Zero)?;
    let w = u.sandwich(a, b);
    if !is_alsw_letters(w.letters()) {
        return Err(LieError::Hypothesis(w));
    }
    let target = (a.len(), a.len() + u.len());
    substitute(br, w.letters(), 0, w.len(), target, s).ok_or(LieError::Hypothesis(w))
}

// Value of the Shirshov bracketing of `w[lo..hi]` with the factor `[u c]`
// replaced by `[..[[s, c1], c2].., cn]`, where `u = w[target]`.
fn substitute(
    br: &mut Bracketer,
    w: &[Letter],
    lo: usize,
    hi: usize,
    target: (usize, usize),
    s: &LiePolynomial,
) -> Option<LiePolynomial> {
    let (p, q) = target;
    if let Some(k) = standard_split(&w[lo..hi]) {
        let m = lo + k;
        if q <= m {
            let left = substitute(br, w, lo, m, target, s)?;
            return Some(br.bracket(
                &left,
                &LiePolynomial::basis_unchecked(Word::from(&w[m..hi])),
            ));
        }
        if p >= m {
            let right = substitute(br, w, m, hi, target, s)?;
            return Some(br.bracket(
                &LiePolynomial::basis_unchecked(Word::from(&w[lo..m])),
                &right,
            ));
        }
    }
    if lo != p {
        return None;
    }
    let mut acc = s.clone();
    for c in alsw_factorization(&w[q..hi]) {
        acc = br.bracket(&acc, &LiePolynomial::basis_unchecked(c));
    }
    Some(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRelation {
    pub poly: LiePolynomial,
    pub lead: Word,
    pub expansion: NcPolynomial,
}

/// Monic Lie relations with their associative expansions, indexed by
/// leading word.
#[derive(Clone, Debug)]
pub struct LieSystem {
    alphabet: Alphabet,
    relations: Vec<LieRelation>,
    index: SubwordIndex,
}

impl LieSystem {
    /// Every relation must be monic.
    pub fn new(alphabet: Alphabet, polys: Vec<LiePolynomial>) -> Result<Self, LieError> {
        let mut relations = Vec::with_capacity(polys.len());
        for (i, p) in polys.into_iter().enumerate() {
            if !p.is_monic() {
                return Err(if p.is_zero() {
                    LieError::Zero
                } else {
                    LieError::NotMonic(i)
                });
            }
            for (w, _) in p.terms() {
                alphabet.check(w)?;
            }
            let lead = p.leading_word().expect("monic").clone();
            let expansion = p.expand();
            relations.push(LieRelation {
                poly: p,
                lead,
                expansion,
            });
        }
        let index = SubwordIndex::build(relations.iter().map(|r| &r.lead));
        Ok(LieSystem {
            alphabet,
            relations,
            index,
        })
    }

    /// Scales each relation to be monic and drops zeros.
    pub fn from_polynomials(
        alphabet: Alphabet,
        polys: Vec<LiePolynomial>,
    ) -> Result<Self, LieError> {
        let monic = polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.make_monic())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(alphabet, monic)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn relations(&self) -> &[LieRelation] {
        &self.relations
    }

    pub fn normal_form(&self, f: &LiePolynomial) -> LiePolynomial {
        self.normal_form_with(&mut Bracketer::new(), f)
    }

    fn normal_form_with(&self, br: &mut Bracketer, f: &LiePolynomial) -> LiePolynomial {
        let mut f = f.clone();
        let mut out = LiePolynomial::zero();
        while let Some((u, c)) = f.leading().map(|(u, c)| (u.clone(), c.clone())) {
            match self.index.first_hit(u.letters()) {
                Some(hit) => {
                    let a = u.prefix(hit.start);
                    let b = u.suffix_from(hit.start + hit.len);
                    let sb = special_bracket_with(br, &a, &self.relations[hit.id].poly, &b)
                        .expect("leading words of Lie polynomials are ALSWs");
                    debug_assert_eq!(sb.leading(), Some((&u, &Rational::one())));
                    f.add_scaled(&-c, &sb);
                }
                None => {
                    out.add_term(u.clone(), c.clone());
                    f.add_term(u, -c);
                }
            }
        }
        out
    }

    /// The associative rewrite system on the expansions.
    pub fn associative_system(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::from_polynomials(
            self.alphabet.clone(),
            self.relations
                .iter()
                .map(|r| r.expansion.clone())
                .collect::<Vec<_>>(),
        )
    }

    fn ambiguities(&self, max_deg: Option<usize>) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, f) in self.relations.iter().enumerate() {
            for (j, g) in self.relations.iter().enumerate() {
                out.extend(
                    pair_ambiguities(i, &f.lead, j, &g.lead)
                        .into_iter()
                        .filter(|a| max_deg.is_none_or(|d| a.w.len() <= d)),
                );
            }
        }
        out.sort();
        out
    }
}

pub fn lie_normal_form(f: &LiePolynomial, system: &LieSystem) -> LiePolynomial {
    system.normal_form(f)
}

/// A Lie composition: `f - [a g b]` (inclusion) or `[f b] - [a g]`
/// (intersection), relative to the leading words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieComposition {
    pub kind: CompositionKind,
    pub f_id: usize,
    pub g_id: usize,
    pub w: Word,
    pub position: usize,
    pub value: LiePolynomial,
}

fn composition_value(
    br: &mut Bracketer,
    amb: &Ambiguity,
    f: &LiePolynomial,
    g: &LiePolynomial,
) -> Result<LiePolynomial, LieError> {
    let flen = f.leading_word().ok_or(LieError::Zero)?.len();
    let glen = g.leading_word().ok_or(LieError::Zero)?.len();
    let (a, b) = amb.contexts(flen, glen);
    let empty = Word::empty();
    Ok(match amb.kind {
        CompositionKind::Inclusion => f - &special_bracket_with(br, &a, g, &b)?,
        CompositionKind::Intersection => {
            &special_bracket_with(br, &empty, f, &b)? - &special_bracket_with(br, &a, g, &empty)?
        }
    })
}

fn finish(amb: Ambiguity, value: LiePolynomial) -> LieComposition {
    LieComposition {
        kind: amb.kind,
        f_id: amb.f_id,
        g_id: amb.g_id,
        w: amb.w,
        position: amb.position,
        value,
    }
}

/// All compositions of `f` with `g` (intersections of `lead(f)` followed by
/// `lead(g)`, and inclusions of `lead(g)` in `lead(f)`).
pub fn lie_compositions(
    f_id: usize,
    f: &LiePolynomial,
    g_id: usize,
    g: &LiePolynomial,
) -> Result<Vec<LieComposition>, LieError> {
    if !f.is_monic() {
        return Err(LieError::NotMonic(f_id));
    }
    if !g.is_monic() {
        return Err(LieError::NotMonic(g_id));
    }
    let fl = f.leading_word().expect("monic");
    let gl = g.leading_word().expect("monic");
    let mut br = Bracketer::new();
    let mut out = Vec::new();
    for amb in pair_ambiguities(f_id, fl, g_id, gl) {
        let v = composition_value(&mut br, &amb, f, g)?;
        out.push(finish(amb, v));
    }
    Ok(out)
}

/// Whether every composition (with `|w| <= max_deg` when given) has Lie
/// normal form zero, plus the failing compositions in canonical order.
pub fn lie_is_gsb(system: &LieSystem, max_deg: Option<usize>) -> (bool, Vec<LieComposition>) {
    lie_is_gsb_with(system, max_deg, &Parallelism::sequential())
}

pub fn lie_is_gsb_with(
    system: &LieSystem,
    max_deg: Option<usize>,
    par: &Parallelism,
) -> (bool, Vec<LieComposition>) {
    let ambs = system.ambiguities(max_deg);
    let verdicts = par.map(&ambs, |amb| {
        let mut br = Bracketer::new();
        let f = &system.relations[amb.f_id].poly;
        let g = &system.relations[amb.g_id].poly;
        let v = composition_value(&mut br, amb, f, g).expect("ambiguity words of ALSWs are ALSWs");
        let trivial = system.normal_form_with(&mut br, &v).is_zero();
        (v, trivial)
    });
    let failures: Vec<LieComposition> = ambs
        .into_iter()
        .zip(verdicts)
        .filter(|(_, (_, trivial))| !trivial)
        .map(|(a, (v, _))| finish(a, v))
        .collect();
    (failures.is_empty(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{lie_expand, to_nlsw_basis, LieMonomial};
    use crate::word::Order;

    struct Env {
        x: Alphabet,
    }

    impl Env {
        fn new(names: &[&str]) -> Self {
            Env {
                x: Alphabet::new(names.iter().copied()).unwrap(),
            }
        }
        fn w(&self, s: &str) -> Word {
            s.chars()
                .map(|c| self.x.letter(&c.to_string()).unwrap())
                .collect()
        }
        fn leaf(&self, s: &str) -> LieMonomial {
            LieMonomial::Leaf(self.x.letter(s).unwrap())
        }
        fn br(&self, l: LieMonomial, r: LieMonomial) -> LieMonomial {
            LieMonomial::bracket(l, r)
        }
        fn basis(&self, s: &str) -> LiePolynomial {
            LiePolynomial::basis(&self.w(s)).unwrap()
        }
    }

    #[test]
    fn special_bracket_examples() {
        let e = Env::new(&["x", "y", "z"]);
        let mut s = e.basis("xy");
        s.add_term(e.w("z"), Rational::from_integer(3.into()));
        assert_eq!(
            special_bracket(&Word::empty(), &s, &Word::empty()).unwrap(),
            s
        );

        let got = special_bracket(&Word::empty(), &s, &e.w("y")).unwrap();
        let mut br = Bracketer::new();
        assert_eq!(got, br.bracket(&s, &e.basis("y")));

        let got = special_bracket(&e.w("x"), &s, &Word::empty()).unwrap();
        assert_eq!(got, br.bracket(&e.basis("x"), &s));

        assert!(matches!(
            special_bracket(&e.w("y"), &s, &Word::empty()),
            Err(LieError::Hypothesis(_))
        ));
    }

    #[test]
    fn special_bracket_leading_word() {
        let e = Env::new(&["a", "b", "c"]);
        let s = &e.basis("ab") - &e.basis("c");
        for (a, b) in [
            ("a", ""),
            ("", "b"),
            ("aa", "bc"),
            ("a", "cbc"),
            ("", "cc"),
            ("aac", "b"),
        ] {
            let (a, b) = (e.w(a), e.w(b));
            let w = e.w("ab").sandwich(&a, &b);
            if !is_alsw_letters(w.letters()) {
                continue;
            }
            let sb = special_bracket(&a, &s, &b).unwrap();
            let exp = sb.expand();
            assert_eq!(exp.leading(Order::DegLex).unwrap(), (&w, &Rational::one()));
        }
    }

    #[test]
    fn intersection_composition_of_commutators() {
        let e = Env::new(&["x", "y", "z"]);
        let f = e.basis("xy");
        let g = e.basis("yz");
        let cs = lie_compositions(0, &f, 1, &g).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].w, e.w("xyz"));
        let expected = to_nlsw_basis(&e.br(e.br(e.leaf("x"), e.leaf("y")), e.leaf("z")));
        let expected =
            &expected - &to_nlsw_basis(&e.br(e.leaf("x"), e.br(e.leaf("y"), e.leaf("z"))));
        assert_eq!(cs[0].value, expected);
        assert!(lie_compositions(0, &e.basis("xz"), 1, &e.basis("yz"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn normal_forms() {
        let e = Env::new(&["x", "y", "z"]);
        let s = LieSystem::new(e.x.clone(), vec![e.basis("xy")]).unwrap();
        assert!(s.normal_form(&e.basis("xy")).is_zero());
        let f = to_nlsw_basis(&e.br(e.br(e.leaf("x"), e.leaf("y")), e.leaf("z")));
        assert!(lie_normal_form(&f, &s).is_zero());
        let f = to_nlsw_basis(&e.br(e.br(e.leaf("x"), e.leaf("z")), e.leaf("y")));
        let nf = lie_normal_form(&f, &s);
        assert!(!nf.is_zero());
        assert!(nf.terms().all(|(u, _)| !u.contains(&e.w("xy"))));
    }

    #[test]
    fn abelian_three_generators() {
        let e = Env::new(&["x", "y", "z"]);
        let s = LieSystem::new(
            e.x.clone(),
            vec![e.basis("xy"), e.basis("xz"), e.basis("yz")],
        )
        .unwrap();
        // every ALSW of length 2 or more has a descent, so this is already a GSB
        assert_eq!(lie_is_gsb(&s, Some(6)), (true, vec![]));
        let s = LieSystem::new(
            e.x.clone(),
            vec![
                e.basis("xy"),
                e.basis("xz"),
                e.basis("yz"),
                e.basis("xzy"),
                e.basis("xzzy"),
            ],
        )
        .unwrap();
        assert_eq!(lie_is_gsb(&s, Some(4)), (true, vec![]));
    }

    #[test]
    fn expansion_system_agrees() {
        let e = Env::new(&["x", "y"]);
        let s = LieSystem::new(e.x.clone(), vec![e.basis("xxy")]).unwrap();
        let assoc = s.associative_system().unwrap();
        let m = e.br(
            e.leaf("y"),
            e.br(e.leaf("x"), e.br(e.leaf("x"), e.leaf("y"))),
        );
        let f = to_nlsw_basis(&m);
        assert!(s.normal_form(&f).is_zero());
        assert!(assoc.reduce(&lie_expand(&m)).is_zero());
    }
}
