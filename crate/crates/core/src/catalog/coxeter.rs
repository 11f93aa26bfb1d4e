//! Symmetric groups in Coxeter generators and braid groups in
//! Adyan–Thurston generators.

use std::collections::{HashMap, HashSet};

use crate::poly::NcPolynomial;
use crate::presentation::{Presentation, INVERSE_SUFFIX};
use crate::word::{lex_cmp, Alphabet, Letter, Word};

use super::perm::{bs_normal_forms, perm_mul, perp, Permutation};
use super::{oriented, CatalogError};

/// Largest `n` accepted by the Adyan–Thurston constructors.
pub const AT_MAX_N: usize = 4;

/// `S_{n+1}` on `s1..sn`, listed `sn > … > s1`.
pub fn symmetric_group(n: usize) -> Result<Presentation, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParameter(
            "symmetric_group needs n >= 1".into(),
        ));
    }
    let names: Vec<String> = (1..=n).rev().map(|i| format!("s{i}")).collect();
    let x = Alphabet::new(names)?;
    let s = |i: usize| x.letter(&format!("s{i}")).expect("declared");
    let word = |v: &[usize]| v.iter().map(|&i| s(i)).collect::<Word>();
    let mut rels = Vec::new();
    for i in 1..=n {
        rels.push(oriented(word(&[i, i]), Word::empty()));
    }
    for j in 1..=n {
        for i in 1..j.saturating_sub(1) {
            rels.push(oriented(word(&[j, i]), word(&[i, j])));
        }
    }
    for i in 1..n {
        rels.push(oriented(word(&[i + 1, i, i + 1]), word(&[i, i + 1, i])));
    }
    let order: usize = (1..=n + 1).product();
    Ok(Presentation::monoid(x, rels)?.with_expected("irr_count", order))
}

/// Generator indices of a word over [`symmetric_group`]'s alphabet.
pub fn coxeter_indices(alphabet: &Alphabet, w: &Word) -> Option<Vec<usize>> {
    w.letters()
        .iter()
        .map(|&l| {
            alphabet
                .name(l)
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
        })
        .collect()
}

/// The Adyan–Thurston generators `r(ᾱ)` of `B_{n+1}`, one per nontrivial
/// `α ∈ S_{n+1}`, named `r` followed by the indices of `ᾱ`.
#[derive(Clone, Debug)]
pub struct AtGenerators {
    pub n: usize,
    /// Greatest first.
    pub perms: Vec<Permutation>,
    pub names: Vec<String>,
    pub alphabet: Alphabet,
    index: HashMap<Permutation, Letter>,
}

impl AtGenerators {
    pub fn new(n: usize) -> Result<Self, CatalogError> {
        if n == 0 {
            return Err(CatalogError::BadParameter(
                "Adyan-Thurston generators need n >= 1".into(),
            ));
        }
        if n > AT_MAX_N {
            return Err(CatalogError::TooLarge(format!(
                "Adyan-Thurston generators for n = {n} (limit {AT_MAX_N})"
            )));
        }
        let mut forms: Vec<(Permutation, Vec<usize>)> = bs_normal_forms(n)
            .into_iter()
            .filter(|(p, _)| !p.is_identity())
            .collect();
        // r(a) < r(b) iff |a| > |b|, or equal lengths and a <lex b over s1 < … < sn
        forms.sort_by(|(_, a), (_, b)| {
            a.len().cmp(&b.len()).then_with(|| {
                let la: Vec<Letter> = a.iter().map(|&i| Letter(i as u16)).collect();
                let lb: Vec<Letter> = b.iter().map(|&i| Letter(i as u16)).collect();
                lex_cmp(&lb, &la)
            })
        });
        let names: Vec<String> = forms
            .iter()
            .map(|(_, w)| format!("r{}", w.iter().map(|i| i.to_string()).collect::<String>()))
            .collect();
        let alphabet = Alphabet::new(names.clone())?;
        let index = forms
            .iter()
            .zip(&names)
            .map(|((p, _), name)| (p.clone(), alphabet.letter(name).expect("declared")))
            .collect();
        Ok(AtGenerators {
            n,
            perms: forms.into_iter().map(|(p, _)| p).collect(),
            names,
            alphabet,
            index,
        })
    }

    /// `r(ᾱ)`, or `None` for the identity.
    pub fn letter(&self, a: &Permutation) -> Option<Letter> {
        self.index.get(a).copied()
    }

    fn word_of(&self, perms: &[&Permutation]) -> Word {
        perms.iter().filter_map(|p| self.letter(p)).collect()
    }

    pub fn delta(&self) -> Letter {
        self.letter(&Permutation::longest(self.n + 1))
            .expect("n >= 1")
    }

    /// The image of a positive braid word `σ_{i1} σ_{i2} …` under
    /// `σ_i ↦ r(s_i)`.
    pub fn braid_word(&self, sigmas: &[usize]) -> Result<Word, CatalogError> {
        sigmas
            .iter()
            .map(|&i| {
                let s = Permutation::transposition(self.n + 1, i)?;
                Ok(self.letter(&s).expect("transpositions are nontrivial"))
            })
            .collect()
    }
}

fn mul(a: &Permutation, b: &Permutation) -> Permutation {
    perm_mul(a, b).expect("same size")
}

fn is_perp(a: &Permutation, b: &Permutation) -> bool {
    perp(a, b).expect("same size")
}

fn positive_relations(
    g: &AtGenerators,
    alphabet_word: impl Fn(&Word) -> Word,
) -> Vec<NcPolynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |u: Word, v: Word| {
        if u == v {
            return;
        }
        let p = oriented(alphabet_word(&u), alphabet_word(&v));
        if seen.insert(p.clone()) {
            out.push(p);
        }
    };
    let ps = &g.perms;
    for a in ps {
        for b in ps {
            if !is_perp(a, b) {
                continue;
            }
            let ab = mul(a, b);
            push(g.word_of(&[a, b]), g.word_of(&[&ab]));
        }
    }
    for a in ps {
        for b in ps {
            if !is_perp(a, b) {
                continue;
            }
            let ab = mul(a, b);
            for c in ps {
                if !is_perp(b, c) {
                    continue;
                }
                let bc = mul(b, c);
                push(g.word_of(&[a, &bc]), g.word_of(&[&ab, c]));
            }
        }
    }
    out
}

/// Positive braid monoid `B_{n+1}^+` in Adyan–Thurston generators:
/// `r(ᾱ) r(β̄) = r(αβ)` for `α ⊥ β`, and
/// `r(ᾱ) r(βγ) = r(αβ) r(γ̄)` for `α ⊥ β`, `β ⊥ γ`.
pub fn adyan_thurston_pos(n: usize) -> Result<Presentation, CatalogError> {
    let g = AtGenerators::new(n)?;
    let rels = positive_relations(&g, |w| w.clone());
    Ok(Presentation::monoid(g.alphabet.clone(), rels)?.with_expected("generators", g.names.len()))
}

/// Braid group `B_{n+1}` in Adyan–Thurston generators plus `Δ^{-1}`, the
/// least generator, named after `Δ` with the suffix `-1`. Besides the
/// positive relations: `r(ᾱ) Δ^ε = Δ^ε r(ᾱ')` with `α' = Δ α Δ`;
/// `r(αβ) r(γμ) = Δ r(ᾱ') r(μ̄)` for `α ⊥ β ⊥ γ ⊥ μ` with `βγ = Δ`;
/// `Δ^ε Δ^{-ε} = 1`.
pub fn adyan_thurston_group(n: usize) -> Result<Presentation, CatalogError> {
    let g = AtGenerators::new(n)?;
    let delta_name = g.alphabet.name(g.delta()).to_string();
    let inv_name = format!("{delta_name}{INVERSE_SUFFIX}");
    let mut names = g.names.clone();
    names.push(inv_name.clone());
    let x = Alphabet::new(names)?;
    // letters of g.alphabet keep their names in x
    let lift = |w: &Word| -> Word {
        w.letters()
            .iter()
            .map(|&l| x.letter(g.alphabet.name(l)).expect("shared name"))
            .collect()
    };
    let mut rels = positive_relations(&g, lift);
    let mut seen: HashSet<NcPolynomial> = rels.iter().cloned().collect();
    let mut push = |u: Word, v: Word| {
        if u == v {
            return;
        }
        let p = oriented(u, v);
        if seen.insert(p.clone()) {
            rels.push(p);
        }
    };

    let m = n + 1;
    let w0 = Permutation::longest(m);
    let delta = x.letter(&delta_name).expect("declared");
    let delta_inv = x.letter(&inv_name).expect("declared");
    let r = |p: &Permutation| {
        g.letter(p)
            .map(|l| x.letter(g.alphabet.name(l)).expect("shared name"))
    };
    let word = |ls: &[Option<Letter>]| ls.iter().flatten().copied().collect::<Word>();
    let conj = |a: &Permutation| mul(&mul(&w0, a), &w0);

    for a in &g.perms {
        let a2 = conj(a);
        for d in [delta, delta_inv] {
            push(word(&[r(a), Some(d)]), word(&[Some(d), r(&a2)]));
        }
    }
    let mut all = vec![Permutation::identity(m)];
    all.extend(g.perms.iter().cloned());
    for b in &g.perms {
        for c in &g.perms {
            if !is_perp(b, c) || mul(b, c) != w0 {
                continue;
            }
            for a in all.iter().filter(|a| is_perp(a, b)) {
                for mu in all.iter().filter(|mu| is_perp(c, mu)) {
                    let lhs = word(&[r(&mul(a, b)), r(&mul(c, mu))]);
                    let rhs = word(&[Some(delta), r(&conj(a)), r(mu)]);
                    push(lhs, rhs);
                }
            }
        }
    }
    push(Word::from(vec![delta, delta_inv]), Word::empty());
    push(Word::from(vec![delta_inv, delta]), Word::empty());
    Ok(Presentation::monoid(x, rels)?)
}
