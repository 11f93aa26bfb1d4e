//! Free partially commutative monoids, groups and Lie algebras, with the
//! Gröbner–Shirshov families `xuy − yxu` and `[xuy]` truncated by degree.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::lie::LiePolynomial;
use crate::poly::NcPolynomial;
use crate::presentation::{group_alphabet, Kind, Presentation, INVERSE_SUFFIX};
use crate::word::{Alphabet, Word};

use super::{oriented, CatalogError};

/// Unordered pairs of distinct generator names that commute.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutationGraph {
    pairs: BTreeSet<(String, String)>,
}

impl CommutationGraph {
    pub fn new<I, S>(edges: I) -> Result<Self, CatalogError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut g = CommutationGraph::default();
        for (a, b) in edges {
            g.add(a.into(), b.into())?;
        }
        Ok(g)
    }

    pub fn add(&mut self, a: String, b: String) -> Result<(), CatalogError> {
        if a == b {
            return Err(CatalogError::InvalidGraph(format!("loop at `{a}`")));
        }
        let key = if a < b { (a, b) } else { (b, a) };
        self.pairs.insert(key);
        Ok(())
    }

    /// Every pair of distinct generators.
    pub fn complete(generators: &[String]) -> Self {
        let mut g = CommutationGraph::default();
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                g.add(a.clone(), b.clone()).expect("distinct names");
            }
        }
        g
    }

    /// Each pair of distinct generators is an edge with probability `p`.
    pub fn random(generators: &[String], p: f64, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut g = CommutationGraph::default();
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if rng.gen_bool(p) {
                    g.add(a.clone(), b.clone()).expect("distinct names");
                }
            }
        }
        g
    }

    pub fn commute(&self, a: &str, b: &str) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pairs.contains(&(a.to_string(), b.to_string()))
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn validate(&self, generators: &[String]) -> Result<(), CatalogError> {
        for (a, b) in self.edges() {
            for v in [a, b] {
                if !generators.iter().any(|g| g == v) {
                    return Err(CatalogError::InvalidGraph(format!(
                        "unknown generator `{v}`"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Defining relations and the truncated Gröbner–Shirshov family.
#[derive(Clone, Debug)]
pub struct PartiallyCommutative {
    pub graph: CommutationGraph,
    pub max_deg: usize,
    /// `ab = ba` for every edge (`[a,b] = 0` for Lie).
    pub defining: Presentation,
    /// The family with leading words of length at most `max_deg`.
    pub family: Presentation,
}

fn base(name: &str) -> &str {
    name.strip_suffix(INVERSE_SUFFIX).unwrap_or(name)
}

/// `▷` on an alphabet: `a ▷ b` iff `a > b` and their base generators
/// commute.
fn triangle(alphabet: &Alphabet, graph: &CommutationGraph) -> Vec<Vec<bool>> {
    let n = alphabet.len();
    let mut t = vec![vec![false; n]; n];
    for a in alphabet.letters() {
        for b in alphabet.letters() {
            t[a.0 as usize][b.0 as usize] =
                a > b && graph.commute(base(alphabet.name(a)), base(alphabet.name(b)));
        }
    }
    t
}

/// All `(x, u, y)` with `x ▷ y ▷ supp(u)` and `|xuy| <= max_deg`.
fn family_words(
    alphabet: &Alphabet,
    graph: &CommutationGraph,
    max_deg: usize,
) -> Vec<(Word, Word, Word)> {
    let t = triangle(alphabet, graph);
    let mut out = Vec::new();
    for x in alphabet.letters() {
        for y in alphabet.letters().filter(|y| t[x.0 as usize][y.0 as usize]) {
            let below: Vec<_> = alphabet
                .letters()
                .filter(|z| t[y.0 as usize][z.0 as usize])
                .collect();
            let mut layer = vec![Word::empty()];
            for len in 0..=max_deg.saturating_sub(2) {
                for u in &layer {
                    out.push((Word::letter(x), u.clone(), Word::letter(y)));
                }
                if len == max_deg.saturating_sub(2) {
                    break;
                }
                layer = layer
                    .iter()
                    .flat_map(|u| below.iter().map(move |&z| u.concat(&Word::letter(z))))
                    .collect();
            }
        }
    }
    if max_deg < 2 {
        out.clear();
    }
    out
}

/// The partially commutative structure on `generators` (greatest first).
/// For groups, `x-1` ranks just below `x`.
pub fn partially_commutative(
    generators: &[String],
    graph: &CommutationGraph,
    kind: Kind,
    max_deg: usize,
) -> Result<PartiallyCommutative, CatalogError> {
    graph.validate(generators)?;
    let alphabet = match kind {
        Kind::Group => group_alphabet(generators)?,
        _ => Alphabet::new(generators.iter().cloned())?,
    };
    let letter = |s: &str| alphabet.letter(s).expect("declared");
    let words = family_words(&alphabet, graph, max_deg);
    let (defining, family) = match kind {
        Kind::Lie => {
            let defining = graph
                .edges()
                .map(|(a, b)| {
                    let (hi, lo) = if letter(a) > letter(b) {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    LiePolynomial::basis(&Word::from(vec![letter(hi), letter(lo)]))
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(crate::presentation::PresentationError::from)?;
            let family = words
                .iter()
                .map(|(x, u, y)| LiePolynomial::basis(&u.sandwich(x, y)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(crate::presentation::PresentationError::from)?;
            (
                Presentation::lie(alphabet.clone(), defining)?,
                Presentation::lie(alphabet, family)?,
            )
        }
        Kind::Monoid | Kind::Group => {
            let mut defining = Vec::new();
            for (a, b) in graph.edges() {
                let names = |g: &str| -> Vec<String> {
                    if kind == Kind::Group {
                        vec![g.to_string(), format!("{g}{INVERSE_SUFFIX}")]
                    } else {
                        vec![g.to_string()]
                    }
                };
                for p in names(a) {
                    for q in names(b) {
                        let (lp, lq) = (letter(&p), letter(&q));
                        defining.push(oriented(Word::from(vec![lp, lq]), Word::from(vec![lq, lp])));
                    }
                }
            }
            let family: Vec<NcPolynomial> = words
                .iter()
                .map(|(x, u, y)| NcPolynomial::binomial(u.sandwich(x, y), y.concat(x).concat(u)))
                .collect();
            if kind == Kind::Group {
                (
                    Presentation::group(generators.to_vec(), defining)?,
                    Presentation::group(generators.to_vec(), family)?,
                )
            } else {
                (
                    Presentation::monoid(alphabet.clone(), defining)?,
                    Presentation::monoid(alphabet, family)?,
                )
            }
        }
    };
    let family = family.with_expected("gsb", format!("deg<={max_deg}"));
    Ok(PartiallyCommutative {
        graph: graph.clone(),
        max_deg,
        defining,
        family,
    })
}
