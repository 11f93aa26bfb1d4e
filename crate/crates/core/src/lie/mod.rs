//! Free Lie algebras: Lyndon–Shirshov words, the NLSW basis, relative
//! bracketing and Lie Gröbner–Shirshov bases.

use thiserror::Error;

use crate::word::{Word, WordError};

mod gsb;
mod lyndon;
mod poly;
mod tree;

pub use gsb::{
    lie_compositions, lie_is_gsb, lie_is_gsb_with, lie_normal_form, special_bracket,
    LieComposition, LieRelation, LieSystem,
};
pub use lyndon::{
    alsw_enumerate, alsw_factorization, is_alsw, nlsw_enumerate, shirshov_bracket, standard_split,
};
pub use poly::{to_nlsw_basis, Bracketer, LiePolynomial};
pub use tree::{lie_expand, LieMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("empty word")]
    EmptyWord,
    #[error("not an associative Lyndon-Shirshov word: {0:?}")]
    NotAlsw(Word),
    #[error("bracketing is not an NLSW")]
    NotNlsw,
    #[error("zero Lie polynomial")]
    Zero,
    #[error("relation {0} is not monic")]
    NotMonic(usize),
    #[error("relative bracketing needs an ALSW, got {0:?}")]
    Hypothesis(Word),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A nonassociative Lyndon–Shirshov word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nlsw(LieMonomial);

impl Nlsw {
    pub fn from_alsw(u: &Word) -> Result<Self, LieError> {
        shirshov_bracket(u).map(Nlsw)
    }

    /// Accepts `m` when it satisfies the three NLSW clauses.
    pub fn try_from_tree(m: LieMonomial) -> Result<Self, LieError> {
        if is_nlsw(&m) {
            Ok(Nlsw(m))
        } else {
            Err(LieError::NotNlsw)
        }
    }

    pub fn tree(&self) -> &LieMonomial {
        &self.0
    }

    pub fn into_tree(self) -> LieMonomial {
        self.0
    }

    pub fn word(&self) -> Word {
        self.0.word()
    }

    pub fn render(&self, alphabet: &crate::word::Alphabet) -> String {
        self.0.render(alphabet)
    }
}

fn is_nlsw(m: &LieMonomial) -> bool {
    use crate::word::lex_cmp;
    let Some((l, r)) = m.children() else {
        return true;
    };
    let (lw, rw) = (l.word(), r.word());
    if !lyndon::is_alsw_letters(m.word().letters()) || !is_nlsw(l) || !is_nlsw(r) {
        return false;
    }
    if !lex_cmp(lw.letters(), rw.letters()).is_gt() {
        return false;
    }
    match l.children() {
        Some((_, l2)) => !lex_cmp(l2.word().letters(), rw.letters()).is_gt(),
        None => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    #[test]
    fn nlsw_clauses_match_shirshov_bracketing() {
        let x = Alphabet::new(["a", "b", "c"]).unwrap();
        for n in 1..=5 {
            for u in alsw_enumerate(&x, n) {
                let t = shirshov_bracket(&u).unwrap();
                assert!(Nlsw::try_from_tree(t).is_ok());
            }
        }
        let a = LieMonomial::Leaf(x.letter("a").unwrap());
        let b = LieMonomial::Leaf(x.letter("b").unwrap());
        // [[a,b],b] is an NLSW, [b,a] and [[a,b],a] are not
        let abb = LieMonomial::bracket(LieMonomial::bracket(a.clone(), b.clone()), b.clone());
        assert!(Nlsw::try_from_tree(abb).is_ok());
        assert_eq!(
            Nlsw::try_from_tree(LieMonomial::bracket(b.clone(), a.clone())),
            Err(LieError::NotNlsw)
        );
        let aba = LieMonomial::bracket(LieMonomial::bracket(a.clone(), b.clone()), a);
        assert_eq!(Nlsw::try_from_tree(aba), Err(LieError::NotNlsw));
    }
}
