//! Concrete presentations and the combinatorial oracles that check them.

use thiserror::Error;

use crate::poly::NcPolynomial;
use crate::presentation::PresentationError;
use crate::word::{Word, WordError};

mod coxeter;
mod partial;
mod perm;
mod plactic;

pub use coxeter::{
    adyan_thurston_group, adyan_thurston_pos, coxeter_indices, symmetric_group, AtGenerators,
    AT_MAX_N,
};
pub use partial::{partially_commutative, CommutationGraph, PartiallyCommutative};
pub use perm::{
    bs_normal_forms, bs_word, matches_bs_pattern, perm_length, perm_mul, perp, Permutation,
};
pub use plactic::{
    plactic3_basis, plactic_alphabet, plactic_digits, plactic_rows, plactic_standard, plactic_word,
    random_row, row_associativity_trials, row_product, rows_up_to, schensted_insert,
    AssociativityFailure, AssociativityReport, BoundedCertificate, PlacticRows, Row, RowProduct,
    RowRewriter, Tableau, PLACTIC_MAX_N,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{0:?} is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("permutations of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("invalid commutation graph: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// `u - v` or `v - u`, whichever has the deg-lex greater leading word.
pub(crate) fn oriented(u: Word, v: Word) -> NcPolynomial {
    if u > v {
        NcPolynomial::binomial(u, v)
    } else {
        NcPolynomial::binomial(v, u)
    }
}
