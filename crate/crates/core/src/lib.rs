//! Gröbner–Shirshov bases for free associative algebras and free Lie
//! algebras over the rationals.
//!
//! The associative pipeline is [`word`] → [`poly`] → [`rewrite`] →
//! [`composition`] → [`completion`]. [`lie`] layers Lyndon–Shirshov
//! machinery on top of it, and [`catalog`] builds concrete presentations
//! together with the combinatorial oracles used to check them.
//! [`presentation`] reads and writes the on-disk presentation format.

pub mod catalog;
pub mod completion;
pub mod composition;
pub mod index;
pub mod lie;
pub mod par;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod word;

pub use completion::{
    complete, complete_with, interreduce, is_gsb, is_gsb_with, CompletionBudget, CompletionError,
    CompletionResult, CompletionStatus,
};
pub use composition::{Composition, CompositionKind};
pub use lie::{
    lie_expand, lie_is_gsb, lie_normal_form, nlsw_enumerate, to_nlsw_basis, LieError, LieMonomial,
    LiePolynomial, LieSystem, Nlsw,
};
pub use par::Parallelism;
pub use poly::{NcPolynomial, Rational};
pub use presentation::{Kind, Presentation, PresentationError, Relations};
pub use rewrite::{ReductionTrace, RewriteError, RewriteSystem};
pub use word::{Alphabet, Letter, Occurrence, Order, Word};
