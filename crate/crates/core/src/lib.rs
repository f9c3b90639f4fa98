//! Exact arithmetic behind the ternary tree of primitive Pythagorean
//! triples.
//!
//! The pieces fit together like this: 2x2 integer matrices act by
//! conjugation on the nilpotent cone ([`matrix`]); the subgroup generated
//! by `U^2` and `L^2` is a free product, so its cosets modulo the
//! stabilizer of the seed matrix have alternating-word normal forms
//! ([`words`]); conjugating the seed by those words enumerates every
//! positive primitive triple exactly once, giving a complete rooted
//! ternary tree with three affine child maps ([`tree`]); and the
//! coordinate differences of a triple are invariant along one child
//! direction each, which turns questions about attainable differences into
//! norm-form equations over Z[sqrt(2)] solvable by Lagrange descent
//! ([`diffpaths`]).
//!
//! All values are immutable and every operation is a pure function, so the
//! whole crate is safe to use from any number of threads.

pub mod diffpaths;
pub mod error;
pub mod matrix;
pub mod tree;
pub mod words;

pub use diffpaths::{
    difference_path, differences, factorize, form_value, invariant_child_kind, is_prime,
    is_representable_r, lagrange_descent, root_triple_for_difference, solve_norm, DescentStep,
    DescentTrace, DiffForm, QuadInt,
};
pub use error::{Error, Result};
pub use matrix::{
    conjugate, is_nilpotent, triple_extract, IntMat2, NilpotentDecomposition, NilpotentMat,
};
pub use tree::{
    child, children, level_iter, locate, node_at, params_from_triple, parent, triple_from_params,
    triples_with_hypotenuse_at_most, word_for, ChildKind, LevelWalk, ParamPair, PrimTriple,
    TreePath,
};
pub use words::{coset_level, word_to_triple, CosetLevel, Gamma2Word, Generator, Syllable};
