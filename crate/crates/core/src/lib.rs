//! A computational engine for quantum logic over finite-dimensional
//! Hilbert spaces.
//!
//! The crate builds up in layers:
//!
//! * [`linalg`] — complex matrices, Hermitian eigendecomposition,
//!   null-space projections, subspace comparison;
//! * [`lattice`] — the projection lattice of `C^d` with meet, join,
//!   orthocomplement, commutators, and the three material conditionals
//!   (Sasaki, contrapositive Sasaki, relevance);
//! * [`universe`] — set-like elements weighted by projections, atomic
//!   truth values by rank recursion, supports, restrictions, and the
//!   transfer-principle machinery;
//! * [`formula`] — a small bounded-quantifier formula language with a
//!   parser and a conditional-parameterized evaluator;
//! * [`reals`] — quantum reals, the correspondence with Hermitian
//!   observables, equality and spectral-order truth values;
//! * [`measurement`] — successive projective measurement statistics;
//! * [`suites`] — seeded property suites shared by the test batteries
//!   and the command-line self test;
//! * [`json`] — the file formats used by the command-line tools.

pub mod error;
pub mod formula;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod measurement;
pub mod reals;
pub mod suites;
pub mod universe;

pub use error::{Error, Result};
pub use lattice::{ConditionalKind, Projection};
pub use linalg::{Complex64, ComplexMatrix, StateVector, Tolerance};
pub use universe::QSet;
