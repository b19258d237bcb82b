//! A commutative-algebra kernel for computations over local rings obtained
//! by localizing a polynomial ring at a prime ideal.
//!
//! The base layer provides multivariate polynomials over a prime field or
//! the rationals, Gröbner bases of submodules of free modules, syzygies,
//! and free resolutions over the polynomial ring itself. On top of it,
//! fractions with denominators outside the chosen prime model the local
//! ring; computations there lift to the base ring by clearing denominators
//! columnwise, run over polynomials, and descend again. Pruning unit
//! entries from complexes yields minimal resolutions, minimal generating
//! sets, and minimal presentations, and those in turn drive length and
//! Hilbert–Samuel computations for Artinian quotients.

pub mod coeff;
pub mod complex;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod localring;
pub mod matrix;
pub mod modules;
pub mod poly;

pub use coeff::{CoeffField, FieldElem, DEFAULT_PRIME};
pub use complex::{resolve_base, ChainComplex, DegreeMap, PruningMap};
pub use error::{Error, Result};
pub use groebner::{modulo_base, modulo_gens_base, syz_base, syz_gens_base, GroebnerBasis, ModVec};
pub use invariants::{
    hilbert_samuel_function, length_of, ParameterIdeal, DEFAULT_LENGTH_CAP,
};
pub use localring::{lift_up, lift_up_with_units, promote_matrix, Fraction, LocalRing};
pub use matrix::{Matrix, RingElem};
pub use modules::{modulo_gens_local, modulo_local, syz_gens_local, syz_local, ModuleKind, Subquotient};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, MAX_VARS};
