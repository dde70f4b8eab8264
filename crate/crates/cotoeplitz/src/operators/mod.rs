//! Finite matrix views of the quantization operators and the relation
//! machinery built on top of them.
//!
//! [`matrix`] truncates operators to the span of low-degree basis
//! labels, with two independent construction routes for symbol
//! operators (the coproduct pipeline and the single-shift closed form)
//! plus composition, twisted commutators, and an exact weighted adjoint
//! comparison. [`ccr`] manipulates formal relations among quantized
//! generators: kernel candidacy on a truncation, the classical/quantum
//! split by homogeneity, and deformation along a square root of the
//! deformation parameter.

pub mod ccr;
pub mod matrix;

pub use ccr::{
    associated_classical, check_relation, classify_relation, hbar_deform, NCPoly, RelationClass,
    RelationVerdict,
};
pub use matrix::{
    adjoint_check, classify_symbol, commutator, matrix_of_cosymbol, matrix_of_symbol,
    matrix_of_symbol_closed_form, AdjointReport, AdjointWitness, BasisMode, OperatorMatrix,
    SymbolClass, Truncation,
};
