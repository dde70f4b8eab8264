//! Exact symbolic co-Toeplitz quantization on the quantum group SU_q(2).
//!
//! The quantum group is treated purely as a *-co-algebra `C` with a
//! sesquilinear form. A projection `Q` maps `C` onto a "holomorphic"
//! subspace `P` spanned by the monomials `a^r c^s`, and every symbol
//! `g` in `C` (or co-symbol, a functional on `C`) induces a co-Toeplitz
//! operator on `P` through the pipeline
//!
//! ```text
//!     C_g = pi_g . beta . j,      beta = (Q (x) id) . Delta
//! ```
//!
//! where `j : P -> C` is the inclusion and `pi_g(x (x) y) = <g, y> x`.
//! Everything is computed exactly: scalars are Laurent polynomials in the
//! deformation parameter `q` with Gaussian rational coefficients, so any
//! identity either holds on the nose or fails with a concrete witness.
//!
//! Module layout:
//!
//! * [`scalar`]: the coefficient ring ([`scalar::QScalar`]) and Gaussian
//!   rationals, plus q-binomial coefficients.
//! * [`linear`]: thin wrappers for formal linear combinations and tensors
//!   over an arbitrary ordered basis-label type.
//! * [`suq2`]: the SU_q(2) *-algebra itself, with the normal-ordering
//!   rewrite engine, Hopf structure maps, the weighted form, and the
//!   holomorphic projections.
//! * [`coalgebra`]: the quantization pipeline over an abstract co-algebra
//!   instance (SU_q(2) and a finite group-like testbed), co-symbols, and
//!   the property checkers for the structural theorems.
//! * [`operators`]: truncated matrix realizations, adjoint diagnostics,
//!   and noncommutative polynomial relations among quantized symbols.
//! * [`serial`]: stable JSON encodings for scalars, elements, co-symbols
//!   and matrices, plus CSV export of specialized matrices.
//! * [`sample`]: seeded pseudo-random generators used by the verification
//!   suites.

#![forbid(unsafe_code)]

pub mod coalgebra;
pub mod linear;
pub mod operators;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod serial;
pub mod suq2;

use thiserror::Error;

/// Errors shared across the crate.
///
/// Domain violations (an element straying outside the holomorphic
/// subspace, incompatible truncations, and so on) are reported through
/// this type rather than panics so the CLI can map them to exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("q-binomial index out of range: k = {k} exceeds n = {n}")]
    BinomialIndex { n: u32, k: u32 },

    #[error("specialization at q = 0 is undefined for Laurent polynomials")]
    SpecializeAtZero,

    #[error("adjoint comparison requires a strictly positive rational q")]
    NonPositiveQ,

    #[error("element is not supported on the holomorphic subspace")]
    OutsideSubspace,

    #[error("weight values must be strictly positive rationals")]
    NonPositiveWeight,

    #[error("this co-algebra instance declares no coproduct on P")]
    NoSubspaceCoproduct,

    #[error("truncation or basis-mode mismatch between operator matrices")]
    MatrixShapeMismatch,

    #[error("the zero relation cannot be classified or deformed")]
    ZeroRelation,

    #[error("relation references a generator with no assigned matrix: {0}")]
    UnassignedGenerator(String),

    #[error("coefficient does not fit the JSON integer range")]
    JsonIntegerRange,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
