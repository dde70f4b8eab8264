//! The quantum group SU_q(2) as a *-algebra with normal ordering, Hopf
//! structure maps, a weighted sesquilinear form, and holomorphic
//! projections.
//!
//! Elements live in the span of the ordered monomials
//! `e[k,l,m] = a^k c^l (c*)^m` (negative `k` for `a*` powers); see
//! [`basis`] for the vocabulary and [`rewrite`] for the terminating
//! rule system that puts arbitrary words into this basis.
//!
//! The main entry points:
//!
//! * [`normal_order`] and [`normal_order_with`]: word reduction.
//! * [`multiply`], [`star`], [`comultiply`], [`counit`], [`antipode`]:
//!   the (co)algebra operations, all exact.
//! * [`comultiply_p`]: the restricted coproduct on `P`.
//! * [`form`] with a [`WeightFunction`]: the sesquilinear pairing.
//! * [`project_p`], [`project_p_via_form`], [`project_p_prime`]: the
//!   subspace projections, computed by two independent routes.
//! * [`aa_star_expansion`] and [`closed_form_coefficient`]: closed
//!   forms that the verification suites pit against the generic
//!   pipeline.

pub mod basis;
pub mod closed;
pub mod form;
pub mod hopf;
pub mod rewrite;

pub use basis::{BasisMonomial, Letter, Word};
pub use closed::{
    aa_star_expansion, basis_indices, closed_form_coefficient, PIndex, Subspace,
};
pub use form::{form, project_p, project_p_prime, project_p_via_form, WeightFunction};
pub use hopf::{
    antipode, comultiply, comultiply_left_leg, comultiply_monomial, comultiply_p,
    comultiply_right_leg, counit, mul_basis, multiply, star, star_tensor, tensor_mul,
    TensorElement, TripleTensor,
};
pub use rewrite::{apply_at, normal_order, normal_order_with, redexes, Element};
