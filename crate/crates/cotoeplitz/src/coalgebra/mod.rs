//! The quantization pipeline over an abstract *-co-algebra with a
//! distinguished subspace.
//!
//! A [`CoalgebraInstance`] packages everything the pipeline needs: a
//! basis-labelled coproduct, counit, and star, a sesquilinear form
//! (with whatever weight context the instance carries), a predicate
//! for the holomorphic subspace `P`, the projection `Q` onto it, and,
//! when one is declared, a coproduct on `P` itself. Two instances are
//! provided in [`instances`]: the SU_q(2) algebra (with either `P` or
//! the enlarged `P'` as subspace) and a finite-dimensional group-like
//! testbed on which every structural theorem holds on the nose.
//!
//! The pipeline itself:
//!
//! * [`coaction_beta`]: `beta = (Q (x) id) . Delta`.
//! * [`pi_g`]: contract the right tensor leg against a symbol,
//!   `pi_g(x (x) y) = <g, y> x`, antilinear in `g`.
//! * [`ctoeplitz_apply`]: the co-Toeplitz operator `C_g = pi_g . beta`
//!   on elements supported in `P`.
//! * [`tilde_ctoeplitz_apply`]: the conjugated variant acting on the
//!   starred subspace.
//!
//! Co-symbols (functionals in the dual algebra) and their operators
//! live in [`cosymbol`]; the theorem checkers live in [`checks`].

pub mod checks;
pub mod cosymbol;
pub mod instances;

use std::fmt;

use num::BigRational;

use crate::linear::{Element, TensorElement};
use crate::scalar::QScalar;
use crate::{Error, Result};

pub use cosymbol::{cosymbol_eval, ctoeplitz_cosymbol_apply, CoSymbol};
pub use instances::{GroupLikeInstance, Suq2Instance};

/// A *-co-algebra with a weighted form and a holomorphic subspace.
///
/// All operations are pure; instances can be shared freely across
/// threads.
pub trait CoalgebraInstance {
    type Label: Ord + Clone + fmt::Debug + fmt::Display;

    /// Coproduct of a single basis label.
    fn coproduct_label(&self, l: &Self::Label) -> TensorElement<Self::Label>;

    /// Counit of a single basis label.
    fn counit_label(&self, l: &Self::Label) -> QScalar;

    /// Star of a single basis label, as an element.
    fn star_label(&self, l: &Self::Label) -> Element<Self::Label>;

    /// The sesquilinear form, antilinear in the first slot.
    fn form(&self, x: &Element<Self::Label>, y: &Element<Self::Label>) -> QScalar;

    /// Does this label lie in the holomorphic subspace?
    fn in_p(&self, l: &Self::Label) -> bool;

    /// The projection `Q` onto the holomorphic subspace.
    fn project(&self, x: &Element<Self::Label>) -> Element<Self::Label>;

    /// The coproduct on `P`, when this instance declares one.
    fn coproduct_p(&self, x: &Element<Self::Label>) -> Result<TensorElement<Self::Label>>;

    /// The holomorphic basis labels of degree at most `max_degree`, in
    /// the fixed graded enumeration order.
    fn p_basis(&self, max_degree: u32) -> Vec<Self::Label>;

    /// Total degree used for truncation bookkeeping.
    fn degree(&self, l: &Self::Label) -> u32;

    /// The form's diagonal value on a holomorphic basis label.
    fn p_weight(&self, l: &Self::Label) -> BigRational;

    /// Coproduct extended linearly to elements.
    fn coproduct(&self, x: &Element<Self::Label>) -> TensorElement<Self::Label> {
        let mut out = TensorElement::zero();
        for (l, c) in x.iter() {
            for ((u, v), tc) in self.coproduct_label(l).iter() {
                out.add_term(u, v, &tc.mul(c));
            }
        }
        out
    }

    /// Counit extended linearly to elements.
    fn counit(&self, x: &Element<Self::Label>) -> QScalar {
        let mut out = QScalar::zero();
        for (l, c) in x.iter() {
            out = out.add(&self.counit_label(l).mul(c));
        }
        out
    }

    /// Star extended antilinearly to elements.
    fn star(&self, x: &Element<Self::Label>) -> Element<Self::Label> {
        let mut out = Element::zero();
        for (l, c) in x.iter() {
            out.add_scaled(&self.star_label(l), &c.conj());
        }
        out
    }

    /// Is the whole support of `x` inside the holomorphic subspace?
    fn supported_in_p(&self, x: &Element<Self::Label>) -> bool {
        x.support().all(|l| self.in_p(l))
    }
}

/// The co-action `beta = (Q (x) id) . Delta`.
pub fn coaction_beta<I: CoalgebraInstance>(
    inst: &I,
    f: &Element<I::Label>,
) -> TensorElement<I::Label> {
    let mut out = TensorElement::zero();
    for ((u, v), c) in inst.coproduct(f).iter() {
        let projected = inst.project(&Element::basis(u.clone()));
        for (pu, pc) in projected.iter() {
            out.add_term(pu, v, &pc.mul(c));
        }
    }
    out
}

/// Contract the right leg of a tensor against the symbol `g`:
/// `pi_g(x (x) y) = <g, y> x`. Errors when some left leg with nonzero
/// coefficient lies outside `P`.
pub fn pi_g<I: CoalgebraInstance>(
    inst: &I,
    g: &Element<I::Label>,
    t: &TensorElement<I::Label>,
) -> Result<Element<I::Label>> {
    let mut out = Element::zero();
    for ((x, y), c) in t.iter() {
        if !inst.in_p(x) {
            return Err(Error::OutsideSubspace);
        }
        let pairing = inst.form(g, &Element::basis(y.clone()));
        out.add_term(x, &pairing.mul(c));
    }
    Ok(out)
}

/// The co-Toeplitz operator `C_g` applied to `phi`, which must be
/// supported in the holomorphic subspace.
pub fn ctoeplitz_apply<I: CoalgebraInstance>(
    inst: &I,
    g: &Element<I::Label>,
    phi: &Element<I::Label>,
) -> Result<Element<I::Label>> {
    if !inst.supported_in_p(phi) {
        return Err(Error::OutsideSubspace);
    }
    pi_g(inst, g, &coaction_beta(inst, phi))
}

/// The conjugated co-Toeplitz operator on the starred subspace:
/// `psi -> (C_g(psi*))*`, defined when `psi*` is supported in `P`.
pub fn tilde_ctoeplitz_apply<I: CoalgebraInstance>(
    inst: &I,
    g: &Element<I::Label>,
    psi: &Element<I::Label>,
) -> Result<Element<I::Label>> {
    let starred = inst.star(psi);
    let image = ctoeplitz_apply(inst, g, &starred)?;
    Ok(inst.star(&image))
}
