//! Concrete co-algebra instances: SU_q(2) and a group-like testbed.

use std::collections::BTreeSet;

use num::BigRational;

use crate::linear::{Element, TensorElement};
use crate::scalar::QScalar;
use crate::suq2::{self, BasisMonomial, Subspace, WeightFunction};
use crate::{Error, Result};

use super::CoalgebraInstance;

/// SU_q(2) with a chosen weight and holomorphic subspace.
///
/// With [`Subspace::P`] the projection is the closed index rule and the
/// restricted coproduct of `P` is available. With [`Subspace::PPrime`]
/// the projection keeps the antiholomorphic rays as well; no coproduct
/// on `P'` is declared.
#[derive(Debug, Clone)]
pub struct Suq2Instance {
    pub weight: WeightFunction,
    pub subspace: Subspace,
}

impl Suq2Instance {
    pub fn new(weight: WeightFunction, subspace: Subspace) -> Self {
        Suq2Instance { weight, subspace }
    }

    pub fn with_weight(weight: WeightFunction) -> Self {
        Suq2Instance::new(weight, Subspace::P)
    }
}

impl CoalgebraInstance for Suq2Instance {
    type Label = BasisMonomial;

    fn coproduct_label(&self, l: &BasisMonomial) -> TensorElement<BasisMonomial> {
        suq2::comultiply_monomial(l).as_ref().clone()
    }

    fn counit_label(&self, l: &BasisMonomial) -> QScalar {
        if l.l == 0 && l.m == 0 {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    }

    fn star_label(&self, l: &BasisMonomial) -> Element<BasisMonomial> {
        suq2::star(&Element::basis(*l))
    }

    fn form(&self, x: &Element<BasisMonomial>, y: &Element<BasisMonomial>) -> QScalar {
        suq2::form(x, y, &self.weight)
    }

    fn in_p(&self, l: &BasisMonomial) -> bool {
        match self.subspace {
            Subspace::P => l.in_p(),
            Subspace::PPrime => l.k >= 0 && (l.l == 0 || l.m == 0),
        }
    }

    fn project(&self, x: &Element<BasisMonomial>) -> Element<BasisMonomial> {
        match self.subspace {
            Subspace::P => suq2::project_p(x),
            Subspace::PPrime => suq2::project_p_prime(x, &self.weight),
        }
    }

    fn coproduct_p(&self, x: &Element<BasisMonomial>) -> Result<TensorElement<BasisMonomial>> {
        match self.subspace {
            Subspace::P => suq2::comultiply_p(x),
            Subspace::PPrime => Err(Error::NoSubspaceCoproduct),
        }
    }

    fn p_basis(&self, max_degree: u32) -> Vec<BasisMonomial> {
        suq2::basis_indices(max_degree, self.subspace)
            .into_iter()
            .map(|idx| idx.monomial())
            .collect()
    }

    fn degree(&self, l: &BasisMonomial) -> u32 {
        l.degree()
    }

    fn p_weight(&self, l: &BasisMonomial) -> BigRational {
        self.weight.value(l.k, l.l as i64 - l.m as i64)
    }

    // The coproduct on whole elements can reuse the memoized monomial
    // table directly.
    fn coproduct(&self, x: &Element<BasisMonomial>) -> TensorElement<BasisMonomial> {
        suq2::comultiply(x)
    }
}

/// A finite-dimensional co-algebra spanned by group-like vectors
/// `g_0, ..., g_{n-1}`: the coproduct is `g_i (x) g_i`, the counit is
/// one, star fixes the basis, and the form is the Kronecker pairing.
/// Any subset of indices spans a sub-co-algebra and serves as `P`.
///
/// Every hypothesis of the structural theorems holds here, so the
/// checkers must pass identically; the instance exists to give the
/// suites a positive control next to SU_q(2)'s counterexamples.
#[derive(Debug, Clone)]
pub struct GroupLikeInstance {
    dim: usize,
    p_set: BTreeSet<usize>,
}

impl GroupLikeInstance {
    /// `dim` group-like basis vectors with `p_set` as the holomorphic
    /// index set. Errors when an index is out of range.
    pub fn new(dim: usize, p_set: BTreeSet<usize>) -> Result<Self> {
        if p_set.iter().any(|&i| i >= dim) {
            return Err(Error::Parse(format!(
                "subspace index out of range for dimension {dim}"
            )));
        }
        Ok(GroupLikeInstance { dim, p_set })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl CoalgebraInstance for GroupLikeInstance {
    type Label = usize;

    fn coproduct_label(&self, l: &usize) -> TensorElement<usize> {
        TensorElement::basis(*l, *l)
    }

    fn counit_label(&self, _l: &usize) -> QScalar {
        QScalar::one()
    }

    fn star_label(&self, l: &usize) -> Element<usize> {
        Element::basis(*l)
    }

    fn form(&self, x: &Element<usize>, y: &Element<usize>) -> QScalar {
        let mut out = QScalar::zero();
        for (l, cx) in x.iter() {
            let cy = y.coeff(l);
            out = out.add(&cx.conj().mul(&cy));
        }
        out
    }

    fn in_p(&self, l: &usize) -> bool {
        self.p_set.contains(l)
    }

    fn project(&self, x: &Element<usize>) -> Element<usize> {
        let mut out = Element::zero();
        for (l, c) in x.iter() {
            if self.in_p(l) {
                out.add_term(l, c);
            }
        }
        out
    }

    fn coproduct_p(&self, x: &Element<usize>) -> Result<TensorElement<usize>> {
        if !self.supported_in_p(x) {
            return Err(Error::OutsideSubspace);
        }
        Ok(self.coproduct(x))
    }

    fn p_basis(&self, _max_degree: u32) -> Vec<usize> {
        self.p_set.iter().copied().collect()
    }

    fn degree(&self, _l: &usize) -> u32 {
        0
    }

    fn p_weight(&self, _l: &usize) -> BigRational {
        BigRational::from_integer(1.into())
    }
}
