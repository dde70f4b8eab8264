//! Co-symbols: elements of the dual algebra `C'` as expression trees.
//!
//! A co-symbol is a functional on the co-algebra, built from the
//! counit (the unit of `C'`), evaluation functionals `e_g = <g, .>`,
//! sums, scalar multiples, convolution products
//! `(lam mu)(f) = sum lam(f_(1)) mu(f_(2))`, and the star
//! `lam*(f) = (lam(f*))*`. Trees are kept unevaluated; applying one to
//! an element recurses through the instance's coproduct, so arbitrary
//! nesting works without materializing any dual basis.
//!
//! The generalized co-Toeplitz operator of a co-symbol replaces the
//! right-leg pairing of the symbol pipeline with the functional:
//! `C_lam = (id (x) lam) . beta`. For `lam = e_g` this recovers `C_g`
//! exactly, which the suites check.

use crate::linear::Element;
use crate::scalar::QScalar;
use crate::Result;

use super::{coaction_beta, CoalgebraInstance};

/// An unevaluated element of the dual algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum CoSymbol<L: Ord + Clone> {
    /// The counit, the unit of the dual algebra.
    Counit,
    /// The evaluation functional `e_g = <g, .>` of a symbol.
    Eg(Element<L>),
    /// A finite sum of co-symbols.
    Sum(Vec<CoSymbol<L>>),
    /// A scalar multiple.
    Scale(QScalar, Box<CoSymbol<L>>),
    /// The convolution product; the left factor eats the first leg.
    Product(Box<CoSymbol<L>>, Box<CoSymbol<L>>),
    /// The dual star.
    Star(Box<CoSymbol<L>>),
}

impl<L: Ord + Clone> CoSymbol<L> {
    pub fn counit() -> Self {
        CoSymbol::Counit
    }

    pub fn eg(g: Element<L>) -> Self {
        CoSymbol::Eg(g)
    }

    pub fn sum(terms: Vec<CoSymbol<L>>) -> Self {
        CoSymbol::Sum(terms)
    }

    pub fn scale(c: QScalar, inner: CoSymbol<L>) -> Self {
        CoSymbol::Scale(c, Box::new(inner))
    }

    pub fn product(left: CoSymbol<L>, right: CoSymbol<L>) -> Self {
        CoSymbol::Product(Box::new(left), Box::new(right))
    }

    pub fn star(inner: CoSymbol<L>) -> Self {
        CoSymbol::Star(Box::new(inner))
    }
}

/// Evaluate a co-symbol on an element.
pub fn cosymbol_eval<I: CoalgebraInstance>(
    inst: &I,
    lam: &CoSymbol<I::Label>,
    f: &Element<I::Label>,
) -> QScalar {
    match lam {
        CoSymbol::Counit => inst.counit(f),
        CoSymbol::Eg(g) => inst.form(g, f),
        CoSymbol::Sum(terms) => {
            let mut out = QScalar::zero();
            for t in terms {
                out = out.add(&cosymbol_eval(inst, t, f));
            }
            out
        }
        CoSymbol::Scale(c, inner) => c.mul(&cosymbol_eval(inst, inner, f)),
        CoSymbol::Product(left, right) => {
            let mut out = QScalar::zero();
            for ((u, v), c) in inst.coproduct(f).iter() {
                let lu = cosymbol_eval(inst, left, &Element::basis(u.clone()));
                if lu.is_zero() {
                    continue;
                }
                let rv = cosymbol_eval(inst, right, &Element::basis(v.clone()));
                out = out.add(&c.mul(&lu).mul(&rv));
            }
            out
        }
        CoSymbol::Star(inner) => {
            cosymbol_eval(inst, inner, &inst.star(f)).conj()
        }
    }
}

/// The generalized co-Toeplitz operator `C_lam = (id (x) lam) . beta`
/// applied to `phi`, which must be supported in the holomorphic
/// subspace.
pub fn ctoeplitz_cosymbol_apply<I: CoalgebraInstance>(
    inst: &I,
    lam: &CoSymbol<I::Label>,
    phi: &Element<I::Label>,
) -> Result<Element<I::Label>> {
    if !inst.supported_in_p(phi) {
        return Err(crate::Error::OutsideSubspace);
    }
    let mut out = Element::zero();
    for ((x, y), c) in coaction_beta(inst, phi).iter() {
        let value = cosymbol_eval(inst, lam, &Element::basis(y.clone()));
        out.add_term(x, &value.mul(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{ctoeplitz_apply, Suq2Instance};
    use crate::suq2::{BasisMonomial, WeightFunction};

    fn mono(k: i64, l: u32, m: u32) -> BasisMonomial {
        BasisMonomial::new(k, l, m)
    }

    #[test]
    fn counit_is_the_dual_unit() {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        let lam = CoSymbol::eg(Element::basis(mono(1, 1, 0)));
        for probe in [mono(1, 1, 0), mono(1, 2, 1), mono(0, 0, 0)] {
            let f = Element::basis(probe);
            let plain = cosymbol_eval(&inst, &lam, &f);
            let left = cosymbol_eval(&inst, &CoSymbol::product(CoSymbol::counit(), lam.clone()), &f);
            let right = cosymbol_eval(&inst, &CoSymbol::product(lam.clone(), CoSymbol::counit()), &f);
            assert_eq!(left, plain);
            assert_eq!(right, plain);
        }
    }

    #[test]
    fn eg_operator_matches_symbol_operator() {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        let g = Element::basis(mono(1, 1, 0));
        let lam = CoSymbol::eg(g.clone());
        for phi in [mono(1, 1, 0), mono(2, 0, 0), mono(0, 2, 0), mono(1, 2, 0)] {
            let phi = Element::basis(phi);
            assert_eq!(
                ctoeplitz_cosymbol_apply(&inst, &lam, &phi).unwrap(),
                ctoeplitz_apply(&inst, &g, &phi).unwrap()
            );
        }
    }

    #[test]
    fn scale_is_linear_not_conjugated() {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        let lam = CoSymbol::eg(Element::basis(mono(0, 1, 1)));
        let scaled = CoSymbol::scale(QScalar::i(), lam.clone());
        let f = Element::basis(mono(0, 1, 1));
        assert_eq!(
            cosymbol_eval(&inst, &scaled, &f),
            QScalar::i().mul(&cosymbol_eval(&inst, &lam, &f))
        );
    }

    #[test]
    fn star_of_eg_uses_the_form_star() {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        // (e_g)*(f) = (e_g(f*))* with g = c: probe on c*.
        let lam = CoSymbol::star(CoSymbol::eg(Element::basis(mono(0, 1, 0))));
        let f = Element::basis(mono(0, 0, 1));
        // f* = c, <c, c> = w(0,1) = 1, conjugate stays 1.
        assert_eq!(cosymbol_eval(&inst, &lam, &f), QScalar::one());
    }
}
