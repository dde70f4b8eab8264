//! Product, star, coproduct, counit, and antipode for SU_q(2).
//!
//! The product concatenates words and normal orders the result, so the
//! rewrite engine is the single source of truth for the relations. On
//! generators the coproduct acts by
//!
//! ```text
//!     D(a)  = a (x) a   - q c* (x) c        D(c)  = c  (x) a  + a* (x) c
//!     D(a*) = a* (x) a* - q c  (x) c*       D(c*) = c* (x) a* + a  (x) c*
//! ```
//!
//! and extends multiplicatively; tensor factors multiply leg-wise. The
//! restricted coproduct on the holomorphic subspace sends `a` to
//! `a (x) a` and `c` to `c (x) a`. It is co-associative but admits no
//! counit, and it is only defined on elements supported inside `P`.
//!
//! Monomial coproducts are memoized globally: the same small monomials
//! recur in every pipeline computation, and each is a pure function of
//! its index.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::linear;
use crate::scalar::{QRational, QScalar};
use crate::{Error, Result};

use super::basis::{BasisMonomial, Letter};
use super::rewrite::{normal_order, Element};

/// Linear combinations of simple tensors over the monomial basis.
pub type TensorElement = linear::TensorElement<BasisMonomial>;

/// Three-fold tensors, used by the co-associativity checks.
pub type TripleTensor = linear::Element<(BasisMonomial, BasisMonomial, BasisMonomial)>;

/// Product of two basis monomials.
pub fn mul_basis(x: &BasisMonomial, y: &BasisMonomial) -> Element {
    let mut letters = x.word().0;
    letters.extend(y.word().0);
    normal_order(&letters.into())
}

/// Bilinear product of elements.
pub fn multiply(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_scaled(&mul_basis(mx, my), &cx.mul(cy));
        }
    }
    out
}

/// The *-involution: antilinear, anti-multiplicative, star on letters.
pub fn star(x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        out.add_scaled(&normal_order(&m.word().star()), &c.conj());
    }
    out
}

fn letter_coproduct(letter: Letter) -> TensorElement {
    let a = BasisMonomial::new(1, 0, 0);
    let a_star = BasisMonomial::new(-1, 0, 0);
    let c = BasisMonomial::new(0, 1, 0);
    let c_star = BasisMonomial::new(0, 0, 1);
    let minus_q = QScalar::term(QRational::from_int(-1), 1);
    let mut t = TensorElement::zero();
    match letter {
        Letter::A => {
            t.add_term(&a, &a, &QScalar::one());
            t.add_term(&c_star, &c, &minus_q);
        }
        Letter::AStar => {
            t.add_term(&a_star, &a_star, &QScalar::one());
            t.add_term(&c, &c_star, &minus_q);
        }
        Letter::C => {
            t.add_term(&c, &a, &QScalar::one());
            t.add_term(&a_star, &c, &QScalar::one());
        }
        Letter::CStar => {
            t.add_term(&c_star, &a_star, &QScalar::one());
            t.add_term(&a, &c_star, &QScalar::one());
        }
    }
    t
}

/// Leg-wise product of tensors, normal ordering each leg.
pub fn tensor_mul(x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((x1, x2), cx) in x.iter() {
        for ((y1, y2), cy) in y.iter() {
            let left = mul_basis(x1, y1);
            let right = mul_basis(x2, y2);
            out.add_outer(&left, &right, &cx.mul(cy));
        }
    }
    out
}

static COPRODUCT_MEMO: Lazy<Mutex<HashMap<BasisMonomial, Arc<TensorElement>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coproduct of a basis monomial, shared via a global memo table.
pub fn comultiply_monomial(mono: &BasisMonomial) -> Arc<TensorElement> {
    if let Some(hit) = COPRODUCT_MEMO.lock().unwrap().get(mono) {
        return hit.clone();
    }
    // Peel the rightmost letter of the word a^k c^l (c*)^m so each step
    // multiplies a memoized tensor by a two-term letter coproduct.
    let value = if *mono == BasisMonomial::one() {
        TensorElement::basis(BasisMonomial::one(), BasisMonomial::one())
    } else if mono.m > 0 {
        let prev = comultiply_monomial(&BasisMonomial::new(mono.k, mono.l, mono.m - 1));
        tensor_mul(&prev, &letter_coproduct(Letter::CStar))
    } else if mono.l > 0 {
        let prev = comultiply_monomial(&BasisMonomial::new(mono.k, mono.l - 1, 0));
        tensor_mul(&prev, &letter_coproduct(Letter::C))
    } else if mono.k > 0 {
        let prev = comultiply_monomial(&BasisMonomial::new(mono.k - 1, 0, 0));
        tensor_mul(&prev, &letter_coproduct(Letter::A))
    } else {
        let prev = comultiply_monomial(&BasisMonomial::new(mono.k + 1, 0, 0));
        tensor_mul(&prev, &letter_coproduct(Letter::AStar))
    };
    let arc = Arc::new(value);
    COPRODUCT_MEMO
        .lock()
        .unwrap()
        .entry(*mono)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Coproduct of an element.
pub fn comultiply(x: &Element) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in x.iter() {
        for ((l, r), tc) in comultiply_monomial(m).iter() {
            out.add_term(l, r, &tc.mul(c));
        }
    }
    out
}

/// The counit: one on every `e[k,0,0]`, zero elsewhere.
pub fn counit(x: &Element) -> QScalar {
    let mut out = QScalar::zero();
    for (m, c) in x.iter() {
        if m.l == 0 && m.m == 0 {
            out = out.add(c);
        }
    }
    out
}

fn letter_antipode(letter: Letter) -> Element {
    match letter {
        Letter::A => Element::basis(BasisMonomial::new(-1, 0, 0)),
        Letter::AStar => Element::basis(BasisMonomial::new(1, 0, 0)),
        Letter::C => Element::term(
            BasisMonomial::new(0, 1, 0),
            QScalar::term(QRational::from_int(-1), 1),
        ),
        Letter::CStar => Element::term(
            BasisMonomial::new(0, 0, 1),
            QScalar::term(QRational::from_int(-1), -1),
        ),
    }
}

/// The antipode, extended anti-multiplicatively from
/// `S(a) = a*, S(a*) = a, S(c) = -q c, S(c*) = -q^-1 c*`.
pub fn antipode(x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        let mut acc = Element::basis(BasisMonomial::one());
        for letter in m.word().0.iter().rev() {
            acc = multiply(&acc, &letter_antipode(*letter));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// The restricted coproduct on `P`. Errors when `x` has support
/// outside the holomorphic subspace.
pub fn comultiply_p(x: &Element) -> Result<TensorElement> {
    let a = BasisMonomial::new(1, 0, 0);
    let c = BasisMonomial::new(0, 1, 0);
    let mut out = TensorElement::zero();
    for (m, coeff) in x.iter() {
        if !m.in_p() {
            return Err(Error::OutsideSubspace);
        }
        let mut acc = TensorElement::basis(BasisMonomial::one(), BasisMonomial::one());
        for letter in m.word().0 {
            let step = match letter {
                Letter::A => TensorElement::basis(a, a),
                Letter::C => TensorElement::basis(c, a),
                _ => unreachable!("monomial in P spells only a and c"),
            };
            acc = tensor_mul(&acc, &step);
        }
        for ((l, r), tc) in acc.iter() {
            out.add_term(l, r, &tc.mul(coeff));
        }
    }
    Ok(out)
}

/// Leg-wise star with conjugated coefficients, `(x (x) y)* = x* (x) y*`.
pub fn star_tensor(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((l, r), c) in t.iter() {
        let left = star(&Element::basis(*l));
        let right = star(&Element::basis(*r));
        out.add_outer(&left, &right, &c.conj());
    }
    out
}

/// Apply the coproduct to the left leg, giving `(D (x) id)` of `t`.
pub fn comultiply_left_leg(t: &TensorElement) -> TripleTensor {
    let mut out = TripleTensor::zero();
    for ((l, r), c) in t.iter() {
        for ((l1, l2), cc) in comultiply_monomial(l).iter() {
            out.add_term(&(*l1, *l2, *r), &cc.mul(c));
        }
    }
    out
}

/// Apply the coproduct to the right leg, giving `(id (x) D)` of `t`.
pub fn comultiply_right_leg(t: &TensorElement) -> TripleTensor {
    let mut out = TripleTensor::zero();
    for ((l, r), c) in t.iter() {
        for ((r1, r2), cc) in comultiply_monomial(r).iter() {
            out.add_term(&(*l, *r1, *r2), &cc.mul(c));
        }
    }
    out
}
