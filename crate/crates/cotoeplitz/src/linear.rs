//! Formal linear combinations over an ordered basis-label type.
//!
//! [`Element`] is a finite sum `sum c_l * l` with [`QScalar`]
//! coefficients; [`TensorElement`] is the same over ordered pairs of
//! labels. Both stay canonical (zero coefficients are dropped on
//! insertion), so `==` is mathematical equality and iteration order is
//! deterministic.
//!
//! Nothing here knows about multiplication, stars, or coproducts; those
//! belong to the concrete (co-)algebra working over these containers.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::QScalar;

/// A finite formal linear combination of basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element<L: Ord> {
    terms: BTreeMap<L, QScalar>,
}

impl<L: Ord + Clone> Default for Element<L> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> Element<L> {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The single basis vector `l` with coefficient one.
    pub fn basis(l: L) -> Self {
        Element::term(l, QScalar::one())
    }

    pub fn term(l: L, c: QScalar) -> Self {
        let mut out = Element::zero();
        out.add_term(&l, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `l` (zero when absent).
    pub fn coeff(&self, l: &L) -> QScalar {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &QScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, l: &L, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(l.clone()).or_default();
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(l);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scaled(&self, s: &QScalar) -> Self {
        let mut out = Element::zero();
        for (l, c) in self.iter() {
            out.add_term(l, &c.mul(s));
        }
        out
    }

    /// `self += s * other`, accumulating in place.
    pub fn add_scaled(&mut self, other: &Self, s: &QScalar) {
        for (l, c) in other.iter() {
            self.add_term(l, &c.mul(s));
        }
    }

    /// Apply `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        let mut out = Element::zero();
        for (l, c) in self.iter() {
            out.add_term(l, &f(c));
        }
        out
    }
}

/// A finite formal linear combination of simple tensors `x (x) y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement<L: Ord> {
    terms: BTreeMap<(L, L), QScalar>,
}

impl<L: Ord + Clone> Default for TensorElement<L> {
    fn default() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> TensorElement<L> {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn basis(left: L, right: L) -> Self {
        let mut out = TensorElement::zero();
        out.add_term(&left, &right, &QScalar::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, left: &L, right: &L) -> QScalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(L, L), &QScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: &L, right: &L, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (left.clone(), right.clone());
        let entry = self.terms.entry(key.clone()).or_default();
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in other.iter() {
            out.add_term(l, r, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in other.iter() {
            out.add_term(l, r, &c.neg());
        }
        out
    }

    pub fn scaled(&self, s: &QScalar) -> Self {
        let mut out = TensorElement::zero();
        for ((l, r), c) in self.iter() {
            out.add_term(l, r, &c.mul(s));
        }
        out
    }

    /// Outer product `s * (x (x) y)` accumulated into `self`.
    pub fn add_outer(&mut self, x: &Element<L>, y: &Element<L>, s: &QScalar) {
        for (lx, cx) in x.iter() {
            for (ly, cy) in y.iter() {
                self.add_term(lx, ly, &cx.mul(cy).mul(s));
            }
        }
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for Element<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(l, c)| {
                if c.is_one() {
                    format!("{l}")
                } else {
                    format!("({c})*{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for TensorElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|((l, r), c)| {
                if c.is_one() {
                    format!("{l} (x) {r}")
                } else {
                    format!("({c})*{l} (x) {r}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cancellation() {
        let x = Element::basis(3u32);
        let y = x.sub(&x);
        assert!(y.is_zero());
        assert_eq!(y, Element::zero());
    }

    #[test]
    fn outer_product_distributes() {
        let x = Element::basis(1u32).add(&Element::basis(2));
        let y = Element::term(5u32, QScalar::from_int(2));
        let mut t = TensorElement::zero();
        t.add_outer(&x, &y, &QScalar::one());
        assert_eq!(t.num_terms(), 2);
        assert_eq!(t.coeff(&1, &5), QScalar::from_int(2));
        assert_eq!(t.coeff(&2, &5), QScalar::from_int(2));
    }
}
