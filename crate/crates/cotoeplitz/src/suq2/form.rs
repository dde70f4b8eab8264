//! The weighted sesquilinear form and the holomorphic projections.
//!
//! The form pairs basis monomials of equal `k` and equal `c`-excess
//! `d = l - m`:
//!
//! ```text
//!     <e[k,l,m], e[r,s,t]> = w(k, l-m) delta_{k,r} delta_{l-m,s-t}
//! ```
//!
//! with `w` a strictly positive rational weight, antilinear in the
//! first slot. Distinct bidegrees are automatically orthogonal.
//!
//! Two independent routes compute the projection onto
//! `P = span{a^r c^s}`: [`project_p`] applies the index rule
//! `e[k,l,m] -> e[k,l-m,0]` (for `k >= 0`, `l >= m`, zero otherwise),
//! while [`project_p_via_form`] expands against the normalized basis
//! `phi_ij = w(i,j)^{-1/2} e[i,j,0]` using the form itself. The suites
//! check that the two agree. [`project_p_prime`] targets the enlarged
//! subspace `P'` that also carries the antiholomorphic rays
//! `psi_km = w(k,-m)^{-1/2} e[k,0,m]` with `m > 0`.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Signed};

use crate::scalar::QScalar;
use crate::{Error, Result};

use super::basis::BasisMonomial;
use super::rewrite::Element;

/// A strictly positive rational weight `w(k, d)` indexed by the power
/// of `a` and the `c`-excess `d = l - m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightFunction {
    /// The constant weight one.
    One,
    /// Finitely many overrides on top of a positive default.
    Table {
        entries: BTreeMap<(i64, i64), BigRational>,
        default: BigRational,
    },
}

impl WeightFunction {
    pub fn one() -> Self {
        WeightFunction::One
    }

    /// Build a table weight, rejecting non-positive values.
    pub fn table(
        entries: BTreeMap<(i64, i64), BigRational>,
        default: BigRational,
    ) -> Result<Self> {
        if !default.is_positive() || entries.values().any(|v| !v.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightFunction::Table { entries, default })
    }

    pub fn value(&self, k: i64, d: i64) -> BigRational {
        match self {
            WeightFunction::One => BigRational::from_integer(1.into()),
            WeightFunction::Table { entries, default } => {
                entries.get(&(k, d)).cloned().unwrap_or_else(|| default.clone())
            }
        }
    }
}

/// The sesquilinear form, antilinear in `x` and linear in `y`.
pub fn form(x: &Element, y: &Element, w: &WeightFunction) -> QScalar {
    let mut out = QScalar::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            if mx.k == my.k && mx.l as i64 - mx.m as i64 == my.l as i64 - my.m as i64 {
                let weight = QScalar::from_ratio(w.value(mx.k, mx.l as i64 - mx.m as i64));
                out = out.add(&cx.conj().mul(cy).mul(&weight));
            }
        }
    }
    out
}

/// Projection onto `P` by the index rule, term by term.
pub fn project_p(x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.iter() {
        if m.k >= 0 && m.l >= m.m {
            out.add_term(&BasisMonomial::new(m.k, m.l - m.m, 0), c);
        }
    }
    out
}

/// Projection onto `P` as a sum of form pairings against `phi_ij`.
///
/// Each candidate `(i, j)` contributes `<e[i,j,0], x> / w(i,j)` times
/// `e[i,j,0]`; the inverse square roots of the normalization cancel in
/// the product. Only pairs that meet the form's index deltas against
/// the support of `x` can contribute, which keeps the sum finite.
pub fn project_p_via_form(x: &Element, w: &WeightFunction) -> Element {
    let mut candidates: BTreeSet<(i64, u32)> = BTreeSet::new();
    for (m, _) in x.iter() {
        let d = m.l as i64 - m.m as i64;
        if m.k >= 0 && d >= 0 {
            candidates.insert((m.k, d as u32));
        }
    }
    let mut out = Element::zero();
    for (i, j) in candidates {
        let basis = Element::basis(BasisMonomial::new(i, j, 0));
        let pairing = form(&basis, x, w);
        let inv_weight = QScalar::from_ratio(w.value(i, j as i64).recip());
        out.add_scaled(&basis, &pairing.mul(&inv_weight));
    }
    out
}

/// Projection onto the enlarged subspace `P'`, which keeps a
/// `c*`-surplus as an antiholomorphic ray instead of killing it.
pub fn project_p_prime(x: &Element, w: &WeightFunction) -> Element {
    let mut out = project_p_via_form(x, w);
    let mut candidates: BTreeSet<(i64, u32)> = BTreeSet::new();
    for (m, _) in x.iter() {
        let d = m.l as i64 - m.m as i64;
        if m.k >= 0 && d < 0 {
            candidates.insert((m.k, (-d) as u32));
        }
    }
    for (k, j) in candidates {
        let basis = Element::basis(BasisMonomial::new(k, 0, j));
        let pairing = form(&basis, x, w);
        let inv_weight = QScalar::from_ratio(w.value(k, -(j as i64)).recip());
        out.add_scaled(&basis, &pairing.mul(&inv_weight));
    }
    out
}
