//! Closed forms: the `a^m (a*)^m` expansion and the single-shift rule
//! for co-Toeplitz operators with monomial symbols.
//!
//! Normal ordering a balanced power gives
//!
//! ```text
//!     a^m (a*)^m = sum_{i=0}^m [m i]_{q^-2} (-1)^i q^{i+2im-i^2} c^i (c*)^i
//! ```
//!
//! and threading that expansion through the quantization pipeline
//! yields, for the symbol `e[k,l,m]` acting on the column `a^r c^s`, a
//! single target column `a^{r-d} c^{s-d}` with `d = l - m`: the
//! operator is nonzero only when `0 <= d <= min(r, s)` and
//! `r + s - k = d`, and the coefficient is the weighted double sum
//! computed by [`closed_form_coefficient`]. The matrix builders compute
//! the same numbers through the coproduct and projection; the suites
//! compare the two routes entry by entry.

use crate::scalar::{qbinomial, QRational, QScalar};

use super::basis::BasisMonomial;
use super::form::WeightFunction;
use super::rewrite::Element;

/// A label for the truncated operator basis: `phi[r,s]` spans the
/// holomorphic subspace, and `psi[k,m]` (with `m > 0`) the extra
/// antiholomorphic rays of `P'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PIndex {
    Phi { r: u32, s: u32 },
    Psi { k: u32, m: u32 },
}

impl PIndex {
    pub fn phi(r: u32, s: u32) -> Self {
        PIndex::Phi { r, s }
    }

    pub fn psi(k: u32, m: u32) -> Self {
        debug_assert!(m > 0, "psi rays require m > 0");
        PIndex::Psi { k, m }
    }

    pub fn degree(&self) -> u32 {
        match self {
            PIndex::Phi { r, s } => r + s,
            PIndex::Psi { k, m } => k + m,
        }
    }

    /// The unnormalized monomial this index labels.
    pub fn monomial(&self) -> BasisMonomial {
        match self {
            PIndex::Phi { r, s } => BasisMonomial::new(*r as i64, *s, 0),
            PIndex::Psi { k, m } => BasisMonomial::new(*k as i64, 0, *m),
        }
    }

    /// The weight value `<e, e>` of the labeled monomial.
    pub fn weight(&self, w: &WeightFunction) -> num::BigRational {
        match self {
            PIndex::Phi { r, s } => w.value(*r as i64, *s as i64),
            PIndex::Psi { k, m } => w.value(*k as i64, -(*m as i64)),
        }
    }
}

impl std::fmt::Display for PIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PIndex::Phi { r, s } => write!(f, "phi[{r},{s}]"),
            PIndex::Psi { k, m } => write!(f, "psi[{k},{m}]"),
        }
    }
}

/// Which subspace the pipeline projects onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    P,
    PPrime,
}

/// The truncated basis labels with total degree at most `max_degree`,
/// graded, and within a degree `phi` before `psi`, each by ascending
/// first index.
pub fn basis_indices(max_degree: u32, subspace: Subspace) -> Vec<PIndex> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for r in 0..=d {
            out.push(PIndex::phi(r, d - r));
        }
        if subspace == Subspace::PPrime && d > 0 {
            for k in 0..d {
                out.push(PIndex::psi(k, d - k));
            }
        }
    }
    out
}

/// The normal form of `a^m (a*)^m` as an explicit `c c*` polynomial.
pub fn aa_star_expansion(m: u32) -> Element {
    let mut out = Element::zero();
    for i in 0..=m {
        let binom = qbinomial(m, i, -2).expect("i <= m");
        let exp = i as i64 + 2 * (i as i64) * (m as i64) - (i as i64) * (i as i64);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let coeff = binom.mul(&QScalar::term(QRational::from_int(sign), exp));
        out.add_term(&BasisMonomial::new(0, i, i), &coeff);
    }
    out
}

/// The closed-form action of the co-Toeplitz operator with symbol
/// `e[k,l,m]` on the column `a^r c^s`.
///
/// Returns the target column and its coefficient, or `(None, 0)` when
/// the support conditions fail. The coefficient carries the weight
/// factor `w(k, l-m)`; in normalized bases the caller folds in the
/// square-root ratio of target and source weights.
pub fn closed_form_coefficient(
    sym: &BasisMonomial,
    r: u32,
    s: u32,
    w: &WeightFunction,
) -> (Option<PIndex>, QScalar) {
    let d = sym.l as i64 - sym.m as i64;
    let degree_match = (r + s) as i64 - sym.k == d;
    if d < 0 || !degree_match || d > r.min(s) as i64 {
        return (None, QScalar::zero());
    }
    let d = d as u32;
    let target = PIndex::phi(r - d, s - d);

    let mut sum = QScalar::zero();
    for n in 0..=d.min(r) {
        let p = d - n;
        if p > s {
            continue;
        }
        // Factor picked up moving c^n through a^{s-p}, times the
        // alternating prefactor of the n-th binomial term.
        let shuffle = QScalar::q_pow(-((n * (s - p)) as i64));
        let minus_q_n = QScalar::term(QRational::from_int(-1), 1).pow(n);
        let b_r = qbinomial(r, n, -2).expect("n <= r");
        let b_s = qbinomial(s, p, -2).expect("p <= s");

        let mut inner = QScalar::zero();
        for i in 0..=p {
            let b_p = qbinomial(p, i, -2).expect("i <= p");
            let a_exp = (p * (s - p + n)) as i64 + i as i64 + 2 * (i as i64) * (p as i64)
                - (i as i64) * (i as i64);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            inner = inner.add(&b_p.mul(&QScalar::term(QRational::from_int(sign), a_exp)));
        }

        sum = sum.add(&shuffle.mul(&minus_q_n).mul(&b_r).mul(&b_s).mul(&inner));
    }

    let weight = QScalar::from_ratio(w.value(sym.k, d as i64));
    (Some(target), sum.mul(&weight))
}
