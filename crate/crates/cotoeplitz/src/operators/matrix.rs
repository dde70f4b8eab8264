//! Truncated matrix realizations of quantization operators.
//!
//! Operators act on the span of the holomorphic basis labels of total
//! degree at most `N`. Since every operator built from a symbol or
//! co-symbol is degree-nonincreasing, truncation loses nothing for the
//! matrices themselves; the `escaped` bookkeeping exists so that
//! compositions of arbitrary matrices stay honest if that ever changes.
//!
//! Matrices carry one of two basis modes. In [`BasisMode::Orthonormal`]
//! the entries are coordinates in the normalized basis `e / sqrt(<e,e>)`,
//! which keeps arithmetic exact precisely when every touched weight is
//! the square of a rational. Otherwise entries are raw coordinates in
//! the unnormalized basis ([`BasisMode::Epsilon`]) and adjoint
//! comparisons insert the diagonal weight metric explicitly.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Zero};

use crate::coalgebra::{ctoeplitz_apply, ctoeplitz_cosymbol_apply, CoSymbol, CoalgebraInstance};
use crate::linear::Element;
use crate::scalar::{exact_sqrt, QRational, QScalar};
use crate::suq2::{basis_indices, closed_form_coefficient, BasisMonomial, Subspace, WeightFunction};
use crate::{Error, Result};

/// Degree cutoff for the operator basis: labels with total degree at
/// most `max_degree` are kept, in the instance's graded enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub max_degree: u32,
}

impl Truncation {
    pub fn new(max_degree: u32) -> Self {
        Truncation { max_degree }
    }
}

/// Whether matrix entries are normalized coordinates or raw ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisMode {
    Orthonormal,
    Epsilon,
}

/// A sparse operator matrix over the truncated basis.
///
/// Entries are stored column-major with zero entries dropped. `escaped`
/// lists columns whose image had support beyond the truncation, which
/// marks every entry of those columns (and anything composed onto them)
/// as a lower bound rather than an exact coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix<L: Ord + Clone> {
    pub max_degree: u32,
    pub mode: BasisMode,
    cols: Vec<L>,
    data: BTreeMap<L, BTreeMap<L, QScalar>>,
    escaped: BTreeSet<L>,
}

impl<L: Ord + Clone> OperatorMatrix<L> {
    pub fn zero(max_degree: u32, mode: BasisMode, cols: Vec<L>) -> Self {
        OperatorMatrix {
            max_degree,
            mode,
            cols,
            data: BTreeMap::new(),
            escaped: BTreeSet::new(),
        }
    }

    pub fn identity(max_degree: u32, mode: BasisMode, cols: Vec<L>) -> Self {
        let mut out = Self::zero(max_degree, mode, cols);
        for l in out.cols.clone() {
            out.add_to(&l.clone(), &l, &QScalar::one());
        }
        out
    }

    /// The basis labels, in enumeration order.
    pub fn labels(&self) -> &[L] {
        &self.cols
    }

    pub fn escaped(&self) -> &BTreeSet<L> {
        &self.escaped
    }

    pub fn mark_escaped(&mut self, col: &L) {
        self.escaped.insert(col.clone());
    }

    pub fn entry(&self, row: &L, col: &L) -> QScalar {
        self.data
            .get(col)
            .and_then(|column| column.get(row))
            .cloned()
            .unwrap_or_else(QScalar::zero)
    }

    pub fn add_to(&mut self, row: &L, col: &L, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let column = self.data.entry(col.clone()).or_default();
        let updated = match column.get(row) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if updated.is_zero() {
            column.remove(row);
            if column.is_empty() {
                self.data.remove(col);
            }
        } else {
            column.insert(row.clone(), updated);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.data.values().map(|c| c.len()).sum()
    }

    /// All nonzero entries as `(row, col, coeff)`, columns in
    /// enumeration order.
    pub fn entries(&self) -> Vec<(&L, &L, &QScalar)> {
        let mut out = Vec::new();
        for col in &self.cols {
            if let Some(column) = self.data.get(col) {
                for (row, c) in column {
                    out.push((row, col, c));
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: &QScalar) -> Self {
        let mut out = Self::zero(self.max_degree, self.mode, self.cols.clone());
        out.escaped = self.escaped.clone();
        for (col, column) in &self.data {
            for (row, c) in column {
                out.add_to(row, col, &c.mul(s));
            }
        }
        out
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.max_degree == other.max_degree && self.mode == other.mode && self.cols == other.cols
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::MatrixShapeMismatch);
        }
        let mut out = self.clone();
        out.escaped.extend(other.escaped.iter().cloned());
        for (col, column) in &other.data {
            for (row, c) in column {
                out.add_to(row, col, c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&QScalar::one().neg()))
    }

    /// Matrix product `self . other`: first apply `other`, then `self`.
    ///
    /// A column of the product is marked escaped when it was escaped in
    /// `other` or when it routes through an escaped column of `self`,
    /// since either way mass may have been lost.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::MatrixShapeMismatch);
        }
        let mut out = Self::zero(self.max_degree, self.mode, self.cols.clone());
        out.escaped = other.escaped.clone();
        for (col, column) in &other.data {
            for (mid, c) in column {
                if self.escaped.contains(mid) {
                    out.escaped.insert(col.clone());
                }
                if let Some(inner) = self.data.get(mid) {
                    for (row, d) in inner {
                        out.add_to(row, col, &d.mul(c));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The twisted commutator `x . y - twist (y . x)`.
pub fn commutator<L: Ord + Clone>(
    x: &OperatorMatrix<L>,
    y: &OperatorMatrix<L>,
    twist: &QScalar,
) -> Result<OperatorMatrix<L>> {
    x.compose(y)?.sub(&y.compose(x)?.scaled(twist))
}

/// Square roots of the truncated weights, when they all exist. This is
/// the gate for the orthonormal basis mode.
fn weight_sqrts<I: CoalgebraInstance>(inst: &I, cols: &[I::Label]) -> Option<Vec<BigRational>> {
    cols.iter().map(|l| exact_sqrt(&inst.p_weight(l))).collect()
}

fn assemble<I, F>(inst: &I, t: &Truncation, force_epsilon: bool, image: F) -> OperatorMatrix<I::Label>
where
    I: CoalgebraInstance,
    F: Fn(&I::Label) -> Element<I::Label>,
{
    let cols = inst.p_basis(t.max_degree);
    let sqrts = if force_epsilon { None } else { weight_sqrts(inst, &cols) };
    let mode = if sqrts.is_some() { BasisMode::Orthonormal } else { BasisMode::Epsilon };
    let position: BTreeMap<&I::Label, usize> =
        cols.iter().enumerate().map(|(i, l)| (l, i)).collect();

    let mut out = OperatorMatrix::zero(t.max_degree, mode, cols.clone());
    for (ci, col) in cols.iter().enumerate() {
        for (row, c) in image(col).iter() {
            if inst.degree(row) > t.max_degree {
                out.mark_escaped(col);
                continue;
            }
            let coeff = match &sqrts {
                // Normalized column e/sqrt(w) expressed in normalized
                // rows picks up sqrt(w_row)/sqrt(w_col).
                Some(roots) => {
                    let ri = position[row];
                    c.mul(&QScalar::from_ratio(&roots[ri] / &roots[ci]))
                }
                None => c.clone(),
            };
            out.add_to(row, col, &coeff);
        }
    }
    out
}

/// The matrix of the operator with symbol `g`, built column by column
/// through the coproduct-and-project pipeline.
///
/// The basis mode is chosen automatically: orthonormal when every
/// truncated weight is a perfect rational square, raw otherwise.
pub fn matrix_of_symbol<I: CoalgebraInstance>(
    inst: &I,
    g: &Element<I::Label>,
    t: &Truncation,
) -> OperatorMatrix<I::Label> {
    assemble(inst, t, false, |col| {
        ctoeplitz_apply(inst, g, &Element::basis(col.clone()))
            .expect("truncation columns lie in the holomorphic subspace")
    })
}

/// The matrix of the operator with co-symbol `lam`.
pub fn matrix_of_cosymbol<I: CoalgebraInstance>(
    inst: &I,
    lam: &CoSymbol<I::Label>,
    t: &Truncation,
) -> OperatorMatrix<I::Label> {
    assemble(inst, t, false, |col| {
        ctoeplitz_cosymbol_apply(inst, lam, &Element::basis(col.clone()))
            .expect("truncation columns lie in the holomorphic subspace")
    })
}

/// The matrix of the operator with symbol `g` on SU_q(2), built from
/// the single-shift closed form instead of the pipeline. Defined on the
/// plain holomorphic subspace only.
///
/// The operator is antilinear in its symbol, so the coefficients of `g`
/// enter conjugated.
pub fn matrix_of_symbol_closed_form(
    g: &Element<BasisMonomial>,
    t: &Truncation,
    w: &WeightFunction,
) -> OperatorMatrix<BasisMonomial> {
    let indices = basis_indices(t.max_degree, Subspace::P);
    let cols: Vec<BasisMonomial> = indices.iter().map(|i| i.monomial()).collect();
    let sqrts: Option<Vec<BigRational>> =
        indices.iter().map(|i| exact_sqrt(&i.weight(w))).collect();
    let mode = if sqrts.is_some() { BasisMode::Orthonormal } else { BasisMode::Epsilon };
    let position: BTreeMap<BasisMonomial, usize> =
        cols.iter().enumerate().map(|(i, l)| (*l, i)).collect();

    let mut out = OperatorMatrix::zero(t.max_degree, mode, cols);
    for (sym, sc) in g.iter() {
        let sc = sc.conj();
        for (ci, idx) in indices.iter().enumerate() {
            let (r, s) = match idx.monomial() {
                BasisMonomial { k, l, m: 0 } if k >= 0 => (k as u32, l),
                _ => unreachable!("holomorphic truncation indices"),
            };
            let (target, coeff) = closed_form_coefficient(sym, r, s, w);
            let Some(target) = target else { continue };
            let row = target.monomial();
            let coeff = match &sqrts {
                Some(roots) => coeff.mul(&QScalar::from_ratio(&roots[position[&row]] / &roots[ci])),
                None => coeff,
            };
            out.add_to(&row, &idx.monomial(), &coeff.mul(&sc));
        }
    }
    out
}

/// Ladder classification of a symbol by where it and its star live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolClass {
    /// Supported on the holomorphic subspace.
    Annihilation,
    /// Star-image supported on the holomorphic subspace.
    Creation,
    /// Neither.
    Mixed,
}

impl std::fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymbolClass::Annihilation => write!(f, "annihilation"),
            SymbolClass::Creation => write!(f, "creation"),
            SymbolClass::Mixed => write!(f, "mixed"),
        }
    }
}

pub fn classify_symbol(g: &Element<BasisMonomial>) -> SymbolClass {
    if g.support().all(|l| l.in_p()) {
        SymbolClass::Annihilation
    } else if crate::suq2::star(g).support().all(|l| l.in_p()) {
        SymbolClass::Creation
    } else {
        SymbolClass::Mixed
    }
}

/// One disagreeing entry of an adjoint comparison, with both metric
/// pairings at the specialized `q`.
#[derive(Debug, Clone)]
pub struct AdjointWitness<L> {
    pub row: L,
    pub col: L,
    pub lhs: QRational,
    pub rhs: QRational,
}

/// Outcome of [`adjoint_check`].
#[derive(Debug, Clone)]
pub struct AdjointReport<L: Ord + Clone> {
    pub holds: bool,
    /// Labels on which the comparison is meaningful at this truncation.
    pub interior: Vec<L>,
    /// Disagreements, capped at a handful for reporting.
    pub witnesses: Vec<AdjointWitness<L>>,
}

const MAX_WITNESSES: usize = 5;

/// Compare the operator of `star(g)` against the metric adjoint of the
/// operator of `g`, entry by entry at a positive rational `q`.
///
/// Both matrices are taken in raw coordinates and the weight metric is
/// inserted explicitly, so the check is exact for every positive
/// rational weight: the adjoint relation reads
///
/// ```text
///     B[v,u] <e_v, e_v>  =  conj(A[u,v]) <e_u, e_u>
/// ```
///
/// for `A` the matrix of `g` and `B` the matrix of `star(g)`. Since the
/// adjoint of a degree-lowering operator raises degree, entries whose
/// labels sit too close to the cutoff are excluded; the interior is
/// computed from the worst degree shift either matrix exhibits.
///
/// Errors when `q` is not strictly positive.
pub fn adjoint_check<I: CoalgebraInstance>(
    inst: &I,
    g: &Element<I::Label>,
    t: &Truncation,
    q_value: &BigRational,
) -> Result<AdjointReport<I::Label>> {
    if q_value <= &BigRational::zero() {
        return Err(Error::NonPositiveQ);
    }
    let a = assemble(inst, t, true, |col| {
        ctoeplitz_apply(inst, g, &Element::basis(col.clone()))
            .expect("truncation columns lie in the holomorphic subspace")
    });
    let g_star = inst.star(g);
    let b = assemble(inst, t, true, |col| {
        ctoeplitz_apply(inst, &g_star, &Element::basis(col.clone()))
            .expect("truncation columns lie in the holomorphic subspace")
    });

    let mut max_shift: i64 = 0;
    for (row, col, _) in a.entries().into_iter().chain(b.entries()) {
        max_shift = max_shift.max(inst.degree(col) as i64 - inst.degree(row) as i64);
    }
    let interior: Vec<I::Label> = a
        .labels()
        .iter()
        .filter(|l| inst.degree(l) as i64 + max_shift <= t.max_degree as i64)
        .cloned()
        .collect();

    let mut witnesses = Vec::new();
    'scan: for u in &interior {
        let wu = QRational::from_ratio(inst.p_weight(u));
        for v in &interior {
            let wv = QRational::from_ratio(inst.p_weight(v));
            let lhs = b.entry(v, u).specialize(q_value)?.mul(&wv);
            let rhs = a.entry(u, v).specialize(q_value)?.conj().mul(&wu);
            if lhs != rhs {
                witnesses.push(AdjointWitness { row: v.clone(), col: u.clone(), lhs, rhs });
                if witnesses.len() >= MAX_WITNESSES {
                    break 'scan;
                }
            }
        }
    }

    Ok(AdjointReport { holds: witnesses.is_empty(), interior, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{GroupLikeInstance, Suq2Instance};
    use crate::scalar::QScalar;

    fn mono(k: i64, l: u32, m: u32) -> BasisMonomial {
        BasisMonomial::new(k, l, m)
    }

    fn inst_one() -> Suq2Instance {
        Suq2Instance::with_weight(WeightFunction::one())
    }

    #[test]
    fn symbol_c_star_gives_zero_matrix() {
        let m = matrix_of_symbol(&inst_one(), &Element::basis(mono(0, 0, 1)), &Truncation::new(4));
        assert!(m.is_zero());
        assert!(m.escaped().is_empty());
    }

    #[test]
    fn balanced_symbols_are_diagonal() {
        // e[k,l,l] preserves each column.
        let m = matrix_of_symbol(&inst_one(), &Element::basis(mono(1, 1, 1)), &Truncation::new(4));
        assert!(!m.is_zero());
        for (row, col, _) in m.entries() {
            assert_eq!(row, col);
        }
    }

    #[test]
    fn shift_structure_of_columns() {
        // e[1,2,1] sends a^r c^s to the (r-1, s-1) slot, columns with
        // r+s = 2 only.
        let m = matrix_of_symbol(&inst_one(), &Element::basis(mono(1, 2, 1)), &Truncation::new(4));
        assert!(!m.is_zero());
        for (row, col, _) in m.entries() {
            assert_eq!(col.degree(), 2);
            assert_eq!(row.k, col.k - 1);
            assert_eq!(row.l, col.l - 1);
        }
    }

    #[test]
    fn pipeline_matches_closed_form_spot() {
        let w = WeightFunction::one();
        let t = Truncation::new(4);
        for sym in [mono(1, 1, 0), mono(0, 1, 1), mono(2, 1, 0), mono(-1, 2, 0), mono(1, 2, 1)] {
            let lhs = matrix_of_symbol(&inst_one(), &Element::basis(sym), &t);
            let rhs = matrix_of_symbol_closed_form(&Element::basis(sym), &t, &w);
            assert_eq!(lhs, rhs, "symbol {sym}");
        }
    }

    #[test]
    fn closed_form_is_antilinear_in_the_symbol() {
        let w = WeightFunction::one();
        let t = Truncation::new(3);
        let g = Element::term(mono(1, 1, 0), QScalar::i());
        let direct = matrix_of_symbol(&inst_one(), &g, &t);
        let closed = matrix_of_symbol_closed_form(&g, &t, &w);
        assert_eq!(direct, closed);
        // i-scaling the symbol scales the matrix by -i.
        let base = matrix_of_symbol_closed_form(&Element::basis(mono(1, 1, 0)), &t, &w);
        assert_eq!(closed, base.scaled(&QScalar::i().neg()));
    }

    #[test]
    fn counit_cosymbol_is_identity_on_both_subspaces() {
        for subspace in [Subspace::P, Subspace::PPrime] {
            let inst = Suq2Instance::new(WeightFunction::one(), subspace);
            let t = Truncation::new(3);
            let m = matrix_of_cosymbol(&inst, &CoSymbol::counit(), &t);
            let id = OperatorMatrix::identity(3, m.mode, m.labels().to_vec());
            assert_eq!(m, id);
        }
    }

    #[test]
    fn evaluation_cosymbol_matches_symbol_matrix() {
        let inst = inst_one();
        let t = Truncation::new(4);
        let g = Element::basis(mono(1, 1, 0));
        let via_symbol = matrix_of_symbol(&inst, &g, &t);
        let via_cosymbol = matrix_of_cosymbol(&inst, &CoSymbol::eg(g), &t);
        assert_eq!(via_symbol, via_cosymbol);
    }

    #[test]
    fn compose_identity_and_shapes() {
        let inst = inst_one();
        let t = Truncation::new(3);
        let x = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 0)), &t);
        let id = OperatorMatrix::identity(3, x.mode, x.labels().to_vec());
        assert_eq!(id.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&id).unwrap(), x);

        let smaller = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 0)), &Truncation::new(2));
        assert!(matches!(x.compose(&smaller), Err(Error::MatrixShapeMismatch)));
    }

    #[test]
    fn compose_associative_spot() {
        let inst = inst_one();
        let t = Truncation::new(4);
        let x = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 1)), &t);
        let y = matrix_of_symbol(&inst, &Element::basis(mono(0, 1, 1)), &t);
        let z = matrix_of_symbol(&inst, &Element::basis(mono(2, 0, 0)), &t);
        let lhs = x.compose(&y).unwrap().compose(&z).unwrap();
        let rhs = x.compose(&y.compose(&z).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_basics_and_golden() {
        let inst = inst_one();
        let t = Truncation::new(4);
        let x = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 1)), &t);
        assert!(commutator(&x, &x, &QScalar::one()).unwrap().is_zero());
        let id = OperatorMatrix::identity(4, x.mode, x.labels().to_vec());
        assert!(commutator(&id, &x, &QScalar::one()).unwrap().is_zero());

        // The operator of c vanishes under the degree constraint, so
        // its commutator with the operator of a is zero as well. Frozen
        // as computed.
        let ma = matrix_of_symbol(&inst, &Element::basis(mono(1, 0, 0)), &t);
        let mc = matrix_of_symbol(&inst, &Element::basis(mono(0, 1, 0)), &t);
        assert!(mc.is_zero());
        assert!(commutator(&ma, &mc, &QScalar::one()).unwrap().is_zero());
    }

    #[test]
    fn escape_bookkeeping_propagates() {
        let cols = vec![mono(0, 0, 0), mono(1, 0, 0)];
        let mut x = OperatorMatrix::zero(0, BasisMode::Epsilon, cols.clone());
        x.add_to(&mono(0, 0, 0), &mono(1, 0, 0), &QScalar::one());
        x.mark_escaped(&mono(0, 0, 0));
        let mut y = OperatorMatrix::zero(0, BasisMode::Epsilon, cols);
        y.add_to(&mono(0, 0, 0), &mono(1, 0, 0), &QScalar::one());
        // y routes column e[1,0,0] through x's escaped column.
        let xy = x.compose(&y).unwrap();
        assert!(xy.escaped().contains(&mono(1, 0, 0)));
        // The other order keeps x's own escaped column marked but has
        // nothing new to mark.
        let yx = y.compose(&x).unwrap();
        assert!(yx.escaped().contains(&mono(0, 0, 0)));
        assert!(!yx.escaped().contains(&mono(1, 0, 0)));
    }

    #[test]
    fn basis_mode_follows_weight_squareness() {
        let inst = inst_one();
        let t = Truncation::new(2);
        let m = matrix_of_symbol(&inst, &Element::basis(mono(1, 0, 0)), &t);
        assert_eq!(m.mode, BasisMode::Orthonormal);

        // A non-square weight value forces raw coordinates.
        let entries = [((1, 0), BigRational::new(2.into(), 1.into()))].into_iter().collect();
        let w = WeightFunction::table(entries, num::One::one()).unwrap();
        let inst2 = Suq2Instance::with_weight(w);
        let m2 = matrix_of_symbol(&inst2, &Element::basis(mono(1, 0, 0)), &t);
        assert_eq!(m2.mode, BasisMode::Epsilon);
    }

    #[test]
    fn classify_symbol_cases() {
        assert_eq!(classify_symbol(&Element::basis(mono(2, 3, 0))), SymbolClass::Annihilation);
        let star = crate::suq2::star(&Element::basis(mono(2, 3, 0)));
        assert_eq!(classify_symbol(&star), SymbolClass::Creation);
        assert_eq!(classify_symbol(&Element::basis(mono(0, 1, 1))), SymbolClass::Mixed);
    }

    #[test]
    fn adjoint_fails_for_a_at_rational_q() {
        // The operator of a* is zero while the operator of a is a
        // nonzero diagonal, so adjointness fails on the nose.
        let q = BigRational::new(1.into(), 2.into());
        let report =
            adjoint_check(&inst_one(), &Element::basis(mono(1, 0, 0)), &Truncation::new(4), &q)
                .unwrap();
        assert!(!report.holds);
        let w = &report.witnesses[0];
        assert_eq!(w.row, w.col);
        assert_eq!(w.row.degree(), 1);
        assert!(w.lhs.is_zero());
        assert_eq!(w.rhs, QRational::one());
    }

    #[test]
    fn adjoint_trivial_and_group_like_passes() {
        let q = BigRational::new(1.into(), 2.into());
        // c* gives the zero operator and c gives zero as well, so the
        // comparison is 0 against 0.
        let report =
            adjoint_check(&inst_one(), &Element::basis(mono(0, 0, 1)), &Truncation::new(4), &q)
                .unwrap();
        assert!(report.holds);

        let gl = GroupLikeInstance::new(3, [0usize, 2].into_iter().collect()).unwrap();
        let report = adjoint_check(&gl, &Element::basis(1usize), &Truncation::new(2), &q).unwrap();
        assert!(report.holds);

        assert!(matches!(
            adjoint_check(&inst_one(), &Element::basis(mono(1, 0, 0)), &Truncation::new(2),
                &BigRational::zero()),
            Err(Error::NonPositiveQ)
        ));
    }
}
