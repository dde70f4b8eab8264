//! Noncommutative polynomial relations among quantized symbols.
//!
//! Relations live in the free unital algebra over abstract generators,
//! one generator per designated symbol; a word's degree is its length.
//! Evaluating a relation substitutes each generator by its operator
//! matrix. Vanishing on a truncation is a necessary condition for
//! membership in the relation ideal, never a proof, and the verdict
//! type says so.
//!
//! The deformation machinery splits a relation into homogeneous parts
//! `R = R_0 + ... + R_n` and rescales part `i` by `h^(n-i)` for a
//! square root `h` of the deformation parameter, so that `h = 0`
//! recovers the top part and `h = 1` recovers the relation itself.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One};

use crate::scalar::QScalar;
use crate::{Error, Result};

use super::matrix::OperatorMatrix;

/// A finite linear combination of words over generators `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly<G: Ord + Clone> {
    terms: BTreeMap<Vec<G>, QScalar>,
}

impl<G: Ord + Clone> NCPoly<G> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        NCPoly::word(Vec::new(), QScalar::one())
    }

    pub fn generator(g: G) -> Self {
        NCPoly::word(vec![g], QScalar::one())
    }

    pub fn word(w: Vec<G>, c: QScalar) -> Self {
        let mut out = NCPoly::zero();
        out.add_word(w, &c);
        out
    }

    pub fn add_word(&mut self, w: Vec<G>, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let updated = match self.terms.get(&w) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if updated.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, updated);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<G>, &QScalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&QScalar::one().neg()))
    }

    pub fn scaled(&self, s: &QScalar) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_word(w.clone(), &c.mul(s));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_word(w, &c1.mul(c2));
            }
        }
        out
    }

    /// Highest word length present, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|w| w.len() as u32).max()
    }

    /// The part of word length exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            if w.len() as u32 == d {
                out.add_word(w.clone(), c);
            }
        }
        out
    }
}

/// Homogeneity classification of a nonzero relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationClass {
    Classical,
    Quantum,
}

impl fmt::Display for RelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationClass::Classical => write!(f, "classical"),
            RelationClass::Quantum => write!(f, "quantum"),
        }
    }
}

/// Classical when every word shares one length. Errors on zero.
pub fn classify_relation<G: Ord + Clone>(rel: &NCPoly<G>) -> Result<RelationClass> {
    if rel.is_zero() {
        return Err(Error::ZeroRelation);
    }
    let mut lengths = rel.terms.keys().map(|w| w.len());
    let first = lengths.next().expect("nonzero relation has a word");
    if lengths.all(|len| len == first) {
        Ok(RelationClass::Classical)
    } else {
        Ok(RelationClass::Quantum)
    }
}

/// The top-degree homogeneous part. Errors on zero.
pub fn associated_classical<G: Ord + Clone>(rel: &NCPoly<G>) -> Result<NCPoly<G>> {
    let n = rel.degree().ok_or(Error::ZeroRelation)?;
    Ok(rel.homogeneous_part(n))
}

/// Rescale the degree-`i` part by `hbar_sqrt^(n-i)`, `n` the top
/// degree. At 0 this is the associated classical relation; at 1 the
/// relation itself. Errors on zero.
pub fn hbar_deform<G: Ord + Clone>(rel: &NCPoly<G>, hbar_sqrt: &BigRational) -> Result<NCPoly<G>> {
    let n = rel.degree().ok_or(Error::ZeroRelation)?;
    let mut out = NCPoly::zero();
    let mut power = BigRational::one();
    // Walk degrees downward so `power` accumulates hbar_sqrt^(n-i).
    for i in (0..=n).rev() {
        let part = rel.homogeneous_part(i);
        if !part.is_zero() {
            out = out.add(&part.scaled(&QScalar::from_ratio(power.clone())));
        }
        power *= hbar_sqrt;
    }
    Ok(out)
}

/// Outcome of evaluating a relation against assigned matrices.
#[derive(Debug, Clone)]
pub enum RelationVerdict<L: Ord + Clone> {
    /// Every reliable entry vanished: a candidate relation at this
    /// truncation, nothing stronger.
    Candidate,
    /// A reliable nonzero entry, with its position and value.
    Violated { row: L, col: L, value: QScalar },
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for RelationVerdict<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationVerdict::Candidate => write!(f, "candidate relation at this truncation"),
            RelationVerdict::Violated { row, col, value } => {
                write!(f, "violated: entry [{row}, {col}] = {value}")
            }
        }
    }
}

/// Substitute matrices for generators and scan the result.
///
/// Entries in escaped columns are skipped; the first nonzero entry in
/// basis order is returned as the violation witness. Errors when a
/// generator has no assignment, when the assigned shapes differ, or
/// when nothing is assigned at all (there is then no shape to evaluate
/// in).
pub fn check_relation<G, L>(
    rel: &NCPoly<G>,
    assignment: &BTreeMap<G, OperatorMatrix<L>>,
) -> Result<RelationVerdict<L>>
where
    G: Ord + Clone + fmt::Display,
    L: Ord + Clone,
{
    let shape = assignment
        .values()
        .next()
        .ok_or_else(|| Error::UnassignedGenerator("no generators assigned".into()))?;
    let identity =
        OperatorMatrix::identity(shape.max_degree, shape.mode, shape.labels().to_vec());

    let mut total = OperatorMatrix::zero(shape.max_degree, shape.mode, shape.labels().to_vec());
    for (word, c) in rel.iter() {
        let mut value = identity.clone();
        for g in word {
            let m = assignment
                .get(g)
                .ok_or_else(|| Error::UnassignedGenerator(g.to_string()))?;
            value = value.compose(m)?;
        }
        total = total.add(&value.scaled(c))?;
    }

    for (row, col, value) in total.entries() {
        if total.escaped().contains(col) {
            continue;
        }
        return Ok(RelationVerdict::Violated {
            row: row.clone(),
            col: col.clone(),
            value: value.clone(),
        });
    }
    Ok(RelationVerdict::Candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::Suq2Instance;
    use crate::linear::Element;
    use crate::operators::matrix::{matrix_of_symbol, Truncation};
    use crate::suq2::{BasisMonomial, WeightFunction};

    fn mono(k: i64, l: u32, m: u32) -> BasisMonomial {
        BasisMonomial::new(k, l, m)
    }

    fn assigned(t: u32, symbols: &[BasisMonomial]) -> BTreeMap<BasisMonomial, OperatorMatrix<BasisMonomial>> {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        symbols
            .iter()
            .map(|s| (*s, matrix_of_symbol(&inst, &Element::basis(*s), &Truncation::new(t))))
            .collect()
    }

    #[test]
    fn classification_and_top_part() {
        let a = mono(1, 0, 0);
        let c = mono(0, 1, 0);
        let swap = NCPoly::generator(a).mul(&NCPoly::generator(c)).sub(
            &NCPoly::generator(c).mul(&NCPoly::generator(a)),
        );
        assert_eq!(classify_relation(&swap).unwrap(), RelationClass::Classical);

        let ccr = swap.sub(&NCPoly::one());
        assert_eq!(classify_relation(&ccr).unwrap(), RelationClass::Quantum);
        assert_eq!(associated_classical(&ccr).unwrap(), swap);

        assert!(matches!(classify_relation(&NCPoly::<BasisMonomial>::zero()), Err(Error::ZeroRelation)));
    }

    #[test]
    fn deformation_endpoints() {
        let a = mono(1, 0, 0);
        let rel = NCPoly::generator(a)
            .mul(&NCPoly::generator(a))
            .add(&NCPoly::one());
        // h = 0 keeps the top part, h = 1 the whole relation, and a
        // generic h scales the constant word by h^2.
        let zero = BigRational::from_integer(0.into());
        let one = BigRational::one();
        let h = BigRational::new(1.into(), 3.into());
        assert_eq!(hbar_deform(&rel, &zero).unwrap(), associated_classical(&rel).unwrap());
        assert_eq!(hbar_deform(&rel, &one).unwrap(), rel);
        let deformed = hbar_deform(&rel, &h).unwrap();
        assert_eq!(
            deformed.iter().find(|(w, _)| w.is_empty()).unwrap().1,
            &QScalar::from_frac(1, 9)
        );
    }

    #[test]
    fn relation_verdicts() {
        let a = mono(1, 0, 0);
        let cstar = mono(0, 0, 1);
        let assignment = assigned(4, &[a, cstar]);

        // The c* operator vanishes, so its generator alone is in the
        // kernel as far as this truncation can tell.
        let rel = NCPoly::generator(cstar);
        assert!(matches!(check_relation(&rel, &assignment).unwrap(), RelationVerdict::Candidate));

        // The zero polynomial is trivially a candidate.
        let cancel = NCPoly::generator(a).sub(&NCPoly::generator(a));
        assert!(matches!(check_relation(&cancel, &assignment).unwrap(), RelationVerdict::Candidate));

        // G_a alone is violated: the a operator pairs the degree-one
        // columns with weight w(1,0) = 1.
        match check_relation(&NCPoly::generator(a), &assignment).unwrap() {
            RelationVerdict::Violated { row, col, value } => {
                assert_eq!(row, col);
                assert_eq!(row.degree(), 1);
                assert_eq!(value, QScalar::one());
            }
            RelationVerdict::Candidate => panic!("expected violation"),
        }

        // Unknown generator surfaces as an error.
        let rel = NCPoly::generator(mono(0, 1, 0));
        assert!(matches!(
            check_relation(&rel, &assignment),
            Err(Error::UnassignedGenerator(_))
        ));
    }
}
