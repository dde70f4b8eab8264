//! Normal ordering by a terminating rewrite system.
//!
//! The defining relations of SU_q(2), oriented left to right, form the
//! rule set
//!
//! ```text
//!     c  a   ->  q^-1 a c           c  a*  ->  q a* c
//!     c* a   ->  q^-1 a c*          c* a*  ->  q a* c*
//!     c* c   ->  c c*
//!     a* a   ->  1 - c c*
//!     a  a*  ->  1 - q^2 c c*
//! ```
//!
//! Each rule rewrites one adjacent pair inside a word, producing a
//! linear combination of words. Rules one through five shrink the
//! number of out-of-order adjacent pairs and the last two shrink the
//! word, so any application order terminates; the normal forms are
//! exactly the basis monomials of [`super::basis`]. Confluence is not
//! assumed here, it is checked exhaustively by the verification suites
//! through [`normal_order_with`], which lets the caller pick the redex
//! at every step.

use crate::linear;
use crate::scalar::{QRational, QScalar};

use super::basis::{BasisMonomial, Letter, Word};

/// Linear combinations of basis monomials.
pub type Element = linear::Element<BasisMonomial>;

/// Positions `j` such that the pair `(w[j], w[j+1])` matches a rule.
pub fn redexes(w: &[Letter]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&j| rule_for(w[j], w[j + 1]).is_some())
        .collect()
}

/// The replacement for a single adjacent pair, as `(factor, letters)`
/// summands, or `None` when the pair is already ordered.
fn rule_for(x: Letter, y: Letter) -> Option<Vec<(QScalar, Vec<Letter>)>> {
    use Letter::{AStar, CStar, A, C};
    let q = QScalar::q_pow(1);
    let q_inv = QScalar::q_pow(-1);
    match (x, y) {
        (C, A) => Some(vec![(q_inv, vec![A, C])]),
        (CStar, A) => Some(vec![(q_inv, vec![A, CStar])]),
        (C, AStar) => Some(vec![(q, vec![AStar, C])]),
        (CStar, AStar) => Some(vec![(q, vec![AStar, CStar])]),
        (CStar, C) => Some(vec![(QScalar::one(), vec![C, CStar])]),
        (AStar, A) => Some(vec![
            (QScalar::one(), vec![]),
            (QScalar::from_int(-1), vec![C, CStar]),
        ]),
        (A, AStar) => Some(vec![
            (QScalar::one(), vec![]),
            (QScalar::term(QRational::from_int(-1), 2), vec![C, CStar]),
        ]),
        _ => None,
    }
}

/// Rewrite the pair at position `j`, returning the resulting words with
/// their factors. `None` when no rule applies there.
pub fn apply_at(w: &[Letter], j: usize) -> Option<Vec<(Vec<Letter>, QScalar)>> {
    if j + 1 >= w.len() {
        return None;
    }
    let pieces = rule_for(w[j], w[j + 1])?;
    let out = pieces
        .into_iter()
        .map(|(factor, mid)| {
            let mut word = Vec::with_capacity(w.len() - 2 + mid.len());
            word.extend_from_slice(&w[..j]);
            word.extend_from_slice(&mid);
            word.extend_from_slice(&w[j + 2..]);
            (word, factor)
        })
        .collect();
    Some(out)
}

/// Fully normal order a word, choosing the leftmost redex at each step.
pub fn normal_order(w: &Word) -> Element {
    normal_order_with(w, |_, rs| rs[0])
}

/// Fully normal order a word with a caller-chosen redex at every step.
///
/// `pick` receives the current word and its redex positions (never
/// empty) and returns one of those positions. All choices yield the
/// same result; the verification suites rely on this hook to check it.
pub fn normal_order_with(
    w: &Word,
    mut pick: impl FnMut(&[Letter], &[usize]) -> usize,
) -> Element {
    let mut acc = Element::zero();
    let mut pending: Vec<(Vec<Letter>, QScalar)> = vec![(w.0.clone(), QScalar::one())];
    while let Some((word, coeff)) = pending.pop() {
        let rs = redexes(&word);
        if rs.is_empty() {
            acc.add_term(&monomial_of_normal_word(&word), &coeff);
            continue;
        }
        let j = pick(&word, &rs);
        debug_assert!(rs.contains(&j), "picked position {j} is not a redex");
        for (next, factor) in apply_at(&word, j).expect("redex vanished") {
            let c = coeff.mul(&factor);
            if !c.is_zero() {
                pending.push((next, c));
            }
        }
    }
    acc
}

/// Read a redex-free word off as a basis monomial.
fn monomial_of_normal_word(w: &[Letter]) -> BasisMonomial {
    let mut k: i64 = 0;
    let mut l: u32 = 0;
    let mut m: u32 = 0;
    let mut stage = 0u8;
    for letter in w {
        let (next_stage, ok) = match letter {
            Letter::A => (0, stage == 0 && k >= 0),
            Letter::AStar => (0, stage == 0 && k <= 0),
            Letter::C => (1, stage <= 1),
            Letter::CStar => (2, true),
        };
        debug_assert!(ok, "word not in normal form: {:?}", w);
        stage = stage.max(next_stage);
        match letter {
            Letter::A => k += 1,
            Letter::AStar => k -= 1,
            Letter::C => l += 1,
            Letter::CStar => m += 1,
        }
    }
    BasisMonomial::new(k, l, m)
}
