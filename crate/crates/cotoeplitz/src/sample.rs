//! Seeded random inputs for the verification suites.
//!
//! Everything here is driven by an explicit [`rand::Rng`], so one seed
//! pins the whole sample stream and reruns are reproducible down to
//! the byte. [`rng`] builds the stream cipher generator the command
//! line uses.

use num::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::CoSymbol;
use crate::linear::Element;
use crate::operators::NCPoly;
use crate::scalar::{QRational, QScalar};
use crate::suq2::{BasisMonomial, Letter, Word};

/// The deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut (impl Rng + ?Sized), max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect())
}

/// A word with more `a*` than `a`, or more `c*` than `c`. Rewriting
/// preserves both letter-count differences, so every monomial in the
/// normal form of such a word lies outside the holomorphic subspace.
pub fn starred_excess_word(rng: &mut (impl Rng + ?Sized), max_len: usize) -> Word {
    let mut word = random_word(rng, max_len.saturating_sub(1) / 2);
    let diff = |plain: Letter, starred: Letter| {
        word.0.iter().filter(|&&x| x == plain).count() as i64
            - word.0.iter().filter(|&&x| x == starred).count() as i64
    };
    let star = if rng.gen_bool(0.5) { Letter::AStar } else { Letter::CStar };
    let needed = diff(star.star(), star).max(0) + 1;
    for _ in 0..needed {
        let pos = rng.gen_range(0..=word.0.len());
        word.0.insert(pos, star);
    }
    word
}

pub fn random_monomial(
    rng: &mut (impl Rng + ?Sized),
    kmax: i64,
    lmax: u32,
    mmax: u32,
) -> BasisMonomial {
    BasisMonomial::new(
        rng.gen_range(-kmax..=kmax),
        rng.gen_range(0..=lmax),
        rng.gen_range(0..=mmax),
    )
}

/// A monomial in the holomorphic subspace: `k >= 0`, no starred part.
pub fn random_p_monomial(rng: &mut (impl Rng + ?Sized), kmax: i64, lmax: u32) -> BasisMonomial {
    BasisMonomial::new(rng.gen_range(0..=kmax), rng.gen_range(0..=lmax), 0)
}

fn random_rational(rng: &mut (impl Rng + ?Sized)) -> BigRational {
    BigRational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

/// A Laurent polynomial in `q` with a handful of small terms. May be
/// zero; loop at the call site when that matters.
pub fn random_scalar(rng: &mut (impl Rng + ?Sized)) -> QScalar {
    let mut out = QScalar::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = QRational::new(random_rational(rng), random_rational(rng));
        out.add_term(&c, rng.gen_range(-4..=4));
    }
    out
}

pub fn random_nonzero_scalar(rng: &mut (impl Rng + ?Sized)) -> QScalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_element(
    rng: &mut (impl Rng + ?Sized),
    max_terms: usize,
    kmax: i64,
    lmax: u32,
    mmax: u32,
) -> Element<BasisMonomial> {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        out.add_term(&random_monomial(rng, kmax, lmax, mmax), &random_scalar(rng));
    }
    out
}

pub fn random_p_element(
    rng: &mut (impl Rng + ?Sized),
    max_terms: usize,
    kmax: i64,
    lmax: u32,
) -> Element<BasisMonomial> {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        out.add_term(&random_p_monomial(rng, kmax, lmax), &random_scalar(rng));
    }
    out
}

/// A random co-symbol tree of the given depth. `leaf` supplies the
/// symbols under evaluation nodes, which keeps this generic over the
/// coalgebra the co-symbols act on.
pub fn random_cosymbol<L, F>(rng: &mut dyn rand::RngCore, depth: u32, leaf: &mut F) -> CoSymbol<L>
where
    L: Ord + Clone,
    F: FnMut(&mut dyn rand::RngCore) -> Element<L>,
{
    if depth == 0 {
        return if rng.gen_bool(0.25) { CoSymbol::counit() } else { CoSymbol::eg(leaf(rng)) };
    }
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(1..=2);
            CoSymbol::sum((0..n).map(|_| random_cosymbol(rng, depth - 1, leaf)).collect())
        }
        1 => CoSymbol::scale(random_nonzero_scalar(rng), random_cosymbol(rng, depth - 1, leaf)),
        2 => CoSymbol::product(
            random_cosymbol(rng, depth - 1, leaf),
            random_cosymbol(rng, depth - 1, leaf),
        ),
        _ => CoSymbol::star(random_cosymbol(rng, depth - 1, leaf)),
    }
}

/// A nonzero polynomial in abstract generators labelled by monomials.
pub fn random_ncpoly(
    rng: &mut (impl Rng + ?Sized),
    max_terms: usize,
    max_word: usize,
    kmax: i64,
    lmax: u32,
    mmax: u32,
) -> NCPoly<BasisMonomial> {
    loop {
        let mut out = NCPoly::zero();
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let word = (0..rng.gen_range(0..=max_word))
                .map(|_| random_monomial(rng, kmax, lmax, mmax))
                .collect();
            out.add_word(word, &random_scalar(rng));
        }
        if !out.is_zero() {
            return out;
        }
    }
}
