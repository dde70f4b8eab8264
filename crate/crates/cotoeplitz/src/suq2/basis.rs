//! Letters, words, and the ordered monomial basis of the SU_q(2)
//! coordinate algebra.
//!
//! The algebra is generated by `a` and `c` together with their stars.
//! After normal ordering (see [`super::rewrite`]) every element is a
//! combination of the monomials
//!
//! ```text
//!     e[k,l,m] = a^k c^l (c*)^m          for k >= 0,
//!     e[k,l,m] = (a*)^{-k} c^l (c*)^m    for k < 0,
//! ```
//!
//! which form a Hamel basis. Words use one character per letter:
//! `a`, `c` for the generators and `A`, `C` for their stars.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A single generator or starred generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AStar,
    C,
    CStar,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AStar, Letter::C, Letter::CStar];

    pub fn star(self) -> Letter {
        match self {
            Letter::A => Letter::AStar,
            Letter::AStar => Letter::A,
            Letter::C => Letter::CStar,
            Letter::CStar => Letter::C,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AStar => 'A',
            Letter::C => 'c',
            Letter::CStar => 'C',
        }
    }

    pub fn from_char(ch: char) -> Result<Letter> {
        match ch {
            'a' => Ok(Letter::A),
            'A' => Ok(Letter::AStar),
            'c' => Ok(Letter::C),
            'C' => Ok(Letter::CStar),
            other => Err(Error::Parse(format!(
                "unknown letter {other:?}, expected one of a, A, c, C"
            ))),
        }
    }

    /// Bidegree contribution of this letter; see [`BasisMonomial::bidegree`].
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            Letter::A => (1, 1),
            Letter::AStar => (-1, -1),
            Letter::C => (-1, 1),
            Letter::CStar => (1, -1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite product of letters, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    /// Letter-wise star in reverse order, the word-level involution.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.star()).collect())
    }

    /// Summed bidegree of all letters.
    pub fn bidegree(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(p, q), letter| {
            let (dp, dq) = letter.bidegree();
            (p + dp, q + dq)
        })
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Letter::from_char).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An ordered basis monomial `e[k,l,m]`. Negative `k` means a power of
/// `a*` instead of `a`; `l` and `m` count `c` and `c*` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub k: i64,
    pub l: u32,
    pub m: u32,
}

impl BasisMonomial {
    pub fn new(k: i64, l: u32, m: u32) -> Self {
        BasisMonomial { k, l, m }
    }

    /// The unit monomial `e[0,0,0]`.
    pub fn one() -> Self {
        BasisMonomial::new(0, 0, 0)
    }

    /// Total letter count `|k| + l + m`.
    pub fn degree(&self) -> u32 {
        self.k.unsigned_abs() as u32 + self.l + self.m
    }

    /// Membership in the holomorphic subspace `P = span{a^r c^s}`.
    pub fn in_p(&self) -> bool {
        self.k >= 0 && self.m == 0
    }

    /// The word spelling this monomial out, a-block first.
    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.degree() as usize);
        if self.k >= 0 {
            letters.extend(std::iter::repeat(Letter::A).take(self.k as usize));
        } else {
            letters.extend(std::iter::repeat(Letter::AStar).take((-self.k) as usize));
        }
        letters.extend(std::iter::repeat(Letter::C).take(self.l as usize));
        letters.extend(std::iter::repeat(Letter::CStar).take(self.m as usize));
        Word(letters)
    }

    /// The bidegree `(k - l + m, k + l - m)`.
    ///
    /// Both components are additive under multiplication, and the
    /// sesquilinear form pairs monomials of equal bidegree only.
    pub fn bidegree(&self) -> (i64, i64) {
        let l = self.l as i64;
        let m = self.m as i64;
        (self.k - l + m, self.k + l - m)
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{},{}]", self.k, self.l, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let w: Word = "acAC".parse().unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(format!("{w}"), "acAC");
        assert!("axc".parse::<Word>().is_err());
    }

    #[test]
    fn star_reverses_and_stars() {
        let w: Word = "ac".parse().unwrap();
        assert_eq!(format!("{}", w.star()), "CA");
        assert_eq!(w.star().star(), w);
    }

    #[test]
    fn monomial_word_shapes() {
        assert_eq!(format!("{}", BasisMonomial::new(2, 1, 1).word()), "aacC");
        assert_eq!(format!("{}", BasisMonomial::new(-2, 0, 1).word()), "AAC");
        assert_eq!(format!("{}", BasisMonomial::one().word()), "1");
    }

    #[test]
    fn bidegree_matches_letters() {
        for k in -3i64..=3 {
            for l in 0..=3u32 {
                for m in 0..=3u32 {
                    let mono = BasisMonomial::new(k, l, m);
                    assert_eq!(mono.bidegree(), mono.word().bidegree());
                }
            }
        }
    }

    #[test]
    fn p_membership() {
        assert!(BasisMonomial::new(2, 3, 0).in_p());
        assert!(!BasisMonomial::new(-1, 0, 0).in_p());
        assert!(!BasisMonomial::new(1, 0, 1).in_p());
    }
}
