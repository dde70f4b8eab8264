//! The exact coefficient ring: Laurent polynomials in `q` over the
//! Gaussian rationals.
//!
//! Every quantity in this crate is a finite sum `sum_e c_e q^e` with
//! integer exponents `e` and coefficients `c_e` in `Q(i)`. Equality of
//! such scalars is decidable, so all structural identities downstream
//! are checked on the nose instead of numerically. The deformation
//! parameter is treated as a real variable: [`QScalar::conj`] conjugates
//! the coefficients and leaves `q` alone.
//!
//! [`qbinomial`] produces the Gaussian binomial `[n k]_p` in the base
//! `p = q^{base_exponent}` via the Pascal recurrence
//! `[n k]_p = [n-1 k-1]_p + p^k [n-1 k]_p`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// A Gaussian rational `re + im*i` with both parts exact rationals.
///
/// `num`'s `Ratio` keeps values reduced with a positive denominator, so
/// equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl QRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QRational { re, im }
    }

    pub fn zero() -> Self {
        QRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        QRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        QRational::from_ratio(BigRational::from_integer(BigInt::from(n)))
    }

    /// Real rational `num/den`. Panics if `den` is zero.
    pub fn from_frac(num: i64, den: i64) -> Self {
        QRational::from_ratio(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_ratio(re: BigRational) -> Self {
        QRational::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        QRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn neg(&self) -> Self {
        QRational::new(-self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        QRational::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        QRational::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        QRational::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(QRational::new(&self.re / &norm, -&self.im / &norm))
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-&self.im).is_one() {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// A Laurent polynomial in `q` with [`QRational`] coefficients, kept
/// canonical: the map never stores a zero coefficient, so `==` decides
/// mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QScalar {
    terms: BTreeMap<i64, QRational>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar::default()
    }

    pub fn one() -> Self {
        QScalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        QScalar::term(QRational::from_int(n), 0)
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        QScalar::term(QRational::from_frac(num, den), 0)
    }

    pub fn from_ratio(r: BigRational) -> Self {
        QScalar::term(QRational::from_ratio(r), 0)
    }

    pub fn constant(c: QRational) -> Self {
        QScalar::term(c, 0)
    }

    /// The imaginary unit as a constant scalar.
    pub fn i() -> Self {
        QScalar::constant(QRational::i())
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QScalar::term(QRational::one(), e)
    }

    /// The single-term scalar `c * q^e`.
    pub fn term(c: QRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &QScalar::one()
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> QRational {
        self.terms.get(&e).cloned().unwrap_or_else(QRational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &QRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, c: &QRational, e: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(QRational::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c, *e);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(&c1.mul(c2), e1 + e2);
            }
        }
        out
    }

    /// Multiply by the monomial `c * q^e` without building a temporary.
    pub fn mul_term(&self, c: &QRational, e: i64) -> Self {
        let mut out = QScalar::zero();
        for (e1, c1) in &self.terms {
            out.add_term(&c1.mul(c), e1 + e);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = QScalar::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Coefficient-wise complex conjugation. `q` is a real parameter,
    /// so exponents are untouched.
    pub fn conj(&self) -> Self {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Evaluate at a nonzero rational value of `q`.
    pub fn specialize(&self, value: &BigRational) -> Result<QRational> {
        if value.is_zero() {
            return Err(Error::SpecializeAtZero);
        }
        let inv = value.recip();
        let mut out = QRational::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { value } else { &inv };
            let p = pow_rational(base, e.unsigned_abs());
            out = out.add(&c.mul(&QRational::from_ratio(p)));
        }
        Ok(out)
    }
}

/// Values of `q` at which specialization collapses structure worth a
/// caller-facing warning. At `q = -1` the deformed and classical
/// relations coincide in a degenerate way.
pub fn specialization_warning(value: &BigRational) -> Option<&'static str> {
    if *value == -BigRational::one() {
        Some("q = -1 is a degenerate specialization point")
    } else {
        None
    }
}

fn pow_rational(base: &BigRational, n: u64) -> BigRational {
    let mut out = BigRational::one();
    let mut sq = base.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            out *= &sq;
        }
        sq = &sq * &sq;
        n >>= 1;
    }
    out
}

/// Exact square root of a nonnegative rational, when one exists.
pub fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = int_sqrt(r.numer())?;
    let den = int_sqrt(r.denom())?;
    Some(BigRational::new(num, den))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// The Gaussian binomial `[n k]` in the base `p = q^{base_exponent}`,
/// built by the Pascal recurrence. Errors when `k > n`.
pub fn qbinomial(n: u32, k: u32, base_exponent: i64) -> Result<QScalar> {
    if k > n {
        return Err(Error::BinomialIndex { n, k });
    }
    // Row by row: row[j] holds [i j] while i climbs to n.
    let mut row: Vec<QScalar> = vec![QScalar::one()];
    for _i in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(QScalar::one());
        for j in 1..row.len() {
            let pk = QScalar::q_pow(base_exponent * j as i64);
            next.push(row[j - 1].add(&pk.mul(&row[j])));
        }
        next.push(QScalar::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let rendered = render_term(c, *e);
            if first {
                write!(f, "{rendered}")?;
                first = false;
            } else if let Some(stripped) = rendered.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {rendered}")?;
            }
        }
        Ok(())
    }
}

fn render_term(c: &QRational, e: i64) -> String {
    let q_part = match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    };
    if q_part.is_empty() {
        return format!("{c}");
    }
    if c == &QRational::one() {
        return q_part;
    }
    if c == &QRational::from_int(-1) {
        return format!("-{q_part}");
    }
    let c_part = if c.is_real() || c.re.is_zero() {
        format!("{c}")
    } else {
        format!("({c})")
    };
    format!("{c_part}*{q_part}")
}
