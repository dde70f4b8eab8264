//! Stable text encodings: JSON for scalars, elements, co-symbol trees
//! and operator matrices, CSV for specialized matrices, and the small
//! text formats the command line accepts (weight tables and relation
//! polynomials).
//!
//! Every writer emits a canonical form, and every reader normalizes
//! what it accepts, so a write/read cycle reproduces the value exactly.
//! JSON integers are kept within `i64`; a coefficient that does not fit
//! is reported as an error instead of being rounded.
//!
//! The shapes:
//!
//! * scalar: `[{"qexp": e, "re": [num, den], "im": [num, den]}, ...]`
//!   sorted by ascending exponent;
//! * element: `{"terms": [{"k": .., "l": .., "m": .., "coeff": ..}]}`;
//! * co-symbol: `{"node": "counit"|"eg"|"sum"|"scale"|"product"|"star",
//!   ...}` with child payloads;
//! * matrix: `{"trunc": N, "subspace": "P"|"Pprime", "basis_mode":
//!   "orthonormal"|"epsilon", "entries": [{"row": [x,y], "col": [x,y],
//!   "coeff": ..}], "escaped_cols": [..]}` where rows and columns carry
//!   a `":_kind": "psi"` marker for the antiholomorphic rays.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{BigInt, BigRational, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::linear::Element;
use crate::coalgebra::CoSymbol;
use crate::operators::{BasisMode, NCPoly, OperatorMatrix};
use crate::scalar::{QRational, QScalar};
use crate::suq2::{basis_indices, BasisMonomial, Subspace, WeightFunction};
use crate::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn int_to_json(n: &BigInt) -> Result<Value> {
    n.to_i64().map(Value::from).ok_or(Error::JsonIntegerRange)
}

fn int_from_json(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| parse_err("expected an integer"))
}

/// A rational as a two-element `[numerator, denominator]` array.
pub fn ratio_to_json(r: &BigRational) -> Result<Value> {
    Ok(Value::Array(vec![int_to_json(r.numer())?, int_to_json(r.denom())?]))
}

pub fn ratio_from_json(v: &Value) -> Result<BigRational> {
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
        parse_err("expected a [numerator, denominator] pair")
    })?;
    let num = int_from_json(&arr[0])?;
    let den = int_from_json(&arr[1])?;
    if den == 0 {
        return Err(parse_err("zero denominator"));
    }
    Ok(BigRational::new(num.into(), den.into()))
}

pub fn qscalar_to_json(s: &QScalar) -> Result<Value> {
    let mut terms = Vec::new();
    for (e, c) in s.iter() {
        terms.push(json!({
            "qexp": e,
            "re": ratio_to_json(&c.re)?,
            "im": ratio_to_json(&c.im)?,
        }));
    }
    Ok(Value::Array(terms))
}

pub fn qscalar_from_json(v: &Value) -> Result<QScalar> {
    let arr = v.as_array().ok_or_else(|| parse_err("expected a scalar term array"))?;
    let mut out = QScalar::zero();
    for term in arr {
        let e = int_from_json(term.get("qexp").ok_or_else(|| parse_err("missing qexp"))?)?;
        let re = ratio_from_json(term.get("re").ok_or_else(|| parse_err("missing re"))?)?;
        let im = ratio_from_json(term.get("im").ok_or_else(|| parse_err("missing im"))?)?;
        out.add_term(&QRational::new(re, im), e);
    }
    Ok(out)
}

pub fn element_to_json(x: &Element<BasisMonomial>) -> Result<Value> {
    let mut terms = Vec::new();
    for (l, c) in x.iter() {
        terms.push(json!({
            "k": l.k,
            "l": l.l,
            "m": l.m,
            "coeff": qscalar_to_json(c)?,
        }));
    }
    Ok(json!({ "terms": terms }))
}

pub fn element_from_json(v: &Value) -> Result<Element<BasisMonomial>> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("expected an element with a terms array"))?;
    let mut out = Element::zero();
    for term in terms {
        let k = int_from_json(term.get("k").ok_or_else(|| parse_err("missing k"))?)?;
        let l = int_from_json(term.get("l").ok_or_else(|| parse_err("missing l"))?)?;
        let m = int_from_json(term.get("m").ok_or_else(|| parse_err("missing m"))?)?;
        let (l, m) = (
            u32::try_from(l).map_err(|_| parse_err("l must be a natural number"))?,
            u32::try_from(m).map_err(|_| parse_err("m must be a natural number"))?,
        );
        let coeff =
            qscalar_from_json(term.get("coeff").ok_or_else(|| parse_err("missing coeff"))?)?;
        out.add_term(&BasisMonomial::new(k, l, m), &coeff);
    }
    Ok(out)
}

pub fn cosymbol_to_json(s: &CoSymbol<BasisMonomial>) -> Result<Value> {
    Ok(match s {
        CoSymbol::Counit => json!({ "node": "counit" }),
        CoSymbol::Eg(g) => json!({ "node": "eg", "symbol": element_to_json(g)? }),
        CoSymbol::Sum(terms) => {
            let terms: Result<Vec<Value>> = terms.iter().map(cosymbol_to_json).collect();
            json!({ "node": "sum", "terms": terms? })
        }
        CoSymbol::Scale(c, inner) => json!({
            "node": "scale",
            "coeff": qscalar_to_json(c)?,
            "inner": cosymbol_to_json(inner)?,
        }),
        CoSymbol::Product(left, right) => json!({
            "node": "product",
            "left": cosymbol_to_json(left)?,
            "right": cosymbol_to_json(right)?,
        }),
        CoSymbol::Star(inner) => json!({ "node": "star", "inner": cosymbol_to_json(inner)? }),
    })
}

pub fn cosymbol_from_json(v: &Value) -> Result<CoSymbol<BasisMonomial>> {
    let node = v
        .get("node")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("expected a co-symbol node"))?;
    let field = |name: &str| {
        v.get(name)
            .ok_or_else(|| parse_err(format!("co-symbol node {node} is missing {name}")))
    };
    Ok(match node {
        "counit" => CoSymbol::counit(),
        "eg" => CoSymbol::eg(element_from_json(field("symbol")?)?),
        "sum" => {
            let terms = field("terms")?
                .as_array()
                .ok_or_else(|| parse_err("sum terms must be an array"))?;
            CoSymbol::sum(terms.iter().map(cosymbol_from_json).collect::<Result<_>>()?)
        }
        "scale" => CoSymbol::scale(
            qscalar_from_json(field("coeff")?)?,
            cosymbol_from_json(field("inner")?)?,
        ),
        "product" => CoSymbol::product(
            cosymbol_from_json(field("left")?)?,
            cosymbol_from_json(field("right")?)?,
        ),
        "star" => CoSymbol::star(cosymbol_from_json(field("inner")?)?),
        other => return Err(parse_err(format!("unknown co-symbol node {other}"))),
    })
}

/// `(kind, first, second)` of a subspace basis label.
fn label_kind(l: &BasisMonomial) -> Result<(&'static str, i64, i64)> {
    if l.k >= 0 && l.m == 0 {
        Ok(("phi", l.k, l.l as i64))
    } else if l.k >= 0 && l.l == 0 {
        Ok(("psi", l.k, l.m as i64))
    } else {
        Err(parse_err(format!("label {l} is not a subspace basis label")))
    }
}

fn label_from_parts(kind: &str, x: i64, y: i64) -> Result<BasisMonomial> {
    let y = u32::try_from(y).map_err(|_| parse_err("basis index out of range"))?;
    match kind {
        "phi" => Ok(BasisMonomial::new(x, y, 0)),
        "psi" => Ok(BasisMonomial::new(x, 0, y)),
        other => Err(parse_err(format!("unknown basis label kind {other}"))),
    }
}

fn put_label(map: &mut Map<String, Value>, prefix: &str, l: &BasisMonomial) -> Result<()> {
    let (kind, x, y) = label_kind(l)?;
    map.insert(prefix.to_string(), json!([x, y]));
    if kind == "psi" {
        map.insert(format!("{prefix}_kind"), json!("psi"));
    }
    Ok(())
}

fn get_label(v: &Value, prefix: &str) -> Result<BasisMonomial> {
    let arr = v
        .get(prefix)
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2)
        .ok_or_else(|| parse_err(format!("expected {prefix} as a pair")))?;
    let kind = v
        .get(format!("{prefix}_kind"))
        .map(|k| k.as_str().ok_or_else(|| parse_err("label kind must be a string")))
        .transpose()?
        .unwrap_or("phi");
    label_from_parts(kind, int_from_json(&arr[0])?, int_from_json(&arr[1])?)
}

pub fn matrix_to_json(m: &OperatorMatrix<BasisMonomial>) -> Result<Value> {
    let subspace = if m.labels().iter().any(|l| l.m > 0) { "Pprime" } else { "P" };
    let mode = match m.mode {
        BasisMode::Orthonormal => "orthonormal",
        BasisMode::Epsilon => "epsilon",
    };
    let mut entries = Vec::new();
    for (row, col, coeff) in m.entries() {
        let mut entry = Map::new();
        put_label(&mut entry, "row", row)?;
        put_label(&mut entry, "col", col)?;
        entry.insert("coeff".into(), qscalar_to_json(coeff)?);
        entries.push(Value::Object(entry));
    }
    let mut escaped = Vec::new();
    for col in m.escaped() {
        let mut entry = Map::new();
        put_label(&mut entry, "col", col)?;
        escaped.push(Value::Object(entry));
    }
    Ok(json!({
        "trunc": m.max_degree,
        "subspace": subspace,
        "basis_mode": mode,
        "entries": entries,
        "escaped_cols": escaped,
    }))
}

pub fn matrix_from_json(v: &Value) -> Result<OperatorMatrix<BasisMonomial>> {
    let trunc = int_from_json(v.get("trunc").ok_or_else(|| parse_err("missing trunc"))?)?;
    let trunc = u32::try_from(trunc).map_err(|_| parse_err("trunc must be a natural number"))?;
    let subspace = match v.get("subspace").and_then(Value::as_str) {
        Some("P") | None => Subspace::P,
        Some("Pprime") => Subspace::PPrime,
        Some(other) => return Err(parse_err(format!("unknown subspace {other}"))),
    };
    let mode = match v.get("basis_mode").and_then(Value::as_str) {
        Some("orthonormal") => BasisMode::Orthonormal,
        Some("epsilon") => BasisMode::Epsilon,
        _ => return Err(parse_err("missing or unknown basis_mode")),
    };
    let cols: Vec<BasisMonomial> =
        basis_indices(trunc, subspace).iter().map(|i| i.monomial()).collect();
    let mut out = OperatorMatrix::zero(trunc, mode, cols);

    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing entries array"))?;
    for entry in entries {
        let row = get_label(entry, "row")?;
        let col = get_label(entry, "col")?;
        let coeff =
            qscalar_from_json(entry.get("coeff").ok_or_else(|| parse_err("missing coeff"))?)?;
        out.add_to(&row, &col, &coeff);
    }
    if let Some(escaped) = v.get("escaped_cols").and_then(Value::as_array) {
        for entry in escaped {
            out.mark_escaped(&get_label(entry, "col")?);
        }
    }
    Ok(out)
}

/// CSV with one line per nonzero entry, the scalar specialized at `q`.
/// Fields: row kind and indices, column kind and indices, and the real
/// and imaginary parts as exact rationals.
pub fn matrix_to_csv(m: &OperatorMatrix<BasisMonomial>, q: &BigRational) -> Result<String> {
    let mut out = String::from("row_kind,row_1,row_2,col_kind,col_1,col_2,re,im\n");
    for (row, col, coeff) in m.entries() {
        let (rk, r1, r2) = label_kind(row)?;
        let (ck, c1, c2) = label_kind(col)?;
        let value = coeff.specialize(q)?;
        writeln!(out, "{rk},{r1},{r2},{ck},{c1},{c2},{},{}", value.re, value.im)
            .expect("string writer");
    }
    Ok(out)
}

pub fn ncpoly_to_json(p: &NCPoly<BasisMonomial>) -> Result<Value> {
    let mut terms = Vec::new();
    for (word, c) in p.iter() {
        let word: Vec<Value> =
            word.iter().map(|g| json!({ "k": g.k, "l": g.l, "m": g.m })).collect();
        terms.push(json!({ "word": word, "coeff": qscalar_to_json(c)? }));
    }
    Ok(json!({ "terms": terms }))
}

pub fn ncpoly_from_json(v: &Value) -> Result<NCPoly<BasisMonomial>> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("expected a relation with a terms array"))?;
    let mut out = NCPoly::zero();
    for term in terms {
        let word = term
            .get("word")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("missing word"))?;
        let word: Result<Vec<BasisMonomial>> = word
            .iter()
            .map(|g| {
                let k = int_from_json(g.get("k").ok_or_else(|| parse_err("missing k"))?)?;
                let l = int_from_json(g.get("l").ok_or_else(|| parse_err("missing l"))?)?;
                let m = int_from_json(g.get("m").ok_or_else(|| parse_err("missing m"))?)?;
                let l = u32::try_from(l).map_err(|_| parse_err("l must be a natural number"))?;
                let m = u32::try_from(m).map_err(|_| parse_err("m must be a natural number"))?;
                Ok(BasisMonomial::new(k, l, m))
            })
            .collect();
        let coeff =
            qscalar_from_json(term.get("coeff").ok_or_else(|| parse_err("missing coeff"))?)?;
        out.add_word(word?, &coeff);
    }
    Ok(out)
}

/// A rational from `p` or `p/r` text.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| parse_err(format!("bad rational {text}")))?;
    let den: BigInt = den.parse().map_err(|_| parse_err(format!("bad rational {text}")))?;
    if den == BigInt::from(0) {
        return Err(parse_err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Weight tables as text: one `k d value` triple per line with the
/// value a rational, `#` starting a comment, and an optional
/// `default value` line for everything unlisted (one when absent).
pub fn parse_weight_table(text: &str) -> Result<WeightFunction> {
    let mut entries = BTreeMap::new();
    let mut default = BigRational::from_integer(1.into());
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let at = |msg: &str| parse_err(format!("weight table line {}: {msg}", lineno + 1));
        match fields.as_slice() {
            ["default", value] => default = parse_rational(value)?,
            [k, d, value] => {
                let k: i64 = k.parse().map_err(|_| at("bad k index"))?;
                let d: i64 = d.parse().map_err(|_| at("bad d index"))?;
                entries.insert((k, d), parse_rational(value)?);
            }
            _ => return Err(at("expected `k d value` or `default value`")),
        }
    }
    WeightFunction::table(entries, default)
}

/// Relation polynomials as text, e.g.
///
/// ```text
///     G(1,0,0) G(0,1,0) - G(0,1,0) G(1,0,0) - 1
///     1/2 q^-2 i G(0,0,1)
/// ```
///
/// Terms are separated by `+` and `-`; a term is a product of factors,
/// each a rational, `i`, `q` with an optional integer exponent, or a
/// generator `G(k,l,m)`. `*` between factors is optional.
pub fn parse_relation(text: &str) -> Result<NCPoly<BasisMonomial>> {
    let mut chars = text.chars().peekable();
    let mut out = NCPoly::zero();
    let mut any_term = false;

    loop {
        skip_spaces(&mut chars);
        let mut sign = QScalar::one();
        match chars.peek() {
            None => break,
            Some('+') => {
                chars.next();
            }
            Some('-') => {
                chars.next();
                sign = sign.neg();
            }
            _ if any_term => {
                return Err(parse_err("expected + or - between relation terms"));
            }
            _ => {}
        }
        skip_spaces(&mut chars);

        let mut coeff = sign;
        let mut word = Vec::new();
        let mut any_factor = false;
        loop {
            skip_spaces(&mut chars);
            match chars.peek().copied() {
                Some('*') => {
                    chars.next();
                    continue;
                }
                Some('G') => {
                    chars.next();
                    word.push(parse_generator(&mut chars)?);
                }
                Some('q') => {
                    chars.next();
                    let exp = if chars.peek() == Some(&'^') {
                        chars.next();
                        parse_int(&mut chars)?
                    } else {
                        1
                    };
                    coeff = coeff.mul(&QScalar::q_pow(exp));
                }
                Some('i') => {
                    chars.next();
                    coeff = coeff.mul(&QScalar::i());
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = parse_int(&mut chars)?;
                    let den = if chars.peek() == Some(&'/') {
                        chars.next();
                        parse_int(&mut chars)?
                    } else {
                        1
                    };
                    if den == 0 {
                        return Err(parse_err("zero denominator"));
                    }
                    coeff = coeff.mul(&QScalar::from_frac(num, den));
                }
                _ => break,
            }
            any_factor = true;
        }
        if !any_factor {
            return Err(parse_err("empty relation term"));
        }
        out.add_word(word, &coeff);
        any_term = true;
    }
    if !any_term {
        return Err(parse_err("empty relation"));
    }
    Ok(out)
}

/// A list of relations: one per line, `#` comments, blanks skipped.
pub fn parse_relations(text: &str) -> Result<Vec<NCPoly<BasisMonomial>>> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_relation(line)?);
    }
    Ok(out)
}

type Cursor<'a> = std::iter::Peekable<std::str::Chars<'a>>;

fn skip_spaces(chars: &mut Cursor) {
    while chars.peek().is_some_and(|c| c.is_whitespace()) {
        chars.next();
    }
}

fn parse_int(chars: &mut Cursor) -> Result<i64> {
    skip_spaces(chars);
    let mut text = String::new();
    if chars.peek() == Some(&'-') {
        text.push('-');
        chars.next();
    }
    while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
        text.push(chars.next().expect("peeked digit"));
    }
    text.parse().map_err(|_| parse_err("expected an integer"))
}

fn parse_generator(chars: &mut Cursor) -> Result<BasisMonomial> {
    let expect = |chars: &mut Cursor, want: char| {
        skip_spaces(chars);
        if chars.next() == Some(want) {
            Ok(())
        } else {
            Err(parse_err(format!("expected `{want}` in generator")))
        }
    };
    expect(chars, '(')?;
    let k = parse_int(chars)?;
    expect(chars, ',')?;
    let l = parse_int(chars)?;
    expect(chars, ',')?;
    let m = parse_int(chars)?;
    expect(chars, ')')?;
    let l = u32::try_from(l).map_err(|_| parse_err("generator l must be a natural number"))?;
    let m = u32::try_from(m).map_err(|_| parse_err("generator m must be a natural number"))?;
    Ok(BasisMonomial::new(k, l, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::Suq2Instance;
    use crate::operators::{matrix_of_symbol, Truncation};

    fn mono(k: i64, l: u32, m: u32) -> BasisMonomial {
        BasisMonomial::new(k, l, m)
    }

    fn sample_scalar() -> QScalar {
        let re = BigRational::new(3.into(), 2.into());
        QScalar::term(QRational::new(re, BigRational::from_integer((-1).into())), -2)
            .add(&QScalar::q_pow(5))
    }

    #[test]
    fn scalar_round_trip_and_normalization() {
        let s = sample_scalar();
        let v = qscalar_to_json(&s).unwrap();
        assert_eq!(qscalar_from_json(&v).unwrap(), s);

        // Unsorted and duplicated terms normalize on read.
        let messy = json!([
            {"qexp": 3, "re": [1, 1], "im": [0, 1]},
            {"qexp": 0, "re": [1, 2], "im": [0, 1]},
            {"qexp": 3, "re": [-1, 1], "im": [0, 1]},
        ]);
        assert_eq!(qscalar_from_json(&messy).unwrap(), QScalar::from_frac(1, 2));
    }

    #[test]
    fn scalar_rejects_oversized_coefficients() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = QScalar::term(QRational::from_ratio(BigRational::new(huge, 1.into())), 0);
        assert!(matches!(qscalar_to_json(&s), Err(Error::JsonIntegerRange)));
    }

    #[test]
    fn element_round_trip() {
        let x = Element::term(mono(-1, 2, 0), sample_scalar())
            .add(&Element::term(mono(3, 0, 1), QScalar::i()));
        let v = element_to_json(&x).unwrap();
        assert_eq!(element_from_json(&v).unwrap(), x);
    }

    #[test]
    fn cosymbol_round_trip() {
        let s = CoSymbol::scale(
            QScalar::q_pow(-1),
            CoSymbol::product(
                CoSymbol::star(CoSymbol::eg(Element::basis(mono(1, 1, 0)))),
                CoSymbol::sum(vec![CoSymbol::counit(), CoSymbol::eg(Element::basis(mono(0, 1, 0)))]),
            ),
        );
        let v = cosymbol_to_json(&s).unwrap();
        assert_eq!(cosymbol_from_json(&v).unwrap(), s);
    }

    #[test]
    fn matrix_round_trip_both_subspaces() {
        for subspace in [Subspace::P, Subspace::PPrime] {
            let inst = Suq2Instance::new(WeightFunction::one(), subspace);
            let mut m = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 0)), &Truncation::new(3));
            m.mark_escaped(&mono(2, 0, 0));
            let v = matrix_to_json(&m).unwrap();
            assert_eq!(matrix_from_json(&v).unwrap(), m, "{subspace:?}");
        }
    }

    #[test]
    fn csv_shape() {
        let inst = Suq2Instance::with_weight(WeightFunction::one());
        let m = matrix_of_symbol(&inst, &Element::basis(mono(1, 1, 1)), &Truncation::new(3));
        let csv = matrix_to_csv(&m, &BigRational::new(1.into(), 2.into())).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "row_kind,row_1,row_2,col_kind,col_1,col_2,re,im");
        let first = lines.next().unwrap();
        assert!(first.starts_with("phi,"), "{first}");
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn weight_table_text() {
        let w = parse_weight_table("# comment\n1 0 3/2\n-1 2 5 # inline\ndefault 2\n").unwrap();
        assert_eq!(w.value(1, 0), BigRational::new(3.into(), 2.into()));
        assert_eq!(w.value(-1, 2), BigRational::from_integer(5.into()));
        assert_eq!(w.value(0, 0), BigRational::from_integer(2.into()));
        assert!(parse_weight_table("1 0 -1\n").is_err());
        assert!(parse_weight_table("1 0\n").is_err());
    }

    #[test]
    fn relation_text() {
        let rel = parse_relation("G(1,0,0) G(0,1,0) - G(0,1,0)G(1,0,0) - 1").unwrap();
        let a = NCPoly::generator(mono(1, 0, 0));
        let c = NCPoly::generator(mono(0, 1, 0));
        let want = a.mul(&c).sub(&c.mul(&a)).sub(&NCPoly::one());
        assert_eq!(rel, want);

        let rel = parse_relation("1/2 * q^-2 i G(0,0,1)").unwrap();
        let coeff = QScalar::from_frac(1, 2).mul(&QScalar::q_pow(-2)).mul(&QScalar::i());
        assert_eq!(rel, NCPoly::word(vec![mono(0, 0, 1)], coeff));

        assert!(parse_relation("").is_err());
        assert!(parse_relation("G(1,0)").is_err());
        assert!(parse_relation("G(1,0,0) ; G(0,1,0)").is_err());

        let list = parse_relations("# two relations\nG(0,0,1)\n\nq G(1,0,0) + i\n").unwrap();
        assert_eq!(list.len(), 2);
    }

    #[test]
    fn ncpoly_round_trip() {
        let rel = parse_relation("G(1,0,0) G(0,1,0) - q^2 G(0,1,0) G(1,0,0) - 1/3 i").unwrap();
        let v = ncpoly_to_json(&rel).unwrap();
        assert_eq!(ncpoly_from_json(&v).unwrap(), rel);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-2").unwrap(), BigRational::from_integer((-2).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
