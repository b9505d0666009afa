//! Recursive-descent parser for quaternion literals, vectors and matrices.
//!
//! ```text
//! quat   := term { ("+" | "-") term }
//! term   := rat [unit] | unit
//! unit   := "i" | "j" | "k"
//! rat    := int ["/" posint]
//! int    := ["-"] digits
//! vector := "[" quat "," quat "]"
//! matrix := "[" row ";" row "]"
//! row    := quat { "," quat }
//! ```
//!
//! Whitespace is insignificant between tokens. Positions are byte offsets
//! into the input.

use std::fmt;
use std::ops::Range;

use ncx_core::crossratio::FourTuple;
use ncx_core::{DivisionRing, Mat2, Mat2xN, Quaternion, Rational, Vec2};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub type Span = Range<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let found = match self.found {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        write!(
            f,
            "at column {}: expected {}, found {found}",
            self.position + 1,
            self.expected.join(" or ")
        )
    }
}

impl ParseError {
    /// The input with a caret under the offending position.
    pub fn diagnostic(&self, input: &str) -> String {
        format!("{self}\n  {input}\n  {}^", " ".repeat(self.position))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatNode {
    pub value: Quaternion,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SyntaxTree {
    Quat(QuatNode),
    Vector { entries: [QuatNode; 2], span: Span },
    Matrix { rows: [Vec<QuatNode>; 2], span: Span },
}

impl SyntaxTree {
    pub fn span(&self) -> Span {
        match self {
            SyntaxTree::Quat(q) => q.span.clone(),
            SyntaxTree::Vector { span, .. } | SyntaxTree::Matrix { span, .. } => span.clone(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            SyntaxTree::Quat(_) => "quaternion",
            SyntaxTree::Vector { .. } => "vector",
            SyntaxTree::Matrix { .. } => "matrix",
        }
    }

    /// Canonical text; parses back to the same tree values.
    pub fn render(&self) -> String {
        match self {
            SyntaxTree::Quat(q) => q.value.to_string(),
            SyntaxTree::Vector { entries, .. } => format!("[{}, {}]", entries[0].value, entries[1].value),
            SyntaxTree::Matrix { rows, .. } => {
                let row = |r: &Vec<QuatNode>| r.iter().map(|q| q.value.to_string()).collect::<Vec<_>>().join(", ");
                format!("[{}; {}]", row(&rows[0]), row(&rows[1]))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const UNITS: [&str; 3] = ["\"i\"", "\"j\"", "\"k\""];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn error<S: ToString>(&mut self, expected: impl IntoIterator<Item = S>) -> ParseError {
        let found = self.peek();
        ParseError {
            position: self.pos,
            expected: expected.into_iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn unit(&mut self) -> Option<usize> {
        let u = match self.peek()? {
            'i' => 1,
            'j' => 2,
            'k' => 3,
            _ => return None,
        };
        self.bump();
        Some(u)
    }

    fn term_start_expected() -> Vec<&'static str> {
        let mut e = vec!["integer"];
        e.extend(UNITS);
        e
    }

    /// `rat [unit] | unit`, as a coefficient, a basis index and the end of
    /// the term.
    fn term(&mut self) -> Result<(Rational, usize, usize), ParseError> {
        if let Some(u) = self.unit() {
            return Ok((Rational::one(), u, self.pos));
        }
        self.skip_ws();
        let negative = self.peek_raw() == Some('-');
        if negative {
            self.bump();
            self.skip_ws();
        }
        let numer = match self.digits() {
            Some(n) => n,
            None if negative => return Err(self.error(["digit"])),
            None => return Err(self.error(Self::term_start_expected())),
        };
        let numer = if negative { -numer } else { numer };
        let denom = if self.eat('/') {
            self.skip_ws();
            let at = self.pos;
            match self.digits() {
                Some(d) if !d.is_zero() => d,
                _ => {
                    self.pos = at;
                    return Err(self.error(["positive integer"]));
                }
            }
        } else {
            BigInt::from(1)
        };
        let coef = Rational::from_bigints(numer, denom).expect("positive denominator");
        let end = self.pos;
        match self.unit() {
            Some(u) => Ok((coef, u, self.pos)),
            None => Ok((coef, 0, end)),
        }
    }

    fn quat(&mut self) -> Result<QuatNode, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut coefs: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
        let mut sign_negative = false;
        loop {
            let (c, u, end) = self.term()?;
            let c = if sign_negative { -c } else { c };
            coefs[u] = &coefs[u] + &c;
            match self.peek() {
                Some('+') => sign_negative = false,
                Some('-') => sign_negative = true,
                _ => {
                    return Ok(QuatNode {
                        value: Quaternion::from_coefficients(coefs),
                        span: start..end,
                    })
                }
            }
            self.bump();
        }
    }

    fn row(&mut self) -> Result<Vec<QuatNode>, ParseError> {
        let mut row = vec![self.quat()?];
        while self.eat(',') {
            row.push(self.quat()?);
        }
        Ok(row)
    }

    fn value(&mut self) -> Result<SyntaxTree, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat('[') {
            return self.quat().map(SyntaxTree::Quat);
        }
        let first = self.row()?;
        if self.eat(';') {
            let second = self.row()?;
            if second.len() != first.len() {
                let at = second.last().expect("nonempty row").span.end;
                let expected = if second.len() < first.len() { "\",\"" } else { "\"]\"" };
                return Err(ParseError {
                    position: at,
                    expected: vec![format!("{expected} (rows must have {} entries)", first.len())],
                    found: self.src[at..].trim_start().chars().next(),
                });
            }
            if !self.eat(']') {
                return Err(self.error(["\",\"", "\"]\""]));
            }
            return Ok(SyntaxTree::Matrix {
                rows: [first, second],
                span: start..self.pos,
            });
        }
        if first.len() != 2 {
            if first.len() == 1 {
                return Err(self.error(["\",\""]));
            }
            let at = first[1].span.end;
            return Err(ParseError {
                position: at,
                expected: vec!["\"]\"".into(), "\";\"".into()],
                found: Some(','),
            });
        }
        if !self.eat(']') {
            return Err(self.error(["\"]\"", "\";\"", "\"+\"", "\"-\""]));
        }
        let [a, b]: [QuatNode; 2] = first.try_into().expect("two entries");
        Ok(SyntaxTree::Vector {
            entries: [a, b],
            span: start..self.pos,
        })
    }
}

/// Parses one quaternion, vector or matrix, consuming the whole input.
pub fn parse(text: &str) -> Result<SyntaxTree, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let tree = p.value()?;
    if p.peek().is_some() {
        let mut expected = vec!["end of input"];
        if matches!(tree, SyntaxTree::Quat(_)) {
            expected.extend(["\"+\"", "\"-\""]);
        }
        return Err(p.error(expected));
    }
    Ok(tree)
}

fn wrong_kind(tree: &SyntaxTree, wanted: &str) -> ParseError {
    ParseError {
        position: tree.span().start,
        expected: vec![wanted.to_string()],
        found: None,
    }
    .with_found_kind(tree.kind())
}

impl ParseError {
    fn with_found_kind(mut self, kind: &str) -> Self {
        self.expected[0] = format!("{} (got a {kind})", self.expected[0]);
        self
    }
}

pub fn parse_quat(text: &str) -> Result<Quaternion, ParseError> {
    match parse(text)? {
        SyntaxTree::Quat(q) => Ok(q.value),
        other => Err(wrong_kind(&other, "quaternion")),
    }
}

pub fn parse_vector(text: &str) -> Result<Vec2<Quaternion>, ParseError> {
    match parse(text)? {
        SyntaxTree::Vector { entries, .. } => {
            let [a, b] = entries;
            Ok(Vec2::new(a.value, b.value))
        }
        other => Err(wrong_kind(&other, "vector")),
    }
}

pub fn parse_matrix(text: &str) -> Result<Mat2xN<Quaternion>, ParseError> {
    match parse(text)? {
        SyntaxTree::Matrix { rows: [r1, r2], .. } => {
            let vals = |r: Vec<QuatNode>| r.into_iter().map(|q| q.value).collect::<Vec<_>>();
            match Mat2xN::from_rows(vals(r1), vals(r2)) {
                Ok(m) => Ok(m),
                Err(_) => Err(ParseError {
                    position: 0,
                    expected: vec!["matrix with at least 2 columns".into()],
                    found: text.chars().next(),
                }),
            }
        }
        other => Err(wrong_kind(&other, "matrix")),
    }
}

pub fn parse_mat2(text: &str) -> Result<Mat2<Quaternion>, ParseError> {
    let m = parse_matrix(text)?;
    if m.ncols() != 2 {
        return Err(ParseError {
            position: 0,
            expected: vec![format!("2x2 matrix (got 2x{})", m.ncols())],
            found: text.chars().next(),
        });
    }
    m.pair(0, 1).map_err(|_| unreachable!("two columns"))
}

/// A four-tuple written as the 2×4 matrix of its columns `x, y, z, t`.
pub fn parse_tuple(text: &str) -> Result<FourTuple<Quaternion>, ParseError> {
    let m = parse_matrix(text)?;
    FourTuple::from_matrix(&m).map_err(|_| ParseError {
        position: 0,
        expected: vec![format!("2x4 matrix (got 2x{})", m.ncols())],
        found: text.chars().next(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn quaternion_literals() {
        let q = parse_quat("1/2 + 3i - k").unwrap();
        assert_eq!(q, Quaternion::new(r(1, 2), r(3, 1), r(0, 1), r(-1, 1)));
        assert_eq!(
            parse_quat("  -2/4 j ").unwrap(),
            Quaternion::new(r(0, 1), r(0, 1), r(-1, 2), r(0, 1))
        );
        assert_eq!(parse_quat("i + i").unwrap(), Quaternion::from_ints(0, 2, 0, 0));
        assert_eq!(parse_quat("0").unwrap(), Quaternion::zero());
        assert_eq!(parse_quat("1 + -2").unwrap(), Quaternion::from_ints(-1, 0, 0, 0));
    }

    #[test]
    fn vectors_and_matrices() {
        let v = parse_vector("[1+i, j]").unwrap();
        assert_eq!(v, Vec2::new(Quaternion::from_ints(1, 1, 0, 0), Quaternion::j()));
        let m = parse_matrix("[1, 2, 3; 4, 5, 6]").unwrap();
        assert_eq!(m.ncols(), 3);
        assert_eq!(m.entry(1, 2).unwrap(), &Quaternion::from_ints(6, 0, 0, 0));
        assert!(parse_tuple("[1,0,1,3;0,1,1,1]").is_ok());
        assert!(parse_tuple("[1,0,1;0,1,1]").is_err());
    }

    #[test]
    fn errors_carry_position() {
        let e = parse("1 + + i").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.found, Some('+'));
        assert!(e.expected.iter().any(|x| x == "integer"));
        let e = parse("1/0").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse("[1, 2, 3]").unwrap_err();
        assert_eq!(e.found, Some(','));
        let e = parse("[1, 2; 3]").unwrap_err();
        assert_eq!(e.position, 8);
        assert!(parse("").is_err());
        assert!(parse("2 i j").is_err());
        assert!(parse("1 2").is_err());
        assert!(parse("ii").is_err());
        assert!(parse("- i").is_err());
    }

    #[test]
    fn spans() {
        match parse("[ 1 + i , j ]").unwrap() {
            SyntaxTree::Vector { entries, span } => {
                assert_eq!(span, 0..13);
                assert_eq!(entries[0].span, 2..7);
                assert_eq!(entries[1].span, 10..11);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn render_is_canonical() {
        let t = parse("[ -1 k, 2/4+0i ; 3 , i - i ]").unwrap();
        assert_eq!(t.render(), "[-1 k, 1/2; 3, 0]");
        assert_eq!(parse(&t.render()).unwrap().render(), t.render());
    }
}
