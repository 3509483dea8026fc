//! Element expressions.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" int)?
//! atom  := int | name | "e(" int "," int ")" | matrix | "(" expr ("," expr)* ")"
//! matrix := "[" "[" expr ("," expr)* "]" ("," "[" ... "]")* "]"
//! ```
//!
//! Names: `I` (identity), `x` (the root adjoined in GF(p^k)), `t` (the
//! indeterminate of FF(2)). A parenthesised list with a comma is a product
//! literal; without a comma it is grouping.

use crate::error::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Name(String),
    Unit(usize, usize),
    Matrix(Vec<Vec<Expr>>),
    Tuple(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser::new(src)?;
        let e = p.expr()?;
        p.finish()?;
        Ok(e)
    }
}

impl std::str::FromStr for Expr {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        Expr::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(u64),
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = src[start..i]
                    .parse()
                    .map_err(|_| RingError::parse(start, "integer literal out of range"))?;
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            _ => {
                return Err(RingError::parse(
                    start,
                    format!("unexpected character `{}`", src[start..].chars().next().unwrap()),
                ))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

/// Recursive-descent parser shared by the element and subset grammars.
pub(crate) struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            end: src.len(),
        })
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(RingError::parse(self.offset(), format!("expected {what}")))
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(RingError::parse(self.offset(), "unexpected trailing input"))
        }
    }

    pub(crate) fn uint(&mut self) -> Result<u64> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(v),
            _ => Err(RingError::parse(at, "expected an integer")),
        }
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let at = self.offset();
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| RingError::parse(at, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(v)) => {
                let v = i64::try_from(v).map_err(|_| RingError::parse(at, "integer too large"))?;
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                if name == "e" && self.peek() == Some(&Tok::LParen) {
                    self.bump();
                    let i = self.uint()? as usize;
                    self.expect(&Tok::Comma, "`,` in e(i,j)")?;
                    let j = self.uint()? as usize;
                    self.expect(&Tok::RParen, "`)` closing e(i,j)")?;
                    Ok(Expr::Unit(i, j))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            Some(Tok::LParen) => {
                let mut items = vec![self.expr()?];
                while self.eat(&Tok::Comma) {
                    items.push(self.expr()?);
                }
                self.expect(&Tok::RParen, "`)`")?;
                if items.len() == 1 {
                    Ok(items.pop().unwrap())
                } else {
                    Ok(Expr::Tuple(items))
                }
            }
            Some(Tok::LBrack) => {
                let mut rows = Vec::new();
                loop {
                    self.expect(&Tok::LBrack, "`[` opening a matrix row")?;
                    let mut row = vec![self.expr()?];
                    while self.eat(&Tok::Comma) {
                        row.push(self.expr()?);
                    }
                    self.expect(&Tok::RBrack, "`]` closing a matrix row")?;
                    rows.push(row);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(&Tok::RBrack, "`]` closing a matrix literal")?;
                Ok(Expr::Matrix(rows))
            }
            _ => Err(RingError::parse(at, "expected an element")),
        }
    }
}

/// The arithmetic an expression needs from a ring.
pub trait Evaluator {
    type Value: Clone;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn int(&self, n: i64) -> Result<Self::Value>;
    fn name(&self, name: &str) -> Result<Self::Value>;
    fn unit(&self, i: usize, j: usize) -> Result<Self::Value>;
    fn matrix(&self, rows: &[Vec<Expr>]) -> Result<Self::Value>;
    fn tuple(&self, items: &[Expr]) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn inverse(&self, a: &Self::Value) -> Result<Self::Value>;

    fn eval(&self, e: &Expr) -> Result<Self::Value> {
        Ok(match e {
            Expr::Int(n) => self.int(*n)?,
            Expr::Name(n) => self.name(n)?,
            Expr::Unit(i, j) => self.unit(*i, *j)?,
            Expr::Matrix(rows) => self.matrix(rows)?,
            Expr::Tuple(items) => self.tuple(items)?,
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => {
                let b = self.neg(&self.eval(b)?);
                self.add(&self.eval(a)?, &b)
            }
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Div(a, b) => {
                let inv = self.inverse(&self.eval(b)?)?;
                self.mul(&self.eval(a)?, &inv)
            }
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Pow(a, k) => {
                let mut base = self.eval(a)?;
                let mut acc = self.one();
                let mut k = *k;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = self.mul(&acc, &base);
                    }
                    base = self.mul(&base, &base);
                    k >>= 1;
                }
                acc
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_literals() {
        let e = Expr::parse("-[[1,1],[1,1]]^2 + e(1,2)*I").unwrap();
        match e {
            Expr::Add(lhs, rhs) => {
                assert!(matches!(*lhs, Expr::Neg(ref inner) if matches!(**inner, Expr::Pow(_, 2))));
                assert!(matches!(*rhs, Expr::Mul(_, _)));
            }
            other => panic!("unexpected parse {other:?}"),
        }
        assert_eq!(Expr::parse("(1,2)").unwrap(), Expr::Tuple(vec![Expr::Int(1), Expr::Int(2)]));
        assert_eq!(Expr::parse("(1)").unwrap(), Expr::Int(1));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match Expr::parse("[[1,2],[3,4]") {
            Err(RingError::Parse { offset, .. }) => assert_eq!(offset, 12),
            other => panic!("{other:?}"),
        }
        assert!(Expr::parse("1 +").is_err());
        assert!(Expr::parse("2 $ 3").is_err());
        assert!(Expr::parse("e(1)").is_err());
    }
}
