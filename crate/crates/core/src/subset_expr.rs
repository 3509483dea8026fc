//! Subset expressions.
//!
//! ```text
//! set  := atom ("*" atom)*
//! atom := "Id" | "U" | "N" | "Z" | "E" | "R" | name
//!       | "[" set "," set "]" | "pow(" set "," int ")" | "elpow(" set "," int ")"
//!       | "add{" elems "}" | "lie{" elems "}" | "ideal{" elems "}"
//!       | "annl(" set ")" | "annr(" set ")" | "(" set ")"
//! elems := expr ("," expr)*
//! ```
//!
//! `name` refers to a set bound in the evaluation environment.

use std::collections::BTreeMap;

use crate::error::{Result, RingError};
use crate::expr::{Expr, Parser, Tok};
use crate::ring::Ring;
use crate::sets::{self, ClosureMode, ElemSet, Side, SpecialKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetExpr {
    Special(SpecialKind),
    Full,
    Var(String),
    Bracket(Box<SubsetExpr>, Box<SubsetExpr>),
    Product(Box<SubsetExpr>, Box<SubsetExpr>),
    Pow(Box<SubsetExpr>, u32),
    ElPow(Box<SubsetExpr>, u32),
    Closure(ClosureMode, Vec<Expr>),
    Ann(Side, Box<SubsetExpr>),
}

impl SubsetExpr {
    pub fn parse(src: &str) -> Result<SubsetExpr> {
        let mut p = Parser::new(src)?;
        let e = set(&mut p)?;
        p.finish()?;
        Ok(e)
    }
}

impl std::str::FromStr for SubsetExpr {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        SubsetExpr::parse(s)
    }
}

fn set(p: &mut Parser) -> Result<SubsetExpr> {
    let mut lhs = atom(p)?;
    while p.eat(&Tok::Star) {
        lhs = SubsetExpr::Product(Box::new(lhs), Box::new(atom(p)?));
    }
    Ok(lhs)
}

fn exponent(p: &mut Parser) -> Result<u32> {
    let at = p.offset();
    let n = p.uint()?;
    match u32::try_from(n) {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(RingError::parse(at, "exponent must be a positive integer")),
    }
}

fn atom(p: &mut Parser) -> Result<SubsetExpr> {
    let at = p.offset();
    match p.bump() {
        Some(Tok::LBrack) => {
            let a = set(p)?;
            p.expect(&Tok::Comma, "`,` in [X,Y]")?;
            let b = set(p)?;
            p.expect(&Tok::RBrack, "`]` closing [X,Y]")?;
            Ok(SubsetExpr::Bracket(Box::new(a), Box::new(b)))
        }
        Some(Tok::LParen) => {
            let inner = set(p)?;
            p.expect(&Tok::RParen, "`)`")?;
            Ok(inner)
        }
        Some(Tok::Ident(name)) => {
            let mode = match name.as_str() {
                "add" => Some(ClosureMode::Additive),
                "lie" => Some(ClosureMode::Lie),
                "ideal" => Some(ClosureMode::Ideal),
                _ => None,
            };
            if let Some(mode) = mode {
                if p.eat(&Tok::LBrace) {
                    let mut items = vec![p.expr()?];
                    while p.eat(&Tok::Comma) {
                        items.push(p.expr()?);
                    }
                    p.expect(&Tok::RBrace, "`}` closing the element list")?;
                    return Ok(SubsetExpr::Closure(mode, items));
                }
            }
            let call = p.peek() == Some(&Tok::LParen);
            match (name.as_str(), call) {
                ("pow" | "elpow", true) => {
                    p.bump();
                    let inner = set(p)?;
                    p.expect(&Tok::Comma, "`,` before the exponent")?;
                    let n = exponent(p)?;
                    p.expect(&Tok::RParen, "`)`")?;
                    Ok(if name == "pow" {
                        SubsetExpr::Pow(Box::new(inner), n)
                    } else {
                        SubsetExpr::ElPow(Box::new(inner), n)
                    })
                }
                ("annl" | "annr", true) => {
                    p.bump();
                    let inner = set(p)?;
                    p.expect(&Tok::RParen, "`)`")?;
                    let side = if name == "annl" { Side::Left } else { Side::Right };
                    Ok(SubsetExpr::Ann(side, Box::new(inner)))
                }
                ("Id", _) => Ok(SubsetExpr::Special(SpecialKind::Id)),
                ("U", _) => Ok(SubsetExpr::Special(SpecialKind::U)),
                ("N", _) => Ok(SubsetExpr::Special(SpecialKind::N)),
                ("Z", _) => Ok(SubsetExpr::Special(SpecialKind::Z)),
                ("E", _) => Ok(SubsetExpr::Special(SpecialKind::E)),
                ("R", _) => Ok(SubsetExpr::Full),
                (_, false) => Ok(SubsetExpr::Var(name)),
                (_, true) => Err(RingError::parse(at, format!("unknown set function `{name}`"))),
            }
        }
        _ => Err(RingError::parse(at, "expected a set expression")),
    }
}

/// Named sets available to subset expressions.
pub type SetEnv = BTreeMap<String, ElemSet>;

pub fn eval_subset(ring: &Ring, e: &SubsetExpr, env: &SetEnv) -> Result<ElemSet> {
    Ok(match e {
        SubsetExpr::Special(k) => sets::special_subset(ring, *k),
        SubsetExpr::Full => ElemSet::full(ring),
        SubsetExpr::Var(name) => {
            let s = env
                .get(name)
                .ok_or_else(|| RingError::UnknownName(name.clone()))?;
            s.check_ring(ring)?;
            s.clone()
        }
        SubsetExpr::Bracket(a, b) => {
            sets::bracket_set(ring, &eval_subset(ring, a, env)?, &eval_subset(ring, b, env)?)?
        }
        SubsetExpr::Product(a, b) => {
            sets::product_set(ring, &eval_subset(ring, a, env)?, &eval_subset(ring, b, env)?)?
        }
        SubsetExpr::Pow(a, n) => sets::power_set(ring, &eval_subset(ring, a, env)?, *n)?,
        SubsetExpr::ElPow(a, n) => sets::elementwise_power(ring, &eval_subset(ring, a, env)?, *n)?,
        SubsetExpr::Closure(mode, items) => {
            let elems = items
                .iter()
                .map(|x| ring.eval_expr(x))
                .collect::<Result<Vec<_>>>()?;
            sets::closure(ring, &elems, *mode)?
        }
        SubsetExpr::Ann(side, a) => sets::annihilator(ring, &eval_subset(ring, a, env)?, *side)?,
    })
}

/// Parses and evaluates a subset expression with an empty environment.
pub fn evaluate_subset(ring: &Ring, src: &str) -> Result<ElemSet> {
    eval_subset(ring, &SubsetExpr::parse(src)?, &SetEnv::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_covers_every_form() {
        let r = Ring::parse("M(2,GF(2))").unwrap();
        let size = |s: &str| evaluate_subset(&r, s).unwrap().len();
        assert_eq!(size("Id"), 8);
        assert_eq!(size("[E,R]"), 8);
        assert_eq!(size("add{I, [[0,1],[1,0]]}"), 4);
        assert_eq!(size("lie{e(1,2)}"), 4);
        assert_eq!(size("ideal{e(1,1)}"), 16);
        assert_eq!(size("annl(add{e(1,2)})"), 4);
        assert_eq!(size("annr(U)"), 1);
        assert_eq!(size("pow([R,R],2)"), 16);
        assert_eq!(size("elpow(U,1)"), 6);
        assert_eq!(size("add{I,[[0,1],[1,0]]} * add{I,[[0,1],[1,0]]}"), 4);
        assert_eq!(size("([R,R])"), 8);
    }

    #[test]
    fn environment_and_errors() {
        let r = Ring::parse("M(2,GF(3))").unwrap();
        let mut env = SetEnv::new();
        env.insert("L".into(), evaluate_subset(&r, "[R,R]").unwrap());
        let e = SubsetExpr::parse("[L,L]").unwrap();
        assert_eq!(eval_subset(&r, &e, &env).unwrap().len(), 27);
        assert!(matches!(
            eval_subset(&r, &SubsetExpr::parse("K").unwrap(), &env),
            Err(RingError::UnknownName(_))
        ));
        assert!(matches!(SubsetExpr::parse("pow(R,0)"), Err(RingError::Parse { .. })));
        assert!(matches!(SubsetExpr::parse("[R R]"), Err(RingError::Parse { .. })));
        assert!(SubsetExpr::parse("frob(R)").is_err());
    }
}
