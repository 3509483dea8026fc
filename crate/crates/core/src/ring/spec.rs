//! The ring-spec mini-language.
//!
//! ```text
//! ring := "Z(" int ")" | "GF(" int ")" | "M(" int "," ring ")" | "UT(" int "," ring ")"
//!       | "prod(" ring ("," ring)* ")" | "FF(" int ")"
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::ring::field::GfField;

/// Largest supported matrix size.
pub const MAX_MATRIX_SIZE: usize = 3;
/// Largest supported number of product factors.
pub const MAX_PRODUCT_FACTORS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RingSpec {
    Zmod(u32),
    Gf(u32),
    Matrix(usize, Box<RingSpec>),
    UpperTri(usize, Box<RingSpec>),
    Product(Vec<RingSpec>),
    FuncField(u32),
}

impl RingSpec {
    pub fn matrix(n: usize, base: RingSpec) -> Self {
        RingSpec::Matrix(n, Box::new(base))
    }

    pub fn upper_tri(n: usize, base: RingSpec) -> Self {
        RingSpec::UpperTri(n, Box::new(base))
    }

    /// A spec is enumerable iff no function-field node occurs in it.
    pub fn is_enumerable(&self) -> bool {
        match self {
            RingSpec::Zmod(_) | RingSpec::Gf(_) => true,
            RingSpec::FuncField(_) => false,
            RingSpec::Matrix(_, b) | RingSpec::UpperTri(_, b) => b.is_enumerable(),
            RingSpec::Product(fs) => fs.iter().all(RingSpec::is_enumerable),
        }
    }

    /// Checks the well-formedness invariants of every node.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Zmod(n) => {
                if *n < 2 {
                    return Err(RingError::MalformedSpec(format!("Z({n}) needs n >= 2")));
                }
            }
            RingSpec::Gf(q) => {
                GfField::new(*q)?;
            }
            RingSpec::Matrix(n, b) | RingSpec::UpperTri(n, b) => {
                if *n == 0 {
                    return Err(RingError::MalformedSpec(format!("{self}: size must be >= 1")));
                }
                if *n > MAX_MATRIX_SIZE {
                    return Err(RingError::Unsupported(format!(
                        "{self}: matrix size above {MAX_MATRIX_SIZE}"
                    )));
                }
                b.validate()?;
            }
            RingSpec::Product(fs) => {
                if fs.is_empty() {
                    return Err(RingError::MalformedSpec("prod() needs a factor".into()));
                }
                if fs.len() > MAX_PRODUCT_FACTORS {
                    return Err(RingError::Unsupported(format!(
                        "{self}: more than {MAX_PRODUCT_FACTORS} factors"
                    )));
                }
                for f in fs {
                    f.validate()?;
                }
            }
            RingSpec::FuncField(p) => {
                if *p != 2 {
                    return Err(RingError::Unsupported(format!(
                        "FF({p}): only FF(2) is implemented"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "Z({n})"),
            RingSpec::Gf(q) => write!(f, "GF({q})"),
            RingSpec::Matrix(n, b) => write!(f, "M({n},{b})"),
            RingSpec::UpperTri(n, b) => write!(f, "UT({n},{b})"),
            RingSpec::Product(fs) => {
                f.write_str("prod(")?;
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            RingSpec::FuncField(p) => write!(f, "FF({p})"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser { src: s, pos: 0 };
        let spec = p.ring()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(RingError::parse(p.pos, "trailing input after ring spec"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl TryFrom<String> for RingSpec {
    type Error = RingError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RingSpec> for String {
    fn from(s: RingSpec) -> String {
        s.to_string()
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(RingError::parse(self.pos, format!("expected `{tok}`")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(RingError::parse(start, "expected an integer"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| RingError::parse(start, "integer out of range"))
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| RingError::parse(at, "integer out of range"))
    }

    fn ring(&mut self) -> Result<RingSpec> {
        // Longest keywords first: "prod(" before nothing, "GF(" before others.
        if self.eat("prod(") {
            let mut factors = vec![self.ring()?];
            while self.eat(",") {
                factors.push(self.ring()?);
            }
            self.expect(")")?;
            return Ok(RingSpec::Product(factors));
        }
        if self.eat("GF(") {
            let q = self.small_int()?;
            self.expect(")")?;
            return Ok(RingSpec::Gf(q));
        }
        if self.eat("FF(") {
            let p = self.small_int()?;
            self.expect(")")?;
            return Ok(RingSpec::FuncField(p));
        }
        if self.eat("UT(") {
            let n = self.small_int()? as usize;
            self.expect(",")?;
            let b = self.ring()?;
            self.expect(")")?;
            return Ok(RingSpec::upper_tri(n, b));
        }
        if self.eat("M(") {
            let n = self.small_int()? as usize;
            self.expect(",")?;
            let b = self.ring()?;
            self.expect(")")?;
            return Ok(RingSpec::matrix(n, b));
        }
        if self.eat("Z(") {
            let n = self.small_int()?;
            self.expect(")")?;
            return Ok(RingSpec::Zmod(n));
        }
        Err(RingError::parse(self.pos, "expected a ring"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_canonically() {
        let s: RingSpec = "prod( M(2, GF(2)) ,GF(2))".parse().unwrap();
        assert_eq!(s.to_string(), "prod(M(2,GF(2)),GF(2))");
        assert!(s.is_enumerable());
        let f: RingSpec = "M(2,FF(2))".parse().unwrap();
        assert!(!f.is_enumerable());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!("Z(1)".parse::<RingSpec>(), Err(RingError::MalformedSpec(_))));
        assert!("GF(6)".parse::<RingSpec>().is_err());
        assert!(matches!("FF(3)".parse::<RingSpec>(), Err(RingError::Unsupported(_))));
        assert!("M(0,GF(2))".parse::<RingSpec>().is_err());
        assert!("M(4,GF(2))".parse::<RingSpec>().is_err());
        assert!("prod(Z(2),Z(2),Z(2),Z(2),Z(2))".parse::<RingSpec>().is_err());
        assert!("M(2,GF(2)) x".parse::<RingSpec>().is_err());
        assert!("Q(3)".parse::<RingSpec>().is_err());
    }

    #[test]
    fn ff_nested_is_non_enumerable() {
        let s: RingSpec = "prod(GF(2),FF(2))".parse().unwrap();
        assert!(!s.is_enumerable());
    }
}
