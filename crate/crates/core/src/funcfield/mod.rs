//! Exact arithmetic in the rational function field F_2(t).
//!
//! Finite fields of characteristic 2 are perfect, so every element is a
//! square there. The non-square element the characteristic-2 examples need
//! only exists over an infinite field, which is why this layer is here.

mod matrix;
mod poly;

pub mod checks;

use std::fmt;

pub use matrix::{translates_invertible, FfMatrix, Translates};
pub use poly::Poly;

use crate::error::{Result, RingError};

/// A reduced fraction `num / den` with `den` nonzero and `gcd(num, den) = 1`.
///
/// Over GF(2) every nonzero polynomial is monic, so the reduced form is unique
/// and structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_exact(&g),
                den: den.div_exact(&g),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        if n.rem_euclid(2) == 1 {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(o)
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn square(&self) -> RatFunc {
        self.mul(self)
    }

    /// Re-reduces the fraction; a no-op on values built through this API.
    pub fn renormalize(&self) -> RatFunc {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    /// Whether `self = g^2` for some `g` in F_2(t).
    ///
    /// With numerator and denominator coprime, this holds iff both are
    /// squares in F_2[t], i.e. every multiplicity in their square-free
    /// decompositions is even.
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let even = |p: &Poly| {
            p.squarefree_decomposition()
                .iter()
                .all(|(_, m)| m % 2 == 0)
        };
        even(&self.num) && even(&self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Free-standing form of the field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratfunc_arith(op: RatOp, f: &RatFunc, g: &RatFunc) -> Result<RatFunc> {
    match op {
        RatOp::Add => Ok(f.add(g)),
        RatOp::Sub => Ok(f.sub(g)),
        RatOp::Mul => Ok(f.mul(g)),
        RatOp::Div => f.div(g),
    }
}

pub fn is_square(f: &RatFunc) -> bool {
    f.is_square()
}
