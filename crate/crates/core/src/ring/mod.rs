//! Computable rings: the finite kernel and the function-field matrices.

pub(crate) mod field;
mod infinite;
mod node;
mod spec;

use std::fmt;
use std::sync::OnceLock;

pub use field::GfField;
pub use infinite::{InfRing, InfValue};
pub use node::MAX_CARDINALITY;
pub use spec::{RingSpec, MAX_MATRIX_SIZE, MAX_PRODUCT_FACTORS};

use crate::error::{Result, RingError};
use crate::expr::{Evaluator, Expr};
use node::{Kind, Node};

/// Rings up to this size get precomputed addition and multiplication tables.
const TABLE_LIMIT: u32 = 1024;

/// Stable identifier derived from the canonical spec text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    fn of(spec: &RingSpec) -> RingId {
        // FNV-1a: stable across runs and platforms
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in spec.to_string().bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        RingId(h)
    }
}

/// An element of a finite ring: its index in canonical order.
///
/// Index order is lexicographic order on the component encoding, and
/// `Elem(0)` is the zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// A finite ring with total enumeration.
pub struct Ring {
    id: RingId,
    spec: RingSpec,
    node: Node,
    one: Elem,
    characteristic: u32,
    gens: Vec<Elem>,
    tables: OnceLock<Option<Tables>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.spec)
    }
}

impl Ring {
    pub fn build(spec: &RingSpec) -> Result<Ring> {
        spec.validate()?;
        let node = Node::build(spec)?;
        let one = Elem(node.from_int(1));
        let mut characteristic = 1;
        let mut acc = one.0;
        while acc != 0 {
            acc = node.add(acc, one.0);
            characteristic += 1;
        }
        let gens = node.additive_generators().into_iter().map(Elem).collect();
        Ok(Ring {
            id: RingId::of(spec),
            spec: spec.clone(),
            node,
            one,
            characteristic,
            gens,
            tables: OnceLock::new(),
        })
    }

    pub fn parse(spec: &str) -> Result<Ring> {
        Ring::build(&spec.parse()?)
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn cardinality(&self) -> u32 {
        self.node.card
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// Elements whose additive closure is the whole ring.
    pub fn additive_generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.node.card).map(Elem)
    }

    fn tables(&self) -> Option<&Tables> {
        self.tables
            .get_or_init(|| {
                let n = self.node.card;
                (n <= TABLE_LIMIT).then(|| {
                    let mut add = Vec::with_capacity((n * n) as usize);
                    let mut mul = Vec::with_capacity((n * n) as usize);
                    for a in 0..n {
                        for b in 0..n {
                            add.push(self.node.add(a, b));
                            mul.push(self.node.mul(a, b));
                        }
                    }
                    Tables { add, mul }
                })
            })
            .as_ref()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => Elem(t.add[(a.0 * self.node.card + b.0) as usize]),
            None => Elem(self.node.add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => Elem(t.mul[(a.0 * self.node.card + b.0) as usize]),
            None => Elem(self.node.mul(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.node.neg(a.0))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, a: Elem, b: Elem) -> Elem {
        self.sub(self.mul(a, b), self.mul(b, a))
    }

    /// `a x b`.
    #[inline]
    pub fn sandwich(&self, a: Elem, x: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, x), b)
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let (mut base, mut acc) = (a, self.one);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn from_int(&self, n: i64) -> Elem {
        Elem(self.node.from_int(n))
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        // in a finite ring a one-sided inverse is two-sided
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Whether `a` commutes with every element.
    pub fn is_central(&self, a: Elem) -> bool {
        self.gens.iter().all(|&g| self.commutes(a, g))
    }

    pub fn is_commutative(&self) -> bool {
        self.gens
            .iter()
            .all(|&g| self.gens.iter().all(|&h| self.commutes(g, h)))
    }

    pub fn evaluate(&self, src: &str) -> Result<Elem> {
        self.eval_expr(&Expr::parse(src)?)
    }

    pub fn eval_expr(&self, e: &Expr) -> Result<Elem> {
        self.node.eval(e).map(Elem)
    }

    /// Renders an element in the element-expression grammar, so the output
    /// can be fed back to [`Ring::evaluate`].
    pub fn render(&self, a: Elem) -> String {
        self.node.render(a.0)
    }

    pub fn render_pair(&self, a: Elem, b: Elem) -> String {
        format!("({}; {})", self.render(a), self.render(b))
    }

    /// Component indices: matrix entries row-major, upper-triangular slots
    /// row-major, or product factors. Scalars yield a single component.
    pub fn components(&self, a: Elem) -> Vec<u32> {
        self.node.components(a.0)
    }

    pub fn from_components(&self, parts: &[u32]) -> Elem {
        Elem(self.node.from_components(parts))
    }

    /// Factor specs when this is a product ring.
    pub fn product_factors(&self) -> Option<&[RingSpec]> {
        match &self.spec {
            RingSpec::Product(fs) => Some(fs),
            _ => None,
        }
    }

    /// Matrix size and base field when this ring is `M(n, GF(q))`.
    pub fn field_matrix(&self) -> Option<(usize, &GfField)> {
        self.node.as_field_matrix()
    }

    /// Whether this ring is a field `GF(q)` or `Z(p)` with `p` prime.
    pub fn is_field_spec(&self) -> bool {
        match &self.node.kind {
            Kind::Field(_) => true,
            Kind::Zmod(n) => (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0),
            _ => false,
        }
    }
}

/// Cardinality of a ring that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => f.write_str("infinite"),
        }
    }
}

/// Either kind of ring a spec can describe.
#[derive(Debug)]
pub enum AnyRing {
    Finite(Ring),
    Infinite(InfRing),
}

impl AnyRing {
    pub fn spec(&self) -> &RingSpec {
        match self {
            AnyRing::Finite(r) => r.spec(),
            AnyRing::Infinite(r) => r.spec(),
        }
    }

    pub fn cardinality(&self) -> Cardinality {
        match self {
            AnyRing::Finite(r) => Cardinality::Finite(r.cardinality() as u64),
            AnyRing::Infinite(_) => Cardinality::Infinite,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            AnyRing::Finite(r) => r.characteristic(),
            AnyRing::Infinite(r) => r.characteristic(),
        }
    }

    pub fn finite(&self) -> Result<&Ring> {
        match self {
            AnyRing::Finite(r) => Ok(r),
            AnyRing::Infinite(r) => Err(RingError::NonEnumerable(r.spec().to_string())),
        }
    }

    /// Evaluates an expression and renders the canonical result.
    pub fn evaluate_rendered(&self, src: &str) -> Result<String> {
        match self {
            AnyRing::Finite(r) => r.evaluate(src).map(|e| r.render(e)),
            AnyRing::Infinite(r) => r.evaluate(src).map(|v| r.render(&v)),
        }
    }
}

/// Builds the ring a spec describes; specs containing `FF(2)` give an
/// infinite, non-enumerable ring.
pub fn build_ring(spec: &RingSpec) -> Result<AnyRing> {
    spec.validate()?;
    if spec.is_enumerable() {
        Ring::build(spec).map(AnyRing::Finite)
    } else {
        InfRing::build(spec).map(AnyRing::Infinite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_cardinalities() {
        let r = Ring::parse("M(2,GF(2))").unwrap();
        assert_eq!((r.cardinality(), r.characteristic()), (16, 2));
        let r = Ring::parse("Z(6)").unwrap();
        assert_eq!((r.cardinality(), r.characteristic()), (6, 6));
        assert_eq!(Ring::parse("prod(M(2,GF(2)),GF(2))").unwrap().cardinality(), 32);
        assert_eq!(Ring::parse("M(2,Z(4))").unwrap().characteristic(), 4);
    }

    #[test]
    fn documented_evaluations() {
        let r = Ring::parse("M(2,GF(2))").unwrap();
        assert_eq!(r.evaluate("[[1,1],[1,1]]^2").unwrap(), r.zero());
        let f = Ring::parse("GF(2)").unwrap();
        assert_eq!(f.evaluate("1+1").unwrap(), f.zero());
        let r3 = Ring::parse("M(2,GF(3))").unwrap();
        assert_eq!(
            r3.evaluate("[[0,1],[0,0]]*[[0,0],[1,0]]").unwrap(),
            r3.evaluate("e(1,1)").unwrap()
        );
        assert_eq!(r3.render(r3.evaluate("e(1,2)*e(2,1)").unwrap()), "[[1,0],[0,0]]");
    }

    #[test]
    fn enumeration_errors_on_function_fields() {
        let spec: RingSpec = "M(2,FF(2))".parse().unwrap();
        assert!(matches!(Ring::build(&spec), Err(RingError::NonEnumerable(_))));
        assert!(matches!(build_ring(&spec), Ok(AnyRing::Infinite(_))));
        let z4 = Ring::parse("Z(4)").unwrap();
        assert_eq!(z4.elements().len(), 4);
        let m = Ring::parse("M(2,GF(2))").unwrap();
        assert_eq!(m.elements().next(), Some(m.zero()));
    }

    #[test]
    fn render_roundtrips() {
        for spec in ["M(2,GF(4))", "UT(2,GF(3))", "prod(GF(2),M(2,Z(4)))", "GF(9)"] {
            let r = Ring::parse(spec).unwrap();
            for a in r.elements().step_by(7) {
                assert_eq!(r.evaluate(&r.render(a)).unwrap(), a, "{spec}");
            }
        }
    }

    #[test]
    fn bad_expressions_are_rejected() {
        let r = Ring::parse("M(2,GF(2))").unwrap();
        assert!(matches!(
            r.evaluate("[[1,0,0],[0,1,0]]"),
            Err(RingError::DimensionMismatch(_))
        ));
        assert!(matches!(r.evaluate("I/e(1,2)"), Err(RingError::NotAUnit(_))));
        assert!(matches!(r.evaluate("[[1,]]"), Err(RingError::Parse { .. })));
        let ut = Ring::parse("UT(2,GF(2))").unwrap();
        assert!(ut.evaluate("e(2,1)").is_err());
    }
}
