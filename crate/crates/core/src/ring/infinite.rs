//! Rings containing `FF(2)`: exact arithmetic, no enumeration.

use crate::error::{Result, RingError};
use crate::expr::{Evaluator, Expr};
use crate::funcfield::{FfMatrix, RatFunc};
use crate::ring::node::Node;
use crate::ring::spec::RingSpec;

#[derive(Debug, Clone)]
enum InfNode {
    Fin(Node),
    Func,
    // upper-triangular rings share the square layout and keep zeros below the diagonal
    Matrix { n: usize, base: Box<InfNode>, upper: bool },
    Product(Vec<InfNode>),
}

/// A value of an infinite ring. Matrices are row-major `Seq`s of all `n*n` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InfValue {
    Fin(u32),
    Rat(RatFunc),
    Seq(Vec<InfValue>),
}

impl InfValue {
    fn seq(&self) -> &[InfValue] {
        match self {
            InfValue::Seq(v) => v,
            _ => unreachable!("compound value expected"),
        }
    }
}

impl InfNode {
    fn build(spec: &RingSpec) -> Result<InfNode> {
        if spec.is_enumerable() {
            return Node::build(spec).map(InfNode::Fin);
        }
        Ok(match spec {
            RingSpec::FuncField(_) => InfNode::Func,
            RingSpec::Matrix(n, b) => InfNode::Matrix {
                n: *n,
                base: Box::new(InfNode::build(b)?),
                upper: false,
            },
            RingSpec::UpperTri(n, b) => InfNode::Matrix {
                n: *n,
                base: Box::new(InfNode::build(b)?),
                upper: true,
            },
            RingSpec::Product(fs) => {
                InfNode::Product(fs.iter().map(InfNode::build).collect::<Result<_>>()?)
            }
            RingSpec::Zmod(_) | RingSpec::Gf(_) => unreachable!("enumerable leaf"),
        })
    }

    fn characteristic(&self) -> u32 {
        match self {
            InfNode::Fin(node) => {
                let one = node.from_int(1);
                let (mut acc, mut k) = (one, 1);
                while acc != 0 {
                    acc = node.add(acc, one);
                    k += 1;
                }
                k
            }
            InfNode::Func => 2,
            InfNode::Matrix { base, .. } => base.characteristic(),
            InfNode::Product(fs) => fs.iter().fold(1, |acc, f| lcm(acc, f.characteristic())),
        }
    }

    fn render(&self, v: &InfValue) -> String {
        match (self, v) {
            (InfNode::Fin(node), InfValue::Fin(a)) => node.render(*a),
            (InfNode::Func, InfValue::Rat(r)) => r.to_string(),
            (InfNode::Matrix { n, base, .. }, InfValue::Seq(xs)) => {
                let rows: Vec<String> = xs
                    .chunks(*n)
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|x| base.render(x)).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            (InfNode::Product(fs), InfValue::Seq(xs)) => {
                let cells: Vec<String> = fs.iter().zip(xs).map(|(f, x)| f.render(x)).collect();
                format!("({})", cells.join(","))
            }
            _ => unreachable!("value does not match ring shape"),
        }
    }

    fn is_zero(&self, v: &InfValue) -> bool {
        match v {
            InfValue::Fin(a) => *a == 0,
            InfValue::Rat(r) => r.is_zero(),
            InfValue::Seq(xs) => match self {
                InfNode::Matrix { base, .. } => xs.iter().all(|x| base.is_zero(x)),
                InfNode::Product(fs) => fs.iter().zip(xs).all(|(f, x)| f.is_zero(x)),
                _ => unreachable!(),
            },
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

impl Evaluator for InfNode {
    type Value = InfValue;

    fn zero(&self) -> InfValue {
        match self {
            InfNode::Fin(_) => InfValue::Fin(0),
            InfNode::Func => InfValue::Rat(RatFunc::zero()),
            InfNode::Matrix { n, base, .. } => InfValue::Seq(vec![base.zero(); n * n]),
            InfNode::Product(fs) => InfValue::Seq(fs.iter().map(|f| f.zero()).collect()),
        }
    }

    fn one(&self) -> InfValue {
        self.int(1).expect("integers embed in every ring")
    }

    fn int(&self, v: i64) -> Result<InfValue> {
        Ok(match self {
            InfNode::Fin(node) => InfValue::Fin(node.from_int(v)),
            InfNode::Func => InfValue::Rat(RatFunc::from_int(v)),
            InfNode::Matrix { n, base, .. } => {
                let d = base.int(v)?;
                let mut xs = vec![base.zero(); n * n];
                for i in 0..*n {
                    xs[i * n + i] = d.clone();
                }
                InfValue::Seq(xs)
            }
            InfNode::Product(fs) => {
                InfValue::Seq(fs.iter().map(|f| f.int(v)).collect::<Result<_>>()?)
            }
        })
    }

    fn name(&self, name: &str) -> Result<InfValue> {
        match (self, name) {
            (_, "I") => Ok(self.one()),
            (InfNode::Fin(node), _) => node.name(name).map(InfValue::Fin),
            (InfNode::Func, "t") => Ok(InfValue::Rat(RatFunc::t())),
            _ => Err(RingError::UnknownName(name.to_string())),
        }
    }

    fn unit(&self, i: usize, j: usize) -> Result<InfValue> {
        match self {
            InfNode::Fin(node) => node.unit(i, j).map(InfValue::Fin),
            InfNode::Matrix { n, base, upper } => {
                if i == 0 || j == 0 || i > *n || j > *n || (*upper && i > j) {
                    return Err(RingError::DimensionMismatch(format!(
                        "e({i},{j}) in a {n}x{n} ring"
                    )));
                }
                let mut xs = vec![base.zero(); n * n];
                xs[(i - 1) * n + (j - 1)] = base.one();
                Ok(InfValue::Seq(xs))
            }
            _ => Err(RingError::UnknownName(format!("e({i},{j}) outside a matrix ring"))),
        }
    }

    fn matrix(&self, rows: &[Vec<Expr>]) -> Result<InfValue> {
        match self {
            InfNode::Fin(node) => node.matrix(rows).map(InfValue::Fin),
            InfNode::Matrix { n, base, upper } => {
                if rows.len() != *n || rows.iter().any(|r| r.len() != *n) {
                    return Err(RingError::DimensionMismatch(format!(
                        "expected a {n}x{n} matrix literal"
                    )));
                }
                let mut xs = Vec::with_capacity(n * n);
                for (i, row) in rows.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        let v = base.eval(cell)?;
                        if *upper && j < i && !base.is_zero(&v) {
                            return Err(RingError::DimensionMismatch(format!(
                                "nonzero entry ({},{}) below the diagonal",
                                i + 1,
                                j + 1
                            )));
                        }
                        xs.push(v);
                    }
                }
                Ok(InfValue::Seq(xs))
            }
            _ => Err(RingError::DimensionMismatch(
                "matrix literal outside a matrix ring".into(),
            )),
        }
    }

    fn tuple(&self, items: &[Expr]) -> Result<InfValue> {
        match self {
            InfNode::Fin(node) => node.tuple(items).map(InfValue::Fin),
            InfNode::Product(fs) => {
                if fs.len() != items.len() {
                    return Err(RingError::DimensionMismatch(format!(
                        "expected {} components, got {}",
                        fs.len(),
                        items.len()
                    )));
                }
                Ok(InfValue::Seq(
                    fs.iter().zip(items).map(|(f, e)| f.eval(e)).collect::<Result<_>>()?,
                ))
            }
            _ => Err(RingError::DimensionMismatch(
                "tuple literal outside a product ring".into(),
            )),
        }
    }

    fn add(&self, a: &InfValue, b: &InfValue) -> InfValue {
        match (self, a, b) {
            (InfNode::Fin(node), InfValue::Fin(x), InfValue::Fin(y)) => InfValue::Fin(node.add(*x, *y)),
            (InfNode::Func, InfValue::Rat(x), InfValue::Rat(y)) => InfValue::Rat(x.add(y)),
            (InfNode::Matrix { base, .. }, _, _) => InfValue::Seq(
                a.seq().iter().zip(b.seq()).map(|(x, y)| base.add(x, y)).collect(),
            ),
            (InfNode::Product(fs), _, _) => InfValue::Seq(
                fs.iter()
                    .zip(a.seq().iter().zip(b.seq()))
                    .map(|(f, (x, y))| f.add(x, y))
                    .collect(),
            ),
            _ => unreachable!("value does not match ring shape"),
        }
    }

    fn neg(&self, a: &InfValue) -> InfValue {
        match (self, a) {
            (InfNode::Fin(node), InfValue::Fin(x)) => InfValue::Fin(node.neg(*x)),
            (InfNode::Func, InfValue::Rat(x)) => InfValue::Rat(x.clone()),
            (InfNode::Matrix { base, .. }, _) => {
                InfValue::Seq(a.seq().iter().map(|x| base.neg(x)).collect())
            }
            (InfNode::Product(fs), _) => {
                InfValue::Seq(fs.iter().zip(a.seq()).map(|(f, x)| f.neg(x)).collect())
            }
            _ => unreachable!("value does not match ring shape"),
        }
    }

    fn mul(&self, a: &InfValue, b: &InfValue) -> InfValue {
        match (self, a, b) {
            (InfNode::Fin(node), InfValue::Fin(x), InfValue::Fin(y)) => InfValue::Fin(node.mul(*x, *y)),
            (InfNode::Func, InfValue::Rat(x), InfValue::Rat(y)) => InfValue::Rat(x.mul(y)),
            (InfNode::Matrix { n, base, .. }, _, _) => {
                let (x, y, n) = (a.seq(), b.seq(), *n);
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = base.zero();
                        for k in 0..n {
                            acc = base.add(&acc, &base.mul(&x[i * n + k], &y[k * n + j]));
                        }
                        out.push(acc);
                    }
                }
                InfValue::Seq(out)
            }
            (InfNode::Product(fs), _, _) => InfValue::Seq(
                fs.iter()
                    .zip(a.seq().iter().zip(b.seq()))
                    .map(|(f, (x, y))| f.mul(x, y))
                    .collect(),
            ),
            _ => unreachable!("value does not match ring shape"),
        }
    }

    fn inverse(&self, a: &InfValue) -> Result<InfValue> {
        match (self, a) {
            (InfNode::Fin(node), InfValue::Fin(x)) => node.inverse(x).map(InfValue::Fin),
            (InfNode::Func, InfValue::Rat(x)) => x.inv().map(InfValue::Rat),
            (InfNode::Matrix { n, base, .. }, _) if matches!(**base, InfNode::Func) => {
                let m = to_ff_matrix(*n, a);
                Ok(from_ff_matrix(&m.inverse()?))
            }
            (InfNode::Product(fs), _) => Ok(InfValue::Seq(
                fs.iter()
                    .zip(a.seq())
                    .map(|(f, x)| f.inverse(x))
                    .collect::<Result<_>>()?,
            )),
            _ => Err(RingError::Unsupported(
                "inversion is only implemented for FF(2), M(n,FF(2)) and finite parts".into(),
            )),
        }
    }
}

fn to_ff_matrix(n: usize, v: &InfValue) -> FfMatrix {
    let entries = v
        .seq()
        .iter()
        .map(|x| match x {
            InfValue::Rat(r) => r.clone(),
            _ => unreachable!("FF(2) entry expected"),
        })
        .collect();
    FfMatrix::new(n, entries).expect("square layout")
}

fn from_ff_matrix(m: &FfMatrix) -> InfValue {
    InfValue::Seq(m.entries().iter().cloned().map(InfValue::Rat).collect())
}

/// A ring with a function-field node somewhere in its spec.
#[derive(Debug, Clone)]
pub struct InfRing {
    spec: RingSpec,
    node: InfNode,
    characteristic: u32,
}

impl InfRing {
    pub fn build(spec: &RingSpec) -> Result<InfRing> {
        spec.validate()?;
        if spec.is_enumerable() {
            return Err(RingError::Unsupported(format!("{spec} is finite")));
        }
        let node = InfNode::build(spec)?;
        Ok(InfRing {
            spec: spec.clone(),
            characteristic: node.characteristic(),
            node,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn zero(&self) -> InfValue {
        self.node.zero()
    }

    pub fn one(&self) -> InfValue {
        self.node.one()
    }

    pub fn add(&self, a: &InfValue, b: &InfValue) -> InfValue {
        self.node.add(a, b)
    }

    pub fn neg(&self, a: &InfValue) -> InfValue {
        self.node.neg(a)
    }

    pub fn mul(&self, a: &InfValue, b: &InfValue) -> InfValue {
        self.node.mul(a, b)
    }

    pub fn bracket(&self, a: &InfValue, b: &InfValue) -> InfValue {
        self.add(&self.mul(a, b), &self.neg(&self.mul(b, a)))
    }

    pub fn is_zero(&self, a: &InfValue) -> bool {
        self.node.is_zero(a)
    }

    pub fn evaluate(&self, src: &str) -> Result<InfValue> {
        self.node.eval(&Expr::parse(src)?)
    }

    pub fn render(&self, a: &InfValue) -> String {
        self.node.render(a)
    }

    fn ff_size(&self) -> Result<usize> {
        match &self.node {
            InfNode::Matrix { n, base, upper: false } if matches!(**base, InfNode::Func) => Ok(*n),
            _ => Err(RingError::Unsupported(format!(
                "{}: determinant and trace need M(n,FF(2))",
                self.spec
            ))),
        }
    }

    /// The value as an `FfMatrix`, for rings of the form `M(n, FF(2))`.
    pub fn as_matrix(&self, a: &InfValue) -> Result<FfMatrix> {
        Ok(to_ff_matrix(self.ff_size()?, a))
    }

    pub fn from_matrix(&self, m: &FfMatrix) -> Result<InfValue> {
        let n = self.ff_size()?;
        if m.size() != n {
            return Err(RingError::DimensionMismatch(format!(
                "{0}x{0} matrix in {1}",
                m.size(),
                self.spec
            )));
        }
        Ok(from_ff_matrix(m))
    }

    pub fn det(&self, a: &InfValue) -> Result<RatFunc> {
        Ok(self.as_matrix(a)?.det())
    }

    pub fn trace(&self, a: &InfValue) -> Result<RatFunc> {
        Ok(self.as_matrix(a)?.trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_over_function_field() {
        let r = InfRing::build(&"M(2,FF(2))".parse().unwrap()).unwrap();
        assert_eq!(r.characteristic(), 2);
        let a = r.evaluate("[[1,1],[t,1]]").unwrap();
        assert_eq!(r.render(&a), "[[1,1],[t,1]]");
        assert_eq!(r.det(&a).unwrap().to_string(), "t+1");
        assert!(r.trace(&a).unwrap().is_zero());
        let inv = r.evaluate("I/[[1,1],[t,1]]").unwrap();
        assert_eq!(r.mul(&a, &inv), r.one());
        let frac = r.evaluate("[[1/t,0],[0,(t+1)/(t^2+1)]]").unwrap();
        assert_eq!(r.render(&frac), "[[(1)/(t),0],[0,(1)/(t+1)]]");
        assert_eq!(r.evaluate(&r.render(&frac)).unwrap(), frac);
    }

    #[test]
    fn mixed_products_are_non_enumerable_but_computable() {
        let r = InfRing::build(&"prod(FF(2),Z(3))".parse().unwrap()).unwrap();
        assert_eq!(r.characteristic(), 6);
        let v = r.evaluate("(t,2)*(t,2)").unwrap();
        assert_eq!(r.render(&v), "(t^2,1)");
        assert!(r.det(&v).is_err());
    }
}
