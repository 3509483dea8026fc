//! Arithmetic on the finite building blocks.
//!
//! Every finite node numbers its elements `0..card`. Compound nodes use a
//! mixed-radix encoding of their components with the first component most
//! significant, so numeric order is lexicographic order on the component
//! sequence and `0` is always the zero element.

use crate::error::{Result, RingError};
use crate::expr::{Evaluator, Expr};
use crate::ring::field::GfField;
use crate::ring::spec::RingSpec;

/// Largest cardinality the finite kernel accepts.
pub const MAX_CARDINALITY: u64 = 1 << 24;

const MAX_ENTRIES: usize = 9;

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub card: u32,
    pub kind: Kind,
}

#[derive(Debug, Clone)]
pub(crate) enum Kind {
    Zmod(u32),
    Field(GfField),
    Matrix { n: usize, base: Box<Node> },
    UpperTri { n: usize, base: Box<Node> },
    Product(Vec<Node>),
}

fn ut_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of entry (i, j), i <= j, in the row-major list of upper-triangular slots.
fn ut_pos(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i.saturating_sub(1)) / 2 - i + j
}

impl Node {
    pub fn build(spec: &RingSpec) -> Result<Node> {
        let node = match spec {
            RingSpec::Zmod(n) => Node {
                card: *n,
                kind: Kind::Zmod(*n),
            },
            RingSpec::Gf(q) => {
                let f = GfField::new(*q)?;
                Node {
                    card: f.order(),
                    kind: Kind::Field(f),
                }
            }
            RingSpec::Matrix(n, b) | RingSpec::UpperTri(n, b) => {
                let base = Node::build(b)?;
                let slots = if matches!(spec, RingSpec::Matrix(..)) {
                    n * n
                } else {
                    ut_len(*n)
                };
                let card = checked_card((base.card as u64).checked_pow(slots as u32), spec)?;
                let base = Box::new(base);
                Node {
                    card,
                    kind: if matches!(spec, RingSpec::Matrix(..)) {
                        Kind::Matrix { n: *n, base }
                    } else {
                        Kind::UpperTri { n: *n, base }
                    },
                }
            }
            RingSpec::Product(fs) => {
                let factors = fs.iter().map(Node::build).collect::<Result<Vec<_>>>()?;
                let card = factors
                    .iter()
                    .try_fold(1u64, |acc, f| acc.checked_mul(f.card as u64));
                Node {
                    card: checked_card(card, spec)?,
                    kind: Kind::Product(factors),
                }
            }
            RingSpec::FuncField(_) => {
                return Err(RingError::NonEnumerable(spec.to_string()));
            }
        };
        Ok(node)
    }

    fn slots(&self) -> usize {
        match &self.kind {
            Kind::Matrix { n, .. } => n * n,
            Kind::UpperTri { n, .. } => ut_len(*n),
            Kind::Product(fs) => fs.len(),
            _ => 1,
        }
    }

    /// Splits a compound index into component indices.
    #[inline]
    fn decode(&self, mut idx: u32, out: &mut [u32; MAX_ENTRIES]) {
        match &self.kind {
            Kind::Matrix { base, .. } | Kind::UpperTri { base, .. } => {
                let len = self.slots();
                for slot in out[..len].iter_mut().rev() {
                    *slot = idx % base.card;
                    idx /= base.card;
                }
            }
            Kind::Product(fs) => {
                for (slot, f) in out[..fs.len()].iter_mut().zip(fs).rev() {
                    *slot = idx % f.card;
                    idx /= f.card;
                }
            }
            _ => out[0] = idx,
        }
    }

    #[inline]
    fn encode(&self, parts: &[u32]) -> u32 {
        match &self.kind {
            Kind::Matrix { base, .. } | Kind::UpperTri { base, .. } => {
                parts.iter().fold(0, |acc, &p| acc * base.card + p)
            }
            Kind::Product(fs) => parts
                .iter()
                .zip(fs)
                .fold(0, |acc, (&p, f)| acc * f.card + p),
            _ => parts[0],
        }
    }

    /// Component indices of a compound element (matrix entries row-major,
    /// upper-triangular slots, or product factors).
    pub fn components(&self, idx: u32) -> Vec<u32> {
        let mut buf = [0; MAX_ENTRIES];
        self.decode(idx, &mut buf);
        buf[..self.slots()].to_vec()
    }

    pub fn from_components(&self, parts: &[u32]) -> u32 {
        self.encode(parts)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::Zmod(n) => ((a as u64 + b as u64) % *n as u64) as u32,
            Kind::Field(f) => f.add(a, b),
            Kind::Matrix { base, .. } | Kind::UpperTri { base, .. } => {
                self.zip_with(a, b, |_, x, y| base.add(x, y))
            }
            Kind::Product(fs) => self.zip_with(a, b, |i, x, y| fs[i].add(x, y)),
        }
    }

    fn zip_with(&self, a: u32, b: u32, f: impl Fn(usize, u32, u32) -> u32) -> u32 {
        let (mut x, mut y) = ([0; MAX_ENTRIES], [0; MAX_ENTRIES]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        let len = self.slots();
        for i in 0..len {
            x[i] = f(i, x[i], y[i]);
        }
        self.encode(&x[..len])
    }

    pub fn neg(&self, a: u32) -> u32 {
        match &self.kind {
            Kind::Zmod(n) => (n - a) % n,
            Kind::Field(f) => f.neg(a),
            Kind::Matrix { base, .. } | Kind::UpperTri { base, .. } => {
                self.zip_with(a, a, |_, x, _| base.neg(x))
            }
            Kind::Product(fs) => self.zip_with(a, a, |i, x, _| fs[i].neg(x)),
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::Zmod(n) => ((a as u64 * b as u64) % *n as u64) as u32,
            Kind::Field(f) => f.mul(a, b),
            Kind::Matrix { n, base } => {
                let n = *n;
                let (mut x, mut y, mut z) = ([0; MAX_ENTRIES], [0; MAX_ENTRIES], [0; MAX_ENTRIES]);
                self.decode(a, &mut x);
                self.decode(b, &mut y);
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0;
                        for k in 0..n {
                            acc = base.add(acc, base.mul(x[i * n + k], y[k * n + j]));
                        }
                        z[i * n + j] = acc;
                    }
                }
                self.encode(&z[..n * n])
            }
            Kind::UpperTri { n, base } => {
                let n = *n;
                let (mut x, mut y, mut z) = ([0; MAX_ENTRIES], [0; MAX_ENTRIES], [0; MAX_ENTRIES]);
                self.decode(a, &mut x);
                self.decode(b, &mut y);
                for i in 0..n {
                    for j in i..n {
                        let mut acc = 0;
                        for k in i..=j {
                            acc = base.add(acc, base.mul(x[ut_pos(n, i, k)], y[ut_pos(n, k, j)]));
                        }
                        z[ut_pos(n, i, j)] = acc;
                    }
                }
                self.encode(&z[..ut_len(n)])
            }
            Kind::Product(fs) => self.zip_with(a, b, |i, x, y| fs[i].mul(x, y)),
        }
    }

    pub fn from_int(&self, v: i64) -> u32 {
        match &self.kind {
            Kind::Zmod(n) => v.rem_euclid(*n as i64) as u32,
            Kind::Field(f) => f.from_int(v),
            Kind::Matrix { n, base } | Kind::UpperTri { n, base } => {
                let d = base.from_int(v);
                let mut parts = [0; MAX_ENTRIES];
                for i in 0..*n {
                    parts[self.slot(i, i)] = d;
                }
                self.encode(&parts[..self.slots()])
            }
            Kind::Product(fs) => {
                let parts: Vec<u32> = fs.iter().map(|f| f.from_int(v)).collect();
                self.encode(&parts)
            }
        }
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        match &self.kind {
            Kind::Matrix { n, .. } => i * n + j,
            Kind::UpperTri { n, .. } => ut_pos(*n, i, j),
            _ => unreachable!("slot on a non-matrix node"),
        }
    }

    /// Generators of the additive group: one per component generator and slot.
    pub fn additive_generators(&self) -> Vec<u32> {
        match &self.kind {
            Kind::Zmod(_) => vec![1],
            Kind::Field(f) => (0..f.degree()).map(|i| f.characteristic().pow(i)).collect(),
            Kind::Matrix { base, .. } | Kind::UpperTri { base, .. } => {
                let len = self.slots();
                let bg = base.additive_generators();
                let mut out = Vec::with_capacity(len * bg.len());
                for pos in 0..len {
                    for &g in &bg {
                        let mut parts = [0; MAX_ENTRIES];
                        parts[pos] = g;
                        out.push(self.encode(&parts[..len]));
                    }
                }
                out
            }
            Kind::Product(fs) => {
                let mut out = Vec::new();
                for (pos, f) in fs.iter().enumerate() {
                    for g in f.additive_generators() {
                        let mut parts = vec![0; fs.len()];
                        parts[pos] = g;
                        out.push(self.encode(&parts));
                    }
                }
                out
            }
        }
    }

    /// Renders an element in the element-expression grammar.
    pub fn render(&self, a: u32) -> String {
        match &self.kind {
            Kind::Zmod(_) => a.to_string(),
            Kind::Field(f) => f.render(a),
            Kind::Matrix { n, base } | Kind::UpperTri { n, base } => {
                let n = *n;
                let parts = self.components(a);
                let rows: Vec<String> = (0..n)
                    .map(|i| {
                        let cells: Vec<String> = (0..n)
                            .map(|j| {
                                if matches!(self.kind, Kind::UpperTri { .. }) && j < i {
                                    "0".to_string()
                                } else {
                                    base.render(parts[self.slot(i, j)])
                                }
                            })
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Kind::Product(fs) => {
                let parts = self.components(a);
                let cells: Vec<String> = fs
                    .iter()
                    .zip(&parts)
                    .map(|(f, &p)| f.render(p))
                    .collect();
                format!("({})", cells.join(","))
            }
        }
    }

    /// Two-sided inverse by search.
    pub fn inverse_of(&self, a: u32) -> Option<u32> {
        let one = self.from_int(1);
        (0..self.card).find(|&b| self.mul(a, b) == one && self.mul(b, a) == one)
    }

    /// The matrix size and base field when this is `M(n, GF(q))`.
    pub fn as_field_matrix(&self) -> Option<(usize, &GfField)> {
        match &self.kind {
            Kind::Matrix { n, base } => match &base.kind {
                Kind::Field(f) => Some((*n, f)),
                _ => None,
            },
            _ => None,
        }
    }
}

fn checked_card(card: Option<u64>, spec: &RingSpec) -> Result<u32> {
    match card {
        Some(c) if c <= MAX_CARDINALITY => Ok(c as u32),
        _ => Err(RingError::Unsupported(format!(
            "{spec}: more than {MAX_CARDINALITY} elements"
        ))),
    }
}

impl Evaluator for Node {
    type Value = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        self.from_int(1)
    }

    fn int(&self, n: i64) -> Result<u32> {
        Ok(self.from_int(n))
    }

    fn name(&self, name: &str) -> Result<u32> {
        match (name, &self.kind) {
            ("I", _) => Ok(self.one()),
            ("x", Kind::Field(f)) => f
                .generator()
                .ok_or_else(|| RingError::UnknownName("x (GF(p) has no adjoined root)".into())),
            _ => Err(RingError::UnknownName(name.to_string())),
        }
    }

    fn unit(&self, i: usize, j: usize) -> Result<u32> {
        let n = match &self.kind {
            Kind::Matrix { n, .. } | Kind::UpperTri { n, .. } => *n,
            _ => return Err(RingError::UnknownName(format!("e({i},{j}) outside a matrix ring"))),
        };
        if i == 0 || j == 0 || i > n || j > n {
            return Err(RingError::DimensionMismatch(format!("e({i},{j}) in a {n}x{n} ring")));
        }
        if matches!(self.kind, Kind::UpperTri { .. }) && i > j {
            return Err(RingError::DimensionMismatch(format!(
                "e({i},{j}) is below the diagonal"
            )));
        }
        let (Kind::Matrix { base, .. } | Kind::UpperTri { base, .. }) = &self.kind else {
            unreachable!()
        };
        let mut parts = [0; MAX_ENTRIES];
        parts[self.slot(i - 1, j - 1)] = base.one();
        Ok(self.encode(&parts[..self.slots()]))
    }

    fn matrix(&self, rows: &[Vec<Expr>]) -> Result<u32> {
        let (n, base, upper) = match &self.kind {
            Kind::Matrix { n, base } => (*n, base, false),
            Kind::UpperTri { n, base } => (*n, base, true),
            _ => {
                return Err(RingError::DimensionMismatch(
                    "matrix literal outside a matrix ring".into(),
                ))
            }
        };
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(RingError::DimensionMismatch(format!(
                "expected a {n}x{n} matrix literal"
            )));
        }
        let mut parts = [0; MAX_ENTRIES];
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let v = base.eval(cell)?;
                if upper && j < i {
                    if v != 0 {
                        return Err(RingError::DimensionMismatch(format!(
                            "nonzero entry ({},{}) below the diagonal",
                            i + 1,
                            j + 1
                        )));
                    }
                    continue;
                }
                parts[self.slot(i, j)] = v;
            }
        }
        Ok(self.encode(&parts[..self.slots()]))
    }

    fn tuple(&self, items: &[Expr]) -> Result<u32> {
        let Kind::Product(fs) = &self.kind else {
            return Err(RingError::DimensionMismatch(
                "tuple literal outside a product ring".into(),
            ));
        };
        if items.len() != fs.len() {
            return Err(RingError::DimensionMismatch(format!(
                "expected {} components, got {}",
                fs.len(),
                items.len()
            )));
        }
        let parts = fs
            .iter()
            .zip(items)
            .map(|(f, e)| f.eval(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.encode(&parts))
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        Node::add(self, *a, *b)
    }

    fn neg(&self, a: &u32) -> u32 {
        Node::neg(self, *a)
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        Node::mul(self, *a, *b)
    }

    fn inverse(&self, a: &u32) -> Result<u32> {
        self.inverse_of(*a)
            .ok_or_else(|| RingError::NotAUnit(self.render(*a)))
    }
}
