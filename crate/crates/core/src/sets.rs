//! Subsets of a finite ring and the closure, bracket and annihilator calculus.
//!
//! Closures only multiply or bracket against spanning elements (of the set
//! and of the ring's additive group). All the operations involved are
//! biadditive, so this gives the same saturation as using every element.

use fixedbitset::FixedBitSet;

use crate::error::{Result, RingError};
use crate::ring::{Elem, Ring, RingId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Raw,
    Additive,
    Subring,
    Ideal,
    RightIdeal,
    Lie,
}

/// A finite subset of a ring, with a sorted member list.
///
/// Sets of any kind other than `Raw` are additive subgroups and carry a
/// spanning sequence of generators.
#[derive(Debug, Clone)]
pub struct ElemSet {
    ring: RingId,
    members: Vec<Elem>,
    mask: FixedBitSet,
    generators: Option<Vec<Elem>>,
    kind: ClosureKind,
}

impl PartialEq for ElemSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for ElemSet {}

impl ElemSet {
    fn from_mask(ring: &Ring, mask: FixedBitSet, generators: Option<Vec<Elem>>, kind: ClosureKind) -> Self {
        let members = mask.ones().map(|i| Elem(i as u32)).collect();
        ElemSet {
            ring: ring.id(),
            members,
            mask,
            generators,
            kind,
        }
    }

    /// A plain subset with no closure claims.
    pub fn raw(ring: &Ring, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = FixedBitSet::with_capacity(ring.cardinality() as usize);
        for e in elems {
            mask.insert(e.index());
        }
        Self::from_mask(ring, mask, None, ClosureKind::Raw)
    }

    pub fn full(ring: &Ring) -> Self {
        let mut mask = FixedBitSet::with_capacity(ring.cardinality() as usize);
        mask.insert_range(..);
        Self::from_mask(ring, mask, Some(ring.additive_generators().to_vec()), ClosureKind::Ideal)
    }

    pub fn zero(ring: &Ring) -> Self {
        let mut s = Self::raw(ring, [ring.zero()]);
        s.generators = Some(Vec::new());
        s.kind = ClosureKind::Ideal;
        s
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.mask.contains(e.index())
    }

    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn generators(&self) -> Option<&[Elem]> {
        self.generators.as_deref()
    }

    /// Whether the set is `{0}`.
    pub fn is_zero(&self) -> bool {
        self.members == [Elem::ZERO]
    }

    /// Elements that determine every biadditive condition on the set: the
    /// generators of an additive set, all members of a raw one.
    pub fn spanning(&self) -> &[Elem] {
        match (&self.generators, self.kind) {
            (Some(g), k) if k != ClosureKind::Raw => g,
            _ => &self.members,
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub(crate) fn check_ring(&self, ring: &Ring) -> Result<()> {
        if self.ring == ring.id() {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    /// Renders the set in the subset grammar, as `add{...}` of its spanning
    /// elements (or of its members when it is raw).
    pub fn render(&self, ring: &Ring) -> String {
        let items: Vec<String> = self.spanning().iter().map(|&e| ring.render(e)).collect();
        if self.kind == ClosureKind::Raw {
            format!("{{{}}}", items.join(", "))
        } else if items.is_empty() {
            "add{0}".into()
        } else {
            format!("add{{{}}}", items.join(", "))
        }
    }
}

/// An additive subgroup under construction.
struct Span<'r> {
    ring: &'r Ring,
    mask: FixedBitSet,
    members: Vec<Elem>,
    basis: Vec<Elem>,
}

impl<'r> Span<'r> {
    fn new(ring: &'r Ring) -> Self {
        let mut mask = FixedBitSet::with_capacity(ring.cardinality() as usize);
        mask.insert(0);
        Span {
            ring,
            mask,
            members: vec![Elem::ZERO],
            basis: Vec::new(),
        }
    }

    fn contains(&self, e: Elem) -> bool {
        self.mask.contains(e.index())
    }

    /// Adds `g`, returning whether the span grew.
    ///
    /// The new span is the union of the cosets `S + kg` for `k` below the
    /// order of `g` modulo `S`.
    fn insert(&mut self, g: Elem) -> bool {
        if self.contains(g) {
            return false;
        }
        let base_len = self.members.len();
        let mut shift = g;
        while !self.contains(shift) {
            for i in 0..base_len {
                let e = self.ring.add(self.members[i], shift);
                self.mask.insert(e.index());
                self.members.push(e);
            }
            shift = self.ring.add(shift, g);
        }
        self.basis.push(g);
        true
    }

    fn finish(self, kind: ClosureKind) -> ElemSet {
        ElemSet::from_mask(self.ring, self.mask, Some(self.basis), kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    Additive,
    Subring,
    Ideal,
    RightIdeal,
    Lie,
}

impl ClosureMode {
    fn kind(self) -> ClosureKind {
        match self {
            ClosureMode::Additive => ClosureKind::Additive,
            ClosureMode::Subring => ClosureKind::Subring,
            ClosureMode::Ideal => ClosureKind::Ideal,
            ClosureMode::RightIdeal => ClosureKind::RightIdeal,
            ClosureMode::Lie => ClosureKind::Lie,
        }
    }
}

/// Smallest set containing `seed` with the closure property of `mode`.
///
/// Subring closure is non-unital: the additive span of all finite products
/// of seed elements.
pub fn closure(ring: &Ring, seed: &[Elem], mode: ClosureMode) -> Result<ElemSet> {
    if seed.is_empty() {
        return Err(RingError::EmptySet);
    }
    let mut span = Span::new(ring);
    for &s in seed {
        span.insert(s);
    }
    let gens = ring.additive_generators();
    let mut next = 0;
    while next < span.basis.len() {
        let s = span.basis[next];
        next += 1;
        let mut found = Vec::new();
        match mode {
            ClosureMode::Additive => {}
            ClosureMode::Subring => {
                for &t in &span.basis {
                    found.push(ring.mul(s, t));
                    found.push(ring.mul(t, s));
                }
            }
            ClosureMode::Ideal => {
                for &g in gens {
                    found.push(ring.mul(s, g));
                    found.push(ring.mul(g, s));
                }
            }
            ClosureMode::RightIdeal => found.extend(gens.iter().map(|&g| ring.mul(s, g))),
            ClosureMode::Lie => found.extend(gens.iter().map(|&g| ring.bracket(s, g))),
        }
        for x in found {
            span.insert(x);
        }
    }
    Ok(span.finish(mode.kind()))
}

pub fn additive_closure(ring: &Ring, seed: &[Elem]) -> ElemSet {
    let mut span = Span::new(ring);
    for &s in seed {
        span.insert(s);
    }
    span.finish(ClosureKind::Additive)
}

/// Re-closes a set under `mode`, starting from its spanning elements.
pub fn close_set(ring: &Ring, set: &ElemSet, mode: ClosureMode) -> Result<ElemSet> {
    set.check_ring(ring)?;
    closure(ring, set.spanning(), mode)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialKind {
    Id,
    U,
    N,
    Z,
    E,
}

pub fn idempotents(ring: &Ring) -> ElemSet {
    ElemSet::raw(ring, ring.elements().filter(|&e| ring.mul(e, e) == e))
}

pub fn units(ring: &Ring) -> ElemSet {
    let one = ring.one();
    ElemSet::raw(
        ring,
        ring.elements()
            .filter(|&u| ring.elements().any(|v| ring.mul(u, v) == one)),
    )
}

/// Whether `a^k = 0` for some `k`; checked as `a^(2^m) = 0` with `2^m` at
/// least the cardinality, which bounds the nilpotency index.
pub fn is_nilpotent(ring: &Ring, a: Elem) -> bool {
    let mut x = a;
    let mut exp: u64 = 1;
    while exp < ring.cardinality() as u64 {
        if x.is_zero() {
            return true;
        }
        x = ring.mul(x, x);
        exp *= 2;
    }
    x.is_zero()
}

pub fn nilpotents(ring: &Ring) -> ElemSet {
    ElemSet::raw(ring, ring.elements().filter(|&a| is_nilpotent(ring, a)))
}

pub fn center(ring: &Ring) -> ElemSet {
    let members: Vec<Elem> = ring.elements().filter(|&z| ring.is_central(z)).collect();
    additive_closure(ring, &members)
}

pub fn special_subset(ring: &Ring, kind: SpecialKind) -> ElemSet {
    match kind {
        SpecialKind::Id => idempotents(ring),
        SpecialKind::U => units(ring),
        SpecialKind::N => nilpotents(ring),
        SpecialKind::Z => center(ring),
        SpecialKind::E => additive_closure(ring, idempotents(ring).members()),
    }
}

/// Additive closure of `{[a, b] : a in A, b in B}`.
pub fn bracket_set(ring: &Ring, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    a.check_ring(ring)?;
    b.check_ring(ring)?;
    let mut span = Span::new(ring);
    for &x in a.spanning() {
        for &y in b.spanning() {
            span.insert(ring.bracket(x, y));
        }
    }
    Ok(span.finish(ClosureKind::Additive))
}

/// Additive closure of `{ab : a in A, b in B}`.
pub fn product_set(ring: &Ring, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    a.check_ring(ring)?;
    b.check_ring(ring)?;
    let mut span = Span::new(ring);
    for &x in a.spanning() {
        for &y in b.spanning() {
            span.insert(ring.mul(x, y));
        }
    }
    Ok(span.finish(ClosureKind::Additive))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedOp {
    /// Additive closure of pairwise products.
    Product,
    /// `n`-fold iterated product; the first power is the additive closure.
    PowerSet,
    /// The raw set `{x^n}`.
    ElementwisePower,
}

pub fn power_set(ring: &Ring, a: &ElemSet, n: u32) -> Result<ElemSet> {
    if n == 0 {
        return Err(RingError::DimensionMismatch("set power needs n >= 1".into()));
    }
    a.check_ring(ring)?;
    let mut acc = additive_closure(ring, a.spanning());
    for _ in 1..n {
        acc = product_set(ring, &acc, a)?;
    }
    Ok(acc)
}

pub fn elementwise_power(ring: &Ring, a: &ElemSet, n: u32) -> Result<ElemSet> {
    if n == 0 {
        return Err(RingError::DimensionMismatch("elementwise power needs n >= 1".into()));
    }
    a.check_ring(ring)?;
    Ok(ElemSet::raw(ring, a.members().iter().map(|&x| ring.pow(x, n as u64))))
}

pub fn derived_set(ring: &Ring, op: DerivedOp, a: &ElemSet, b: Option<&ElemSet>, n: u32) -> Result<ElemSet> {
    match op {
        DerivedOp::Product => product_set(ring, a, b.ok_or(RingError::EmptySet)?),
        DerivedOp::PowerSet => power_set(ring, a, n),
        DerivedOp::ElementwisePower => elementwise_power(ring, a, n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `{a : aX = 0}` (left) or `{a : Xa = 0}` (right).
pub fn annihilator(ring: &Ring, x: &ElemSet, side: Side) -> Result<ElemSet> {
    x.check_ring(ring)?;
    let span = x.spanning();
    Ok(ElemSet::raw(
        ring,
        ring.elements().filter(|&a| {
            span.iter().all(|&s| match side {
                Side::Left => ring.mul(a, s).is_zero(),
                Side::Right => ring.mul(s, a).is_zero(),
            })
        }),
    ))
}

/// Left annihilator of a single element.
pub fn element_annihilator(ring: &Ring, b: Elem, side: Side) -> ElemSet {
    ElemSet::raw(
        ring,
        ring.elements().filter(|&a| match side {
            Side::Left => ring.mul(a, b).is_zero(),
            Side::Right => ring.mul(b, a).is_zero(),
        }),
    )
}

/// Whether the members form an additive subgroup.
pub fn is_additive(ring: &Ring, x: &ElemSet) -> bool {
    x.kind() != ClosureKind::Raw || additive_closure(ring, x.members()).len() == x.len()
}

pub fn is_lie_ideal(ring: &Ring, x: &ElemSet) -> bool {
    is_additive(ring, x)
        && x.spanning().iter().all(|&s| {
            ring.additive_generators()
                .iter()
                .all(|&g| x.contains(ring.bracket(s, g)))
        })
}

pub fn is_central_set(ring: &Ring, x: &ElemSet) -> bool {
    x.spanning().iter().all(|&s| ring.is_central(s))
}

/// Square-zero elements `t`, whose `1 + t` give the special automorphisms.
pub fn square_zero(ring: &Ring) -> Vec<Elem> {
    ring.elements().filter(|&t| ring.mul(t, t).is_zero()).collect()
}

/// Whether `(1+t) X (1-t) ⊆ X` for every `t` with `t^2 = 0`.
pub fn is_special_invariant(ring: &Ring, x: &ElemSet) -> bool {
    let one = ring.one();
    square_zero(ring).into_iter().all(|t| {
        let (u, v) = (ring.add(one, t), ring.sub(one, t));
        x.members()
            .iter()
            .all(|&m| x.contains(ring.sandwich(u, m, v)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetPredicates {
    pub is_lie_ideal: bool,
    pub is_central: bool,
    pub is_special_invariant: bool,
}

pub fn set_predicates(ring: &Ring, x: &ElemSet) -> Result<SetPredicates> {
    x.check_ring(ring)?;
    Ok(SetPredicates {
        is_lie_ideal: is_lie_ideal(ring, x),
        is_central: is_central_set(ring, x),
        is_special_invariant: is_special_invariant(ring, x),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterDimension {
    pub center_size: usize,
    pub dim_r_over_c: u32,
    pub dim_lc_over_c: u32,
}

fn log_exact(n: usize, base: usize) -> Option<u32> {
    if base < 2 {
        return None;
    }
    let (mut v, mut k) = (n, 0);
    while v > 1 {
        if v % base != 0 {
            return None;
        }
        v /= base;
        k += 1;
    }
    Some(k)
}

/// `LC = span{z x : z in Z(R), x in L}` and the dimensions over `Z(R)`.
///
/// The caller guarantees primeness (so that `Z(R)` is a field); the
/// predicates module wraps this with the check.
pub fn center_dimension_unchecked(ring: &Ring, l: &ElemSet) -> Result<CenterDimension> {
    let z = center(ring);
    let mut span = Span::new(ring);
    for &c in z.members() {
        for &x in l.spanning() {
            span.insert(ring.mul(c, x));
        }
    }
    let lc = span.members.len();
    let q = z.len();
    let dim = |n: usize| {
        log_exact(n, q).ok_or_else(|| {
            RingError::Inconsistent(format!("{n} elements is not a power of |Z(R)| = {q}"))
        })
    };
    Ok(CenterDimension {
        center_size: q,
        dim_r_over_c: dim(ring.cardinality() as usize)?,
        dim_lc_over_c: dim(lc)?,
    })
}
