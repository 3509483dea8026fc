//! Per-ring data shared by the checks, computed once per ring.

use std::sync::OnceLock;

use ringlab_core::predicates::{self, RingClass};
use ringlab_core::sets::{self, SpecialKind};
use ringlab_core::{Elem, ElemSet, Result, Ring};

use crate::lattice::{self, SubgroupFilter, LIE_LIMIT};

/// A named subset together with the expression that rebuilds it.
#[derive(Debug, Clone)]
pub struct NamedSet {
    pub label: String,
    pub set: ElemSet,
}

pub struct RingFacts {
    pub spec: String,
    pub ring: Ring,
    pub class: RingClass,
    pub full: ElemSet,
    pub id: ElemSet,
    pub u: ElemSet,
    pub n: ElemSet,
    pub z: ElemSet,
    pub e: ElemSet,
    /// `[E,R]`
    pub er: ElemSet,
    /// `[R,R]`
    pub rr: ElemSet,
    lie: OnceLock<LieFamily>,
    blocks: OnceLock<Vec<Elem>>,
}

/// Lie ideals quantified over by the checks: the whole lattice when it is
/// small enough to enumerate, otherwise a fixed list of named ideals.
#[derive(Debug, Clone)]
pub struct LieFamily {
    pub complete: bool,
    pub ideals: Vec<ElemSet>,
}

impl LieFamily {
    pub fn describe(&self) -> String {
        if self.complete {
            format!("all {} Lie ideals", self.ideals.len())
        } else {
            format!("{} named Lie ideals", self.ideals.len())
        }
    }
}

impl RingFacts {
    pub fn new(ring: Ring) -> Result<Self> {
        let class = predicates::classify_ring(&ring)?;
        let full = ElemSet::full(&ring);
        let e = sets::special_subset(&ring, SpecialKind::E);
        let er = sets::bracket_set(&ring, &e, &full)?;
        let rr = sets::bracket_set(&ring, &full, &full)?;
        Ok(RingFacts {
            spec: ring.spec().to_string(),
            class,
            id: sets::special_subset(&ring, SpecialKind::Id),
            u: sets::special_subset(&ring, SpecialKind::U),
            n: sets::special_subset(&ring, SpecialKind::N),
            z: sets::special_subset(&ring, SpecialKind::Z),
            full,
            e,
            er,
            rr,
            ring,
            lie: OnceLock::new(),
            blocks: OnceLock::new(),
        })
    }

    pub fn card(&self) -> u32 {
        self.ring.cardinality()
    }

    pub fn is_semiprime(&self) -> bool {
        self.class.primeness.is_semiprime()
    }

    pub fn is_prime(&self) -> bool {
        self.class.primeness.is_prime()
    }

    /// `{1}`
    pub fn one_set(&self) -> ElemSet {
        ElemSet::raw(&self.ring, [self.ring.one()])
    }

    /// The distinguished subsets every ring has, labelled by their
    /// subset-grammar expressions.
    pub fn named_sets(&self) -> Vec<NamedSet> {
        [
            ("Id", &self.id),
            ("U", &self.u),
            ("N", &self.n),
            ("Z", &self.z),
            ("E", &self.e),
            ("[E,R]", &self.er),
            ("[R,R]", &self.rr),
            ("R", &self.full),
        ]
        .into_iter()
        .map(|(label, set)| NamedSet {
            label: label.into(),
            set: set.clone(),
        })
        .chain([NamedSet {
            label: "{1}".into(),
            set: self.one_set(),
        }])
        .collect()
    }

    pub fn lie_family(&self) -> &LieFamily {
        self.lie.get_or_init(|| {
            if self.card() <= LIE_LIMIT {
                let ideals = lattice::enumerate_additive_subgroups(&self.ring, SubgroupFilter::LieIdeals)
                    .expect("ring is within the lattice limit");
                return LieFamily {
                    complete: true,
                    ideals,
                };
            }
            let mut ideals: Vec<ElemSet> = Vec::new();
            for s in [
                ElemSet::zero(&self.ring),
                self.z.clone(),
                self.rr.clone(),
                self.er.clone(),
                self.e.clone(),
                self.full.clone(),
            ] {
                if !ideals.contains(&s) {
                    ideals.push(s);
                }
            }
            LieFamily {
                complete: false,
                ideals,
            }
        })
    }

    pub fn noncentral_lie_ideals(&self) -> Vec<&ElemSet> {
        self.lie_family()
            .ideals
            .iter()
            .filter(|l| !sets::is_central_set(&self.ring, l))
            .collect()
    }

    /// Central primitive idempotents: the identities of the simple
    /// components of a semiprime ring, in canonical order.
    pub fn blocks(&self) -> &[Elem] {
        self.blocks.get_or_init(|| {
            let r = &self.ring;
            let ci = predicates::central_idempotents(r);
            ci.iter()
                .copied()
                .filter(|&e| {
                    !e.is_zero()
                        && ci
                            .iter()
                            .all(|&f| f.is_zero() || f == e || r.mul(e, f) != f)
                })
                .collect()
        })
    }

    pub fn render(&self, a: Elem) -> String {
        self.ring.render(a)
    }
}
