//! Enumeration of additive subgroups and Lie ideals of a finite ring.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use ringlab_core::sets::{self, ClosureMode};
use ringlab_core::{Elem, ElemSet, Ring};

use crate::error::{HarnessError, Result};

/// Largest ring for which every additive subgroup is enumerated.
pub const ALL_LIMIT: u32 = 256;
/// Largest ring for which the Lie-ideal lattice is enumerated.
pub const LIE_LIMIT: u32 = 6561;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupFilter {
    All,
    LieIdeals,
    NoncentralLieIdeals,
}

impl SubgroupFilter {
    pub fn name(self) -> &'static str {
        match self {
            SubgroupFilter::All => "all",
            SubgroupFilter::LieIdeals => "lie_ideals",
            SubgroupFilter::NoncentralLieIdeals => "noncentral_lie_ideals",
        }
    }

    fn limit(self) -> u32 {
        match self {
            SubgroupFilter::All => ALL_LIMIT,
            _ => LIE_LIMIT,
        }
    }
}

impl fmt::Display for SubgroupFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SubgroupFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(SubgroupFilter::All),
            "lie" | "lie_ideals" => Ok(SubgroupFilter::LieIdeals),
            "noncentral" | "noncentral_lie_ideals" => Ok(SubgroupFilter::NoncentralLieIdeals),
            _ => Err(format!("unknown filter `{s}` (expected all, lie or noncentral)")),
        }
    }
}

fn check_size(ring: &Ring, filter: SubgroupFilter) -> Result<()> {
    let limit = filter.limit();
    if ring.cardinality() > limit {
        return Err(HarnessError::TooLarge {
            spec: ring.spec().to_string(),
            size: ring.cardinality() as u64,
            limit,
            filter: filter.name(),
        });
    }
    Ok(())
}

/// Sorts by size, then by member list.
fn canonical(mut v: Vec<ElemSet>) -> Vec<ElemSet> {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    v
}

/// Each additive subgroup (or Lie ideal) exactly once, smallest first and
/// then in lexicographic order of members.
pub fn enumerate_additive_subgroups(ring: &Ring, filter: SubgroupFilter) -> Result<Vec<ElemSet>> {
    check_size(ring, filter)?;
    let out = match filter {
        SubgroupFilter::All => {
            let mut v = Vec::new();
            visit_subgroups(ring, |s| v.push(s.clone()));
            v
        }
        SubgroupFilter::LieIdeals => lie_lattice(ring),
        SubgroupFilter::NoncentralLieIdeals => lie_lattice(ring)
            .into_iter()
            .filter(|l| !sets::is_central_set(ring, l))
            .collect(),
    };
    Ok(canonical(out))
}

/// Breadth-first walk over all additive subgroups, extending each by one
/// coset representative at a time.
fn visit_subgroups(ring: &Ring, mut visit: impl FnMut(&ElemSet)) {
    let zero = ElemSet::zero(ring);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(zero.mask().clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(s) = queue.pop_front() {
        visit(&s);
        let mut covered = s.mask().clone();
        for g in ring.elements() {
            if covered.contains(g.index()) {
                continue;
            }
            // Every element of g + S gives the same extension.
            for &m in s.members() {
                covered.insert(ring.add(m, g).index());
            }
            let mut seed = s.spanning().to_vec();
            seed.push(g);
            let next = sets::additive_closure(ring, &seed);
            if seen.insert(next.mask().clone()) {
                queue.push_back(next);
            }
        }
    }
}

/// Lie ideals as joins of the Lie closures of single elements, saturated
/// under pairwise sums until no new ideal appears.
fn lie_lattice(ring: &Ring) -> Vec<ElemSet> {
    let elems: Vec<Elem> = ring.elements().collect();
    let closures: Vec<ElemSet> = elems
        .par_iter()
        .map(|&x| sets::closure(ring, &[x], ClosureMode::Lie).expect("nonempty seed"))
        .collect();
    let mut atoms: Vec<ElemSet> = Vec::new();
    let mut atom_masks: HashSet<FixedBitSet> = HashSet::new();
    for c in closures {
        if atom_masks.insert(c.mask().clone()) {
            atoms.push(c);
        }
    }

    let mut seen: HashSet<FixedBitSet> = atom_masks;
    let mut found: Vec<ElemSet> = atoms.clone();
    let mut frontier: Vec<ElemSet> = atoms.clone();
    while !frontier.is_empty() {
        let joins: Vec<ElemSet> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                atoms
                    .iter()
                    .filter(|a| !a.is_subset(s) && !s.is_subset(a))
                    .map(|a| {
                        let mut seed = s.spanning().to_vec();
                        seed.extend_from_slice(a.spanning());
                        sets::additive_closure(ring, &seed)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier.clear();
        for j in joins {
            if seen.insert(j.mask().clone()) {
                found.push(j.clone());
                frontier.push(j);
            }
        }
    }
    found
}

/// Brute-force Lie ideals: every additive subgroup filtered by the Lie
/// ideal condition.
pub fn brute_lie_ideals(ring: &Ring) -> Result<Vec<ElemSet>> {
    check_size(ring, SubgroupFilter::All)?;
    let mut v = Vec::new();
    visit_subgroups(ring, |s| {
        if sets::is_lie_ideal(ring, s) {
            v.push(s.clone());
        }
    });
    Ok(canonical(v))
}

/// Number of additive subgroups, without keeping them.
pub fn count_subgroups(ring: &Ring) -> Result<usize> {
    check_size(ring, SubgroupFilter::All)?;
    let mut n = 0;
    visit_subgroups(ring, |_| n += 1);
    Ok(n)
}

/// Whether the Lie lattice equals the brute-force filter of all subgroups.
pub fn lie_lattice_complete(ring: &Ring) -> Result<bool> {
    let fast = enumerate_additive_subgroups(ring, SubgroupFilter::LieIdeals)?;
    let brute = brute_lie_ideals(ring)?;
    Ok(fast == brute)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // Z(4): {0}, {0,2}, Z(4). GF(4) = (Z/2)^2: 1 + 3 + 1.
        let z4 = Ring::parse("Z(4)").unwrap();
        assert_eq!(count_subgroups(&z4).unwrap(), 3);
        let gf4 = Ring::parse("GF(4)").unwrap();
        assert_eq!(count_subgroups(&gf4).unwrap(), 5);
        let lie = enumerate_additive_subgroups(&gf4, SubgroupFilter::LieIdeals).unwrap();
        assert_eq!(lie.len(), 5);
        assert!(enumerate_additive_subgroups(&gf4, SubgroupFilter::NoncentralLieIdeals)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn canonical_order_starts_with_zero_and_ends_with_ring() {
        let r = Ring::parse("M(2,GF(2))").unwrap();
        let v = enumerate_additive_subgroups(&r, SubgroupFilter::LieIdeals).unwrap();
        assert!(v.first().unwrap().is_zero());
        assert_eq!(v.last().unwrap().len(), 16);
        assert!(v.windows(2).all(|w| w[0].len() <= w[1].len()));
    }

    #[test]
    fn size_limits() {
        let r = Ring::parse("M(3,GF(2))").unwrap();
        assert!(matches!(
            enumerate_additive_subgroups(&r, SubgroupFilter::All),
            Err(HarnessError::TooLarge { .. })
        ));
    }
}
