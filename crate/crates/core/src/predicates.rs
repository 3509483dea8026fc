//! Deciders for semiprimeness-type conditions, with replayable witnesses.

use rayon::prelude::*;

use crate::error::{Result, RingError};
use crate::ring::{Elem, Ring};
use crate::sets::{self, ClosureMode, ElemSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Single(Elem),
    Pair(Elem, Elem),
}

impl Witness {
    pub fn render(&self, ring: &Ring) -> String {
        match *self {
            Witness::Single(a) => ring.render(a),
            Witness::Pair(a, b) => ring.render_pair(a, b),
        }
    }

    pub fn pair(&self) -> (Elem, Elem) {
        match *self {
            Witness::Single(a) => (a, a),
            Witness::Pair(a, b) => (a, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Number of (element, X-spanning element) products examined.
    pub checked_pairs: u64,
}

impl Verdict {
    fn holds(checked_pairs: u64) -> Self {
        Verdict {
            holds: true,
            witness: None,
            checked_pairs,
        }
    }

    fn fails(w: Witness, checked_pairs: u64) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
            checked_pairs,
        }
    }

    /// Re-evaluates `a x b = 0` for every `x` in `X`, with `a, b` nonzero.
    /// True iff the stored witness really exhibits a failure.
    pub fn replay(&self, ring: &Ring, x: &ElemSet) -> bool {
        let Some(w) = self.witness else {
            return false;
        };
        let (a, b) = w.pair();
        !a.is_zero()
            && !b.is_zero()
            && x.members()
                .iter()
                .all(|&s| ring.sandwich(a, s, b).is_zero())
    }

    pub fn witness_text(&self, ring: &Ring) -> Option<String> {
        self.witness.map(|w| w.render(ring))
    }
}

fn nonempty(ring: &Ring, x: &ElemSet) -> Result<()> {
    x.check_ring(ring)?;
    if x.is_empty() {
        return Err(RingError::EmptySet);
    }
    Ok(())
}

/// Canonically smallest nonzero `a` with `a x a = 0` for all `x` in `span`.
fn diagonal_witness(ring: &Ring, span: &[Elem]) -> Option<Elem> {
    (1..ring.cardinality())
        .into_par_iter()
        .map(Elem)
        .find_first(|&a| span.iter().all(|&s| ring.sandwich(a, s, a).is_zero()))
}

/// Decides `aXa = 0 ⇒ a = 0`. The witness is the canonically smallest
/// failing `a`.
pub fn x_semiprime(ring: &Ring, x: &ElemSet) -> Result<Verdict> {
    nonempty(ring, x)?;
    let span = x.spanning();
    let per = span.len().max(1) as u64;
    Ok(match diagonal_witness(ring, span) {
        Some(a) => Verdict::fails(Witness::Single(a), a.0 as u64 * per),
        None => Verdict::holds((ring.cardinality() as u64 - 1) * per),
    })
}

/// Decides `aXb = 0 ⇒ a = 0 or b = 0`.
///
/// A diagonal failure `aXa = 0` is reported first, as the pair `(a, a)`
/// with the smallest such `a`. Otherwise the witness is the canonically
/// smallest pair.
pub fn x_prime(ring: &Ring, x: &ElemSet) -> Result<Verdict> {
    nonempty(ring, x)?;
    let span = x.spanning();
    let card = ring.cardinality();
    let per = span.len().max(1) as u64;
    if let Some(a) = diagonal_witness(ring, span) {
        return Ok(Verdict::fails(Witness::Pair(a, a), a.0 as u64 * per));
    }
    let found = (1..card).into_par_iter().map(Elem).find_map_first(|a| {
        let left: Vec<Elem> = span.iter().map(|&s| ring.mul(a, s)).collect();
        (1..card)
            .map(Elem)
            .find(|&b| left.iter().all(|&l| ring.mul(l, b).is_zero()))
            .map(|b| (a, b))
    });
    let diag = (card as u64 - 1) * per;
    Ok(match found {
        Some((a, b)) => Verdict::fails(
            Witness::Pair(a, b),
            diag + (a.0 as u64 - 1) * (card as u64 - 1) * per + b.0 as u64 * per,
        ),
        None => Verdict::holds(diag + (card as u64 - 1).pow(2) * per),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primeness {
    Prime,
    SemiprimeNotPrime(Elem, Elem),
    NotSemiprime(Elem),
}

impl Primeness {
    pub fn is_prime(&self) -> bool {
        matches!(self, Primeness::Prime)
    }

    pub fn is_semiprime(&self) -> bool {
        !matches!(self, Primeness::NotSemiprime(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Primeness::Prime => "prime",
            Primeness::SemiprimeNotPrime(..) => "semiprime_not_prime",
            Primeness::NotSemiprime(_) => "not_semiprime",
        }
    }
}

pub fn primeness(ring: &Ring) -> Primeness {
    let full = ElemSet::full(ring);
    let v = x_prime(ring, &full).expect("the full ring is a nonempty subset");
    match v.witness {
        None => Primeness::Prime,
        // diagonal failures come first, so a == b means aRa = 0
        Some(Witness::Pair(a, b)) if a == b => Primeness::NotSemiprime(a),
        Some(Witness::Pair(a, b)) => Primeness::SemiprimeNotPrime(a, b),
        Some(Witness::Single(a)) => Primeness::NotSemiprime(a),
    }
}

pub fn is_semiprime(ring: &Ring) -> bool {
    x_semiprime(ring, &ElemSet::full(ring)).map(|v| v.holds).unwrap_or(false)
}

pub fn require_prime(ring: &Ring) -> Result<()> {
    if primeness(ring).is_prime() {
        Ok(())
    } else {
        Err(RingError::HypothesesUnmet(format!("{} is not prime", ring.spec())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingClass {
    pub primeness: Primeness,
    pub commutative: bool,
    pub reduced: bool,
    pub domain: bool,
    pub regular: bool,
    pub exceptional: bool,
    pub has_nontrivial_idempotent: bool,
}

pub fn is_reduced(ring: &Ring) -> bool {
    ring.elements().skip(1).all(|a| !ring.mul(a, a).is_zero())
}

pub fn is_domain(ring: &Ring) -> bool {
    let card = ring.cardinality();
    (1..card).into_par_iter().all(|a| {
        (1..card).all(|b| !ring.mul(Elem(a), Elem(b)).is_zero())
    })
}

/// Von Neumann regularity: every `a` has `b` with `aba = a`.
pub fn is_regular(ring: &Ring) -> bool {
    let card = ring.cardinality();
    (0..card)
        .into_par_iter()
        .all(|a| (0..card).any(|b| ring.sandwich(Elem(a), Elem(b), Elem(a)) == Elem(a)))
}

/// Characteristic 2, prime, noncommutative, of dimension 4 over the center.
pub fn is_exceptional(ring: &Ring, primeness: Primeness) -> Result<bool> {
    if ring.characteristic() != 2 || !primeness.is_prime() || ring.is_commutative() {
        return Ok(false);
    }
    let dims = sets::center_dimension_unchecked(ring, &ElemSet::full(ring))?;
    Ok(dims.dim_r_over_c == 4)
}

pub fn classify_ring(ring: &Ring) -> Result<RingClass> {
    let p = primeness(ring);
    let one = ring.one();
    Ok(RingClass {
        primeness: p,
        commutative: ring.is_commutative(),
        reduced: is_reduced(ring),
        domain: is_domain(ring),
        regular: is_regular(ring),
        exceptional: is_exceptional(ring, p)?,
        has_nontrivial_idempotent: ring
            .elements()
            .any(|e| ring.mul(e, e) == e && !e.is_zero() && e != one),
    })
}

/// Center dimensions of a prime ring (where the center is a field).
pub fn center_dimension(ring: &Ring, l: &ElemSet) -> Result<sets::CenterDimension> {
    l.check_ring(ring)?;
    require_prime(ring)?;
    sets::center_dimension_unchecked(ring, l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm3Criterion {
    pub subring_closure_is_r: bool,
    pub bracket_ll_nonzero: bool,
}

pub fn require_lie_ideal(ring: &Ring, l: &ElemSet) -> Result<()> {
    l.check_ring(ring)?;
    if sets::is_lie_ideal(ring, l) {
        Ok(())
    } else {
        Err(RingError::HypothesesUnmet("the set is not a Lie ideal".into()))
    }
}

/// Reports the two sufficient conditions for L-semiprimeness (semiprime
/// ring with the subring generated by L equal to R) and L-primeness
/// (prime ring with `[L,L] ≠ 0`).
pub fn thm3_criterion(ring: &Ring, l: &ElemSet) -> Result<Thm3Criterion> {
    require_lie_ideal(ring, l)?;
    let seed: Vec<Elem> = if l.spanning().is_empty() {
        vec![Elem::ZERO]
    } else {
        l.spanning().to_vec()
    };
    let sub = sets::closure(ring, &seed, ClosureMode::Subring)?;
    Ok(Thm3Criterion {
        subring_closure_is_r: sub.len() == ring.cardinality() as usize,
        bracket_ll_nonzero: !sets::bracket_set(ring, l, l)?.is_zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseII {
    pub exceptional: bool,
    pub ll_zero: bool,
    pub dim_lc: u32,
    /// First `a ∈ L` with `LC = [a, RC]` and `a + β` invertible for every central `β`.
    pub a_found: Option<Elem>,
    pub translates_invertible: bool,
}

impl CaseII {
    pub fn holds(&self) -> bool {
        self.exceptional && self.ll_zero && self.dim_lc == 2 && self.translates_invertible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm8Classification {
    pub applicable: bool,
    pub is_proper: bool,
    pub case_ii: CaseII,
    pub predicted_l_prime: bool,
    pub oracle_l_prime: bool,
    pub oracle: Verdict,
}

/// Classifies when a noncentral Lie ideal `L` of a prime ring that is not a
/// domain makes the ring L-prime: either `L` contains `[R,R]` (the ring is
/// simple), or the ring is exceptional with `[L,L] = 0`, `dim LC = 2` and
/// `LC = [a, RC]` for some `a ∈ L` all of whose central translates are
/// invertible. The prediction is compared against the exhaustive decider.
pub fn thm8_classify(ring: &Ring, l: &ElemSet) -> Result<Thm8Classification> {
    require_lie_ideal(ring, l)?;
    let p = primeness(ring);
    if !p.is_prime() {
        return Err(RingError::HypothesesUnmet(format!("{} is not prime", ring.spec())));
    }
    if is_domain(ring) {
        return Err(RingError::HypothesesUnmet(format!("{} is a domain", ring.spec())));
    }
    if sets::is_central_set(ring, l) {
        return Err(RingError::HypothesesUnmet("L is central".into()));
    }
    let full = ElemSet::full(ring);
    let rr = sets::bracket_set(ring, &full, &full)?;
    let is_proper = rr.is_subset(l);

    let z = sets::center(ring);
    let exceptional = is_exceptional(ring, p)?;
    let ll_zero = sets::bracket_set(ring, l, l)?.is_zero();
    let dims = sets::center_dimension_unchecked(ring, l)?;
    let lc = {
        let seed: Vec<Elem> = z
            .members()
            .iter()
            .flat_map(|&c| l.spanning().iter().map(move |&x| (c, x)))
            .map(|(c, x)| ring.mul(c, x))
            .collect();
        sets::additive_closure(ring, &seed)
    };
    let units = sets::units(ring);
    let a_found = l.members().iter().copied().find(|&a| {
        let ok_translates = z.members().iter().all(|&b| units.contains(ring.add(a, b)));
        ok_translates && {
            let seed: Vec<Elem> = z
                .members()
                .iter()
                .flat_map(|&c| {
                    ring.additive_generators()
                        .iter()
                        .map(move |&g| (c, g))
                })
                .map(|(c, g)| ring.mul(c, ring.bracket(a, g)))
                .collect();
            sets::additive_closure(ring, &seed) == lc
        }
    });
    let case_ii = CaseII {
        exceptional,
        ll_zero,
        dim_lc: dims.dim_lc_over_c,
        a_found,
        translates_invertible: a_found.is_some(),
    };
    let predicted = is_proper || case_ii.holds();
    let oracle = x_prime(ring, l)?;
    Ok(Thm8Classification {
        applicable: true,
        is_proper,
        predicted_l_prime: predicted,
        oracle_l_prime: oracle.holds,
        oracle,
        case_ii,
    })
}

/// `eR = {ex : x ∈ R}`.
pub fn corner(ring: &Ring, e: Elem) -> ElemSet {
    ElemSet::raw(ring, ring.elements().map(|x| ring.mul(e, x)))
}

pub fn central_idempotents(ring: &Ring) -> Vec<Elem> {
    ring.elements()
        .filter(|&e| ring.mul(e, e) == e && ring.is_central(e))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm19Decomposition {
    pub e1: Elem,
    pub e2: Elem,
    pub e3: Elem,
    /// (i) `e1 L ⊆ Z`, (ii) `e2 x^2 ∈ Z` for `x` in the subring generated by
    /// `L`, (iii) `e3 R` is `e3 L`-semiprime; each re-verified on all members.
    pub properties_verified: [bool; 3],
}

struct Thm19Ctx<'a> {
    ring: &'a Ring,
    l: &'a ElemSet,
    l_sub: ElemSet,
}

impl Thm19Ctx<'_> {
    fn cond_i(&self, e1: Elem, elems: &[Elem]) -> bool {
        elems.iter().all(|&x| self.ring.is_central(self.ring.mul(e1, x)))
    }

    fn cond_ii(&self, e2: Elem) -> bool {
        let r = self.ring;
        self.l_sub
            .members()
            .iter()
            .all(|&x| r.is_central(r.mul(e2, r.mul(x, x))))
    }

    fn cond_iii(&self, e3: Elem, elems: &[Elem]) -> bool {
        let r = self.ring;
        let xs: Vec<Elem> = elems.iter().map(|&x| r.mul(e3, x)).collect();
        r.elements()
            .skip(1)
            .filter(|&a| r.mul(e3, a) == a)
            .all(|a| xs.iter().any(|&x| !r.sandwich(a, x, a).is_zero()))
    }
}

/// Searches pairwise orthogonal central idempotents `e1 + e2 + e3 = 1` with
/// `e1 L` central, `e2 x^2` central on the subring generated by `L`, and
/// `e3 R` being `e3 L`-semiprime.
///
/// Among valid triples the one with the largest `e1 R` is returned, ties
/// broken by the largest `e3 R` and then canonical order. `Ok(None)` means
/// no triple exists, which would contradict the decomposition on a
/// semiprime ring.
pub fn thm19_decompose(ring: &Ring, l: &ElemSet) -> Result<Option<Thm19Decomposition>> {
    require_lie_ideal(ring, l)?;
    if !is_semiprime(ring) {
        return Err(RingError::HypothesesUnmet(format!("{} is not semiprime", ring.spec())));
    }
    let seed: Vec<Elem> = if l.spanning().is_empty() {
        vec![Elem::ZERO]
    } else {
        l.spanning().to_vec()
    };
    let ctx = Thm19Ctx {
        ring,
        l,
        l_sub: sets::closure(ring, &seed, ClosureMode::Subring)?,
    };
    let ci = central_idempotents(ring);
    let size = |e: Elem| corner(ring, e).len();
    let one = ring.one();
    let mut best: Option<((usize, usize), Thm19Decomposition)> = None;
    for &e1 in &ci {
        if !ctx.cond_i(e1, l.spanning()) {
            continue;
        }
        for &e2 in &ci {
            if !ring.mul(e1, e2).is_zero() {
                continue;
            }
            let e3 = ring.sub(ring.sub(one, e1), e2);
            if ring.mul(e3, e3) != e3 || !ctx.cond_ii(e2) || !ctx.cond_iii(e3, l.spanning()) {
                continue;
            }
            let score = (size(e1), size(e3));
            if best.as_ref().is_none_or(|(s, _)| score > *s) {
                best = Some((
                    score,
                    Thm19Decomposition {
                        e1,
                        e2,
                        e3,
                        properties_verified: [false; 3],
                    },
                ));
            }
        }
    }
    Ok(best.map(|(_, mut d)| {
        d.properties_verified = [
            ctx.cond_i(d.e1, ctx.l.members()),
            ctx.cond_ii(d.e2),
            ctx.cond_iii(d.e3, ctx.l.members()),
        ];
        d
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset_expr::evaluate_subset;

    fn ring(s: &str) -> Ring {
        Ring::parse(s).unwrap()
    }

    fn set(r: &Ring, s: &str) -> ElemSet {
        evaluate_subset(r, s).unwrap()
    }

    #[test]
    fn documented_primeness() {
        assert_eq!(primeness(&ring("M(2,GF(2))")), Primeness::Prime);
        let z6 = ring("Z(6)");
        assert_eq!(primeness(&z6), Primeness::SemiprimeNotPrime(Elem(2), Elem(3)));
        let ut = ring("UT(2,GF(2))");
        assert_eq!(primeness(&ut), Primeness::NotSemiprime(ut.evaluate("e(1,2)").unwrap()));
    }

    #[test]
    fn documented_x_semiprime() {
        let r = ring("M(2,GF(2))");
        assert!(x_semiprime(&r, &set(&r, "Id")).unwrap().holds);
        let l = set(&r, "add{I,[[0,1],[1,0]]}");
        let v = x_semiprime(&r, &l).unwrap();
        assert_eq!(v.witness_text(&r).unwrap(), "[[1,1],[1,1]]");
        assert!(v.replay(&r, &l));
        let z4 = ring("Z(4)");
        let one = ElemSet::raw(&z4, [z4.one()]);
        assert_eq!(x_semiprime(&z4, &one).unwrap().witness, Some(Witness::Single(Elem(2))));
        let empty = ElemSet::raw(&z4, []);
        assert_eq!(x_semiprime(&z4, &empty), Err(RingError::EmptySet));
    }

    #[test]
    fn documented_x_prime() {
        let r = ring("M(2,GF(2))");
        assert!(x_prime(&r, &set(&r, "[E,R]")).unwrap().holds);
        let r3 = ring("M(2,GF(3))");
        assert!(x_prime(&r3, &set(&r3, "[R,R]")).unwrap().holds);
        let z6 = ring("Z(6)");
        let v = x_prime(&z6, &ElemSet::full(&z6)).unwrap();
        assert_eq!(v.witness, Some(Witness::Pair(Elem(2), Elem(3))));
        assert!(v.replay(&z6, &ElemSet::full(&z6)));
    }

    #[test]
    fn x_prime_matches_naive_pair_scan() {
        // naive oracle over all members rather than spanning elements
        for spec in ["Z(6)", "UT(2,GF(2))", "prod(GF(2),GF(3))", "M(2,GF(2))"] {
            let r = ring(spec);
            for expr in ["Id", "U", "N", "Z", "[R,R]"] {
                let x = set(&r, expr);
                let naive = r.elements().skip(1).all(|a| {
                    r.elements()
                        .skip(1)
                        .all(|b| x.members().iter().any(|&s| !r.sandwich(a, s, b).is_zero()))
                });
                let v = x_prime(&r, &x).unwrap();
                assert_eq!(v.holds, naive, "{spec} {expr}");
                if !v.holds {
                    assert!(v.replay(&r, &x));
                }
            }
        }
    }

    #[test]
    fn documented_classification() {
        let c = classify_ring(&ring("M(2,GF(2))")).unwrap();
        assert!(c.exceptional && c.regular && !c.domain && c.has_nontrivial_idempotent);
        let c = classify_ring(&ring("M(2,GF(3))")).unwrap();
        assert!(!c.exceptional && c.regular);
        let c = classify_ring(&ring("Z(4)")).unwrap();
        assert!(!c.reduced && !c.regular);
        let c = classify_ring(&ring("GF(4)")).unwrap();
        assert!(c.domain && c.reduced && !c.exceptional);
    }

    #[test]
    fn documented_thm3_criteria() {
        let r3 = ring("M(2,GF(3))");
        let c = thm3_criterion(&r3, &set(&r3, "[R,R]")).unwrap();
        assert!(c.subring_closure_is_r && c.bracket_ll_nonzero);
        let r = ring("M(2,GF(2))");
        let c = thm3_criterion(&r, &set(&r, "add{I,[[0,1],[1,0]]}")).unwrap();
        assert!(!c.subring_closure_is_r);
        assert!(!thm3_criterion(&r, &set(&r, "Z")).unwrap().bracket_ll_nonzero);
        assert!(matches!(
            thm3_criterion(&r, &set(&r, "add{e(1,1)}")),
            Err(RingError::HypothesesUnmet(_))
        ));
    }

    #[test]
    fn documented_thm8_classifications() {
        let r = ring("M(2,GF(2))");
        let c = thm8_classify(&r, &set(&r, "add{I,[[0,1],[1,0]]}")).unwrap();
        assert!(!c.is_proper && c.case_ii.a_found.is_none());
        assert!(!c.predicted_l_prime && !c.oracle_l_prime);
        let c = thm8_classify(&r, &set(&r, "[R,R]")).unwrap();
        assert!(c.is_proper && c.predicted_l_prime && c.oracle_l_prime);
        let r3 = ring("M(2,GF(3))");
        let c = thm8_classify(&r3, &set(&r3, "[R,R]")).unwrap();
        assert!(c.is_proper && c.predicted_l_prime && c.oracle_l_prime);
        assert!(thm8_classify(&r, &set(&r, "Z")).is_err());
    }

    #[test]
    fn documented_thm19_decompositions() {
        let z6 = ring("Z(6)");
        let d = thm19_decompose(&z6, &ElemSet::full(&z6)).unwrap().unwrap();
        assert_eq!((d.e1, d.e2, d.e3), (z6.one(), Elem(0), Elem(0)));
        let r3 = ring("M(2,GF(3))");
        let d = thm19_decompose(&r3, &ElemSet::full(&r3)).unwrap().unwrap();
        assert_eq!((d.e1, d.e2, d.e3), (Elem(0), Elem(0), r3.one()));
        assert_eq!(d.properties_verified, [true; 3]);
        let ut = ring("UT(2,GF(2))");
        assert!(thm19_decompose(&ut, &ElemSet::full(&ut)).is_err());
    }
}
