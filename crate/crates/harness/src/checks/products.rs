//! Checks about direct products and prime images.
//!
//! A finite semiprime ring is a product of simple rings, so its prime
//! ideals are the kernels of the projections `x ↦ ex` onto the components
//! `eR`, `e` a central primitive idempotent. Each prime image is handled
//! as the corner `eR`, a ring with identity `e`.

use ringlab_core::predicates;
use ringlab_core::sets::{self, SpecialKind};
use ringlab_core::{CheckResult, Elem, ElemSet, Result, Ring};

use super::{require, yes_no, Step};
use crate::facts::RingFacts;

/// The corner `eR` as a ring with identity `e`.
struct Component<'a> {
    ring: &'a Ring,
    e: Elem,
    members: Vec<Elem>,
}

impl<'a> Component<'a> {
    fn new(ring: &'a Ring, e: Elem) -> Self {
        let members = predicates::corner(ring, e).members().to_vec();
        Component { ring, e, members }
    }

    fn project(&self, x: Elem) -> Elem {
        self.ring.mul(self.e, x)
    }

    fn idempotents(&self) -> ElemSet {
        let r = self.ring;
        ElemSet::raw(r, self.members.iter().copied().filter(|&x| r.mul(x, x) == x))
    }

    fn e_set(&self) -> ElemSet {
        sets::additive_closure(self.ring, self.idempotents().members())
    }

    /// `[E(eR), eR]`
    fn er(&self) -> Result<ElemSet> {
        let whole = sets::additive_closure(self.ring, &self.members);
        sets::bracket_set(self.ring, &self.e_set(), &whole)
    }

    fn has_nontrivial_idempotent(&self) -> bool {
        self.idempotents()
            .members()
            .iter()
            .any(|&x| !x.is_zero() && x != self.e)
    }

    /// `aXb = 0 ⇒ a = 0 or b = 0` for `a, b ∈ eR` and `X ⊆ eR`.
    fn x_prime(&self, x: &ElemSet) -> bool {
        let r = self.ring;
        let span = x.spanning();
        self.members.iter().skip(1).all(|&a| {
            let left: Vec<Elem> = span.iter().map(|&s| r.mul(a, s)).collect();
            self.members
                .iter()
                .skip(1)
                .all(|&b| left.iter().any(|&l| !r.mul(l, b).is_zero()))
        })
    }
}

fn components(f: &RingFacts) -> Vec<Component<'_>> {
    f.blocks().iter().map(|&e| Component::new(&f.ring, e)).collect()
}

fn factor_rings(f: &RingFacts) -> Result<Option<Vec<Ring>>> {
    let Some(specs) = f.ring.product_factors() else {
        return Ok(None);
    };
    Ok(Some(specs.iter().map(Ring::build).collect::<Result<_>>()?))
}

/// Whether `X(∏R_β) = ∏X(R_β)`, comparing sizes and componentwise
/// membership.
fn splits(f: &RingFacts, x: &ElemSet, parts: &[ElemSet]) -> bool {
    let size: usize = parts.iter().map(|p| p.len()).product();
    size == x.len()
        && x.members().iter().all(|&a| {
            f.ring
                .components(a)
                .iter()
                .zip(parts)
                .all(|(&c, p)| p.contains(Elem(c)))
        })
}

fn product_equivalence(f: &RingFacts, res: &mut CheckResult, kinds: &[(SpecialKind, &str)]) -> Step {
    let Some(factors) = factor_rings(f)? else {
        return require(false);
    };
    let mut predicted = Vec::new();
    let mut observed = Vec::new();
    for &(kind, label) in kinds {
        let x = sets::special_subset(&f.ring, kind);
        let parts: Vec<ElemSet> = factors.iter().map(|r| sets::special_subset(r, kind)).collect();
        res.assert(format!("{label}(R) = ∏ {label}(R_β)"), splits(f, &x, &parts), None);
        let each = factors
            .iter()
            .zip(&parts)
            .map(|(r, p)| Ok(predicates::x_semiprime(r, p)?.holds))
            .collect::<Result<Vec<bool>>>()?;
        let all = each.iter().all(|&b| b);
        let whole = predicates::x_semiprime(&f.ring, &x)?;
        res.assert(
            format!("x_semiprime(R,{label}) ⇔ every factor is {label}-semiprime"),
            whole.holds == all,
            whole.witness_text(&f.ring),
        );
        predicted.push(format!("{label}: {}", yes_no(all)));
        observed.push(format!("{label}: {}", yes_no(whole.holds)));
    }
    res.compare(predicted.join(", "), observed.join(", "));
    Ok(())
}

pub(crate) fn thm110(f: &RingFacts, res: &mut CheckResult) -> Step {
    product_equivalence(f, res, &[(SpecialKind::Id, "Id"), (SpecialKind::U, "U")])
}

pub(crate) fn prop4(f: &RingFacts, res: &mut CheckResult) -> Step {
    product_equivalence(f, res, &[(SpecialKind::Id, "Id")])
}

fn noncentral_idempotent_image(f: &RingFacts, c: &Component) -> bool {
    f.id.members().iter().any(|&e| !f.ring.is_central(c.project(e)))
}

pub(crate) fn thm14(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let comps = components(f);
    require(comps.iter().all(|c| noncentral_idempotent_image(f, c)))?;
    let v = predicates::x_semiprime(r, &f.er)?;
    res.assert("x_semiprime([E,R])", v.holds, v.witness_text(r));
    for c in &comps {
        let er = c.er()?;
        res.assert(
            format!("prime image {}R is [E,R]-prime", r.render(c.e)),
            c.x_prime(&er),
            Some(er.render(r)),
        );
    }
    let sum = comps.iter().fold(r.zero(), |acc, c| r.add(acc, c.e));
    let orthogonal = comps
        .iter()
        .all(|a| comps.iter().all(|b| a.e == b.e || r.mul(a.e, b.e).is_zero()));
    let injective = r
        .elements()
        .skip(1)
        .all(|x| comps.iter().any(|c| !c.project(x).is_zero()));
    res.assert(
        format!("R embeds in the product of its {} prime images", comps.len()),
        sum == r.one() && orthogonal && injective,
        None,
    );
    Ok(())
}

/// `E(eR)` is the image of `E(R)` under `x ↦ ex`.
fn e_maps_onto(f: &RingFacts, c: &Component) -> bool {
    let image = sets::additive_closure(&f.ring, &f.e.members().iter().map(|&x| c.project(x)).collect::<Vec<_>>());
    image == c.e_set()
}

pub(crate) fn thm15(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let comps = components(f);
    res.assert(
        "E(R) maps onto E of every prime image",
        comps.iter().all(|c| e_maps_onto(f, c)),
        None,
    );
    let er_prime = comps
        .iter()
        .map(|c| Ok(c.x_prime(&c.er()?)))
        .collect::<Result<Vec<bool>>>()?;
    require(er_prime.iter().all(|&b| b))?;
    let v = predicates::x_semiprime(r, &f.er)?;
    res.assert(
        format!("subdirect product of {} [E,R]-prime rings ⇒ x_semiprime([E,R])", comps.len()),
        v.holds,
        v.witness_text(r),
    );
    Ok(())
}

pub(crate) fn thm17(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let comps = components(f);
    require(comps.iter().all(|c| c.has_nontrivial_idempotent()))?;
    let v = predicates::x_semiprime(&f.ring, &f.er)?;
    res.assert(
        format!("all {} prime images have nontrivial idempotents ⇒ x_semiprime([E,R])", comps.len()),
        v.holds,
        v.witness_text(&f.ring),
    );
    Ok(())
}

pub(crate) fn prop2(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    for c in components(f) {
        let lifted = ElemSet::raw(r, f.id.members().iter().map(|&e| c.project(e)));
        res.assert(
            format!("Id({0}R) = {0}·Id(R)", r.render(c.e)),
            lifted == c.idempotents(),
            None,
        );
        res.assert(
            format!("E({0}R) = {0}·E(R)", r.render(c.e)),
            e_maps_onto(f, &c),
            None,
        );
    }
    Ok(())
}
