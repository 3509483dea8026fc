use ringlab_core::predicates;
use ringlab_core::sets::{self, Side};
use ringlab_core::{CheckResult, ElemSet};

use super::{require, semiprime, yes_no, Step, Tally};
use crate::facts::{NamedSet, RingFacts};

/// Named sets plus every Lie ideal of the family.
pub(crate) fn exercised_sets(f: &RingFacts) -> Vec<NamedSet> {
    let mut v = f.named_sets();
    v.extend(f.lie_family().ideals.iter().map(|l| NamedSet {
        label: l.render(&f.ring),
        set: l.clone(),
    }));
    v
}

pub(crate) fn def(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let one = f.one_set();
    let s = predicates::x_semiprime(r, &one)?;
    let p = predicates::x_prime(r, &one)?;
    res.assert("x_semiprime(R,{1}) = reduced", s.holds == f.class.reduced, s.witness_text(r));
    res.assert("x_prime(R,{1}) = domain", p.holds == f.class.domain, p.witness_text(r));
    if !s.holds {
        res.assert("witness a has a·1·a = 0", s.replay(r, &one), s.witness_text(r));
    }
    let sr = predicates::x_semiprime(r, &f.full)?;
    let pr = predicates::x_prime(r, &f.full)?;
    res.assert("x_semiprime(R,R) = semiprime", sr.holds == f.is_semiprime(), sr.witness_text(r));
    res.assert("x_prime(R,R) = prime", pr.holds == f.is_prime(), pr.witness_text(r));
    res.compare(
        format!("reduced={}, domain={}", yes_no(f.class.reduced), yes_no(f.class.domain)),
        format!("reduced={}, domain={}", yes_no(s.holds), yes_no(p.holds)),
    );
    Ok(())
}

pub(crate) fn prop1(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime())?;
    let mut t = Tally::new("x_semiprime(X) ⇒ x_prime(X)");
    for x in exercised_sets(f) {
        if semiprime(f, &x.set)? {
            let v = predicates::x_prime(&f.ring, &x.set)?;
            t.case(v.holds, || format!("X = {}, pair {}", x.label, v.witness_text(&f.ring).unwrap_or_default()));
        }
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn thm9(f: &RingFacts, res: &mut CheckResult) -> Step {
    let e = semiprime(f, &f.e)?;
    let u = semiprime(f, &f.u)?;
    let er = semiprime(f, &f.er)?;
    res.assert("x_semiprime(E) ⇒ x_semiprime(U)", !e || u, Some("U".into()));
    res.assert("x_semiprime([E,R]) ⇒ x_semiprime(E)", !er || e, Some("E".into()));
    res.compare(
        format!("U-semiprime={}", if e { "yes" } else { "unconstrained" }),
        format!("U-semiprime={}", yes_no(u)),
    );
    Ok(())
}

pub(crate) fn cor7(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.class.has_nontrivial_idempotent)?;
    let r = &f.ring;
    let u = predicates::x_prime(r, &f.u)?;
    let n = predicates::x_prime(r, &f.n)?;
    res.assert("prime ⇔ x_prime(U)", f.is_prime() == u.holds, u.witness_text(r));
    res.assert("prime ⇔ x_prime(N)", f.is_prime() == n.holds, n.witness_text(r));
    res.compare(
        format!("U-prime={0}, N-prime={0}", yes_no(f.is_prime())),
        format!("U-prime={}, N-prime={}", yes_no(u.holds), yes_no(n.holds)),
    );
    Ok(())
}

pub(crate) fn thm10(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && f.class.has_nontrivial_idempotent)?;
    let r = &f.ring;
    let mut t = Tally::new("special-invariant noncentral X ⇒ x_prime(X)");
    for x in exercised_sets(f) {
        if sets::is_special_invariant(r, &x.set) && !sets::is_central_set(r, &x.set) {
            let v = predicates::x_prime(r, &x.set)?;
            t.case(v.holds, || format!("X = {}, pair {}", x.label, v.witness_text(r).unwrap_or_default()));
        }
    }
    if t.cases() == 0 {
        return require(false);
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn thm2(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.class.regular)?;
    let v = predicates::x_semiprime(&f.ring, &f.id)?;
    res.assert("regular ⇒ x_semiprime(Id)", v.holds, v.witness_text(&f.ring));
    Ok(())
}

/// Whether the component `eR` (identity `e`) has no zero divisors.
fn corner_is_domain(f: &RingFacts, e: ringlab_core::Elem) -> bool {
    let r = &f.ring;
    let c = predicates::corner(r, e);
    c.members()
        .iter()
        .skip(1)
        .all(|&a| c.members().iter().skip(1).all(|&b| !r.mul(a, b).is_zero()))
}

/// For each simple component `eR`: it is a domain, or some idempotent of
/// `R` has a noncentral image in it.
fn prime_images_domain_or_noncentral_idempotent(f: &RingFacts) -> bool {
    let r = &f.ring;
    f.blocks().iter().all(|&b| {
        corner_is_domain(f, b)
            || f.id.members().iter().any(|&e| !r.is_central(r.mul(b, e)))
    })
}

pub(crate) fn thm1(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    require(prime_images_domain_or_noncentral_idempotent(f))?;
    let v = predicates::x_semiprime(&f.ring, &f.id)?;
    res.assert(
        format!("hypothesis on all {} prime images ⇒ x_semiprime(Id)", f.blocks().len()),
        v.holds,
        v.witness_text(&f.ring),
    );
    Ok(())
}

pub(crate) fn example3(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    res.assert("R is regular", f.class.regular, None);
    let e = predicates::x_semiprime(r, &f.e)?;
    res.assert("x_semiprime(E)", e.holds, e.witness_text(r));
    let ann = sets::annihilator(r, &f.er, Side::Left)?;
    let expected = ElemSet::raw(r, [r.zero(), r.from_components(&[0, 1])]);
    res.assert("ℓ([E,R]) = 0 ⊕ GF(2), of size 2", ann == expected, Some(ann.render(r)));
    let v = predicates::x_semiprime(r, &f.er)?;
    let replays = !v.holds && v.replay(r, &f.er) && v.witness.is_some_and(|w| ann.contains(w.pair().0));
    res.assert("x_semiprime([E,R]) fails with a witness in ℓ([E,R])", replays, v.witness_text(r));
    res.assert(
        "each prime image is a domain or has a noncentral idempotent",
        prime_images_domain_or_noncentral_idempotent(f),
        None,
    );
    res.compare(
        "E-semiprime, not [E,R]-semiprime",
        format!(
            "{}E-semiprime, {}[E,R]-semiprime",
            if e.holds { "" } else { "not " },
            if v.holds { "" } else { "not " }
        ),
    );
    Ok(())
}
