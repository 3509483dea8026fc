use std::collections::HashSet;

use ringlab_core::predicates;
use ringlab_core::sets::{self, ClosureMode, Side};
use ringlab_core::{CheckResult, Elem, ElemSet, Result, Ring, RingSpec};

use super::{prime, require, semiprime, yes_no, Step, Tally};
use crate::facts::RingFacts;

fn span_of(ring: &Ring, parts: &[&ElemSet]) -> ElemSet {
    let seed: Vec<Elem> = parts.iter().flat_map(|s| s.spanning().iter().copied()).collect();
    sets::additive_closure(ring, &seed)
}

/// The ideal generated by a set; `{0}` for `{0}`.
fn ideal_of(ring: &Ring, s: &ElemSet) -> Result<ElemSet> {
    if s.is_zero() {
        return Ok(ElemSet::zero(ring));
    }
    sets::close_set(ring, s, ClosureMode::Ideal)
}

fn bracket_r(f: &RingFacts, l: &ElemSet) -> Result<ElemSet> {
    sets::bracket_set(&f.ring, l, &f.full)
}

fn left_ann_zero(f: &RingFacts, x: &ElemSet) -> Result<bool> {
    Ok(sets::annihilator(&f.ring, x, Side::Left)?.is_zero())
}

fn family_name(f: &RingFacts, what: &str) -> String {
    format!("{what} over {}", f.lie_family().describe())
}

pub(crate) fn lem16(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    res.assert("E is a Lie ideal", sets::is_lie_ideal(r, &f.e), Some("E".into()));
    let u_plus = sets::additive_closure(r, f.u.members());
    res.assert("[E,R] ⊆ U^+", f.er.is_subset(&u_plus), Some("[E,R]".into()));
    Ok(())
}

pub(crate) fn lem17(f: &RingFacts, res: &mut CheckResult) -> Step {
    let ee = sets::bracket_set(&f.ring, &f.e, &f.e)?;
    res.assert("[E,R] = [E,E]", ee == f.er, Some(f.er.render(&f.ring)));
    Ok(())
}

pub(crate) fn lem5(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let mut t = Tally::new(family_name(f, "I([L,L]) ⊆ L + L^2"));
    for l in &f.lie_family().ideals {
        let ill = ideal_of(r, &sets::bracket_set(r, l, l)?)?;
        let l2 = sets::power_set(r, l, 2)?;
        t.case(ill.is_subset(&span_of(r, &[l, &l2])), || l.render(r));
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn lem4ii(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let mut outer = Tally::new(family_name(f, "[L,R] ⊆ L"));
    let mut inner = Tally::new(family_name(f, "[I([L,L]),R] ⊆ [L,R]"));
    for l in &f.lie_family().ideals {
        let lr = bracket_r(f, l)?;
        outer.case(lr.is_subset(l), || l.render(r));
        let ill = ideal_of(r, &sets::bracket_set(r, l, l)?)?;
        inner.case(bracket_r(f, &ill)?.is_subset(&lr), || l.render(r));
    }
    outer.finish(res);
    inner.finish(res);
    Ok(())
}

/// Distinct nonzero principal ideals; for a finite ring every nonzero
/// ideal contains one, and on the simple rings these are all the ideals.
fn nonzero_ideals(f: &RingFacts) -> Result<Vec<ElemSet>> {
    let r = &f.ring;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in r.elements().skip(1) {
        let i = sets::closure(r, &[x], ClosureMode::Ideal)?;
        if seen.insert(i.mask().clone()) {
            out.push(i);
        }
    }
    Ok(out)
}

pub(crate) fn lem13(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && !f.class.commutative)?;
    let r = &f.ring;
    let ideals = nonzero_ideals(f)?;
    let mut t = Tally::new(format!("[[I,J],[I,J]] ≠ 0 over {} nonzero ideals", ideals.len()));
    for i in &ideals {
        for j in &ideals {
            let k = sets::bracket_set(r, i, j)?;
            t.case(!sets::bracket_set(r, &k, &k)?.is_zero(), || {
                format!("I = {}, J = {}", i.render(r), j.render(r))
            });
        }
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn thm11(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && !f.class.commutative)?;
    let r = &f.ring;
    let ideals = nonzero_ideals(f)?;
    let mut t = Tally::new(format!("x_prime([I,J]) over {} nonzero ideals", ideals.len()));
    for i in &ideals {
        for j in &ideals {
            let k = sets::bracket_set(r, i, j)?;
            t.case(prime(f, &k)?, || format!("[I,J] = {}", k.render(r)));
        }
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn thm3(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let mut i = Tally::new(family_name(f, "subring generated by L is R ⇒ x_semiprime(L)"));
    let mut ii = Tally::new(family_name(f, "prime and [L,L] ≠ 0 ⇒ x_prime(L)"));
    for l in &f.lie_family().ideals {
        let c = predicates::thm3_criterion(r, l)?;
        if c.subring_closure_is_r {
            i.case(semiprime(f, l)?, || l.render(r));
        }
        if f.is_prime() && c.bracket_ll_nonzero {
            ii.case(prime(f, l)?, || l.render(r));
        }
    }
    i.finish(res);
    if f.is_prime() {
        ii.finish(res);
    }
    Ok(())
}

pub(crate) fn thm5(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let rr2 = sets::power_set(r, &f.rr, 2)?;
    let mut brackets = Tally::new(family_name(f, "I([L,L]) = R ⇒ [L,R] = [R,R] and [R,R]^2 = R"));
    let mut semi = Tally::new(family_name(f, "I([L,L]) = R, R semiprime ⇒ x_semiprime([L,R])"));
    for l in &f.lie_family().ideals {
        let ill = ideal_of(r, &sets::bracket_set(r, l, l)?)?;
        if ill.len() != f.full.len() {
            continue;
        }
        let lr = bracket_r(f, l)?;
        brackets.case(lr == f.rr && rr2 == f.full, || l.render(r));
        if f.is_semiprime() {
            semi.case(semiprime(f, &lr)?, || lr.render(r));
        }
    }
    require(brackets.cases() > 0)?;
    brackets.finish(res);
    if f.is_semiprime() {
        semi.finish(res);
    }
    Ok(())
}

pub(crate) fn remark6i(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    require(matches!(r.field_matrix(), Some((2, _))) && r.characteristic() == 2)?;
    let l = &f.rr;
    let ll = sets::bracket_set(r, l, l)?;
    res.assert("[L,L] ≠ 0", !ll.is_zero(), Some(ll.render(r)));
    res.assert("[L,L] ⊆ Z(R)", ll.is_subset(&f.z), Some(ll.render(r)));
    res.assert("I([L,L]) = R", ideal_of(r, &ll)?.len() == f.full.len(), None);
    res.assert("R is not a domain", !f.class.domain, None);
    let v = predicates::x_semiprime(r, &ll)?;
    res.assert(
        "x_semiprime([L,L]) fails with a replayable witness",
        !v.holds && v.replay(r, &ll),
        v.witness_text(r),
    );
    res.compare("not [L,L]-semiprime", if v.holds { "[L,L]-semiprime" } else { "not [L,L]-semiprime" });
    Ok(())
}

pub(crate) fn thm7(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && f.class.has_nontrivial_idempotent)?;
    let v = predicates::x_prime(&f.ring, &f.er)?;
    res.assert("x_prime([E,R])", v.holds, v.witness_text(&f.ring));
    Ok(())
}

pub(crate) fn cor5(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime())?;
    let e = semiprime(f, &f.e)?;
    let er = prime(f, &f.er)?;
    res.assert("x_semiprime(E) ⇒ domain or x_prime([E,R])", !e || f.class.domain || er, None);
    res.compare(
        format!("E-semiprime={}", yes_no(e)),
        format!("domain={}, [E,R]-prime={}", yes_no(f.class.domain), yes_no(er)),
    );
    Ok(())
}

/// `M(n, A)` with `n > 1` and `A` semiprime.
fn matrix_over_semiprime(f: &RingFacts) -> Result<bool> {
    let RingSpec::Matrix(n, base) = f.ring.spec() else {
        return Ok(false);
    };
    if *n < 2 {
        return Ok(false);
    }
    Ok(predicates::is_semiprime(&Ring::build(base)?))
}

pub(crate) fn thm4(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(matrix_over_semiprime(f)?)?;
    let v = predicates::x_semiprime(&f.ring, &f.er)?;
    res.assert("x_semiprime([E,R])", v.holds, v.witness_text(&f.ring));
    Ok(())
}

pub(crate) fn cor6(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(matrix_over_semiprime(f)?)?;
    let v = predicates::x_semiprime(&f.ring, &f.id)?;
    res.assert("x_semiprime(Id)", v.holds, v.witness_text(&f.ring));
    Ok(())
}

pub(crate) fn thm8(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && !f.class.domain)?;
    let r = &f.ring;
    let ls = f.noncentral_lie_ideals();
    require(!ls.is_empty())?;
    let mut t = Tally::new("predicted L-prime = x_prime(L) over all noncentral Lie ideals");
    let (mut predicted, mut observed) = (0, 0);
    for l in &ls {
        let c = predicates::thm8_classify(r, l)?;
        predicted += c.predicted_l_prime as usize;
        observed += c.oracle_l_prime as usize;
        t.case(c.predicted_l_prime == c.oracle_l_prime, || {
            format!("L = {}, oracle witness {}", l.render(r), c.oracle.witness_text(r).unwrap_or_default())
        });
    }
    t.finish(res);
    res.compare(
        format!("{predicted}/{} L-prime", ls.len()),
        format!("{observed}/{} L-prime", ls.len()),
    );
    Ok(())
}

pub(crate) fn cor10(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && f.ring.characteristic() != 2)?;
    let ls = f.noncentral_lie_ideals();
    require(!ls.is_empty())?;
    let mut t = Tally::new("x_semiprime(L) over all noncentral Lie ideals");
    for l in ls {
        t.case(semiprime(f, l)?, || l.render(&f.ring));
    }
    t.finish(res);
    Ok(())
}

/// `x_semiprime(L) = x_semiprime([L,R])` over `ls`.
fn l_vs_lr<'a>(f: &RingFacts, name: String, ls: impl IntoIterator<Item = &'a ElemSet>) -> Result<Tally> {
    let mut t = Tally::new(name);
    for l in ls {
        let lr = bracket_r(f, l)?;
        t.case(semiprime(f, l)? == semiprime(f, &lr)?, || l.render(&f.ring));
    }
    Ok(t)
}

pub(crate) fn cor12(f: &RingFacts, res: &mut CheckResult) -> Step {
    let mut ls = Vec::new();
    for l in &f.lie_family().ideals {
        if left_ann_zero(f, &bracket_r(f, l)?)? {
            ls.push(l);
        }
    }
    require(!ls.is_empty())?;
    let name = family_name(f, "ℓ([L,R]) = 0 ⇒ (x_semiprime(L) ⇔ x_semiprime([L,R]))");
    l_vs_lr(f, name, ls)?.finish(res);
    Ok(())
}

pub(crate) fn cor13(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime())?;
    let ls = f.noncentral_lie_ideals();
    require(!ls.is_empty())?;
    let name = "x_semiprime(L) ⇔ x_semiprime([L,R]) over all noncentral Lie ideals".to_string();
    l_vs_lr(f, name, ls)?.finish(res);
    Ok(())
}

pub(crate) fn cor14(f: &RingFacts, res: &mut CheckResult) -> Step {
    // A finite ring is 2-torsion free iff its order is odd.
    require(f.is_semiprime() && f.card() % 2 == 1)?;
    let mut t = Tally::new(family_name(f, "x_semiprime([L,R]) ⇔ ℓ([L,R]) = 0"));
    for l in &f.lie_family().ideals {
        let lr = bracket_r(f, l)?;
        t.case(semiprime(f, &lr)? == left_ann_zero(f, &lr)?, || l.render(&f.ring));
    }
    t.finish(res);
    Ok(())
}

pub(crate) fn lem8(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let mut i = Tally::new(family_name(f, "aLa = 0 ⇒ [a,L] = 0"));
    let mut ii = Tally::new(family_name(f, "ℓ([L,R]) = 0 and a[L,R]a = 0 ⇒ aLa = 0"));
    let kills = |a: Elem, s: &ElemSet| s.spanning().iter().all(|&x| r.sandwich(a, x, a).is_zero());
    for l in &f.lie_family().ideals {
        let lr = bracket_r(f, l)?;
        let ann_zero = left_ann_zero(f, &lr)?;
        for a in r.elements() {
            let ala = kills(a, l);
            if ala {
                let ok = l.spanning().iter().all(|&x| r.bracket(a, x).is_zero());
                i.case(ok, || format!("L = {}, a = {}", l.render(r), r.render(a)));
            }
            if ann_zero && kills(a, &lr) {
                ii.case(ala, || format!("L = {}, a = {}", l.render(r), r.render(a)));
            }
        }
    }
    i.finish(res);
    ii.finish(res);
    Ok(())
}

pub(crate) fn lem9(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let named: Vec<(&str, &ElemSet)> = vec![
        ("Id", &f.id),
        ("U", &f.u),
        ("E", &f.e),
        ("[E,R]", &f.er),
        ("Z", &f.z),
        ("R", &f.full),
    ];
    let verdicts: Vec<bool> = named
        .iter()
        .map(|(_, s)| semiprime(f, s))
        .collect::<Result<_>>()?;
    let mut products = Tally::new("x_semiprime(X), x_semiprime(Y) ⇒ x_semiprime(XY) over Id, U, E, [E,R], Z, R");
    for (i, (xn, x)) in named.iter().enumerate() {
        for (j, (yn, y)) in named.iter().enumerate() {
            if verdicts[i] && verdicts[j] {
                let xy = sets::product_set(r, x, y)?;
                products.case(semiprime(f, &xy)?, || format!("{xn}*{yn}"));
            }
        }
    }
    let mut powers = Tally::new(family_name(f, "x_semiprime(X) ⇒ x_semiprime(X^n), n = 2, 3, for named X and"));
    let lattice = f.lie_family().ideals.iter().map(|l| (l.render(r), l));
    let named_owned = named.iter().map(|(n, s)| (n.to_string(), *s));
    for (label, x) in named_owned.chain(lattice) {
        if !semiprime(f, x)? {
            continue;
        }
        for n in [2, 3] {
            let xn = sets::power_set(r, x, n)?;
            powers.case(semiprime(f, &xn)?, || format!("pow({label},{n})"));
        }
    }
    products.finish(res);
    powers.finish(res);
    Ok(())
}

pub(crate) fn thm13(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let central = ElemSet::raw(r, predicates::central_idempotents(r));
    let trivial = ElemSet::raw(r, [r.zero(), r.one()]);
    let (mut predicted, mut observed) = (Vec::new(), Vec::new());
    for (label, b) in [("Id", &f.id), ("central idempotents", &central), ("{0,1}", &trivial)] {
        let b_plus = sets::additive_closure(r, b.members());
        if !sets::is_lie_ideal(r, &b_plus) {
            continue;
        }
        let br = sets::bracket_set(r, b, &f.full)?;
        let ann = left_ann_zero(f, &br)?;
        let v = predicates::x_semiprime(r, &br)?;
        res.assert(
            format!("B = {label}: ℓ([B,R]) = 0 ⇔ x_semiprime([B,R])"),
            ann == v.holds,
            v.witness_text(r),
        );
        predicted.push(format!("{label}: {}", yes_no(ann)));
        observed.push(format!("{label}: {}", yes_no(v.holds)));
    }
    res.compare(predicted.join(", "), observed.join(", "));
    Ok(())
}

pub(crate) fn thm16(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let ann = sets::annihilator(r, &f.er, Side::Left)?;
    let v = predicates::x_semiprime(r, &f.er)?;
    res.assert(
        "ℓ([E,R]) = 0 ⇔ x_semiprime([E,R])",
        ann.is_zero() == v.holds,
        Some(format!("ℓ([E,R]) = {}", ann.render(r))),
    );
    if !v.holds {
        let w = v.witness.map(|w| w.pair().0);
        res.assert(
            "the semiprimeness witness lies in ℓ([E,R])",
            v.replay(r, &f.er) && w.is_some_and(|a| ann.contains(a)),
            v.witness_text(r),
        );
    }
    res.compare(
        if ann.is_zero() { "[E,R]-semiprime" } else { "not [E,R]-semiprime" },
        if v.holds { "[E,R]-semiprime" } else { "not [E,R]-semiprime" },
    );
    Ok(())
}

const THREE_FACTORS: &str = "prod(GF(2),M(2,GF(2)),M(2,GF(3)))";

pub(crate) fn thm19(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let mut t = Tally::new(family_name(f, "decomposition found with (i)-(iii) verified"));
    for l in &f.lie_family().ideals {
        let d = predicates::thm19_decompose(r, l)?;
        t.case(d.is_some_and(|d| d.properties_verified.iter().all(|&p| p)), || l.render(r));
    }
    t.finish(res);
    if f.spec == THREE_FACTORS.parse::<RingSpec>().map(|s| s.to_string()).unwrap_or_default() {
        three_factor_instance(f, res)?;
    }
    Ok(())
}

/// `L = 0 × {[[α,β],[β,α]]} × sl_2` in `GF(2) × M_2(GF(2)) × M_2(GF(3))`.
pub fn three_factor_lie_ideal(r: &Ring) -> Result<ElemSet> {
    let seed = [
        "(0, I, 0)",
        "(0, [[0,1],[1,0]], 0)",
        "(0, 0, e(1,2))",
        "(0, 0, e(2,1))",
        "(0, 0, [[1,0],[0,2]])",
    ]
    .iter()
    .map(|s| r.evaluate(s))
    .collect::<Result<Vec<_>>>()?;
    Ok(sets::additive_closure(r, &seed))
}

fn three_factor_instance(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    let l = three_factor_lie_ideal(r)?;
    res.assert("0 × L × sl_2 is a Lie ideal", sets::is_lie_ideal(r, &l), Some(l.render(r)));
    let d = predicates::thm19_decompose(r, &l)?;
    let expected = ["(1, 0, 0)", "(0, I, 0)", "(0, 0, I)"]
        .iter()
        .map(|s| r.evaluate(s))
        .collect::<Result<Vec<_>>>()?;
    let got = d.as_ref().map(|d| vec![d.e1, d.e2, d.e3]);
    res.assert(
        "e = ((1,0,0),(0,1,0),(0,0,1)) with (i)-(iii) verified",
        got.as_ref() == Some(&expected) && d.is_some_and(|d| d.properties_verified.iter().all(|&p| p)),
        got.map(|g| g.iter().map(|&e| r.render(e)).collect::<Vec<_>>().join("; ")),
    );
    Ok(())
}

pub(crate) fn thm22(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let ci = predicates::central_idempotents(r);
    let one = r.one();
    let torsion_free = f.card() % 2 == 1;
    let mut exists = Tally::new(family_name(f, "ℓ([L,R]) = 0 ⇒ a central idempotent e as stated exists"));
    let mut tail = Tally::new(family_name(f, "2-torsion free and ℓ([L,R]) = 0 ⇒ x_semiprime(L)"));
    for l in &f.lie_family().ideals {
        if !left_ann_zero(f, &bracket_r(f, l)?)? {
            continue;
        }
        let l_sub = sets::closure(r, &[l.spanning(), &[Elem::ZERO]].concat(), ClosureMode::Subring)?;
        let found = ci.iter().copied().find(|&e| {
            let squares = l_sub
                .members()
                .iter()
                .all(|&x| r.is_central(r.mul(e, r.mul(x, x))));
            let g = r.sub(one, e);
            let gl: Vec<Elem> = l.spanning().iter().map(|&x| r.mul(g, x)).collect();
            let semi = r
                .elements()
                .skip(1)
                .filter(|&a| r.mul(g, a) == a)
                .all(|a| gl.iter().any(|&x| !r.sandwich(a, x, a).is_zero()));
            squares && semi
        });
        exists.case(found.is_some(), || l.render(r));
        if torsion_free {
            tail.case(semiprime(f, l)? && found == Some(Elem::ZERO), || l.render(r));
        }
    }
    require(exists.cases() > 0)?;
    exists.finish(res);
    if torsion_free {
        tail.finish(res);
    }
    Ok(())
}

pub(crate) fn example6(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_semiprime())?;
    let r = &f.ring;
    let mut seen = HashSet::new();
    let mut rhos = Vec::new();
    for x in r.elements() {
        let rho = sets::closure(r, &[x], ClosureMode::RightIdeal)?;
        if seen.insert(rho.mask().clone()) {
            rhos.push(rho);
        }
    }
    let mut t = Tally::new(format!("x_semiprime(ρ^n) ⇔ ℓ(ρ) = 0, n ≤ 3, over {} right ideals xR", rhos.len()));
    for rho in &rhos {
        let ann = left_ann_zero(f, rho)?;
        for n in 1..=3 {
            let p = sets::power_set(r, rho, n)?;
            t.case(semiprime(f, &p)? == ann, || format!("pow({},{n})", rho.render(r)));
        }
    }
    t.finish(res);
    Ok(())
}
