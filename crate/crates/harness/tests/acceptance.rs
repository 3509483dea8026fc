//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};
use ringlab_core::derivations::{cor2_criterion, d_semiprime_oracle, thm21_criterion};
use ringlab_core::funcfield::checks::{exceptional_example_check, ExceptionalCase};
use ringlab_core::funcfield::{is_square, translates_invertible, FfMatrix, Poly, RatFunc, Translates};
use ringlab_core::predicates::{self, classify_ring, thm19_decompose, thm8_classify, x_prime, x_semiprime};
use ringlab_core::subset_expr::evaluate_subset;
use ringlab_core::{Elem, ElemSet, Outcome, Ring};
use ringlab_harness::checks::{thm23_elements, three_factor_lie_ideal};
use ringlab_harness::{enumerate_additive_subgroups, run_suite, Catalog, RingFacts, Suite, SubgroupFilter};

const DEF_BUDGET: Duration = Duration::from_secs(1);
const MATRIX_BUDGET: Duration = Duration::from_secs(5);
const CLASSIFIER_BUDGET: Duration = Duration::from_secs(30);
const DERIVATION_BUDGET: Duration = Duration::from_secs(30);
const FUNCFIELD_BUDGET: Duration = Duration::from_secs(5);
const SUITE_BUDGET: Duration = Duration::from_secs(120);
const RANDOM_CASES: usize = 100;
const SEED: u64 = 0x5eed;

type Line = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Line + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, t: Duration, budget: Duration) -> Result<(), String> {
    ensure(t < budget, || format!("{label} took {t:.2?}, budget {budget:?}"))
}

fn finite_catalog() -> Vec<Ring> {
    Catalog::default()
        .rings
        .iter()
        .filter_map(|s| Ring::build(s).ok())
        .collect()
}

fn spec(r: &Ring) -> String {
    r.spec().to_string()
}

/// Nonzero `a` with `a s b = 0` for every spanning `s`, by direct search.
fn brute_prime(r: &Ring, x: &ElemSet) -> bool {
    let span = x.spanning();
    r.elements()
        .skip(1)
        .all(|a| r.elements().skip(1).all(|b| span.iter().any(|&s| !r.sandwich(a, s, b).is_zero())))
}

fn brute_semiprime(r: &Ring, span: &[Elem]) -> bool {
    r.elements()
        .skip(1)
        .all(|a| span.iter().any(|&s| !r.sandwich(a, s, a).is_zero()))
}

fn has_nonzero_nilpotent(r: &Ring) -> bool {
    r.elements().skip(1).any(|a| {
        let mut p = a;
        for _ in 0..=r.cardinality().ilog2() + 1 {
            p = r.mul(p, a);
        }
        p.is_zero()
    })
}

fn has_zero_divisors(r: &Ring) -> bool {
    r.elements()
        .skip(1)
        .any(|a| r.elements().skip(1).any(|b| r.mul(a, b).is_zero()))
}

fn brute_regular(r: &Ring) -> bool {
    r.elements().all(|a| r.elements().any(|x| r.sandwich(a, x, a) == a))
}

fn brute_left_annihilator(r: &Ring, x: &ElemSet) -> Vec<Elem> {
    r.elements()
        .filter(|&a| x.members().iter().all(|&s| r.mul(a, s).is_zero()))
        .collect()
}

fn criterion_1() -> Line {
    let rings = finite_catalog();
    let mut spent = Duration::ZERO;
    for r in &rings {
        let one = ElemSet::raw(r, [r.one()]);
        let t = Instant::now();
        let s = x_semiprime(r, &one).map_err(|e| e.to_string())?;
        let p = x_prime(r, &one).map_err(|e| e.to_string())?;
        spent += t.elapsed();
        ensure(s.holds == !has_nonzero_nilpotent(r), || format!("{}: {{1}}-semiprime ≠ reduced", spec(r)))?;
        ensure(p.holds == !has_zero_divisors(r), || format!("{}: {{1}}-prime ≠ domain", spec(r)))?;
    }
    within("deciders", spent, DEF_BUDGET)?;
    Ok(format!("{} rings, {spent:.2?}", rings.len()))
}

fn criterion_2() -> Line {
    let mut passed = 0;
    let mut notes = Vec::new();
    let specs = ["M(2,GF(2))", "M(2,GF(3))", "M(2,GF(4))", "M(2,Z(4))", "M(3,GF(2))"];
    for s in specs {
        let t = Instant::now();
        let r = Ring::parse(s).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        for x in ["[E,R]", "Id"] {
            let set = evaluate_subset(&r, x).map_err(|e| e.to_string())?;
            let v = x_semiprime(&r, &set).map_err(|e| e.to_string())?;
            if !v.holds {
                bad.push(format!("{x}-semiprime fails, a = {}", v.witness_text(&r).unwrap_or_default()));
            }
        }
        let elapsed = t.elapsed();
        if elapsed >= MATRIX_BUDGET {
            bad.push(format!("took {elapsed:.2?}"));
        }
        if bad.is_empty() {
            passed += 1;
        } else {
            notes.push(format!("{s}: {}", bad.join("; ")));
        }
    }
    let summary = format!("{passed}/{} rings", specs.len());
    if notes.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", notes.join("; ")))
    }
}

fn criterion_3() -> Line {
    let r = Ring::parse("M(2,GF(2))").map_err(|e| e.to_string())?;
    let l = evaluate_subset(&r, "add{I, [[0,1],[1,0]]}").map_err(|e| e.to_string())?;
    let a = r.evaluate("[[1,1],[1,1]]").map_err(|e| e.to_string())?;
    ensure(l.len() == 4, || format!("|L| = {}", l.len()))?;
    let brackets_vanish = l.members().iter().all(|&x| l.members().iter().all(|&y| r.bracket(x, y).is_zero()));
    ensure(brackets_vanish, || "[L,L] ≠ 0".into())?;
    ensure(l.members().iter().all(|&x| r.sandwich(a, x, a).is_zero()), || "aLa ≠ 0".into())?;
    ensure(!brute_prime(&r, &l), || "direct search finds R L-prime".into())?;
    let v = x_prime(&r, &l).map_err(|e| e.to_string())?;
    ensure(!v.holds && v.witness.map(|w| w.pair()) == Some((a, a)), || {
        format!("x_prime witness {:?}", v.witness_text(&r))
    })?;
    Ok(format!("witness {}", v.witness_text(&r).unwrap_or_default()))
}

fn criterion_4() -> Line {
    let t = Instant::now();
    let mut total = 0;
    for s in ["M(2,GF(2))", "M(2,GF(3))"] {
        let r = Ring::parse(s).map_err(|e| e.to_string())?;
        let ls = enumerate_additive_subgroups(&r, SubgroupFilter::NoncentralLieIdeals).map_err(|e| e.to_string())?;
        for l in &ls {
            let c = thm8_classify(&r, l).map_err(|e| e.to_string())?;
            let direct = brute_prime(&r, l);
            ensure(c.predicted_l_prime == c.oracle_l_prime && c.oracle_l_prime == direct, || {
                format!(
                    "{s}, L = {}: predicted {}, oracle {}, direct {direct}",
                    l.render(&r),
                    c.predicted_l_prime,
                    c.oracle_l_prime
                )
            })?;
        }
        total += ls.len();
    }
    within("classifier", t.elapsed(), CLASSIFIER_BUDGET)?;
    Ok(format!("{total} noncentral Lie ideals, 0 disagreements, {:.2?}", t.elapsed()))
}

/// `a·d(x)·a = 0` for all spanning `x` forces `a = 0`, with `d = ad_b`.
fn brute_d_semiprime(r: &Ring, b: Elem, span: &[Elem]) -> bool {
    let image: Vec<Elem> = span.iter().map(|&x| r.sub(r.mul(b, x), r.mul(x, b))).collect();
    brute_semiprime(r, &image)
}

fn criterion_5() -> Line {
    let t = Instant::now();
    let mut counts = Vec::new();
    for s in ["M(2,GF(2))", "M(2,GF(3))"] {
        let r = Ring::parse(s).map_err(|e| e.to_string())?;
        let full = ElemSet::full(&r);
        let gens: Vec<Elem> = r.elements().collect();
        for b in r.elements() {
            let crit = thm21_criterion(&r, b).map_err(|e| e.to_string())?;
            let det = cor2_criterion(&r, b).map_err(|e| e.to_string())?;
            let oracle = d_semiprime_oracle(&r, b, &full).map_err(|e| e.to_string())?.holds;
            let direct = brute_d_semiprime(&r, b, &gens);
            ensure(crit == oracle && det == oracle && direct == oracle, || {
                format!("{s}, b = {}: criterion {crit}, det {det}, oracle {oracle}, direct {direct}", r.render(b))
            })?;
        }
        counts.push(format!("{} b in {s}", r.cardinality()));
    }
    within("derivation sweep", t.elapsed(), DERIVATION_BUDGET)?;
    Ok(format!("{}, 0 disagreements, {:.2?}", counts.join(", "), t.elapsed()))
}

fn criterion_6() -> Line {
    let mut notes = Vec::new();
    for s in ["M(2,GF(3))", "M(3,GF(2))"] {
        let f = RingFacts::new(Ring::parse(s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let r = &f.ring;
        ensure(f.lie_family().complete, || format!("{s}: Lie lattice not enumerated"))?;
        let ls = f.noncentral_lie_ideals();
        let bs = thm23_elements(&f);
        for &b in &bs {
            let dr = d_semiprime_oracle(r, b, &f.full).map_err(|e| e.to_string())?.holds;
            for l in &ls {
                let dl = d_semiprime_oracle(r, b, l).map_err(|e| e.to_string())?.holds;
                let direct = brute_d_semiprime(r, b, l.spanning());
                ensure(dl == dr && direct == dl, || {
                    format!("{s}, b = {}, L = {}: d(L) {dl}, d(R) {dr}, direct {direct}", r.render(b), l.render(r))
                })?;
            }
        }
        notes.push(format!("{s}: {} b × {} L", bs.len(), ls.len()));
    }
    Ok(format!("{}, 0 disagreements", notes.join(", ")))
}

fn criterion_7() -> Line {
    let mut semiprime = 0;
    for r in finite_catalog() {
        if !classify_ring(&r).map_err(|e| e.to_string())?.primeness.is_semiprime() {
            continue;
        }
        semiprime += 1;
        let br = evaluate_subset(&r, "[Id,R]").map_err(|e| e.to_string())?;
        let ann = brute_left_annihilator(&r, &br);
        let v = x_semiprime(&r, &br).map_err(|e| e.to_string())?;
        let direct = brute_semiprime(&r, br.members());
        ensure((ann.len() == 1) == v.holds && v.holds == direct, || {
            format!("{}: |ℓ([Id,R])| = {}, x_semiprime {}, direct {direct}", spec(&r), ann.len(), v.holds)
        })?;
    }
    let r = Ring::parse("prod(M(2,GF(2)),GF(2))").map_err(|e| e.to_string())?;
    let br = evaluate_subset(&r, "[Id,R]").map_err(|e| e.to_string())?;
    let ann = brute_left_annihilator(&r, &br);
    let expected = vec![r.zero(), r.evaluate("(0, 1)").map_err(|e| e.to_string())?];
    ensure(ann == expected, || format!("ℓ([Id,R]) has {} elements", ann.len()))?;
    let v = x_semiprime(&r, &br).map_err(|e| e.to_string())?;
    ensure(!v.holds && v.replay(&r, &br), || "failure direction not exhibited".into())?;
    Ok(format!(
        "{semiprime} semiprime rings; product ring ℓ = {{0, (0,1)}}, witness {}",
        v.witness_text(&r).unwrap_or_default()
    ))
}

fn suite_failures(suite: &Suite, ids: &[&str]) -> Result<(usize, Vec<String>), String> {
    let mut ran = 0;
    let mut failed = Vec::new();
    for id in ids {
        for res in suite.run_check(id).map_err(|e| e.to_string())? {
            match res.verdict {
                Outcome::Pass => ran += 1,
                Outcome::Fail => failed.push(format!(
                    "{id} on {}: {}",
                    res.ring,
                    res.failed().map(|s| s.name.as_str()).collect::<Vec<_>>().join(", ")
                )),
                Outcome::Skipped(_) => {}
            }
        }
    }
    Ok((ran, failed))
}

fn criterion_8(suite: &Suite) -> Line {
    for r in finite_catalog() {
        if r.cardinality() <= 256 {
            let f = suite.facts(&spec(&r)).ok_or("missing facts")??;
            ensure(f.lie_family().complete, || format!("{}: Lie lattice not enumerated", spec(&r)))?;
        }
    }
    let ids = ["lem5", "lem4ii", "lem16", "lem17", "lem8", "lem9", "lem13", "remark6i"];
    let (ran, failed) = suite_failures(suite, &ids)?;
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{ran} check runs, 0 violations"))
}

fn criterion_9(suite: &Suite) -> Line {
    for r in finite_catalog() {
        let e = evaluate_subset(&r, "E").map_err(|e| e.to_string())?;
        let u = evaluate_subset(&r, "U").map_err(|e| e.to_string())?;
        let es = x_semiprime(&r, &e).map_err(|e| e.to_string())?.holds;
        let us = x_semiprime(&r, &u).map_err(|e| e.to_string())?.holds;
        ensure(!es || us, || format!("{} is E-semiprime but not U-semiprime", spec(&r)))?;
    }
    let (ran, failed) = suite_failures(suite, &["thm9", "prop1"])?;
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{ran} check runs, 0 violations"))
}

/// Closure of `gens` under addition and multiplication.
fn subring(r: &Ring, gens: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; r.cardinality() as usize];
    let mut out = Vec::new();
    for &g in gens {
        if !std::mem::replace(&mut seen[g.index()], true) {
            out.push(g);
        }
    }
    let mut grown = true;
    while grown {
        grown = false;
        for i in 0..out.len() {
            for j in 0..out.len() {
                let (x, y) = (out[i], out[j]);
                for z in [r.add(x, y), r.mul(x, y)] {
                    if !std::mem::replace(&mut seen[z.index()], true) {
                        out.push(z);
                        grown = true;
                    }
                }
            }
        }
    }
    out
}

fn criterion_10() -> Line {
    let r = Ring::parse("prod(GF(2),M(2,GF(2)),M(2,GF(3)))").map_err(|e| e.to_string())?;
    let l = three_factor_lie_ideal(&r).map_err(|e| e.to_string())?;
    let d = thm19_decompose(&r, &l).map_err(|e| e.to_string())?.ok_or("no decomposition")?;
    let expected = ["(1, 0, 0)", "(0, I, 0)", "(0, 0, I)"]
        .map(|s| r.evaluate(s).map_err(|e| e.to_string()));
    let [e1, e2, e3] = expected;
    let (e1, e2, e3) = (e1?, e2?, e3?);
    ensure((d.e1, d.e2, d.e3) == (e1, e2, e3), || {
        format!("e = ({}, {}, {})", r.render(d.e1), r.render(d.e2), r.render(d.e3))
    })?;
    ensure(d.properties_verified == [true; 3], || format!("{:?}", d.properties_verified))?;
    let es = [e1, e2, e3];
    ensure(r.add(r.add(e1, e2), e3) == r.one(), || "e1+e2+e3 ≠ 1".into())?;
    for (i, &x) in es.iter().enumerate() {
        ensure(r.is_central(x) && r.mul(x, x) == x, || format!("e{} not a central idempotent", i + 1))?;
        for &y in &es[i + 1..] {
            ensure(r.mul(x, y).is_zero(), || "not orthogonal".into())?;
        }
    }
    ensure(l.members().iter().all(|&x| r.is_central(r.mul(e1, x))), || "(i) e1L ⊄ Z".into())?;
    let sub = subring(&r, l.members());
    ensure(sub.iter().all(|&x| r.is_central(r.mul(e2, r.mul(x, x)))), || "(ii) e2x² ∉ Z".into())?;
    let e3l: Vec<Elem> = l.members().iter().map(|&x| r.mul(e3, x)).collect();
    let corner: Vec<Elem> = r.elements().filter(|&x| r.mul(e3, x) == x).collect();
    let iii = corner
        .iter()
        .skip(1)
        .all(|&a| e3l.iter().any(|&s| !r.sandwich(a, s, a).is_zero()));
    ensure(iii, || "(iii) e3R not e3L-semiprime".into())?;
    Ok(format!("|L| = {}, subring of L has {} elements", l.len(), sub.len()))
}

fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
    let num = Poly::from_bits(rng.gen_range(1..1u64 << 10));
    let den = Poly::from_bits(rng.gen_range(1..1u64 << 8));
    RatFunc::new(num, den).expect("nonzero denominator")
}

fn criterion_11() -> Line {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let tee = RatFunc::t();
    for _ in 0..RANDOM_CASES {
        let g = random_ratfunc(&mut rng);
        let sq = g.square();
        let non = tee.mul(&sq);
        ensure(is_square(&sq), || format!("({g})² reported non-square"))?;
        ensure(!is_square(&non), || format!("t·({g})² reported square"))?;
    }
    for case in [ExceptionalCase::Remark10ii, ExceptionalCase::Example4] {
        let res = exceptional_example_check(case);
        ensure(res.verdict == Outcome::Pass, || format!("{} {}", case.id(), res.verdict))?;
    }
    let one = RatFunc::one();
    let a = FfMatrix::from_rows(vec![vec![one.clone(), one.clone()], vec![tee, one]]).map_err(|e| e.to_string())?;
    let tr = translates_invertible(&a).map_err(|e| e.to_string())?;
    ensure(tr == Translates::Yes, || format!("translates_invertible = {tr:?}"))?;
    within("funcfield layer", t.elapsed(), FUNCFIELD_BUDGET)?;
    Ok(format!("{RANDOM_CASES} squares, {RANDOM_CASES} non-squares, {:.2?}", t.elapsed()))
}

fn criterion_12() -> Line {
    let mut regular = 0;
    for r in finite_catalog() {
        let class = classify_ring(&r).map_err(|e| e.to_string())?;
        ensure(class.regular == brute_regular(&r), || format!("{}: regularity misclassified", spec(&r)))?;
        if class.regular {
            regular += 1;
            let id = evaluate_subset(&r, "Id").map_err(|e| e.to_string())?;
            let v = x_semiprime(&r, &id).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("{}: Id-semiprime fails", spec(&r)))?;
        }
    }
    let ut = Ring::parse("UT(2,GF(2))").map_err(|e| e.to_string())?;
    let class = classify_ring(&ut).map_err(|e| e.to_string())?;
    ensure(!class.regular && !class.primeness.is_semiprime(), || "UT(2,GF(2)) misclassified".into())?;
    ensure(!predicates::is_semiprime(&ut) && !brute_regular(&ut), || "UT(2,GF(2)) oracle".into())?;
    Ok(format!("{regular} regular rings Id-semiprime; UT(2,GF(2)) neither regular nor semiprime"))
}

fn criterion_13() -> Line {
    let t = Instant::now();
    let first = run_suite(Catalog::default(), true).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let second = run_suite(Catalog::default(), true).map_err(|e| e.to_string())?;
    ensure(first.passed(), || "full suite has failures".into())?;
    ensure(first.to_stable_json() == second.to_stable_json(), || "reports differ".into())?;
    within("full suite", elapsed, SUITE_BUDGET)?;
    let c = first.counts();
    Ok(format!(
        "{} pass, {} skipped, identical JSON, {elapsed:.2?}",
        c.pass, c.skipped
    ))
}

fn main() {
    let suite = Suite::new(Catalog::default()).expect("default catalog builds");
    suite.prepare();
    let criteria: Vec<Criterion> = vec![
        ("{1}-semiprime = reduced, {1}-prime = domain", Box::new(criterion_1)),
        ("[E,R]- and Id-semiprime matrix rings", Box::new(criterion_2)),
        ("M(2,GF(2)) with L = span{I, swap}", Box::new(criterion_3)),
        ("noncentral Lie ideal classifier", Box::new(criterion_4)),
        ("inner derivation criteria against oracle", Box::new(criterion_5)),
        ("d(L) and d(R) verdicts agree", Box::new(criterion_6)),
        ("ℓ([Id,R]) = 0 ⇔ [Id,R]-semiprime", Box::new(criterion_7)),
        ("Lie ideal inclusions and identities", Box::new(|| criterion_8(&suite))),
        ("E-semiprime ⇒ U-semiprime; prime X-semiprime ⇒ X-prime", Box::new(|| criterion_9(&suite))),
        ("three central idempotent decomposition", Box::new(criterion_10)),
        ("rational function field layer", Box::new(criterion_11)),
        ("regular rings are Id-semiprime", Box::new(criterion_12)),
        ("deterministic full suite", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
