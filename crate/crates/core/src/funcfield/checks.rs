//! The characteristic-2 examples where a commutative Lie ideal `L` with
//! `dim LC = 2` does or does not make `M_2(F)` L-prime, and the derivation
//! example built on it.

use std::time::Instant;

use super::{translates_invertible, FfMatrix, RatFunc, Translates};
use crate::check::CheckResult;
use crate::error::{Result, RingError};
use crate::predicates::{self, Witness};
use crate::ring::{InfRing, Ring};
use crate::sets;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalCase {
    /// `M(2,GF(2))`, `L = {[[α,β],[β,α]]}`: not L-prime.
    Remark10i,
    /// `M(2,FF(2))`, `L = {[[α,β],[βt,α]]}`: L-prime by the criterion.
    Remark10ii,
    /// `M(2,FF(2))`, `d = ad_b` with `b = [[1,1],[t,1]]`.
    Example4,
}

impl ExceptionalCase {
    pub fn id(self) -> &'static str {
        match self {
            ExceptionalCase::Remark10i => "remark10i",
            ExceptionalCase::Remark10ii => "remark10ii",
            ExceptionalCase::Example4 => "example4",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        match id {
            "remark10i" => Ok(ExceptionalCase::Remark10i),
            "remark10ii" => Ok(ExceptionalCase::Remark10ii),
            "example4" => Ok(ExceptionalCase::Example4),
            _ => Err(RingError::UnknownName(id.to_string())),
        }
    }

    pub fn ring_spec(self) -> &'static str {
        match self {
            ExceptionalCase::Remark10i => "M(2,GF(2))",
            _ => "M(2,FF(2))",
        }
    }
}

pub fn exceptional_example_check(case: ExceptionalCase) -> CheckResult {
    let start = Instant::now();
    let mut res = CheckResult::new(case.id(), case.ring_spec());
    let outcome = match case {
        ExceptionalCase::Remark10i => remark10i(&mut res),
        ExceptionalCase::Remark10ii => remark10ii(&mut res),
        ExceptionalCase::Example4 => example4(&mut res),
    };
    if let Err(e) = outcome {
        res.assert("evaluation", false, Some(e.to_string()));
    }
    res.ms = start.elapsed().as_millis() as u64;
    res
}

fn remark10i(res: &mut CheckResult) -> Result<()> {
    let r = Ring::parse("M(2,GF(2))")?;
    let swap = r.evaluate("[[0,1],[1,0]]")?;
    let a = r.evaluate("[[1,1],[1,1]]")?;
    let l = sets::additive_closure(&r, &[r.one(), swap]);
    let a_text = Some(r.render(a));

    res.assert("L is a Lie ideal", sets::is_lie_ideal(&r, &l), Some(l.render(&r)));
    res.assert("L is noncentral", !sets::is_central_set(&r, &l), Some(r.render(swap)));
    res.assert("[L,L] = 0", sets::bracket_set(&r, &l, &l)?.is_zero(), None);
    let al = sets::additive_closure(
        &r,
        &r.additive_generators()
            .iter()
            .map(|&x| r.bracket(a, x))
            .collect::<Vec<_>>(),
    );
    res.assert("L = [a,R]", al == l, a_text.clone());
    res.assert("a in L and a^2 = 0", l.contains(a) && r.mul(a, a).is_zero(), a_text.clone());
    res.assert(
        "aLa = 0",
        l.members().iter().all(|&x| r.sandwich(a, x, a).is_zero()),
        a_text.clone(),
    );
    let v = predicates::x_prime(&r, &l)?;
    res.assert(
        "x_prime(R,L) fails with witness (a,a)",
        !v.holds && v.witness == Some(Witness::Pair(a, a)) && v.replay(&r, &l),
        v.witness_text(&r),
    );
    let d = predicates::center_dimension(&r, &l)?;
    res.assert("dim LC = 2", d.dim_lc_over_c == 2, None);
    res.compare("not L-prime", if v.holds { "L-prime" } else { "not L-prime" });
    Ok(())
}

fn ff_ring() -> Result<InfRing> {
    InfRing::build(&"M(2,FF(2))".parse()?)
}

fn mat(r: &InfRing, src: &str) -> Result<FfMatrix> {
    r.as_matrix(&r.evaluate(src)?)
}

/// Matrix units e11, e12, e21, e22, an F-basis of `M_2(F)`.
fn units(r: &InfRing) -> Result<Vec<FfMatrix>> {
    ["e(1,1)", "e(1,2)", "e(2,1)", "e(2,2)"]
        .iter()
        .map(|s| mat(r, s))
        .collect()
}

/// Coordinates `(α, β)` of `m` in the family `[[α,β],[βη,α]]`, if it belongs to it.
fn l_coords(m: &FfMatrix, eta: &RatFunc) -> Option<(RatFunc, RatFunc)> {
    let (alpha, beta) = (m.get(0, 0).clone(), m.get(0, 1).clone());
    (m.get(1, 1) == &alpha && m.get(1, 0) == &beta.mul(eta)).then_some((alpha, beta))
}

/// Dimension over F of the span of a family given by `(α, β)` coordinates.
fn rank2(coords: &[(RatFunc, RatFunc)]) -> usize {
    if coords.iter().all(|(a, b)| a.is_zero() && b.is_zero()) {
        return 0;
    }
    let independent = coords.iter().any(|(a1, b1)| {
        coords
            .iter()
            .any(|(a2, b2)| !a1.mul(b2).sub(&a2.mul(b1)).is_zero())
    });
    if independent {
        2
    } else {
        1
    }
}

fn sample_betas() -> Vec<RatFunc> {
    let t = RatFunc::t();
    let t1 = t.add(&RatFunc::one());
    vec![
        RatFunc::zero(),
        RatFunc::one(),
        t.clone(),
        t.inv().expect("t is nonzero"),
        t1.clone(),
        t.square(),
        t.mul(&t1),
        t1.inv().expect("t+1 is nonzero"),
        t.square().add(&t).add(&RatFunc::one()),
        t.div(&t1).expect("t+1 is nonzero"),
    ]
}

fn remark10ii(res: &mut CheckResult) -> Result<()> {
    let r = ff_ring()?;
    let eta = RatFunc::t();
    res.assert("eta = t is not a square", !eta.is_square(), Some("t".into()));
    let id = FfMatrix::identity(2);
    let j = mat(&r, "[[0,1],[t,0]]")?;
    let a = mat(&r, "[[1,1],[t,1]]")?;
    let span = [id.clone(), j.clone()];
    let basis = units(&r)?;

    res.assert(
        "[L,L] = 0 on the spanning set",
        span.iter().all(|x| span.iter().all(|y| x.bracket(y).is_zero())),
        None,
    );
    res.assert(
        "[L,R] ⊆ L on spanning sets",
        span.iter()
            .all(|x| basis.iter().all(|e| l_coords(&x.bracket(e), &eta).is_some())),
        None,
    );
    res.assert(
        "L is noncentral",
        basis.iter().any(|e| !j.bracket(e).is_zero()),
        Some(j.to_string()),
    );
    res.assert("a in L", l_coords(&a, &eta).is_some(), Some(a.to_string()));
    let images: Option<Vec<_>> = basis.iter().map(|e| l_coords(&a.bracket(e), &eta)).collect();
    res.assert(
        "L = [a,R]",
        images.as_deref().is_some_and(|c| rank2(c) == 2),
        Some(a.to_string()),
    );
    let span_coords: Vec<_> = span.iter().filter_map(|x| l_coords(x, &eta)).collect();
    res.assert("dim LC = 2", rank2(&span_coords) == 2, None);
    let verdict = translates_invertible(&a)?;
    res.assert(
        "a + beta invertible for every beta",
        verdict == Translates::Yes,
        Some(a.to_string()),
    );
    res.assert(
        "det(a + beta) nonzero on sampled beta",
        sample_betas()
            .iter()
            .all(|b| !a.add(&FfMatrix::scalar(2, b)).det().is_zero()),
        None,
    );
    res.compare(
        "L-prime",
        if verdict == Translates::Yes { "L-prime" } else { "undetermined" },
    );
    Ok(())
}

fn example4(res: &mut CheckResult) -> Result<()> {
    let r = ff_ring()?;
    let one = RatFunc::one();
    let id = FfMatrix::identity(2);
    let swap = mat(&r, "[[0,1],[1,0]]")?;
    let a = mat(&r, "[[1,1],[1,1]]")?;
    let b = mat(&r, "[[1,1],[t,1]]")?;
    let span = [id, swap.clone()];

    let d_span: Vec<FfMatrix> = span.iter().map(|x| b.bracket(x)).collect();
    res.assert(
        "d(L) ⊆ L on the spanning set",
        d_span.iter().all(|m| l_coords(m, &one).is_some()),
        Some(b.to_string()),
    );
    let t1 = RatFunc::t().add(&one);
    res.assert(
        "[b, swap] = (1+t)I",
        b.bracket(&swap) == FfMatrix::scalar(2, &t1),
        None,
    );
    let ala = span.iter().all(|x| a.mul(x).mul(&a).is_zero());
    res.assert("aLa = 0", ala && !a.is_zero(), Some(a.to_string()));
    res.assert(
        "a d(L) a = 0",
        d_span.iter().all(|x| a.mul(x).mul(&a).is_zero()),
        Some(a.to_string()),
    );
    let verdict = translates_invertible(&b)?;
    res.assert(
        "b + beta invertible for every beta",
        verdict == Translates::Yes,
        Some(b.to_string()),
    );
    res.compare(
        "not d(L)-semiprime; d(R)-semiprime",
        format!(
            "{}; {}",
            if ala { "not d(L)-semiprime" } else { "d(L) undetermined" },
            if verdict == Translates::Yes { "d(R)-semiprime" } else { "d(R) undetermined" }
        ),
    );
    Ok(())
}
