use rayon::prelude::*;
use ringlab_core::derivations::{self, InnerDerivation};
use ringlab_core::{CheckResult, Elem, ElemSet, Result};

use super::{require, Step, Tally};
use crate::facts::RingFacts;

/// Every element when there are at most `limit`, otherwise `limit`
/// elements taken at a fixed stride from the canonical order.
fn sweep(f: &RingFacts, limit: u32) -> Vec<Elem> {
    let step = f.card().div_ceil(limit).max(1) as usize;
    f.ring.elements().step_by(step).collect()
}

fn d_holds(f: &RingFacts, b: Elem, a: &ElemSet) -> Result<bool> {
    Ok(derivations::d_semiprime_oracle(&f.ring, b, a)?.holds)
}

pub(crate) fn thm21(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && !f.class.commutative)?;
    let r = &f.ring;
    let bs = sweep(f, 512);
    let rows = bs
        .par_iter()
        .map(|&b| Ok((b, derivations::thm21_criterion(r, b)?, d_holds(f, b, &f.full)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut t = Tally::new(format!("criterion = d(R)-semiprime oracle for {} b", bs.len()));
    for &(b, crit, oracle) in &rows {
        t.case(crit == oracle, || r.render(b));
    }
    t.finish(res);
    let leibniz = bs
        .iter()
        .step_by(bs.len().div_ceil(16).max(1))
        .find_map(|&b| InnerDerivation::new(r, b).leibniz_violation(r).map(|v| (b, v)));
    res.assert(
        "ad_b satisfies the Leibniz rule on sampled b",
        leibniz.is_none(),
        leibniz.map(|(b, (x, y))| format!("b = {}, x = {}, y = {}", r.render(b), r.render(x), r.render(y))),
    );
    let count = |sel: fn(&(Elem, bool, bool)) -> bool| rows.iter().filter(|x| sel(x)).count();
    res.compare(
        format!("{}/{} d(R)-semiprime", count(|x| x.1), rows.len()),
        format!("{}/{} d(R)-semiprime", count(|x| x.2), rows.len()),
    );
    Ok(())
}

pub(crate) fn cor2(f: &RingFacts, res: &mut CheckResult) -> Step {
    let r = &f.ring;
    require(matches!(r.field_matrix(), Some((n, _)) if n > 1))?;
    let bs = sweep(f, 512);
    let rows = bs
        .par_iter()
        .map(|&b| {
            Ok((
                b,
                derivations::cor2_criterion(r, b)?,
                derivations::thm21_criterion(r, b)?,
                d_holds(f, b, &f.full)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vs_thm21 = Tally::new(format!("det criterion = annihilator criterion for {} b", bs.len()));
    let mut vs_oracle = Tally::new(format!("det criterion = d(R)-semiprime oracle for {} b", bs.len()));
    for &(b, det, ann, oracle) in &rows {
        vs_thm21.case(det == ann, || r.render(b));
        vs_oracle.case(det == oracle, || r.render(b));
    }
    vs_thm21.finish(res);
    vs_oracle.finish(res);
    res.compare(
        format!("{}/{} d(R)-semiprime", rows.iter().filter(|x| x.1).count(), rows.len()),
        format!("{}/{} d(R)-semiprime", rows.iter().filter(|x| x.3).count(), rows.len()),
    );
    Ok(())
}

/// All `b` up to 256 elements, 64 canonical samples above.
pub fn thm23_elements(f: &RingFacts) -> Vec<Elem> {
    if f.card() <= 256 {
        f.ring.elements().collect()
    } else {
        sweep(f, 64)
    }
}

pub(crate) fn thm23ii(f: &RingFacts, res: &mut CheckResult) -> Step {
    require(f.is_prime() && !f.class.domain && !f.class.exceptional)?;
    let r = &f.ring;
    let ls = f.noncentral_lie_ideals();
    require(!ls.is_empty())?;
    let bs = thm23_elements(f);
    let rows = bs
        .par_iter()
        .map(|&b| {
            let dr = d_holds(f, b, &f.full)?;
            let mut bad = None;
            for l in &ls {
                if d_holds(f, b, l)? != dr && bad.is_none() {
                    bad = Some(l.render(r));
                }
            }
            Ok((b, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Tally::new(format!(
        "d(L)-semiprime ⇔ d(R)-semiprime for {} b and {} noncentral Lie ideals",
        bs.len(),
        ls.len()
    ));
    for (b, bad) in &rows {
        t.case(bad.is_none(), || format!("b = {}, L = {}", r.render(*b), bad.clone().unwrap_or_default()));
    }
    t.finish(res);
    Ok(())
}
