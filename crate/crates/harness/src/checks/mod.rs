//! The check registry.
//!
//! Every check states a hypothesis and a conclusion. Rings that do not meet
//! the hypothesis are reported as skipped, never as a vacuous pass.

mod basic;
mod derivation;
mod lie;
mod products;

pub use derivation::thm23_elements;
pub use lie::three_factor_lie_ideal;

use ringlab_core::funcfield::checks::ExceptionalCase;
use ringlab_core::predicates;
use ringlab_core::{CheckResult, ElemSet, RingError};

use crate::facts::RingFacts;

pub const NON_ENUMERABLE: &str = "non-enumerable";
pub const HYPOTHESES_UNMET: &str = "hypotheses unmet";
pub const NOT_IN_CATALOG: &str = "ring not in catalog";

/// Why a per-ring check stopped early.
pub enum Halt {
    Skip(&'static str),
    Error(RingError),
}

impl From<RingError> for Halt {
    fn from(e: RingError) -> Self {
        Halt::Error(e)
    }
}

pub type Step = Result<(), Halt>;

pub(crate) fn require(cond: bool) -> Step {
    if cond {
        Ok(())
    } else {
        Err(Halt::Skip(HYPOTHESES_UNMET))
    }
}

pub type RingCheck = fn(&RingFacts, &mut CheckResult) -> Step;

#[derive(Clone, Copy)]
pub enum Scope {
    /// Runs on every catalog ring.
    PerRing(RingCheck),
    /// Runs on one fixed ring, through the per-ring facts.
    OnRing(&'static str, RingCheck),
    /// A self-contained example over a fixed (possibly infinite) ring.
    Example(ExceptionalCase),
}

#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
}

impl CheckDef {
    /// The rings this check reports on, given the catalog ring specs.
    pub fn targets(&self, catalog: &[String]) -> Vec<String> {
        match self.scope {
            Scope::PerRing(_) => catalog.to_vec(),
            Scope::OnRing(spec, _) => vec![spec.to_string()],
            Scope::Example(case) => vec![case.ring_spec().to_string()],
        }
    }
}

/// Counts cases of an implication or equivalence over a family and keeps
/// the first violation.
pub(crate) struct Tally {
    name: String,
    cases: usize,
    violations: usize,
    first: Option<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            violations: 0,
            first: None,
        }
    }

    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    pub fn cases(&self) -> usize {
        self.cases
    }

    /// Records the tally as one sub-assertion and returns the case count.
    pub fn finish(self, res: &mut CheckResult) -> usize {
        res.assert(
            format!("{} [{} cases, {} violations]", self.name, self.cases, self.violations),
            self.violations == 0,
            self.first,
        );
        self.cases
    }
}

pub(crate) fn semiprime(f: &RingFacts, x: &ElemSet) -> Result<bool, RingError> {
    Ok(predicates::x_semiprime(&f.ring, x)?.holds)
}

pub(crate) fn prime(f: &RingFacts, x: &ElemSet) -> Result<bool, RingError> {
    Ok(predicates::x_prime(&f.ring, x)?.holds)
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

const EXAMPLE3_RING: &str = "prod(M(2,GF(2)),GF(2))";

static REGISTRY: &[CheckDef] = &[
    CheckDef { id: "def", statement: "x_semiprime(R,{1}) iff R is reduced; x_prime(R,{1}) iff R is a domain; the X = R cases are semiprimeness and primeness", scope: Scope::PerRing(basic::def) },
    CheckDef { id: "prop1", statement: "a prime X-semiprime ring is X-prime", scope: Scope::PerRing(basic::prop1) },
    CheckDef { id: "thm9", statement: "an E(R)-semiprime ring is U(R)-semiprime", scope: Scope::PerRing(basic::thm9) },
    CheckDef { id: "lem16", statement: "E(R) is a Lie ideal and [E(R),R] ⊆ U(R)^+", scope: Scope::PerRing(lie::lem16) },
    CheckDef { id: "lem17", statement: "[E(R),R] = [E(R),E(R)]", scope: Scope::PerRing(lie::lem17) },
    CheckDef { id: "lem5", statement: "I([L,L]) ⊆ L + L^2 for every Lie ideal L", scope: Scope::PerRing(lie::lem5) },
    CheckDef { id: "lem4ii", statement: "[I([L,L]),R] ⊆ [L,R] ⊆ L for every Lie ideal L", scope: Scope::PerRing(lie::lem4ii) },
    CheckDef { id: "lem13", statement: "noncommutative prime R, nonzero ideals I, J: [[I,J],[I,J]] ≠ 0", scope: Scope::PerRing(lie::lem13) },
    CheckDef { id: "thm3", statement: "semiprime R with the subring generated by L equal to R is L-semiprime; prime R with [L,L] ≠ 0 is L-prime", scope: Scope::PerRing(lie::thm3) },
    CheckDef { id: "thm5", statement: "I([L,L]) = R implies [L,R] = [R,R] and R = [R,R]^2, and R is [L,R]-semiprime when semiprime", scope: Scope::PerRing(lie::thm5) },
    CheckDef { id: "remark6i", statement: "M_2(F), char F = 2, L = [R,R]: 0 ≠ [L,L] ⊆ Z(R) and I([L,L]) = R, yet R is not [L,L]-semiprime", scope: Scope::PerRing(lie::remark6i) },
    CheckDef { id: "thm7", statement: "a prime ring with a nontrivial idempotent is [E(R),R]-prime", scope: Scope::PerRing(lie::thm7) },
    CheckDef { id: "thm11", statement: "noncommutative prime R, nonzero ideals I, J: R is [I,J]-prime", scope: Scope::PerRing(lie::thm11) },
    CheckDef { id: "thm4", statement: "R = M_n(A), n > 1, A semiprime: R is [E(R),R]-semiprime", scope: Scope::PerRing(lie::thm4) },
    CheckDef { id: "cor5", statement: "a prime E(R)-semiprime ring is a domain or [E(R),R]-prime", scope: Scope::PerRing(lie::cor5) },
    CheckDef { id: "cor6", statement: "R = M_n(A), n > 1, A semiprime: R is Id(R)-semiprime", scope: Scope::PerRing(lie::cor6) },
    CheckDef { id: "thm8", statement: "prime non-domain R, noncentral Lie ideal L: R is L-prime iff L is proper, or R is exceptional with [L,L] = 0, dim LC = 2 and LC = [a,RC] for some a ∈ L with every a+β invertible", scope: Scope::PerRing(lie::thm8) },
    CheckDef { id: "remark10i", statement: "M_2(GF(2)), L = {[[α,β],[β,α]]} = [a,R], a = [[1,1],[1,1]]: [L,L] = 0, aLa = 0, R is not L-prime", scope: Scope::Example(ExceptionalCase::Remark10i) },
    CheckDef { id: "remark10ii", statement: "M_2(F_2(t)), L = {[[α,β],[βt,α]]} = [a,R], a = [[1,1],[t,1]]: [L,L] = 0, every a+β invertible, R is L-prime", scope: Scope::Example(ExceptionalCase::Remark10ii) },
    CheckDef { id: "example4", statement: "M_2(F_2(t)), d = ad_b, b = [[1,1],[t,1]]: d(L) ⊆ L so R is not d(L)-semiprime, while every b+β is a unit so R is d(R)-semiprime", scope: Scope::Example(ExceptionalCase::Example4) },
    CheckDef { id: "thm10", statement: "prime R with a nontrivial idempotent, X noncentral and invariant under x ↦ (1+t)x(1-t), t^2 = 0: R is X-prime", scope: Scope::PerRing(basic::thm10) },
    CheckDef { id: "cor7", statement: "R with a nontrivial idempotent: R prime iff U(R)-prime iff N(R)-prime", scope: Scope::PerRing(basic::cor7) },
    CheckDef { id: "thm21", statement: "noncommutative prime R, d = ad_b: R is d(R)-semiprime iff ℓ(b+β) = 0 or r(b+β) = 0 for every central β", scope: Scope::PerRing(derivation::thm21) },
    CheckDef { id: "cor2", statement: "R = M_n(GF(q)), d = ad_b: R is d(R)-semiprime iff det(b+β) ≠ 0 for every β", scope: Scope::PerRing(derivation::cor2) },
    CheckDef { id: "thm23ii", statement: "non-exceptional prime non-domain R, noncentral Lie ideal L, d = ad_b: R is d(L)-semiprime iff d(R)-semiprime", scope: Scope::PerRing(derivation::thm23ii) },
    CheckDef { id: "lem8", statement: "semiprime R, Lie ideal L: aLa = 0 implies [a,L] = 0; if ℓ([L,R]) = 0 then a[L,R]a = 0 implies aLa = 0", scope: Scope::PerRing(lie::lem8) },
    CheckDef { id: "lem9", statement: "X- and Y-semiprime implies XY-semiprime; X-semiprime implies X^n-semiprime", scope: Scope::PerRing(lie::lem9) },
    CheckDef { id: "cor12", statement: "Lie ideal L with ℓ([L,R]) = 0: R is L-semiprime iff [L,R]-semiprime", scope: Scope::PerRing(lie::cor12) },
    CheckDef { id: "cor13", statement: "prime R, noncentral Lie ideal L: R is L-semiprime iff [L,R]-semiprime", scope: Scope::PerRing(lie::cor13) },
    CheckDef { id: "cor14", statement: "2-torsion free semiprime R, Lie ideal L: R is [L,R]-semiprime iff ℓ([L,R]) = 0", scope: Scope::PerRing(lie::cor14) },
    CheckDef { id: "cor10", statement: "prime R of characteristic ≠ 2, noncentral Lie ideal L: R is L-semiprime", scope: Scope::PerRing(lie::cor10) },
    CheckDef { id: "thm13", statement: "semiprime R, B ⊆ Id(R) with B^+ a Lie ideal: ℓ([B,R]) = 0 iff R is [B,R]-semiprime", scope: Scope::PerRing(lie::thm13) },
    CheckDef { id: "thm16", statement: "semiprime R: ℓ([E(R),R]) = 0 iff R is [E(R),R]-semiprime", scope: Scope::PerRing(lie::thm16) },
    CheckDef { id: "thm19", statement: "semiprime R, Lie ideal L: orthogonal central idempotents e1+e2+e3 = 1 with e1L central, e2x^2 central for x in the subring generated by L, e3R e3L-semiprime", scope: Scope::PerRing(lie::thm19) },
    CheckDef { id: "thm22", statement: "semiprime R, Lie ideal L with ℓ([L,R]) = 0: a central idempotent e with ex^2 central on the subring generated by L and (1-e)R (1-e)L-semiprime; e = 0 and R L-semiprime when 2-torsion free", scope: Scope::PerRing(lie::thm22) },
    CheckDef { id: "example3", statement: "M_2(GF(2)) ⊕ GF(2) is regular and E(R)-semiprime with ℓ([E(R),R]) = 0 ⊕ GF(2), so not [E(R),R]-semiprime", scope: Scope::OnRing(EXAMPLE3_RING, basic::example3) },
    CheckDef { id: "example6", statement: "semiprime R, right ideal ρ, n ≤ 3: R is ρ^n-semiprime iff ℓ(ρ) = 0", scope: Scope::PerRing(lie::example6) },
    CheckDef { id: "thm1", statement: "semiprime R where each prime image is a domain or has a noncentral idempotent image: R is Id(R)-semiprime", scope: Scope::PerRing(basic::thm1) },
    CheckDef { id: "thm2", statement: "a regular ring is Id(R)-semiprime", scope: Scope::PerRing(basic::thm2) },
    CheckDef { id: "thm110", statement: "X(∏R_β) = ∏X(R_β) implies: ∏R_β is X-semiprime iff every R_β is X(R_β)-semiprime (X = Id, U)", scope: Scope::PerRing(products::thm110) },
    CheckDef { id: "prop4", statement: "a direct product is Id-semiprime iff every factor is", scope: Scope::PerRing(products::prop4) },
    CheckDef { id: "thm14", statement: "semiprime R where every prime image has a noncentral idempotent: R is [E(R),R]-semiprime, each prime image is [E,R]-prime, and R is their subdirect product", scope: Scope::PerRing(products::thm14) },
    CheckDef { id: "thm15", statement: "semiprime R with E(R) mapping onto E of each prime image, subdirect product of [E,R]-prime rings: R is [E(R),R]-semiprime", scope: Scope::PerRing(products::thm15) },
    CheckDef { id: "thm17", statement: "semiprime finite R whose prime images all have nontrivial idempotents: R is [E(R),R]-semiprime", scope: Scope::PerRing(products::thm17) },
    CheckDef { id: "prop2", statement: "finite R, prime ideal P: Id(R/P) is the image of Id(R), hence E(R/P) is the image of E(R)", scope: Scope::PerRing(products::prop2) },
];

pub fn registry() -> &'static [CheckDef] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id == id)
}
