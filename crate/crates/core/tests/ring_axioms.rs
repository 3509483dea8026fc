use rand::{rngs::StdRng, Rng as _, SeedableRng};
use rayon::prelude::*;
use ringlab_core::ring::{Elem, Ring, RingSpec};
use ringlab_core::sets;

const ENUMERABLE: &[&str] = &[
    "Z(4)",
    "Z(6)",
    "GF(2)",
    "GF(3)",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "M(2,GF(2))",
    "M(2,GF(3))",
    "M(2,GF(4))",
    "M(2,Z(4))",
    "M(3,GF(2))",
    "UT(2,GF(2))",
    "UT(2,GF(3))",
    "prod(M(2,GF(2)),GF(2))",
    "prod(GF(2),M(2,GF(2)),M(2,GF(3)))",
];

fn axioms_hold(r: &Ring, a: Elem, b: Elem, c: Elem) -> bool {
    r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
        && r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
        && r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
        && r.add(r.add(a, b), c) == r.add(a, r.add(b, c))
        && r.add(a, b) == r.add(b, a)
}

#[test]
fn ring_axioms_on_catalog_rings() {
    let mut rng = StdRng::seed_from_u64(7);
    for spec in ENUMERABLE {
        let r = Ring::parse(spec).unwrap();
        let n = r.cardinality();
        assert_ne!(r.zero(), r.one(), "{spec}");
        for a in r.elements() {
            assert_eq!(r.mul(r.one(), a), a, "{spec}");
            assert_eq!(r.mul(a, r.one()), a, "{spec}");
            assert_eq!(r.add(a, r.neg(a)), r.zero(), "{spec}");
        }
        if n <= 512 {
            let ok = (0..n).into_par_iter().all(|a| {
                (0..n).all(|b| (0..n).all(|c| axioms_hold(&r, Elem(a), Elem(b), Elem(c))))
            });
            assert!(ok, "{spec}: exhaustive axiom check failed");
        } else {
            for _ in 0..20_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                assert!(axioms_hold(&r, Elem(a), Elem(b), Elem(c)), "{spec}");
            }
        }
    }
}

#[test]
fn characteristic_is_additive_order_of_one() {
    for spec in ENUMERABLE {
        let r = Ring::parse(spec).unwrap();
        let ch = r.characteristic() as i64;
        assert_eq!(r.from_int(ch), r.zero(), "{spec}");
        for k in 1..ch {
            assert_ne!(r.from_int(k), r.zero(), "{spec}: {k}");
        }
    }
}

#[test]
fn additive_generators_span_the_ring() {
    for spec in ENUMERABLE {
        let r = Ring::parse(spec).unwrap();
        let span = sets::additive_closure(&r, r.additive_generators());
        assert_eq!(span.len(), r.cardinality() as usize, "{spec}");
    }
}

#[test]
fn enumeration_is_canonical() {
    let r = Ring::parse("M(2,GF(3))").unwrap();
    let all: Vec<Elem> = r.elements().collect();
    assert_eq!(all.len(), 81);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    // lexicographic on row-major entries
    let rendered: Vec<Vec<u32>> = all.iter().map(|&e| r.components(e)).collect();
    assert!(rendered.windows(2).all(|w| w[0] < w[1]));
}

/// Entrywise triple-loop product computed in the base ring.
fn naive_matrix_mul(base: &Ring, n: usize, x: &[u32], y: &[u32]) -> Vec<u32> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = base.zero();
            for k in 0..n {
                acc = base.add(acc, base.mul(Elem(x[i * n + k]), Elem(y[k * n + j])));
            }
            out[i * n + j] = acc.0;
        }
    }
    out
}

#[test]
fn matrix_multiplication_matches_entrywise_expansion() {
    let mut rng = StdRng::seed_from_u64(11);
    for spec in ["M(2,GF(3))", "M(2,GF(4))", "M(2,Z(4))", "M(3,GF(2))", "M(2,M(2,GF(2)))"] {
        let r = Ring::parse(spec).unwrap();
        let (n, base_spec) = match r.spec() {
            RingSpec::Matrix(n, b) => (*n, (**b).clone()),
            _ => unreachable!(),
        };
        let base = Ring::build(&base_spec).unwrap();
        for _ in 0..50 {
            let a = Elem(rng.gen_range(0..r.cardinality()));
            let b = Elem(rng.gen_range(0..r.cardinality()));
            let expect = naive_matrix_mul(&base, n, &r.components(a), &r.components(b));
            assert_eq!(r.components(r.mul(a, b)), expect, "{spec}");
        }
    }
}

#[test]
fn products_are_componentwise() {
    let r = Ring::parse("prod(GF(2),M(2,GF(2)),M(2,GF(3)))").unwrap();
    let factors: Vec<Ring> = r
        .product_factors()
        .unwrap()
        .iter()
        .map(|s| Ring::build(s).unwrap())
        .collect();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let a = Elem(rng.gen_range(0..r.cardinality()));
        let b = Elem(rng.gen_range(0..r.cardinality()));
        let (ca, cb) = (r.components(a), r.components(b));
        let prod: Vec<u32> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.mul(Elem(ca[i]), Elem(cb[i])).0)
            .collect();
        assert_eq!(r.components(r.mul(a, b)), prod);
    }
}

#[test]
fn malformed_specs_are_rejected() {
    for bad in ["Z(1)", "GF(6)", "M(0,GF(2))", "M(4,GF(2))", "prod()", "FF(3)", "Q(2)", "M(2,GF(2)"] {
        assert!(bad.parse::<RingSpec>().is_err(), "{bad}");
    }
    let spec: RingSpec = " prod( M(2, GF(2)) , GF(2) ) ".parse().unwrap();
    assert_eq!(spec.to_string(), "prod(M(2,GF(2)),GF(2))");
}
