use proptest::prelude::*;
use ringlab_core::funcfield::{
    is_square, ratfunc_arith, translates_invertible, FfMatrix, Poly, RatFunc, RatOp, Translates,
};

/// A polynomial is a square over GF(2) iff it has no odd-degree terms, since
/// squaring is additive in characteristic 2.
fn poly_square_oracle(p: &Poly) -> bool {
    p.coeffs().iter().enumerate().all(|(i, &c)| i % 2 == 0 || c == 0)
}

fn ratfunc_square_oracle(f: &RatFunc) -> bool {
    f.is_zero() || (poly_square_oracle(f.numerator()) && poly_square_oracle(f.denominator()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0u8..2, 0..=max_deg + 1).prop_map(|c| Poly::from_coeffs(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (poly(max_deg), nonzero_poly(max_deg)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn nonzero_ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (nonzero_poly(max_deg), nonzero_poly(max_deg)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in ratfunc(5), b in ratfunc(5), c in ratfunc(5)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
            prop_assert_eq!(ratfunc_arith(RatOp::Div, &b, &a).unwrap().mul(&a), b.clone());
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn normalization_is_idempotent(a in ratfunc(6)) {
        prop_assert_eq!(a.renormalize(), a.clone());
        prop_assert!(a.numerator().gcd(a.denominator()).is_one() || a.is_zero());
    }

    #[test]
    fn squares_and_twisted_squares(f in nonzero_ratfunc(6)) {
        let sq = f.square();
        prop_assert!(is_square(&sq));
        prop_assert!(ratfunc_square_oracle(&sq));
        let twisted = RatFunc::t().mul(&sq);
        prop_assert!(!is_square(&twisted));
        prop_assert!(!ratfunc_square_oracle(&twisted));
    }

    #[test]
    fn is_square_matches_the_odd_coefficient_oracle(f in ratfunc(10)) {
        prop_assert_eq!(is_square(&f), ratfunc_square_oracle(&f));
    }

    #[test]
    fn squarefree_decomposition_rebuilds(p in nonzero_poly(24)) {
        let rebuilt = p
            .squarefree_decomposition()
            .iter()
            .fold(Poly::one(), |acc, (g, m)| acc.mul(&g.pow(*m)));
        prop_assert_eq!(rebuilt, p);
    }
}

#[test]
fn yes_means_sampled_translates_are_invertible() {
    let t = RatFunc::t();
    let one = RatFunc::one();
    let t1 = t.add(&one);
    let a = FfMatrix::from_rows(vec![vec![one.clone(), one.clone()], vec![t.clone(), one.clone()]]).unwrap();
    assert_eq!(translates_invertible(&a).unwrap(), Translates::Yes);
    let mut betas = vec![
        RatFunc::zero(),
        one.clone(),
        t.clone(),
        t.inv().unwrap(),
        t1.clone(),
    ];
    for k in 2..17u32 {
        let p = Poly::from_bits(k as u64 * 37 % 251 + 1);
        let q = Poly::from_bits(k as u64 * 11 % 61 + 1);
        betas.push(RatFunc::new(p, q).unwrap());
    }
    assert_eq!(betas.len(), 20);
    for beta in &betas {
        let shifted = a.add(&FfMatrix::scalar(2, beta));
        assert!(!shifted.det().is_zero(), "det(a + {beta}) vanished");
    }
}

#[test]
fn square_determinant_gives_no() {
    // [[0,t^2],[1,0]] has trace 0 and det t^2 = (t)^2, so beta = t is a root
    let t = RatFunc::t();
    let a = FfMatrix::from_rows(vec![
        vec![RatFunc::zero(), t.square()],
        vec![RatFunc::one(), RatFunc::zero()],
    ])
    .unwrap();
    assert_eq!(translates_invertible(&a).unwrap(), Translates::No);
    assert!(a.add(&FfMatrix::scalar(2, &t)).det().is_zero());
}
