//! Property tests for the exact arithmetic layer.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use triadec::context::{Context, ParameterPoint};
use triadec::factor::factor_multiplicities;
use triadec::parse::{format_poly, parse_poly};
use triadec::poly::{Monomial, Polynomial};

fn ctx() -> Arc<Context> {
    Context::new(vec!["u"], vec!["x1", "x2"])
}

/// Random sparse polynomial over the shared context.
fn arb_poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        -6i64..=6,
        proptest::collection::vec(0..=max_exp, 3),
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(|terms| {
        let c = ctx();
        let mut p = Polynomial::zero(&c);
        for (coef, exps) in terms {
            let mono = Monomial::from_exponents(exps);
            let t = Polynomial::monomial(&c, mono, BigRational::from_integer(BigInt::from(coef)));
            p = p.add_ref(&t);
        }
        p
    })
}

fn arb_point() -> impl Strategy<Value = ParameterPoint> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| {
        ParameterPoint::new(vec![BigRational::new(BigInt::from(n), BigInt::from(d))])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pseudo_division_identity(f in arb_poly(5, 3), p in arb_poly(4, 3)) {
        let c = ctx();
        let x = c.var_index(2);
        prop_assume!(p.deg(x) > 0);
        let (q, r, k) = f.pseudo_div(&p, x);
        let lhs = p.lc_wrt(x).pow(k).mul_ref(&f);
        let rhs = q.mul_ref(&p).add_ref(&r);
        prop_assert_eq!(lhs, rhs);
        prop_assert!(r.is_zero() || r.deg(x) < p.deg(x));
        prop_assert!((k as usize) <= f.deg(x).saturating_sub(p.deg(x)) + 1);
    }

    #[test]
    fn sprem_is_reduced(f in arb_poly(5, 3), t2 in arb_poly(4, 2)) {
        let c = ctx();
        let x1 = c.var_index(1);
        let x2 = c.var_index(2);
        // Build a two-element triangular sequence and reduce f against it.
        let t1 = parse_poly("x1^3 + u*x1 + 1", &c).unwrap();
        prop_assume!(t2.deg(x2) > 0);
        let chain = [t1, t2];
        let r = f.sprem(&chain);
        if !r.is_zero() {
            for t in &chain {
                let x = t.mvar();
                prop_assert!(r.deg(x) < t.deg(x));
            }
        }
        let _ = x1;
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(
        f in arb_poly(4, 3),
        g in arb_poly(4, 3),
        h in arb_poly(4, 3),
        a in arb_point(),
    ) {
        let combo = f.mul_ref(&g).add_ref(&h);
        let lhs = combo.specialize(&a);
        let rhs = f
            .specialize(&a)
            .mul_ref(&g.specialize(&a))
            .add_ref(&h.specialize(&a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factors_reconstruct_input(f in arb_poly(3, 2), g in arb_poly(2, 1)) {
        let product = f.mul_ref(&g).mul_ref(&f);
        prop_assume!(!product.is_zero());
        prop_assume!(product.total_degree() <= 9);
        let mut rest = product.clone();
        for (q, m) in factor_multiplicities(&product) {
            for _ in 0..m {
                rest = rest.exact_div(&q).expect("declared factor must divide");
            }
        }
        prop_assert!(rest.is_rational());
        prop_assert!(!rest.is_zero());
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly(6, 4)) {
        let c = ctx();
        let printed = format_poly(&f);
        let back = parse_poly(&printed, &c).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn ring_axioms_spot_checks(f in arb_poly(4, 3), g in arb_poly(4, 3), h in arb_poly(4, 3)) {
        prop_assert_eq!(f.add_ref(&g), g.add_ref(&f));
        prop_assert_eq!(f.mul_ref(&g), g.mul_ref(&f));
        let lhs = f.mul_ref(&g.add_ref(&h));
        let rhs = f.mul_ref(&g).add_ref(&f.mul_ref(&h));
        prop_assert_eq!(lhs, rhs);
    }
}
