//! Shared seeded generators for the oracle-backed test suites.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use triadec::chains::RegularChainZD;
use triadec::context::Context;
use triadec::poly::{Monomial, Polynomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_ctx(d: usize, n: usize) -> Arc<Context> {
    let params: Vec<String> = (1..=d).map(|i| format!("u{i}")).collect();
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    Context::new(params, vars)
}

/// Random polynomial with class at most `max_cls`, total degree at most
/// `max_deg`, a few terms, small integer coefficients.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ctx: &Arc<Context>,
    max_cls: usize,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    let d = ctx.num_params();
    let nind = ctx.num_indets();
    let mut p = Polynomial::zero(ctx);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; nind];
        let mut budget = max_deg;
        for slot in exps.iter_mut().take(d + max_cls) {
            if budget == 0 {
                break;
            }
            let e = rng.gen_range(0..=budget.min(2));
            *slot = e;
            budget -= e;
        }
        let coef: i64 = loop {
            let c = rng.gen_range(-3..=3i64);
            if c != 0 {
                break c;
            }
        };
        p = p.add_ref(&Polynomial::monomial(
            ctx,
            Monomial::from_exponents(exps),
            BigRational::from_integer(BigInt::from(coef)),
        ));
    }
    p
}

/// Random parameter-only nonzero polynomial (possibly a constant).
pub fn random_initial(rng: &mut ChaCha8Rng, ctx: &Arc<Context>) -> Polynomial {
    if ctx.num_params() == 0 || rng.gen_bool(0.5) {
        return Polynomial::from_int(ctx, rng.gen_range(1..=3));
    }
    loop {
        let p = random_poly(rng, ctx, 0, 1, 2);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random zero-dimensional regular chain: element `i` is
/// `c_i(U) * x_i^{d_i} + lower`, with a parameter-only nonzero initial, so
/// regularity holds by construction.
pub fn random_regular_chain(rng: &mut ChaCha8Rng, ctx: &Arc<Context>) -> RegularChainZD {
    let n = ctx.num_vars();
    let mut polys = Vec::with_capacity(n);
    for i in 1..=n {
        let deg = rng.gen_range(1..=2u32);
        let x = ctx.var_index(i);
        let init = random_initial(rng, ctx);
        let mut elem = init.mul_ref(&Polynomial::indet(ctx, x).pow(deg));
        // Lower-degree tail in x_i and the earlier variables.
        let tail = random_poly(rng, ctx, i, deg.saturating_sub(1), 3);
        let tail = if tail.deg(x) >= deg as usize {
            Polynomial::from_int(ctx, 1)
        } else {
            tail
        };
        elem = elem.add_ref(&tail);
        if elem.deg(x) != deg as usize || elem.cls() != i {
            // Tail interfered; fall back to a clean monic element.
            elem = Polynomial::indet(ctx, x)
                .pow(deg)
                .add_ref(&Polynomial::from_int(ctx, rng.gen_range(-3..=3)));
        }
        polys.push(elem);
    }
    RegularChainZD::new(polys).expect("constructed chain is regular")
}
