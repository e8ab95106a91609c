//! Oracle-backed checks of the structural guarantees: nonempty varieties of
//! regular chains, the resultant-intersection criterion, stability of
//! reduction and of the characteristic-set union under specialization.

mod common;

use common::{random_poly, random_regular_chain, rng, small_ctx};

use triadec::chains::{iterated_initial_resultant, rank_set, specializes_well, AscendingChain};
use triadec::factor::FactorSet;
use triadec::oracle::{
    sample_stable_points, sets_equal_tol, solve_chain, solve_system, union_of_chain_solutions,
    NumericSolutionSet, CLUSTER_TOL, MEMBERSHIP_TOL,
};
use triadec::poly::Polynomial;
use triadec::subres::successive_resultant;
use triadec::wrsd::{is_wrsd_valid, wrsd};
use triadec::wu::wu_decompose;

/// Every zero-dimensional regular chain has solutions wherever it
/// specializes well, with the full product-of-degrees root count.
#[test]
fn regular_chains_have_nonempty_varieties() {
    let mut r = rng(11);
    for case in 0..10 {
        let ctx = small_ctx(1 + (case % 2), 1 + (case % 3));
        let t = random_regular_chain(&mut r, &ctx);
        let mut f = FactorSet::new();
        f.insert(&iterated_initial_resultant(&t));
        let pts = sample_stable_points(&f, &ctx, 2, 100 + case as u64, 20).unwrap();
        let expected: usize = t.polys().iter().map(|p| p.deg(p.mvar())).product();
        for a in &pts {
            assert!(specializes_well(&t, a));
            let sol = solve_chain(&t.specialize(a)).unwrap();
            assert_eq!(sol.raw_count, expected, "chain {t} at {a}");
            assert!(!sol.is_empty());
            assert_eq!(rank_set(&t.specialize(a)), rank_set(t.polys()));
        }
    }
}

/// The successive resultant vanishes exactly when the chain's variety meets
/// the hypersurface: checked numerically in both directions at stable
/// points.
#[test]
fn resultant_zero_iff_varieties_intersect() {
    let mut r = rng(23);
    let mut zero_cases = 0;
    let mut nonzero_cases = 0;
    for case in 0..14 {
        let ctx = small_ctx(1, 1 + (case % 2));
        let t = random_regular_chain(&mut r, &ctx);
        // Half the cases use a polynomial that provably vanishes on part of
        // the variety (a multiple of the first chain element).
        let p = if case % 2 == 0 {
            let q = random_poly(&mut r, &ctx, ctx.num_vars(), 2, 2);
            t.polys()[0].mul_ref(&q.add_ref(&Polynomial::from_int(&ctx, 1)))
        } else {
            random_poly(&mut r, &ctx, ctx.num_vars(), 2, 3)
        };
        if p.is_zero() || p.cls() == 0 {
            continue;
        }
        let res = successive_resultant(&p, t.polys());
        let w = wrsd(&t, &p);
        let mut factors = w.f.clone();
        factors.insert(&iterated_initial_resultant(&t));
        let pts = match sample_stable_points(&factors, &ctx, 5, 300 + case as u64, 30) {
            Ok(p) => p,
            Err(_) => continue,
        };
        for a in &pts {
            let sol = solve_chain(&t.specialize(a)).unwrap();
            let pa = p.specialize(a);
            let hits = sol
                .points
                .iter()
                .filter(|pt| pa.eval_complex(pt).norm() <= MEMBERSHIP_TOL)
                .count();
            if res.is_zero() {
                assert!(hits > 0, "expected an intersection for {t} and {p} at {a}");
            } else {
                assert_eq!(hits, 0, "unexpected intersection for {t} and {p} at {a}");
            }
        }
        if res.is_zero() {
            zero_cases += 1;
        } else {
            nonzero_cases += 1;
        }
    }
    assert!(zero_cases >= 3, "too few vanishing-resultant cases: {zero_cases}");
    assert!(nonzero_cases >= 3, "too few nonzero-resultant cases: {nonzero_cases}");
}

/// A nonzero successive resultant stays nonzero at every point off the
/// variety of `res * res(I_T, T)` (exact check on the specialized side).
#[test]
fn nonzero_resultants_survive_specialization() {
    let mut r = rng(37);
    let mut checked = 0;
    for case in 0..20 {
        let ctx = small_ctx(1 + (case % 2), 1 + (case % 2));
        let t = random_regular_chain(&mut r, &ctx);
        let p = random_poly(&mut r, &ctx, ctx.num_vars(), 2, 3);
        if p.is_zero() || p.cls() == 0 {
            continue;
        }
        let res = successive_resultant(&p, t.polys());
        if res.is_zero() {
            continue;
        }
        let mut factors = FactorSet::new();
        factors.insert(&res);
        factors.insert(&iterated_initial_resultant(&t));
        let pts = sample_stable_points(&factors, &ctx, 3, 400 + case as u64, 30).unwrap();
        for a in &pts {
            let pa = p.specialize(a);
            if pa.is_zero() || pa.cls() == 0 {
                continue;
            }
            let spec_chain = t.specialize(a);
            let spec_res = successive_resultant(&pa, &spec_chain);
            assert!(!spec_res.is_zero(), "specialized resultant vanished at {a}");
        }
        checked += 1;
    }
    assert!(checked >= 5, "too few cases: {checked}");
}

/// Pseudo-reduction by the chain preserves both the intersection and the
/// complement numerically at stable points.
#[test]
fn reduction_preserves_varieties() {
    let mut r = rng(53);
    let mut checked = 0;
    for case in 0..12 {
        let ctx = small_ctx(1, 1 + (case % 2));
        let t = random_regular_chain(&mut r, &ctx);
        let p = random_poly(&mut r, &ctx, ctx.num_vars(), 3, 3);
        if p.is_zero() {
            continue;
        }
        let p1 = p.sprem(t.polys());
        let mut factors = FactorSet::new();
        factors.insert(&iterated_initial_resultant(&t));
        let pts = sample_stable_points(&factors, &ctx, 3, 500 + case as u64, 30).unwrap();
        for a in &pts {
            let sol = solve_chain(&t.specialize(a)).unwrap();
            let pa = p.specialize(a);
            let p1a = p1.specialize(a);
            for pt in &sol.points {
                let on_p = pa.eval_complex(pt).norm() <= MEMBERSHIP_TOL;
                let on_p1 = p1a.eval_complex(pt).norm() <= MEMBERSHIP_TOL;
                assert_eq!(
                    on_p, on_p1,
                    "reduction changed membership for {p} vs {p1} at {a}"
                );
            }
        }
        checked += 1;
    }
    assert!(checked >= 8);
}

/// Characteristic-set union property at stable points: the solutions of the
/// system equal the union over non-contradictory chains of the initial-free
/// parts of their varieties.
#[test]
fn wu_union_property_at_stable_points() {
    let systems: Vec<(usize, Vec<&str>)> = vec![
        (
            1,
            vec![
                "(u1 - 1)*x2^2 + (x1^2 - 2*u1*x1 + u1^2 + 1)*x2 + x1^2 - x1",
                "(x1 - u1)*(x2 + 1)",
                "(x1 - u1)^2",
            ],
        ),
        (1, vec!["x1^2 - u1", "x1*x2 - 1"]),
        (2, vec!["u1*x1^2 + u2*x2 + 1", "u2*x2^2 + x1"]),
    ];
    for (d, polys) in systems {
        let ctx = small_ctx(d, 2);
        let system: Vec<Polynomial> = polys
            .iter()
            .map(|s| triadec::parse::parse_poly(s, &ctx).unwrap())
            .collect();
        let w = wu_decompose(&system);

        // Collect every encountered initial and dropped content so the
        // sampled points keep all branches alive.
        let mut factors = FactorSet::new();
        for b in &w.branches {
            for c in &b.dropped_contents {
                factors.insert(c);
            }
            match &b.chain {
                AscendingChain::Contradictory(p) => {
                    if !p.is_rational() {
                        factors.insert(p);
                    }
                }
                AscendingChain::Chain(t) => {
                    for e in t.polys() {
                        let init = e.initial();
                        if !init.is_rational() {
                            if init.cls() == 0 {
                                factors.insert(&init);
                            } else {
                                let r = successive_resultant(&init, t.polys());
                                if !r.is_zero() {
                                    factors.insert(&r);
                                }
                            }
                        }
                    }
                }
            }
        }
        let pts = sample_stable_points(&factors, &ctx, 3, 777, 30).unwrap();
        let target = ctx.parameter_free();
        for a in &pts {
            let spec: Vec<Polynomial> =
                system.iter().map(|p| p.specialize_into(a, &target)).collect();
            let direct = solve_system(&spec).unwrap();
            let mut union_pts = Vec::new();
            for b in &w.branches {
                if let AscendingChain::Chain(t) = &b.chain {
                    let spec_chain: Vec<Polynomial> =
                        t.polys().iter().map(|p| p.specialize_into(a, &target)).collect();
                    let sol = triadec::oracle::solve_triangular_off_initials(&spec_chain).unwrap();
                    union_pts.extend(sol.points);
                }
            }
            let union = NumericSolutionSet::from_points(union_pts, CLUSTER_TOL);
            assert!(
                sets_equal_tol(&direct, &union, MEMBERSHIP_TOL),
                "union property failed at {a}: direct {} vs union {}",
                direct.len(),
                union.len()
            );
        }
    }
}

/// Randomized WRSD outputs satisfy the split definition at sampled stable
/// points, and every output chain is genuinely regular.
#[test]
fn wrsd_outputs_are_valid_splits() {
    let mut r = rng(71);
    let mut checked = 0;
    for case in 0..8 {
        let ctx = small_ctx(1, 1 + (case % 2));
        let t = random_regular_chain(&mut r, &ctx);
        let p = random_poly(&mut r, &ctx, ctx.num_vars(), 2, 2);
        if p.is_zero() {
            continue;
        }
        let w = wrsd(&t, &p);
        for ch in w.h.iter().chain(w.g.iter()) {
            assert!(ch.is_regular(), "irregular output chain {ch}");
        }
        match is_wrsd_valid(&t, &p, &w.h, &w.g, 3, 900 + case as u64) {
            Ok(ok) => {
                assert!(ok, "wrsd output invalid for T={t}, P={p}");
                checked += 1;
            }
            Err(triadec::Error::SampleExhausted { .. }) => continue,
            Err(e) => panic!("unexpected oracle error: {e}"),
        }
    }
    assert!(checked >= 5);
}

/// Exact generic containment: every output chain's variety lies inside every
/// input hypersurface, witnessed by vanishing successive resultants.
#[test]
fn chains_lie_inside_every_input_hypersurface() {
    let mut r = rng(97);
    let mut systems: Vec<(Arc<Context>, Vec<Polynomial>)> = Vec::new();
    let ctx1 = small_ctx(1, 2);
    systems.push((
        ctx1.clone(),
        vec![
            triadec::parse::parse_poly(
                "(u1 - 1)*x2^2 + (x1^2 - 2*u1*x1 + u1^2 + 1)*x2 + x1^2 - x1",
                &ctx1,
            )
            .unwrap(),
            triadec::parse::parse_poly("(x1 - u1)*(x2 + 1)", &ctx1).unwrap(),
            triadec::parse::parse_poly("(x1 - u1)^2", &ctx1).unwrap(),
        ],
    ));
    for case in 0..6 {
        let ctx = small_ctx(1 + case % 2, 1 + case % 2);
        let t = random_regular_chain(&mut r, &ctx);
        // Use the chain itself as the system: its decomposition must cover it.
        systems.push((ctx, t.polys().to_vec()));
    }
    let mut checked = 0;
    for (_, system) in &systems {
        let d = match triadec::decompose::rdu_for_zd(system) {
            Ok(d) => d,
            Err(_) => continue,
        };
        for chain in &d.chains {
            for q in system {
                let res = successive_resultant(q, chain.polys());
                assert!(
                    res.is_zero(),
                    "chain {chain} escapes the hypersurface of {q}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 6);
}

use std::sync::Arc;
use triadec::context::Context;

/// Chains produced by full decompositions agree with the direct solver.
#[test]
fn decomposition_union_matches_direct_solver() {
    let ctx = small_ctx(2, 2);
    let system = [
        triadec::parse::parse_poly("u1*x2^2 + x1^2", &ctx).unwrap(),
        triadec::parse::parse_poly(
            "u1*x2^2 + u2*x1*x2 + (u1 + 1)*x1^2 + x1",
            &ctx,
        )
        .unwrap(),
    ];
    let d = triadec::decompose::rdu_for_zd(&system).unwrap();
    let pts = sample_stable_points(&d.rdu_factors, &ctx, 4, 31, 40).unwrap();
    let target = ctx.parameter_free();
    for a in &pts {
        let spec: Vec<Polynomial> = system.iter().map(|p| p.specialize_into(a, &target)).collect();
        let direct = solve_system(&spec).unwrap();
        let via = union_of_chain_solutions(&d.chains, a).unwrap();
        assert!(sets_equal_tol(&direct, &via, MEMBERSHIP_TOL));
    }
}
