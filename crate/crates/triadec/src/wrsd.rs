//! Weakly relatively simplicial decomposition: splitting a zero-dimensional
//! regular chain `T` by a polynomial `P` into chain families `H` (covering
//! `V(T ∪ {P})`) and `G` (covering `V(T) ∖ V(P)`) over the algebraic closure
//! of the rational-function field, plus a parameter-only factor set `F` off
//! whose variety the split is stable under specialization.

use crate::chains::{iterated_initial_resultant, RegularChainZD};
use crate::context::ParameterPoint;
use crate::error::{Error, Result};
use crate::factor::{content_wrt, squarefree_part_wrt, FactorSet};
use crate::oracle;
use crate::poly::Polynomial;
use crate::subres::{regular_indices, subresultant_chain, successive_resultant};

/// The triple `[H, G, F]`.
#[derive(Debug, Clone)]
pub struct WrsdResult {
    pub h: Vec<RegularChainZD>,
    pub g: Vec<RegularChainZD>,
    pub f: FactorSet,
}

/// Computes a WRSD of `T` w.r.t. `P` together with its stability factors.
pub fn wrsd(t: &RegularChainZD, p: &Polynomial) -> WrsdResult {
    let n = t.len();
    let maxdeg = t
        .polys()
        .iter()
        .map(|q| q.deg(q.mvar()))
        .chain(std::iter::once(p.total_degree()))
        .max()
        .unwrap_or(1);
    let bound = 4 * (n + 2) * (maxdeg + 2) + 16;
    let (h, g, f) = wrsd_rec(t, p, 0, bound);
    WrsdResult { h, g, f }
}

fn extend_chain(lower: &RegularChainZD, upper: &[Polynomial]) -> RegularChainZD {
    let mut polys = lower.polys().to_vec();
    polys.extend(upper.iter().cloned());
    RegularChainZD::new(polys).expect("extended chain is regular")
}

fn push_chain(lower: &RegularChainZD, top: &Polynomial) -> RegularChainZD {
    let mut polys = lower.polys().to_vec();
    polys.push(top.clone());
    RegularChainZD::new(polys).expect("pushed chain is regular")
}

/// Squarefree primitive part of a candidate chain element at level `x`.
/// Dropped content is accounted into `f`: class-0 content directly, positive
/// class content through its successive resultant w.r.t. the lower chain
/// (nonzero by regularity of the chain the element extends).
fn reduce_chain_element(
    q: &Polynomial,
    x: usize,
    lower: &[Polynomial],
    f: &mut FactorSet,
) -> Polynomial {
    let content = content_wrt(q, x);
    let pp = q.exact_div(&content).expect("content divides");
    if !content.is_rational() {
        if content.cls() == 0 {
            f.insert(&content);
        } else {
            let r = successive_resultant(&content, lower);
            assert!(!r.is_zero(), "content resultant vanished for {content}");
            f.insert(&r);
        }
    }
    squarefree_part_wrt(&pp, x).canonical_scaled()
}

fn wrsd_rec(
    t: &RegularChainZD,
    p: &Polynomial,
    depth: usize,
    bound: usize,
) -> (Vec<RegularChainZD>, Vec<RegularChainZD>, FactorSet) {
    assert!(depth < bound, "WRSD recursion exceeded its depth bound");
    let n = t.len();
    let mut f = FactorSet::new();
    f.insert(&iterated_initial_resultant(t));

    let p = p.sprem(t.polys());
    if p.is_zero() {
        return (vec![t.clone()], vec![], f);
    }
    if p.cls() == 0 {
        f.insert(&p);
        return (vec![], vec![t.clone()], f);
    }
    let c = p.cls();
    if c < n {
        let (h0, g0, f0) = wrsd_rec(&t.truncate(c), &p, depth + 1, bound);
        f.extend(&f0);
        let upper = &t.polys()[c..];
        let h = h0.iter().map(|ch| extend_chain(ch, upper)).collect();
        let g = g0.iter().map(|ch| extend_chain(ch, upper)).collect();
        return (h, g, f);
    }

    // cls(p) = n and p is reduced w.r.t. t.
    let r = successive_resultant(&p, t.polys());
    if !r.is_zero() {
        f.insert(&r);
        return (vec![], vec![t.clone()], f);
    }

    let tn = t.elem(n);
    let xn = tn.mvar();
    debug_assert!(tn.deg(xn) > p.deg(xn) && p.deg(xn) > 0);
    let reg = regular_indices(&subresultant_chain(tn, &p, xn));
    let upsilon = reg.upsilon();

    if n == 1 {
        let s_d1 = &reg.chain.s[reg.indices[1]];
        let h = vec![RegularChainZD::new(vec![s_d1.clone()]).expect("gcd chain is regular")];
        let q = tn.pquo(s_d1, xn);
        let q = reduce_chain_element(&q, xn, &[], &mut f);
        debug_assert!(q.deg(xn) > 0);
        let qc = RegularChainZD::new(vec![q]).expect("quotient chain is regular");
        let (_, g, f2) = wrsd_rec(&qc, &p, depth + 1, bound);
        f.extend(&f2);
        return (h, g, f);
    }

    let lower = t.truncate(n - 1);
    let upper_tn = std::slice::from_ref(tn);
    let s0 = reg.chain.s[0].clone();
    debug_assert!(s0.is_zero() || s0.cls() < n);
    let (h0, g0, f0) = wrsd_rec(&lower, &s0, depth + 1, bound);
    f.extend(&f0);

    let mut g_out: Vec<RegularChainZD> = g0.iter().map(|ch| extend_chain(ch, upper_tn)).collect();
    let mut h_out: Vec<RegularChainZD> = Vec::new();

    let mut h_prev = h0;
    let mut i = 0usize;
    while !h_prev.is_empty() {
        i += 1;
        assert!(
            i <= upsilon + 1,
            "regular subresultant refinement ran past the chain top"
        );
        let (r_di, s_di) = if i <= upsilon {
            let d = reg.indices[i];
            (reg.chain.principal_coefficient(d), reg.chain.s[d].clone())
        } else {
            (tn.initial(), tn.clone())
        };
        let mut h_i = Vec::new();
        let mut g_i = Vec::new();
        for hh in &h_prev {
            let (a, b, fw) = wrsd_rec(hh, &r_di, depth + 1, bound);
            h_i.extend(a);
            g_i.extend(b);
            f.extend(&fw);
        }
        for gg in &g_i {
            h_out.push(push_chain(gg, &s_di));
            let q = tn.pquo(&s_di, xn);
            let q = reduce_chain_element(&q, xn, gg.polys(), &mut f);
            if q.deg(xn) > 0 {
                let branch = push_chain(gg, &q);
                let (_, gb, fb) = wrsd_rec(&branch, &p, depth + 1, bound);
                g_out.extend(gb);
                f.extend(&fb);
            }
        }
        h_prev = h_i;
    }
    (h_out, g_out, f)
}

/// Numerically validates that `(H, G)` is a WRSD of `T` w.r.t. `P` at
/// `samples` random stable parameter points: the solution set of
/// `T(a) ∪ {P(a)}` must equal the union over `H`, the `P`-avoiding part of
/// `V(T(a))` the union over `G`, and every chain must specialize well.
pub fn is_wrsd_valid(
    t: &RegularChainZD,
    p: &Polynomial,
    h: &[RegularChainZD],
    g: &[RegularChainZD],
    samples: usize,
    seed: u64,
) -> Result<bool> {
    let ctx = p.context();
    let mut factors = wrsd(t, p).f;
    factors.insert(&iterated_initial_resultant(t));
    for ch in h.iter().chain(g.iter()) {
        factors.insert(&iterated_initial_resultant(ch));
    }
    let points = oracle::sample_stable_points(&factors, ctx, samples, seed, 50)?;
    for a in &points {
        if !check_split_at(t, p, h, g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_split_at(
    t: &RegularChainZD,
    p: &Polynomial,
    h: &[RegularChainZD],
    g: &[RegularChainZD],
    a: &ParameterPoint,
) -> Result<bool> {
    use crate::chains::specializes_well;
    if !specializes_well(t, a) {
        return Ok(false);
    }
    for ch in h.iter().chain(g.iter()) {
        if !specializes_well(ch, a) {
            return Ok(false);
        }
    }
    let pa = p.specialize(a);
    let t_sol = oracle::solve_chain(&t.specialize(a))?;
    let eval =
        |pt: &[num_complex::Complex64]| pa.eval_complex(pt).norm() <= oracle::MEMBERSHIP_TOL;
    let on_p: Vec<_> = t_sol
        .points
        .iter()
        .filter(|pt| eval(pt))
        .cloned()
        .collect();
    let off_p: Vec<_> = t_sol
        .points
        .iter()
        .filter(|pt| !eval(pt))
        .cloned()
        .collect();
    let h_sol = oracle::union_of_chain_solutions(h, a)?;
    let g_sol = oracle::union_of_chain_solutions(g, a)?;
    let lhs_h = oracle::NumericSolutionSet::from_points(on_p, t_sol.tol);
    let lhs_g = oracle::NumericSolutionSet::from_points(off_p, t_sol.tol);
    Ok(oracle::sets_equal(&lhs_h, &h_sol) && oracle::sets_equal(&lhs_g, &g_sol))
}

/// Convenience error used by callers that need a zero-dimensional regular
/// chain as input.
pub fn require_zero_dim_regular(polys: Vec<Polynomial>) -> Result<RegularChainZD> {
    let ctx = polys
        .first()
        .ok_or_else(|| Error::Precondition("empty chain".into()))?
        .context()
        .clone();
    if polys.len() != ctx.num_vars() {
        return Err(Error::Precondition(format!(
            "chain must have one element per variable ({} expected, {} given)",
            ctx.num_vars(),
            polys.len()
        )));
    }
    let chain = RegularChainZD::new(polys)?;
    if !chain.is_regular() {
        return Err(Error::Precondition(format!(
            "chain {chain} is not a regular chain"
        )));
    }
    Ok(chain)
}
