//! Independent numeric verification: specialization at rational points,
//! simultaneous-iteration root finding, triangular backsolving, direct
//! elimination solving and solution-set comparison.
//!
//! The oracle is a read-only referee: its floating-point results never feed
//! back into exact computations. The elimination step uses exact
//! Sylvester-determinant resultants (see [`crate::detpoly`]), a route
//! independent of the pseudo-remainder machinery it is asked to judge.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::context::{Context, ParameterPoint};
use crate::detpoly::sylvester_resultant;
use crate::error::{Error, Result};
use crate::factor::FactorSet;
use crate::poly::{rational_to_f64, Polynomial};

/// Residual bound for accepting a root.
pub const ROOT_TOL: f64 = 1e-9;
/// Point clustering radius.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Membership bound for a point satisfying a system.
pub const MEMBERSHIP_TOL: f64 = 1e-6;

const MAX_ITERS: usize = 2000;
const DEFAULT_TUPLE_CAP: usize = 10_000;

/// A clustered set of numeric solution points in `C^n`.
#[derive(Debug, Clone)]
pub struct NumericSolutionSet {
    pub points: Vec<Vec<Complex64>>,
    pub tol: f64,
    /// Count before clustering (root multiplicities included).
    pub raw_count: usize,
}

impl NumericSolutionSet {
    pub fn from_points(points: Vec<Vec<Complex64>>, tol: f64) -> Self {
        let raw = points.len();
        NumericSolutionSet {
            points: cluster(points, tol),
            tol,
            raw_count: raw,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn coord_dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn cluster(points: Vec<Vec<Complex64>>, tol: f64) -> Vec<Vec<Complex64>> {
    let mut reps: Vec<Vec<Complex64>> = Vec::new();
    for p in points {
        if !reps.iter().any(|r| coord_dist(r, &p) <= 2.0 * tol) {
            reps.push(p);
        }
    }
    reps
}

fn horner_both(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        df = df * z + f;
        f = f * z + c;
    }
    (f, df)
}

/// All complex roots (with multiplicity) of a polynomial given by ascending
/// complex coefficients with nonzero leading coefficient, by the
/// Aberth-Ehrlich simultaneous iteration.
fn aberth_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    assert!(coeffs.len() >= 2, "root finding needs degree >= 1");
    let mut c = coeffs.to_vec();
    let mut roots: Vec<Complex64> = Vec::new();
    while c.len() > 1 && c[0].norm() == 0.0 {
        roots.push(Complex64::new(0.0, 0.0));
        c.remove(0);
    }
    let m = c.len() - 1;
    if m == 0 {
        return Ok(roots);
    }
    let lc = c[m];
    let monic: Vec<Complex64> = c.iter().map(|z| z / lc).collect();
    let radius = 1.0 + monic[..m].iter().map(|z| z.norm()).fold(0.0, f64::max);

    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let theta = 2.0 * PI * (k as f64) / (m as f64) + 0.45;
            let rad = radius * (0.35 + 0.55 * (k as f64 + 1.0) / (m as f64));
            Complex64::from_polar(rad, theta)
        })
        .collect();

    for _ in 0..MAX_ITERS {
        let mut moved = 0.0f64;
        for k in 0..m {
            let (fv, dv) = horner_both(&monic, z[k]);
            if fv.norm() == 0.0 {
                continue;
            }
            let w = if dv.norm() > 1e-300 {
                fv / dv
            } else {
                fv / Complex64::new(1e-300, 0.0)
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let mut d = z[k] - zj;
                    if d.norm() < 1e-14 {
                        d = Complex64::new(1e-14, 1e-14);
                    }
                    s += Complex64::new(1.0, 0.0) / d;
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let delta = if denom.norm() < 1e-300 { w } else { w / denom };
            z[k] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-14 * radius {
            break;
        }
    }

    // Newton polish: quadratic cleanup for simple roots, harmless at
    // multiple ones.
    for zk in z.iter_mut() {
        for _ in 0..6 {
            let (fv, dv) = horner_both(&monic, *zk);
            if dv.norm() < 1e-300 || fv.norm() == 0.0 {
                break;
            }
            let step = fv / dv;
            if step.norm() > 0.1 * (1.0 + zk.norm()) {
                break;
            }
            *zk -= step;
        }
    }

    let mut worst = 0.0f64;
    for zk in &z {
        let (fv, _) = horner_both(&monic, *zk);
        let scale: f64 = monic
            .iter()
            .enumerate()
            .map(|(i, ci)| ci.norm() * zk.norm().powi(i as i32))
            .sum::<f64>()
            + 1.0;
        worst = worst.max(fv.norm() / scale);
    }
    if worst > ROOT_TOL {
        return Err(Error::Convergence { worst });
    }
    roots.extend(z);
    Ok(roots)
}

/// All roots (with multiplicity) of a univariate polynomial given by
/// ascending complex coefficients; the leading coefficient must be nonzero.
pub fn roots_of_complex_univariate(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    aberth_roots(coeffs)
}

/// Complex roots of an exact parameter-free polynomial in exactly one
/// variable; clustered, multiplicities discarded. Root finding runs on the
/// exact squarefree factors, so repeated roots cost no accuracy.
pub fn univariate_roots(f: &Polynomial) -> Result<Vec<Complex64>> {
    let ctx = f.context();
    assert_eq!(ctx.num_params(), 0, "univariate_roots needs a parameter-free context");
    let x = f
        .max_indet()
        .expect("univariate_roots needs a nonconstant polynomial");
    let mut roots = Vec::new();
    for (factor, _) in crate::factor::factor_multiplicities(f) {
        if factor.deg(x) == 0 {
            continue;
        }
        let coeffs: Vec<Complex64> = factor
            .univar_coeffs(x)
            .iter()
            .map(|c| {
                let r = c.as_rational().expect("polynomial must be univariate");
                Complex64::new(rational_to_f64(&r), 0.0)
            })
            .collect();
        roots.extend(aberth_roots(&coeffs)?);
    }
    let pts: Vec<Vec<Complex64>> = roots.into_iter().map(|r| vec![r]).collect();
    Ok(cluster(pts, CLUSTER_TOL).into_iter().map(|p| p[0]).collect())
}

/// Backsolves a parameter-free triangular chain: roots of `T_1`, then for
/// each partial point the roots of the next element with the known
/// coordinates substituted. Rejects with a diagnostic when an initial
/// vanishes numerically, since regularity promises it cannot.
pub fn solve_chain(polys: &[Polynomial]) -> Result<NumericSolutionSet> {
    assert!(!polys.is_empty());
    let ctx = polys[0].context().clone();
    assert_eq!(ctx.num_params(), 0, "solve_chain needs a specialized chain");
    for (i, p) in polys.iter().enumerate() {
        assert_eq!(p.cls(), i + 1, "solve_chain needs consecutive main variables");
    }
    let mut partials: Vec<Vec<Complex64>> = vec![vec![]];
    for (i, t) in polys.iter().enumerate() {
        let x = ctx.var_index(i + 1);
        // Roots come from the exact squarefree factors with their known
        // multiplicities; structural repeated factors then cost no accuracy.
        let factors: Vec<(Polynomial, u32)> = crate::factor::factor_multiplicities(t)
            .into_iter()
            .filter(|(q, _)| q.deg(x) > 0)
            .collect();
        let initial = t.lc_wrt(x);
        let mut next: Vec<Vec<Complex64>> = Vec::new();
        for partial in &partials {
            let mut full = vec![Complex64::new(0.0, 0.0); ctx.num_indets()];
            full[..partial.len()].copy_from_slice(partial);
            let lead = initial.eval_complex(&full);
            if lead.norm() < CLUSTER_TOL {
                return Err(Error::InitialVanished {
                    element: t.to_string(),
                    value: lead.norm(),
                });
            }
            for (factor, mult) in &factors {
                let coeffs: Vec<Complex64> = factor
                    .univar_coeffs(x)
                    .iter()
                    .map(|c| c.eval_complex(&full))
                    .collect();
                if coeffs.last().unwrap().norm() < CLUSTER_TOL {
                    return Err(Error::InitialVanished {
                        element: factor.to_string(),
                        value: coeffs.last().unwrap().norm(),
                    });
                }
                for root in aberth_roots(&coeffs)? {
                    for _ in 0..*mult {
                        let mut pt = partial.clone();
                        pt.push(root);
                        next.push(pt);
                    }
                }
            }
        }
        partials = next;
    }
    Ok(NumericSolutionSet::from_points(partials, CLUSTER_TOL))
}

/// Backsolves a parameter-free triangular set, realizing the initial-free
/// part of its variety: fibers where some initial vanishes numerically are
/// dropped rather than reported as errors (those points belong to
/// `V(initials)`, which this solution set excludes by definition).
pub fn solve_triangular_off_initials(polys: &[Polynomial]) -> Result<NumericSolutionSet> {
    assert!(!polys.is_empty());
    let ctx = polys[0].context().clone();
    assert_eq!(ctx.num_params(), 0);
    let mut partials: Vec<Vec<Complex64>> = vec![vec![]];
    for t in polys.iter() {
        let c = t.cls();
        assert!(c > 0, "triangular element must involve a variable");
        let x = ctx.var_index(c);
        let factors: Vec<(Polynomial, u32)> = crate::factor::factor_multiplicities(t)
            .into_iter()
            .filter(|(q, _)| q.deg(x) > 0)
            .collect();
        let initial = t.lc_wrt(x);
        let mut next: Vec<Vec<Complex64>> = Vec::new();
        for partial in &partials {
            let mut full = vec![Complex64::new(0.0, 0.0); ctx.num_indets()];
            for (k, v) in partial.iter().enumerate() {
                full[k] = *v;
            }
            if initial.eval_complex(&full).norm() < CLUSTER_TOL {
                continue;
            }
            for (factor, _) in &factors {
                let coeffs: Vec<Complex64> = factor
                    .univar_coeffs(x)
                    .iter()
                    .map(|cf| cf.eval_complex(&full))
                    .collect();
                if coeffs.last().unwrap().norm() < CLUSTER_TOL {
                    continue;
                }
                for root in aberth_roots(&coeffs)? {
                    let mut pt = partial.clone();
                    while pt.len() < x {
                        // Gap variables (class jumps) stay free only in
                        // positive dimension; zero-dimensional callers never
                        // hit this.
                        pt.push(Complex64::new(0.0, 0.0));
                    }
                    pt.push(root);
                    next.push(pt);
                }
            }
        }
        partials = next;
    }
    Ok(NumericSolutionSet::from_points(partials, CLUSTER_TOL))
}

/// Union of the solutions of several chains specialized at `a`.
pub fn union_of_chain_solutions(
    chains: &[crate::chains::RegularChainZD],
    a: &ParameterPoint,
) -> Result<NumericSolutionSet> {
    let mut pts = Vec::new();
    for ch in chains {
        let sol = solve_chain(&ch.specialize(a))?;
        pts.extend(sol.points);
    }
    Ok(NumericSolutionSet::from_points(pts, CLUSTER_TOL))
}

/// Solves a parameter-free system by resultant elimination down to one
/// univariate candidate polynomial per coordinate, explicit tuple
/// enumeration and membership filtering. Independent of the chain pipeline.
pub fn solve_system(polys: &[Polynomial]) -> Result<NumericSolutionSet> {
    solve_system_capped(polys, DEFAULT_TUPLE_CAP)
}

pub fn solve_system_capped(polys: &[Polynomial], cap: usize) -> Result<NumericSolutionSet> {
    let live: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if live.is_empty() {
        return Err(Error::Degenerate("no nonzero polynomials".into()));
    }
    let ctx = live[0].context().clone();
    assert_eq!(ctx.num_params(), 0, "solve_system needs a specialized system");
    if live.iter().any(|p| p.is_rational()) {
        // A nonzero rational equation has no solutions.
        return Ok(NumericSolutionSet::from_points(vec![], CLUSTER_TOL));
    }
    let n = ctx.num_vars();

    let mut axis_roots: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for target in 1..=n {
        match eliminate_to_axis(&live, &ctx, target)? {
            AxisCandidates::Empty => {
                return Ok(NumericSolutionSet::from_points(vec![], CLUSTER_TOL))
            }
            AxisCandidates::Roots(r) => axis_roots.push(r),
        }
    }

    let mut total: usize = 1;
    for r in &axis_roots {
        total = total.saturating_mul(r.len().max(1));
    }
    if total > cap {
        return Err(Error::TupleCap { got: total, cap });
    }

    let mut kept: Vec<Vec<Complex64>> = Vec::new();
    let mut tuple = vec![Complex64::new(0.0, 0.0); n];
    enumerate_tuples(&axis_roots, 0, &mut tuple, &mut |t| {
        let ok = live.iter().all(|p| p.eval_complex(t).norm() <= MEMBERSHIP_TOL);
        if ok {
            kept.push(t.to_vec());
        }
    });
    Ok(NumericSolutionSet::from_points(kept, CLUSTER_TOL))
}

enum AxisCandidates {
    Empty,
    Roots(Vec<Complex64>),
}

fn enumerate_tuples(
    axes: &[Vec<Complex64>],
    i: usize,
    tuple: &mut Vec<Complex64>,
    visit: &mut impl FnMut(&[Complex64]),
) {
    if i == axes.len() {
        visit(tuple);
        return;
    }
    for z in &axes[i] {
        tuple[i] = *z;
        enumerate_tuples(axes, i + 1, tuple, visit);
    }
}

/// Eliminates every variable except `x_target` by exact Sylvester
/// resultants, returning the union of candidate roots of the surviving
/// univariate polynomials.
fn eliminate_to_axis(
    polys: &[Polynomial],
    ctx: &Arc<Context>,
    target: usize,
) -> Result<AxisCandidates> {
    let n = ctx.num_vars();
    let mut work: Vec<Polynomial> = polys.to_vec();
    for j in (1..=n).rev() {
        if j == target {
            continue;
        }
        let xj = ctx.var_index(j);
        let (with, without): (Vec<Polynomial>, Vec<Polynomial>) =
            work.into_iter().partition(|p| p.deg(xj) > 0);
        let mut next = without;
        if with.len() >= 2 {
            let pivot = with
                .iter()
                .min_by_key(|p| (p.deg(xj), p.num_terms()))
                .unwrap()
                .clone();
            for q in &with {
                if *q == pivot {
                    continue;
                }
                let r = sylvester_resultant(q, &pivot, xj);
                if r.is_zero() {
                    continue;
                }
                if r.is_rational() {
                    return Ok(AxisCandidates::Empty);
                }
                next.push(r);
            }
        }
        work = next;
        if work.is_empty() {
            return Err(Error::Degenerate(format!(
                "no constraints survive elimination towards x{target}"
            )));
        }
    }
    let xt = ctx.var_index(target);
    let mut roots: Vec<Complex64> = Vec::new();
    let mut found = false;
    for p in &work {
        if p.deg(xt) > 0 {
            found = true;
            roots.extend(univariate_roots(p)?);
        }
    }
    if !found {
        return Err(Error::Degenerate(format!(
            "no univariate candidate polynomial for x{target}"
        )));
    }
    Ok(AxisCandidates::Roots(cluster_axis(roots)))
}

fn cluster_axis(roots: Vec<Complex64>) -> Vec<Complex64> {
    let mut reps: Vec<Complex64> = Vec::new();
    for r in roots {
        if !reps.iter().any(|p| (p - r).norm() <= 2.0 * CLUSTER_TOL) {
            reps.push(r);
        }
    }
    reps
}

/// Symmetric matching of two clustered sets within a tolerance: greedy
/// nearest-neighbor first, perfect bipartite matching as the fallback for
/// ambiguous configurations.
pub fn sets_equal(a: &NumericSolutionSet, b: &NumericSolutionSet) -> bool {
    sets_equal_tol(a, b, a.tol.max(b.tol))
}

pub fn sets_equal_tol(a: &NumericSolutionSet, b: &NumericSolutionSet, tol: f64) -> bool {
    // Distinctness is only meaningful at the comparison tolerance, so both
    // sides are re-clustered at tol/2 first; points the producers kept apart
    // by less than the tolerance collapse before matching.
    let ap = cluster(a.points.clone(), tol / 2.0);
    let bp = cluster(b.points.clone(), tol / 2.0);
    if ap.len() != bp.len() {
        return false;
    }
    let k = ap.len();
    if k == 0 {
        return true;
    }
    // Greedy pass.
    let mut used = vec![false; k];
    let mut greedy_ok = true;
    for p in &ap {
        let mut best: Option<(usize, f64)> = None;
        for (j, q) in bp.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = coord_dist(p, q);
            if d <= tol && best.map(|(_, bd)| d < bd).unwrap_or(true) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, _)) => used[j] = true,
            None => {
                greedy_ok = false;
                break;
            }
        }
    }
    if greedy_ok {
        return true;
    }
    // Kuhn's augmenting-path matching on the tolerance graph.
    let adj: Vec<Vec<usize>> = ap
        .iter()
        .map(|p| {
            bp.iter()
                .enumerate()
                .filter(|(_, q)| coord_dist(p, q) <= tol)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut matched = vec![usize::MAX; k];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], matched: &mut [usize]) -> bool {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                if matched[j] == usize::MAX || augment(matched[j], adj, seen, matched) {
                    matched[j] = i;
                    return true;
                }
            }
        }
        false
    }
    for i in 0..k {
        let mut seen = vec![false; k];
        if !augment(i, &adj, &mut seen, &mut matched) {
            return false;
        }
    }
    true
}

/// Draws `count` rational parameter points with numerator and denominator
/// bounded by `height`, rejecting points where any factor vanishes;
/// deterministic under `seed` with an independent stream per point index.
pub fn sample_stable_points(
    factors: &FactorSet,
    ctx: &Arc<Context>,
    count: usize,
    seed: u64,
    height: i64,
) -> Result<Vec<ParameterPoint>> {
    let d = ctx.num_params();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64 + 1);
        let mut found = false;
        for _ in 0..1000 {
            let coords: Vec<BigRational> = (0..d)
                .map(|_| {
                    let num: i64 = rng.gen_range(-height..=height);
                    let den: i64 = rng.gen_range(1..=height);
                    BigRational::new(num.into(), den.into())
                })
                .collect();
            let a = ParameterPoint::new(coords);
            if factors.none_vanish_at(&a) {
                out.push(a);
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::SampleExhausted { trials: 1000 * count });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::RegularChainZD;
    use crate::parse::parse_poly;

    fn free_ctx() -> Arc<Context> {
        Context::new(Vec::<String>::new(), vec!["x1".into(), "x2".into()])
    }

    fn p(c: &Arc<Context>, s: &str) -> Polynomial {
        parse_poly(s, c).unwrap()
    }

    fn close_to(a: Complex64, re: f64, im: f64) -> bool {
        (a - Complex64::new(re, im)).norm() < 1e-7
    }

    #[test]
    fn univariate_root_examples() {
        let c = free_ctx();
        let mut r = univariate_roots(&p(&c, "x1^2 - 4")).unwrap();
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_eq!(r.len(), 2);
        assert!(close_to(r[0], -2.0, 0.0) && close_to(r[1], 2.0, 0.0));

        let r = univariate_roots(&p(&c, "x1^2 + 1")).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|z| z.re.abs() < 1e-8 && (z.im.abs() - 1.0).abs() < 1e-8));

        // u = 1 specialization of x1^3 + u x1^2: double root at the origin
        // clusters to one point.
        let r = univariate_roots(&p(&c, "x1^3 + 2*x1^2")).unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn solve_chain_examples() {
        let c = free_ctx();
        let sol = solve_chain(&[p(&c, "x1 - 3"), p(&c, "x2^2 - x1")]).unwrap();
        assert_eq!(sol.len(), 2);
        assert_eq!(sol.raw_count, 2);
        let s3 = 3.0f64.sqrt();
        assert!(sol
            .points
            .iter()
            .all(|pt| close_to(pt[0], 3.0, 0.0) && (pt[1].re.abs() - s3).abs() < 1e-7));

        let sol = solve_chain(&[p(&c, "x1"), p(&c, "x2")]).unwrap();
        assert_eq!(sol.len(), 1);
        assert!(close_to(sol.points[0][0], 0.0, 0.0));

        // Example chain specialized at u = 2: x1 = 2, x2^2 + x2 + 2 = 0.
        let sol = solve_chain(&[p(&c, "x1 - 2"), p(&c, "x2^2 + x2 + 2")]).unwrap();
        assert_eq!(sol.len(), 2);
        assert_eq!(sol.raw_count, 2);
    }

    #[test]
    fn bezout_raw_count() {
        let c = free_ctx();
        let sol = solve_chain(&[p(&c, "x1^3 - x1"), p(&c, "x2^2 - x1")]).unwrap();
        assert_eq!(sol.raw_count, 6);
    }

    #[test]
    fn initial_vanishing_detected() {
        let c = free_ctx();
        // The x2-initial vanishes on the branch x1 = 0.
        let err = solve_chain(&[p(&c, "x1"), p(&c, "x1*x2^2 + 1")]).unwrap_err();
        match err {
            Error::InitialVanished { .. } => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn solve_system_examples() {
        let c = free_ctx();
        let sol = solve_system(&[p(&c, "x1^2"), p(&c, "x2")]).unwrap();
        assert_eq!(sol.len(), 1);
        assert!(close_to(sol.points[0][0], 0.0, 0.0));

        // Inconsistent system.
        let sol = solve_system(&[p(&c, "x1"), p(&c, "x1 - 1"), p(&c, "x2")]).unwrap();
        assert!(sol.is_empty());
    }

    #[test]
    fn system_matches_chain_union_at_stable_point() {
        // The first worked system at u = 2 equals its chain's solutions.
        let ctx = Context::new(vec!["u"], vec!["x1", "x2"]);
        let sys = [
            parse_poly(
                "(u - 1)*x2^2 + (x1^2 - 2*u*x1 + u^2 + 1)*x2 + x1^2 - x1",
                &ctx,
            )
            .unwrap(),
            parse_poly("(x1 - u)*(x2 + 1)", &ctx).unwrap(),
            parse_poly("(x1 - u)^2", &ctx).unwrap(),
        ];
        let chain = RegularChainZD::new(vec![
            parse_poly("x1 - u", &ctx).unwrap(),
            parse_poly("(u - 1)*x2^2 + x2 + u^2 - u", &ctx).unwrap(),
        ])
        .unwrap();
        let a = ParameterPoint::new(vec![BigRational::from_integer(2.into())]);
        let target = ctx.parameter_free();
        let spec: Vec<Polynomial> = sys.iter().map(|q| q.specialize_into(&a, &target)).collect();
        let direct = solve_system(&spec).unwrap();
        let via_chain = solve_chain(&chain.specialize(&a)).unwrap();
        assert!(sets_equal_tol(&direct, &via_chain, MEMBERSHIP_TOL));
    }

    #[test]
    fn excluded_point_still_solvable_directly() {
        // At u = 1 (on the excluded variety) the direct solver still works;
        // the chain no longer specializes well and its rank collapses.
        let ctx = Context::new(vec!["u"], vec!["x1", "x2"]);
        let sys = [
            parse_poly(
                "(u - 1)*x2^2 + (x1^2 - 2*u*x1 + u^2 + 1)*x2 + x1^2 - x1",
                &ctx,
            )
            .unwrap(),
            parse_poly("(x1 - u)*(x2 + 1)", &ctx).unwrap(),
            parse_poly("(x1 - u)^2", &ctx).unwrap(),
        ];
        let chain = RegularChainZD::new(vec![
            parse_poly("x1 - u", &ctx).unwrap(),
            parse_poly("(u - 1)*x2^2 + x2 + u^2 - u", &ctx).unwrap(),
        ])
        .unwrap();
        let one = ParameterPoint::new(vec![BigRational::from_integer(1.into())]);
        assert!(!crate::chains::specializes_well(&chain, &one));
        let spec_chain = chain.specialize(&one);
        assert_ne!(
            crate::chains::rank_set(&spec_chain),
            crate::chains::rank_set(chain.polys())
        );
        let target = ctx.parameter_free();
        let spec: Vec<Polynomial> = sys.iter().map(|q| q.specialize_into(&one, &target)).collect();
        let direct = solve_system(&spec).unwrap();
        assert_eq!(direct.len(), 1);
        assert!(close_to(direct.points[0][0], 1.0, 0.0));
        assert!(close_to(direct.points[0][1], 0.0, 0.0));
    }

    #[test]
    fn set_comparison() {
        let a = NumericSolutionSet::from_points(
            vec![vec![Complex64::new(0.0, 0.0)]],
            CLUSTER_TOL,
        );
        let empty = NumericSolutionSet::from_points(vec![], CLUSTER_TOL);
        assert!(sets_equal(&a, &a));
        assert!(!sets_equal(&a, &empty));

        let b = NumericSolutionSet::from_points(
            vec![vec![Complex64::new(1e-12, 0.0)]],
            CLUSTER_TOL,
        );
        assert!(sets_equal(&a, &b));
    }

    #[test]
    fn stable_sampling_avoids_factors() {
        let ctx = Context::new(vec!["u"], vec!["x1"]);
        let mut fs = FactorSet::new();
        fs.insert(&parse_poly("u - 1", &ctx).unwrap());
        let pts = sample_stable_points(&fs, &ctx, 5, 42, 50).unwrap();
        assert_eq!(pts.len(), 5);
        for a in &pts {
            assert!(fs.none_vanish_at(a));
        }
        // Deterministic under the seed.
        let pts2 = sample_stable_points(&fs, &ctx, 5, 42, 50).unwrap();
        assert_eq!(pts, pts2);

        let none = FactorSet::new();
        let pts = sample_stable_points(&none, &ctx, 3, 7, 50).unwrap();
        assert_eq!(pts.len(), 3);
    }
}
