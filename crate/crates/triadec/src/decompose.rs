//! Assembling generic regular decompositions: converting characteristic-set
//! branches into zero-dimensional regular chains and collecting the RDU
//! factor set, plus the non-redundant characteristic-set decomposition.

use std::fmt;

use crate::chains::{
    is_regular_chain, iterated_initial_resultant, AscendingChain, RegularChainZD, TriangularSet,
};
use crate::error::{Error, Result};
use crate::factor::{content_wrt, FactorSet};
use crate::poly::Polynomial;
use crate::subres::successive_resultant;
use crate::wrsd::wrsd;
use crate::wu::{wu_decompose, WuDecomposition};

/// Where a chain came from: the branch of the characteristic-set tree and a
/// human-readable trace of the conversion steps.
#[derive(Debug, Clone)]
pub struct ChainProvenance {
    pub wu_branch: usize,
    pub trace: String,
}

/// A generic regular decomposition: zero-dimensional regular chains and the
/// RDU factor set. Off the variety of the factors, specialization preserves
/// both the solution set and every chain's rank.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub chains: Vec<RegularChainZD>,
    pub rdu_factors: FactorSet,
    pub provenance: Vec<ChainProvenance>,
    pub wu: WuDecomposition,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chains ({}):", self.chains.len())?;
        for t in &self.chains {
            writeln!(f, "  {t}")?;
        }
        write!(f, "rdu factors: {}", self.rdu_factors)
    }
}

/// Converts a triangular set with full main-variable coverage into
/// zero-dimensional regular chains covering `V(T ∖ I_T)` over the closure of
/// the rational-function field, with stability factors.
pub fn zd_to_rc(t: &TriangularSet) -> Result<(Vec<RegularChainZD>, FactorSet)> {
    if !t.covers_all_variables() {
        return Err(Error::Precondition(format!(
            "triangular set {t} does not cover all variables"
        )));
    }
    zd_to_rc_rec(t.polys(), 0, 0)
}

fn zd_to_rc_rec(
    polys: &[Polynomial],
    min_k: usize,
    depth: usize,
) -> Result<(Vec<RegularChainZD>, FactorSet)> {
    let n = polys.len();
    assert!(depth <= n, "ZDToRC recursion exceeded the variable count");
    // Minimal k with a regular prefix of length k and irregular k+1; the
    // whole chain being regular is the base case.
    let mut k = n;
    for i in 1..n {
        let r = successive_resultant(&polys[i].initial(), &polys[..i]);
        if r.is_zero() {
            k = i;
            break;
        }
    }
    if k == n {
        let chain = RegularChainZD::new(polys.to_vec())?;
        let mut f = FactorSet::new();
        f.insert(&iterated_initial_resultant(&chain));
        return Ok((vec![chain], f));
    }
    debug_assert!(k > min_k, "minimal regular prefix failed to grow");

    let prefix = RegularChainZD::new(polys[..k].to_vec())?;
    let w = wrsd(&prefix, &polys[k].initial());
    if w.g.is_empty() {
        return Ok((vec![], w.f));
    }
    let mut f = w.f;
    let mut out = Vec::new();
    for gg in &w.g {
        let mut rest = gg.polys().to_vec();
        rest.extend(polys[k..].iter().cloned());
        let (sub, f2) = zd_to_rc_rec(&rest, k, depth + 1)?;
        out.extend(sub);
        f.extend(&f2);
    }
    Ok((out, f))
}

/// Normalizes a chain for output: every element primitive w.r.t. its main
/// variable with integer coprime coefficients and positive leading
/// coefficient. Dropped content is charged to the factor set through its
/// successive resultant w.r.t. the lower chain.
fn normalize_chain(chain: &RegularChainZD, f: &mut FactorSet) -> RegularChainZD {
    let mut polys: Vec<Polynomial> = Vec::with_capacity(chain.len());
    for (i, q) in chain.polys().iter().enumerate() {
        let x = q.mvar();
        let content = content_wrt(q, x);
        let pp = q.exact_div(&content).expect("content divides");
        if !content.is_rational() {
            if content.cls() == 0 {
                f.insert(&content);
            } else {
                let r = successive_resultant(&content, &chain.polys()[..i]);
                assert!(!r.is_zero(), "chain content resultant vanished");
                f.insert(&r);
            }
        }
        polys.push(pp.canonical_scaled());
    }
    RegularChainZD::new(polys).expect("normalized chain stays regular")
}

fn run_pipeline(system: &[Polynomial]) -> Result<PipelineOutput> {
    let live: Vec<Polynomial> = system.iter().filter(|p| !p.is_zero()).cloned().collect();
    if live.is_empty() {
        return Err(Error::Precondition(
            "the system has no nonzero polynomials".into(),
        ));
    }
    let ctx = live[0].context().clone();
    let wu = wu_decompose(&live);
    if let Some(t) = crate::wu::find_non_generic_chain(&wu) {
        let found = crate::chains::format_rank_set(
            &ctx,
            &crate::chains::rank_set(t.polys()),
        );
        return Err(Error::NotGenericZeroDimensional {
            chain: t.to_string(),
            found,
            expected: format!("{{{}}}", ctx.vars().join(", ")),
        });
    }

    let mut factors = FactorSet::new();
    let mut chains: Vec<RegularChainZD> = Vec::new();
    let mut provenance: Vec<ChainProvenance> = Vec::new();
    let mut branch_results: Vec<(usize, bool)> = Vec::new();

    for (bi, branch) in wu.branches.iter().enumerate() {
        for c0 in &branch.dropped_contents {
            factors.insert(c0);
        }
        match &branch.chain {
            AscendingChain::Contradictory(p) => {
                factors.insert(p);
                branch_results.push((bi, false));
            }
            AscendingChain::Chain(t) => {
                let (sub, f2) = zd_to_rc(t)?;
                factors.extend(&f2);
                branch_results.push((bi, !sub.is_empty()));
                for ch in sub {
                    let normalized = normalize_chain(&ch, &mut factors);
                    if !chains.contains(&normalized) {
                        chains.push(normalized);
                        provenance.push(ChainProvenance {
                            wu_branch: bi,
                            trace: format!("wu branch {bi} -> zd_to_rc"),
                        });
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..chains.len()).collect();
    order.sort_by(|&a, &b| chains[a].cmp(&chains[b]));
    let chains: Vec<RegularChainZD> = order.iter().map(|&i| chains[i].clone()).collect();
    let provenance: Vec<ChainProvenance> = order.iter().map(|&i| provenance[i].clone()).collect();

    for ch in &chains {
        debug_assert!(is_regular_chain(&ch.to_triangular()));
    }

    Ok(PipelineOutput {
        decomposition: Decomposition {
            chains,
            rdu_factors: factors,
            provenance,
            wu,
        },
        branch_results,
    })
}

struct PipelineOutput {
    decomposition: Decomposition,
    branch_results: Vec<(usize, bool)>,
}

/// Computes a generic regular decomposition and its RDU factor set for a
/// generic zero-dimensional system. Fails with a structured error when some
/// characteristic-set branch is positive-dimensional.
pub fn rdu_for_zd(system: &[Polynomial]) -> Result<Decomposition> {
    Ok(run_pipeline(system)?.decomposition)
}

/// The non-redundant characteristic-set decomposition: the branches whose
/// chain conversion produced at least one regular chain (exactly those with
/// nonempty generic variety), plus the same factor set.
pub fn nonredundant_wu(system: &[Polynomial]) -> Result<(Vec<AscendingChain>, FactorSet)> {
    let out = run_pipeline(system)?;
    let kept: Vec<AscendingChain> = out
        .branch_results
        .iter()
        .filter(|(_, nonempty)| *nonempty)
        .map(|(bi, _)| out.decomposition.wu.branches[*bi].chain.clone())
        .collect();
    Ok((kept, out.decomposition.rdu_factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::parse::parse_poly;
    use std::sync::Arc;

    fn ctx1() -> Arc<Context> {
        Context::new(vec!["u"], vec!["x1", "x2"])
    }

    fn p(c: &Arc<Context>, s: &str) -> Polynomial {
        parse_poly(s, c).unwrap()
    }

    fn example1(c: &Arc<Context>) -> Vec<Polynomial> {
        vec![
            p(c, "(u - 1)*x2^2 + (x1^2 - 2*u*x1 + u^2 + 1)*x2 + x1^2 - x1"),
            p(c, "(x1 - u)*(x2 + 1)"),
            p(c, "(x1 - u)^2"),
        ]
    }

    #[test]
    fn zd_to_rc_eliminates_redundant_branch() {
        let c = ctx1();
        let t = TriangularSet::new(vec![
            p(&c, "(x1 - u)^2"),
            p(&c, "(x1 - u)*(x2 + 1)"),
        ])
        .unwrap();
        let (chains, f) = zd_to_rc(&t).unwrap();
        assert!(chains.is_empty());
        assert!(f.is_empty());
    }

    #[test]
    fn zd_to_rc_keeps_regular_chain() {
        let c = ctx1();
        let t = TriangularSet::new(vec![
            p(&c, "x1 - u"),
            p(&c, "(u - 1)*x2^2 + x2 + u^2 - u"),
        ])
        .unwrap();
        let (chains, f) = zd_to_rc(&t).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].polys()[0], p(&c, "x1 - u"));
        assert!(f.contains(&p(&c, "u - 1")));
    }

    #[test]
    fn zd_to_rc_parameter_free() {
        let c = ctx1();
        let t = TriangularSet::new(vec![p(&c, "x1"), p(&c, "x2")]).unwrap();
        let (chains, f) = zd_to_rc(&t).unwrap();
        assert_eq!(chains.len(), 1);
        assert!(f.is_empty());
    }

    #[test]
    fn example1_decomposition() {
        let c = ctx1();
        let d = rdu_for_zd(&example1(&c)).unwrap();
        assert_eq!(d.chains.len(), 1);
        assert_eq!(
            d.chains[0].polys(),
            &[p(&c, "x1 - u"), p(&c, "(u - 1)*x2^2 + x2 + u^2 - u")]
        );
        let expected: FactorSet = [p(&c, "u - 1")].into_iter().collect();
        assert_eq!(d.rdu_factors, expected);
    }

    #[test]
    fn example1_nonredundant() {
        let c = ctx1();
        let (kept, f) = nonredundant_wu(&example1(&c)).unwrap();
        assert_eq!(kept.len(), 1);
        match &kept[0] {
            AscendingChain::Chain(t) => {
                assert_eq!(
                    t.polys(),
                    &[p(&c, "x1 - u"), p(&c, "(u - 1)*x2^2 + x2 + u^2 - u")]
                );
            }
            _ => panic!("expected a chain"),
        }
        assert!(f.contains(&p(&c, "u - 1")));
    }

    #[test]
    fn nonredundant_trivial() {
        let c = ctx1();
        let (kept, f) = nonredundant_wu(&[p(&c, "x1"), p(&c, "x2")]).unwrap();
        assert_eq!(kept.len(), 1);
        assert!(f.is_empty());
    }

    #[test]
    fn nonredundant_keeps_both_surviving_branches() {
        let c = Context::new(vec!["u1", "u2"], vec!["x1", "x2"]);
        let system = [
            p(&c, "u1*x2^2 + x1^2"),
            p(&c, "u1*x2^2 + u2*x1*x2 + (u1 + 1)*x1^2 + x1"),
        ];
        let (kept, f) = nonredundant_wu(&system).unwrap();
        assert_eq!(kept.len(), 2);
        assert!(kept.iter().all(|ch| !ch.is_contradictory()));
        for needed in ["u1", "u2", "u1^3 + u2^2"] {
            assert!(f.contains(&p(&c, needed)));
        }
    }

    #[test]
    fn zd_to_rc_with_deep_irregular_prefix() {
        // The first irregular step sits at position 3: the initial of the
        // last element vanishes on one branch of a parameter-free prefix.
        let c = Context::new(vec!["u"], vec!["x1", "x2", "x3"]);
        let t = TriangularSet::new(vec![
            p(&c, "x1^2 - x1"),
            p(&c, "x2 - x1"),
            p(&c, "x1*x3 + 1"),
        ])
        .unwrap();
        let (chains, _) = zd_to_rc(&t).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(
            chains[0].polys(),
            &[p(&c, "x1 - 1"), p(&c, "x2 - x1"), p(&c, "x1*x3 + 1")]
        );
    }

    #[test]
    fn non_generic_input_is_reported() {
        let c = ctx1();
        let err = rdu_for_zd(&[p(&c, "x1 - u")]).unwrap_err();
        match err {
            Error::NotGenericZeroDimensional { chain, .. } => {
                assert!(chain.contains("x1 - u"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
