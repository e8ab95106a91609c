//! Wu's characteristic set method: Ritt basic sets, the well-ordering
//! iteration and the full branch decomposition with provenance.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::chains::{AscendingChain, TriangularSet};
use crate::factor::factor_multiplicities;
use crate::poly::Polynomial;

const MAX_ROUNDS: usize = 10_000;

/// One branch of the decomposition: its characteristic set, the branch
/// system it was computed from, and any class-0 contents dropped from
/// pseudo-remainders along the way (these join the instability factors).
#[derive(Debug, Clone)]
pub struct WuBranch {
    pub chain: AscendingChain,
    pub system: Vec<Polynomial>,
    pub dropped_contents: Vec<Polynomial>,
}

/// The recursive family of characteristic sets covering the input variety.
#[derive(Debug, Clone)]
pub struct WuDecomposition {
    pub branches: Vec<WuBranch>,
    pub source: Vec<Polynomial>,
}

impl WuDecomposition {
    pub fn chains(&self) -> impl Iterator<Item = &AscendingChain> {
        self.branches.iter().map(|b| &b.chain)
    }
}

impl fmt::Display for WuDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.branches.iter().enumerate() {
            writeln!(f, "C{} = {}", i + 1, b.chain)?;
        }
        Ok(())
    }
}

/// Ritt rank comparison on polynomials: class, then leading degree, with
/// term count and canonical order as tie-breaks for determinism.
fn rank_key(p: &Polynomial) -> (usize, usize) {
    if p.is_rational() {
        return (0, 0);
    }
    let c = p.cls();
    if c == 0 {
        (0, p.total_degree())
    } else {
        (c, p.deg(p.mvar()))
    }
}

fn rank_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    rank_key(a)
        .cmp(&rank_key(b))
        .then_with(|| a.num_terms().cmp(&b.num_terms()))
        .then_with(|| a.cmp(b))
}

/// Ritt order on chains by their (class, degree) rank sequences; a strictly
/// longer chain with an equal prefix is lower.
fn chain_rank_lt(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let mut i = 0;
    loop {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => match rank_key(x).cmp(&rank_key(y)) {
                Ordering::Less => return true,
                Ordering::Greater => return false,
                Ordering::Equal => i += 1,
            },
            (Some(_), None) => return true,
            _ => return false,
        }
    }
}

/// A basic set of the pool: an ascending chain of minimal Ritt rank
/// contained in it. A class-0 member short-circuits to a contradictory
/// chain.
pub fn basic_set(pool: &BTreeSet<Polynomial>) -> AscendingChain {
    assert!(!pool.is_empty(), "basic set of an empty pool");
    if let Some(c0) = pool
        .iter()
        .filter(|p| p.cls() == 0)
        .min_by(|a, b| rank_cmp(a, b))
    {
        return AscendingChain::Contradictory(c0.clone());
    }
    let mut chain: Vec<Polynomial> = Vec::new();
    let mut last_cls = 0usize;
    loop {
        let next = pool
            .iter()
            .filter(|p| p.cls() > last_cls && p.is_reduced_wrt(&chain))
            .min_by(|a, b| rank_cmp(a, b));
        match next {
            Some(p) => {
                last_cls = p.cls();
                chain.push(p.clone());
            }
            None => break,
        }
    }
    AscendingChain::Chain(TriangularSet::new(chain).expect("basic set is triangular"))
}

/// Replaces a pseudo-remainder by the product of its distinct positive-class
/// factors; class-0 factors are returned separately for the stability
/// bookkeeping (over the rational-function field they are units). A
/// remainder that is itself class 0 is kept whole as an inconsistency
/// witness.
fn reduce_system_poly(r: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
    let ctx = r.context();
    if r.cls() == 0 {
        let mut part = Polynomial::one(ctx);
        for (q, _) in factor_multiplicities(r) {
            part = part.mul_ref(&q);
        }
        if part.is_rational() {
            part = r.canonical_scaled();
        }
        return (part, Vec::new());
    }
    let mut part = Polynomial::one(ctx);
    let mut dropped = Vec::new();
    for (q, _) in factor_multiplicities(r) {
        if q.cls() == 0 {
            dropped.push(q);
        } else {
            part = part.mul_ref(&q);
        }
    }
    (part.canonical_scaled(), dropped)
}

/// The well-ordering iteration: computes a characteristic set of the system
/// (every member pseudo-reduces to zero), together with the reduced
/// remainders that were adjoined and the dropped class-0 contents.
pub fn characteristic_set(
    system: &[Polynomial],
) -> (AscendingChain, Vec<Polynomial>, Vec<Polynomial>) {
    let mut pool: BTreeSet<Polynomial> = system
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.canonical_scaled())
        .collect();
    assert!(!pool.is_empty(), "characteristic set of an empty system");
    let mut adjoined = Vec::new();
    let mut dropped = Vec::new();
    let mut prev_rank: Option<Vec<Polynomial>> = None;

    for _ in 0..MAX_ROUNDS {
        let basic = basic_set(&pool);
        let chain = match &basic {
            AscendingChain::Contradictory(_) => return (basic, adjoined, dropped),
            AscendingChain::Chain(t) => t.polys().to_vec(),
        };
        if let Some(prev) = &prev_rank {
            assert!(
                chain_rank_lt(&chain, prev),
                "basic set rank failed to decrease: {:?} -> {:?}",
                prev.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                chain.iter().map(|p| p.to_string()).collect::<Vec<_>>()
            );
        }
        prev_rank = Some(chain.clone());

        let mut new_parts: Vec<Polynomial> = Vec::new();
        for p in &pool {
            if chain.contains(p) {
                continue;
            }
            let r = p.sprem(&chain);
            if r.is_zero() {
                continue;
            }
            let (part, c0) = reduce_system_poly(&r);
            dropped.extend(c0);
            if !pool.contains(&part) {
                new_parts.push(part);
            }
        }
        if new_parts.is_empty() {
            return (basic, adjoined, dropped);
        }
        for p in new_parts {
            adjoined.push(p.clone());
            pool.insert(p);
        }
    }
    panic!("characteristic set iteration exceeded {MAX_ROUNDS} rounds");
}

/// Full Wu decomposition: breadth-first over the branch systems
/// `P ∪ C ∪ {initial}`, skipping initials that are nonzero rationals (their
/// variety is empty) and deduplicating identical branch systems.
pub fn wu_decompose(system: &[Polynomial]) -> WuDecomposition {
    let source: Vec<Polynomial> = system
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.canonical_scaled())
        .collect();
    assert!(!source.is_empty(), "Wu decomposition of an empty system");

    let mut queue: VecDeque<Vec<Polynomial>> = VecDeque::new();
    let mut seen: BTreeSet<Vec<Polynomial>> = BTreeSet::new();
    let start = canonical_system(&source);
    seen.insert(start.clone());
    queue.push_back(start);

    let mut branches = Vec::new();
    while let Some(sys) = queue.pop_front() {
        let (chain, _, dropped) = characteristic_set(&sys);
        if let AscendingChain::Chain(t) = &chain {
            for elem in t.polys() {
                let init = elem.initial();
                if init.is_rational() {
                    continue;
                }
                let mut next = sys.clone();
                next.extend(t.polys().iter().cloned());
                next.push(init.canonical_scaled());
                let next = canonical_system(&next);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        branches.push(WuBranch {
            chain,
            system: sys,
            dropped_contents: dropped,
        });
    }
    WuDecomposition { branches, source }
}

fn canonical_system(polys: &[Polynomial]) -> Vec<Polynomial> {
    let set: BTreeSet<Polynomial> = polys.iter().map(|p| p.canonical_scaled()).collect();
    set.into_iter().collect()
}

/// A system is generic zero-dimensional when every non-contradictory chain
/// covers all variables.
pub fn is_generic_zero_dimensional(w: &WuDecomposition) -> bool {
    w.branches.iter().all(|b| match &b.chain {
        AscendingChain::Contradictory(_) => true,
        AscendingChain::Chain(t) => t.covers_all_variables(),
    })
}

/// First offending positive-dimensional chain, if any.
pub fn find_non_generic_chain(w: &WuDecomposition) -> Option<&TriangularSet> {
    w.branches.iter().find_map(|b| match &b.chain {
        AscendingChain::Chain(t) if !t.covers_all_variables() => Some(t),
        _ => None,
    })
}
