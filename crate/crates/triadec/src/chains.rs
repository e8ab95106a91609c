//! Triangular sets, ascending chains, zero-dimensional regular chains, rank
//! sets and the specializes-well criterion.

use std::collections::BTreeSet;
use std::fmt;


use crate::context::ParameterPoint;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::subres::successive_resultant;

/// An ordered sequence `T_1, …, T_r` with strictly increasing classes, all
/// positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TriangularSet {
    polys: Vec<Polynomial>,
}

impl TriangularSet {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Precondition("empty triangular set".into()));
        }
        let mut last = 0usize;
        for p in &polys {
            if p.is_zero() {
                return Err(Error::Precondition("zero polynomial in triangular set".into()));
            }
            let c = p.cls();
            if c == 0 {
                return Err(Error::Precondition(format!(
                    "class-0 polynomial `{p}` in triangular set"
                )));
            }
            if c <= last {
                return Err(Error::Precondition(
                    "classes must strictly increase in a triangular set".into(),
                ));
            }
            last = c;
        }
        Ok(TriangularSet { polys })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Product of the initials.
    pub fn initial_product(&self) -> Polynomial {
        let mut acc = Polynomial::one(self.polys[0].context());
        for p in &self.polys {
            acc = acc.mul_ref(&p.initial());
        }
        acc
    }

    /// True when the main variables are exactly `x_1, …, x_n`.
    pub fn covers_all_variables(&self) -> bool {
        let ctx = self.polys[0].context();
        let n = ctx.num_vars();
        self.polys.len() == n && self.polys.iter().enumerate().all(|(i, p)| p.cls() == i + 1)
    }
}

impl fmt::Display for TriangularSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Either a characteristic-set candidate or a single nonzero parameter-only
/// polynomial witnessing inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AscendingChain {
    Contradictory(Polynomial),
    Chain(TriangularSet),
}

impl AscendingChain {
    pub fn is_contradictory(&self) -> bool {
        matches!(self, AscendingChain::Contradictory(_))
    }
}

impl fmt::Display for AscendingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AscendingChain::Contradictory(p) => write!(f, "{{{p}}} (contradictory)"),
            AscendingChain::Chain(t) => write!(f, "{t}"),
        }
    }
}

/// A zero-dimensional regular chain: `mvar(T_i) = x_i` for `i = 1..=len`,
/// with every initial having a nonzero successive resultant w.r.t. the chain
/// below it. Chains of length below `n` act on the truncated variable
/// universe `x_1..x_len`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegularChainZD {
    polys: Vec<Polynomial>,
}

impl RegularChainZD {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Precondition("empty regular chain".into()));
        }
        for (i, p) in polys.iter().enumerate() {
            if p.is_zero() || p.cls() != i + 1 {
                return Err(Error::Precondition(format!(
                    "element {} of a zero-dimensional chain must have class {}",
                    i + 1,
                    i + 1
                )));
            }
        }
        let chain = RegularChainZD { polys };
        debug_assert!(
            chain.is_regular(),
            "constructed chain is not regular: {chain}"
        );
        Ok(chain)
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn elem(&self, i: usize) -> &Polynomial {
        &self.polys[i - 1]
    }

    pub fn truncate(&self, k: usize) -> RegularChainZD {
        assert!(k >= 1 && k <= self.len());
        RegularChainZD {
            polys: self.polys[..k].to_vec(),
        }
    }

    pub fn to_triangular(&self) -> TriangularSet {
        TriangularSet::new(self.polys.clone()).expect("regular chain is triangular")
    }

    pub fn is_regular(&self) -> bool {
        is_regular_sequence(&self.polys)
    }

    /// Exact specialization of every element.
    pub fn specialize(&self, a: &ParameterPoint) -> Vec<Polynomial> {
        let target = self.polys[0].context().parameter_free();
        self.polys
            .iter()
            .map(|p| p.specialize_into(a, &target))
            .collect()
    }
}

impl fmt::Display for RegularChainZD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn is_regular_sequence(polys: &[Polynomial]) -> bool {
    for (i, p) in polys.iter().enumerate() {
        if p.is_zero() {
            return false;
        }
        if i == 0 {
            continue;
        }
        let r = successive_resultant(&p.initial(), &polys[..i]);
        if r.is_zero() {
            return false;
        }
    }
    true
}

/// Exact regular-chain test for a triangular set via iterated resultants.
pub fn is_regular_chain(t: &TriangularSet) -> bool {
    is_regular_sequence(t.polys())
}

/// The set of ranks `{mvar(T_i)^deg}` as `(variable position, degree)`
/// pairs; keyed by position so ranks compare across a specialization.
pub fn rank_set(polys: &[Polynomial]) -> BTreeSet<(usize, usize)> {
    polys
        .iter()
        .map(|p| {
            let (x, d) = p.rank();
            let k = p
                .context()
                .var_position(x)
                .expect("rank of a variable-free polynomial");
            (k, d)
        })
        .collect()
}

pub fn format_rank_set(ctx: &crate::context::Context, ranks: &BTreeSet<(usize, usize)>) -> String {
    let parts: Vec<String> = ranks
        .iter()
        .map(|(k, d)| {
            let name = &ctx.vars()[k - 1];
            if *d == 1 {
                name.clone()
            } else {
                format!("{name}^{d}")
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// The stability certificate `res(I_T, T)` of a regular chain: a nonzero
/// class-0 polynomial.
pub fn iterated_initial_resultant(t: &RegularChainZD) -> Polynomial {
    let init = t.to_triangular().initial_product();
    let r = successive_resultant(&init, t.polys());
    assert!(!r.is_zero(), "iterated initial resultant of a regular chain is nonzero");
    assert!(
        r.cls() == 0,
        "iterated initial resultant must be parameter-only, got {r}"
    );
    r
}

/// True iff the chain specializes well at `a`: the specialization of
/// `res(I_T, T)` is nonzero. The rank-preservation route is cross-checked in
/// debug builds.
pub fn specializes_well(t: &RegularChainZD, a: &ParameterPoint) -> bool {
    use num_traits::Zero;
    let primary = !iterated_initial_resultant(t).eval_params(a).is_zero();
    debug_assert_eq!(primary, specializes_well_by_rank(t, a));
    primary
}

/// The definitional route: `T(a)` is a regular chain of identical rank.
pub fn specializes_well_by_rank(t: &RegularChainZD, a: &ParameterPoint) -> bool {
    let spec = t.specialize(a);
    for (orig, s) in t.polys().iter().zip(&spec) {
        if s.is_zero() || s.cls() != orig.cls() {
            return false;
        }
        let x = orig.mvar();
        let sx = s.mvar();
        if s.deg(sx) != orig.deg(x) {
            return false;
        }
    }
    is_regular_sequence(&spec)
}
