use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::context::{Context, ParameterPoint};

/// Exponent vector over the full indeterminate universe of a context.
///
/// Ordered graded-lexicographically: total degree first, ties broken from the
/// highest indeterminate down, so `BTreeMap` iteration ascends to the leading
/// term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn indet(len: usize, idx: usize, e: u32) -> Self {
        let mut v = vec![0; len];
        v[idx] = e;
        Monomial(v)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise quotient, `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut v = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            v.push(a - b);
        }
        Some(Monomial(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Q` in the ordered ring `K[U][X]`.
///
/// Canonical: no zero coefficients are stored, so two polynomials are equal
/// iff their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<Context>) -> Self {
        Polynomial::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &Arc<Context>, c: BigRational) -> Self {
        let mut p = Polynomial::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.num_indets()), c);
        }
        p
    }

    pub fn from_int(ctx: &Arc<Context>, c: i64) -> Self {
        Polynomial::constant(ctx, BigRational::from_integer(BigInt::from(c)))
    }

    /// The indeterminate with flat index `idx` as a polynomial.
    pub fn indet(ctx: &Arc<Context>, idx: usize) -> Self {
        let mut p = Polynomial::zero(ctx);
        p.terms.insert(
            Monomial::indet(ctx.num_indets(), idx, 1),
            BigRational::one(),
        );
        p
    }

    /// The variable `x_k` (1-based).
    pub fn var(ctx: &Arc<Context>, k: usize) -> Self {
        Polynomial::indet(ctx, ctx.var_index(k))
    }

    pub fn monomial(ctx: &Arc<Context>, mono: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(ctx);
        if !c.is_zero() {
            assert_eq!(mono.0.len(), ctx.num_indets());
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is a rational constant (including zero).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ctx(&self, other: &Polynomial) {
        assert_eq!(self.ctx, other.ctx, "polynomial context mismatch");
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ctx(other);
        let mut out = Polynomial::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    /// Multiplication by `indet^e`.
    pub fn mul_indet_pow(&self, idx: usize, e: u32) -> Polynomial {
        if e == 0 {
            return self.clone();
        }
        let shift = Monomial::indet(self.ctx.num_indets(), idx, e);
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.mul(&shift), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ctx);
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Leading degree w.r.t. an indeterminate; 0 when absent.
    pub fn deg(&self, idx: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.exponent(idx) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.total_degree() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Largest flat indeterminate index present, `None` for constants.
    pub fn max_indet(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate().rev() {
                if e > 0 {
                    best = Some(best.map_or(i, |b| b.max(i)));
                    break;
                }
            }
        }
        best
    }

    /// The class: largest `k` with `deg(f, x_k) > 0`, else 0.
    ///
    /// Panics on the zero polynomial.
    pub fn cls(&self) -> usize {
        assert!(!self.is_zero(), "class of the zero polynomial");
        match self.max_indet() {
            Some(idx) => self.ctx.var_position(idx).unwrap_or(0),
            None => 0,
        }
    }

    /// Main variable index (flat) of a positive-class polynomial.
    pub fn mvar(&self) -> usize {
        let c = self.cls();
        assert!(c > 0, "main variable of a class-0 polynomial");
        self.ctx.var_index(c)
    }

    /// Coefficient of `indet^k` as a polynomial in the remaining
    /// indeterminates.
    pub fn coeff_of(&self, idx: usize, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            if m.exponent(idx) as usize == k {
                let mut v = m.0.clone();
                v[idx] = 0;
                out.terms.insert(Monomial(v), c.clone());
            }
        }
        out
    }

    /// Leading coefficient w.r.t. an indeterminate.
    pub fn lc_wrt(&self, idx: usize) -> Polynomial {
        self.coeff_of(idx, self.deg(idx))
    }

    /// The initial: leading coefficient w.r.t. the main variable.
    pub fn initial(&self) -> Polynomial {
        self.lc_wrt(self.mvar())
    }

    /// The rank `mvar^deg` as `(flat index, degree)`.
    pub fn rank(&self) -> (usize, usize) {
        let x = self.mvar();
        (x, self.deg(x))
    }

    /// Dense coefficient list by ascending power of `idx`.
    pub fn univar_coeffs(&self, idx: usize) -> Vec<Polynomial> {
        let d = self.deg(idx);
        let mut out = vec![Polynomial::zero(&self.ctx); d + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(idx) as usize;
            let mut v = m.0.clone();
            v[idx] = 0;
            out[e].add_term(Monomial(v), c.clone());
        }
        out
    }

    pub fn from_univar(ctx: &Arc<Context>, idx: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(ctx);
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add_ref(&c.mul_indet_pow(idx, e as u32));
        }
        out
    }

    pub fn derivative(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exponent(idx);
            if e > 0 {
                let mut v = m.0.clone();
                v[idx] = e - 1;
                out.add_term(Monomial(v), c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Pseudo-division of `self` by `p` w.r.t. `idx`: returns `(quo, rem, k)`
    /// with `initial(p)^k * self = quo * p + rem` and `deg(rem, idx) <
    /// deg(p, idx)`. The multiplier count `k` is the number of reduction
    /// steps actually taken.
    pub fn pseudo_div(&self, p: &Polynomial, idx: usize) -> (Polynomial, Polynomial, u32) {
        self.assert_same_ctx(p);
        let dp = p.deg(idx);
        assert!(dp > 0, "pseudo-division by a polynomial of degree 0 in the chosen indeterminate");
        let init = p.lc_wrt(idx);
        let mut r = self.clone();
        let mut q = Polynomial::zero(&self.ctx);
        let mut k = 0u32;
        while !r.is_zero() && r.deg(idx) >= dp {
            let dr = r.deg(idx);
            let lr = r.lc_wrt(idx);
            let shift = lr.mul_indet_pow(idx, (dr - dp) as u32);
            r = init.mul_ref(&r).sub_ref(&shift.mul_ref(p));
            q = init.mul_ref(&q).add_ref(&shift);
            k += 1;
            debug_assert!(r.is_zero() || r.deg(idx) < dr);
        }
        (q, r, k)
    }

    /// Pseudo-remainder w.r.t. `idx`.
    pub fn prem(&self, p: &Polynomial, idx: usize) -> Polynomial {
        self.pseudo_div(p, idx).1
    }

    /// Pseudo-quotient w.r.t. `idx`.
    pub fn pquo(&self, p: &Polynomial, idx: usize) -> Polynomial {
        self.pseudo_div(p, idx).0
    }

    /// Pseudo-remainder w.r.t. the main variable of `p`.
    pub fn prem_mvar(&self, p: &Polynomial) -> Polynomial {
        self.prem(p, p.mvar())
    }

    /// Successive pseudo-remainder w.r.t. an ordered triangular sequence,
    /// reducing from the top element down.
    pub fn sprem(&self, chain: &[Polynomial]) -> Polynomial {
        let mut r = self.clone();
        for t in chain.iter().rev() {
            if r.is_zero() {
                return r;
            }
            r = r.prem_mvar(t);
        }
        r
    }

    /// Is `self` reduced w.r.t. every element of the sequence.
    pub fn is_reduced_wrt(&self, chain: &[Polynomial]) -> bool {
        chain.iter().all(|t| {
            let x = t.mvar();
            self.deg(x) < t.deg(x)
        })
    }

    /// Substitutes the parameters exactly; the result lives in the
    /// parameter-free context.
    pub fn specialize(&self, a: &ParameterPoint) -> Polynomial {
        self.specialize_into(a, &self.ctx.parameter_free())
    }

    /// Like [`specialize`](Self::specialize) with a caller-supplied target
    /// context (must be the parameter-free twin of this context).
    pub fn specialize_into(&self, a: &ParameterPoint, target: &Arc<Context>) -> Polynomial {
        let d = self.ctx.num_params();
        assert_eq!(a.len(), d, "parameter point dimension mismatch");
        assert_eq!(target.vars(), self.ctx.vars());
        assert_eq!(target.num_params(), 0);
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for (i, ai) in a.coords().iter().enumerate() {
                let e = m.exponent(i);
                for _ in 0..e {
                    coef *= ai;
                }
            }
            let vm = Monomial(m.0[d..].to_vec());
            out.add_term(vm, coef);
        }
        out
    }

    /// Exact evaluation of a class-0 polynomial at a parameter point.
    pub fn eval_params(&self, a: &ParameterPoint) -> BigRational {
        let d = self.ctx.num_params();
        assert_eq!(a.len(), d);
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            assert!(
                m.0[d..].iter().all(|&e| e == 0),
                "eval_params on a polynomial involving variables"
            );
            let mut coef = c.clone();
            for (i, ai) in a.coords().iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    coef *= ai;
                }
            }
            total += coef;
        }
        total
    }

    /// Exact division; `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ctx(g);
        assert!(!g.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = Polynomial::zero(&self.ctx);
        let (gm, gc) = g.terms.iter().next_back().unwrap();
        while !r.is_zero() {
            let (rm, rc) = r.terms.iter().next_back().unwrap();
            let mono = rm.div(gm)?;
            let coef = rc / gc;
            let t = Polynomial::monomial(&self.ctx, mono, coef);
            q = q.add_ref(&t);
            r = r.sub_ref(&t.mul_ref(g));
        }
        Some(q)
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of all exponent vectors: the largest monomial
    /// dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let len = self.ctx.num_indets();
        let mut min = match self.terms.keys().next() {
            Some(m) => m.0.clone(),
            None => return Monomial::one(len),
        };
        for m in self.terms.keys() {
            for (a, b) in min.iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
        }
        Monomial(min)
    }

    /// Scales to the canonical associate: integer coprime coefficients with
    /// positive leading (graded-lex) coefficient.
    pub fn canonical_scaled(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num_integer::gcd(num, c.numer() * &den / c.denom());
        }
        let mut scale = BigRational::new(den, num);
        if self.leading_term().unwrap().1 * &scale < BigRational::zero() {
            scale = -scale;
        }
        self.mul_scalar(&scale)
    }

    /// Evaluates at a full complex point (one value per indeterminate of the
    /// context).
    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        use num_complex::Complex64;
        assert_eq!(point.len(), self.ctx.num_indets());
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = Complex64::new(rational_to_f64(c), 0.0);
            for (i, z) in point.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    v *= z;
                }
            }
            total += v;
        }
        total
    }
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    // BigRational -> f64 with enough headroom for desk-scale coefficients.
    let n = c.numer();
    let d = c.denom();
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.ctx.cmp(&other.ctx) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_poly(self))
    }
}
