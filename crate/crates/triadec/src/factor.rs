//! Multivariate gcd, content/primitive splitting, squarefree decomposition
//! and the coprime factor sets used for stability bookkeeping.
//!
//! Full irreducible factorization is deliberately out of scope: pairwise
//! coprime squarefree primitive factors are enough for every downstream use,
//! since any nonzero multiple of the true instability polynomial generates a
//! valid excluded variety.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::context::ParameterPoint;
use crate::poly::Polynomial;

/// Multivariate gcd via primitive pseudo-remainder sequences, returned as a
/// canonical associate (integer coprime coefficients, positive leading
/// coefficient).
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.canonical_scaled();
    }
    if g.is_zero() {
        return f.canonical_scaled();
    }
    gcd_inner(f, g).canonical_scaled()
}

/// Dense rational coefficient vector of the univariate image of `f` with
/// every indeterminate except `x` evaluated at `point`.
fn univar_image(f: &Polynomial, x: usize, point: &[BigRational]) -> Vec<BigRational> {
    use num_traits::Zero;
    let mut out = vec![BigRational::zero(); f.deg(x) + 1];
    for (m, c) in f.terms() {
        let mut v = c.clone();
        for (i, a) in point.iter().enumerate() {
            if i == x {
                continue;
            }
            for _ in 0..m.exponent(i) {
                v *= a;
            }
        }
        out[m.exponent(x) as usize] += v;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

fn univar_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    use num_traits::Zero;
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    loop {
        if b.len() == 1 && b[0].is_zero() {
            return a.len() - 1;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a mod b (monic reduction).
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap() / &lb;
            for (i, bc) in b.iter().enumerate() {
                let t = bc * &factor;
                a[i + shift] -= t;
            }
            a.pop();
            if a.is_empty() {
                a.push(BigRational::zero());
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Upper bound on `deg(gcd(f, g), x)` from a univariate image with a live
/// leading coefficient; exact for generic evaluation points. `None` when no
/// usable point was found.
fn image_gcd_degree_bound(f: &Polynomial, g: &Polynomial, x: usize) -> Option<usize> {
    use num_traits::Zero;
    let n = f.context().num_indets();
    let seeds: [i64; 4] = [3, -2, 5, 7];
    for (t, base) in seeds.iter().enumerate() {
        let point: Vec<BigRational> = (0..n)
            .map(|i| BigRational::from_integer(((base + (i as i64) * 3 + (t as i64)) | 1).into()))
            .collect();
        let fa = univar_image(f, x, &point);
        if fa.len() != f.deg(x) + 1 {
            continue;
        }
        let ga = univar_image(g, x, &point);
        if ga.len() == 1 && ga[0].is_zero() {
            continue;
        }
        return Some(univar_gcd_degree(fa, ga));
    }
    None
}

fn gcd_inner(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ctx = f.context();
    if f.is_rational() || g.is_rational() {
        return Polynomial::one(ctx);
    }
    let x = f.max_indet().unwrap().max(g.max_indet().unwrap());
    if f.deg(x) == 0 {
        return gcd_inner(f, &content_wrt(g, x));
    }
    if g.deg(x) == 0 {
        return gcd_inner(&content_wrt(f, x), g);
    }
    let (cf, fp) = primitive_split(f, x);
    let (cg, gp) = primitive_split(g, x);
    let c = gcd_inner(&cf, &cg);

    let (a, b) = if fp.deg(x) >= gp.deg(x) {
        (fp, gp)
    } else {
        (gp, fp)
    };
    let deg_b = b.deg(x);

    match image_gcd_degree_bound(&a, &b, x) {
        Some(0) => c,
        Some(bound) => {
            // The image bounds the gcd degree from above. Every nonzero
            // subresultant lies in the ideal <a, b>, so a chain member that
            // exactly divides both inputs is an associate of the gcd; scan
            // down from the bound until one does.
            if bound >= deg_b && a.exact_div(&b).is_some() {
                return c.mul_ref(&b);
            }
            for j in (1..=bound.min(deg_b.saturating_sub(1))).rev() {
                let s = crate::detpoly::det_subresultant(&a, &b, x, j);
                if s.is_zero() {
                    continue;
                }
                let cand = primitive_split(&s, x).1;
                if cand.deg(x) == 0 {
                    continue;
                }
                if a.exact_div(&cand).is_some() && b.exact_div(&cand).is_some() {
                    return c.mul_ref(&cand);
                }
            }
            c
        }
        None => c.mul_ref(&gcd_by_chain(a, b, x)),
    }
}

/// Fallback pseudo-remainder route when no image point certifies a degree
/// bound: the lowest nonzero subresultant of the primitive parts.
fn gcd_by_chain(mut a: Polynomial, mut b: Polynomial, x: usize) -> Polynomial {
    if a.deg(x) == b.deg(x) {
        let r = a.prem(&b, x);
        if r.is_zero() {
            return primitive_split(&b, x).1;
        }
        if r.deg(x) == 0 {
            return Polynomial::one(a.context());
        }
        a = b;
        b = primitive_split(&r, x).1;
    }
    let chain = crate::subres::subresultant_chain(&a, &b, x);
    let lambda = chain
        .s
        .iter()
        .position(|s| !s.is_zero())
        .expect("the g slot of a subresultant chain is nonzero");
    if lambda == 0 {
        return Polynomial::one(a.context());
    }
    primitive_split(&chain.s[lambda], x).1
}

/// Content of `f` w.r.t. `x`: gcd of the coefficients of the powers of `x`.
pub fn content_wrt(f: &Polynomial, x: usize) -> Polynomial {
    let mut c = Polynomial::zero(f.context());
    for coeff in f.univar_coeffs(x) {
        if coeff.is_zero() {
            continue;
        }
        c = gcd(&c, &coeff);
        if c.is_one() {
            break;
        }
    }
    c
}

/// Splits `f = content * primitive_part` w.r.t. `x`.
pub fn primitive_split(f: &Polynomial, x: usize) -> (Polynomial, Polynomial) {
    let c = content_wrt(f, x);
    let pp = f.exact_div(&c).expect("content must divide");
    (c, pp)
}

/// Squarefree part of `f` w.r.t. `x`: the product of its distinct prime
/// factors that involve `x`, times the content.
pub fn squarefree_part_wrt(f: &Polynomial, x: usize) -> Polynomial {
    let d = f.derivative(x);
    if d.is_zero() {
        return f.clone();
    }
    let g = gcd(f, &d);
    f.exact_div(&g).expect("gcd must divide")
}

/// Squarefree decomposition of a polynomial primitive w.r.t. `x`: returns
/// `(part, multiplicity)` pairs with pairwise coprime squarefree parts whose
/// weighted product is an associate of the input.
fn squarefree_decomp(f: &Polynomial, x: usize) -> Vec<(Polynomial, u32)> {
    if f.deg(x) == 0 {
        return vec![];
    }
    let d = f.derivative(x);
    let g = gcd(f, &d);
    if g.is_rational() {
        return vec![(f.canonical_scaled(), 1)];
    }
    let w = f.exact_div(&g).expect("gcd divides f");
    let rest = squarefree_decomp(&g, x);
    // Multiplicity-1 part: distinct primes of f not dividing g.
    let p1 = w.exact_div(&gcd(&w, &g)).expect("gcd divides");
    let mut out = Vec::new();
    if !p1.is_rational() {
        out.push((p1.canonical_scaled(), 1));
    }
    for (q, m) in rest {
        out.push((q, m + 1));
    }
    out
}

/// Full recursive decomposition into pairwise coprime squarefree primitive
/// factors with multiplicities. The product of `factor^multiplicity` over the
/// result is a rational multiple of the input.
pub fn factor_multiplicities(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let ctx = f.context();
    let mut out: Vec<(Polynomial, u32)> = Vec::new();
    let mut work = f.clone();

    let mono = work.monomial_content();
    if !mono.is_one() {
        for i in 0..ctx.num_indets() {
            let e = mono.exponent(i);
            if e > 0 {
                out.push((Polynomial::indet(ctx, i), e));
            }
        }
        let m = Polynomial::monomial(ctx, mono, BigRational::one());
        work = work.exact_div(&m).expect("monomial content divides");
    }
    if work.is_rational() {
        return out;
    }
    let x = work.max_indet().unwrap();
    let (content, pp) = primitive_split(&work, x);
    if !content.is_rational() {
        out.extend(factor_multiplicities(&content));
    }
    out.extend(squarefree_decomp(&pp, x));
    out
}

/// The set of pairwise-coprime squarefree primitive non-unit factors of `f`.
/// Constants map to the empty set.
pub fn squarefree_primitive_factors(f: &Polynomial) -> BTreeSet<Polynomial> {
    factor_multiplicities(f)
        .into_iter()
        .map(|(p, _)| p.canonical_scaled())
        .collect()
}

/// A deduplicated set of pairwise coprime squarefree primitive factors,
/// canonically scaled. Used for the stability polynomial `F`: the represented
/// value is the product of all members (1 when empty).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorSet {
    factors: BTreeSet<Polynomial>,
}

impl FactorSet {
    pub fn new() -> Self {
        FactorSet::default()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.factors.iter()
    }

    /// Splits `f` into squarefree primitive factors and inserts each,
    /// refining against existing members so the set stays pairwise coprime.
    /// Panics on zero input: a vanishing stability factor would exclude the
    /// whole parameter space.
    pub fn insert(&mut self, f: &Polynomial) {
        assert!(!f.is_zero(), "zero polynomial inserted into a factor set");
        for (p, _) in factor_multiplicities(f) {
            self.insert_coprime(p.canonical_scaled());
        }
    }

    fn insert_coprime(&mut self, q: Polynomial) {
        if q.is_rational() {
            return;
        }
        let mut hit: Option<(Polynomial, Polynomial)> = None;
        for r in &self.factors {
            if *r == q {
                return;
            }
            let g = gcd(&q, r);
            if !g.is_rational() {
                hit = Some((r.clone(), g));
                break;
            }
        }
        match hit {
            Some((old, g)) => {
                let r2 = old.exact_div(&g).expect("gcd divides").canonical_scaled();
                let q2 = q.exact_div(&g).expect("gcd divides").canonical_scaled();
                self.factors.remove(&old);
                self.insert_coprime(g.canonical_scaled());
                self.insert_coprime(r2);
                self.insert_coprime(q2);
            }
            None => {
                self.factors.insert(q);
            }
        }
    }

    pub fn extend(&mut self, other: &FactorSet) {
        for p in &other.factors {
            self.insert(p);
        }
    }

    /// The represented polynomial: the product of all factors.
    pub fn product(&self) -> Polynomial {
        let mut iter = self.factors.iter();
        match iter.next() {
            None => panic!("product of an empty factor set has no context"),
            Some(first) => {
                let mut acc = first.clone();
                for p in iter {
                    acc = acc.mul_ref(p);
                }
                acc
            }
        }
    }

    /// True when no factor vanishes at the point (vacuously true when empty).
    pub fn none_vanish_at(&self, a: &ParameterPoint) -> bool {
        use num_traits::Zero;
        self.factors
            .iter()
            .all(|p| !p.eval_params(a).is_zero())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.factors.contains(&p.canonical_scaled())
    }
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{{1}}");
        }
        let parts: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl FromIterator<Polynomial> for FactorSet {
    fn from_iter<T: IntoIterator<Item = Polynomial>>(iter: T) -> Self {
        let mut fs = FactorSet::new();
        for p in iter {
            fs.insert(&p);
        }
        fs
    }
}
