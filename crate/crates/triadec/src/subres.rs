//! Subresultant chains, regular subresultant chains, principal subresultant
//! coefficients, resultants and successive resultants.
//!
//! The chain is computed by a subresultant pseudo-remainder sequence with the
//! standard similarity coefficients, so every slot holds the exact
//! determinantal subresultant (unit tests compare against the
//! Sylvester-minor definition in [`crate::detpoly`]). The resultant has its
//! own pseudo-remainder recursion so the determinantal route stays an
//! independent cross-check.

use crate::poly::Polynomial;

/// Subresultant chain of `f` and `g` w.r.t. an indeterminate `x`, for
/// `deg(f,x) > deg(g,x) > 0`.
///
/// `s[j]` for `j <= mu = deg(g,x)` is the j-th subresultant with the
/// convention `s[mu] = g`, `s[mu+1] = f`; `deg(s[j], x) <= j` for `j <= mu`
/// and `s[0]` is the resultant.
#[derive(Debug, Clone)]
pub struct SubresultantChain {
    pub x: usize,
    pub f: Polynomial,
    pub g: Polynomial,
    pub s: Vec<Polynomial>,
}

impl SubresultantChain {
    pub fn mu(&self) -> usize {
        self.s.len() - 2
    }

    /// Principal subresultant coefficient `R_j`: the coefficient of `x^j` in
    /// `S_j`. The top slot (`j = deg(f,x)`) is the leading coefficient of
    /// `f`.
    pub fn principal_coefficient(&self, j: usize) -> Polynomial {
        let m = self.f.deg(self.x);
        if j == m {
            return self.f.lc_wrt(self.x);
        }
        assert!(j <= self.mu(), "principal coefficient index out of range");
        self.s[j].coeff_of(self.x, j)
    }

    /// The resultant slot `S_0`.
    pub fn resultant(&self) -> &Polynomial {
        &self.s[0]
    }
}

/// The regular subresultant chain: indices `d_0 = 0 < d_1 < … < d_v` where
/// `deg(S_{d_i}, x) = d_i` exactly for `i >= 1`.
#[derive(Debug, Clone)]
pub struct RegularSubresultantChain {
    pub chain: SubresultantChain,
    pub indices: Vec<usize>,
}

impl RegularSubresultantChain {
    /// Number of positive regular indices.
    pub fn upsilon(&self) -> usize {
        self.indices.len() - 1
    }
}

/// Pseudo-remainder with the canonical fixed multiplier
/// `lc(p)^(deg f - deg p + 1)`, as the subresultant similarity relations
/// require.
fn prem_fixed(f: &Polynomial, p: &Polynomial, x: usize) -> Polynomial {
    let (_, r, k) = f.pseudo_div(p, x);
    let full = (f.deg(x) + 1 - p.deg(x)) as u32;
    debug_assert!(k <= full);
    if k == full {
        r
    } else {
        r.mul_ref(&p.lc_wrt(x).pow(full - k))
    }
}

fn pow_poly(p: &Polynomial, e: usize) -> Polynomial {
    p.pow(e as u32)
}

/// Subresultant chain of `f` and `g` w.r.t. `x`; requires
/// `deg(f,x) > deg(g,x) > 0`.
pub fn subresultant_chain(f: &Polynomial, g: &Polynomial, x: usize) -> SubresultantChain {
    let m = f.deg(x);
    let l = g.deg(x);
    assert!(
        m > l && l > 0,
        "subresultant chain needs deg(f,x) > deg(g,x) > 0 (got {m} and {l})"
    );
    let ctx = f.context();
    let mut s = vec![Polynomial::zero(ctx); l + 2];
    s[l + 1] = f.clone();
    s[l] = g.clone();

    let neg_g = g.neg_ref();
    let mut b = prem_fixed(f, &neg_g, x);
    let mut a = g.clone();
    let mut sd = pow_poly(&g.lc_wrt(x), m - l);
    loop {
        if b.is_zero() {
            break;
        }
        let d = a.deg(x);
        let e = b.deg(x);
        debug_assert!(d >= 1 && e < d);
        s[d - 1] = b.clone();
        let c = if e == d.saturating_sub(1) {
            b.clone()
        } else {
            // Defective step: S_e = (lc(b)/sd)^(d-1-e) * b.
            let num = b.mul_ref(&pow_poly(&b.lc_wrt(x), d - 1 - e));
            let sres = num
                .exact_div(&pow_poly(&sd, d - 1 - e))
                .expect("similarity division is exact");
            s[e] = sres.clone();
            sres
        };
        if e == 0 {
            break;
        }
        let neg_b = b.neg_ref();
        let divisor = pow_poly(&sd, d - e).mul_ref(&a.lc_wrt(x));
        b = prem_fixed(&a, &neg_b, x)
            .exact_div(&divisor)
            .expect("subresultant division is exact");
        a = c;
        sd = a.lc_wrt(x);
    }
    SubresultantChain {
        x,
        f: f.clone(),
        g: g.clone(),
        s,
    }
}

/// Extracts the regular indices `d_0 = 0 < d_1 < … < d_v`.
pub fn regular_indices(chain: &SubresultantChain) -> RegularSubresultantChain {
    let mu = chain.mu();
    let mut indices = vec![0usize];
    for j in 1..=mu {
        if !chain.s[j].is_zero() && chain.s[j].deg(chain.x) == j {
            indices.push(j);
        }
    }
    debug_assert_eq!(*indices.last().unwrap(), mu, "the g slot is always regular");
    RegularSubresultantChain {
        chain: chain.clone(),
        indices,
    }
}

/// Extended subresultant chain under the `mu = deg(f,x) - 1` convention used
/// by the specialization lemma: returns `E_0, …, E_{m-1}` where slots below
/// `deg(g,x)` are determinantal, `E_l = lc(g)^(m-l-1) g`, the gap is zero and
/// `E_{m-1} = g`. Accepts `deg(f,x) >= deg(g,x) >= 1` (the equal-degree case
/// is computed determinantally).
pub fn extended_chain(f: &Polynomial, g: &Polynomial, x: usize) -> Vec<Polynomial> {
    let ctx = f.context();
    let m = f.deg(x);
    let l = g.deg(x);
    assert!(m >= l && l >= 1, "extended chain needs deg f >= deg g >= 1");
    let mut e = vec![Polynomial::zero(ctx); m.max(1)];
    if m > l {
        let chain = subresultant_chain(f, g, x);
        e[..l].clone_from_slice(&chain.s[..l]);
        e[m - 1] = g.clone();
        if l < m - 1 {
            e[l] = g.mul_ref(&pow_poly(&g.lc_wrt(x), m - l - 1));
            for slot in e.iter_mut().take(m - 1).skip(l + 1) {
                *slot = Polynomial::zero(ctx);
            }
        }
    } else {
        for (j, slot) in e.iter_mut().enumerate().take(l) {
            *slot = crate::detpoly::det_subresultant(f, g, x, j);
        }
    }
    e
}

/// Resultant via a pseudo-remainder recursion, independent of both the chain
/// computation and the Sylvester-determinant referee. Requires positive
/// degree in `x` on both sides.
pub fn resultant(f: &Polynomial, g: &Polynomial, x: usize) -> Polynomial {
    assert!(
        f.deg(x) > 0 && g.deg(x) > 0,
        "resultant needs positive degrees in the chosen indeterminate"
    );
    res_rec(f, g, x)
}

fn res_rec(f: &Polynomial, g: &Polynomial, x: usize) -> Polynomial {
    let ctx = f.context();
    let m = f.deg(x);
    let l = g.deg(x);
    if m < l {
        let r = res_rec(g, f, x);
        return if (m * l) % 2 == 1 { r.neg_ref() } else { r };
    }
    if l == 0 {
        return g.pow(m as u32);
    }
    let (_, r, k) = f.pseudo_div(g, x);
    if r.is_zero() {
        return Polynomial::zero(ctx);
    }
    let dr = r.deg(x);
    let sub = res_rec(g, &r, x);
    let sign = (m * l) % 2 == 1;
    let lcg = g.lc_wrt(x);
    let e: i64 = m as i64 - (k as i64) * l as i64 - dr as i64;
    let scaled = if e >= 0 {
        sub.mul_ref(&pow_poly(&lcg, e as usize))
    } else {
        sub.exact_div(&pow_poly(&lcg, (-e) as usize))
            .expect("resultant scaling division is exact")
    };
    if sign {
        scaled.neg_ref()
    } else {
        scaled
    }
}

/// Successive resultant of `f` w.r.t. a triangular sequence: resultants from
/// the top element down. A level whose main variable does not occur in the
/// running polynomial leaves it unchanged, so parameter-only inputs pass
/// through untouched.
pub fn successive_resultant(f: &Polynomial, chain: &[Polynomial]) -> Polynomial {
    let mut r = f.clone();
    for t in chain.iter().rev() {
        if r.is_zero() {
            return r;
        }
        let x = t.mvar();
        if r.deg(x) == 0 {
            continue;
        }
        r = res_rec(&r, t, x);
    }
    r
}
