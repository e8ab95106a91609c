//! Fraction-free determinants of polynomial matrices and the determinantal
//! (Sylvester-matrix) route to resultants and subresultants. This is the
//! independent referee for the pseudo-remainder-sequence implementations in
//! [`crate::subres`] and the exact elimination engine behind the numeric
//! oracle.

use crate::poly::Polynomial;

/// Determinant by Bareiss fraction-free elimination; entries stay polynomial
/// and all divisions are exact.
pub fn polynomial_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    assert!(n > 0, "empty matrix");
    let ctx = m[0][0].context().clone();
    for row in &m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut sign = false;
    let mut prev = Polynomial::one(&ctx);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Polynomial::zero(&ctx),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j]
                    .mul_ref(&m[k][k])
                    .sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero(&ctx);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg_ref()
    } else {
        det
    }
}

fn coeff_rows(f: &Polynomial, x: usize, shifts: usize, width: usize) -> Vec<Vec<Polynomial>> {
    // Row for x^s * f holds the coefficient of x^(width-1-j) in column j.
    let ctx = f.context();
    let coeffs = f.univar_coeffs(x);
    let d = coeffs.len() - 1;
    let mut rows = Vec::new();
    for s in (0..shifts).rev() {
        let mut row = vec![Polynomial::zero(ctx); width];
        for (e, c) in coeffs.iter().enumerate() {
            let col = width - 1 - (e + s);
            row[col] = c.clone();
        }
        debug_assert!(d + s < width);
        rows.push(row);
    }
    rows
}

/// Resultant as the determinant of the Sylvester matrix. Requires positive
/// degree in `x` on both sides.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, x: usize) -> Polynomial {
    let m = f.deg(x);
    let l = g.deg(x);
    assert!(m > 0 && l > 0, "sylvester_resultant needs positive degrees");
    let width = m + l;
    let mut rows = coeff_rows(f, x, l, width);
    rows.extend(coeff_rows(g, x, m, width));
    polynomial_det(rows)
}

/// Rectangular fraction-free elimination: for an `r x c` matrix (`c >= r`),
/// eliminates the first `r-1` columns and returns the final row, whose entry
/// at column `q >= r-1` is `det(columns 0..r-1 of the first r-1 plus column
/// q)`. `None` signals a degenerate pivot pattern the caller must handle.
fn bareiss_minors(mut m: Vec<Vec<Polynomial>>) -> Option<Vec<Polynomial>> {
    let r = m.len();
    assert!(r >= 1);
    let ctx = m[0][0].context().clone();
    let c = m[0].len();
    assert!(c >= r);
    let mut sign = false;
    let mut prev = Polynomial::one(&ctx);
    for k in 0..r.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..r).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => {
                    // Column k is zero under the processed rows: every target
                    // minor contains it, so they all vanish.
                    return Some(vec![Polynomial::zero(&ctx); c]);
                }
            }
        }
        for i in k + 1..r {
            for jj in k + 1..c {
                let num = m[i][jj]
                    .mul_ref(&m[k][k])
                    .sub_ref(&m[i][k].mul_ref(&m[k][jj]));
                m[i][jj] = num.exact_div(&prev)?;
            }
            m[i][k] = Polynomial::zero(&ctx);
        }
        prev = m[k][k].clone();
    }
    let mut last = m.pop().unwrap();
    if sign {
        for e in last.iter_mut() {
            *e = e.neg_ref();
        }
    }
    Some(last)
}

/// The j-th determinantal subresultant of `(f, g)` w.r.t. `x` for
/// `0 <= j < min(deg f, deg g)` (also valid at `j < deg g` when the degrees
/// are equal): the determinant polynomial of the Sylvester-type matrix built
/// from `x^(l-1-j) f, …, f, x^(m-1-j) g, …, g`.
pub fn det_subresultant(f: &Polynomial, g: &Polynomial, x: usize, j: usize) -> Polynomial {
    let ctx = f.context();
    let m = f.deg(x);
    let l = g.deg(x);
    assert!(m >= l && l >= 1 && j < l, "det_subresultant index out of range");
    let rows_cnt = m + l - 2 * j;
    let width = m + l - j;
    let mut rows = coeff_rows(f, x, l - j, width);
    rows.extend(coeff_rows(g, x, m - j, width));
    debug_assert_eq!(rows.len(), rows_cnt);

    if let Some(last) = bareiss_minors(rows.clone()) {
        let mut acc = Polynomial::zero(ctx);
        for t in 0..=j {
            let col = width - 1 - t;
            acc = acc.add_ref(&last[col].mul_indet_pow(x, t as u32));
        }
        return acc;
    }

    // Degenerate pivots: fall back to one square determinant per
    // coefficient.
    let mut acc = Polynomial::zero(ctx);
    for t in (0..=j).rev() {
        let col = width - 1 - t;
        let mat: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|r| {
                let mut row: Vec<Polynomial> = r[..rows_cnt - 1].to_vec();
                row.push(r[col].clone());
                row
            })
            .collect();
        let d = polynomial_det(mat);
        acc = acc.add_ref(&d.mul_indet_pow(x, t as u32));
    }
    acc
}
