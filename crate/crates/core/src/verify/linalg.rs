//! Linear algebra used by the oracles: rank over `k`, fraction-free
//! determinants over `k[x]`, and determinantal subresultants.

use crate::bipoly::YPoly;
use crate::ring::{Scalar, XPoly};

/// Rank of a matrix over the base field.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for k in c..cols {
            rows[r][k] = &rows[r][k] * &inv;
        }
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for k in c..cols {
                let v = &rows[i][k] - &(&f * &rows[r][k]);
                rows[i][k] = v;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Determinant over `k[x]` by Bareiss elimination.
pub fn det_kx(mut m: Vec<Vec<XPoly>>, zero: &XPoly) -> XPoly {
    let n = m.len();
    if n == 0 {
        return XPoly::one(zero.field());
    }
    let mut sign_flip = false;
    let mut prev = XPoly::one(zero.field());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else { return zero.clone() };
            m.swap(k, piv);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -&d
    } else {
        d
    }
}

/// The determinantal subresultant of index `k` of `a` (degree `m`) and `b`
/// (degree `n`), `k < n <= m`, computed on coefficient representatives in
/// `k[x]` and then reduced. Rows are `y^(n-k-1) a, ..., a, y^(m-k-1) b, ..., b`.
pub fn sylvester_subresultant(a: &YPoly, b: &YPoly, k: usize) -> YPoly {
    let t = a.modulus();
    let zero = XPoly::zero(t.field());
    let (m, n) = (a.degree() as usize, b.degree() as usize);
    assert!(k < n && n <= m, "subresultant index out of range");
    let size = m + n - 2 * k;
    let top = m + n - k - 1;
    let mut base: Vec<Vec<XPoly>> = Vec::with_capacity(size);
    let mut push_rows = |p: &YPoly, count: usize| {
        for s in (0..count).rev() {
            // Coefficients of y^s p in degrees top, top-1, ..., 0.
            let row: Vec<XPoly> =
                (0..=top).rev().map(|deg| if deg >= s { p.coeff(deg - s) } else { zero.clone() }).collect();
            base.push(row);
        }
    };
    push_rows(a, n - k);
    push_rows(b, m - k);
    let lead_cols = size - 1;
    let mut coeffs = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mat: Vec<Vec<XPoly>> = base
            .iter()
            .map(|row| {
                let mut r: Vec<XPoly> = row[..lead_cols].to_vec();
                r.push(row[top - i].clone());
                r
            })
            .collect();
        coeffs.push(det_kx(mat, &zero));
    }
    YPoly::new(t, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Modulus};

    #[test]
    fn rank_of_dependent_rows() {
        let f = Field::Prime(5);
        let r = |v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        assert_eq!(rank(vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[0, 1, 1])]), 2);
        assert_eq!(rank(vec![r(&[0, 0]), r(&[0, 0])]), 0);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let f = Field::Rational;
        let p = |v: &[i64]| XPoly::from_i64s(f, v);
        let m = vec![
            vec![p(&[0, 1]), p(&[1]), p(&[2])],
            vec![p(&[1]), p(&[0, 1]), p(&[0])],
            vec![p(&[0]), p(&[3]), p(&[1, 1])],
        ];
        // x (x (1 + x) - 0) - 1 ((1 + x) - 0) + 2 (3 - 0) = x^3 + x^2 - x + 5
        assert_eq!(det_kx(m, &XPoly::zero(f)), p(&[5, -1, 1, 1]));
    }

    #[test]
    fn first_subresultant_of_quadratics() {
        let t = Modulus::x_pow(Field::Rational, 7).unwrap();
        let a = crate::samples::x7_system_a(&t);
        let b = crate::samples::x7_system_b(&t);
        assert_eq!(sylvester_subresultant(&a, &b, 1), &b - &a);
    }
}
