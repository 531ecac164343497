//! Polynomial Weierstrass preparation over `R = k[x]/<p^e>`.
//!
//! For `f = f_d y^d + ... + f_0` whose top invertible coefficient sits at
//! degree `k` (all of `f_{k+1}, ..., f_d` nilpotent) there are unique
//! polynomials `q` monic of degree `k` and `u` of degree `d - k` with
//! `f = u q`, `u_0` a unit and `u_1, ..., u_{d-k}` nilpotent. The monic factor
//! corresponds to the division of `y^k` by `f` "from below":
//! `y^k = g f + r` with `deg r < k` and `g` a unit power series, so that
//! `q = y^k - r` and `u = g^{-1}`. It is computed by lifting the obvious
//! factorization modulo `p` one power of `p` at a time, each step a
//! Euclidean division by the current monic approximation.

use crate::bipoly::YPoly;
use crate::error::{Error, Result};
use crate::ring::XPoly;

/// `f = u * q` with `q` monic of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassFactorization {
    pub q: YPoly,
    pub u: YPoly,
}

/// Output of [`weierstrass_divide`]: `y^k = g f + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassDivision {
    /// The unit quotient, reduced modulo `y^(d-k+1)`.
    pub g: YPoly,
    pub r: YPoly,
}

/// Inverse of `u` modulo `<y^m, T>`; the constant coefficient must be a unit.
pub fn series_inverse_trunc(u: &YPoly, m: usize) -> Result<YPoly> {
    let t = u.modulus();
    let inv0 = t.inverse(&u.coeff(0))?;
    let mut v: Vec<XPoly> = Vec::with_capacity(m);
    for i in 0..m {
        if i == 0 {
            v.push(inv0.clone());
            continue;
        }
        let mut acc = XPoly::zero(u.field());
        for j in 1..=i.min(u.coeffs().len().saturating_sub(1)) {
            acc = &acc + &(&u.coeffs()[j] * &v[i - j]);
        }
        v.push(t.reduce(&-&t.mul(&acc, &inv0)));
    }
    Ok(YPoly::new(t, v))
}

fn check_shape(f: &YPoly, k: usize) -> Result<XPoly> {
    let t = f.modulus();
    if f.degree() < k as isize {
        return Err(Error::Precondition(format!("index {k} exceeds the degree of {f}")));
    }
    let fk = f.coeff(k);
    let inv =
        t.inverse(&fk).map_err(|_| Error::Precondition(format!("coefficient of y^{k} in {f} is not invertible")))?;
    if let Some(j) = (k + 1..f.coeffs().len()).find(|&j| t.is_unit(&f.coeffs()[j])) {
        return Err(Error::Precondition(format!("coefficient of y^{j} in {f} is invertible above index {k}")));
    }
    Ok(inv)
}

/// `f = u q` by successive approximation. Modulo `p` the nilpotent top
/// coefficients vanish, so `q_0 = (f mod y^(k+1)) / f_k` is right modulo
/// `p`. If `q_i` is right modulo `p^m`, the Euclidean division
/// `f = u_i q_i + rho` has `rho = u_0 (q - q_i)` modulo `p^(m+1)`, and
/// `q_(i+1) = q_i + rho / u_i(0)` is right modulo `p^(m+1)`.
fn factor(f: &YPoly, k: usize) -> Result<WeierstrassFactorization> {
    let t = f.modulus();
    let inv = check_shape(f, k)?;
    let mut q = f.truncate(k + 1).scale(&inv);
    // e <= deg T rounds suffice.
    for _ in 0..=t.degree() {
        let (u, rho) = f.divrem_monic(&q)?;
        if rho.is_zero() {
            return Ok(WeierstrassFactorization { q, u });
        }
        let c = t.inverse(&u.coeff(0))?;
        q = &q + &rho.scale(&c);
    }
    Err(Error::InvariantBreach(format!("Weierstrass factor of {f} at {k} does not converge")))
}

/// Divide `y^k` by `f`: returns `g` (modulo `y^(d-k+1)`) and `r` with
/// `y^k = g f + r`, `deg r < k`.
pub fn weierstrass_divide(f: &YPoly, k: usize) -> Result<WeierstrassDivision> {
    let t = f.modulus();
    let d = f.degree().max(0) as usize;
    let WeierstrassFactorization { q, u } = factor(f, k)?;
    let g = series_inverse_trunc(&u, d.saturating_sub(k) + 1)?;
    Ok(WeierstrassDivision { g, r: &YPoly::y_pow(t, k) - &q })
}

/// The monic Weierstrass factor `y^k - r` of `f`; the constant 1 when `k = 0`.
pub fn weierstrass_monic(f: &YPoly, k: usize) -> Result<YPoly> {
    let t = f.modulus();
    if k == 0 {
        check_shape(f, 0)?;
        return Ok(YPoly::one(t));
    }
    if f.degree() == k as isize && f.is_monic() {
        return Ok(f.clone());
    }
    Ok(factor(f, k)?.q)
}

/// Both factors of `f = u q`.
pub fn weierstrass_factorization(f: &YPoly, k: usize) -> Result<WeierstrassFactorization> {
    let t = f.modulus();
    if k == 0 {
        check_shape(f, 0)?;
        return Ok(WeierstrassFactorization { q: YPoly::one(t), u: f.clone() });
    }
    factor(f, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Modulus};

    fn x2() -> Modulus {
        Modulus::x_pow(Field::Rational, 2).unwrap()
    }

    #[test]
    fn truncated_series_inverse() {
        let t = x2();
        // (1 - x y + x)^{-1} = 1 + x (y - 1) modulo <y^2, x^2>
        let g = YPoly::from_i64s(&t, &[&[1, 1], &[0, -1]]);
        let u = series_inverse_trunc(&g, 2).unwrap();
        assert_eq!(u, YPoly::from_i64s(&t, &[&[1, -1], &[0, 1]]));
        let one = YPoly::one(&t);
        assert_eq!(series_inverse_trunc(&one, 5).unwrap(), one);
    }

    #[test]
    fn non_unit_constant_has_no_inverse() {
        let t = x2();
        let g = YPoly::from_i64s(&t, &[&[0, 1], &[1]]);
        assert!(series_inverse_trunc(&g, 3).is_err());
    }

    #[test]
    fn divide_y_by_quadratic() {
        let t = x2();
        let f = YPoly::from_i64s(&t, &[&[1], &[1], &[0, 1]]);
        let WeierstrassDivision { g, r } = weierstrass_divide(&f, 1).unwrap();
        assert_eq!(g, YPoly::from_i64s(&t, &[&[1, 1], &[0, -1]]));
        assert_eq!(r, YPoly::from_i64s(&t, &[&[-1, -1]]));
    }

    #[test]
    fn monic_of_quadratic() {
        let t = x2();
        let f = YPoly::from_i64s(&t, &[&[1], &[1], &[0, 1]]);
        assert_eq!(weierstrass_monic(&f, 1).unwrap(), YPoly::from_i64s(&t, &[&[1, 1], &[1]]));
        let WeierstrassFactorization { q, u } = weierstrass_factorization(&f, 1).unwrap();
        assert_eq!(&u * &q, f);
        assert_eq!(u, YPoly::from_i64s(&t, &[&[1, -1], &[0, 1]]));
    }

    #[test]
    fn already_monic_divisor() {
        let t = Modulus::x_pow(Field::Prime(7), 3).unwrap();
        let f = YPoly::from_i64s(&t, &[&[2, 1], &[0, 3], &[1]]);
        let WeierstrassDivision { g, r } = weierstrass_divide(&f, 2).unwrap();
        assert!(g.is_one());
        assert_eq!(r, &YPoly::y_pow(&t, 2) - &f);
    }

    #[test]
    fn linear_with_unit_leading_coefficient() {
        let t = Modulus::x_pow(Field::Rational, 4).unwrap();
        let s = YPoly::from_i64s(&t, &[&[1, 0, 0, 2], &[1, 0, 1, -1]]);
        assert_eq!(weierstrass_monic(&s, 1).unwrap(), YPoly::from_i64s(&t, &[&[1, 0, -1, 3], &[1]]));
    }

    #[test]
    fn degree_zero_is_one() {
        let t = x2();
        let s = YPoly::from_i64s(&t, &[&[-1, 3]]);
        assert!(weierstrass_monic(&s, 0).unwrap().is_one());
    }

    #[test]
    fn shape_violations() {
        let t = x2();
        // f_1 = x is not invertible
        let f = YPoly::from_i64s(&t, &[&[1], &[0, 1]]);
        assert!(matches!(weierstrass_divide(&f, 1), Err(Error::Precondition(_))));
        // invertible coefficient above k
        let g = YPoly::from_i64s(&t, &[&[1], &[1], &[1]]);
        assert!(matches!(weierstrass_monic(&g, 1), Err(Error::Precondition(_))));
    }
}
