//! Dense univariate polynomials over the base field, in the variable `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::scalar::{Field, Scalar};

/// Polynomial in `k[x]`. Coefficients are ascending; `coeffs[i]` multiplies
/// `x^i`. The zero polynomial has an empty coefficient vector and degree -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl XPoly {
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = XPoly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        XPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        XPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        XPoly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        XPoly::new(c.field(), vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: Scalar, deg: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); deg];
        coeffs.push(c);
        XPoly::new(field, coeffs)
    }

    /// `x^deg`.
    pub fn x_pow(field: Field, deg: usize) -> Self {
        XPoly::monomial(field.one(), deg)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &Scalar) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.field);
        }
        XPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> XPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { field: self.field, coeffs }
    }

    /// Keep only the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> XPoly {
        XPoly::new(self.field, self.coeffs.iter().take(n).cloned().collect())
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> XPoly {
        match self.lc() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut exp: u32) -> XPoly {
        let mut acc = XPoly::one(self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> XPoly {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &self.field.from_i64(i as i64)).collect();
        XPoly::new(self.field, coeffs)
    }

    /// Euclidean division `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &XPoly) -> Result<(XPoly, XPoly)> {
        self.check_field(b)?;
        let db = b.degree();
        if db < 0 {
            return Err(Error::DivisionByZero);
        }
        if self.degree() < db {
            return Ok((XPoly::zero(self.field), self.clone()));
        }
        let db = db as usize;
        let inv_lc = b.lc().and_then(Scalar::inv).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * bj);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((XPoly::new(self.field, quot), XPoly::new(self.field, rem)))
    }

    pub fn rem(&self, b: &XPoly) -> Result<XPoly> {
        Ok(self.divrem(b)?.1)
    }

    /// Quotient of an exact division; `NotDivisible` otherwise.
    pub fn exact_div(&self, b: &XPoly) -> Result<XPoly> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn divides(&self, other: &XPoly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    fn check_field(&self, other: &XPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

/// Monic greatest common divisor.
pub fn xpoly_gcd(a: &XPoly, b: &XPoly) -> Result<XPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    a.check_field(b)?;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1)?;
        r0 = r1;
        r1 = r;
    }
    Ok(r0.monic())
}

/// Extended Euclid: returns `(d, u, v)` with `u*a + v*b = d`, `d` the monic gcd.
pub fn xpoly_xgcd(a: &XPoly, b: &XPoly) -> Result<(XPoly, XPoly, XPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    a.check_field(b)?;
    let field = a.field();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (XPoly::one(field), XPoly::zero(field));
    let (mut t0, mut t1) = (XPoly::zero(field), XPoly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.lc().and_then(Scalar::inv).expect("gcd of nonzero inputs is nonzero");
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

pub fn xpoly_divrem(a: &XPoly, b: &XPoly) -> Result<(XPoly, XPoly)> {
    a.divrem(b)
}

fn zip_coeffs(a: &XPoly, b: &XPoly, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> XPoly {
    assert_eq!(a.field, b.field, "polynomial arithmetic across different fields");
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = a.field.zero();
    let coeffs = (0..n).map(|i| op(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero))).collect();
    XPoly::new(a.field, coeffs)
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        zip_coeffs(self, rhs, |x, y| x + y)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        zip_coeffs(self, rhs, |x, y| x - y)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.field, rhs.field, "polynomial arithmetic across different fields");
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPoly::new(self.field, coeffs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::format_xpoly(self, "x"))
    }
}
