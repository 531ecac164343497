//! Polynomials in `y` over `R = k[x]/<T>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Field, Modulus, XPoly};

/// Dense polynomial in `y` whose coefficients are canonical residues modulo
/// the carried [`Modulus`]. No trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YPoly {
    modulus: Modulus,
    coeffs: Vec<XPoly>,
}

impl YPoly {
    pub fn new(modulus: &Modulus, coeffs: Vec<XPoly>) -> Self {
        let coeffs = coeffs.iter().map(|c| modulus.reduce(c)).collect();
        let mut p = YPoly { modulus: modulus.clone(), coeffs };
        p.normalize();
        p
    }

    /// Build from integer coefficient tables: `rows[j]` lists the ascending
    /// `x`-coefficients of `y^j`.
    pub fn from_i64s(modulus: &Modulus, rows: &[&[i64]]) -> Self {
        let field = modulus.field();
        YPoly::new(modulus, rows.iter().map(|r| XPoly::from_i64s(field, r)).collect())
    }

    pub fn zero(modulus: &Modulus) -> Self {
        YPoly { modulus: modulus.clone(), coeffs: Vec::new() }
    }

    pub fn one(modulus: &Modulus) -> Self {
        YPoly::constant(modulus, XPoly::one(modulus.field()))
    }

    pub fn constant(modulus: &Modulus, c: XPoly) -> Self {
        YPoly::new(modulus, vec![c])
    }

    /// `c * y^k`.
    pub fn monomial(modulus: &Modulus, c: XPoly, k: usize) -> Self {
        let mut coeffs = vec![XPoly::zero(modulus.field()); k];
        coeffs.push(c);
        YPoly::new(modulus, coeffs)
    }

    pub fn y_pow(modulus: &Modulus, k: usize) -> Self {
        YPoly::monomial(modulus, XPoly::one(modulus.field()), k)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(XPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn field(&self) -> Field {
        self.modulus.field()
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> XPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| XPoly::zero(self.field()))
    }

    /// Degree in `y`, -1 for zero.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> Option<&XPoly> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(XPoly::is_one)
    }

    pub fn scale(&self, c: &XPoly) -> YPoly {
        YPoly::new(&self.modulus, self.coeffs.iter().map(|a| self.modulus.mul(a, c)).collect())
    }

    /// Multiply by `y^k`.
    pub fn shift(&self, k: usize) -> YPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![XPoly::zero(self.field()); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { modulus: self.modulus.clone(), coeffs }
    }

    /// Reduce modulo `y^n`.
    pub fn truncate(&self, n: usize) -> YPoly {
        let mut p = YPoly { modulus: self.modulus.clone(), coeffs: self.coeffs.iter().take(n).cloned().collect() };
        p.normalize();
        p
    }

    pub fn pow(&self, mut exp: u32) -> YPoly {
        let mut acc = YPoly::one(&self.modulus);
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

    /// Reduce to a coarser modulus, which must divide the current one.
    pub fn reduce_to(&self, coarser: &Modulus) -> Result<YPoly> {
        if !self.modulus.is_multiple_of(coarser) {
            return Err(Error::ModulusMismatch(self.modulus.to_string(), coarser.to_string()));
        }
        Ok(YPoly::new(coarser, self.coeffs.clone()))
    }

    /// Reinterpret the coefficient representatives modulo another modulus,
    /// without any compatibility check. Used when lifting to a finer modulus.
    pub fn with_modulus(&self, modulus: &Modulus) -> YPoly {
        YPoly::new(modulus, self.coeffs.clone())
    }

    /// Euclidean division by a monic divisor: `self = q * c + r`,
    /// `deg r < deg c`.
    pub fn divrem_monic(&self, c: &YPoly) -> Result<(YPoly, YPoly)> {
        self.check_modulus(c)?;
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !c.is_monic() {
            return Err(Error::NotMonic(c.to_string()));
        }
        let dc = c.degree() as usize;
        if self.degree() < c.degree() {
            return Ok((YPoly::zero(&self.modulus), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![XPoly::zero(self.field()); rem.len() - dc];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dc].clone();
            if q.is_zero() {
                continue;
            }
            for (j, cj) in c.coeffs.iter().enumerate() {
                rem[k + j] = self.modulus.reduce(&(&rem[k + j] - &(&q * cj)));
            }
            quot[k] = q;
        }
        rem.truncate(dc);
        Ok((YPoly::new(&self.modulus, quot), YPoly::new(&self.modulus, rem)))
    }

    /// Divide every coefficient representative by `p` in `k[x]`; the result
    /// lives modulo `T / p`.
    pub fn exact_div_xpoly(&self, p: &XPoly) -> Result<YPoly> {
        let t = self.modulus.poly();
        let reduced_t = t.exact_div(p)?;
        let coeffs = self.coeffs.iter().map(|c| c.exact_div(p)).collect::<Result<Vec<_>>>()?;
        if reduced_t.degree() < 1 {
            return Err(Error::Precondition(format!("dividing by {p} leaves no precision modulo {t}")));
        }
        Ok(YPoly::new(&Modulus::new(reduced_t)?, coeffs))
    }

    fn check_modulus(&self, other: &YPoly) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus.to_string(), other.modulus.to_string()))
        }
    }
}

pub fn ypoly_mul(a: &YPoly, b: &YPoly) -> Result<YPoly> {
    a.check_modulus(b)?;
    Ok(a * b)
}

pub fn ypoly_divrem_monic(a: &YPoly, c: &YPoly) -> Result<(YPoly, YPoly)> {
    a.divrem_monic(c)
}

pub fn ypoly_exact_div_xpoly(s: &YPoly, p: &XPoly) -> Result<YPoly> {
    s.exact_div_xpoly(p)
}

fn zip_coeffs(a: &YPoly, b: &YPoly, op: impl Fn(&XPoly, &XPoly) -> XPoly) -> YPoly {
    assert_eq!(a.modulus, b.modulus, "YPoly arithmetic across different moduli");
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = XPoly::zero(a.field());
    let coeffs = (0..n).map(|i| op(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero))).collect();
    let mut p = YPoly { modulus: a.modulus.clone(), coeffs };
    p.normalize();
    p
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        zip_coeffs(self, rhs, |x, y| x + y)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        zip_coeffs(self, rhs, |x, y| x - y)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly { modulus: self.modulus.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        assert_eq!(self.modulus, rhs.modulus, "YPoly arithmetic across different moduli");
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero(&self.modulus);
        }
        let field = self.field();
        let mut acc = vec![XPoly::zero(field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        YPoly::new(&self.modulus, acc)
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::format_ypoly(self))
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{x3_system_a as ex2_a, x3_system_b as ex2_b};

    #[test]
    fn difference_of_squares() {
        let t = Modulus::x_pow(Field::Rational, 3).unwrap();
        let p = YPoly::from_i64s(&t, &[&[1], &[1]]);
        let m = YPoly::from_i64s(&t, &[&[-1], &[1]]);
        assert_eq!(&p * &m, YPoly::from_i64s(&t, &[&[-1], &[], &[1]]));
    }

    #[test]
    fn ex2_products_expand() {
        let t = Modulus::x_pow(Field::Rational, 3).unwrap();
        let a = ex2_a(&t);
        // The expanded form, with the missing "+" before the y term restored.
        let expanded = YPoly::from_i64s(&t, &[&[0, -2, -7], &[-1, -4, -13], &[-1, -1, -1], &[1, 3, 2], &[1]]);
        assert_eq!(a, expanded);
        let b = ex2_b(&t);
        let expanded_b = YPoly::from_i64s(&t, &[&[0, -2, -10], &[-1, -3, -3], &[0, 3, 3], &[1]]);
        assert_eq!(b, expanded_b);
    }

    #[test]
    fn y_plus_one_precision() {
        let t = Modulus::x_pow(Field::Rational, 3).unwrap();
        let a = ex2_a(&t);
        let c = YPoly::from_i64s(&t, &[&[1], &[1]]);
        let (_, r) = a.divrem_monic(&c).unwrap();
        let x1 = Modulus::x_pow(Field::Rational, 1).unwrap();
        let x2 = Modulus::x_pow(Field::Rational, 2).unwrap();
        assert!(r.reduce_to(&x1).unwrap().is_zero());
        assert!(!r.reduce_to(&x2).unwrap().is_zero());
    }

    #[test]
    fn divide_by_one() {
        let t = Modulus::x_pow(Field::Prime(7), 2).unwrap();
        let f = YPoly::from_i64s(&t, &[&[3, 1], &[0, 2], &[1]]);
        let (q, r) = f.divrem_monic(&YPoly::one(&t)).unwrap();
        assert_eq!(q, f);
        assert!(r.is_zero());
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let t = Modulus::x_pow(Field::Rational, 2).unwrap();
        let f = YPoly::from_i64s(&t, &[&[1], &[0], &[1]]);
        let c = YPoly::from_i64s(&t, &[&[1], &[2]]);
        assert!(matches!(f.divrem_monic(&c), Err(Error::NotMonic(_))));
    }

    #[test]
    fn exact_division_by_power_of_x() {
        let t = Modulus::x_pow(Field::Rational, 7).unwrap();
        let s = YPoly::from_i64s(&t, &[&[0, 0, 0, 1, 0, 0, 2], &[0, 0, 0, 1, 0, 1, -1]]);
        let q = s.exact_div_xpoly(&XPoly::x_pow(Field::Rational, 3)).unwrap();
        let x4 = Modulus::x_pow(Field::Rational, 4).unwrap();
        assert_eq!(q, YPoly::from_i64s(&x4, &[&[1, 0, 0, 2], &[1, 0, 1, -1]]));

        let t4 = Modulus::x_pow(Field::Rational, 4).unwrap();
        let c = YPoly::from_i64s(&t4, &[&[0, 0, -1, 3]]);
        let q = c.exact_div_xpoly(&XPoly::x_pow(Field::Rational, 2)).unwrap();
        assert_eq!(q.coeffs(), &[XPoly::from_i64s(Field::Rational, &[-1, 3])]);
        assert_eq!(q.modulus(), &Modulus::x_pow(Field::Rational, 2).unwrap());

        let one = XPoly::one(Field::Rational);
        assert_eq!(s.exact_div_xpoly(&one).unwrap(), s);
        assert_eq!(s.exact_div_xpoly(&XPoly::x_pow(Field::Rational, 4)), Err(Error::NotDivisible));
    }

    #[test]
    fn coarser_reduction_requires_divisibility() {
        let f = Field::Rational;
        let t = Modulus::x_pow(f, 4).unwrap();
        let s = YPoly::from_i64s(&t, &[&[1, 1, 1, 1]]);
        assert!(s.reduce_to(&Modulus::x_pow(f, 2).unwrap()).is_ok());
        assert!(s.reduce_to(&Modulus::new(XPoly::from_i64s(f, &[1, 1])).unwrap()).is_err());
    }
}
