//! The quotient ring `R = k[x]/<T>`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::scalar::Field;
use crate::ring::xpoly::{xpoly_gcd, xpoly_xgcd, XPoly};

/// A monic modulus `T` of degree at least one. Cheap to clone.
///
/// Nothing here checks that `T` is a power of an irreducible polynomial;
/// that contract is only inspected by the verification oracles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Modulus(Arc<XPoly>);

impl Modulus {
    pub fn new(t: XPoly) -> Result<Self> {
        if t.degree() < 1 {
            return Err(Error::Precondition(format!("modulus {t} must have degree >= 1")));
        }
        if !t.is_monic() {
            return Err(Error::NotMonic(t.to_string()));
        }
        Ok(Modulus(Arc::new(t)))
    }

    /// `x^n`, the modulus of every worked example.
    pub fn x_pow(field: Field, n: usize) -> Result<Self> {
        Modulus::new(XPoly::x_pow(field, n))
    }

    pub fn poly(&self) -> &XPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree() as usize
    }

    pub fn field(&self) -> Field {
        self.0.field()
    }

    pub fn reduce(&self, a: &XPoly) -> XPoly {
        if a.degree() < self.0.degree() {
            return a.clone();
        }
        a.rem(&self.0).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &XPoly, b: &XPoly) -> XPoly {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, a: &XPoly, mut exp: u64) -> XPoly {
        let mut base = self.reduce(a);
        let mut acc = XPoly::one(self.field());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `gcd(a, T) = 1`.
    pub fn is_unit(&self, a: &XPoly) -> bool {
        !a.is_zero() && xpoly_gcd(a, &self.0).map(|g| g.is_one()).unwrap_or(false)
    }

    /// Inverse of `a` modulo `T`.
    pub fn inverse(&self, a: &XPoly) -> Result<XPoly> {
        if a.is_zero() {
            return Err(Error::NotInvertible(self.0.to_string()));
        }
        let (d, _, v) = xpoly_xgcd(&self.0, a)?;
        if !d.is_one() {
            return Err(Error::NotInvertible(self.0.to_string()));
        }
        Ok(self.reduce(&v))
    }

    /// Whether `other` divides this modulus.
    pub fn is_multiple_of(&self, other: &Modulus) -> bool {
        other.poly().divides(self.poly())
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.0)
    }
}

/// An element of `k[x]/<T>`, held as its canonical remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RElem {
    rep: XPoly,
    modulus: Modulus,
}

impl RElem {
    pub fn new(rep: &XPoly, modulus: &Modulus) -> Self {
        RElem { rep: modulus.reduce(rep), modulus: modulus.clone() }
    }

    pub fn rep(&self) -> &XPoly {
        &self.rep
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_unit(&self) -> bool {
        self.modulus.is_unit(&self.rep)
    }

    pub fn mul(&self, other: &RElem) -> Result<RElem> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.to_string(), other.modulus.to_string()));
        }
        Ok(RElem { rep: self.modulus.mul(&self.rep, &other.rep), modulus: self.modulus.clone() })
    }

    pub fn inverse(&self) -> Result<RElem> {
        relem_inverse(self)
    }
}

/// Inverse in `k[x]/<T>`; `NotInvertible` exactly when `gcd(a, T) != 1`.
pub fn relem_inverse(a: &RElem) -> Result<RElem> {
    Ok(RElem { rep: a.modulus.inverse(&a.rep)?, modulus: a.modulus.clone() })
}
