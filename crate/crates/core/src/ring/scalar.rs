//! Exact base-field elements: rationals with arbitrary-precision parts, or
//! residues modulo a machine-word prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest prime accepted for a prime field; products of two residues must
/// fit comfortably in `u128` arithmetic and residues in `u64`.
pub const MAX_PRIME: u64 = (1 << 62) - 57;

/// Descriptor of the base field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field of characteristic `q`. Rejects composites and `q < 2`.
    pub fn prime(q: u64) -> Result<Self> {
        if q > MAX_PRIME || !is_prime(q) {
            return Err(Error::InvalidField(format!("{q} is not a supported prime")));
        }
        Ok(Field::Prime(q))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(q) => Scalar::Prime { value: 0, modulus: q },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(q) => {
                let value = (n as i128).rem_euclid(q as i128) as u64;
                Scalar::Prime { value, modulus: q }
            }
        }
    }

    /// The element `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(_) => {
                let n = self.from_bigint(num);
                let d = self.from_bigint(den);
                let inv = d.inv().ok_or_else(|| Error::Parse("denominator vanishes in the prime field".into()))?;
                Ok(&n * &inv)
            }
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(q) => {
                let r = ((n % BigInt::from(q)) + BigInt::from(q)) % BigInt::from(q);
                let value = r.to_u64_digits().1.first().copied().unwrap_or(0);
                Scalar::Prime { value, modulus: q }
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(q) => q,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(q) => write!(f, "GF({q})"),
        }
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q < 4 {
        return true;
    }
    if q % 2 == 0 {
        return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = q - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % q == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, q);
        if x == 1 || x == q - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, q);
            if x == q - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// An element of the base field. Rationals are kept reduced with a positive
/// denominator; prime residues lie in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => {
                Scalar::Prime { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// True when the canonical printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }

    /// Serialization form: `"num/den"` or `"num"` for rationals, the residue
    /// for prime fields.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(r) => serde_json::Value::String(if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }),
            Scalar::Prime { value, .. } => serde_json::Value::from(*value),
        }
    }
}

fn binop(
    a: &Scalar,
    b: &Scalar,
    rat: impl Fn(&BigRational, &BigRational) -> BigRational,
    pr: impl Fn(u64, u64, u64) -> u64,
) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(rat(x, y)),
        (Scalar::Prime { value: x, modulus: q }, Scalar::Prime { value: y, modulus: q2 }) if q == q2 => {
            Scalar::Prime { value: pr(*x, *y, *q), modulus: *q }
        }
        _ => panic!("scalar arithmetic across different fields: {a:?} and {b:?}"),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        binop(
            self,
            rhs,
            |x, y| x + y,
            |x, y, q| {
                let s = x as u128 + y as u128;
                (s % q as u128) as u64
            },
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x - y, |x, y, q| if x >= y { x - y } else { q - (y - x) })
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x * y, mul_mod)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => {
                Scalar::Prime { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
