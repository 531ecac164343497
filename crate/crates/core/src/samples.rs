//! Worked inputs used by tests, benches and the CLI `sample` command.
//!
//! * the `x3` system: `T = x^3` over QQ with three blocks at precisions
//!   `x`, `x^2`, `x^3`;
//! * the `x7` system: `T = x^7` over QQ with two blocks at `x^3`, `x^5`.

use crate::bipoly::YPoly;
use crate::ring::{Field, Modulus};

fn product(factors: &[YPoly]) -> YPoly {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, f| &acc * f)
}

pub fn x3_modulus() -> Modulus {
    Modulus::x_pow(Field::Rational, 3).expect("x^3 is monic")
}

/// `((y+1)^2 + x(2y+1) + x^2(y+1)) (y + 2x + 3x^2) (y - 1 - x - 2x^2)`.
pub fn x3_system_a(t: &Modulus) -> YPoly {
    product(&[
        YPoly::from_i64s(t, &[&[1, 1, 1], &[2, 2, 1], &[1]]),
        YPoly::from_i64s(t, &[&[0, 2, 3], &[1]]),
        YPoly::from_i64s(t, &[&[-1, -1, -2], &[1]]),
    ])
}

/// `(y + 1 + 2x + x^2) (y + 2x + 4x^2) (y - 1 - x - 2x^2)`.
pub fn x3_system_b(t: &Modulus) -> YPoly {
    product(&[
        YPoly::from_i64s(t, &[&[1, 2, 1], &[1]]),
        YPoly::from_i64s(t, &[&[0, 2, 4], &[1]]),
        YPoly::from_i64s(t, &[&[-1, -1, -2], &[1]]),
    ])
}

pub fn x7_modulus() -> Modulus {
    Modulus::x_pow(Field::Rational, 7).expect("x^7 is monic")
}

/// `(y + x + x^2 + x^3 + x^4 + x^5 + x^6) (y + 1 + x^3 + x^6)`.
pub fn x7_system_a(t: &Modulus) -> YPoly {
    product(&[
        YPoly::from_i64s(t, &[&[0, 1, 1, 1, 1, 1, 1], &[1]]),
        YPoly::from_i64s(t, &[&[1, 0, 0, 1, 0, 0, 1], &[1]]),
    ])
}

/// `(y + x + x^2 + 2x^3 + x^4 + x^5 + x^6) (y + 1 + x^3 + x^5)`.
pub fn x7_system_b(t: &Modulus) -> YPoly {
    product(&[YPoly::from_i64s(t, &[&[0, 1, 1, 2, 1, 1, 1], &[1]]), YPoly::from_i64s(t, &[&[1, 0, 0, 1, 0, 1], &[1]])])
}
