//! Largest power of `p` dividing a polynomial over `k[x]/<p^e>`.

use crate::bipoly::YPoly;
use crate::ring::{xpoly_gcd, XPoly};

/// Result of [`nilpotent_factor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentFactor {
    /// `gcd(F_r, ..., F_i, T)`; equals 1 as soon as an invertible
    /// coefficient is met, and `p^l` (maximal) when `F` is nilpotent.
    pub p: XPoly,
    /// Largest degree of an invertible coefficient, `None` when `F` is
    /// nilpotent.
    pub index: Option<usize>,
}

impl NilpotentFactor {
    pub fn is_nilpotent(&self) -> bool {
        self.index.is_none()
    }

    /// The index as a signed integer, -1 for nilpotent input.
    pub fn signed_index(&self) -> isize {
        self.index.map_or(-1, |i| i as isize)
    }
}

/// Scan the coefficients of `f` from the top, folding them into a gcd with
/// `T`. The scan stops as soon as the gcd reaches degree 0; the coefficient
/// at which that happens is the top invertible one.
///
/// `f = 0` yields `(T, -1)`.
pub fn nilpotent_factor(f: &YPoly) -> NilpotentFactor {
    let t = f.modulus().poly();
    let mut p = t.clone();
    for i in (0..f.coeffs().len()).rev() {
        p = xpoly_gcd(&f.coeffs()[i], &p).expect("modulus is nonzero");
        if p.degree() == 0 {
            return NilpotentFactor { p, index: Some(i) };
        }
    }
    NilpotentFactor { p, index: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Modulus};
    use crate::samples::{x7_modulus, x7_system_b};

    #[test]
    fn nilpotent_subresultant() {
        let t = x7_modulus();
        let s = YPoly::from_i64s(&t, &[&[0, 0, 0, 1, 0, 0, 2], &[0, 0, 0, 1, 0, 1, -1]]);
        let nf = nilpotent_factor(&s);
        assert_eq!(nf.p, XPoly::x_pow(Field::Rational, 3));
        assert_eq!(nf.signed_index(), -1);
    }

    #[test]
    fn monic_quadratic_top_index() {
        let t = x7_modulus();
        let nf = nilpotent_factor(&x7_system_b(&t));
        assert!(nf.p.is_one());
        assert_eq!(nf.index, Some(2));
    }

    #[test]
    fn y_is_invertible_at_one() {
        let t = Modulus::new(XPoly::from_i64s(Field::Prime(5), &[1, 0, 1]).pow(2)).unwrap();
        let nf = nilpotent_factor(&YPoly::y_pow(&t, 1));
        assert!(nf.p.is_one());
        assert_eq!(nf.index, Some(1));
    }

    #[test]
    fn constant_nilpotent() {
        let t = Modulus::x_pow(Field::Rational, 4).unwrap();
        let s = YPoly::from_i64s(&t, &[&[0, 0, -1, 3]]);
        let nf = nilpotent_factor(&s);
        assert_eq!(nf.p, XPoly::x_pow(Field::Rational, 2));
        assert_eq!(nf.index, None);
    }

    #[test]
    fn zero_gives_modulus() {
        let t = Modulus::x_pow(Field::Rational, 4).unwrap();
        let nf = nilpotent_factor(&YPoly::zero(&t));
        assert_eq!(&nf.p, t.poly());
        assert_eq!(nf.index, None);
    }
}
