//! Bezout pairs modulo a primary modulus and quadratic Hensel lifting of a
//! two-factor factorization `g_i = G * h`.

use crate::bipoly::YPoly;
use crate::error::{Error, Result};
use crate::ring::{Modulus, XPoly};

/// `alpha * G + beta * g = 1` with `deg alpha < deg g`, `deg beta < deg G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutPair {
    pub alpha: YPoly,
    pub beta: YPoly,
}

/// Bezout pair of two monic polynomials modulo `Tp` (both already reduced
/// modulo `Tp`). The extended Euclidean algorithm is tried first; if it meets
/// a non-invertible pivot the pair is obtained from the Sylvester system,
/// solved by elimination with unit pivots.
pub fn bezout_mod(big_g: &YPoly, g: &YPoly) -> Result<BezoutPair> {
    if !big_g.is_monic() || !g.is_monic() {
        return Err(Error::Precondition("Bezout inputs must be monic".into()));
    }
    if big_g.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch(big_g.modulus().to_string(), g.modulus().to_string()));
    }
    let pair = match euclid(big_g, g) {
        Some(pair) => pair,
        None => sylvester(big_g, g)?,
    };
    normalize(big_g, g, pair)
}

fn euclid(big_g: &YPoly, g: &YPoly) -> Option<BezoutPair> {
    let t = big_g.modulus();
    let (mut r0, mut r1) = (big_g.clone(), g.clone());
    let (mut s0, mut s1) = (YPoly::one(t), YPoly::zero(t));
    let (mut t0, mut t1) = (YPoly::zero(t), YPoly::one(t));
    while !r1.is_zero() {
        let inv = t.inverse(r1.lc()?).ok()?;
        let monic = r1.scale(&inv);
        let (q, r) = r0.divrem_monic(&monic).ok()?;
        let q = q.scale(&inv);
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if r0.degree() != 0 {
        return None;
    }
    let inv = t.inverse(&r0.coeff(0)).ok()?;
    Some(BezoutPair { alpha: s0.scale(&inv), beta: t0.scale(&inv) })
}

/// Solve `alpha G + beta g = 1` as a square linear system over `k[x]/Tp`.
fn sylvester(big_g: &YPoly, g: &YPoly) -> Result<BezoutPair> {
    let t = big_g.modulus();
    let field = t.field();
    let n = big_g.degree() as usize;
    let m = g.degree() as usize;
    let size = n + m;
    // Column c < m holds y^c G, column m + c holds y^c g; row r is the
    // coefficient of y^r. The last column is the right-hand side.
    let mut rows = vec![vec![XPoly::zero(field); size + 1]; size];
    for c in 0..m {
        for (r, coef) in big_g.coeffs().iter().enumerate() {
            rows[c + r][c] = coef.clone();
        }
    }
    for c in 0..n {
        for (r, coef) in g.coeffs().iter().enumerate() {
            rows[c + r][m + c] = coef.clone();
        }
    }
    rows[0][size] = XPoly::one(field);
    let not_coprime = || Error::Precondition(format!("{big_g} and {g} are not coprime modulo {t}"));
    for col in 0..size {
        let piv = (col..size).find(|&r| t.is_unit(&rows[r][col])).ok_or_else(not_coprime)?;
        rows.swap(col, piv);
        let inv = t.inverse(&rows[col][col])?;
        for k in col..=size {
            rows[col][k] = t.mul(&rows[col][k], &inv);
        }
        for r in 0..size {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for k in col..=size {
                let v = t.reduce(&(&rows[r][k] - &(&factor * &rows[col][k])));
                rows[r][k] = v;
            }
        }
    }
    let alpha = YPoly::new(t, (0..m).map(|c| rows[c][size].clone()).collect());
    let beta = YPoly::new(t, (0..n).map(|c| rows[m + c][size].clone()).collect());
    Ok(BezoutPair { alpha, beta })
}

fn normalize(big_g: &YPoly, g: &YPoly, pair: BezoutPair) -> Result<BezoutPair> {
    let (q, alpha) = pair.alpha.divrem_monic(g)?;
    let beta = &pair.beta + &(&q * big_g);
    let check = &(&alpha * big_g) + &(&beta * g);
    if !check.is_one() {
        return Err(Error::InvariantBreach(format!("Bezout identity fails for {big_g}, {g}")));
    }
    Ok(BezoutPair { alpha, beta })
}

/// One precision-doubling step, for the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselStep {
    pub from: XPoly,
    pub to: XPoly,
    pub g_star: YPoly,
    pub h_star: YPoly,
}

/// Lifted factors, reduced modulo the target, and the intermediate steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselLift {
    pub g_star: YPoly,
    pub h_star: YPoly,
    pub steps: Vec<HenselStep>,
}

/// Lift `gi = G h mod Tp` to a factorization modulo `target`, squaring the
/// working modulus until its degree reaches that of `target`. `gi` must be
/// known modulo `target` (or a multiple of it); `G`, `h` and the Bezout pair
/// live modulo `Tp`, which must divide `target`.
pub fn hensel_lift(gi: &YPoly, big_g: &YPoly, h: &YPoly, bez: &BezoutPair, target: &Modulus) -> Result<HenselLift> {
    let tp = big_g.modulus().clone();
    if !target.is_multiple_of(&tp) {
        return Err(Error::Precondition(format!("{tp} does not divide {target}")));
    }
    if !gi.modulus().is_multiple_of(target) {
        return Err(Error::Precondition(format!("{gi} is not known modulo {target}")));
    }
    if !big_g.is_monic() || !h.is_monic() {
        return Err(Error::Precondition("lifted factors must be monic".into()));
    }
    let initial = &gi.reduce_to(&tp)? - &(big_g * h);
    if !initial.is_zero() {
        return Err(Error::Precondition(format!("{gi} is not {big_g} times {h} modulo {tp}")));
    }

    let (mut g, mut hh, mut s, mut t) = (big_g.clone(), h.clone(), bez.alpha.clone(), bez.beta.clone());
    let mut steps = Vec::new();
    let mut m = tp.clone();
    while m.degree() < target.degree() {
        let next = Modulus::new(m.poly() * m.poly())?;
        let up = |p: &YPoly| p.with_modulus(&next);
        let f = up(gi);
        let (g0, h0, s0, t0) = (up(&g), up(&hh), up(&s), up(&t));
        let e = &f - &(&g0 * &h0);
        let (q, r) = (&s0 * &e).divrem_monic(&h0)?;
        let g1 = &(&g0 + &(&t0 * &e)) + &(&q * &g0);
        let h1 = &h0 + &r;
        let b = &(&(&s0 * &g1) + &(&t0 * &h1)) - &YPoly::one(&next);
        let (c, d) = (&s0 * &b).divrem_monic(&h1)?;
        let s1 = &s0 - &d;
        let t1 = &(&t0 - &(&t0 * &b)) - &(&c * &g1);

        if !(&f - &(&g1 * &h1)).is_zero()
            || !g1.is_monic()
            || !h1.is_monic()
            || g1.reduce_to(&m)? != g
            || h1.reduce_to(&m)? != hh
            || !(&(&s1 * &g1) + &(&t1 * &h1)).is_one()
        {
            return Err(Error::InvariantBreach(format!("Hensel step from {m} to {next} broke its contract")));
        }
        steps.push(HenselStep {
            from: m.poly().clone(),
            to: next.poly().clone(),
            g_star: g1.clone(),
            h_star: h1.clone(),
        });
        (g, hh, s, t, m) = (g1, h1, s1, t1, next);
    }

    let g_star = g.reduce_to(target)?;
    let h_star = hh.reduce_to(target)?;
    if !(&gi.reduce_to(target)? - &(&g_star * &h_star)).is_zero()
        || g_star.reduce_to(&tp)? != *big_g
        || h_star.reduce_to(&tp)? != *h
    {
        return Err(Error::InvariantBreach(format!("lifting to {target} broke its contract")));
    }
    Ok(HenselLift { g_star, h_star, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn xm(n: usize) -> Modulus {
        Modulus::x_pow(Field::Rational, n).unwrap()
    }

    #[test]
    fn running_example_pair() {
        let t = xm(2);
        let big_g = YPoly::from_i64s(&t, &[&[0, 1], &[1]]);
        let g = YPoly::from_i64s(&t, &[&[1], &[1]]);
        let bez = bezout_mod(&big_g, &g).unwrap();
        assert_eq!(bez.alpha, YPoly::from_i64s(&t, &[&[-1, -1]]));
        assert_eq!(bez.beta, YPoly::from_i64s(&t, &[&[1, 1]]));
    }

    #[test]
    fn y_and_y_plus_one() {
        let t = Modulus::new(XPoly::from_i64s(Field::Prime(3), &[1, 0, 1]).pow(2)).unwrap();
        let big_g = YPoly::y_pow(&t, 1);
        let g = YPoly::from_i64s(&t, &[&[1], &[1]]);
        let bez = bezout_mod(&big_g, &g).unwrap();
        assert_eq!(bez.alpha, YPoly::from_i64s(&t, &[&[-1]]));
        assert_eq!(bez.beta, YPoly::one(&t));
    }

    #[test]
    fn nilpotent_pivot_uses_linear_system() {
        // G - g = -x y - 1 has a nilpotent leading coefficient, so Euclid
        // stalls after one step.
        let t = xm(3);
        let big_g = YPoly::from_i64s(&t, &[&[1], &[0], &[1]]);
        let g = YPoly::from_i64s(&t, &[&[2], &[0, 1], &[1]]);
        assert!(euclid(&big_g, &g).is_none());
        let bez = bezout_mod(&big_g, &g).unwrap();
        assert!((&(&bez.alpha * &big_g) + &(&bez.beta * &g)).is_one());
    }

    #[test]
    fn common_root_modulo_p_is_rejected() {
        let t = xm(3);
        let big_g = YPoly::from_i64s(&t, &[&[0, 1], &[1]]);
        let g = YPoly::from_i64s(&t, &[&[0, 2], &[1]]);
        assert!(matches!(bezout_mod(&big_g, &g), Err(Error::Precondition(_))));
    }

    #[test]
    fn running_example_lift() {
        let t7 = xm(7);
        let b = crate::samples::x7_system_b(&t7);
        let t2 = xm(2);
        let big_g = YPoly::from_i64s(&t2, &[&[0, 1], &[1]]);
        let h = YPoly::from_i64s(&t2, &[&[1], &[1]]);
        let bez = bezout_mod(&big_g, &h).unwrap();
        let lift = hensel_lift(&b, &big_g, &h, &bez, &xm(5)).unwrap();
        assert_eq!(lift.steps.len(), 2);
        assert_eq!(lift.steps[0].g_star.to_string(), "y + 2*x^3 + x^2 + x");
        assert_eq!(lift.steps[0].h_star.to_string(), "y + x^3 + 1");
        assert_eq!(lift.steps[1].g_star.to_string(), "y - 2*x^7 + x^6 + x^5 + x^4 + 2*x^3 + x^2 + x");
        assert_eq!(lift.steps[1].h_star.to_string(), "y + 2*x^7 + x^5 + x^3 + 1");
        assert_eq!(lift.h_star.to_string(), "y + x^3 + 1");
    }

    #[test]
    fn target_equal_to_start_is_identity() {
        let t = xm(2);
        let big_g = YPoly::from_i64s(&t, &[&[0, 1], &[1]]);
        let h = YPoly::from_i64s(&t, &[&[1], &[1]]);
        let gi = &big_g * &h;
        let bez = bezout_mod(&big_g, &h).unwrap();
        let lift = hensel_lift(&gi, &big_g, &h, &bez, &t).unwrap();
        assert!(lift.steps.is_empty());
        assert_eq!((lift.g_star, lift.h_star), (big_g, h));
    }
}
