//! Independent checks of a computed gcd chain. These oracles are free to
//! factor `T` and to use linear algebra over `k`; the algorithms are not.

pub mod campaign;
pub mod linalg;
pub mod planted;

use std::fmt;

use crate::bipoly::YPoly;
use crate::chain::GcdChain;
use crate::error::Result;
use crate::ring::{xpoly_gcd, Field, Modulus, Scalar, XPoly};

pub use planted::{plant_instance, random_shape, PlantedInstance, Shape};

/// `T / gcd(T, T')`, taking `q`-th roots when the derivative vanishes in
/// characteristic `q`. For `T = p^e` this is `p`.
pub fn squarefree_part(t: &XPoly) -> XPoly {
    if t.degree() <= 0 {
        return XPoly::one(t.field());
    }
    let dt = t.derivative();
    if dt.is_zero() {
        let q = t.field().characteristic() as usize;
        let root: Vec<Scalar> = t.coeffs().iter().step_by(q).cloned().collect();
        return squarefree_part(&XPoly::new(t.field(), root));
    }
    let g = xpoly_gcd(t, &dt).expect("t is nonzero");
    t.exact_div(&g).expect("gcd divides t").monic()
}

/// Largest `v <= cap` with `p^v | c`; zero has valuation `cap`.
pub fn valuation(c: &XPoly, p: &XPoly, cap: usize) -> usize {
    let mut c = c.clone();
    let mut v = 0;
    while v < cap {
        if c.is_zero() {
            return cap;
        }
        match c.divrem(p) {
            Ok((q, r)) if r.is_zero() => {
                c = q;
                v += 1;
            }
            _ => break,
        }
    }
    v
}

fn ypoly_valuation(f: &YPoly, p: &XPoly, cap: usize) -> usize {
    f.coeffs().iter().map(|c| valuation(c, p, cap)).min().unwrap_or(cap)
}

/// Irreducibility of a monic `p`: decided over `GF(q)` (Ben-Or) and over
/// `QQ` up to degree 3 with small coefficients; `None` when undecided.
pub fn is_irreducible(p: &XPoly) -> Option<bool> {
    let d = p.degree();
    if d <= 0 {
        return Some(false);
    }
    if d == 1 {
        return Some(true);
    }
    match p.field() {
        Field::Prime(q) => {
            let m = Modulus::new(p.clone()).ok()?;
            let x = XPoly::x_pow(p.field(), 1);
            let mut h = x.clone();
            for _ in 0..d / 2 {
                h = m.pow(&h, q);
                let g = xpoly_gcd(&(&h - &x), p).ok()?;
                if g.degree() > 0 {
                    return Some(false);
                }
            }
            Some(true)
        }
        Field::Rational if d <= 3 => has_rational_root(p).map(|r| !r),
        Field::Rational => None,
    }
}

fn has_rational_root(p: &XPoly) -> Option<bool> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive, Zero};
    let rats: Vec<_> = p
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rational(r) => r.clone(),
            Scalar::Prime { .. } => unreachable!("rational field"),
        })
        .collect();
    let den = rats.iter().fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(true);
    }
    let bound = 1_000_000;
    let a0 = ints[0].abs().to_i64().filter(|&v| v <= bound)?;
    let an = ints[ints.len() - 1].abs().to_i64().filter(|&v| v <= bound)?;
    let divisors = |n: i64| (1..=n).filter(move |k| n % k == 0);
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1, -1] {
                let root = p.field().from_ratio(&BigInt::from(sign * num), &BigInt::from(den)).ok()?;
                let mut acc = p.field().zero();
                for c in p.coeffs().iter().rev() {
                    acc = &(&acc * &root) + c;
                }
                if acc.is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

/// `(p, e)` with `T = p^e`, or `None` when `T` is known not to be a power
/// of an irreducible. Undecided irreducibility is given the benefit of the doubt.
pub fn primary_decomposition(t: &XPoly) -> Option<(XPoly, usize)> {
    let p = squarefree_part(t);
    let e = t.degree() as usize / p.degree().max(1) as usize;
    let ok = p.degree() >= 1 && &p.pow(e as u32) == t && is_irreducible(&p) != Some(false);
    ok.then_some((p, e))
}

/// The precision `l` at which the monic `c` is a common factor of `a` and
/// `b`: the `p`-adic valuation of the two division remainders, capped at `e`.
pub fn common_factor_precision(c: &YPoly, a: &YPoly, b: &YPoly) -> Result<usize> {
    let t = a.modulus();
    let (p, e) = primary_decomposition(t.poly())
        .ok_or_else(|| crate::Error::Precondition(format!("{t} is not a power of an irreducible")))?;
    let c = c.with_modulus(t);
    let ra = a.divrem_monic(&c)?.1;
    let rb = b.divrem_monic(&c)?.1;
    Ok(ypoly_valuation(&ra, &p, e).min(ypoly_valuation(&rb, &p, e)))
}

/// Coefficient vector of `f` (degree `< n` in `y`) in the basis `x^i y^j`.
fn flatten(f: &YPoly, n: usize, dt: usize, zero: &Scalar) -> Vec<Scalar> {
    let mut v = vec![zero.clone(); n * dt];
    for (j, c) in f.coeffs().iter().enumerate() {
        for (i, s) in c.coeffs().iter().enumerate() {
            v[j * dt + i] = s.clone();
        }
    }
    v
}

/// The images of `x^i y^j b`, `i < deg T`, `j < deg a`, in `(k[x]/T)[y]/<a>`.
fn span_rows(a: &YPoly, b: &YPoly) -> Result<Vec<Vec<Scalar>>> {
    let t = a.modulus();
    let n = a.degree() as usize;
    let dt = t.degree();
    let zero = t.field().zero();
    let mut rows = Vec::with_capacity(n * dt);
    let mut bj = b.divrem_monic(a)?.1;
    let x = XPoly::x_pow(t.field(), 1);
    for _ in 0..n {
        let mut xi = bj.clone();
        for _ in 0..dt {
            rows.push(flatten(&xi, n, dt, &zero));
            xi = xi.scale(&x);
        }
        bj = bj.shift(1).divrem_monic(a)?.1;
    }
    Ok(rows)
}

/// `dim_k k[x, y] / <T, a, b>` for `a` monic in `y`.
pub fn quotient_dimension(a: &YPoly, b: &YPoly) -> Result<usize> {
    let n = a.degree() as usize;
    let total = n * a.modulus().degree();
    if n == 0 {
        return Ok(0);
    }
    Ok(total - linalg::rank(span_rows(a, b)?))
}

/// Whether `h` lies in `<a, b, T>`, `a` monic in `y`.
pub fn ideal_contains(a: &YPoly, b: &YPoly, h: &YPoly) -> Result<bool> {
    if a.degree() == 0 {
        return Ok(true);
    }
    let n = a.degree() as usize;
    let t = a.modulus();
    let rows = span_rows(a, b)?;
    let base = linalg::rank(rows.clone());
    let mut with_h = rows;
    with_h.push(flatten(&h.divrem_monic(a)?.1, n, t.degree(), &t.field().zero()));
    Ok(linalg::rank(with_h) == base)
}

/// Whether `f` and `g` are coprime in `(k[x]/<p>)[y]`, `p` irreducible.
pub fn coprime_mod(f: &YPoly, g: &YPoly, p: &XPoly) -> bool {
    let Ok(m) = Modulus::new(p.clone()) else { return false };
    let (mut r0, mut r1) = (f.with_modulus(&m), g.with_modulus(&m));
    while !r1.is_zero() {
        let Ok(inv) = m.inverse(r1.lc().expect("nonzero")) else { return false };
        let Ok((_, r)) = r0.divrem_monic(&r1.scale(&inv)) else { return false };
        (r0, r1) = (r1, r);
    }
    r0.degree() == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Outcome of [`verify_chain`], one entry per named check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainReport {
    pub checks: Vec<Check>,
}

impl ChainReport {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), ok, detail: detail.into() });
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark} {}", c.name)?;
            } else {
                writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

fn all<I: IntoIterator<Item = (bool, String)>>(items: I) -> (bool, String) {
    let bad: Vec<String> = items.into_iter().filter(|(ok, _)| !ok).map(|(_, d)| d).collect();
    (bad.is_empty(), bad.join("; "))
}

/// Check the chain axioms and the two families of isomorphisms (through
/// dimension counts) for `chain` computed from `a`, `b` modulo `T`.
pub fn verify_chain(chain: &GcdChain, a: &YPoly, b: &YPoly) -> ChainReport {
    let mut rep = ChainReport::default();
    let t = a.modulus();
    let field: Field = t.field();
    let s = chain.c.len();

    let shape_ok = s >= 1 && chain.tree.len() == s && chain.d.len() + 1 == s;
    rep.push(
        "shape",
        shape_ok,
        if shape_ok {
            String::new()
        } else {
            format!("|C| = {s}, |D| = {}, |Tree| = {}", chain.d.len(), chain.tree.len())
        },
    );
    if !shape_ok {
        return rep;
    }
    let Some((p, e)) = primary_decomposition(t.poly()) else {
        rep.push("primary-modulus", false, format!("{t} is not a power of an irreducible"));
        return rep;
    };
    let moduli: Vec<Option<Modulus>> = chain.tree.iter().map(|m| Modulus::new(m.clone()).ok()).collect();

    let (ok, detail) = all((0..s).map(|i| (chain.c[i].is_monic(), format!("C[{i}] is not monic"))));
    rep.push("monic", ok, detail);

    let (ok, detail) =
        all((1..s).map(|i| (chain.c[i].degree() < chain.c[i - 1].degree(), format!("deg C[{i}] >= deg C[{}]", i - 1))));
    rep.push("degrees-decreasing", ok, detail);

    let mut items = Vec::new();
    for i in 0..s {
        let m = &chain.tree[i];
        items.push((moduli[i].is_some(), format!("Tree[{i}] = {m} is not a valid modulus")));
        if i > 0 {
            let prev = &chain.tree[i - 1];
            items.push((
                m.degree() > prev.degree() && prev.divides(m),
                format!("Tree[{}] does not properly divide Tree[{i}]", i - 1),
            ));
        }
    }
    items.push((chain.tree[s - 1].divides(t.poly()), format!("Tree[{}] does not divide {t}", s - 1)));
    let (ok, detail) = all(items);
    rep.push("precisions-increasing", ok, detail);
    if moduli.iter().any(Option::is_none) {
        return rep;
    }
    let moduli: Vec<Modulus> = moduli.into_iter().map(Option::unwrap).collect();
    let exps: Vec<usize> = chain.tree.iter().map(|m| m.degree() as usize / p.degree() as usize).collect();

    // g_(i+1) | g_i modulo T_(i+1) with cofactor G_i modulo T_i.
    let (ok, detail) = all((0..s.saturating_sub(1)).map(|i| {
        let m1 = &moduli[i + 1];
        let res = (|| -> Result<bool> {
            let gi = chain.c[i].with_modulus(m1);
            let gn = chain.c[i + 1].with_modulus(m1);
            let (q, r) = gi.divrem_monic(&gn)?;
            Ok(r.is_zero() && q.reduce_to(&moduli[i])? == chain.d[i].with_modulus(&moduli[i]))
        })();
        (res.unwrap_or(false), format!("C[{}] * D[{i}] does not recombine to C[{i}]", i + 1))
    }));
    rep.push("divisibility", ok, detail);

    let blocks: Vec<YPoly> = (0..s)
        .map(|i| if i + 1 < s { chain.d[i].with_modulus(&moduli[i]) } else { chain.c[i].with_modulus(&moduli[i]) })
        .collect();

    let (ok, detail) = all((0..s).map(|i| {
        let m = &moduli[i];
        let g = &blocks[i];
        let res = (|| -> Result<bool> {
            let ra = a.reduce_to(m)?.divrem_monic(g)?.1;
            let rb = b.reduce_to(m)?.divrem_monic(g)?.1;
            Ok(ra.is_zero() && rb.is_zero())
        })();
        (res.unwrap_or(false), format!("a or b is nonzero modulo (G_{}, Tree[{i}])", i + 1))
    }));
    rep.push("membership", ok, detail);

    let mut items = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            items.push((
                coprime_mod(&blocks[i], &blocks[j], &p),
                format!("G_{} and G_{} share a factor mod {p}", i + 1, j + 1),
            ));
        }
    }
    let (ok, detail) = all(items);
    rep.push("coprime-blocks", ok, detail);

    let (ok, detail) = all((0..s).filter(|&i| chain.c[i].degree() > 0).map(|i| {
        let l = common_factor_precision(&chain.c[i], a, b).unwrap_or(0);
        (l >= exps[i], format!("C[{i}] is a common factor at precision {l} < {}", exps[i]))
    }));
    rep.push("common-factor-precision", ok, detail);

    let block_dim = |i: usize| chain.tree[i].degree() as usize * blocks[i].degree().max(0) as usize;
    let expected: usize = (0..s).map(block_dim).sum();
    let (ok, detail) = match quotient_dimension(a, b) {
        Ok(d) => (d == expected, format!("dim k[x,y]/<T,a,b> = {d}, blocks give {expected}")),
        Err(err) => (false, err.to_string()),
    };
    rep.push("dimension", ok, if ok { String::new() } else { detail });

    let (ok, detail) = all((0..s).map(|i| {
        let m = &moduli[i];
        let expected: usize = (0..i).map(block_dim).sum::<usize>()
            + chain.tree[i].degree() as usize * chain.c[i].degree().max(0) as usize;
        let got = a.reduce_to(m).and_then(|ar| quotient_dimension(&ar, &b.reduce_to(m)?));
        match got {
            Ok(d) => (d == expected, format!("level {}: dimension {d}, expected {expected}", i + 1)),
            Err(err) => (false, format!("level {}: {err}", i + 1)),
        }
    }));
    rep.push("block-dimensions", ok, detail);
    let _ = (field, e);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::*;

    #[test]
    fn squarefree_parts() {
        let q = Field::Rational;
        assert_eq!(squarefree_part(&XPoly::x_pow(q, 7)), XPoly::x_pow(q, 1));
        let p = XPoly::from_i64s(q, &[1, 0, 1]);
        assert_eq!(squarefree_part(&p.pow(3)), p);
        // (x + 1)^5 over GF(5) has zero derivative.
        let f5 = Field::Prime(5);
        let l = XPoly::from_i64s(f5, &[1, 1]);
        assert_eq!(squarefree_part(&l.pow(5)), l);
        assert_eq!(squarefree_part(&l.pow(11)), l);
        assert_eq!(primary_decomposition(&l.pow(11)), Some((l.clone(), 11)));
        assert_eq!(primary_decomposition(&(&l * &XPoly::x_pow(f5, 1))), None);
        assert_eq!(is_irreducible(&XPoly::from_i64s(f5, &[2, 0, 1])), Some(true));
        assert_eq!(is_irreducible(&XPoly::from_i64s(f5, &[1, 0, 1])), Some(false));
        assert_eq!(is_irreducible(&XPoly::from_i64s(q, &[-2, 0, 1])), Some(true));
        assert_eq!(is_irreducible(&XPoly::from_i64s(q, &[-4, 0, 9])), Some(false));
    }

    #[test]
    fn precisions_of_planted_factors() {
        let t = x3_modulus();
        let (a, b) = (x3_system_a(&t), x3_system_b(&t));
        let c = |rows: &[&[i64]]| YPoly::from_i64s(&t, rows);
        assert_eq!(common_factor_precision(&c(&[&[1], &[1]]), &a, &b).unwrap(), 1);
        assert_eq!(common_factor_precision(&c(&[&[0, 2], &[1]]), &a, &b).unwrap(), 2);
        assert_eq!(common_factor_precision(&c(&[&[-1, -1, -2], &[1]]), &a, &b).unwrap(), 3);
    }

    #[test]
    fn dimensions_of_worked_systems() {
        let t = x3_modulus();
        assert_eq!(quotient_dimension(&x3_system_a(&t), &x3_system_b(&t)).unwrap(), 6);
        let t = x7_modulus();
        assert_eq!(quotient_dimension(&x7_system_a(&t), &x7_system_b(&t)).unwrap(), 8);
        assert_eq!(quotient_dimension(&x7_system_a(&t), &YPoly::one(&t)).unwrap(), 0);
    }

    #[test]
    fn membership_in_ideal() {
        let t = x7_modulus();
        let (a, b) = (x7_system_a(&t), x7_system_b(&t));
        assert!(ideal_contains(&a, &b, &(&a - &b)).unwrap());
        assert!(!ideal_contains(&a, &b, &YPoly::one(&t)).unwrap());
    }

    #[test]
    fn blocks_coprime_mod_p() {
        let t = x3_modulus();
        let x = XPoly::x_pow(Field::Rational, 1);
        let f = YPoly::from_i64s(&t, &[&[1, 5], &[1]]);
        let g = YPoly::from_i64s(&t, &[&[-1, 2], &[1]]);
        assert!(coprime_mod(&f, &g, &x));
        assert!(!coprime_mod(&f, &YPoly::from_i64s(&t, &[&[1, 1], &[1]]), &x));
    }
}
