//! Random instances with a known chain skeleton.
//!
//! Block `i` is `G_i = prod_j (y - beta_i - p r_ij)`, all roots congruent to
//! `beta_i` modulo `p`. `a` contains `G_i` and `b` contains
//! `G_i + p^(e_i) H_i` with `H_i(beta_i)` a unit modulo `p`, so `G_i` is a
//! common factor at precision exactly `e_i`. Extra linear factors of `a` and
//! `b` sit over residues not shared with anything else.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bipoly::YPoly;
use crate::error::{Error, Result};
use crate::ring::{Field, Modulus, Scalar, XPoly};

/// Block layout of a planted instance. `blocks` holds `(e_i, deg G_i)` with
/// strictly increasing precisions. `p` is drawn at random unless fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub field: Field,
    pub p: Option<XPoly>,
    pub deg_p: usize,
    pub e: usize,
    pub blocks: Vec<(usize, usize)>,
    pub extra_a: usize,
    pub extra_b: usize,
}

#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub a: YPoly,
    pub b: YPoly,
    pub p: XPoly,
    pub e: usize,
    pub shape: Shape,
    /// The planted `G_i`, as they appear in `a`.
    pub blocks: Vec<YPoly>,
    /// Expected `Tree`.
    pub tree: Vec<XPoly>,
    /// Expected `deg C[i]`.
    pub degrees: Vec<usize>,
}

fn residue_count(field: Field, deg_p: usize) -> usize {
    match field {
        Field::Rational => usize::MAX,
        Field::Prime(q) => (q as usize).saturating_pow(deg_p as u32),
    }
}

/// A random shape with `deg_y <= max_deg_y`.
pub fn random_shape<R: Rng>(rng: &mut R, fields: &[Field], max_deg_y: usize, max_e: usize, max_deg_p: usize) -> Shape {
    let field = *fields.choose(rng).expect("at least one field");
    let deg_p = rng.gen_range(1..=max_deg_p.max(1));
    let e = rng.gen_range(1..=max_e.max(1));
    let max_deg_y = max_deg_y.max(1);
    let common = rng.gen_range(0..=max_deg_y);
    let extra_a = rng.gen_range(0..=max_deg_y - common);
    let extra_b = rng.gen_range(0..=extra_a);
    let spare = residue_count(field, deg_p).saturating_sub(usize::from(extra_a > 0) + usize::from(extra_b > 0));
    let max_blocks = common.min(e).min(spare);
    let s = if max_blocks == 0 { 0 } else { rng.gen_range(1..=max_blocks) };

    let mut precisions: Vec<usize> = (1..=e).collect();
    precisions.shuffle(rng);
    precisions.truncate(s);
    precisions.sort_unstable();
    // Split `common` into `s` positive degrees; leftover degree goes to `a`.
    let mut degrees = vec![1; s];
    for _ in s..common {
        if s == 0 {
            break;
        }
        degrees[rng.gen_range(0..s)] += 1;
    }
    let extra_a = if s == 0 { extra_a + common } else { extra_a };
    let extra_a = extra_a.min(max_deg_y);
    Shape { field, p: None, deg_p, e, blocks: precisions.into_iter().zip(degrees).collect(), extra_a, extra_b }
}

fn small_scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
        Field::Prime(q) => field.from_i64(rng.gen_range(0..q as i64)),
    }
}

fn random_xpoly<R: Rng>(rng: &mut R, field: Field, len: usize) -> XPoly {
    XPoly::new(field, (0..len).map(|_| small_scalar(rng, field)).collect())
}

fn has_root(p: &XPoly, q: u64) -> bool {
    let field = p.field();
    (0..q).any(|c| {
        let c = field.from_i64(c as i64);
        let mut acc = field.zero();
        for a in p.coeffs().iter().rev() {
            acc = &(&acc * &c) + a;
        }
        acc.is_zero()
    })
}

/// A random monic irreducible of degree 1 or 2.
fn random_irreducible<R: Rng>(rng: &mut R, field: Field, deg: usize) -> XPoly {
    let one = field.one();
    match (field, deg) {
        (_, 1) => XPoly::new(field, vec![small_scalar(rng, field), one]),
        (Field::Rational, _) => {
            // x^2 + c x + d with c^2 < 4 d.
            let c = rng.gen_range(-2..=2i64);
            let d = c * c / 4 + rng.gen_range(1..=3);
            XPoly::from_i64s(field, &[d, c, 1])
        }
        (Field::Prime(q), _) => loop {
            let p = XPoly::new(field, vec![small_scalar(rng, field), small_scalar(rng, field), one.clone()]);
            if !has_root(&p, q) {
                break p;
            }
        },
    }
}

/// `count` pairwise distinct residues modulo a polynomial of degree `deg_p`.
fn distinct_residues<R: Rng>(rng: &mut R, field: Field, deg_p: usize, count: usize) -> Vec<XPoly> {
    let mut out: Vec<XPoly> = Vec::with_capacity(count);
    // Small rationals run out; widen the range enough for `count` values.
    let spread = 3.max(count as i64);
    while out.len() < count {
        let r = match field {
            Field::Rational => {
                XPoly::new(field, (0..deg_p).map(|_| field.from_i64(rng.gen_range(-spread..=spread))).collect())
            }
            Field::Prime(_) => random_xpoly(rng, field, deg_p),
        };
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn linear(t: &Modulus, root: &XPoly) -> YPoly {
    YPoly::new(t, vec![-root, XPoly::one(t.field())])
}

fn product(t: &Modulus, factors: impl IntoIterator<Item = YPoly>) -> YPoly {
    factors.into_iter().fold(YPoly::one(t), |acc, f| &acc * &f)
}

fn check_shape(shape: &Shape) -> Result<()> {
    let bad = |msg: String| Err(Error::Precondition(msg));
    if shape.e == 0 {
        return bad("e must be positive".into());
    }
    if let Some(p) = &shape.p {
        if p.field() != shape.field || !p.is_monic() || p.degree() as usize != shape.deg_p {
            return bad(format!("{p} does not match the shape's field and degree"));
        }
    } else if !(1..=2).contains(&shape.deg_p) {
        return bad(format!("random p of degree {} is not supported", shape.deg_p));
    }
    if shape.blocks.windows(2).any(|w| w[0].0 >= w[1].0) {
        return bad("block precisions must increase strictly".into());
    }
    if shape.blocks.iter().any(|&(e_i, m)| e_i == 0 || e_i > shape.e || m == 0) {
        return bad(format!("block precisions must lie in 1..={} with positive degrees", shape.e));
    }
    let pools = usize::from(shape.extra_a > 0) + usize::from(shape.extra_b > 0);
    if shape.blocks.len() + pools > residue_count(shape.field, shape.deg_p) {
        return bad("not enough residues modulo p for the requested blocks".into());
    }
    Ok(())
}

/// Build an instance of the given shape.
pub fn plant_instance<R: Rng>(rng: &mut R, shape: &Shape) -> Result<PlantedInstance> {
    check_shape(shape)?;
    let field = shape.field;
    let p = match &shape.p {
        Some(p) => p.clone(),
        None => random_irreducible(rng, field, shape.deg_p),
    };
    let t_poly = p.pow(shape.e as u32);
    let t = Modulus::new(t_poly.clone()).expect("p^e is monic");
    let dt = t.degree();
    let s = shape.blocks.len();

    let available = residue_count(field, shape.deg_p);
    let pools = usize::from(shape.extra_a > 0) + usize::from(shape.extra_b > 0);
    let want = s + shape.extra_a + shape.extra_b;
    let residues = distinct_residues(rng, field, shape.deg_p, want.min(available).max(s + pools));
    let (betas, rest) = residues.split_at(s);
    let (pool_a, pool_b) = if shape.extra_b > 0 {
        let split = (rest.len() - 1).min(shape.extra_a.max(1));
        rest.split_at(split)
    } else {
        (rest, &rest[rest.len()..])
    };

    let mut a_factors = Vec::new();
    let mut b_factors = Vec::new();
    let mut blocks = Vec::new();
    for (i, &(e_i, m_i)) in shape.blocks.iter().enumerate() {
        let roots: Vec<XPoly> = (0..m_i).map(|_| &betas[i] + &(&p * &random_xpoly(rng, field, dt))).collect();
        let g = product(&t, roots.iter().map(|r| linear(&t, r)));
        a_factors.push(g.clone());
        blocks.push(g.clone());
        if e_i >= shape.e {
            b_factors.push(g);
            continue;
        }
        // H = u + (y - beta) R with u a unit modulo p.
        let u = loop {
            let u = random_xpoly(rng, field, shape.deg_p);
            if !u.is_zero() {
                break u;
            }
        };
        let r = YPoly::new(&t, (0..m_i.saturating_sub(1)).map(|_| random_xpoly(rng, field, dt)).collect());
        let h = &YPoly::constant(&t, u) + &(&linear(&t, &betas[i]) * &r);
        b_factors.push(&g + &h.scale(&p.pow(e_i as u32)));
    }
    for k in 0..shape.extra_a {
        let base = &pool_a[k % pool_a.len()];
        a_factors.push(linear(&t, &(base + &(&p * &random_xpoly(rng, field, dt)))));
    }
    for k in 0..shape.extra_b {
        let base = &pool_b[k % pool_b.len()];
        b_factors.push(linear(&t, &(base + &(&p * &random_xpoly(rng, field, dt)))));
    }
    let mut a = product(&t, a_factors);
    let mut b = product(&t, b_factors);
    if b.degree() > a.degree() {
        std::mem::swap(&mut a, &mut b);
    }

    let (tree, degrees) = if s == 0 {
        (vec![t_poly], vec![0])
    } else {
        let tree = shape.blocks.iter().map(|&(e_i, _)| p.pow(e_i as u32)).collect();
        let degrees = (0..s).map(|i| shape.blocks[i..].iter().map(|&(_, m)| m).sum()).collect();
        (tree, degrees)
    };
    Ok(PlantedInstance { a, b, p, e: shape.e, shape: shape.clone(), blocks, tree, degrees })
}
