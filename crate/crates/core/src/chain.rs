//! The largest common factor routine and the gcd-chain driver.

use crate::bipoly::YPoly;
use crate::error::{Error, Result};
use crate::lifting::{bezout_mod, hensel_lift};
use crate::nilpotent::nilpotent_factor;
use crate::ring::{Modulus, XPoly};
use crate::subresultant::subres_modified_traced;
use crate::trace::{Event, Trace};
use crate::weierstrass::weierstrass_monic;

/// What [`largest_factor`] hands to the next iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Next {
    End,
    /// Monic `B` modulo the remaining precision `p^l`.
    Continue {
        b: YPoly,
        rest: Modulus,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargestFactorOutcome {
    /// Monic, with `<g, T1> = <f, A, T1>`; its coefficients are reduced
    /// modulo the input modulus.
    pub g: YPoly,
    /// The precision `p^e1` at which `g` is the common factor.
    pub t1: XPoly,
    pub next: Next,
}

/// Largest common factor of `f` and `A` modulo their modulus `T`.
pub fn largest_factor(f: &YPoly, a: &YPoly) -> Result<LargestFactorOutcome> {
    largest_factor_traced(f, a, &mut Trace::disabled())
}

pub fn largest_factor_traced(f: &YPoly, a: &YPoly, trace: &mut Trace) -> Result<LargestFactorOutcome> {
    let t = f.modulus().clone();
    if a.modulus() != &t {
        return Err(Error::ModulusMismatch(t.to_string(), a.modulus().to_string()));
    }
    if !f.is_monic() || !(a.is_zero() || a.is_monic()) {
        return Err(Error::Precondition("largestFactor needs monic inputs".into()));
    }
    if f.degree() < a.degree() {
        return Err(Error::Precondition(format!("deg {f} < deg {a}")));
    }
    let end = |g: YPoly| LargestFactorOutcome { g, t1: t.poly().clone(), next: Next::End };
    if a.is_zero() {
        trace.record(|| Event::EarlyEnd { reason: "A = 0" });
        return Ok(end(f.clone()));
    }
    if a.degree() == 0 {
        trace.record(|| Event::EarlyEnd { reason: "deg A = 0" });
        return Ok(end(a.clone()));
    }

    let out = subres_modified_traced(a, f, trace)?;
    let s_j = &out.chain[out.j];
    let g = weierstrass_monic(s_j, out.i)?;
    trace.record(|| Event::WeierstrassMonic { f: s_j.clone(), k: out.i, q: g.clone() });
    let p = match out.p {
        Some(p) if &p != t.poly() && !g.is_one() => p,
        // A unit g means <f, A> is the unit ideal already modulo p.
        _ => return Ok(end(g)),
    };
    let s = out.chain[out.j + 1].exact_div_xpoly(&p)?;
    trace.record(|| Event::ExactDivision { s: out.chain[out.j + 1].clone(), p: p.clone(), quotient: s.clone() });
    let nf = nilpotent_factor(&s);
    trace.record(|| Event::NilpotentFactor { s: s.clone(), p: nf.p.clone(), index: nf.signed_index() });
    let k = nf.index.ok_or_else(|| Error::InvariantBreach(format!("{s} is nilpotent after removing {p}")))?;
    let b = weierstrass_monic(&s, k)?;
    trace.record(|| Event::WeierstrassMonic { f: s.clone(), k, q: b.clone() });
    let rest = s.modulus().clone();
    Ok(LargestFactorOutcome { g, t1: p, next: Next::Continue { b, rest } })
}

/// One component `(k[x]/<T_i>)[y]/<G_i>` of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub g: YPoly,
    pub big_g: YPoly,
    pub modulus: Modulus,
}

/// `C = [g_1, ..., g_s]`, `D = [G_1, ..., G_(s-1)]`, `Tree = [T_1, ..., T_s]`.
///
/// `g_i` is reduced modulo `T_(i+1)` (modulo `T_s` for the last one), the
/// precision at which `g_i = G_i g_(i+1)` holds; `G_i` is reduced modulo `T_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdChain {
    pub c: Vec<YPoly>,
    pub d: Vec<YPoly>,
    pub tree: Vec<XPoly>,
}

impl GcdChain {
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// The blocks `(G_i, T_i)`, with `G_s = g_s`.
    pub fn blocks(&self) -> Result<Vec<Block>> {
        let s = self.c.len();
        (0..s)
            .map(|i| {
                let modulus = Modulus::new(self.tree[i].clone())?;
                let big_g = if i + 1 < s { &self.d[i] } else { &self.c[i] };
                Ok(Block { g: self.c[i].reduce_to(&modulus)?, big_g: big_g.reduce_to(&modulus)?, modulus })
            })
            .collect()
    }
}

/// The gcd chain of `a` and `b` modulo their common primary modulus.
pub fn gcd_chain(a: &YPoly, b: &YPoly) -> Result<GcdChain> {
    gcd_chain_traced(a, b, &mut Trace::disabled())
}

pub fn gcd_chain_traced(a: &YPoly, b: &YPoly, trace: &mut Trace) -> Result<GcdChain> {
    let t = a.modulus().clone();
    if b.modulus() != &t {
        return Err(Error::ModulusMismatch(t.to_string(), b.modulus().to_string()));
    }
    if !a.is_monic() || !(b.is_zero() || b.is_monic()) {
        return Err(Error::Precondition("gcd chain inputs must be monic".into()));
    }
    if a.degree() < b.degree() {
        return Err(Error::Precondition(format!("deg {a} < deg {b}")));
    }

    // `work[i]` is g_(i+1) modulo the full T, so that every later
    // iteration starts from a representative that is correct to full precision.
    let mut work: Vec<YPoly> = Vec::new();
    let mut d: Vec<YPoly> = Vec::new();
    let mut tree: Vec<XPoly> = Vec::new();
    let mut g_cur = a.clone();
    let mut next = Next::Continue { b: b.clone(), rest: t.clone() };
    let mut iteration = 0usize;

    while let Next::Continue { b: b_cur, rest } = next {
        if iteration > 0 && b_cur.is_one() {
            break;
        }
        let f = g_cur.reduce_to(&rest)?;
        trace.record(|| Event::LargestFactorCall { iteration, f: f.clone(), a: b_cur.clone() });
        let out = largest_factor_traced(&f, &b_cur, trace)?;
        trace.record(|| Event::LargestFactorReturn {
            g: out.g.clone(),
            t1: out.t1.clone(),
            b: match &out.next {
                Next::Continue { b, .. } => Some(b.clone()),
                Next::End => None,
            },
            rest: match &out.next {
                Next::Continue { rest, .. } => Some(rest.poly().clone()),
                Next::End => None,
            },
        });

        if iteration == 0 {
            tree.push(out.t1.clone());
            g_cur = out.g.clone();
        } else {
            let tp = Modulus::new(out.t1.clone())?;
            let h = out.g.reduce_to(&tp)?;
            let (big_g, rem) = g_cur.reduce_to(&tp)?.divrem_monic(&h)?;
            if !rem.is_zero() {
                return Err(Error::InvariantBreach(format!("{h} does not divide {g_cur} modulo {tp}")));
            }
            trace.record(|| Event::Cofactor { g_cofactor: big_g.clone() });
            let bez = bezout_mod(&big_g, &h).map_err(|e| match e {
                Error::Precondition(_) => Error::Precondition(format!(
                    "unsupported input: {big_g} and {h} share a factor modulo {tp}, so one residue class \
                     carries common factors at two precisions"
                )),
                e => e,
            })?;
            trace.record(|| Event::Bezout { alpha: bez.alpha.clone(), beta: bez.beta.clone() });
            let t_prev = tree.last().expect("first iteration pushed").clone();
            let t_next = &t_prev * &out.t1;
            if !t_next.divides(t.poly()) {
                return Err(Error::InvariantBreach(format!("{t_next} does not divide {t}")));
            }
            trace.record(|| Event::NextModulus { t: t_next.clone() });
            let lift = hensel_lift(&g_cur, &big_g, &h, &bez, &t)?;
            if &lift.g_star * &lift.h_star != g_cur
                || lift.g_star.reduce_to(&tp)? != big_g
                || lift.h_star.reduce_to(&tp)? != h
            {
                return Err(Error::InvariantBreach(format!("Hensel lift of {g_cur} modulo {t} breaks its contract")));
            }
            for step in &lift.steps {
                trace.record(|| Event::HenselStep {
                    from: step.from.clone(),
                    to: step.to.clone(),
                    g_star: step.g_star.clone(),
                    h_star: step.h_star.clone(),
                });
            }
            trace.record(|| Event::Lifted {
                g: g_cur.clone(),
                big_g: big_g.clone(),
                h: h.clone(),
                target: t.poly().clone(),
                g_star: lift.g_star.clone(),
                h_star: lift.h_star.clone(),
            });
            d.push(lift.g_star.reduce_to(&Modulus::new(t_prev)?)?);
            tree.push(t_next);
            g_cur = lift.h_star;
        }
        work.push(g_cur.clone());
        trace.record(|| Event::Block { c: work.clone(), d: d.clone(), tree: tree.clone() });
        next = out.next;
        iteration += 1;
    }

    // A trailing unit factor contributes an empty block.
    if work.len() > 1 && work.last().is_some_and(YPoly::is_one) {
        work.pop();
        d.pop();
        tree.pop();
    }
    let s = work.len();
    let c = work
        .iter()
        .enumerate()
        .map(|(i, w)| w.reduce_to(&Modulus::new(tree[(i + 1).min(s - 1)].clone())?))
        .collect::<Result<Vec<_>>>()?;
    let chain = GcdChain { c, d, tree };
    trace.record(|| Event::Finished { c: chain.c.clone(), d: chain.d.clone(), tree: chain.tree.clone() });
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;
    use crate::samples::*;

    #[test]
    fn running_example_first_call() {
        let t = x7_modulus();
        let (a, b) = (x7_system_a(&t), x7_system_b(&t));
        let out = largest_factor(&a, &b).unwrap();
        assert_eq!(out.g, b);
        assert_eq!(out.t1, XPoly::x_pow(Field::Rational, 3));
        let Next::Continue { b: b1, rest } = out.next else { panic!("expected B") };
        assert_eq!(b1.to_string(), "y + 3*x^3 - x^2 + 1");
        assert_eq!(rest.poly(), &XPoly::x_pow(Field::Rational, 4));
    }

    #[test]
    fn running_example_second_call() {
        let t4 = Modulus::x_pow(Field::Rational, 4).unwrap();
        let g1 = x7_system_b(&x7_modulus()).reduce_to(&t4).unwrap();
        let b1 = YPoly::from_i64s(&t4, &[&[1, 0, -1, 3], &[1]]);
        let out = largest_factor(&g1, &b1).unwrap();
        assert_eq!(out.g, b1);
        assert_eq!(out.t1, XPoly::x_pow(Field::Rational, 2));
        let Next::Continue { b, rest } = out.next else { panic!("expected B") };
        assert!(b.is_one());
        assert_eq!(rest.poly(), &XPoly::x_pow(Field::Rational, 2));
    }

    #[test]
    fn zero_and_unit_second_argument() {
        let t = x7_modulus();
        let a = x7_system_a(&t);
        let out = largest_factor(&a, &YPoly::zero(&t)).unwrap();
        assert_eq!((out.g, out.next), (a.clone(), Next::End));
        let chain = gcd_chain(&a, &YPoly::one(&t)).unwrap();
        assert_eq!(chain.c, vec![YPoly::one(&t)]);
        assert_eq!(chain.tree, vec![t.poly().clone()]);
        let chain = gcd_chain(&a, &YPoly::zero(&t)).unwrap();
        assert_eq!(chain.c, vec![a]);
    }

    #[test]
    fn equal_inputs_give_one_block() {
        let t = x3_modulus();
        let a = x3_system_a(&t);
        let chain = gcd_chain(&a, &a).unwrap();
        assert_eq!(chain.c, vec![a]);
        assert!(chain.d.is_empty());
        assert_eq!(chain.tree, vec![t.poly().clone()]);
    }
}
