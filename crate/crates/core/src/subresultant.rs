//! Subresultant pseudo-remainder sequences over `k[x]/<T>` and the modified
//! sequence that stops at the last non-nilpotent subresultant.

use crate::bipoly::YPoly;
use crate::error::{Error, Result};
use crate::nilpotent::nilpotent_factor;
use crate::ring::XPoly;
use crate::trace::{Event, Trace};
use crate::weierstrass::weierstrass_monic;

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
pub fn prem(a: &YPoly, b: &YPoly) -> Result<YPoly> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus().to_string(), b.modulus().to_string()));
    }
    let db = b.degree();
    if a.degree() < db {
        return Ok(a.clone());
    }
    let lb = b.lc().expect("nonzero").clone();
    let mut exp = (a.degree() - db + 1) as u64;
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= db {
        let shift = (r.degree() - db) as usize;
        let lr = r.lc().expect("nonzero").clone();
        r = &r.scale(&lb) - &b.scale(&lr).shift(shift);
        exp -= 1;
    }
    Ok(r.scale(&a.modulus().pow(&lb, exp)))
}

/// Result of [`subres_prs_mod`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrsOutcome {
    /// The whole sequence, ending with 0.
    Complete(Vec<YPoly>),
    /// Computing `S[t+2]` needed the inverse of `lc(S[t])`, which is not a
    /// unit. The prefix ends with `S[t+1]`.
    Failure { t: usize, prefix: Vec<YPoly> },
}

impl PrsOutcome {
    pub fn chain(&self) -> &[YPoly] {
        match self {
            PrsOutcome::Complete(c) => c,
            PrsOutcome::Failure { prefix, .. } => prefix,
        }
    }
}

/// Subresultant p.r.s. of `a`, `b` modulo `T` (Brown and Collins
/// normalization): `S[i+1] = prem(S[i-1], S[i]) / beta_i` with
///
/// * `beta_1 = (-1)^(d_1 + 1)`, `gamma_1 = -1`,
/// * `gamma_i = (-lc S[i-1])^(d_(i-1)) gamma_(i-1)^(1 - d_(i-1))`,
/// * `beta_i = -lc(S[i-1]) gamma_i^(d_i)`,
///
/// where `d_i = deg S[i-1] - deg S[i]`. Each `S[i+1]` equals the
/// determinantal subresultant of index `deg S[i] - 1`.
pub fn subres_prs_mod(a: &YPoly, b: &YPoly) -> Result<PrsOutcome> {
    if !a.is_monic() || !b.is_monic() {
        return Err(Error::Precondition("subresultant inputs must be monic".into()));
    }
    if a.degree() < b.degree() {
        return Err(Error::Precondition(format!("deg {a} < deg {b}")));
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus().to_string(), b.modulus().to_string()));
    }
    let t = a.modulus().clone();
    let field = t.field();
    let one = XPoly::one(field);
    let minus_one = -&one;

    let mut chain = vec![a.clone(), b.clone()];
    let mut gamma = minus_one.clone();
    let mut prev_d = 0u64;
    let mut i = 1usize;
    loop {
        let (ri1, ri) = (&chain[i - 1], &chain[i]);
        if ri.is_zero() {
            return Ok(PrsOutcome::Complete(chain));
        }
        let d = (ri1.degree() - ri.degree()) as u64;
        let beta = if i == 1 {
            if d % 2 == 0 {
                minus_one.clone()
            } else {
                one.clone()
            }
        } else {
            let lc_prev = ri1.lc().expect("nonzero");
            if !t.is_unit(lc_prev) {
                return Ok(PrsOutcome::Failure { t: i - 1, prefix: chain });
            }
            let neg_lc = t.reduce(&-lc_prev);
            // gamma_i = (-lc)^(d_(i-1)) * gamma_(i-1)^(1 - d_(i-1)); d_(i-1) >= 1 here
            // except possibly when i = 2.
            let g_prev_inv = t.inverse(&gamma)?;
            gamma = if prev_d == 0 {
                t.mul(&t.pow(&neg_lc, prev_d), &gamma)
            } else {
                t.mul(&t.pow(&neg_lc, prev_d), &t.pow(&g_prev_inv, prev_d - 1))
            };
            t.mul(&neg_lc, &t.pow(&gamma, d))
        };
        let beta_inv = t.inverse(&beta)?;
        let next = prem(ri1, ri)?.scale(&beta_inv);
        chain.push(next);
        prev_d = d;
        i += 1;
    }
}

/// Output of [`subres_modified`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresOutcome {
    /// The sequence `[S_0, S_1, ...]` that produced the answer; after a
    /// renormalization it is the sequence of the renormalized pair.
    pub chain: Vec<YPoly>,
    /// Zero-based position of the last non-nilpotent entry; every entry up
    /// to it has a unit leading coefficient.
    pub j: usize,
    /// Degree of the top invertible coefficient of `chain[j]`.
    pub i: usize,
    /// Largest divisor `p^l` of `chain[j+1]`, absent when that entry is 0.
    pub p: Option<XPoly>,
}

/// The modified subresultant sequence. The pair is ordered so the first
/// entry has the larger degree (`f` first on ties).
pub fn subres_modified(a: &YPoly, f: &YPoly) -> Result<SubresOutcome> {
    subres_modified_traced(a, f, &mut Trace::disabled())
}

pub fn subres_modified_traced(a: &YPoly, f: &YPoly, trace: &mut Trace) -> Result<SubresOutcome> {
    let cap = (a.degree().max(0) + f.degree().max(0)) as usize + 1;
    let (big, small) = if f.degree() >= a.degree() { (f, a) } else { (a, f) };
    subres_rec(big, small, 0, cap, trace)
}

fn subres_rec(a: &YPoly, b: &YPoly, depth: usize, cap: usize, trace: &mut Trace) -> Result<SubresOutcome> {
    if depth > cap {
        return Err(Error::InvariantBreach(format!("subresultant renormalization exceeded depth {cap}")));
    }
    trace.record(|| Event::SubresCall { depth, a: a.clone(), b: b.clone() });
    let outcome = subres_prs_mod(a, b)?;
    trace.record(|| Event::SubresChain {
        chain: outcome.chain().to_vec(),
        failed_at: match &outcome {
            PrsOutcome::Failure { t, .. } => Some(*t),
            PrsOutcome::Complete(_) => None,
        },
    });
    let chain = match outcome {
        PrsOutcome::Complete(chain) => chain,
        PrsOutcome::Failure { prefix, .. } => prefix,
    };
    let t = a.modulus();
    // Every step up to the first entry with a non-unit leading coefficient
    // preserves the ideal <a, b>. The entry after it does not, so it is never used.
    let last = chain.iter().rposition(|s| !s.is_zero()).expect("a is monic");
    let bad = (2..=last).find(|&k| !t.is_unit(chain[k].lc().expect("nonzero")));
    let Some(bad) = bad else {
        let nf = nilpotent_factor(&chain[last]);
        trace.record(|| Event::NilpotentFactor { s: chain[last].clone(), p: nf.p.clone(), index: nf.signed_index() });
        let i = nf.index.expect("unit leading coefficient");
        trace.record(|| Event::SubresReturn { j: last, i, p: None });
        return Ok(SubresOutcome { chain, j: last, i, p: None });
    };

    let nf = nilpotent_factor(&chain[bad]);
    trace.record(|| Event::NilpotentFactor { s: chain[bad].clone(), p: nf.p.clone(), index: nf.signed_index() });
    let nf_prev = nilpotent_factor(&chain[bad - 1]);
    let k_prev = nf_prev.index.expect("unit leading coefficient");
    match nf.index {
        None => {
            trace.record(|| Event::NilpotentFactor {
                s: chain[bad - 1].clone(),
                p: nf_prev.p.clone(),
                index: nf_prev.signed_index(),
            });
            let j = bad - 1;
            trace.record(|| Event::SubresReturn { j, i: k_prev, p: Some(nf.p.clone()) });
            Ok(SubresOutcome { chain, j, i: k_prev, p: Some(nf.p) })
        }
        Some(k) => {
            let new_b = weierstrass_monic(&chain[bad], k)?;
            trace.record(|| Event::WeierstrassMonic { f: chain[bad].clone(), k, q: new_b.clone() });
            let new_a = weierstrass_monic(&chain[bad - 1], k_prev)?;
            trace.record(|| Event::WeierstrassMonic { f: chain[bad - 1].clone(), k: k_prev, q: new_a.clone() });
            subres_rec(&new_a, &new_b, depth + 1, cap, trace)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Modulus};
    use crate::samples::{x7_modulus, x7_system_a, x7_system_b};

    #[test]
    fn prem_by_monic_is_remainder() {
        let t = x7_modulus();
        let (a, b) = (x7_system_a(&t), x7_system_b(&t));
        assert_eq!(prem(&a, &b).unwrap(), &a - &b);
        assert!(prem(&a, &a).unwrap().is_zero());
        assert!(prem(&a, &YPoly::zero(&t)).is_err());
    }

    #[test]
    fn prem_with_non_unit_leading_coefficient() {
        let t = Modulus::x_pow(Field::Rational, 4).unwrap();
        // (y^2 + 1) by (x y + 1): x^2 (y^2 + 1) - (x y - 1)(x y + 1) = x^2 + 1
        let a = YPoly::from_i64s(&t, &[&[1], &[0], &[1]]);
        let b = YPoly::from_i64s(&t, &[&[1], &[0, 1]]);
        assert_eq!(prem(&a, &b).unwrap(), YPoly::from_i64s(&t, &[&[1, 0, 1]]));
    }

    #[test]
    fn running_example_first_sequence() {
        let t = x7_modulus();
        let (a, b) = (x7_system_a(&t), x7_system_b(&t));
        let out = subres_prs_mod(&a, &b).unwrap();
        let PrsOutcome::Complete(chain) = out else { panic!("unexpected failure") };
        assert_eq!(chain.len(), 4);
        assert_eq!(chain[2].to_string(), "(-x^6 + x^5 + x^3)*y + 2*x^6 + x^3");
        assert!(chain[3].is_zero());
    }

    #[test]
    fn running_example_modified() {
        let t = x7_modulus();
        let (a, b) = (x7_system_a(&t), x7_system_b(&t));
        let out = subres_modified(&b, &a).unwrap();
        assert_eq!(out.chain[0], a);
        assert_eq!(out.j, 1);
        assert_eq!(out.i, 2);
        assert_eq!(out.p, Some(XPoly::x_pow(Field::Rational, 3)));
    }

    #[test]
    fn coprime_pair_ends_with_unit() {
        let t = Modulus::x_pow(Field::Prime(7), 3).unwrap();
        let a = YPoly::from_i64s(&t, &[&[0, 1], &[1]]);
        let b = YPoly::from_i64s(&t, &[&[1], &[0], &[1]]);
        let out = subres_modified(&b, &a).unwrap();
        assert_eq!(out.chain.len(), 4);
        assert_eq!(out.j, 2);
        assert_eq!(out.i, 0);
        assert_eq!(out.p, None);
    }

    #[test]
    fn failure_reports_prefix() {
        // S[2] has the nilpotent leading coefficient x, so S[4] cannot be formed.
        let t = Modulus::x_pow(Field::Rational, 2).unwrap();
        let a = YPoly::from_i64s(&t, &[&[0], &[0], &[0], &[1]]);
        let b = YPoly::from_i64s(&t, &[&[1], &[0], &[0, 1], &[1]]);
        match subres_prs_mod(&a, &b).unwrap() {
            PrsOutcome::Failure { t, prefix } => {
                assert_eq!(t, 2);
                assert_eq!(prefix.len(), 4);
            }
            PrsOutcome::Complete(c) => panic!("expected failure, got {c:?}"),
        }
        let out = subres_modified(&b, &a).unwrap();
        assert!(nilpotent_factor(&out.chain[out.j]).index.is_some());
    }
}
