//! One PASS/FAIL line per acceptance criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gcdchain::samples::*;
use gcdchain::verify::campaign::{fitted_exponent, render_scaling, run_instance, scaling_series, CampaignConfig};
use gcdchain::verify::linalg::sylvester_subresultant;
use gcdchain::verify::{plant_instance, random_shape, verify_chain};
use gcdchain::{
    gcd_chain, gcd_chain_traced, nilpotent_factor, subres_prs_mod, weierstrass_factorization, weierstrass_monic, Event,
    Field, Modulus, Trace, XPoly, YPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [Field; 3] = [Field::Prime(5), Field::Prime(7), Field::Prime(101)];
const FAST: Duration = Duration::from_millis(100);

fn x_pow(n: usize) -> Modulus {
    Modulus::x_pow(Field::Rational, n).unwrap()
}

fn product(t: &Modulus, factors: &[&[&[i64]]]) -> YPoly {
    factors.iter().fold(YPoly::one(t), |acc, f| &acc * &YPoly::from_i64s(t, f))
}

fn three_block_example() -> Result<String, String> {
    let t = x3_modulus();
    let (a, b) = (x3_system_a(&t), x3_system_b(&t));
    let start = Instant::now();
    let chain = gcd_chain(&a, &b).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let x = XPoly::from_i64s(Field::Rational, &[0, 1]);
    let (x1, x2) = (x_pow(1), x_pow(2));
    let expected = [
        product(&x1, &[&[&[-1], &[1]], &[&[0], &[1]], &[&[1], &[1]]]),
        product(&x2, &[&[&[-1, -1], &[1]], &[&[0, 2], &[1]]]),
        YPoly::from_i64s(&t, &[&[-1, -1, -2], &[1]]),
    ];
    let blocks = chain.blocks().map_err(|e| e.to_string())?;
    let got: Vec<YPoly> = blocks.iter().map(|b| b.g.clone()).collect();
    if chain.tree != [x.clone(), x.pow(2), x.pow(3)] || got != expected {
        return Err(format!("got {chain:?}"));
    }
    if elapsed >= FAST {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("3 blocks in {elapsed:?}"))
}

fn running_example() -> Result<String, String> {
    let t = x7_modulus();
    let (a, b) = (x7_system_a(&t), x7_system_b(&t));
    let start = Instant::now();
    let chain = gcd_chain(&a, &b).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let x = XPoly::from_i64s(Field::Rational, &[0, 1]);
    let x5 = x_pow(5);
    let ok = chain.tree == [x.pow(3), x.pow(5)]
        && chain.c == [b.reduce_to(&x5).unwrap(), YPoly::from_i64s(&x5, &[&[1, 0, 0, 1], &[1]])]
        && chain.d == [YPoly::from_i64s(&x_pow(3), &[&[0, 1, 1], &[1]])];
    if !ok {
        return Err(format!("got {chain:?}"));
    }
    let mut trace = Trace::enabled();
    gcd_chain_traced(&a, &b, &mut trace).map_err(|e| e.to_string())?;
    let text = trace.render();
    for line in [
        "    y^2 + (2*x^6 + x^5 + x^4 + 2*x^3 + x^2 + x + 1)*y + 2*x^6 + 2*x^5 + 2*x^4 + x^3 + x^2 + x,\n    \
         y^2 + (x^6 + 2*x^5 + x^4 + 3*x^3 + x^2 + x + 1)*y + 4*x^6 + 2*x^5 + 2*x^4 + 2*x^3 + x^2 + x,\n    \
         (-x^6 + x^5 + x^3)*y + 2*x^6 + x^3,\n    0\n",
        "    y^2 + (3*x^3 + x^2 + x + 1)*y + 2*x^3 + x^2 + x,\n    y + 3*x^3 - x^2 + 1,\n    3*x^3 - x^2,\n    0\n",
        "G* = y + 2*x^3 + x^2 + x\n    g* = y + x^3 + 1",
        "G* = y - 2*x^7 + x^6 + x^5 + x^4 + 2*x^3 + x^2 + x\n    g* = y + 2*x^7 + x^5 + x^3 + 1",
    ] {
        if !text.contains(line) {
            return Err(format!("trace lacks {line:?}"));
        }
    }
    if elapsed >= FAST {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("C, D, Tree and trace listings match, {elapsed:?}"))
}

fn weierstrass_example() -> Result<String, String> {
    let t = x_pow(2);
    let f = YPoly::from_i64s(&t, &[&[1], &[1], &[0, 1]]);
    let q = weierstrass_monic(&f, 1).map_err(|e| e.to_string())?;
    let fac = weierstrass_factorization(&f, 1).map_err(|e| e.to_string())?;
    let u = YPoly::from_i64s(&t, &[&[1, -1], &[0, 1]]);
    let ok = q == YPoly::from_i64s(&t, &[&[1, 1], &[1]])
        && fac.q == q
        && fac.u == u
        && t.is_unit(&fac.u.coeff(0))
        && !t.is_unit(&fac.u.coeff(1))
        && &fac.u * &fac.q == f;
    if !ok {
        return Err(format!("q = {q}, u = {}", fac.u));
    }
    Ok(format!("q = {q}, u = {}", fac.u))
}

fn campaign_config() -> CampaignConfig {
    CampaignConfig { seed: 2024, fields: FIELDS.to_vec(), max_deg_y: 5, max_e: 4, max_deg_p: 2 }
}

fn property_campaign() -> Result<String, String> {
    let config = campaign_config();
    let count = 500;
    let start = Instant::now();
    let failed: Vec<String> = (0..count)
        .map(|n| run_instance(&config, n))
        .filter(|r| !r.passed())
        .map(|r| format!("#{} {:?}", r.index, r.outcome))
        .collect();
    let elapsed = start.elapsed();
    if !failed.is_empty() {
        return Err(format!("{} of {count} failed: {}", failed.len(), failed.join("; ")));
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{count} instances, 0 failures, {elapsed:?}"))
}

fn subresultant_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let (mut instances, mut entries) = (0, 0);
    while instances < 150 {
        let shape = random_shape(&mut rng, &FIELDS, 4, 4, 2);
        let inst = plant_instance(&mut rng, &shape).map_err(|e| e.to_string())?;
        if inst.b.degree() < 1 {
            continue;
        }
        instances += 1;
        let prs = subres_prs_mod(&inst.a, &inst.b).map_err(|e| e.to_string())?;
        let chain = prs.chain();
        for k in 2..chain.len() {
            if chain[k].is_zero() || chain[k - 1].degree() < 1 {
                continue;
            }
            let index = chain[k - 1].degree() as usize - 1;
            let minor = sylvester_subresultant(&inst.a, &inst.b, index);
            if minor != chain[k] {
                return Err(format!(
                    "S[{k}] = {} but minor {index} = {minor} for a = {}, b = {}",
                    chain[k], inst.a, inst.b
                ));
            }
            entries += 1;
        }
    }
    if entries == 0 {
        return Err("no entries compared".into());
    }
    Ok(format!("{instances} instances, {entries} entries equal their minors"))
}

fn hensel_contract() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut lifts = 0;
    for _ in 0..500 {
        let shape = random_shape(&mut rng, &FIELDS, 5, 4, 2);
        let inst = plant_instance(&mut rng, &shape).map_err(|e| e.to_string())?;
        let mut trace = Trace::enabled();
        gcd_chain_traced(&inst.a, &inst.b, &mut trace).map_err(|e| e.to_string())?;
        for ev in trace.events() {
            let Event::Lifted { g, big_g, h, target, g_star, h_star } = ev else { continue };
            let target = Modulus::new(target.clone()).map_err(|e| e.to_string())?;
            let tp = big_g.modulus();
            let residual = &g.with_modulus(&target) - &(&g_star.with_modulus(&target) * &h_star.with_modulus(&target));
            if !residual.is_zero() {
                return Err(format!("g - G* g* = {residual} for g = {g}"));
            }
            if g_star.reduce_to(tp).ok().as_ref() != Some(big_g) || h_star.reduce_to(tp).ok().as_ref() != Some(h) {
                return Err(format!("G* = {g_star}, g* = {h_star} do not reduce to {big_g}, {h}"));
            }
            lifts += 1;
        }
    }
    if lifts == 0 {
        return Err("no lift was exercised".into());
    }
    Ok(format!("{lifts} lifts"))
}

fn random_ring(rng: &mut ChaCha8Rng) -> (Modulus, XPoly) {
    let field = FIELDS[rng.gen_range(0..FIELDS.len())];
    let p = if field == Field::Prime(7) && rng.gen_bool(0.3) {
        XPoly::from_i64s(field, &[1, 0, 1])
    } else {
        XPoly::from_i64s(field, &[rng.gen_range(0..5), 1])
    };
    let e = rng.gen_range(1..=4);
    (Modulus::new(p.pow(e)).unwrap(), p)
}

fn nilpotent_dichotomy() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut nilpotent = 0;
    let count = 10_000;
    for _ in 0..count {
        let (t, p) = random_ring(&mut rng);
        let field = t.field();
        let len = rng.gen_range(0..=4);
        let coeffs: Vec<XPoly> = (0..len)
            .map(|_| {
                let c: Vec<i64> = (0..t.degree()).map(|_| rng.gen_range(0..101)).collect();
                XPoly::from_i64s(field, &c)
            })
            .collect();
        let shift = rng.gen_range(0..=t.degree() / p.degree() as usize);
        let f = YPoly::new(&t, coeffs).scale(&p.pow(shift as u32));
        let nf = nilpotent_factor(&f);
        let none = nf.index.is_none();
        if (nf.p.degree() > 0) != none {
            return Err(format!("P = {} with index {:?} for F = {f}", nf.p, nf.index));
        }
        if f.pow(t.degree() as u32).is_zero() != none {
            return Err(format!("F^deg T disagrees with index {:?} for F = {f}", nf.index));
        }
        nilpotent += usize::from(none);
    }
    Ok(format!("{count} polynomials, {nilpotent} nilpotent"))
}

fn scaling_report() -> Result<String, String> {
    let points = scaling_series(1, Field::Prime(7), 5, 3);
    println!("{}", render_scaling(&points).trim_end());
    let fit = fitted_exponent(&points).map_or("n/a".to_string(), |k| format!("{k:.2}"));
    Ok(format!("informational, fitted exponent in e*deg_p: {fit}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<String, String>); 8] = [
        ("three-block example modulo x^3", three_block_example),
        ("running example modulo x^7", running_example),
        ("Weierstrass example", weierstrass_example),
        ("planted campaign", property_campaign),
        ("subresultants against Sylvester minors", subresultant_oracle),
        ("Hensel lifting contract", hensel_contract),
        ("nilpotent dichotomy", nilpotent_dichotomy),
        ("scaling report", scaling_report),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", n + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}

#[test]
fn verified_examples_stay_verified() {
    let t = x3_modulus();
    let (a, b) = (x3_system_a(&t), x3_system_b(&t));
    assert!(verify_chain(&gcd_chain(&a, &b).unwrap(), &a, &b).all_ok());
}
