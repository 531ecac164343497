//! Human-readable rendering in the `2*x^3 - x + 1` style, descending degree.
//! Polynomials in `y` put non-monomial coefficients in parentheses:
//! `y^2 + (x + 1)*y + 2*x^6 + x^3`.

use crate::bipoly::YPoly;
use crate::ring::{Scalar, XPoly};

fn scalar_abs(c: &Scalar) -> (bool, String) {
    if c.is_negative() {
        (true, (-c).to_string())
    } else {
        (false, c.to_string())
    }
}

fn join_term(out: &mut String, body: &str) {
    if out.is_empty() {
        out.push_str(body);
    } else if let Some(rest) = body.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(body);
    }
}

fn power(var: &str, k: usize) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

pub fn format_xpoly(p: &XPoly, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = scalar_abs(c);
        let body = match (k, mag.as_str()) {
            (0, _) => mag,
            (_, "1") => power(var, k),
            _ => format!("{mag}*{}", power(var, k)),
        };
        join_term(&mut out, &if neg { format!("-{body}") } else { body });
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_ypoly(p: &YPoly) -> String {
    let mut out = String::new();
    for (j, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = format_xpoly(c, "x");
        let body = if j == 0 {
            cs
        } else {
            let ym = power("y", j);
            let single_term = c.coeffs().iter().filter(|s| !s.is_zero()).count() == 1;
            match cs.as_str() {
                "1" => ym,
                "-1" => format!("-{ym}"),
                _ if single_term => format!("{cs}*{ym}"),
                _ => format!("({cs})*{ym}"),
            }
        };
        if j == 0 && !out.is_empty() {
            // A multi-term constant is appended term by term.
            for term in split_terms(&body) {
                join_term(&mut out, &term);
            }
        } else {
            join_term(&mut out, &body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_terms(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut rest = s;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix(" + ") {
            terms.push(std::mem::take(&mut cur));
            rest = r;
        } else if let Some(r) = rest.strip_prefix(" - ") {
            terms.push(std::mem::take(&mut cur));
            cur.push('-');
            rest = r;
        } else {
            let ch = rest.chars().next().unwrap();
            cur.push(ch);
            rest = &rest[ch.len_utf8()..];
        }
    }
    terms.push(cur);
    terms
}
