//! JSON problem and chain files.
//!
//! A problem file:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "field": "rationals",
//!   "modulus": [0, 0, 0, 1],
//!   "a": [["1", "1", "1"], ["2", "2", "1"], ["1"]],
//!   "b": [["1"], ["1"]]
//! }
//! ```
//!
//! `field` is `"rationals"` or `{"prime": q}`. Polynomials in `x` are
//! ascending coefficient lists; polynomials in `y` list their `x`-coefficients
//! by ascending `y`-degree. Rationals are `"num/den"` strings (plain integers
//! are accepted too), prime-field elements are integers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bipoly::YPoly;
use crate::chain::GcdChain;
use crate::error::{Error, Result};
use crate::ring::{Field, Modulus, Scalar, XPoly};

pub const FORMAT_VERSION: u32 = 1;

/// A parsed problem: monic `a`, `b` over `k[x]/<T>` with `deg a >= deg b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub modulus: Modulus,
    pub a: YPoly,
    pub b: YPoly,
}

impl Problem {
    pub fn field(&self) -> Field {
        self.modulus.field()
    }
}

#[derive(Serialize, Deserialize)]
struct RawProblem {
    format_version: u32,
    field: Value,
    modulus: Vec<Value>,
    a: Vec<Vec<Value>>,
    b: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct RawBlock {
    g: Vec<Vec<Value>>,
    #[serde(rename = "G")]
    big_g: Vec<Vec<Value>>,
    modulus: Vec<Value>,
}

#[derive(Serialize, Deserialize)]
struct RawChain {
    format_version: u32,
    field: Value,
    modulus: Vec<Value>,
    blocks: Vec<RawBlock>,
    #[serde(rename = "C")]
    c: Vec<Vec<Vec<Value>>>,
    #[serde(rename = "D")]
    d: Vec<Vec<Vec<Value>>>,
    #[serde(rename = "Tree")]
    tree: Vec<Vec<Value>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field_to_json(field: Field) -> Value {
    match field {
        Field::Rational => Value::String("rationals".into()),
        Field::Prime(q) => serde_json::json!({ "prime": q }),
    }
}

fn field_from_json(v: &Value) -> Result<Field> {
    match v {
        Value::String(s) if s == "rationals" => Ok(Field::Rational),
        Value::Object(m) => {
            let q =
                m.get("prime").and_then(Value::as_u64).ok_or_else(|| parse_err(format!("bad field descriptor {v}")))?;
            Field::prime(q)
        }
        _ => Err(parse_err(format!("bad field descriptor {v}"))),
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse::<BigInt>().map_err(|_| parse_err(format!("bad integer {s:?}")))
}

fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(field.from_i64(i))
            } else if let Some(u) = n.as_u64() {
                Ok(field.from_bigint(&BigInt::from(u)))
            } else {
                Err(parse_err(format!("coefficient {n} is not an integer")))
            }
        }
        Value::String(s) => match s.split_once('/') {
            Some((num, den)) => field
                .from_ratio(&parse_int(num)?, &parse_int(den)?)
                .map_err(|e| parse_err(format!("coefficient {s:?}: {e}"))),
            None => Ok(field.from_bigint(&parse_int(s)?)),
        },
        _ => Err(parse_err(format!("bad coefficient {v}"))),
    }
}

fn xpoly_from_json(field: Field, v: &[Value]) -> Result<XPoly> {
    Ok(XPoly::new(field, v.iter().map(|c| scalar_from_json(field, c)).collect::<Result<_>>()?))
}

fn ypoly_from_json(modulus: &Modulus, v: &[Vec<Value>]) -> Result<YPoly> {
    let field = modulus.field();
    Ok(YPoly::new(modulus, v.iter().map(|c| xpoly_from_json(field, c)).collect::<Result<_>>()?))
}

fn xpoly_to_json(p: &XPoly) -> Vec<Value> {
    p.coeffs().iter().map(Scalar::to_json).collect()
}

fn ypoly_to_json(p: &YPoly) -> Vec<Vec<Value>> {
    p.coeffs().iter().map(xpoly_to_json).collect()
}

fn modulus_from_json(field: Field, v: &[Value]) -> Result<Modulus> {
    let t = xpoly_from_json(field, v)?;
    if !t.is_monic() || t.degree() < 1 {
        return Err(Error::Precondition(format!("modulus {t} must be monic of positive degree")));
    }
    Modulus::new(t)
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(parse_err(format!("unsupported format_version {v}")))
    }
}

/// Parse a problem file. Malformed JSON is a parse error; a non-monic
/// modulus or input, or `deg a < deg b`, is a precondition error.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    check_version(raw.format_version)?;
    let field = field_from_json(&raw.field)?;
    let modulus = modulus_from_json(field, &raw.modulus)?;
    let a = ypoly_from_json(&modulus, &raw.a)?;
    let b = ypoly_from_json(&modulus, &raw.b)?;
    if !a.is_monic() {
        return Err(Error::NotMonic(a.to_string()));
    }
    if !b.is_monic() {
        return Err(Error::NotMonic(b.to_string()));
    }
    if a.degree() < b.degree() {
        return Err(Error::Precondition(format!("deg a = {} < deg b = {}", a.degree(), b.degree())));
    }
    Ok(Problem { modulus, a, b })
}

pub fn problem_to_json(problem: &Problem) -> String {
    let raw = RawProblem {
        format_version: FORMAT_VERSION,
        field: field_to_json(problem.field()),
        modulus: xpoly_to_json(problem.modulus.poly()),
        a: ypoly_to_json(&problem.a),
        b: ypoly_to_json(&problem.b),
    };
    serde_json::to_string_pretty(&raw).expect("plain JSON values")
}

/// Serialize a chain computed modulo `modulus`.
pub fn chain_to_json(modulus: &Modulus, chain: &GcdChain) -> Result<String> {
    let blocks = chain
        .blocks()?
        .iter()
        .map(|b| RawBlock {
            g: ypoly_to_json(&b.g),
            big_g: ypoly_to_json(&b.big_g),
            modulus: xpoly_to_json(b.modulus.poly()),
        })
        .collect();
    let raw = RawChain {
        format_version: FORMAT_VERSION,
        field: field_to_json(modulus.field()),
        modulus: xpoly_to_json(modulus.poly()),
        blocks,
        c: chain.c.iter().map(ypoly_to_json).collect(),
        d: chain.d.iter().map(ypoly_to_json).collect(),
        tree: chain.tree.iter().map(xpoly_to_json).collect(),
    };
    Ok(serde_json::to_string_pretty(&raw).expect("plain JSON values"))
}

/// A chain file: the modulus it was computed for and the chain. `C`, `D`
/// and `Tree` are authoritative; `blocks` is a convenience view.
pub fn parse_chain(text: &str) -> Result<(Modulus, GcdChain)> {
    let raw: RawChain = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    check_version(raw.format_version)?;
    let field = field_from_json(&raw.field)?;
    let modulus = modulus_from_json(field, &raw.modulus)?;
    let tree: Vec<XPoly> = raw.tree.iter().map(|t| xpoly_from_json(field, t)).collect::<Result<_>>()?;
    let s = raw.c.len();
    if s == 0 || tree.len() != s || raw.d.len() + 1 != s {
        return Err(parse_err(format!("chain lists have lengths C {s}, D {}, Tree {}", raw.d.len(), tree.len())));
    }
    let moduli: Vec<Modulus> =
        tree.iter().map(|t| modulus_from_json(field, &xpoly_to_json(t))).collect::<Result<_>>()?;
    let c = raw
        .c
        .iter()
        .enumerate()
        .map(|(i, g)| ypoly_from_json(&moduli[(i + 1).min(s - 1)], g))
        .collect::<Result<_>>()?;
    let d = raw.d.iter().enumerate().map(|(i, g)| ypoly_from_json(&moduli[i], g)).collect::<Result<_>>()?;
    Ok((modulus, GcdChain { c, d, tree }))
}
