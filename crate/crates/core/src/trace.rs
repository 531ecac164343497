//! Step-by-step record of a gcd-chain computation and its text rendering.

use std::fmt::Write as _;

use crate::bipoly::YPoly;
use crate::ring::XPoly;

#[derive(Clone, Debug)]
pub enum Event {
    LargestFactorCall {
        iteration: usize,
        f: YPoly,
        a: YPoly,
    },
    /// `largestFactor` stopped before any subresultant was computed.
    EarlyEnd {
        reason: &'static str,
    },
    SubresCall {
        depth: usize,
        a: YPoly,
        b: YPoly,
    },
    SubresChain {
        chain: Vec<YPoly>,
        failed_at: Option<usize>,
    },
    NilpotentFactor {
        s: YPoly,
        p: XPoly,
        index: isize,
    },
    SubresReturn {
        j: usize,
        i: usize,
        p: Option<XPoly>,
    },
    WeierstrassMonic {
        f: YPoly,
        k: usize,
        q: YPoly,
    },
    ExactDivision {
        s: YPoly,
        p: XPoly,
        quotient: YPoly,
    },
    LargestFactorReturn {
        g: YPoly,
        t1: XPoly,
        b: Option<YPoly>,
        rest: Option<XPoly>,
    },
    Cofactor {
        g_cofactor: YPoly,
    },
    Bezout {
        alpha: YPoly,
        beta: YPoly,
    },
    NextModulus {
        t: XPoly,
    },
    HenselStep {
        from: XPoly,
        to: XPoly,
        g_star: YPoly,
        h_star: YPoly,
    },
    /// A finished lift `g = G* g*` modulo `target` of `g = G h` modulo `T'`.
    Lifted {
        g: YPoly,
        big_g: YPoly,
        h: YPoly,
        target: XPoly,
        g_star: YPoly,
        h_star: YPoly,
    },
    /// Lists after an iteration, `C` entries still modulo the full `T`.
    Block {
        c: Vec<YPoly>,
        d: Vec<YPoly>,
        tree: Vec<XPoly>,
    },
    /// The returned chain.
    Finished {
        c: Vec<YPoly>,
        d: Vec<YPoly>,
        tree: Vec<XPoly>,
    },
}

/// Event sink. A disabled trace drops events without building them.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    enabled: bool,
    events: Vec<Event>,
}

impl Trace {
    pub fn enabled() -> Self {
        Trace { enabled: true, events: Vec::new() }
    }

    pub fn disabled() -> Self {
        Trace::default()
    }

    pub fn record(&mut self, event: impl FnOnce() -> Event) {
        if self.enabled {
            self.events.push(event());
        }
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn render(&self) -> String {
        render(&self.events)
    }
}

fn list<T: std::fmt::Display>(items: &[T], indent: &str) -> String {
    if items.is_empty() {
        return "[]".to_string();
    }
    let body: Vec<String> = items.iter().map(|p| format!("{indent}  {p}")).collect();
    format!("[\n{}\n{indent}]", body.join(",\n"))
}

fn short_list<T: std::fmt::Display>(items: &[T]) -> String {
    let body: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", body.join(", "))
}

pub fn render(events: &[Event]) -> String {
    let mut out = String::new();
    let mut depth = 0usize;
    for ev in events {
        let pad = "  ".repeat(depth);
        let _ = match ev {
            Event::LargestFactorCall { iteration, f, a } => {
                depth = 1;
                writeln!(out, "largestFactor (i = {iteration}) modulo {}\n  f = {f}\n  A = {a}", f.modulus())
            }
            Event::EarlyEnd { reason } => writeln!(out, "{pad}end: {reason}"),
            Event::SubresCall { depth: d, a, b } => {
                depth = 1 + d;
                let pad = "  ".repeat(depth);
                writeln!(out, "{pad}subres modulo {}\n{pad}  a = {a}\n{pad}  b = {b}", a.modulus())
            }
            Event::SubresChain { chain, failed_at } => {
                let status = match failed_at {
                    None => "complete".to_string(),
                    Some(t) => format!("division failed after S[{}] (t = {t})", t + 1),
                };
                writeln!(out, "{pad}S ({status}) = {}", list(chain, &pad))
            }
            Event::NilpotentFactor { s, p, index } => {
                writeln!(out, "{pad}nilpotentFactor({s}, {}) == {p}, {index}", s.modulus())
            }
            Event::SubresReturn { j, i, p } => {
                let p = p.as_ref().map_or("none".to_string(), ToString::to_string);
                depth = 1;
                writeln!(out, "  subres returns j = {j}, i = {i}, P = {p}")
            }
            Event::WeierstrassMonic { f, k, q } => {
                writeln!(out, "{pad}WeierstrassMonic({f}, {}, {k}) == {q}", f.modulus())
            }
            Event::ExactDivision { s, p, quotient } => writeln!(out, "{pad}S = ({s}) / {p} = {quotient}"),
            Event::LargestFactorReturn { g, t1, b, rest } => {
                depth = 0;
                let b = b.as_ref().map_or("end".to_string(), ToString::to_string);
                let rest = rest.as_ref().map_or("none".to_string(), ToString::to_string);
                writeln!(out, "  return g = {g}, T' = {t1}, B = {b}, S = {rest}")
            }
            Event::Cofactor { g_cofactor } => {
                writeln!(out, "Hensel lifting\n  G = {g_cofactor} mod {}", g_cofactor.modulus())
            }
            Event::Bezout { alpha, beta } => writeln!(out, "  alpha = {alpha}, beta = {beta}"),
            Event::NextModulus { t } => writeln!(out, "  T_next = {t}, precision = {}", t.degree()),
            Event::HenselStep { from, to, g_star, h_star } => {
                writeln!(out, "  step from {from} to {to}:\n    G* = {g_star}\n    g* = {h_star}")
            }
            Event::Lifted { target, .. } => writeln!(out, "  lifted to {target}"),
            Event::Block { c, d, tree } => {
                writeln!(out, "C = {}\nD = {}\nTree = {}", short_list(c), short_list(d), short_list(tree))
            }
            Event::Finished { c, d, tree } => {
                depth = 0;
                writeln!(
                    out,
                    "gcd chain\n  C = {}\n  D = {}\n  Tree = {}",
                    short_list(c),
                    short_list(d),
                    short_list(tree)
                )
            }
        };
    }
    out
}
