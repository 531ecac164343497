//! Planted-instance campaigns and the timing series used by `selftest`.
//!
//! Instance `n` of a campaign draws from its own ChaCha stream, so results
//! depend only on `(seed, n)` and can be produced in any order.

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{plant_instance, random_shape, verify_chain, Shape};
use crate::chain::gcd_chain;
use crate::error::Error;
use crate::ring::{Field, XPoly};

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    pub fields: Vec<Field>,
    pub max_deg_y: usize,
    pub max_e: usize,
    pub max_deg_p: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 1,
            fields: [2, 3, 5, 7, 101].into_iter().map(Field::Prime).collect(),
            max_deg_y: 6,
            max_e: 4,
            max_deg_p: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The chain verifies but its tree or degrees differ from the planted ones.
    Skeleton(String),
    /// Named verification checks failed.
    Verify(Vec<String>),
    Error(Error),
}

#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub index: usize,
    pub field: Field,
    pub deg_y: usize,
    pub e: usize,
    pub deg_p: usize,
    pub blocks: usize,
    pub outcome: Outcome,
    /// Time spent in `gcd_chain` only.
    pub elapsed: Duration,
}

impl InstanceResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// `(e deg p)^2 (deg a)^2`.
    pub fn cost_estimate(&self) -> f64 {
        let n = (self.e * self.deg_p) as f64;
        let d = self.deg_y.max(1) as f64;
        n * n * d * d
    }
}

fn instance_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Plant, compute and verify one instance against its planted skeleton.
pub fn run_shape(index: usize, rng: &mut ChaCha8Rng, shape: &Shape) -> InstanceResult {
    let mut result = InstanceResult {
        index,
        field: shape.field,
        deg_y: 0,
        e: shape.e,
        deg_p: shape.deg_p,
        blocks: shape.blocks.len(),
        outcome: Outcome::Pass,
        elapsed: Duration::ZERO,
    };
    let inst = match plant_instance(rng, shape) {
        Ok(inst) => inst,
        Err(e) => {
            result.outcome = Outcome::Error(e);
            return result;
        }
    };
    result.deg_y = inst.a.degree().max(0) as usize;
    let start = Instant::now();
    let chain = gcd_chain(&inst.a, &inst.b);
    result.elapsed = start.elapsed();
    let chain = match chain {
        Ok(chain) => chain,
        Err(e) => {
            result.outcome = Outcome::Error(e);
            return result;
        }
    };
    let report = verify_chain(&chain, &inst.a, &inst.b);
    if !report.all_ok() {
        result.outcome = Outcome::Verify(report.failures().map(|c| c.name.clone()).collect());
        return result;
    }
    let degrees: Vec<usize> = chain.c.iter().map(|c| c.degree().max(0) as usize).collect();
    if chain.tree != inst.tree || degrees != inst.degrees {
        let tree: Vec<String> = chain.tree.iter().map(XPoly::to_string).collect();
        let want: Vec<String> = inst.tree.iter().map(XPoly::to_string).collect();
        result.outcome =
            Outcome::Skeleton(format!("tree {tree:?} degrees {degrees:?}, planted {want:?} {:?}", inst.degrees));
    }
    result
}

/// Instance `index` of the campaign.
pub fn run_instance(config: &CampaignConfig, index: usize) -> InstanceResult {
    let mut rng = instance_rng(config.seed, index as u64);
    let shape = random_shape(&mut rng, &config.fields, config.max_deg_y, config.max_e, config.max_deg_p);
    run_shape(index, &mut rng, &shape)
}

/// Deterministic campaign summary; timings are reported separately.
#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub by_field: Vec<(Field, usize, usize)>,
    pub by_blocks: Vec<(usize, usize)>,
    pub failures: Vec<(usize, String)>,
}

impl Summary {
    pub fn from_results(results: &[InstanceResult]) -> Self {
        let mut s = Summary { total: results.len(), ..Default::default() };
        for r in results {
            if r.passed() {
                s.passed += 1;
            } else {
                s.failures.push((r.index, describe(&r.outcome)));
            }
            match s.by_field.iter_mut().find(|(f, _, _)| *f == r.field) {
                Some(entry) => {
                    entry.1 += 1;
                    entry.2 += usize::from(r.passed());
                }
                None => s.by_field.push((r.field, 1, usize::from(r.passed()))),
            }
            match s.by_blocks.iter_mut().find(|(b, _)| *b == r.blocks) {
                Some(entry) => entry.1 += 1,
                None => s.by_blocks.push((r.blocks, 1)),
            }
        }
        s.by_field.sort_by_key(|(f, _, _)| f.characteristic());
        s.by_blocks.sort_unstable();
        s
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

fn describe(outcome: &Outcome) -> String {
    match outcome {
        Outcome::Pass => "pass".into(),
        Outcome::Skeleton(d) => format!("skeleton mismatch: {d}"),
        Outcome::Verify(names) => format!("failed checks: {}", names.join(", ")),
        Outcome::Error(e) => format!("error: {e}"),
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instances: {}", self.total)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.total - self.passed)?;
        for (field, n, ok) in &self.by_field {
            writeln!(f, "  {field}: {ok}/{n}")?;
        }
        for (b, n) in &self.by_blocks {
            writeln!(f, "  {b} planted blocks: {n}")?;
        }
        for (index, d) in &self.failures {
            writeln!(f, "FAIL #{index}: {d}")?;
        }
        Ok(())
    }
}

/// Wall-clock statistics against the `(e deg p)^2 (deg a)^2` estimate.
pub fn timing_report(results: &[InstanceResult]) -> String {
    if results.is_empty() {
        return "timing: no instances\n".into();
    }
    let total: Duration = results.iter().map(|r| r.elapsed).sum();
    let max = results.iter().map(|r| r.elapsed).max().unwrap_or_default();
    let mut ratios: Vec<f64> = results.iter().map(|r| r.elapsed.as_secs_f64() * 1e6 / r.cost_estimate()).collect();
    ratios.sort_by(f64::total_cmp);
    let median = ratios[ratios.len() / 2];
    let high = ratios[(ratios.len() * 9 / 10).min(ratios.len() - 1)];
    format!(
        "timing: total {:.3}s, mean {:.3}ms, max {:.3}ms\n\
         time / ((e deg p)^2 (deg a)^2): median {median:.3}us, 90th percentile {high:.3}us\n",
        total.as_secs_f64(),
        total.as_secs_f64() * 1e3 / results.len() as f64,
        max.as_secs_f64() * 1e3,
    )
}

#[derive(Clone, Debug)]
pub struct ScalingPoint {
    pub e: usize,
    pub deg_p: usize,
    pub deg_y: usize,
    pub mean: Duration,
}

impl ScalingPoint {
    pub fn size(&self) -> usize {
        self.e * self.deg_p
    }
}

/// Mean `gcd_chain` time on a fixed three-block shape with `deg a = 6`
/// while `e deg p` doubles: `deg p = 1` with `e = 2, 4, ..., 2^levels`.
pub fn scaling_series(seed: u64, field: Field, levels: u32, reps: usize) -> Vec<ScalingPoint> {
    (1..=levels)
        .map(|level| {
            let e = 1usize << level;
            let shape =
                Shape { field, p: None, deg_p: 1, e, blocks: vec![(1, 1), (e / 2, 2), (e, 1)], extra_a: 2, extra_b: 1 };
            let shape = Shape { blocks: dedup_precisions(shape.blocks), ..shape };
            let mut total = Duration::ZERO;
            let mut deg_y = 0;
            for rep in 0..reps.max(1) {
                let mut rng = instance_rng(seed, (u64::from(level) << 32) | rep as u64);
                let r = run_shape(rep, &mut rng, &shape);
                deg_y = r.deg_y;
                total += r.elapsed;
            }
            ScalingPoint { e, deg_p: 1, deg_y, mean: total / reps.max(1) as u32 }
        })
        .collect()
}

fn dedup_precisions(mut blocks: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    blocks.dedup_by(|b, a| {
        if a.0 == b.0 {
            a.1 += b.1;
            true
        } else {
            false
        }
    });
    blocks
}

/// Doubling table: each row gives the time ratio to the previous size and
/// the implied exponent `log2(ratio)`; the quadratic estimate predicts 2.
pub fn render_scaling(points: &[ScalingPoint]) -> String {
    let mut out = String::from("scaling at fixed deg_y (quadratic estimate: exponent 2)\n");
    out.push_str("  e*deg_p  deg_y    mean_ms   ratio  exponent\n");
    for (i, pt) in points.iter().enumerate() {
        let ms = pt.mean.as_secs_f64() * 1e3;
        match i.checked_sub(1).map(|j| &points[j]) {
            Some(prev) if prev.mean > Duration::ZERO => {
                let ratio = pt.mean.as_secs_f64() / prev.mean.as_secs_f64();
                let exponent = ratio.log2() / (pt.size() as f64 / prev.size() as f64).log2();
                out.push_str(&format!(
                    "  {:>7}  {:>5}  {ms:>9.3}  {ratio:>6.2}  {exponent:>8.2}\n",
                    pt.size(),
                    pt.deg_y
                ));
            }
            _ => out.push_str(&format!("  {:>7}  {:>5}  {ms:>9.3}       -         -\n", pt.size(), pt.deg_y)),
        }
    }
    out
}

/// Least-squares slope of `log t` against `log (e deg p)`.
pub fn fitted_exponent(points: &[ScalingPoint]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.mean > Duration::ZERO)
        .map(|p| ((p.size() as f64).ln(), p.mean.as_secs_f64().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}
