use serde::Serialize;
use serde_json::{json, Value};

use super::checks::{handshake_holds, EkCheck};
use crate::error::{Error, Result};
use crate::graph::{connected_components, cut_value, Cut, Graph};
use crate::mincut::min_cut;
use crate::rng::StreamRng;
use crate::weight::{abs_diff, ratio_string, Rational, Weight, FLOAT_RELATIVE_TOLERANCE};

/// Largest `n` accepted by [`eval_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvalMode {
    Exhaustive,
    /// Singletons, the minimum cut of `G` and `trials` uniform cuts. The
    /// reported error is a lower bound on the true maximum.
    Sampled { trials: usize, seed: u64 },
}

impl EvalMode {
    pub fn label(&self) -> &'static str {
        match self {
            EvalMode::Exhaustive => "exhaustive",
            EvalMode::Sampled { .. } => "sampled (lower bound)",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ErrorQuantiles {
    pub p50: f64,
    pub p90: f64,
    pub p99: f64,
    pub max: f64,
}

impl ErrorQuantiles {
    /// Nearest-rank quantiles.
    fn from_errors(mut errors: Vec<f64>) -> Self {
        if errors.is_empty() {
            return Self::default();
        }
        errors.sort_by(f64::total_cmp);
        let rank = |q: f64| {
            let i = (q * errors.len() as f64).ceil() as usize;
            errors[i.clamp(1, errors.len()) - 1]
        };
        Self {
            p50: rank(0.5),
            p90: rank(0.9),
            p99: rank(0.99),
            max: errors[errors.len() - 1],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DeterministicChecks {
    pub handshake: bool,
    /// Present when the report was built from a streaming run.
    pub ek_weight_bound: Option<Vec<EkCheck>>,
}

/// Comparison of a sparsifier `H` against its source graph `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport<W> {
    pub mode: EvalMode,
    pub n: usize,
    pub epsilon: Rational,
    pub g_edges: usize,
    pub h_edges: usize,
    pub g_total_weight: W,
    pub h_total_weight: W,
    pub probed_cuts: usize,
    /// Probed cuts with `VAL(C, G) = 0`; they carry no relative error.
    pub zero_cuts_skipped: usize,
    /// Zero cuts of `G` that `H` crosses.
    pub zero_cut_violations: usize,
    pub max_relative_error: W,
    pub worst_cut: Option<Cut>,
    pub min_cut_g: W,
    pub min_cut_h: W,
    pub quantiles: ErrorQuantiles,
    pub checks: DeterministicChecks,
    pub config: Option<Value>,
    /// Wall time; left out unless set, so reports stay reproducible.
    pub runtime_ms: Option<u64>,
}

impl<W: Weight> EvalReport<W> {
    /// Whether every probed cut is within `1 ± ε`.
    pub fn pass(&self) -> bool {
        let eps = W::from_ratio(&self.epsilon);
        let within = if W::EXACT {
            self.max_relative_error <= eps
        } else {
            self.max_relative_error.to_f64() <= eps.to_f64() * (1.0 + FLOAT_RELATIVE_TOLERANCE)
        };
        within && self.zero_cut_violations == 0
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn with_ek_checks(mut self, checks: Vec<EkCheck>) -> Self {
        self.checks.ek_weight_bound = Some(checks);
        self
    }

    pub fn with_config(mut self, config: Value) -> Self {
        self.config = Some(config);
        self
    }

    pub fn with_runtime_ms(mut self, ms: u64) -> Self {
        self.runtime_ms = Some(ms);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": 1,
            "mode": self.mode.label(),
            "n": self.n,
            "epsilon": ratio_string(&self.epsilon),
            "g": {"edges": self.g_edges, "total_weight": self.g_total_weight.to_string()},
            "h": {"edges": self.h_edges, "total_weight": self.h_total_weight.to_string()},
            "probed_cuts": self.probed_cuts,
            "zero_cuts_skipped": self.zero_cuts_skipped,
            "zero_cut_violations": self.zero_cut_violations,
            "max_relative_error": self.max_relative_error.to_f64(),
            "max_relative_error_exact": self.max_relative_error.to_string(),
            "worst_cut": self.worst_cut.as_ref().map(|c| c.side()),
            "verdict": self.verdict(),
            "min_cut_g": self.min_cut_g.to_string(),
            "min_cut_h": self.min_cut_h.to_string(),
            "quantiles": self.quantiles,
            "deterministic_checks": self.checks,
        });
        if let EvalMode::Sampled { trials, seed } = self.mode {
            v["trials"] = json!(trials);
            v["seed"] = json!(seed);
        }
        if let Some(c) = &self.config {
            v["config"] = c.clone();
        }
        if let Some(ms) = self.runtime_ms {
            v["runtime_ms"] = json!(ms);
        }
        v
    }
}

struct Accumulator<W> {
    probed: usize,
    zero_skipped: usize,
    zero_violations: usize,
    max_err: W,
    worst: Option<Cut>,
    errors: Vec<f64>,
}

impl<W: Weight> Accumulator<W> {
    fn new() -> Self {
        Self {
            probed: 0,
            zero_skipped: 0,
            zero_violations: 0,
            max_err: W::zero(),
            worst: None,
            errors: Vec::new(),
        }
    }

    fn probe(&mut self, gv: &W, hv: &W, cut: impl FnOnce() -> Cut) {
        self.probed += 1;
        if gv.is_zero() {
            self.zero_skipped += 1;
            if !hv.is_zero() {
                self.zero_violations += 1;
                self.worst.get_or_insert_with(cut);
            }
            return;
        }
        let err = abs_diff(gv, hv) / gv.clone();
        self.errors.push(err.to_f64());
        if err > self.max_err || self.worst.is_none() {
            self.max_err = err;
            self.worst = Some(cut());
        }
    }
}

fn same_vertex_set<W: Weight>(g: &Graph<W>, h: &Graph<W>) -> Result<()> {
    if g.n() != h.n() {
        return Err(Error::domain(format!(
            "G has {} vertices but H has {}",
            g.n(),
            h.n()
        )));
    }
    if g.n() < 2 {
        return Err(Error::domain("evaluation needs at least two vertices"));
    }
    Ok(())
}

fn finish<W: Weight>(
    g: &Graph<W>,
    h: &Graph<W>,
    epsilon: &Rational,
    mode: EvalMode,
    acc: Accumulator<W>,
    min_cut_g: W,
    min_cut_h: W,
) -> EvalReport<W> {
    EvalReport {
        mode,
        n: g.n(),
        epsilon: epsilon.clone(),
        g_edges: g.m(),
        h_edges: h.m(),
        g_total_weight: g.total_weight(),
        h_total_weight: h.total_weight(),
        probed_cuts: acc.probed,
        zero_cuts_skipped: acc.zero_skipped,
        zero_cut_violations: acc.zero_violations,
        max_relative_error: acc.max_err,
        worst_cut: acc.worst,
        min_cut_g,
        min_cut_h,
        quantiles: ErrorQuantiles::from_errors(acc.errors),
        checks: DeterministicChecks {
            handshake: handshake_holds(h),
            ek_weight_bound: None,
        },
        config: None,
        runtime_ms: None,
    }
}

fn mask_edges<W: Weight>(g: &Graph<W>) -> Vec<(u64, W)> {
    g.edges()
        .iter()
        .map(|e| ((1u64 << e.u) | (1u64 << e.v), e.w.clone()))
        .collect()
}

fn mask_value<W: Weight>(edges: &[(u64, W)], side: u64) -> W {
    let mut value = W::zero();
    for (both, w) in edges {
        let inside = side & both;
        if inside != 0 && inside != *both {
            value += w;
        }
    }
    value
}

/// Checks all `2^(n-1) - 1` cuts. Refuses `n > 16`.
pub fn eval_exhaustive<W: Weight>(
    g: &Graph<W>,
    h: &Graph<W>,
    epsilon: &Rational,
) -> Result<EvalReport<W>> {
    if g.n() > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive evaluation",
            n: g.n(),
            limit: EXHAUSTIVE_LIMIT,
            hint: "; use sampled evaluation instead",
        });
    }
    same_vertex_set(g, h)?;
    let n = g.n();
    let ge = mask_edges(g);
    let he = mask_edges(h);
    let mut acc = Accumulator::new();
    let mut min_g: Option<W> = None;
    let mut min_h: Option<W> = None;
    for mask in 0..(1u64 << (n - 1)) - 1 {
        let side = (mask << 1) | 1;
        let gv = mask_value(&ge, side);
        let hv = mask_value(&he, side);
        acc.probe(&gv, &hv, || Cut::from_mask(n, mask));
        if min_g.as_ref().is_none_or(|m| gv < *m) {
            min_g = Some(gv);
        }
        if min_h.as_ref().is_none_or(|m| hv < *m) {
            min_h = Some(hv);
        }
    }
    let (min_g, min_h) = (min_g.expect("n >= 2"), min_h.expect("n >= 2"));
    Ok(finish(g, h, epsilon, EvalMode::Exhaustive, acc, min_g, min_h))
}

fn random_cut(rng: &mut StreamRng, n: usize) -> Cut {
    loop {
        let mut members = vec![false; n];
        members[0] = true;
        let mut word = 0u64;
        for (i, m) in members.iter_mut().enumerate().skip(1) {
            if (i - 1) % 64 == 0 {
                word = rng.next_u64();
            }
            *m = word & 1 == 1;
            word >>= 1;
        }
        if members.iter().any(|m| !m) {
            return Cut::from_members(members).expect("proper side");
        }
    }
}

/// Probes the `n` singleton cuts, the minimum cut of `G` and `trials`
/// uniformly random cuts drawn from `seed`.
pub fn eval_sampled<W: Weight>(
    g: &Graph<W>,
    h: &Graph<W>,
    epsilon: &Rational,
    trials: usize,
    seed: u64,
) -> Result<EvalReport<W>> {
    same_vertex_set(g, h)?;
    let n = g.n();
    let mut acc = Accumulator::new();
    let probe = |cut: Cut, acc: &mut Accumulator<W>| -> Result<()> {
        let gv = cut_value(g, &cut)?;
        let hv = cut_value(h, &cut)?;
        acc.probe(&gv, &hv, || cut);
        Ok(())
    };
    for v in 0..n {
        probe(Cut::singleton(n, v)?, &mut acc)?;
    }
    let (g_cut, min_g) = min_cut(g)?;
    probe(g_cut, &mut acc)?;
    let mut rng = StreamRng::new(seed);
    for _ in 0..trials {
        probe(random_cut(&mut rng, n), &mut acc)?;
    }
    let (_, min_h) = min_cut(h)?;
    Ok(finish(
        g,
        h,
        epsilon,
        EvalMode::Sampled { trials, seed },
        acc,
        min_g,
        min_h,
    ))
}

/// Minimum-cut recovery through the sparsifier.
#[derive(Clone, Debug, PartialEq)]
pub struct MinCutEval<W> {
    /// The minimum cut of `H`.
    pub cut: Cut,
    /// `VAL(cut, G)`.
    pub via_sparsifier: W,
    /// The exact minimum cut value of `G`.
    pub exact: W,
    /// `via_sparsifier / exact`.
    pub ratio: W,
}

impl<W: Weight> MinCutEval<W> {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "cut": self.cut.side(),
            "via_sparsifier": self.via_sparsifier.to_string(),
            "exact": self.exact.to_string(),
            "ratio": self.ratio.to_f64(),
            "ratio_exact": self.ratio.to_string(),
        })
    }
}

/// Takes the minimum cut of `h` and prices it in `g`. `g` must be connected.
pub fn eval_mincut<W: Weight>(g: &Graph<W>, h: &Graph<W>) -> Result<MinCutEval<W>> {
    same_vertex_set(g, h)?;
    if connected_components(g).len() > 1 {
        return Err(Error::domain(
            "G is disconnected; its minimum cut is zero and the ratio is undefined",
        ));
    }
    let (cut, _) = min_cut(h)?;
    let via_sparsifier = cut_value(g, &cut)?;
    let (_, exact) = min_cut(g)?;
    let ratio = via_sparsifier.clone() / exact.clone();
    Ok(MinCutEval {
        cut,
        via_sparsifier,
        exact,
        ratio,
    })
}
