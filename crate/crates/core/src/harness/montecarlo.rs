use serde_json::{json, Value};

use super::checks::ek_bound_holds;
use super::eval::EXHAUSTIVE_LIMIT;
use crate::error::Result;
use crate::graph::{cut_value, Cut, Graph};
use crate::mincut::{enumerate_cuts, min_cut};
use crate::stream::{run_stream, SparsifyConfig};
use crate::weight::{ratio_string, Rational, Weight};

/// Sample statistics of `VAL(C, H)` for one probed cut.
#[derive(Clone, Debug, PartialEq)]
pub struct CutStats {
    pub cut: Cut,
    pub g_value: f64,
    pub mean: f64,
    /// Sample standard deviation.
    pub stddev: f64,
    pub runs: usize,
    m2: f64,
}

impl CutStats {
    fn new(cut: Cut, g_value: f64) -> Self {
        Self {
            cut,
            g_value,
            mean: 0.0,
            stddev: 0.0,
            runs: 0,
            m2: 0.0,
        }
    }

    fn push(&mut self, x: f64) {
        self.runs += 1;
        let delta = x - self.mean;
        self.mean += delta / self.runs as f64;
        self.m2 += delta * (x - self.mean);
        if self.runs > 1 {
            self.stddev = (self.m2 / (self.runs - 1) as f64).sqrt();
        }
    }

    pub fn stderr(&self) -> f64 {
        if self.runs == 0 {
            return f64::INFINITY;
        }
        self.stddev / (self.runs as f64).sqrt()
    }

    /// `|mean - VAL(C, G)|` in standard errors.
    pub fn z_score(&self) -> f64 {
        let se = self.stderr();
        let gap = (self.mean - self.g_value).abs();
        if se == 0.0 {
            if gap == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            gap / se
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloSummary {
    pub base_seed: u64,
    pub epsilon: Rational,
    pub rho: Rational,
    pub exhaustive: bool,
    pub cuts: Vec<CutStats>,
    /// Largest relative cut error of each run over the probed cuts.
    pub max_errors: Vec<f64>,
    pub h_edges: Vec<usize>,
    pub h_total_weight: Vec<f64>,
    pub ek_bound_failures: usize,
    /// Fraction of all sampling decisions made with `p_e < 1`.
    pub sampled_fraction: f64,
}

impl MonteCarloSummary {
    pub fn runs(&self) -> usize {
        self.max_errors.len()
    }

    pub fn failure_fraction_at(&self, threshold: f64) -> f64 {
        if self.max_errors.is_empty() {
            return 0.0;
        }
        let fails = self.max_errors.iter().filter(|&&e| e > threshold).count();
        fails as f64 / self.max_errors.len() as f64
    }

    /// Fraction of runs whose maximum error exceeds `ε`.
    pub fn failure_fraction(&self) -> f64 {
        self.failure_fraction_at(Weight::to_f64(&self.epsilon))
    }

    pub fn median_max_error(&self) -> f64 {
        let mut v = self.max_errors.clone();
        if v.is_empty() {
            return 0.0;
        }
        v.sort_by(f64::total_cmp);
        let mid = v.len() / 2;
        if v.len() % 2 == 1 {
            v[mid]
        } else {
            (v[mid - 1] + v[mid]) / 2.0
        }
    }

    pub fn to_json(&self) -> Value {
        let cuts: Vec<Value> = self
            .cuts
            .iter()
            .map(|c| {
                json!({
                    "side": c.cut.side(),
                    "g": c.g_value,
                    "mean": c.mean,
                    "stddev": c.stddev,
                    "stderr": c.stderr(),
                })
            })
            .collect();
        json!({
            "schema": 1,
            "runs": self.runs(),
            "base_seed": self.base_seed,
            "epsilon": ratio_string(&self.epsilon),
            "rho": ratio_string(&self.rho),
            "probes": if self.exhaustive { "exhaustive" } else { "singletons+mincut" },
            "failure_fraction": self.failure_fraction(),
            "median_max_error": self.median_max_error(),
            "ek_bound_failures": self.ek_bound_failures,
            "sampled_fraction": self.sampled_fraction,
            "max_errors": self.max_errors,
            "cuts": cuts,
        })
    }
}

fn probe_cuts<W: Weight>(g: &Graph<W>) -> Result<(bool, Vec<Cut>)> {
    if g.n() <= EXHAUSTIVE_LIMIT {
        return Ok((true, enumerate_cuts(g)?.map(|(c, _)| c).collect()));
    }
    let mut cuts: Vec<Cut> = (0..g.n())
        .map(|v| Cut::singleton(g.n(), v))
        .collect::<Result<_>>()?;
    let (c, _) = min_cut(g)?;
    if !cuts.contains(&c) {
        cuts.push(c);
    }
    Ok((false, cuts))
}

/// Runs the streaming sparsifier `runs` times; run `i` uses seed
/// `cfg.seed + i` (wrapping). All cuts are probed when `n <= 16`, otherwise
/// the singletons and the minimum cut of `G`.
pub fn monte_carlo<W: Weight>(
    cfg: &SparsifyConfig,
    stream: &[(usize, usize)],
    runs: usize,
) -> Result<MonteCarloSummary> {
    cfg.validate()?;
    let mut g: Graph<W> = Graph::new(cfg.n);
    for &(u, v) in stream {
        if u != v {
            g.add_edge(u, v, W::one())?;
        }
    }
    let (exhaustive, cuts) = probe_cuts(&g)?;
    let mut stats: Vec<CutStats> = cuts
        .into_iter()
        .map(|c| {
            let gv = cut_value(&g, &c).expect("same n").to_f64();
            CutStats::new(c, gv)
        })
        .collect();
    let mut summary = MonteCarloSummary {
        base_seed: cfg.seed,
        epsilon: cfg.epsilon.clone(),
        rho: crate::stream::resolve_rho(cfg)?,
        exhaustive,
        cuts: Vec::new(),
        max_errors: Vec::with_capacity(runs),
        h_edges: Vec::with_capacity(runs),
        h_total_weight: Vec::with_capacity(runs),
        ek_bound_failures: 0,
        sampled_fraction: 0.0,
    };
    let (mut sampled, mut decided) = (0usize, 0usize);
    for i in 0..runs {
        let run_cfg = cfg.clone().with_seed(cfg.seed.wrapping_add(i as u64));
        let state = run_stream::<W>(&run_cfg, stream)?;
        let h = state.graph();
        let mut worst = 0.0f64;
        for s in &mut stats {
            let hv = cut_value(h, &s.cut)?.to_f64();
            s.push(hv);
            if s.g_value > 0.0 {
                worst = worst.max((hv - s.g_value).abs() / s.g_value);
            }
        }
        summary.max_errors.push(worst);
        summary.h_edges.push(h.m());
        summary.h_total_weight.push(h.total_weight().to_f64());
        if !ek_bound_holds(&state) {
            summary.ek_bound_failures += 1;
        }
        decided += state.decisions().len();
        sampled += state
            .decisions()
            .iter()
            .filter(|d| d.probability < W::one())
            .count();
    }
    summary.cuts = stats;
    summary.sampled_fraction = if decided == 0 {
        0.0
    } else {
        sampled as f64 / decided as f64
    };
    Ok(summary)
}
