//! The one-pass sparsifier.
//!
//! Each arriving unit edge `e = (u, v)` gets `c_e`, the strength of `e` in
//! the current sparsifier with `e` itself added at weight 1. It is kept with
//! probability `p_e = min(ρ / c_e, 1)` and, if kept, enters the sparsifier
//! with weight `1 / p_e`. Counting `e` makes `c_e >= 1` always, so an edge
//! between pieces the sparsifier has not yet connected is always kept.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::offline::SampleDecision;
use crate::rng::StreamRng;
use crate::strength::{new_edge_strength, new_edge_strength_certificate, StrengthMode};
use crate::weight::{ceil_to_denominator, dyadic_class, ratio_string, Rational, Weight};

/// Denominator the formula value of `ρ` is rounded up to.
pub const RHO_DENOMINATOR: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparsifyConfig {
    #[serde(serialize_with = "ser_ratio")]
    pub epsilon: Rational,
    /// Failure exponent: the guarantee holds with probability `1 - O(n^-d)`.
    #[serde(serialize_with = "ser_ratio")]
    pub d: Rational,
    pub n: usize,
    /// Upper bound on the stream length, used in `ρ`. Defaults to `n²`.
    pub m_max: u64,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub rho_override: Option<Rational>,
    pub seed: u64,
    pub strength_mode: StrengthMode,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

fn ser_opt_ratio<S: serde::Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&ratio_string(r)),
        None => s.serialize_none(),
    }
}

impl SparsifyConfig {
    pub fn new(n: usize, epsilon: Rational) -> Self {
        Self {
            epsilon,
            d: Rational::from_u64(1),
            n,
            m_max: (n as u64).saturating_mul(n as u64).max(1),
            rho_override: None,
            seed: 0,
            strength_mode: StrengthMode::Exact,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_d(mut self, d: Rational) -> Self {
        self.d = d;
        self
    }

    pub fn with_m_max(mut self, m_max: u64) -> Self {
        self.m_max = m_max;
        self
    }

    pub fn with_rho_override(mut self, rho: Rational) -> Self {
        self.rho_override = Some(rho);
        self
    }

    pub fn with_strength_mode(mut self, mode: StrengthMode) -> Self {
        self.strength_mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let zero = Rational::from_u64(0);
        let one = Rational::from_u64(1);
        if self.n < 2 {
            return Err(Error::domain(format!("need at least 2 vertices, got {}", self.n)));
        }
        if self.epsilon <= zero || self.epsilon >= one {
            return Err(Error::domain(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        if self.d <= zero {
            return Err(Error::domain(format!("d must be positive, got {}", self.d)));
        }
        if self.m_max == 0 {
            return Err(Error::domain("m_max must be at least 1"));
        }
        if let Some(r) = &self.rho_override {
            if *r <= zero {
                return Err(Error::domain(format!("rho override must be positive, got {r}")));
            }
        }
        Ok(())
    }
}

/// `ρ = 32((4 + d) ln n + ln m_max)(1 + ε) / ε²`, rounded up to a multiple
/// of `1/1000`, or the override when one is set.
pub fn resolve_rho(cfg: &SparsifyConfig) -> Result<Rational> {
    cfg.validate()?;
    if let Some(r) = &cfg.rho_override {
        return Ok(r.clone());
    }
    let eps = cfg.epsilon.to_f64();
    let d = cfg.d.to_f64();
    let n = cfg.n as f64;
    let m = cfg.m_max as f64;
    let rho = 32.0 * ((4.0 + d) * n.ln() + m.ln()) * (1.0 + eps) / (eps * eps);
    Ok(ceil_to_denominator(rho, RHO_DENOMINATOR))
}

/// The sparsifier after some prefix of the stream.
#[derive(Clone, Debug)]
pub struct SparsifierState<W = Rational> {
    config: SparsifyConfig,
    rho_exact: Rational,
    rho: W,
    h: Graph<W>,
    adj: Vec<BTreeMap<usize, W>>,
    decisions: Vec<SampleDecision<W>>,
    rng: StreamRng,
    self_loops: usize,
    warnings: Vec<String>,
    witnesses: VecDeque<(Vec<bool>, W)>,
}

/// Recent vertex sets with a known lower bound on their minimum cut in `H`.
/// Since `H` only grows, each bound stays valid and seeds later strength
/// computations with a high floor.
const WITNESS_CACHE: usize = 16;

impl<W: Weight> SparsifierState<W> {
    pub fn new(config: SparsifyConfig) -> Result<Self> {
        let rho_exact = resolve_rho(&config)?;
        Ok(Self {
            rho: W::from_ratio(&rho_exact),
            rho_exact,
            h: Graph::new(config.n),
            adj: vec![BTreeMap::new(); config.n],
            decisions: Vec::new(),
            rng: StreamRng::new(config.seed),
            self_loops: 0,
            warnings: Vec::new(),
            witnesses: VecDeque::new(),
            config,
        })
    }

    /// Processes one arriving edge.
    ///
    /// Returns the decision, or `None` for a self-loop, which is counted and
    /// otherwise ignored (no draw is consumed).
    pub fn ingest(&mut self, u: usize, v: usize) -> Result<Option<&SampleDecision<W>>> {
        self.h.check_vertex(u)?;
        self.h.check_vertex(v)?;
        if u == v {
            self.self_loops += 1;
            log::warn!("ignoring self-loop on vertex {u}");
            return Ok(None);
        }
        let one = W::one();
        let (strength, witness) = match self.config.strength_mode {
            StrengthMode::Exact => new_edge_strength(&self.adj, u, v, &one, &self.floor(u, v)),
            StrengthMode::Certificate => {
                (new_edge_strength_certificate(&self.adj, u, v, &one), None)
            }
        };
        let id = EdgeId(self.decisions.len());
        let decision = SampleDecision::draw(&mut self.rng, id, (u, v), strength, &self.rho);
        if let Some(set) = witness {
            // the value counted the new edge; without it a cut drops by at most 1
            let bound = if decision.kept {
                decision.strength.clone()
            } else {
                decision.strength.clone() - one
            };
            let mut members = vec![false; self.config.n];
            set.iter().for_each(|&x| members[x] = true);
            if self.witnesses.len() == WITNESS_CACHE {
                self.witnesses.pop_back();
            }
            self.witnesses.push_front((members, bound));
        }
        if decision.kept {
            self.h.add_edge_with_id(id, u, v, decision.weight.clone())?;
            *self.adj[u].entry(v).or_insert_with(W::zero) += &decision.weight;
            *self.adj[v].entry(u).or_insert_with(W::zero) += &decision.weight;
        }
        self.decisions.push(decision);
        Ok(self.decisions.last())
    }

    fn floor(&self, u: usize, v: usize) -> W {
        let mut floor = W::zero();
        for (members, bound) in &self.witnesses {
            if members[u] && members[v] && *bound > floor {
                floor = bound.clone();
            }
        }
        floor
    }

    pub fn config(&self) -> &SparsifyConfig {
        &self.config
    }

    /// The resolved `ρ` as an exact fraction.
    pub fn rho_exact(&self) -> &Rational {
        &self.rho_exact
    }

    pub fn rho(&self) -> &W {
        &self.rho
    }

    /// The sparsifier `H`.
    pub fn graph(&self) -> &Graph<W> {
        &self.h
    }

    pub fn into_graph(self) -> Graph<W> {
        self.h
    }

    pub fn decisions(&self) -> &[SampleDecision<W>] {
        &self.decisions
    }

    /// Number of edges consumed, self-loops excluded.
    pub fn consumed(&self) -> usize {
        self.decisions.len()
    }

    pub fn self_loops(&self) -> usize {
        self.self_loops
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Folds [`SparsifierState::ingest`] over `stream`.
///
/// A stream longer than `m_max` still completes, with a warning recorded on
/// the state since `ρ` was calibrated for `m_max` edges.
pub fn run_stream<W: Weight>(
    cfg: &SparsifyConfig,
    stream: &[(usize, usize)],
) -> Result<SparsifierState<W>> {
    let mut state = SparsifierState::new(cfg.clone())?;
    if stream.len() as u64 > cfg.m_max {
        let msg = format!(
            "stream has {} edges but rho was calibrated for m_max = {}",
            stream.len(),
            cfg.m_max
        );
        log::warn!("{msg}");
        state.warnings.push(msg);
    }
    for &(u, v) in stream {
        state.ingest(u, v)?;
    }
    Ok(state)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpaceReport<W> {
    pub edges: usize,
    pub total_weight: W,
    pub rho: Rational,
    /// Kept edges per dyadic class `j` of `c_e`, `2^(j-1) <= c_e < 2^j`.
    pub histogram: BTreeMap<i32, usize>,
}

impl<W: Weight> SpaceReport<W> {
    /// JSON with `schema: 1`; fractions are rendered as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let histogram: serde_json::Map<String, serde_json::Value> = self
            .histogram
            .iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
            .collect();
        serde_json::json!({
            "schema": 1,
            "edges": self.edges,
            "total_weight": self.total_weight.to_string(),
            "rho": ratio_string(&self.rho),
            "histogram": histogram,
        })
    }
}

pub fn space_report<W: Weight>(state: &SparsifierState<W>) -> SpaceReport<W> {
    space_report_from(state.graph(), state.rho_exact(), state.decisions())
}

/// Space report for any sampled graph and its decisions.
pub fn space_report_from<W: Weight>(
    h: &Graph<W>,
    rho: &Rational,
    decisions: &[SampleDecision<W>],
) -> SpaceReport<W> {
    let mut histogram = BTreeMap::new();
    for d in decisions.iter().filter(|d| d.kept) {
        *histogram.entry(dyadic_class(&d.strength)).or_insert(0) += 1;
    }
    SpaceReport {
        edges: h.m(),
        total_weight: h.total_weight(),
        rho: rho.clone(),
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::rational;

    fn k4_stream() -> Vec<(usize, usize)> {
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    }

    #[test]
    fn rho_formula() {
        let cfg = SparsifyConfig::new(256, rational(1, 2)).with_m_max(65536);
        let rho = resolve_rho(&cfg).unwrap().to_f64();
        let expected =
            32.0 * (5.0 * 256f64.ln() + 65536f64.ln()) * 1.5 / 0.25;
        assert!((rho - 7452.7).abs() < 0.05, "rho = {rho}");
        assert!(rho >= expected && rho - expected <= 1e-3);

        let cfg = SparsifyConfig::new(16, rational(1, 2)).with_m_max(120);
        let rho = resolve_rho(&cfg).unwrap().to_f64();
        let expected = 32.0 * (5.0 * 16f64.ln() + 120f64.ln()) * 1.5 / 0.25;
        assert!(rho >= expected && rho - expected <= 1e-3);
    }

    #[test]
    fn rho_override_wins() {
        let cfg = SparsifyConfig::new(16, rational(1, 2)).with_rho_override(rational(2, 1));
        assert_eq!(resolve_rho(&cfg).unwrap(), rational(2, 1));
    }

    #[test]
    fn config_validation() {
        assert!(resolve_rho(&SparsifyConfig::new(1, rational(1, 2))).is_err());
        assert!(resolve_rho(&SparsifyConfig::new(4, rational(1, 1))).is_err());
        assert!(resolve_rho(&SparsifyConfig::new(4, rational(0, 1))).is_err());
        assert!(resolve_rho(&SparsifyConfig::new(4, rational(1, 2)).with_d(rational(0, 1))).is_err());
        assert!(resolve_rho(&SparsifyConfig::new(4, rational(1, 2)).with_m_max(0)).is_err());
        assert!(resolve_rho(
            &SparsifyConfig::new(4, rational(1, 2)).with_rho_override(rational(-1, 1))
        )
        .is_err());
        assert_eq!(SparsifyConfig::new(5, rational(1, 2)).m_max, 25);
    }

    #[test]
    fn first_edge_is_always_kept() {
        let cfg = SparsifyConfig::new(4, rational(1, 2)).with_rho_override(rational(1, 1));
        let mut state: SparsifierState = SparsifierState::new(cfg).unwrap();
        let d = state.ingest(0, 1).unwrap().unwrap().clone();
        assert_eq!(d.strength, rational(1, 1));
        assert_eq!(d.probability, rational(1, 1));
        assert!(d.kept);
        assert_eq!(state.graph().edges()[0].w, rational(1, 1));
    }

    #[test]
    fn forced_keep_on_k4() {
        let cfg = SparsifyConfig::new(4, rational(1, 2)).with_rho_override(rational(3, 1));
        let state: SparsifierState = run_stream(&cfg, &k4_stream()).unwrap();
        let g: Graph = Graph::from_pairs(4, &k4_stream()).unwrap();
        assert_eq!(state.graph(), &g);
        assert!(state.decisions().iter().all(|d| d.strength <= rational(3, 1)));
        let report = space_report(&state);
        assert_eq!(report.edges, 6);
        assert_eq!(report.total_weight, rational(6, 1));
    }

    #[test]
    fn bridge_arriving_last_is_kept() {
        let mut stream = k4_stream();
        stream.extend(k4_stream().into_iter().map(|(u, v)| (u + 4, v + 4)));
        stream.push((3, 4));
        let cfg = SparsifyConfig::new(8, rational(1, 2)).with_rho_override(rational(1000, 1));
        let state: SparsifierState = run_stream(&cfg, &stream).unwrap();
        let last = state.decisions().last().unwrap();
        assert_eq!(last.strength, rational(1, 1));
        assert!(last.kept);
    }

    #[test]
    fn self_loops_and_range_errors() {
        let cfg = SparsifyConfig::new(3, rational(1, 2));
        let mut state: SparsifierState = SparsifierState::new(cfg).unwrap();
        assert!(state.ingest(1, 1).unwrap().is_none());
        assert_eq!(state.self_loops(), 1);
        assert_eq!(state.consumed(), 0);
        assert!(matches!(state.ingest(0, 3), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(state.consumed(), 0);
    }

    #[test]
    fn empty_stream_and_budget_warning() {
        let cfg = SparsifyConfig::new(3, rational(1, 2)).with_m_max(2);
        let state: SparsifierState = run_stream(&cfg, &[]).unwrap();
        assert!(state.graph().is_empty());
        assert!(state.warnings().is_empty());
        let report = space_report(&state);
        assert_eq!((report.edges, report.total_weight.clone()), (0, rational(0, 1)));
        assert!(report.histogram.is_empty());

        let state: SparsifierState = run_stream(&cfg, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(state.consumed(), 3);
        assert_eq!(state.warnings().len(), 1);
    }

    #[test]
    fn runs_are_deterministic() {
        let cfg = SparsifyConfig::new(4, rational(1, 2))
            .with_rho_override(rational(1, 2))
            .with_seed(11);
        let a: SparsifierState = run_stream(&cfg, &k4_stream()).unwrap();
        let b: SparsifierState = run_stream(&cfg, &k4_stream()).unwrap();
        assert_eq!(a.graph(), b.graph());
        assert_eq!(a.decisions(), b.decisions());
    }

    #[test]
    fn sampled_weights_are_reciprocal_probabilities() {
        let cfg = SparsifyConfig::new(4, rational(1, 2))
            .with_rho_override(rational(1, 2))
            .with_seed(3);
        let state: SparsifierState = run_stream(&cfg, &k4_stream()).unwrap();
        for d in state.decisions() {
            assert_eq!(d.weight.clone() * d.probability.clone(), rational(1, 1));
        }
        let json = space_report(&state).to_json();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["rho"], "1/2");
    }

    #[test]
    fn recorded_strengths_match_recomputation() {
        use crate::strength::strength_exact;
        let mut rng = StreamRng::new(77);
        for trial in 0..40u64 {
            let n = 4 + rng.below(9) as usize;
            let mut stream = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    for _ in 0..1 + rng.below(2) {
                        if rng.below(3) > 0 {
                            stream.push((u, v));
                        }
                    }
                }
            }
            rng.shuffle(&mut stream);
            let rho = rational(1 + rng.below(6) as i64, 2);
            let cfg = SparsifyConfig::new(n, rational(1, 2))
                .with_rho_override(rho)
                .with_seed(trial);
            let mut state: SparsifierState = SparsifierState::new(cfg).unwrap();
            for &(u, v) in &stream {
                let mut with = state.graph().clone();
                let id = with.add_edge(u, v, Rational::from_u64(1)).unwrap();
                let expected = strength_exact(&with).get(id).unwrap().clone();
                let got = state.ingest(u, v).unwrap().unwrap();
                assert_eq!(got.strength, expected, "trial {trial} edge ({u}, {v})");
            }
        }
    }
}
