//! Offline strength sampling: strengths come from the complete graph, then
//! each edge is kept independently with probability `min(ρ / c_e, 1)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::rng::StreamRng;
use crate::strength::{strength_exact, StrengthMap};
use crate::weight::Weight;

/// The sampling outcome for one edge.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleDecision<W> {
    pub edge: EdgeId,
    pub u: usize,
    pub v: usize,
    /// Strength `c_e` used for this edge.
    pub strength: W,
    /// `p_e = min(ρ / c_e, 1)`.
    pub probability: W,
    pub kept: bool,
    /// `1 / p_e`, the weight the edge carries when kept.
    pub weight: W,
}

impl<W: Weight> SampleDecision<W> {
    /// Draws once from `rng` and records the outcome.
    pub(crate) fn draw(
        rng: &mut StreamRng,
        edge: EdgeId,
        (u, v): (usize, usize),
        strength: W,
        rho: &W,
    ) -> Self {
        let (probability, weight) = if strength <= *rho {
            (W::one(), W::one())
        } else {
            (rho.clone() / strength.clone(), strength.clone() / rho.clone())
        };
        let kept = rng.bernoulli(&probability.to_ratio());
        Self {
            edge,
            u,
            v,
            strength,
            probability,
            kept,
            weight,
        }
    }
}

/// `edge_id c_e p_e kept` lines, `kept` as 1 or 0.
pub fn format_decisions<W: Weight>(decisions: &[SampleDecision<W>]) -> String {
    let mut out = String::new();
    for d in decisions {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            d.edge,
            d.strength,
            d.probability,
            u8::from(d.kept)
        );
    }
    out
}

/// Samples `g` with exact strengths computed on `g` itself.
///
/// Draws are consumed in ascending edge-id order, one per edge.
pub fn sparsify_offline<W: Weight>(
    g: &Graph<W>,
    rho: &W,
    seed: u64,
) -> Result<(Graph<W>, Vec<SampleDecision<W>>)> {
    check_unit_weights(g)?;
    let strengths = strength_exact(g);
    sparsify_with_strengths(g, &strengths, rho, seed)
}

/// Same as [`sparsify_offline`] with precomputed strengths, for repeated
/// sampling of one graph.
pub fn sparsify_with_strengths<W: Weight>(
    g: &Graph<W>,
    strengths: &StrengthMap<W>,
    rho: &W,
    seed: u64,
) -> Result<(Graph<W>, Vec<SampleDecision<W>>)> {
    check_unit_weights(g)?;
    if *rho <= W::zero() {
        return Err(Error::domain(format!("rho must be positive, got {rho}")));
    }
    let mut rng = StreamRng::new(seed);
    let mut h = Graph::new(g.n());
    let mut decisions = Vec::with_capacity(g.m());
    for e in g.edges() {
        let c = strengths
            .get(e.id)
            .ok_or_else(|| Error::domain(format!("no strength for edge {}", e.id)))?
            .clone();
        let d = SampleDecision::draw(&mut rng, e.id, (e.u, e.v), c, rho);
        if d.kept {
            h.add_edge_with_id(e.id, e.u, e.v, d.weight.clone())?;
        }
        decisions.push(d);
    }
    Ok((h, decisions))
}

fn check_unit_weights<W: Weight>(g: &Graph<W>) -> Result<()> {
    match g.edges().iter().find(|e| !e.w.is_one()) {
        Some(e) => Err(Error::NonUnitWeight {
            edge: e.id.0,
            weight: e.w.to_string(),
        }),
        None => Ok(()),
    }
}
