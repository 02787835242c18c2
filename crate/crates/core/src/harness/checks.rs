use serde::Serialize;

use crate::graph::{cut_value, Cut, Graph};
use crate::stream::SparsifierState;
use crate::weight::{Weight, FLOAT_RELATIVE_TOLERANCE};

/// One instance of the bound `Σ_{kept e, c_e <= k} w_H(e) <= n (k + k/ρ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EkCheck {
    pub k: String,
    pub weight: String,
    pub bound: String,
    pub pass: bool,
}

fn at_most<W: Weight>(lhs: &W, rhs: &W) -> bool {
    if W::EXACT {
        lhs <= rhs
    } else {
        lhs.to_f64() <= rhs.to_f64() * (1.0 + FLOAT_RELATIVE_TOLERANCE)
    }
}

/// Checks the weight bound for every distinct recorded `c_e`.
pub fn check_ek_bound<W: Weight>(state: &SparsifierState<W>) -> Vec<EkCheck> {
    let n = W::from_u64(state.config().n as u64);
    let rho = state.rho().clone();
    let mut kept: Vec<(&W, &W)> = state
        .decisions()
        .iter()
        .filter(|d| d.kept)
        .map(|d| (&d.strength, &d.weight))
        .collect();
    kept.sort_by(|a, b| a.0.partial_cmp(b.0).expect("comparable strengths"));
    let mut ks: Vec<&W> = state.decisions().iter().map(|d| &d.strength).collect();
    ks.sort_by(|a, b| a.partial_cmp(b).expect("comparable strengths"));
    ks.dedup_by(|a, b| a == b);

    let mut out = Vec::with_capacity(ks.len());
    let mut acc = W::zero();
    let mut idx = 0;
    for k in ks {
        while idx < kept.len() && kept[idx].0 <= k {
            acc += kept[idx].1;
            idx += 1;
        }
        let bound = n.clone() * (k.clone() + k.clone() / rho.clone());
        out.push(EkCheck {
            k: k.to_string(),
            weight: acc.to_string(),
            bound: bound.to_string(),
            pass: at_most(&acc, &bound),
        });
    }
    out
}

pub fn ek_bound_holds<W: Weight>(state: &SparsifierState<W>) -> bool {
    check_ek_bound(state).iter().all(|c| c.pass)
}

/// `total_weight(h) = ½ Σ_v VAL({v}, h)`.
pub fn handshake_holds<W: Weight>(h: &Graph<W>) -> bool {
    if h.n() < 2 {
        return true;
    }
    let mut sum = W::zero();
    for v in 0..h.n() {
        let cut = Cut::singleton(h.n(), v).expect("n >= 2");
        sum += &cut_value(h, &cut).expect("same n");
    }
    let twice = h.total_weight() * W::from_u64(2);
    if W::EXACT {
        sum == twice
    } else {
        (sum.to_f64() - twice.to_f64()).abs() <= FLOAT_RELATIVE_TOLERANCE * twice.to_f64().max(1.0)
    }
}
