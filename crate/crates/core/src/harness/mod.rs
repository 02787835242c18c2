//! Evaluation: cut-approximation error, the deterministic weight lemma,
//! minimum-cut recovery and Monte-Carlo aggregation.

mod checks;
mod eval;
mod montecarlo;

pub use checks::{check_ek_bound, ek_bound_holds, handshake_holds, EkCheck};
pub use eval::{
    eval_exhaustive, eval_mincut, eval_sampled, DeterministicChecks, ErrorQuantiles, EvalMode,
    EvalReport, MinCutEval, EXHAUSTIVE_LIMIT,
};
pub use montecarlo::{monte_carlo, CutStats, MonteCarloSummary};
