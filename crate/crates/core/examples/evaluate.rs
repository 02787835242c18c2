//! Exhaustive and sampled cut evaluation, and min-cut recovery.
//!
//! ```text
//! cargo run --example evaluate
//! ```

use cutsparsify::harness::{check_ek_bound, eval_exhaustive, eval_mincut, eval_sampled};
use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::{run_stream, Graph, Rational, SparsifyConfig};

fn main() -> cutsparsify::Result<()> {
    let n = 12;
    let stream = generate(&StreamSpec::new(
        Family::PlantedCut { left: 6, right: 6, planted: 2, p_in: rational(4, 5) },
        Order::UniformShuffle,
        2,
    ))?;
    let g: Graph = Graph::from_pairs(n, &stream)?;
    let cfg = SparsifyConfig::new(n, rational(1, 2))
        .with_rho_override(rational(2, 1))
        .with_seed(5);
    let state = run_stream::<Rational>(&cfg, &stream)?;
    let h = state.graph();

    let full = eval_exhaustive(&g, h, &rational(1, 2))?.with_ek_checks(check_ek_bound(&state));
    println!("{}", serde_json::to_string_pretty(&full.to_json())?);

    let sampled = eval_sampled(&g, h, &rational(1, 2), 100, 0)?;
    println!(
        "sampled: {} probed, max error {} ({})",
        sampled.probed_cuts,
        sampled.max_relative_error,
        sampled.mode.label()
    );

    let mc = eval_mincut(&g, h)?;
    println!("min cut {} exact, {} through H, ratio {}", mc.exact, mc.via_sparsifier, mc.ratio);
    Ok(())
}
