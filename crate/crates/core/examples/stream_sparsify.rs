//! One pass over an edge stream, edge by edge.
//!
//! ```text
//! cargo run --example stream_sparsify
//! ```

use cutsparsify::stream::space_report;
use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::{SparsifierState, SparsifyConfig};

fn main() -> cutsparsify::Result<()> {
    let n = 16;
    let stream = generate(&StreamSpec::new(
        Family::Gnp { n, p: rational(1, 2) },
        Order::UniformShuffle,
        1,
    ))?;

    let formula = SparsifyConfig::new(n, rational(1, 2));
    println!("rho from the formula at n = {n}: {}", cutsparsify::stream::resolve_rho(&formula)?);

    let cfg = formula.with_rho_override(rational(3, 2)).with_seed(7);
    let mut state: SparsifierState = SparsifierState::new(cfg)?;
    for (i, &(u, v)) in stream.iter().enumerate() {
        let d = state.ingest(u, v)?.expect("no self-loops");
        if i % 12 == 0 {
            println!(
                "edge {:>3} ({u:>2},{v:>2}): c_e = {:<4} p_e = {:<5} kept = {}",
                d.edge, d.strength, d.probability, d.kept
            );
        }
    }
    let report = space_report(&state);
    println!("{}", serde_json::to_string_pretty(&report.to_json())?);
    Ok(())
}
