//! Strength-proportional sampling of a whole graph, with the decisions log.
//!
//! ```text
//! cargo run --example offline_sampling
//! ```

use cutsparsify::harness::eval_exhaustive;
use cutsparsify::offline::{format_decisions, sparsify_offline};
use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::Graph;

fn main() -> cutsparsify::Result<()> {
    let stream = generate(&StreamSpec::new(
        Family::Gnp { n: 10, p: rational(3, 5) },
        Order::AsGenerated,
        4,
    ))?;
    let g: Graph = Graph::from_pairs(10, &stream)?;
    let rho = rational(2, 1);
    let (h, decisions) = sparsify_offline(&g, &rho, 17)?;

    println!("edge_id c_e p_e kept");
    print!("{}", format_decisions(&decisions));
    println!("kept {} of {} edges, total weight {} vs {}", h.m(), g.m(), h.total_weight(), g.total_weight());

    let report = eval_exhaustive(&g, &h, &rational(1, 2))?;
    println!(
        "max relative cut error {} over {} cuts: {}",
        report.max_relative_error,
        report.probed_cuts,
        report.verdict()
    );
    Ok(())
}
