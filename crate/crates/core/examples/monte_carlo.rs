//! Repeated runs over seeds: cut means, failure fractions, error medians.
//!
//! ```text
//! cargo run --release --example monte_carlo
//! ```

use cutsparsify::harness::monte_carlo;
use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::SparsifyConfig;

fn main() -> cutsparsify::Result<()> {
    let n = 10;
    let stream = generate(&StreamSpec::new(
        Family::Gnp { n, p: rational(1, 2) },
        Order::UniformShuffle,
        55,
    ))?;
    for rho in [rational(1, 4), rational(1, 1), rational(4, 1)] {
        let cfg = SparsifyConfig::new(n, rational(1, 2))
            .with_rho_override(rho.clone())
            .with_seed(1000);
        let s = monte_carlo::<f64>(&cfg, &stream, 2000)?;
        println!(
            "rho {rho:>3}: sampled {:.2} of decisions, failure fraction {:.3}, median max error {:.3}",
            s.sampled_fraction,
            s.failure_fraction(),
            s.median_max_error()
        );
        let singleton = s.cuts.iter().find(|c| c.cut.side().len() == 1).expect("n >= 2");
        println!(
            "          cut {}: G = {}, mean H = {:.3} +- {:.3}",
            singleton.cut,
            singleton.g_value,
            singleton.mean,
            singleton.stderr()
        );
    }
    Ok(())
}
