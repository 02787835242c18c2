//! Per-edge cost of the sparsifier in each weight and strength mode.
//!
//! ```text
//! cargo run --release --example throughput
//! ```

use std::time::Instant;

use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::{run_stream, Rational, SparsifyConfig, StrengthMode, Weight};

fn time<W: Weight>(label: &str, cfg: &SparsifyConfig, stream: &[(usize, usize)]) -> cutsparsify::Result<()> {
    let start = Instant::now();
    let state = run_stream::<W>(cfg, stream)?;
    let secs = start.elapsed().as_secs_f64();
    println!(
        "{label:<22} kept {:>4}/{}  {:>7.1} us/edge",
        state.graph().m(),
        stream.len(),
        1e6 * secs / stream.len() as f64
    );
    Ok(())
}

fn main() -> cutsparsify::Result<()> {
    let n = 48;
    let stream = generate(&StreamSpec::new(
        Family::Gnp { n, p: rational(1, 2) },
        Order::UniformShuffle,
        3,
    ))?;
    for rho in [2u64, 8] {
        let exact = SparsifyConfig::new(n, rational(1, 2))
            .with_rho_override(Rational::from_u64(rho))
            .with_seed(1);
        let cert = exact.clone().with_strength_mode(StrengthMode::Certificate);
        println!("rho = {rho}");
        time::<f64>("  f64 exact", &exact, &stream)?;
        time::<f64>("  f64 certificate", &cert, &stream)?;
        time::<Rational>("  rational exact", &exact, &stream)?;
    }
    Ok(())
}
