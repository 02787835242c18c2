//! The bipartite family whose left degrees climb a geometric ladder.
//!
//! ```text
//! cargo run --example lower_bound_family
//! ```

use cutsparsify::streamkit::{degree_ladder, generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;

fn main() -> cutsparsify::Result<()> {
    let n = 32;
    for eps in [rational(1, 2), rational(1, 4), rational(1, 10)] {
        println!("epsilon {eps}: ladder {:?}", degree_ladder(n, &eps)?);
    }

    let eps = rational(1, 4);
    let spec = StreamSpec::new(
        Family::LowerboundBipartite { n, epsilon: eps, degrees: None },
        Order::AsGenerated,
        9,
    );
    let stream = generate(&spec)?;
    let half = n / 2;
    let mut degrees = vec![0usize; n];
    for &(u, v) in &stream {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    println!("{} edges", stream.len());
    println!("left degrees  {:?}", &degrees[..half]);
    println!("right degrees {:?}", &degrees[half..]);
    Ok(())
}
