//! Edge strengths and k-strong components of a barbell.
//!
//! ```text
//! cargo run --example edge_strength
//! ```

use cutsparsify::strength::{
    k_strong_components, strength_brute, strength_certificate, strength_exact,
};
use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;
use cutsparsify::Graph;

fn main() -> cutsparsify::Result<()> {
    let stream = generate(&StreamSpec::new(Family::Barbell { block: 4 }, Order::AsGenerated, 0))?;
    let g: Graph = Graph::from_pairs(8, &stream)?;

    let exact = strength_exact(&g);
    let cert = strength_certificate(&g);
    let brute = strength_brute(&g)?;
    println!("edge      exact  certificate  brute");
    for e in g.edges() {
        println!(
            "{:>2} {}-{}   {:>5}  {:>11}  {:>5}",
            e.id,
            e.u,
            e.v,
            exact.get(e.id).unwrap(),
            cert.get(e.id).unwrap(),
            brute.get(e.id).unwrap()
        );
    }

    for k in [rational(1, 1), rational(2, 1), rational(3, 1), rational(4, 1)] {
        println!("{k}-strong components: {:?}", k_strong_components(&g, &k)?);
    }
    Ok(())
}
