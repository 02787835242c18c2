//! Exact global minimum cut against full cut enumeration.
//!
//! ```text
//! cargo run --example min_cut
//! ```

use cutsparsify::weight::rational;
use cutsparsify::{enumerate_cuts, min_cut, Graph};

fn main() -> cutsparsify::Result<()> {
    // two weighted triangles joined by two light edges
    let mut g: Graph = Graph::new(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        g.add_edge(u, v, rational(3, 1))?;
    }
    g.add_edge(2, 3, rational(1, 2))?;
    g.add_edge(0, 5, rational(2, 3))?;

    let (cut, value) = min_cut(&g)?;
    println!("Stoer-Wagner: {value} with side {cut}");

    let (best_cut, best) = enumerate_cuts(&g)?
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("n >= 2");
    println!("enumeration:  {best} with side {best_cut}");
    assert_eq!(value, best);
    Ok(())
}
