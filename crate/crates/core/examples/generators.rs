//! Stream families and arrival orders.
//!
//! ```text
//! cargo run --example generators
//! ```

use cutsparsify::streamkit::{generate, Family, Order, StreamSpec};
use cutsparsify::weight::rational;

fn main() -> cutsparsify::Result<()> {
    let families = [
        Family::Gnp { n: 8, p: rational(1, 2) },
        Family::Complete { n: 5 },
        Family::Path { n: 6 },
        Family::Barbell { block: 3 },
        Family::PlantedCut { left: 4, right: 4, planted: 2, p_in: rational(1, 1) },
    ];
    for family in families {
        println!("{} ({} vertices)", family.name(), family.vertex_count());
        for order in Order::ALL {
            let stream = generate(&StreamSpec::new(family.clone(), order, 3))?;
            let head: Vec<String> = stream.iter().take(6).map(|(u, v)| format!("{u}-{v}")).collect();
            println!("  {order:?}: {} edges, starts {}", stream.len(), head.join(" "));
        }
    }
    Ok(())
}
