//! Parse, inspect and re-emit the edge-list format.
//!
//! ```text
//! cargo run --example edge_list_io
//! ```

use cutsparsify::edgelist::{format_edge_list, parse_edge_list};
use cutsparsify::{Rational, Weight};

const INPUT: &str = "\
# a triangle with a pendant vertex
n 4
0 1
1 2 1/2
2 0 0.75
2 3 2
3 3      # self-loops are skipped and counted
";

fn main() -> cutsparsify::Result<()> {
    let parsed = parse_edge_list::<Rational>(INPUT)?;
    let g = parsed.graph;
    println!("n = {}, m = {}, skipped self-loops = {}", g.n(), g.m(), parsed.self_loops);
    println!("total weight = {}", g.total_weight());
    for (v, d) in g.degrees().iter().enumerate() {
        println!("deg({v}) = {d}");
    }
    print!("{}", format_edge_list(&g));

    let fast = parse_edge_list::<f64>(INPUT)?.graph;
    println!("f64 total weight = {}", fast.total_weight().to_f64());
    Ok(())
}
