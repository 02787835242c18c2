//! Stream generation: graph families, arrival orders and unit expansion.

mod generate;
mod order;

use num_traits::ToPrimitive;

pub use generate::{degree_ladder, generate, Family, StreamSpec};
pub use order::{bridges, reorder, Order};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::Weight;

/// Emits each edge of integer weight `w` as `w` parallel unit edges, in
/// edge-id order.
pub fn unit_expand<W: Weight>(g: &Graph<W>) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for e in g.edges() {
        if !e.w.is_integer() {
            return Err(Error::NonIntegerWeight {
                edge: e.id.0,
                weight: e.w.to_string(),
            });
        }
        let copies = e
            .w
            .to_ratio()
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::domain(format!("weight {} too large to expand", e.w)))?;
        out.extend(std::iter::repeat_n((e.u, e.v), copies));
    }
    Ok(out)
}
