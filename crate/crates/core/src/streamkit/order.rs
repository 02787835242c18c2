use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::rng::StreamRng;
use crate::strength::strength_exact;
use crate::weight::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Order {
    #[default]
    AsGenerated,
    UniformShuffle,
    /// Ascending exact strength in the final graph, ties by position.
    StrengthAscending,
    /// Non-bridge edges first, then bridges, each in original order.
    BridgesLast,
}

impl Order {
    pub const ALL: [Order; 4] = [
        Order::AsGenerated,
        Order::UniformShuffle,
        Order::StrengthAscending,
        Order::BridgesLast,
    ];
}

/// Permutes an edge sequence. Shuffles draw from ChaCha stream 1 of `seed`.
pub fn reorder(
    n: usize,
    stream: &[(usize, usize)],
    order: Order,
    seed: u64,
) -> Result<Vec<(usize, usize)>> {
    let mut out = stream.to_vec();
    match order {
        Order::AsGenerated => {}
        Order::UniformShuffle => StreamRng::with_stream(seed, 1).shuffle(&mut out),
        Order::StrengthAscending => {
            let g: Graph<Rational> = Graph::from_pairs(n, stream)?;
            let strengths = strength_exact(&g);
            let mut keyed: Vec<(Rational, usize)> = g
                .edges()
                .iter()
                .map(|e| (strengths.get(e.id).expect("strength").clone(), e.id.0))
                .collect();
            keyed.sort();
            out = keyed.into_iter().map(|(_, i)| stream[i]).collect();
        }
        Order::BridgesLast => {
            let is_bridge = bridges(n, stream);
            let (plain, cut): (Vec<usize>, Vec<usize>) =
                (0..stream.len()).partition(|&i| !is_bridge[i]);
            out = plain.into_iter().chain(cut).map(|i| stream[i]).collect();
        }
    }
    Ok(out)
}

/// Marks the edges whose removal disconnects their endpoints. Parallel
/// edges are never bridges.
pub fn bridges(n: usize, stream: &[(usize, usize)]) -> Vec<bool> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in stream.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut is_bridge = vec![false; stream.len()];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter it, next adjacency slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (x, via, slot) = *top;
            if slot < adj[x].len() {
                top.2 += 1;
                let (y, eid) = adj[x][slot];
                if eid == via {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, eid, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[x]);
                    if low[x] > disc[parent] {
                        is_bridge[via] = true;
                    }
                }
            }
        }
    }
    is_bridge
}
