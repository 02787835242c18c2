//! Test-side oracles, written from the definitions and sharing no code with
//! the library's algorithms.

#![allow(dead_code)]

use cutsparsify::weight::rational;
use cutsparsify::{Graph, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type WEdge = (usize, usize, Rational);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn edges_of(g: &Graph) -> Vec<WEdge> {
    g.edges().iter().map(|e| (e.u, e.v, e.w.clone())).collect()
}

pub fn graph_of(n: usize, edges: &[WEdge]) -> Graph {
    let mut g = Graph::new(n);
    for (u, v, w) in edges {
        g.add_edge(*u, *v, w.clone()).unwrap();
    }
    g
}

/// Sum of weights with exactly one endpoint in `side` (a vertex bitmask).
pub fn oracle_cut(edges: &[WEdge], side: u64) -> Rational {
    let mut total = Rational::zero();
    for (u, v, w) in edges {
        if (side >> u & 1) != (side >> v & 1) {
            total += w;
        }
    }
    total
}

/// Minimum over all nonempty proper subsets containing vertex 0.
pub fn oracle_min_cut(n: usize, edges: &[WEdge]) -> Rational {
    assert!(n >= 2);
    let full = (1u64 << n) - 1;
    let mut best: Option<Rational> = None;
    let mut side = 1u64;
    while side < full {
        if side & 1 == 1 {
            let v = oracle_cut(edges, side);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        side += 1;
    }
    best.unwrap()
}

/// Minimum cut of the subgraph induced by `set`, by submask enumeration.
fn induced_min_cut(edges: &[WEdge], set: u64) -> Rational {
    let inner: Vec<WEdge> = edges
        .iter()
        .filter(|(u, v, _)| set >> u & 1 == 1 && set >> v & 1 == 1)
        .cloned()
        .collect();
    let low = set & set.wrapping_neg();
    let mut best: Option<Rational> = None;
    let mut sub = (set - 1) & set;
    while sub > 0 {
        if sub & low != 0 {
            let v = oracle_cut(&inner, sub);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        sub = (sub - 1) & set;
    }
    best.unwrap()
}

/// Edge strengths straight from the definition: the best minimum cut over
/// all vertex subsets holding both endpoints.
pub fn oracle_strengths(n: usize, edges: &[WEdge]) -> Vec<Rational> {
    let mut best = vec![Rational::zero(); edges.len()];
    for set in 1u64..(1 << n) {
        if set.count_ones() < 2 {
            continue;
        }
        let k = induced_min_cut(edges, set);
        for (i, (u, v, _)) in edges.iter().enumerate() {
            if set >> u & 1 == 1 && set >> v & 1 == 1 && k > best[i] {
                best[i] = k.clone();
            }
        }
    }
    best
}

pub fn random_weight(r: &mut ChaCha8Rng) -> Rational {
    const CHOICES: [(i64, i64); 7] = [(1, 1), (1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (5, 4)];
    let (a, b) = CHOICES[r.gen_range(0..CHOICES.len())];
    rational(a, b)
}

/// Random weighted multigraph; parallel edges are likely for small `n`.
pub fn random_multigraph(r: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<WEdge> {
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u != v {
            out.push((u, v, random_weight(r)));
        }
    }
    out
}

/// Simple graph as a unit stream, each pair with probability `p`.
pub fn random_simple_stream(r: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
    out
}
