//! Strength straight from the definition, for tiny graphs.

use super::StrengthMap;
use crate::error::{Error, Result};
use crate::graph::{DisjointSet, Graph};
use crate::weight::Weight;

/// Largest `n` accepted by the brute-force routines.
pub const BRUTE_LIMIT: usize = 10;

/// Minimum cut of every induced subgraph, indexed by vertex bitmask, by
/// enumerating every bipartition. Entries for sets of fewer than two
/// vertices are `None`.
fn induced_min_cuts<W: Weight>(g: &Graph<W>) -> Result<Vec<Option<W>>> {
    let n = g.n();
    if n > BRUTE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force strength",
            n,
            limit: BRUTE_LIMIT,
            hint: "",
        });
    }
    let mut pair = vec![vec![W::zero(); n]; n];
    for e in g.edges() {
        pair[e.u][e.v] += &e.w;
        pair[e.v][e.u] += &e.w;
    }
    let mut out: Vec<Option<W>> = vec![None; 1 << n];
    for set in 1usize..(1 << n) {
        if set.count_ones() < 2 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| set >> x & 1 == 1).collect();
        let low = 1usize << members[0];
        let rest = set & !low;
        let mut best: Option<W> = None;
        // side = low | sub for every proper subset `sub` of `rest`
        let mut sub = rest;
        loop {
            sub = sub.wrapping_sub(1) & rest;
            let side = low | sub;
            let mut value = W::zero();
            for &a in &members {
                if side >> a & 1 == 0 {
                    continue;
                }
                for &b in &members {
                    if side >> b & 1 == 0 {
                        value += &pair[a][b];
                    }
                }
            }
            if best.as_ref().is_none_or(|bv| value < *bv) {
                best = Some(value);
            }
            if sub == 0 {
                break;
            }
        }
        out[set] = best;
    }
    Ok(out)
}

/// `strength(e) = max` over vertex sets `S ⊇ {u, v}` of the minimum cut of
/// the subgraph induced by `S`.
pub fn strength_brute<W: Weight>(g: &Graph<W>) -> Result<StrengthMap<W>> {
    let cuts = induced_min_cuts(g)?;
    let entries = g
        .edges()
        .iter()
        .map(|e| {
            let need = (1usize << e.u) | (1usize << e.v);
            let best = cuts
                .iter()
                .enumerate()
                .filter(|(set, _)| set & need == need)
                .filter_map(|(_, c)| c.as_ref())
                .fold(W::zero(), |acc, c| if *c > acc { c.clone() } else { acc });
            (e.id, best)
        })
        .collect();
    Ok(StrengthMap::new(entries, None))
}

/// k-strong components by testing every vertex set.
pub fn k_strong_components_brute<W: Weight>(g: &Graph<W>, k: &W) -> Result<Vec<Vec<usize>>> {
    let cuts = induced_min_cuts(g)?;
    let mut dsu = DisjointSet::new(g.n());
    for (set, value) in cuts.iter().enumerate() {
        if value.as_ref().is_some_and(|v| v >= k) {
            let members: Vec<usize> = (0..g.n()).filter(|&x| set >> x & 1 == 1).collect();
            for w in members.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
    }
    Ok(dsu.groups())
}
