//! Exact global minimum cut (Stoer-Wagner) and brute-force cut enumeration.

use crate::error::{Error, Result};
use crate::graph::{connected_components, Cut, Graph};
use crate::weight::Weight;

/// Largest `n` accepted by [`enumerate_cuts`].
pub const ENUMERATE_LIMIT: usize = 20;

/// Stoer-Wagner on a dense symmetric matrix with at least two rows.
///
/// Returns the cut value and a membership vector for one side. Ties in the
/// maximum-adjacency order go to the lowest index and a later phase only
/// replaces the incumbent on a strictly smaller value, so the result is a
/// function of the matrix alone.
pub(crate) fn stoer_wagner<W: Weight>(mat: &[Vec<W>]) -> (W, Vec<bool>) {
    stoer_wagner_below(mat, None)
}

/// Stoer-Wagner that stops at the first phase cut of value at most
/// `threshold`, returning that cut instead of the minimum.
pub(crate) fn stoer_wagner_below<W: Weight>(mat: &[Vec<W>], threshold: Option<&W>) -> (W, Vec<bool>) {
    let k = mat.len();
    assert!(k >= 2, "stoer_wagner needs at least two vertices");
    let mut w = mat.to_vec();
    let mut groups: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    let mut active: Vec<usize> = (0..k).collect();
    let mut best: Option<(W, Vec<usize>)> = None;

    let mut key: Vec<W> = vec![W::zero(); k];
    let mut added = vec![false; k];
    while active.len() > 1 {
        for &x in &active {
            key[x] = W::zero();
            added[x] = false;
        }
        let mut prev = active[0];
        let mut last = active[0];
        added[last] = true;
        for &x in &active {
            if !added[x] && !w[last][x].is_zero() {
                key[x] += &w[last][x];
            }
        }
        for _ in 1..active.len() {
            let mut next = usize::MAX;
            for &x in &active {
                if !added[x] && (next == usize::MAX || key[x] > key[next]) {
                    next = x;
                }
            }
            added[next] = true;
            prev = last;
            last = next;
            for &x in &active {
                if !added[x] && !w[next][x].is_zero() {
                    key[x] += &w[next][x];
                }
            }
        }

        let phase_cut = key[last].clone();
        if threshold.is_some_and(|t| phase_cut <= *t) {
            best = Some((phase_cut, groups[last].clone()));
            break;
        }
        if best.as_ref().is_none_or(|(b, _)| phase_cut < *b) {
            best = Some((phase_cut, groups[last].clone()));
        }

        for &x in &active {
            if x != last && x != prev && !w[last][x].is_zero() {
                let add = w[last][x].clone();
                w[prev][x] += &add;
                w[x][prev] += &add;
            }
        }
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        active.retain(|&x| x != last);
    }

    let (value, side) = best.expect("at least one phase");
    let mut members = vec![false; k];
    for x in side {
        members[x] = true;
    }
    (value, members)
}

/// Exact global minimum cut.
///
/// A disconnected graph yields value zero with the component of vertex 0 as
/// the cut side.
pub fn min_cut<W: Weight>(g: &Graph<W>) -> Result<(Cut, W)> {
    if g.n() < 2 {
        return Err(Error::domain(format!(
            "minimum cut needs at least two vertices, graph has {}",
            g.n()
        )));
    }
    let comps = connected_components(g);
    if comps.len() > 1 {
        let cut = Cut::new(g.n(), comps[0].iter().copied())?;
        return Ok((cut, W::zero()));
    }
    let vertices: Vec<usize> = (0..g.n()).collect();
    let (value, members) = stoer_wagner(&g.dense_matrix(&vertices));
    Ok((Cut::from_members(members)?, value))
}

/// Every canonical cut with its value, in mask order over vertices `1..n`.
pub fn enumerate_cuts<W: Weight>(g: &Graph<W>) -> Result<impl Iterator<Item = (Cut, W)> + '_> {
    if g.n() > ENUMERATE_LIMIT {
        return Err(Error::TooLarge {
            what: "cut enumeration",
            n: g.n(),
            limit: ENUMERATE_LIMIT,
            hint: "",
        });
    }
    let n = g.n();
    let count: u64 = if n == 0 { 0 } else { (1u64 << (n - 1)) - 1 };
    let edges: Vec<(u64, u64, W)> = g
        .edges()
        .iter()
        .map(|e| (vertex_bit(e.u), vertex_bit(e.v), e.w.clone()))
        .collect();
    Ok((0..count).map(move |mask| {
        let side = (mask << 1) | 1;
        let mut value = W::zero();
        for (a, b, w) in &edges {
            if (side & a == 0) != (side & b == 0) {
                value += w;
            }
        }
        (Cut::from_mask(n, mask), value)
    }))
}

fn vertex_bit(x: usize) -> u64 {
    1u64 << x
}
