//! Power-of-two strength estimates from sparse certificates.
//!
//! For each level `K = 2^j` the k-strong components are refined from the
//! previous level's. A piece is tested by building its Nagamochi-Ibaraki
//! `K`-certificate from a maximum-adjacency scan and taking a minimum cut of
//! the certificate: cuts below `K` survive in the certificate with their
//! exact value, cuts of `K` or more stay at least `K`. An edge's estimate
//! is the largest level whose component still holds both endpoints, which
//! lies in `(strength / 2, strength]`.

use std::collections::BTreeMap;

use super::exact::LocalPiece;
use super::StrengthMap;
use crate::graph::{DisjointSet, Graph};
use crate::mincut::stoer_wagner;
use crate::weight::{floor_log2, min_weight, pow2, Weight};

/// Sparse `k`-certificate of a dense weighted graph.
///
/// Vertices are scanned in maximum-adjacency order (ties to the lowest
/// index). When `x` is scanned, an edge to an unscanned `y` occupies the
/// interval `[r(y), r(y) + w)` of `y`'s attachment and keeps only the part
/// below `k`. The result has every cut value at least `min(original, k)` and
/// at most the original.
pub fn ni_certificate<W: Weight>(mat: &[Vec<W>], k: &W) -> Vec<Vec<W>> {
    let n = mat.len();
    let mut cert = vec![vec![W::zero(); n]; n];
    let mut scanned = vec![false; n];
    let mut attach = vec![W::zero(); n];
    for _ in 0..n {
        let mut next = usize::MAX;
        for x in 0..n {
            if !scanned[x] && (next == usize::MAX || attach[x] > attach[next]) {
                next = x;
            }
        }
        scanned[next] = true;
        for y in 0..n {
            let w = &mat[next][y];
            if scanned[y] || w.is_zero() {
                continue;
            }
            if attach[y] < *k {
                let room = k.clone() - attach[y].clone();
                let kept = min_weight(room, w.clone());
                cert[next][y] = kept.clone();
                cert[y][next] = kept;
            }
            attach[y] += w;
        }
    }
    cert
}

/// Power-of-two underestimate of every edge's strength.
pub fn strength_certificate<W: Weight>(g: &Graph<W>) -> StrengthMap<W> {
    let edges = g.edges();
    if edges.is_empty() {
        return StrengthMap::new(Vec::new(), None);
    }
    let adj = g.merged_adjacency();
    let lightest = adj
        .iter()
        .flat_map(|row| row.values())
        .fold(None::<W>, |acc, w| match acc {
            Some(a) if a <= *w => Some(a),
            _ => Some(w.clone()),
        })
        .expect("nonempty");

    let mut estimate: Vec<Option<W>> = vec![None; edges.len()];
    let mut level = floor_log2(&lightest);
    let mut dsu = DisjointSet::new(g.n());
    for e in edges {
        dsu.union(e.u, e.v);
    }
    let mut blocks: Vec<Vec<usize>> = dsu.groups().into_iter().filter(|b| b.len() > 1).collect();

    while !blocks.is_empty() {
        let k: W = pow2(level);
        let mut refined = Vec::new();
        for block in &blocks {
            refined.extend(k_strong_pieces(&adj, block, &k));
        }
        let mut block_of = vec![usize::MAX; g.n()];
        for (b, members) in refined.iter().enumerate() {
            for &x in members {
                block_of[x] = b;
            }
        }
        for (e, est) in edges.iter().zip(estimate.iter_mut()) {
            if block_of[e.u] != usize::MAX && block_of[e.u] == block_of[e.v] {
                *est = Some(k.clone());
            }
        }
        blocks = refined;
        level += 1;
    }

    let entries = edges
        .iter()
        .zip(estimate)
        .map(|(e, s)| (e.id, s.expect("first level holds every edge")))
        .collect();
    StrengthMap::new(entries, None)
}

/// The `k`-strong components (two or more vertices) inside `block`.
fn k_strong_pieces<W: Weight>(adj: &[BTreeMap<usize, W>], block: &[usize], k: &W) -> Vec<Vec<usize>> {
    let mut pos = vec![usize::MAX; adj.len()];
    for (i, &x) in block.iter().enumerate() {
        pos[x] = i;
    }
    let sub: Vec<BTreeMap<usize, W>> = block
        .iter()
        .map(|&x| {
            adj[x]
                .iter()
                .filter(|(y, _)| pos[**y] != usize::MAX)
                .map(|(y, w)| (pos[*y], w.clone()))
                .collect()
        })
        .collect();
    // blocks are connected, so the piece spans all of `sub` in block order
    let piece = LocalPiece::around(&sub, 0, 0, &W::zero());

    let mut out = Vec::new();
    let mut work: Vec<Vec<usize>> = vec![(0..piece.len()).collect()];
    while let Some(set) = work.pop() {
        let mut alive = vec![false; piece.len()];
        set.iter().for_each(|&x| alive[x] = true);
        piece.peel(&mut alive, usize::MAX, usize::MAX, |d| *d < *k);
        let mut seen = vec![false; piece.len()];
        for &start in &set {
            if !alive[start] || seen[start] {
                continue;
            }
            let comp = piece.component(&alive, start);
            comp.iter().for_each(|&x| seen[x] = true);
            if comp.len() < 2 {
                continue;
            }
            let cert = ni_certificate(&piece.dense(&comp), k);
            let (value, side) = stoer_wagner(&cert);
            if value >= *k {
                out.push(comp.iter().map(|&x| block[piece.vertex(x)]).collect());
            } else {
                let (a, b): (Vec<usize>, Vec<usize>) =
                    comp.iter().partition(|&&x| side[comp.binary_search(&x).unwrap()]);
                work.push(a);
                work.push(b);
            }
        }
    }
    out.sort();
    out
}

/// Power-of-two underestimate of the strength of a new `u`-`v` edge of
/// weight `extra` arriving in `adj`.
pub(crate) fn new_edge_strength_certificate<W: Weight>(
    adj: &[BTreeMap<usize, W>],
    u: usize,
    v: usize,
    extra: &W,
) -> W {
    let piece = LocalPiece::around(adj, u, v, extra);
    let (lu, lv) = (piece.index_of(u), piece.index_of(v));
    let mut level = floor_log2(&piece.pair_weight(lu, lv));
    let mut estimate: W = pow2(level);
    let mut alive = vec![true; piece.len()];
    loop {
        level += 1;
        let k: W = pow2(level);
        match shared_block(&piece, &alive, lu, lv, &k) {
            Some(block) => {
                estimate = k;
                alive.iter_mut().for_each(|a| *a = false);
                block.iter().for_each(|&x| alive[x] = true);
            }
            None => return estimate,
        }
    }
}

/// The `k`-strong component holding both `a` and `b` among the alive
/// vertices, if any.
fn shared_block<W: Weight>(
    piece: &LocalPiece<W>,
    alive: &[bool],
    a: usize,
    b: usize,
    k: &W,
) -> Option<Vec<usize>> {
    let mut current = alive.to_vec();
    loop {
        if !piece.peel(&mut current, a, b, |d| *d < *k) {
            return None;
        }
        let comp = piece.component(&current, a);
        if comp.binary_search(&b).is_err() {
            return None;
        }
        let cert = ni_certificate(&piece.dense(&comp), k);
        let (value, side) = stoer_wagner(&cert);
        if value >= *k {
            return Some(comp);
        }
        let ia = comp.binary_search(&a).unwrap();
        let ib = comp.binary_search(&b).unwrap();
        if side[ia] != side[ib] {
            return None;
        }
        current.iter_mut().for_each(|c| *c = false);
        for (i, &x) in comp.iter().enumerate() {
            if side[i] == side[ia] {
                current[x] = true;
            }
        }
    }
}
