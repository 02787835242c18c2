use std::collections::{BTreeMap, VecDeque};

use super::{Hierarchy, StrengthMap, StrengthNode};
use crate::error::{Error, Result};
use crate::graph::{DisjointSet, EdgeId, Graph};
use crate::mincut::{stoer_wagner, stoer_wagner_below};
use crate::weight::{max_weight, Weight};

/// Exact strength of every edge by recursive min-cut partitioning.
///
/// Each connected piece is split along a minimum cut of value `λ`; edges
/// crossing the split get the largest `λ` seen on the path from the root.
/// Any induced subgraph that meets both sides of a split inherits a cut of
/// value at most `λ`, so that value is exact. Disconnected pieces split into
/// their components at value zero.
pub fn strength_exact<W: Weight>(g: &Graph<W>) -> StrengthMap<W> {
    let n = g.n();
    let edges = g.edges();
    let mut nodes = vec![StrengthNode {
        vertices: (0..n).collect(),
        split_value: None,
        guarantee: W::zero(),
        parent: None,
        children: Vec::new(),
        depth: 0,
    }];
    let mut strengths: Vec<Option<W>> = vec![None; edges.len()];
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, (0..edges.len()).collect())];
    let mut pos = vec![usize::MAX; n];

    while let Some((i, piece_edges)) = stack.pop() {
        let verts = nodes[i].vertices.clone();
        if verts.len() < 2 {
            continue;
        }
        let parent_guarantee = nodes[i]
            .parent
            .map_or_else(W::zero, |p| nodes[p].guarantee.clone());
        for (li, &x) in verts.iter().enumerate() {
            pos[x] = li;
        }
        let k = verts.len();

        let mut dsu = DisjointSet::new(k);
        for &ei in &piece_edges {
            dsu.union(pos[edges[ei].u], pos[edges[ei].v]);
        }
        let groups = dsu.groups();
        let (split, local_children): (W, Vec<Vec<usize>>) = if groups.len() > 1 {
            (W::zero(), groups)
        } else {
            let mut mat = vec![vec![W::zero(); k]; k];
            for &ei in &piece_edges {
                let (a, b) = (pos[edges[ei].u], pos[edges[ei].v]);
                mat[a][b] += &edges[ei].w;
                mat[b][a] += &edges[ei].w;
            }
            let (value, side) = stoer_wagner(&mat);
            let (with0, without0): (Vec<usize>, Vec<usize>) =
                (0..k).partition(|&x| side[x] == side[0]);
            (value, vec![with0, without0])
        };

        let guarantee = max_weight(parent_guarantee, split.clone());
        nodes[i].split_value = Some(split);
        nodes[i].guarantee = guarantee.clone();

        let mut child_of = vec![0usize; k];
        for (c, members) in local_children.iter().enumerate() {
            for &li in members {
                child_of[li] = c;
            }
        }
        let mut child_edges: Vec<Vec<usize>> = vec![Vec::new(); local_children.len()];
        for &ei in &piece_edges {
            let (a, b) = (pos[edges[ei].u], pos[edges[ei].v]);
            if child_of[a] == child_of[b] {
                child_edges[child_of[a]].push(ei);
            } else {
                strengths[ei] = Some(guarantee.clone());
            }
        }

        let depth = nodes[i].depth + 1;
        for (members, sub_edges) in local_children.into_iter().zip(child_edges) {
            let id = nodes.len();
            nodes.push(StrengthNode {
                vertices: members.into_iter().map(|li| verts[li]).collect(),
                split_value: None,
                guarantee: guarantee.clone(),
                parent: Some(i),
                children: Vec::new(),
                depth,
            });
            nodes[i].children.push(id);
            stack.push((id, sub_edges));
        }
    }

    let entries = edges
        .iter()
        .zip(strengths)
        .map(|(e, s)| (e.id, s.expect("every edge is separated at some node")))
        .collect();
    StrengthMap::new(entries, Some(Hierarchy { nodes }))
}

/// Partition of the vertices into k-strong components; vertices in no
/// k-strong subgraph of two or more vertices are singletons.
pub fn k_strong_components<W: Weight>(g: &Graph<W>, k: &W) -> Result<Vec<Vec<usize>>> {
    if *k <= W::zero() {
        return Err(Error::domain(format!("k must be positive, got {k}")));
    }
    let map = strength_exact(g);
    Ok(map
        .hierarchy()
        .expect("exact strengths carry a hierarchy")
        .blocks_at(k))
}

/// Exact strength of a single edge of `g`.
pub fn edge_strength<W: Weight>(g: &Graph<W>, id: EdgeId) -> Result<W> {
    let e = g
        .edge(id)
        .ok_or_else(|| Error::domain(format!("no edge with id {id}")))?;
    Ok(new_edge_strength(&g.merged_adjacency(), e.u, e.v, &W::zero(), &W::zero()).0)
}

/// Strength of a new `u`-`v` edge of weight `extra` arriving in `adj`.
///
/// Before each min-cut the piece is peeled: a vertex whose degree is at most
/// the best value so far cannot belong to a strictly stronger subgraph.
/// `floor` must not exceed the answer; a higher floor only prunes more.
/// Alongside the value, returns the vertex set whose minimum cut attains it
/// when that set was found here rather than implied by `floor`.
pub(crate) fn new_edge_strength<W: Weight>(
    adj: &[BTreeMap<usize, W>],
    u: usize,
    v: usize,
    extra: &W,
    floor: &W,
) -> (W, Option<Vec<usize>>) {
    let local = LocalPiece::around(adj, u, v, extra);
    let (lu, lv) = (local.index_of(u), local.index_of(v));
    let k = local.len();
    let mut best = max_weight(local.pair_weight(lu, lv), floor.clone());
    let mut witness = None;
    let mut alive = vec![true; k];

    loop {
        if !local.peel(&mut alive, lu, lv, |d| *d <= best) {
            return (best, witness);
        }
        let piece = local.component(&alive, lu);
        let Some(iv) = piece.iter().position(|&x| x == lv) else {
            return (best, witness);
        };
        if piece.len() == 2 {
            return (best, witness);
        }
        let (value, side) = stoer_wagner_below(&local.dense(&piece), Some(&best));
        if value > best {
            best = value;
            witness = Some(piece.iter().map(|&x| local.vertex(x)).collect());
        }
        let iu = piece.iter().position(|&x| x == lu).unwrap();
        if side[iu] != side[iv] {
            return (best, witness);
        }
        alive.iter_mut().for_each(|a| *a = false);
        for (i, &x) in piece.iter().enumerate() {
            if side[i] == side[iu] {
                alive[x] = true;
            }
        }
    }
}

/// The connected component around a new edge, relabelled to local indices.
pub(crate) struct LocalPiece<W> {
    vertices: Vec<usize>,
    adj: Vec<Vec<(usize, W)>>,
}

impl<W: Weight> LocalPiece<W> {
    pub(crate) fn around(adj: &[BTreeMap<usize, W>], u: usize, v: usize, extra: &W) -> Self {
        let n = adj.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([u]);
        seen[u] = true;
        if !seen[v] {
            seen[v] = true;
            queue.push_back(v);
        }
        while let Some(x) = queue.pop_front() {
            for &y in adj[x].keys() {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let vertices: Vec<usize> = (0..n).filter(|&x| seen[x]).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &x) in vertices.iter().enumerate() {
            index[x] = i;
        }
        let mut local: Vec<Vec<(usize, W)>> = vertices
            .iter()
            .map(|&x| adj[x].iter().map(|(&y, w)| (index[y], w.clone())).collect())
            .collect();
        if !extra.is_zero() {
            for (a, b) in [(u, v), (v, u)] {
                let la = index[a];
                let lb = index[b];
                match local[la].iter_mut().find(|(y, _)| *y == lb) {
                    Some((_, w)) => *w += extra,
                    None => local[la].push((lb, extra.clone())),
                }
            }
        }
        Self {
            vertices,
            adj: local,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.vertices.len()
    }

    pub(crate) fn vertex(&self, local: usize) -> usize {
        self.vertices[local]
    }

    pub(crate) fn index_of(&self, x: usize) -> usize {
        self.vertices.binary_search(&x).expect("vertex in piece")
    }

    pub(crate) fn pair_weight(&self, a: usize, b: usize) -> W {
        self.adj[a]
            .iter()
            .find(|(y, _)| *y == b)
            .map_or_else(W::zero, |(_, w)| w.clone())
    }

    /// Repeatedly removes alive vertices whose degree among alive vertices
    /// satisfies `drop`. Returns false if `a` or `b` was removed.
    pub(crate) fn peel(
        &self,
        alive: &mut [bool],
        a: usize,
        b: usize,
        drop: impl Fn(&W) -> bool,
    ) -> bool {
        let k = self.len();
        let mut deg = vec![W::zero(); k];
        for x in 0..k {
            if alive[x] {
                for (y, w) in &self.adj[x] {
                    if alive[*y] {
                        deg[x] += w;
                    }
                }
            }
        }
        let mut queued = vec![false; k];
        let mut queue: Vec<usize> = Vec::new();
        for x in 0..k {
            if alive[x] && drop(&deg[x]) {
                queued[x] = true;
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            if x == a || x == b {
                return false;
            }
            alive[x] = false;
            for (y, w) in &self.adj[x] {
                if alive[*y] && !queued[*y] {
                    deg[*y] -= w;
                    if drop(&deg[*y]) {
                        queued[*y] = true;
                        queue.push(*y);
                    }
                }
            }
        }
        true
    }

    /// Alive vertices reachable from `start`, sorted.
    pub(crate) fn component(&self, alive: &[bool], start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(x) = stack.pop() {
            for (y, _) in &self.adj[x] {
                if alive[*y] && !seen[*y] {
                    seen[*y] = true;
                    stack.push(*y);
                    out.push(*y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Dense matrix of the subgraph induced by `piece` (local indices).
    pub(crate) fn dense(&self, piece: &[usize]) -> Vec<Vec<W>> {
        let mut slot = vec![usize::MAX; self.len()];
        for (i, &x) in piece.iter().enumerate() {
            slot[x] = i;
        }
        let k = piece.len();
        let mut mat = vec![vec![W::zero(); k]; k];
        for (i, &x) in piece.iter().enumerate() {
            for (y, w) in &self.adj[x] {
                let j = slot[*y];
                if j != usize::MAX {
                    mat[i][j] = w.clone();
                }
            }
        }
        mat
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{rational, Rational};
    use num_traits::Zero;

    fn unit(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_pairs(n, pairs).unwrap()
    }

    fn k(n: usize) -> Vec<(usize, usize)> {
        let mut pairs = vec![];
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        pairs
    }

    fn barbell() -> Graph {
        let mut pairs = k(4);
        pairs.extend(k(4).into_iter().map(|(u, v)| (u + 4, v + 4)));
        pairs.push((3, 4));
        unit(8, &pairs)
    }

    #[test]
    fn complete_graph_is_uniformly_strong() {
        let map = strength_exact(&unit(4, &k(4)));
        assert_eq!(map.len(), 6);
        assert!(map.values().all(|s| *s == rational(3, 1)));
    }

    #[test]
    fn barbell_bridge_is_weak() {
        let g = barbell();
        let map = strength_exact(&g);
        for e in g.edges() {
            let expected = if (e.u, e.v) == (3, 4) { 1 } else { 3 };
            assert_eq!(map.get(e.id).unwrap(), &rational(expected, 1), "edge {e:?}");
        }
    }

    #[test]
    fn path_edges_have_strength_one() {
        let map = strength_exact(&unit(4, &[(0, 1), (1, 2), (2, 3)]));
        assert!(map.values().all(|s| *s == rational(1, 1)));
    }

    #[test]
    fn hierarchy_refines_and_guarantees_grow() {
        let map = strength_exact(&barbell());
        let h = map.hierarchy().unwrap();
        assert_eq!(h.root().vertices.len(), 8);
        for node in &h.nodes {
            if let Some(p) = node.parent {
                assert!(node.guarantee >= h.nodes[p].guarantee);
                assert!(node.vertices.iter().all(|x| h.nodes[p].vertices.contains(x)));
            }
            if !node.children.is_empty() {
                let mut all: Vec<usize> = node
                    .children
                    .iter()
                    .flat_map(|&c| h.nodes[c].vertices.clone())
                    .collect();
                all.sort();
                assert_eq!(all, node.vertices);
            }
        }
    }

    #[test]
    fn k_strong_components_of_barbell() {
        let g = barbell();
        assert_eq!(
            k_strong_components(&g, &rational(2, 1)).unwrap(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
        );
        assert_eq!(
            k_strong_components(&g, &rational(1, 2)).unwrap(),
            vec![(0..8).collect::<Vec<_>>()]
        );
        assert!(k_strong_components(&g, &rational(0, 1)).is_err());
    }

    #[test]
    fn k4_is_not_four_strong() {
        let blocks = k_strong_components(&unit(4, &k(4)), &rational(4, 1)).unwrap();
        assert_eq!(blocks, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn single_edge_matches_full_decomposition() {
        let g = barbell();
        let map = strength_exact(&g);
        for e in g.edges() {
            assert_eq!(&edge_strength(&g, e.id).unwrap(), map.get(e.id).unwrap());
        }
    }

    #[test]
    fn new_edge_strength_counts_the_new_edge() {
        // bridge arriving last between two K4s
        let mut pairs = k(4);
        pairs.extend(k(4).into_iter().map(|(u, v)| (u + 4, v + 4)));
        let h = unit(8, &pairs);
        let adj = h.merged_adjacency();
        assert_eq!(new_edge_strength(&adj, 3, 4, &Rational::from_u64(1), &Rational::zero()).0, rational(1, 1));
        // a parallel copy inside a K4 block: K4 with one doubled edge is still 3-strong
        assert_eq!(new_edge_strength(&adj, 0, 1, &Rational::from_u64(1), &Rational::zero()).0, rational(3, 1));
        // empty graph: the lone new edge
        let empty: Graph = Graph::new(3);
        assert_eq!(
            new_edge_strength(&empty.merged_adjacency(), 0, 2, &Rational::from_u64(1), &Rational::zero()).0,
            rational(1, 1)
        );
    }

    #[test]
    fn disconnected_pieces() {
        let g = unit(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        let map = strength_exact(&g);
        let got: Vec<Rational> = map.values().cloned().collect();
        assert_eq!(
            got,
            vec![rational(2, 1), rational(2, 1), rational(2, 1), rational(1, 1)]
        );
        assert_eq!(map.hierarchy().unwrap().root().split_value, Some(rational(0, 1)));
    }

    #[test]
    fn floor_and_witness() {
        let g = barbell();
        let adj = g.merged_adjacency();
        let one = Rational::from_u64(1);
        for (u, v) in [(0, 1), (3, 4), (0, 7), (5, 6)] {
            let (c, witness) = new_edge_strength(&adj, u, v, &one, &Rational::zero());
            let mut with = g.clone();
            let id = with.add_edge(u, v, one.clone()).unwrap();
            assert_eq!(&c, strength_exact(&with).get(id).unwrap());
            if let Some(set) = witness {
                let (_, value) = crate::mincut::min_cut(&with.induced(&set)).unwrap();
                assert_eq!(value, c);
            }
            for floor in [c.clone() / rational(2, 1), c.clone() - rational(1, 3), c.clone()] {
                assert_eq!(new_edge_strength(&adj, u, v, &one, &floor).0, c);
            }
        }
    }
}
