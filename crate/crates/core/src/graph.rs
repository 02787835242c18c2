//! Weighted undirected multigraphs and cuts.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{Rational, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge<W = Rational> {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub w: W,
}

impl<W> Edge<W> {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph on vertices `0..n`.
///
/// Parallel edges are allowed and distinguished by id. Self-loops and
/// non-positive weights are rejected. Ids are assigned in increasing order
/// and edges are kept sorted by id.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph<W = Rational> {
    n: usize,
    edges: Vec<Edge<W>>,
    next_id: usize,
}

impl<W: Weight> Graph<W> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            next_id: 0,
        }
    }

    /// Unit-weight graph from an edge sequence.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v, W::one())?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: W) -> Result<EdgeId> {
        let id = EdgeId(self.next_id);
        self.add_edge_with_id(id, u, v, w)?;
        Ok(id)
    }

    /// Inserts an edge under a caller-chosen id, which must exceed every id
    /// already present.
    pub fn add_edge_with_id(&mut self, id: EdgeId, u: usize, v: usize, w: W) -> Result<()> {
        if id.0 < self.next_id {
            return Err(Error::EdgeIdOrder(id.0));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if w <= W::zero() {
            return Err(Error::NonPositiveWeight(w.to_string()));
        }
        self.edges.push(Edge { id, u, v, w });
        self.next_id = id.0 + 1;
        Ok(())
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<W>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge<W>> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn total_weight(&self) -> W {
        let mut total = W::zero();
        for e in &self.edges {
            total += &e.w;
        }
        total
    }

    /// Weighted degree of every vertex.
    pub fn degrees(&self) -> Vec<W> {
        let mut deg = vec![W::zero(); self.n];
        for e in &self.edges {
            deg[e.u] += &e.w;
            deg[e.v] += &e.w;
        }
        deg
    }

    pub fn map_weights<V: Weight>(&self, mut f: impl FnMut(&W) -> V) -> Graph<V> {
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    u: e.u,
                    v: e.v,
                    w: f(&e.w),
                })
                .collect(),
            next_id: self.next_id,
        }
    }

    /// The same graph with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: &W) -> Graph<W> {
        self.map_weights(|w| w.clone() * factor.clone())
    }

    pub fn to_f64(&self) -> Graph<f64> {
        self.map_weights(|w| w.to_f64())
    }

    /// Parallel edges merged: `adj[x][y]` is the total weight between x and y.
    pub fn merged_adjacency(&self) -> Vec<BTreeMap<usize, W>> {
        let mut adj: Vec<BTreeMap<usize, W>> = vec![BTreeMap::new(); self.n];
        for e in &self.edges {
            *adj[e.u].entry(e.v).or_insert_with(W::zero) += &e.w;
            *adj[e.v].entry(e.u).or_insert_with(W::zero) += &e.w;
        }
        adj
    }

    /// Dense symmetric weight matrix of the subgraph induced by `vertices`,
    /// indexed by position in `vertices`.
    pub fn dense_matrix(&self, vertices: &[usize]) -> Vec<Vec<W>> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            index[x] = i;
        }
        let k = vertices.len();
        let mut mat = vec![vec![W::zero(); k]; k];
        for e in &self.edges {
            let (a, b) = (index[e.u], index[e.v]);
            if a != usize::MAX && b != usize::MAX {
                mat[a][b] += &e.w;
                mat[b][a] += &e.w;
            }
        }
        mat
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order. Edge ids are preserved.
    pub fn induced(&self, vertices: &[usize]) -> Graph<W> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            index[x] = i;
        }
        let mut sub = Graph::new(vertices.len());
        for e in &self.edges {
            let (a, b) = (index[e.u], index[e.v]);
            if a != usize::MAX && b != usize::MAX {
                sub.edges.push(Edge {
                    id: e.id,
                    u: a,
                    v: b,
                    w: e.w.clone(),
                });
            }
        }
        sub.next_id = self.next_id;
        sub
    }
}

/// Total weight of all edges.
pub fn total_weight<W: Weight>(g: &Graph<W>) -> W {
    g.total_weight()
}

/// A cut, stored as the side containing vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    members: Vec<bool>,
}

impl Cut {
    /// Builds the cut `(side, V \ side)`. Either side may be given.
    pub fn new(n: usize, side: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = vec![false; n];
        let mut count = 0;
        for x in side {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if !members[x] {
                members[x] = true;
                count += 1;
            }
        }
        if count == 0 || count == n {
            return Err(Error::InvalidCut(format!(
                "side has {count} of {n} vertices; it must be nonempty and proper"
            )));
        }
        Ok(Self::canonical(members))
    }

    pub fn from_members(members: Vec<bool>) -> Result<Self> {
        let n = members.len();
        let side: Vec<usize> = (0..n).filter(|&x| members[x]).collect();
        Self::new(n, side)
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::new(n, [v])
    }

    /// Cut from a bitmask over vertices `1..n`; vertex 0 is always on the
    /// side. Requires `n <= 64` and `mask != 2^(n-1) - 1`.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        let mut members = vec![false; n];
        members[0] = true;
        for (x, m) in members.iter_mut().enumerate().skip(1) {
            *m = mask >> (x - 1) & 1 == 1;
        }
        Self { members }
    }

    fn canonical(mut members: Vec<bool>) -> Self {
        if !members[0] {
            members.iter_mut().for_each(|m| *m = !*m);
        }
        Self { members }
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    /// Vertices on the canonical side (the one holding vertex 0).
    pub fn side(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.members[x]).collect()
    }

    pub fn other_side(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| !self.members[x]).collect()
    }

    pub fn crosses<W>(&self, e: &Edge<W>) -> bool {
        self.members[e.u] != self.members[e.v]
    }

    /// Whether the cut separates `a` from `b`.
    pub fn separates(&self, a: usize, b: usize) -> bool {
        self.members[a] != self.members[b]
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side: Vec<String> = self.side().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", side.join(","))
    }
}

/// Total weight of edges with exactly one endpoint on each side.
pub fn cut_value<W: Weight>(g: &Graph<W>, cut: &Cut) -> Result<W> {
    if cut.n() != g.n() {
        return Err(Error::InvalidCut(format!(
            "cut over {} vertices used with a graph of {}",
            cut.n(),
            g.n()
        )));
    }
    let mut value = W::zero();
    for e in g.edges() {
        if cut.crosses(e) {
            value += &e.w;
        }
    }
    Ok(value)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components<W: Weight>(g: &Graph<W>) -> Vec<Vec<usize>> {
    let mut dsu = DisjointSet::new(g.n());
    for e in g.edges() {
        dsu.union(e.u, e.v);
    }
    dsu.groups()
}

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins, which keeps group order stable
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::weight::rational;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, Rational::from_u64(1)).unwrap();
            }
        }
        g
    }

    pub(crate) fn barbell() -> Graph {
        let mut g = Graph::new(8);
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    g.add_edge(base + u, base + v, Rational::from_u64(1)).unwrap();
                }
            }
        }
        g.add_edge(3, 4, Rational::from_u64(1)).unwrap();
        g
    }

    #[test]
    fn cut_values_of_small_graphs() {
        let k3 = complete(3);
        assert_eq!(cut_value(&k3, &Cut::new(3, [0]).unwrap()).unwrap(), rational(2, 1));
        let k4 = complete(4);
        assert_eq!(cut_value(&k4, &Cut::new(4, [0, 1]).unwrap()).unwrap(), rational(4, 1));
        let bb = barbell();
        assert_eq!(cut_value(&bb, &Cut::new(8, 0..4).unwrap()).unwrap(), rational(1, 1));
    }

    #[test]
    fn invalid_cuts_rejected() {
        assert!(matches!(Cut::new(3, []), Err(Error::InvalidCut(_))));
        assert!(matches!(Cut::new(3, [0, 1, 2]), Err(Error::InvalidCut(_))));
        assert!(Cut::new(3, [5]).is_err());
        let k3 = complete(3);
        assert!(cut_value(&k3, &Cut::new(4, [0]).unwrap()).is_err());
    }

    #[test]
    fn cuts_are_canonical() {
        let a = Cut::new(5, [1, 3]).unwrap();
        let b = Cut::new(5, [0, 2, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.side(), vec![0, 2, 4]);
    }

    #[test]
    fn total_weights() {
        let g: Graph = Graph::new(3);
        assert_eq!(g.total_weight(), rational(0, 1));
        assert_eq!(complete(4).total_weight(), rational(6, 1));
        let mut g = Graph::new(3);
        g.add_edge(0, 1, rational(1, 2)).unwrap();
        g.add_edge(1, 2, rational(1, 3)).unwrap();
        assert_eq!(total_weight(&g), rational(5, 6));
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&complete(4)), vec![vec![0, 1, 2, 3]]);
        let mut g = complete(3);
        g = Graph { n: 4, ..g };
        assert_eq!(connected_components(&g), vec![vec![0, 1, 2], vec![3]]);
        let empty: Graph = Graph::new(3);
        assert_eq!(connected_components(&empty), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn construction_errors() {
        let mut g: Graph = Graph::new(3);
        assert!(matches!(g.add_edge(1, 1, rational(1, 1)), Err(Error::SelfLoop(1))));
        assert!(matches!(
            g.add_edge(0, 3, rational(1, 1)),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(g.add_edge(0, 1, rational(0, 1)).is_err());
        g.add_edge_with_id(EdgeId(5), 0, 1, rational(1, 1)).unwrap();
        assert!(g.add_edge_with_id(EdgeId(2), 0, 1, rational(1, 1)).is_err());
        assert_eq!(g.add_edge(0, 2, rational(1, 1)).unwrap(), EdgeId(6));
    }

    #[test]
    fn parallel_edges_are_distinct() {
        let mut g: Graph = Graph::new(2);
        let a = g.add_edge(0, 1, rational(1, 1)).unwrap();
        let b = g.add_edge(0, 1, rational(1, 1)).unwrap();
        assert_ne!(a, b);
        assert_eq!(cut_value(&g, &Cut::singleton(2, 0).unwrap()).unwrap(), rational(2, 1));
        assert_eq!(g.merged_adjacency()[0][&1], rational(2, 1));
    }
}
