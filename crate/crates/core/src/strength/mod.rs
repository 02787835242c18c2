//! Edge strength (strong connectivity) and k-strong components.
//!
//! A graph is k-strong when every cut has value at least k. The strength of
//! an edge is the largest k for which some k-strong induced subgraph
//! contains it. Three routes compute it: [`strength_exact`] by recursive
//! min-cut partitioning, [`strength_certificate`] as a power-of-two
//! underestimate built on sparse certificates, and [`strength_brute`] straight
//! from the definition for tiny graphs.

mod brute;
mod certificate;
mod exact;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};
use crate::weight::Weight;

pub use brute::{k_strong_components_brute, strength_brute, BRUTE_LIMIT};
pub use certificate::{ni_certificate, strength_certificate};
pub(crate) use certificate::new_edge_strength_certificate;
pub use exact::{edge_strength, k_strong_components, strength_exact};
pub(crate) use exact::new_edge_strength;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum StrengthMode {
    #[default]
    Exact,
    Certificate,
}

impl std::fmt::Display for StrengthMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StrengthMode::Exact => "exact",
            StrengthMode::Certificate => "certificate",
        })
    }
}

pub fn strength<W: Weight>(g: &Graph<W>, mode: StrengthMode) -> StrengthMap<W> {
    match mode {
        StrengthMode::Exact => strength_exact(g),
        StrengthMode::Certificate => strength_certificate(g),
    }
}

/// One node of the min-cut partition tree.
#[derive(Clone, Debug, PartialEq)]
pub struct StrengthNode<W> {
    /// Sorted vertex set of the piece.
    pub vertices: Vec<usize>,
    /// Minimum cut of the induced piece; `None` for single vertices.
    pub split_value: Option<W>,
    /// Largest split value on the path from the root to this node. Every
    /// edge separated at this node has exactly this strength.
    pub guarantee: W,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub depth: usize,
}

/// Rooted partition tree; node 0 is the root and holds every vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Hierarchy<W> {
    pub nodes: Vec<StrengthNode<W>>,
}

impl<W: Weight> Hierarchy<W> {
    pub fn root(&self) -> &StrengthNode<W> {
        &self.nodes[0]
    }

    /// Blocks of the partition obtained by cutting the tree where the
    /// guarantee first reaches `k`; uncovered vertices become singletons.
    pub fn blocks_at(&self, k: &W) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let node = &self.nodes[i];
            let strong = node.split_value.is_some() && node.guarantee >= *k;
            if strong || node.children.is_empty() {
                out.push(node.vertices.clone());
            } else {
                stack.extend(node.children.iter().rev().copied());
            }
        }
        out.sort();
        out
    }
}

/// Strength per edge, in the edge order of the graph it was computed on.
#[derive(Clone, Debug, PartialEq)]
pub struct StrengthMap<W> {
    entries: Vec<(EdgeId, W)>,
    hierarchy: Option<Hierarchy<W>>,
}

impl<W: Weight> StrengthMap<W> {
    pub(crate) fn new(entries: Vec<(EdgeId, W)>, hierarchy: Option<Hierarchy<W>>) -> Self {
        Self { entries, hierarchy }
    }

    pub fn get(&self, id: EdgeId) -> Option<&W> {
        self.entries
            .binary_search_by_key(&id, |(e, _)| *e)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &W)> {
        self.entries.iter().map(|(id, w)| (*id, w))
    }

    pub fn values(&self) -> impl Iterator<Item = &W> {
        self.entries.iter().map(|(_, w)| w)
    }

    /// The partition tree, present for exact strengths only.
    pub fn hierarchy(&self) -> Option<&Hierarchy<W>> {
        self.hierarchy.as_ref()
    }

    /// `edge_id strength` lines.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (id, s) in &self.entries {
            let _ = writeln!(out, "{id} {s}");
        }
        out
    }
}
