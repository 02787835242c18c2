//! The plain-text edge-list format used for graphs, streams and sparsifiers.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2 1/2
//! 2 3 0.25
//! ```
//!
//! The header gives the vertex count. Each edge line is `u v [w]` with the
//! weight defaulting to 1; weights are decimals or `p/q` fractions. `#`
//! starts a comment and blank lines are ignored. Edge order is arrival order
//! when the file is read as a stream. Self-loops are skipped and counted.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct ParsedGraph<W> {
    pub graph: Graph<W>,
    pub self_loops: usize,
}

pub fn parse_edge_list<W: Weight>(text: &str) -> Result<ParsedGraph<W>> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<W: Weight, R: BufRead>(reader: R) -> Result<ParsedGraph<W>> {
    let mut graph: Option<Graph<W>> = None;
    let mut self_loops = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse_err = |msg: String| Error::Parse { line: line_no, msg };

        let Some(g) = graph.as_mut() else {
            if fields.len() != 2 || fields[0] != "n" {
                return Err(parse_err(format!("expected header \"n <count>\", got {content:?}")));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(format!("bad vertex count {:?}", fields[1])))?;
            graph = Some(Graph::new(n));
            continue;
        };

        if fields.len() < 2 || fields.len() > 3 {
            return Err(parse_err(format!("expected \"u v [w]\", got {content:?}")));
        }
        let u: usize = fields[0]
            .parse()
            .map_err(|_| parse_err(format!("bad vertex {:?}", fields[0])))?;
        let v: usize = fields[1]
            .parse()
            .map_err(|_| parse_err(format!("bad vertex {:?}", fields[1])))?;
        let w = match fields.get(2) {
            Some(s) => W::parse_weight(s).map_err(parse_err)?,
            None => W::one(),
        };
        if u == v {
            self_loops += 1;
            log::warn!("line {line_no}: skipping self-loop on vertex {u}");
            continue;
        }
        g.add_edge(u, v, w).map_err(|e| parse_err(e.to_string()))?;
    }
    let graph = graph.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing header \"n <count>\"".into(),
    })?;
    Ok(ParsedGraph { graph, self_loops })
}

/// Renders `g` with one `u v w` line per edge in id order.
pub fn format_edge_list<W: Weight>(g: &Graph<W>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

pub fn write_edge_list<W: Weight, Wr: Write>(g: &Graph<W>, mut out: Wr) -> Result<()> {
    out.write_all(format_edge_list(g).as_bytes())?;
    Ok(())
}

/// Renders an arrival sequence of unit edges.
pub fn format_stream(n: usize, stream: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {n}");
    for (u, v) in stream {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a stream file: every edge must have unit weight.
pub fn read_stream<R: BufRead>(reader: R) -> Result<(usize, Vec<(usize, usize)>, usize)> {
    let parsed = read_edge_list::<crate::weight::Rational, R>(reader)?;
    let mut pairs = Vec::with_capacity(parsed.graph.m());
    for e in parsed.graph.edges() {
        if !e.w.is_one() {
            return Err(Error::NonUnitWeight {
                edge: e.id.0,
                weight: e.w.to_string(),
            });
        }
        pairs.push((e.u, e.v));
    }
    Ok((parsed.graph.n(), pairs, parsed.self_loops))
}
