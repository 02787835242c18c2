use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::order::{reorder, Order};
use crate::error::{Error, Result};
use crate::rng::StreamRng;
use crate::weight::{Rational, Weight};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Each pair `u < v` independently with probability `p`.
    Gnp {
        n: usize,
        #[serde(serialize_with = "ser_ratio")]
        p: Rational,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Two cliques of `block` vertices joined by the edge `(block-1, block)`.
    Barbell {
        block: usize,
    },
    /// Two blocks (`left` and `right` vertices, intra-block pairs present
    /// with probability `p_in`) joined by exactly `planted` distinct edges.
    PlantedCut {
        left: usize,
        right: usize,
        planted: usize,
        #[serde(serialize_with = "ser_ratio")]
        p_in: Rational,
    },
    /// Bipartite graph on `n/2 + n/2` vertices where left vertex `i` has
    /// degree `degrees[i]`, drawn from [`degree_ladder`] when not given.
    LowerboundBipartite {
        n: usize,
        #[serde(serialize_with = "ser_ratio")]
        epsilon: Rational,
        degrees: Option<Vec<usize>>,
    },
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::weight::ratio_string(r))
}

impl Family {
    pub fn vertex_count(&self) -> usize {
        match self {
            Family::Gnp { n, .. }
            | Family::Complete { n }
            | Family::Path { n }
            | Family::LowerboundBipartite { n, .. } => *n,
            Family::Barbell { block } => 2 * block,
            Family::PlantedCut { left, right, .. } => left + right,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Gnp { .. } => "gnp",
            Family::Complete { .. } => "complete",
            Family::Path { .. } => "path",
            Family::Barbell { .. } => "barbell",
            Family::PlantedCut { .. } => "planted_cut",
            Family::LowerboundBipartite { .. } => "lowerbound_bipartite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StreamSpec {
    pub family: Family,
    pub order: Order,
    pub seed: u64,
}

impl StreamSpec {
    pub fn new(family: Family, order: Order, seed: u64) -> Self {
        Self {
            family,
            order,
            seed,
        }
    }

    pub fn n(&self) -> usize {
        self.family.vertex_count()
    }
}

/// Builds the family's edges, then applies the arrival order.
///
/// Family randomness uses ChaCha stream 0 of `seed`, ordering uses stream 1.
pub fn generate(spec: &StreamSpec) -> Result<Vec<(usize, usize)>> {
    let mut rng = StreamRng::with_stream(spec.seed, 0);
    let edges = match &spec.family {
        Family::Gnp { n, p } => {
            if *p < Rational::from_u64(0) || *p > Rational::one() {
                return Err(Error::domain(format!("gnp probability {p} outside [0, 1]")));
            }
            let mut out = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.bernoulli(p) {
                        out.push((u, v));
                    }
                }
            }
            out
        }
        Family::Complete { n } => clique(0, *n),
        Family::Path { n } => (1..*n).map(|v| (v - 1, v)).collect(),
        Family::Barbell { block } => {
            if *block < 2 {
                return Err(Error::domain("barbell blocks need at least 2 vertices"));
            }
            let mut out = clique(0, *block);
            out.push((block - 1, *block));
            out.extend(clique(*block, *block));
            out
        }
        Family::PlantedCut {
            left,
            right,
            planted,
            p_in,
        } => planted_cut(&mut rng, *left, *right, *planted, p_in)?,
        Family::LowerboundBipartite { n, epsilon, degrees } => {
            lowerbound_bipartite(&mut rng, *n, epsilon, degrees.as_deref())?
        }
    };
    reorder(spec.n(), &edges, spec.order, spec.seed)
}

fn clique(base: usize, size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..size {
        for v in u + 1..size {
            out.push((base + u, base + v));
        }
    }
    out
}

fn planted_cut(
    rng: &mut StreamRng,
    left: usize,
    right: usize,
    planted: usize,
    p_in: &Rational,
) -> Result<Vec<(usize, usize)>> {
    if left == 0 || right == 0 {
        return Err(Error::domain("planted_cut needs two nonempty blocks"));
    }
    if planted > left * right {
        return Err(Error::domain(format!(
            "cannot plant {planted} distinct edges between blocks of {left} and {right}"
        )));
    }
    let mut out = Vec::new();
    for (base, size) in [(0, left), (left, right)] {
        for (u, v) in clique(base, size) {
            if rng.bernoulli(p_in) {
                out.push((u, v));
            }
        }
    }
    let mut cross: Vec<(usize, usize)> = (0..left)
        .flat_map(|u| (left..left + right).map(move |v| (u, v)))
        .collect();
    rng.shuffle(&mut cross);
    let mut chosen = cross[..planted].to_vec();
    chosen.sort_unstable();
    out.extend(chosen);
    Ok(out)
}

/// Distinct degrees `floor(r^i)` for `r = (1+ε)/(1-ε)`, capped at `n/2`,
/// ascending; the cap itself is always the last entry.
pub fn degree_ladder(n: usize, epsilon: &Rational) -> Result<Vec<usize>> {
    let one = Rational::one();
    if *epsilon <= Rational::from_u64(0) || *epsilon >= one {
        return Err(Error::domain(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    if n < 2 || n.is_odd() {
        return Err(Error::domain(format!(
            "lower-bound family needs an even vertex count, got {n}"
        )));
    }
    let cap = n / 2;
    let ratio = (one.clone() + epsilon.clone()) / (one - epsilon.clone());
    let mut ladder = Vec::new();
    let mut power = Rational::one();
    loop {
        let step = power.to_integer().to_usize().unwrap_or(usize::MAX).min(cap);
        if ladder.last() != Some(&step) {
            ladder.push(step);
        }
        if step >= cap {
            break;
        }
        power *= ratio.clone();
    }
    Ok(ladder)
}

fn lowerbound_bipartite(
    rng: &mut StreamRng,
    n: usize,
    epsilon: &Rational,
    degrees: Option<&[usize]>,
) -> Result<Vec<(usize, usize)>> {
    let ladder = degree_ladder(n, epsilon)?;
    let half = n / 2;
    let degrees: Vec<usize> = match degrees {
        Some(d) => {
            if d.len() != half {
                return Err(Error::domain(format!(
                    "degree assignment has {} entries, expected {half}",
                    d.len()
                )));
            }
            if let Some(bad) = d.iter().find(|&&x| x == 0 || x > half) {
                return Err(Error::domain(format!(
                    "degree {bad} is not realizable with {half} right vertices"
                )));
            }
            d.to_vec()
        }
        None => (0..half)
            .map(|_| ladder[rng.below(ladder.len() as u64) as usize])
            .collect(),
    };
    // greedy: each left vertex takes the currently least-used right vertices
    let mut right_degree = vec![0usize; half];
    let mut out = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        let mut order: Vec<usize> = (0..half).collect();
        order.sort_by_key(|&j| (right_degree[j], j));
        let mut picks: Vec<usize> = order[..d].to_vec();
        picks.sort_unstable();
        for j in picks {
            right_degree[j] += 1;
            out.push((i, half + j));
        }
    }
    Ok(out)
}
