use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An assignment of positive integer colors to the edges of a graph,
/// keyed by edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Self {
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn max_color(&self) -> Option<u32> {
        self.colors.iter().copied().max()
    }

    pub fn min_color(&self) -> Option<u32> {
        self.colors.iter().copied().min()
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        let mut v: Vec<u32> = self.colors.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    /// Checks that the coloring fits `g`: one positive color per edge.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringLength {
                got: self.colors.len(),
                expected: g.edge_count(),
            });
        }
        for (i, &c) in self.colors.iter().enumerate() {
            if c == 0 {
                return Err(Error::NonPositiveColor { edge: i, color: c });
            }
        }
        Ok(())
    }
}

impl From<Vec<u32>> for EdgeColoring {
    fn from(colors: Vec<u32>) -> Self {
        EdgeColoring::new(colors)
    }
}

/// The multiset of colors on the edges incident to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    vertex: usize,
    counts: BTreeMap<u32, usize>,
}

impl Spectrum {
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, color: u32) -> usize {
        self.counts.get(&color).copied().unwrap_or(0)
    }

    /// Smallest color at the vertex. Empty only for isolated vertices.
    pub fn min(&self) -> Option<u32> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    /// Total multiplicity; equals the degree of the vertex.
    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    /// True iff the distinct colors form a gap-free run `[min, max]`.
    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize == self.counts.len(),
            _ => true, // no incident edges
        }
    }
}

/// Exact multiset of colors incident to `v`, with min/max accessors.
pub fn spectrum(g: &Graph, c: &EdgeColoring, v: usize) -> Result<Spectrum> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v, g.n()));
    }
    c.validate(g)?;
    let mut counts = BTreeMap::new();
    for &(_, e) in g.adj(v) {
        *counts.entry(c.color(e)).or_insert(0usize) += 1;
    }
    Ok(Spectrum { vertex: v, counts })
}

/// Largest number of equally colored edges sharing an endpoint.
pub fn impropriety_of(g: &Graph, c: &EdgeColoring) -> Result<u32> {
    c.validate(g)?;
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let mut best = 0usize;
    for v in 0..g.n() {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &(_, e) in g.adj(v) {
            let k = counts.entry(c.color(e)).or_insert(0);
            *k += 1;
            best = best.max(*k);
        }
    }
    Ok(best as u32)
}

/// First vertex (lowest id) whose incident colors do not form an interval,
/// or `None` if every vertex sees an interval.
pub fn interval_violation(g: &Graph, c: &EdgeColoring) -> Result<Option<usize>> {
    c.validate(g)?;
    for v in 0..g.n() {
        let mut lo = u32::MAX;
        let mut hi = 0u32;
        let mut distinct = std::collections::HashSet::new();
        for &(_, e) in g.adj(v) {
            let col = c.color(e);
            lo = lo.min(col);
            hi = hi.max(col);
            distinct.insert(col);
        }
        if !distinct.is_empty() && (hi - lo + 1) as usize != distinct.len() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn is_interval(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Ok(interval_violation(g, c)?.is_none())
}

/// The universal acceptance oracle: `c` is a k-improper interval edge
/// coloring of `g`. A graph with no edges verifies trivially for any k.
pub fn verify(g: &Graph, c: &EdgeColoring, k: u32) -> Result<bool> {
    c.validate(g)?;
    if g.edge_count() == 0 {
        return Ok(true);
    }
    Ok(is_interval(g, c)? && impropriety_of(g, c)? <= k)
}

/// Shifts all colors so the least used color becomes 1. Identity on the
/// empty coloring. Verify-status and impropriety are unchanged.
pub fn normalize(c: &EdgeColoring) -> EdgeColoring {
    match c.min_color() {
        Some(lo) if lo != 1 => {
            EdgeColoring::new(c.colors().iter().map(|&x| x - lo + 1).collect())
        }
        _ => c.clone(),
    }
}
