use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where each split-graph vertex came from.
#[derive(Debug, Clone)]
pub struct VertexSplitMap {
    /// split vertex -> source vertex
    pub to_source: Vec<usize>,
    /// source vertex -> its split vertices, in incidence order
    pub pieces: Vec<Vec<usize>>,
}

/// Splits every vertex of degree > `target` into floor(d/target) vertices of
/// degree `target` plus, if d mod target != 0, one vertex of degree
/// d mod target. Incident edges are chunked in edge-index order, and edge
/// indices are preserved, so a coloring of the split graph is a coloring of
/// the source graph verbatim. Bipartiteness is preserved.
pub fn split_vertices(g: &Graph, target: usize) -> Result<(Graph, VertexSplitMap)> {
    if target == 0 {
        return Err(Error::Precondition("split target must be >= 1".into()));
    }
    let mut pieces: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut to_source = Vec::new();
    let mut next = 0usize;
    for v in 0..g.n() {
        let count = if g.degree(v) == 0 {
            1
        } else {
            g.degree(v).div_ceil(target)
        };
        for _ in 0..count.max(1) {
            pieces[v].push(next);
            to_source.push(v);
            next += 1;
        }
    }
    // endpoint slot of edge e at v = rank of e among v's incident edges
    let mut rank = vec![[usize::MAX; 2]; g.edge_count()];
    for v in 0..g.n() {
        let mut incident: Vec<usize> = g.adj(v).iter().map(|&(_, e)| e).collect();
        incident.sort_unstable();
        for (i, &e) in incident.iter().enumerate() {
            let slot = if g.edge(e).0 == v { 0 } else { 1 };
            rank[e][slot] = i;
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let pu = pieces[u][rank[e][0] / target];
        let pv = pieces[v][rank[e][1] / target];
        edges.push((pu, pv));
    }
    let split = Graph::new(next, edges)?;
    Ok((
        split,
        VertexSplitMap {
            to_source,
            pieces,
        },
    ))
}

impl VertexSplitMap {
    /// Number of pieces a source vertex was split into.
    pub fn piece_count(&self, source: usize) -> usize {
        self.pieces[source].len()
    }
}
