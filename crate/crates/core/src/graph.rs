use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// The edge sequence order is stable: the position of an edge in `edges` is
/// its identity, and colorings are keyed by that index. Vertices may carry
/// text labels (family generators use them to mirror the usual notation,
/// e.g. `u0`, `b_3`, `c_2^(5)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<usize, String>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index)
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    /// Endpoints of each edge are stored with the smaller id first.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            norm.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in norm.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        Ok(Graph {
            n,
            edges: norm,
            labels: BTreeMap::new(),
            adj,
        })
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        for (&v, _) in &labels {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        debug_assert!(v < self.n);
        self.labels.insert(v, label.into());
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    /// Finds a vertex by its label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// Neighbors of `v` as `(neighbor, edge index)` pairs, in edge-insertion order.
    pub fn adj(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Returns the common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edge index between `u` and `v`, if the edge exists.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, i)| i)
    }

    /// Two-colors the graph; on failure returns an odd cycle as witness.
    pub fn bipartition(&self) -> std::result::Result<Vec<u8>, Error> {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(Error::NotBipartite(odd_cycle(&parent, u, w)));
                    }
                }
            }
        }
        Ok(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut verts = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        verts.push(w);
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn has_triangle(&self) -> bool {
        for &(u, v) in &self.edges {
            for &(w, _) in &self.adj[u] {
                if w != v && self.edge_between(v, w).is_some() {
                    return true;
                }
            }
        }
        false
    }

    /// Drops the edges whose indices are in `drop`; vertices are kept.
    /// Returns the new graph and the map new edge index -> old edge index.
    pub fn without_edges(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let dropset: std::collections::HashSet<usize> = drop.iter().copied().collect();
        let mut kept = Vec::new();
        let mut map = Vec::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if !dropset.contains(&i) {
                kept.push(e);
                map.push(i);
            }
        }
        let mut g = Graph::new(self.n, kept).expect("subgraph of a valid graph");
        g.labels = self.labels.clone();
        (g, map)
    }

    /// Subgraph induced on `verts`. Returns the graph, the map new vertex -> old
    /// vertex, and the map new edge index -> old edge index.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            old_to_new[v] = i;
        }
        let mut edges = Vec::new();
        let mut emap = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX {
                edges.push((old_to_new[u], old_to_new[v]));
                emap.push(i);
            }
        }
        let g = Graph::new(verts.len(), edges).expect("induced subgraph of a valid graph");
        (g, verts.to_vec(), emap)
    }
}

fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    // Walk both BFS ancestries up to their meeting point.
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let mut iu = pu.len();
    let mut iw = pw.len();
    while iu > 0 && iw > 0 && pu[iu - 1] == pw[iw - 1] {
        iu -= 1;
        iw -= 1;
    }
    // common ancestor is at pu[iu] == pw[iw]
    let mut cycle: Vec<usize> = pu[..=iu.min(pu.len() - 1)].to_vec();
    let mut back: Vec<usize> = pw[..iw.min(pw.len())].to_vec();
    back.reverse();
    cycle.extend(back);
    cycle
}

/// An undirected multigraph: loops and parallel edges allowed. A loop at `v`
/// contributes 2 to the degree of `v`. Used by the factorization machinery,
/// never serialized.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // loop stored once at its vertex
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            if u != v {
                adj[v].push((u, i));
            }
        }
        Ok(MultiGraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.edges[i].0 == self.edges[i].1
    }

    /// Adjacency as `(other endpoint, edge index)`; a loop appears once.
    pub fn adj(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v]
            .iter()
            .map(|&(w, _)| if w == v { 2 } else { 1 })
            .sum()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut verts = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        verts.push(w);
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        MultiGraph::new(g.n(), g.edges().to_vec()).expect("simple graph is a valid multigraph")
    }
}
