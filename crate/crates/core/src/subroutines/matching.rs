use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, flower: &mut [bool]) {
        while self.base[v] != b {
            flower[self.base[v]] = true;
            flower[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS with blossom contraction from a free root; augments on success.
    fn find_path(&mut self, root: usize) -> bool {
        self.used = vec![false; self.g.n()];
        self.parent = vec![NONE; self.g.n()];
        for i in 0..self.g.n() {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let curbase = self.lca(v, to);
                    let mut flower = vec![false; self.g.n()];
                    self.mark_path(v, curbase, to, &mut flower);
                    self.mark_path(to, curbase, v, &mut flower);
                    for i in 0..self.g.n() {
                        if flower[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        // augmenting path found: flip along parents
                        let mut u = to;
                        while u != NONE {
                            let pv = self.parent[u];
                            let ppv = self.mate[pv];
                            self.mate[u] = pv;
                            self.mate[pv] = u;
                            u = ppv;
                        }
                        return true;
                    } else {
                        self.used[self.mate[to]] = true;
                        q.push_back(self.mate[to]);
                    }
                }
            }
        }
        false
    }
}

/// Maximum-cardinality matching by Edmonds' blossom contraction; exact.
/// Returns the mate of each vertex.
pub fn max_matching_mates(g: &Graph) -> Vec<Option<usize>> {
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut a: Vec<usize> = g.adj(v).iter().map(|&(w, _)| w).collect();
            a.sort_unstable();
            a
        })
        .collect();
    let mut state = Blossom {
        g,
        adj,
        mate: vec![NONE; g.n()],
        parent: vec![NONE; g.n()],
        base: (0..g.n()).collect(),
        used: vec![false; g.n()],
    };
    for v in 0..g.n() {
        if state.mate[v] == NONE {
            state.find_path(v);
        }
    }
    state
        .mate
        .iter()
        .map(|&m| (m != NONE).then_some(m))
        .collect()
}

/// Maximum matching as a sorted list of edge indices.
pub fn max_matching(g: &Graph) -> Vec<usize> {
    let mates = max_matching_mates(g);
    let mut edges = Vec::new();
    for (v, m) in mates.iter().enumerate() {
        if let Some(u) = m {
            if v < *u {
                edges.push(g.edge_between(v, *u).expect("mates are adjacent"));
            }
        }
    }
    edges.sort_unstable();
    edges
}
