use crate::error::{Error, Result};
use crate::graph::MultiGraph;

use super::euler::euler_circuit;

/// Splits a 2r-regular multigraph (loops allowed, counting 2) into r
/// edge-disjoint spanning 2-regular sub-multigraphs.
///
/// Orient each Euler circuit, build the r-regular bipartite out/in incidence
/// multigraph, and peel r perfect matchings by augmenting paths; every
/// matching picks one out-edge and one in-edge per vertex, i.e. a 2-factor.
/// Matchings are peeled lowest-vertex-first so the output is reproducible.
pub fn two_factorize(g: &MultiGraph, r: usize) -> Result<Vec<Vec<usize>>> {
    if r == 0 {
        return Err(Error::Precondition("two_factorize needs r >= 1".into()));
    }
    for v in 0..g.n() {
        let d = g.degree(v);
        if d != 2 * r {
            return Err(Error::NotRegular {
                vertex: v,
                degree: d,
                expected: 2 * r,
            });
        }
    }
    // Orientation along the Euler circuits: edge e goes tail[e] -> head[e].
    let ec = euler_circuit(g)?;
    let mut head = vec![usize::MAX; g.edge_count()];
    let mut tail = vec![usize::MAX; g.edge_count()];
    for c in &ec.circuits {
        for (i, &e) in c.edges.iter().enumerate() {
            tail[e] = c.vertices[i];
            head[e] = c.vertices[i + 1];
        }
    }
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for e in 0..g.edge_count() {
        out_edges[tail[e]].push(e);
    }
    for l in out_edges.iter_mut() {
        l.sort_unstable();
    }

    let mut remaining = vec![true; g.edge_count()];
    let mut factors = Vec::with_capacity(r);
    for _ in 0..r {
        let m = perfect_matching(g.n(), &out_edges, &tail, &head, &remaining)?;
        for &e in &m {
            remaining[e] = false;
        }
        factors.push(m);
    }
    debug_assert!(remaining.iter().all(|&x| !x));
    Ok(factors)
}

struct Kuhn<'a> {
    out_edges: &'a [Vec<usize>],
    tail: &'a [usize],
    head: &'a [usize],
    remaining: &'a [bool],
    match_into: Vec<Option<usize>>, // right side: edge matched into v
    match_out: Vec<Option<usize>>,  // left side: edge matched out of u
}

impl Kuhn<'_> {
    fn augment(&mut self, u: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.out_edges[u].len() {
            let e = self.out_edges[u][i];
            if !self.remaining[e] {
                continue;
            }
            let v = self.head[e];
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match self.match_into[v] {
                None => true,
                Some(me) => {
                    let prev = self.tail[me];
                    self.augment(prev, visited)
                }
            };
            if free {
                self.match_into[v] = Some(e);
                self.match_out[u] = Some(e);
                return true;
            }
        }
        false
    }
}

/// Kuhn's augmenting-path perfect matching on the remaining oriented edges.
fn perfect_matching(
    n: usize,
    out_edges: &[Vec<usize>],
    tail: &[usize],
    head: &[usize],
    remaining: &[bool],
) -> Result<Vec<usize>> {
    let mut k = Kuhn {
        out_edges,
        tail,
        head,
        remaining,
        match_into: vec![None; n],
        match_out: vec![None; n],
    };
    for u in 0..n {
        if out_edges[u].is_empty() || k.match_out[u].is_some() {
            continue;
        }
        let mut visited = vec![false; n];
        if !k.augment(u, &mut visited) {
            return Err(Error::Contradiction(
                "regular bipartite incidence graph has no perfect matching".into(),
            ));
        }
    }
    let mut m: Vec<usize> = k.match_out.iter().filter_map(|&e| e).collect();
    m.sort_unstable();
    Ok(m)
}
