use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// One closed trail covering every edge of a connected piece exactly once.
#[derive(Debug, Clone)]
pub struct Circuit {
    /// Edge indices in traversal order.
    pub edges: Vec<usize>,
    /// Visited vertices; `vertices.len() == edges.len() + 1` and the first
    /// equals the last.
    pub vertices: Vec<usize>,
}

/// Euler circuits of a multigraph, one per component that has edges.
#[derive(Debug, Clone)]
pub struct EulerCircuit {
    pub circuits: Vec<Circuit>,
}

/// Hierholzer's algorithm, deterministic: the walk always extends along the
/// lowest-index unused edge. Errors on the first odd-degree vertex.
pub fn euler_circuit(g: &MultiGraph) -> Result<EulerCircuit> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d % 2 != 0 {
            return Err(Error::OddDegree { vertex: v, degree: d });
        }
    }
    // Adjacency sorted by edge index so "lowest unused edge" is a cursor scan.
    let mut sorted_adj: Vec<Vec<(usize, usize)>> = (0..g.n())
        .map(|v| {
            let mut a = g.adj(v).to_vec();
            a.sort_by_key(|&(_, e)| e);
            a
        })
        .collect();
    let mut cursor = vec![0usize; g.n()];
    let mut used = vec![false; g.edge_count()];
    let mut circuits = Vec::new();

    for start in 0..g.n() {
        if g.adj(start).is_empty() || sorted_adj[start][..].iter().all(|&(_, e)| used[e]) {
            continue;
        }
        // Iterative Hierholzer from `start`.
        let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
        let mut edges_rev = Vec::new();
        let mut verts_rev = Vec::new();
        while let Some(&(v, via)) = stack.last() {
            let mut advanced = false;
            while cursor[v] < sorted_adj[v].len() {
                let (w, e) = sorted_adj[v][cursor[v]];
                if used[e] {
                    cursor[v] += 1;
                    continue;
                }
                used[e] = true;
                stack.push((w, Some(e)));
                advanced = true;
                break;
            }
            if !advanced {
                stack.pop();
                verts_rev.push(v);
                if let Some(e) = via {
                    edges_rev.push(e);
                }
            }
        }
        edges_rev.reverse();
        verts_rev.reverse();
        circuits.push(Circuit {
            edges: edges_rev,
            vertices: verts_rev,
        });
    }
    // verify each circuit is closed
    for c in &circuits {
        debug_assert_eq!(c.vertices.first(), c.vertices.last());
        debug_assert_eq!(c.vertices.len(), c.edges.len() + 1);
    }
    Ok(EulerCircuit { circuits })
}

impl Circuit {
    /// Rotates the closed circuit so it starts at the first occurrence of `v`.
    pub fn rotate_to(&self, v: usize) -> Option<Circuit> {
        let pos = self.vertices[..self.vertices.len() - 1]
            .iter()
            .position(|&x| x == v)?;
        let m = self.edges.len();
        let edges = (0..m).map(|i| self.edges[(pos + i) % m]).collect();
        let mut vertices: Vec<usize> = (0..m)
            .map(|i| self.vertices[(pos + i) % m])
            .collect();
        vertices.push(v);
        Some(Circuit { edges, vertices })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete, gen_cycle};

    fn check_circuit(g: &MultiGraph, c: &Circuit) {
        assert_eq!(c.vertices.len(), c.edges.len() + 1);
        assert_eq!(c.vertices.first(), c.vertices.last());
        for (i, &e) in c.edges.iter().enumerate() {
            let (u, v) = g.edge(e);
            let (a, b) = (c.vertices[i], c.vertices[i + 1]);
            assert!(
                (u, v) == (a, b) || (u, v) == (b, a),
                "edge {e} does not match step {i}"
            );
        }
        let mut seen = c.edges.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), c.edges.len(), "edge repeated");
    }

    #[test]
    fn cycle_is_its_own_circuit() {
        let g = MultiGraph::from(&gen_cycle(4).unwrap());
        let ec = euler_circuit(&g).unwrap();
        assert_eq!(ec.circuits.len(), 1);
        assert_eq!(ec.circuits[0].edges.len(), 4);
        check_circuit(&g, &ec.circuits[0]);
    }

    #[test]
    fn two_loops() {
        let g = MultiGraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let ec = euler_circuit(&g).unwrap();
        assert_eq!(ec.circuits.len(), 1);
        assert_eq!(ec.circuits[0].edges.len(), 2);
        check_circuit(&g, &ec.circuits[0]);
    }

    #[test]
    fn k5_covered() {
        let g = MultiGraph::from(&gen_complete(5).unwrap());
        let ec = euler_circuit(&g).unwrap();
        assert_eq!(ec.circuits.len(), 1);
        assert_eq!(ec.circuits[0].edges.len(), 10);
        check_circuit(&g, &ec.circuits[0]);
    }

    #[test]
    fn odd_degree_rejected() {
        let g = MultiGraph::from(&gen_complete(4).unwrap());
        assert!(matches!(
            euler_circuit(&g),
            Err(Error::OddDegree { vertex: 0, degree: 3 })
        ));
    }

    #[test]
    fn per_component_circuits() {
        let g = MultiGraph::new(8, vec![(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 4)]).unwrap();
        let ec = euler_circuit(&g).unwrap();
        assert_eq!(ec.circuits.len(), 2);
        for c in &ec.circuits {
            check_circuit(&g, c);
        }
    }

    #[test]
    fn rotation() {
        let g = MultiGraph::from(&gen_cycle(5).unwrap());
        let ec = euler_circuit(&g).unwrap();
        let r = ec.circuits[0].rotate_to(3).unwrap();
        assert_eq!(r.vertices[0], 3);
        check_circuit(&g, &r);
    }
}
