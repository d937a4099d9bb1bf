use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Proper Delta-edge-coloring of a bipartite graph by alternating-path
/// recoloring. Errors with an odd-cycle witness on non-bipartite input.
pub fn konig_edge_color(g: &Graph) -> Result<EdgeColoring> {
    if let Err(e) = g.bipartition() {
        return Err(e);
    }
    let delta = g.max_degree();
    let mut colors = vec![0u32; g.edge_count()];
    // at[v][c-1] = Some(edge) currently colored c at v
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; g.n()];

    let free = |at: &Vec<Vec<Option<usize>>>, v: usize| -> u32 {
        (1..=delta as u32)
            .find(|&c| at[v][(c - 1) as usize].is_none())
            .expect("a vertex of degree < Delta always misses a color")
    };

    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let a = free(&at, u);
        let b = free(&at, v);
        let c = if at[v][(a - 1) as usize].is_none() {
            a
        } else if at[u][(b - 1) as usize].is_none() {
            b
        } else {
            // Flip the maximal a/b-alternating path starting at u (which
            // misses a). By bipartiteness it cannot reach v.
            let mut cur = u;
            let mut col = b;
            let mut path = Vec::new();
            while let Some(pe) = at[cur][(col - 1) as usize] {
                path.push(pe);
                let (x, y) = g.edge(pe);
                cur = if x == cur { y } else { x };
                col = a + b - col;
            }
            for &pe in &path {
                let old = colors[pe];
                let new = a + b - old;
                let (x, y) = g.edge(pe);
                at[x][(old - 1) as usize] = None;
                at[y][(old - 1) as usize] = None;
                at[x][(new - 1) as usize] = Some(pe);
                at[y][(new - 1) as usize] = Some(pe);
                colors[pe] = new;
            }
            debug_assert!(at[u][(b - 1) as usize].is_none());
            debug_assert!(at[v][(b - 1) as usize].is_none());
            b
        };
        colors[e] = c;
        at[u][(c - 1) as usize] = Some(e);
        at[v][(c - 1) as usize] = Some(e);
    }
    Ok(EdgeColoring::new(colors))
}
