use crate::coloring::{impropriety_of, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::vizing::vizing_edge_color;

/// Default edge limit for the exact chromatic-index search.
pub const DEFAULT_EDGE_LIMIT: usize = 64;

/// Outcome of the exact Delta-edge-coloring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class1Result {
    Colored(EdgeColoring),
    ClassTwo,
}

/// Backtracking search for a proper Delta-edge-coloring; the two outcomes
/// are mutually exclusive and exhaustive. Desk-scale only.
pub fn exact_class1_color(g: &Graph) -> Result<Class1Result> {
    exact_class1_color_with_limit(g, DEFAULT_EDGE_LIMIT)
}

pub fn exact_class1_color_with_limit(g: &Graph, limit: usize) -> Result<Class1Result> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::ResourceLimit(format!(
            "{m} edges exceed the exact-coloring limit {limit}"
        )));
    }
    if m == 0 {
        return Ok(Class1Result::Colored(EdgeColoring::new(vec![])));
    }
    let delta = g.max_degree();
    // A color class is a matching, so more than Delta * floor(n/2) edges rule
    // out Delta classes.
    if m > delta * (g.n() / 2) {
        return Ok(Class1Result::ClassTwo);
    }
    // The fan construction often lands on Delta colors; take the shortcut.
    let viz = vizing_edge_color(g)?;
    if viz.max_color().unwrap_or(0) as usize <= delta {
        debug_assert_eq!(impropriety_of(g, &viz)?, 1);
        return Ok(Class1Result::Colored(viz));
    }

    // Fail-first edge order: decreasing endpoint degree sum, then index.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });

    let mut used: Vec<u64> = vec![0; g.n()]; // bitmask of colors 1..=delta at v
    let mut assigned = vec![0u32; m];
    if search(g, &order, 0, delta as u32, 0, &mut used, &mut assigned) {
        let colors = EdgeColoring::new(assigned);
        debug_assert_eq!(impropriety_of(g, &colors)?, 1);
        Ok(Class1Result::Colored(colors))
    } else {
        Ok(Class1Result::ClassTwo)
    }
}

fn search(
    g: &Graph,
    order: &[usize],
    depth: usize,
    delta: u32,
    max_used: u32,
    used: &mut [u64],
    assigned: &mut [u32],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    let (u, v) = g.edge(e);
    // Color classes are interchangeable: never skip more than one new color.
    let cap = delta.min(max_used + 1);
    for c in 1..=cap {
        let bit = 1u64 << (c - 1);
        if used[u] & bit != 0 || used[v] & bit != 0 {
            continue;
        }
        used[u] |= bit;
        used[v] |= bit;
        assigned[e] = c;
        if search(g, order, depth + 1, delta, max_used.max(c), used, assigned) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
        assigned[e] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::impropriety_of;
    use crate::families::{gen_complete, gen_cycle, gen_petersen};

    #[test]
    fn even_cycle_two_colors() {
        match exact_class1_color(&gen_cycle(6).unwrap()).unwrap() {
            Class1Result::Colored(c) => assert_eq!(c.max_color(), Some(2)),
            Class1Result::ClassTwo => panic!("C_6 is Class 1"),
        }
    }

    #[test]
    fn odd_cycle_class_two() {
        assert_eq!(
            exact_class1_color(&gen_cycle(5).unwrap()).unwrap(),
            Class1Result::ClassTwo
        );
    }

    #[test]
    fn k4_three_colors() {
        match exact_class1_color(&gen_complete(4).unwrap()).unwrap() {
            Class1Result::Colored(c) => {
                assert_eq!(c.max_color(), Some(3));
                assert_eq!(impropriety_of(&gen_complete(4).unwrap(), &c).unwrap(), 1);
            }
            Class1Result::ClassTwo => panic!("K_4 is Class 1"),
        }
    }

    #[test]
    fn petersen_class_two() {
        assert_eq!(
            exact_class1_color(&gen_petersen()).unwrap(),
            Class1Result::ClassTwo
        );
    }

    #[test]
    fn fournier_condition_graphs_never_class_two() {
        // no two max-degree vertices adjacent => Class 1
        for n in 5..9usize {
            for seed in 0..8usize {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if (u * 13 + v * 29 + seed * 11) % 4 == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                if g.edge_count() == 0 {
                    continue;
                }
                let delta = g.max_degree();
                let fournier = g.edges().iter().all(|&(u, v)| {
                    !(g.degree(u) == delta && g.degree(v) == delta)
                });
                if !fournier {
                    continue;
                }
                match exact_class1_color(&g).unwrap() {
                    Class1Result::Colored(c) => {
                        assert!(c.max_color().unwrap() as usize <= delta);
                        assert_eq!(impropriety_of(&g, &c).unwrap(), 1);
                    }
                    Class1Result::ClassTwo => {
                        panic!("graph meeting the no-adjacent-max-degree condition must be Class 1")
                    }
                }
            }
        }
    }

    #[test]
    fn limit_enforced() {
        let g = gen_complete(7).unwrap();
        assert!(matches!(
            exact_class1_color_with_limit(&g, 10),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn counting_shortcut_catches_overfull() {
        // K_9: 36 edges > 8 * 4
        let g = gen_complete(9).unwrap();
        assert_eq!(
            exact_class1_color(&g).unwrap(),
            Class1Result::ClassTwo
        );
    }
}
