use crate::coloring::EdgeColoring;
use crate::error::Result;
use crate::graph::Graph;

/// Proper edge coloring with at most Delta + 1 colors by the fan-recoloring
/// (Misra-Gries) construction.
pub fn vizing_edge_color(g: &Graph) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    let palette = (delta + 1) as u32;
    let mut colors = vec![0u32; g.edge_count()]; // 0 = uncolored
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; palette as usize]; g.n()];

    let free_color = |at: &Vec<Vec<Option<usize>>>, v: usize| -> u32 {
        (1..=palette)
            .find(|&c| at[v][(c - 1) as usize].is_none())
            .expect("degree <= Delta leaves a free color among Delta+1")
    };
    let is_free =
        |at: &Vec<Vec<Option<usize>>>, v: usize, c: u32| at[v][(c - 1) as usize].is_none();

    for e0 in 0..g.edge_count() {
        let (u, v) = g.edge(e0);

        // Maximal fan of u starting at v: edge (u, fan[i+1]) is colored with
        // a color free at fan[i].
        let mut fan = vec![v];
        let mut in_fan = vec![false; g.n()];
        in_fan[v] = true;
        loop {
            let beta = free_color(&at, *fan.last().unwrap());
            match at[u][(beta - 1) as usize] {
                Some(fe) => {
                    let (x, y) = g.edge(fe);
                    let w = if x == u { y } else { x };
                    if in_fan[w] {
                        break;
                    }
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }

        let c = free_color(&at, u);
        let d = free_color(&at, *fan.last().unwrap());

        if c != d {
            // Invert the maximal c/d-alternating path from u (u misses c, so
            // it starts with a d-edge if any).
            let mut cur = u;
            let mut col = d;
            let mut path = Vec::new();
            while let Some(pe) = at[cur][(col - 1) as usize] {
                path.push(pe);
                let (x, y) = g.edge(pe);
                cur = if x == cur { y } else { x };
                col = c + d - col;
            }
            for &pe in &path {
                let old = colors[pe];
                let new = c + d - old;
                let (x, y) = g.edge(pe);
                at[x][(old - 1) as usize] = None;
                at[y][(old - 1) as usize] = None;
                at[x][(new - 1) as usize] = Some(pe);
                at[y][(new - 1) as usize] = Some(pe);
                colors[pe] = new;
            }
        }
        debug_assert!(is_free(&at, u, d));

        // Shortest fan prefix ending at a vertex where d is free and whose
        // fan property still holds after the inversion.
        let mut w = None;
        'prefix: for j in 0..fan.len() {
            if !is_free(&at, fan[j], d) {
                continue;
            }
            for i in 0..j {
                let fe = g.edge_between(u, fan[i + 1]).expect("fan edge");
                let ci = colors[fe];
                if ci == 0 || !is_free(&at, fan[i], ci) {
                    continue 'prefix;
                }
            }
            w = Some(j);
            break;
        }
        let j = w.expect("fan lemma guarantees a rotatable prefix");

        // Rotate the prefix: edge (u, fan[i]) takes the color of (u, fan[i+1]).
        for i in 0..j {
            let fe = g.edge_between(u, fan[i + 1]).expect("fan edge");
            let ci = colors[fe];
            let target = g.edge_between(u, fan[i]).expect("fan edge");
            let (x, y) = g.edge(fe);
            at[x][(ci - 1) as usize] = None;
            at[y][(ci - 1) as usize] = None;
            colors[fe] = 0;
            let (a, b) = g.edge(target);
            if colors[target] != 0 {
                at[a][(colors[target] - 1) as usize] = None;
                at[b][(colors[target] - 1) as usize] = None;
            }
            colors[target] = ci;
            at[a][(ci - 1) as usize] = Some(target);
            at[b][(ci - 1) as usize] = Some(target);
        }
        let last = g.edge_between(u, fan[j]).expect("fan edge");
        debug_assert_eq!(colors[last], 0);
        colors[last] = d;
        let (a, b) = g.edge(last);
        at[a][(d - 1) as usize] = Some(last);
        at[b][(d - 1) as usize] = Some(last);
    }

    Ok(EdgeColoring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::impropriety_of;
    use crate::families::{gen_complete, gen_cycle, gen_petersen};

    fn assert_proper_within(g: &Graph, c: &EdgeColoring) {
        assert_eq!(impropriety_of(g, c).unwrap(), 1);
        assert!(c.max_color().unwrap() as usize <= g.max_degree() + 1);
        assert!(c.min_color().unwrap() >= 1);
    }

    #[test]
    fn small_graphs() {
        for g in [
            gen_complete(4).unwrap(),
            gen_complete(5).unwrap(),
            gen_complete(6).unwrap(),
            gen_cycle(5).unwrap(),
            gen_cycle(6).unwrap(),
            gen_petersen(),
        ] {
            let c = vizing_edge_color(&g).unwrap();
            assert_proper_within(&g, &c);
        }
    }

    #[test]
    fn odd_cycle_needs_three() {
        let g = gen_cycle(5).unwrap();
        let c = vizing_edge_color(&g).unwrap();
        assert_proper_within(&g, &c);
        assert_eq!(c.distinct_colors(), 3);
    }

    #[test]
    fn deterministic_lattice_of_instances() {
        for n in 4..9usize {
            for seed in 0..5usize {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if (u * 31 + v * 17 + seed * 7 + u * v) % 3 == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                if g.edge_count() == 0 {
                    continue;
                }
                let c = vizing_edge_color(&g).unwrap();
                assert_proper_within(&g, &c);
            }
        }
    }
}
