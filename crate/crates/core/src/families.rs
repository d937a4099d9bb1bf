//! Generators for the graph families under study. Every generator emits a
//! [`Graph`] whose vertex labels mirror the usual notation, so certificates
//! stay human-checkable.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The double-rosette graph S_{a,b,c}: a 6-cycle u1 v1 u2 v2 u3 v3 plus a hub
/// u0, with a/b/c parallel 2-paths from u0 to u1/u2/u3 through x/y/z vertices.
pub fn gen_s(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Precondition("S_{a,b,c} needs a,b,c >= 1".into()));
    }
    let n = 7 + a + b + c;
    let (u0, u1, u2, u3, v1, v2, v3) = (0, 1, 2, 3, 4, 5, 6);
    let x = |i: usize| 6 + i; // i in 1..=a
    let y = |j: usize| 6 + a + j;
    let z = |k: usize| 6 + a + b + k;
    let mut edges = vec![
        (u1, v1),
        (v1, u2),
        (u2, v2),
        (v2, u3),
        (u3, v3),
        (v3, u1),
    ];
    for i in 1..=a {
        edges.push((u0, x(i)));
        edges.push((u1, x(i)));
    }
    for j in 1..=b {
        edges.push((u0, y(j)));
        edges.push((u2, y(j)));
    }
    for k in 1..=c {
        edges.push((u0, z(k)));
        edges.push((u3, z(k)));
    }
    let mut labels = BTreeMap::new();
    for (v, name) in [
        (u0, "u0"),
        (u1, "u1"),
        (u2, "u2"),
        (u3, "u3"),
        (v1, "v1"),
        (v2, "v2"),
        (v3, "v3"),
    ] {
        labels.insert(v, name.to_string());
    }
    for i in 1..=a {
        labels.insert(x(i), format!("x{i}"));
    }
    for j in 1..=b {
        labels.insert(y(j), format!("y{j}"));
    }
    for k in 1..=c {
        labels.insert(z(k), format!("z{k}"));
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// The triple-rosette graph M_{a,b,c}: hub u0 plus u1,u2,u3; each x vertex is
/// adjacent to u0,u1,u2, each y to u0,u2,u3, each z to u0,u3,u1.
pub fn gen_m(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Precondition("M_{a,b,c} needs a,b,c >= 1".into()));
    }
    let n = 4 + a + b + c;
    let (u0, u1, u2, u3) = (0, 1, 2, 3);
    let x = |i: usize| 3 + i;
    let y = |j: usize| 3 + a + j;
    let z = |k: usize| 3 + a + b + k;
    let mut edges = Vec::new();
    for i in 1..=a {
        edges.push((u0, x(i)));
        edges.push((u1, x(i)));
        edges.push((u2, x(i)));
    }
    for j in 1..=b {
        edges.push((u0, y(j)));
        edges.push((u2, y(j)));
        edges.push((u3, y(j)));
    }
    for k in 1..=c {
        edges.push((u0, z(k)));
        edges.push((u3, z(k)));
        edges.push((u1, z(k)));
    }
    let mut labels = BTreeMap::new();
    for (v, name) in [(u0, "u0"), (u1, "u1"), (u2, "u2"), (u3, "u3")] {
        labels.insert(v, name.to_string());
    }
    for i in 1..=a {
        labels.insert(x(i), format!("x{i}"));
    }
    for j in 1..=b {
        labels.insert(y(j), format!("y{j}"));
    }
    for k in 1..=c {
        labels.insert(z(k), format!("z{k}"));
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// Hertz graph H_{p,q}: a - b_i - c_j^(i) - d with edges ab_i, b_ic_j^(i),
/// c_j^(i)d. Bipartite with maximum degree pq at d (for q >= 2).
///
/// q = 1 is allowed here (H_{p,1} is a cycle-like chain used for the k = 1
/// witness), although the family is usually stated for q >= 2.
pub fn gen_hertz(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 1 {
        return Err(Error::Precondition("H_{p,q} needs p >= 2, q >= 1".into()));
    }
    let a = 0usize;
    let b = |i: usize| i; // 1..=p
    let d = p + 1;
    let c = |i: usize, j: usize| p + 1 + (i - 1) * q + j; // i in 1..=p, j in 1..=q
    let n = p * q + p + 2;
    let mut edges = Vec::new();
    for i in 1..=p {
        edges.push((a, b(i)));
    }
    for i in 1..=p {
        for j in 1..=q {
            edges.push((b(i), c(i, j)));
        }
    }
    for i in 1..=p {
        for j in 1..=q {
            edges.push((c(i, j), d));
        }
    }
    let mut labels = BTreeMap::new();
    labels.insert(a, "a".to_string());
    labels.insert(d, "d".to_string());
    for i in 1..=p {
        labels.insert(b(i), format!("b_{i}"));
        for j in 1..=q {
            labels.insert(c(i, j), format!("c_{j}^({i})"));
        }
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// Wheel W_n on n vertices: the join of C_{n-1} and a hub.
pub fn gen_wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Precondition("wheel needs n >= 4".into()));
    }
    let hub = n - 1;
    let mut edges = Vec::new();
    for i in 0..n - 1 {
        edges.push((i, (i + 1) % (n - 1)));
    }
    for i in 0..n - 1 {
        edges.push((hub, i));
    }
    let mut labels = BTreeMap::new();
    labels.insert(hub, "c".to_string());
    for i in 0..n - 1 {
        labels.insert(i, format!("v{}", i + 1));
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// A generalized theta graph plus the path membership of each edge.
#[derive(Debug, Clone)]
pub struct ThetaGraph {
    pub graph: Graph,
    /// Edge indices of the i-th internally disjoint (u,v)-path.
    pub paths: Vec<Vec<usize>>,
}

/// Theta graph: two poles u, v joined by `lengths.len()` internally disjoint
/// paths of the given edge lengths. At most one path may have length 1.
pub fn gen_theta(lengths: &[usize]) -> Result<ThetaGraph> {
    if lengths.len() < 2 {
        return Err(Error::Precondition("theta graph needs m >= 2 paths".into()));
    }
    if lengths.iter().any(|&l| l == 0) {
        return Err(Error::Precondition("path lengths must be >= 1".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::Precondition(
            "at most one path of length 1 (parallel edges are not allowed)".into(),
        ));
    }
    let (u, v) = (0usize, 1usize);
    let n = 2 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut next = 2usize;
    let mut labels = BTreeMap::new();
    labels.insert(u, "u".to_string());
    labels.insert(v, "v".to_string());
    for (pi, &len) in lengths.iter().enumerate() {
        let mut path = Vec::new();
        let mut prev = u;
        for step in 1..len {
            labels.insert(next, format!("w{}_{}", pi + 1, step));
            path.push(edges.len());
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        path.push(edges.len());
        edges.push((prev, v));
        paths.push(path);
    }
    let graph = Graph::new(n, edges)?.with_labels(labels)?;
    Ok(ThetaGraph { graph, paths })
}

/// S(G): every edge of `g` subdivided once. The inserted vertex for edge
/// index e gets id `g.n() + e`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n() + g.edge_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut labels = g.labels().clone();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let w = g.n() + e;
        labels.insert(w, format!("w_{{{u},{v}}}"));
        edges.push((u, w));
        edges.push((w, v));
    }
    Graph::new(n, edges)
        .and_then(|gr| gr.with_labels(labels))
        .expect("subdivision of a valid graph")
}

/// The hat graph: S(G) plus an apex adjacent to every inserted vertex.
pub fn hat(g: &Graph) -> Graph {
    let s = subdivide(g);
    let apex = s.n();
    let mut edges = s.edges().to_vec();
    for e in 0..g.edge_count() {
        edges.push((apex, g.n() + e));
    }
    let mut labels = s.labels().clone();
    labels.insert(apex, "u".to_string());
    Graph::new(s.n() + 1, edges)
        .and_then(|gr| gr.with_labels(labels))
        .expect("hat of a valid graph")
}

/// Pendant (degree-1) vertices of a graph.
pub fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// The tilde graph of a tree: a new apex adjacent to every leaf.
///
/// The maximum degree of the result equals the leaf count whenever the leaf
/// count is at least Delta(T) + 1, but an internal tree vertex can beat the
/// apex; callers should read the actual degrees off the returned graph
/// instead of assuming the equality.
pub fn tilde(t: &Graph) -> Result<Graph> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let f = leaves(t);
    if f.len() < 2 {
        return Err(Error::Precondition("tilde needs a tree with >= 2 leaves".into()));
    }
    let apex = t.n();
    let mut edges = t.edges().to_vec();
    for &v in &f {
        edges.push((apex, v));
    }
    let mut labels = t.labels().clone();
    labels.insert(apex, "u".to_string());
    Graph::new(t.n() + 1, edges).and_then(|gr| gr.with_labels(labels))
}

/// A finite projective plane of prime order: points are ids `0..n^2+n+1`,
/// lines are (n+1)-element point sets.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    order: usize,
    lines: Vec<Vec<usize>>,
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn point_count(&self) -> usize {
        self.order * self.order + self.order + 1
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Homogeneous-coordinate construction of the plane of prime order n:
/// points and lines are the projective triples over Z_n, a point lies on a
/// line iff their dot product vanishes mod n.
pub fn gen_projective_plane(n: usize) -> Result<ProjectivePlane> {
    if !is_prime(n) {
        return Err(Error::InvalidInput(format!(
            "projective plane order {n} is not prime (prime powers are unsupported)"
        )));
    }
    // Normalized representatives: (x, y, 1), (x, 1, 0), (1, 0, 0).
    let mut triples = Vec::new();
    for x in 0..n {
        for y in 0..n {
            triples.push((x, y, 1));
        }
    }
    for x in 0..n {
        triples.push((x, 1, 0));
    }
    triples.push((1, 0, 0));
    debug_assert_eq!(triples.len(), n * n + n + 1);
    let mut lines = Vec::new();
    for &(a, b, c) in &triples {
        let mut line = Vec::new();
        for (p, &(x, y, z)) in triples.iter().enumerate() {
            if (a * x + b * y + c * z) % n == 0 {
                line.push(p);
            }
        }
        line.sort_unstable();
        lines.push(line);
    }
    Ok(ProjectivePlane { order: n, lines })
}

/// The Erd graph over a projective plane: an apex u adjacent to r_i copies
/// v_1^(l_i)..v_{r_i}^(l_i) per line, each copy adjacent to the points of
/// its line. `r` must be sorted non-increasing with all entries >= 1.
pub fn gen_erd(plane: &ProjectivePlane, r: &[usize]) -> Result<Graph> {
    let nn = plane.point_count();
    if r.len() != nn {
        return Err(Error::InvalidInput(format!(
            "r must have {} entries, got {}",
            nn,
            r.len()
        )));
    }
    if r.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput("r must be sorted non-increasing".into()));
    }
    if r.iter().any(|&x| x == 0) {
        return Err(Error::InvalidInput("all r_i must be >= 1".into()));
    }
    let total_r: usize = r.iter().sum();
    let n = 1 + nn + total_r;
    let u = 0usize;
    let point = |p: usize| 1 + p; // p is 0-based
    let mut labels = BTreeMap::new();
    labels.insert(u, "u".to_string());
    for p in 0..nn {
        labels.insert(point(p), format!("{}", p + 1));
    }
    let mut edges = Vec::new();
    let mut next = 1 + nn;
    for (i, line) in plane.lines().iter().enumerate() {
        let first_copy = next;
        for j in 0..r[i] {
            labels.insert(next, format!("v_{}^(l_{})", j + 1, i + 1));
            edges.push((u, next));
            next += 1;
        }
        for j in 0..r[i] {
            for &p in line {
                edges.push((first_copy + j, point(p)));
            }
        }
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// Complete multipartite graph with the given part sizes (labels record the
/// part membership). Parts are used in the order given.
pub fn gen_complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.len() < 2 {
        return Err(Error::Precondition("need r >= 2 parts".into()));
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::Precondition("part sizes must be >= 1".into()));
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    let mut labels = BTreeMap::new();
    let mut v = 0;
    for (i, &s) in sizes.iter().enumerate() {
        for j in 0..s {
            labels.insert(v, format!("p{}_{}", i + 1, j + 1));
            part.push(i);
            v += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if part[u] != part[w] {
                edges.push((u, w));
            }
        }
    }
    Graph::new(n, edges)?.with_labels(labels)
}

/// Cartesian product: vertex (u, v) has id `u * h.n() + v`; edges copy G in
/// one coordinate and H in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let id = |u: usize, v: usize| u * h.n() + v;
    let mut edges = Vec::new();
    for &(u1, u2) in g.edges() {
        for v in 0..h.n() {
            edges.push((id(u1, v), id(u2, v)));
        }
    }
    for &(v1, v2) in h.edges() {
        for u in 0..g.n() {
            edges.push((id(u, v1), id(u, v2)));
        }
    }
    let mut labels = BTreeMap::new();
    for u in 0..g.n() {
        for v in 0..h.n() {
            let lu = g.label(u).map(str::to_string).unwrap_or_else(|| u.to_string());
            let lv = h.label(v).map(str::to_string).unwrap_or_else(|| v.to_string());
            labels.insert(id(u, v), format!("({lu},{lv})"));
        }
    }
    Graph::new(g.n() * h.n(), edges)
        .and_then(|gr| gr.with_labels(labels))
        .expect("product of valid graphs")
}

/// Cycle C_n. Convenience used throughout the tests and the solver grids.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Complete graph K_n.
pub fn gen_complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Complete bipartite graph K_{m,n}.
pub fn gen_complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..n {
            edges.push((u, m + v));
        }
    }
    Graph::new(m + n, edges)
}

/// Circulant graph C_n(S): vertex i adjacent to i +- s for each s in S.
pub fn gen_circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition("circulant needs n >= 3".into()));
    }
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(Error::Precondition(format!(
                "circulant step {s} out of range 1..={}",
                n / 2
            )));
        }
        for i in 0..n {
            let j = (i + s) % n;
            let e = (i.min(j), i.max(j));
            if seen.insert(e) {
                edges.push(e);
            }
        }
    }
    Graph::new(n, edges)
}

/// The Petersen graph.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer C_5
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    for i in 0..5 {
        edges.push((i, 5 + i)); // spokes
    }
    Graph::new(10, edges).expect("Petersen graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_counts() {
        let g = gen_s(7, 7, 7).unwrap();
        assert_eq!(g.n(), 28);
        assert_eq!(g.edge_count(), 48);
        assert!(g.is_bipartite());
        assert!(g.is_connected());
        let g = gen_s(1, 1, 1).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 12);
        for (a, b, c) in [(1, 2, 3), (4, 4, 1), (2, 5, 7)] {
            let g = gen_s(a, b, c).unwrap();
            let u0 = g.vertex_by_label("u0").unwrap();
            assert_eq!(g.degree(u0), a + b + c);
            assert_eq!(g.n(), 7 + a + b + c);
            assert_eq!(g.edge_count(), 6 + 2 * (a + b + c));
        }
    }

    #[test]
    fn m_counts() {
        let g = gen_m(5, 5, 5).unwrap();
        assert_eq!(g.n(), 19);
        assert_eq!(g.edge_count(), 45);
        assert!(g.is_bipartite());
        assert!(g.is_connected());
        let g = gen_m(1, 1, 1).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 9);
        let g = gen_m(2, 3, 4).unwrap();
        let u0 = g.vertex_by_label("u0").unwrap();
        assert_eq!(g.degree(u0), 9);
    }

    #[test]
    fn hertz_counts() {
        let g = gen_hertz(2, 2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_bipartite());
        let g = gen_hertz(7, 2).unwrap();
        assert_eq!(g.n(), 23);
        assert_eq!(g.max_degree(), 14);
        let d = g.vertex_by_label("d").unwrap();
        assert_eq!(g.degree(d), 14);
        // q = 1 gives a cycle
        let g = gen_hertz(2, 1).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_connected());
    }

    #[test]
    fn wheel_and_theta() {
        let w4 = gen_wheel(4).unwrap();
        assert_eq!((w4.n(), w4.edge_count()), (4, 6)); // K_4
        assert_eq!(w4.regular_degree(), Some(3));

        let t = gen_theta(&[2, 2]).unwrap();
        assert_eq!((t.graph.n(), t.graph.edge_count()), (4, 4)); // C_4
        assert_eq!(t.graph.regular_degree(), Some(2));

        let t = gen_theta(&[2, 2, 2]).unwrap();
        assert_eq!((t.graph.n(), t.graph.edge_count()), (5, 6)); // K_{2,3}
        assert!(t.graph.is_bipartite());
        let mut degs = t.graph.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 3, 3]);

        assert!(gen_theta(&[1, 1]).is_err());
        assert!(gen_theta(&[1, 2]).is_ok());
    }

    #[test]
    fn subdivision_hat_tilde() {
        let k3 = gen_complete(3).unwrap();
        let s = subdivide(&k3);
        assert_eq!((s.n(), s.edge_count()), (6, 6)); // C_6
        assert_eq!(s.regular_degree(), Some(2));
        assert!(s.is_bipartite());

        let h = hat(&k3);
        assert_eq!(h.n(), 7);
        assert_eq!(h.edge_count(), 9);
        assert!(h.is_bipartite());
        assert_eq!(h.degree(h.vertex_by_label("u").unwrap()), 3);

        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let t = tilde(&p3).unwrap();
        assert_eq!((t.n(), t.edge_count()), (4, 4)); // C_4
        assert_eq!(t.regular_degree(), Some(2));

        let not_tree = gen_cycle(4).unwrap();
        assert!(matches!(tilde(&not_tree), Err(Error::NotTree)));
    }

    #[test]
    fn projective_plane_axioms() {
        for n in [2usize, 3, 5, 7] {
            let plane = gen_projective_plane(n).unwrap();
            let nn = plane.point_count();
            assert_eq!(plane.lines().len(), nn);
            for line in plane.lines() {
                assert_eq!(line.len(), n + 1);
            }
            // lines pairwise distinct and meeting in exactly one point
            for i in 0..nn {
                for j in i + 1..nn {
                    let a: std::collections::HashSet<_> =
                        plane.lines()[i].iter().collect();
                    let common = plane.lines()[j].iter().filter(|p| a.contains(p)).count();
                    assert_eq!(common, 1, "lines {i},{j} of order {n}");
                }
            }
            // any two points on exactly one common line
            for p in 0..nn {
                for q in p + 1..nn {
                    let through = plane
                        .lines()
                        .iter()
                        .filter(|l| l.contains(&p) && l.contains(&q))
                        .count();
                    assert_eq!(through, 1, "points {p},{q} of order {n}");
                }
            }
        }
        assert!(gen_projective_plane(4).is_err());
        assert!(gen_projective_plane(6).is_err());
    }

    #[test]
    fn erd_graph() {
        let plane = gen_projective_plane(3).unwrap();
        let r = vec![1usize; 13];
        let g = gen_erd(&plane, &r).unwrap();
        assert_eq!(g.n(), 27); // 1 + 13 + 13
        assert_eq!(g.max_degree(), 13);
        assert!(g.is_bipartite());
        assert!(g.is_connected());
        // every line copy has degree n + 2
        for v in 0..g.n() {
            if g.label(v).is_some_and(|l| l.starts_with("v_")) {
                assert_eq!(g.degree(v), 5);
            }
        }
        assert!(gen_erd(&plane, &vec![1usize; 12]).is_err());
        let mut unsorted = vec![1usize; 13];
        unsorted[12] = 2;
        assert!(gen_erd(&plane, &unsorted).is_err());
    }

    #[test]
    fn multipartite_and_products() {
        let k3 = gen_complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let k33 = gen_complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.is_bipartite());
        let oct = gen_complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(oct.regular_degree(), Some(4));

        let k2 = gen_complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        assert_eq!(c4.regular_degree(), Some(2));

        let prism = cartesian_product(&gen_cycle(3).unwrap(), &k2);
        assert_eq!((prism.n(), prism.edge_count()), (6, 9));

        for (g, h) in [
            (gen_cycle(4).unwrap(), gen_complete(3).unwrap()),
            (gen_cycle(5).unwrap(), gen_complete(2).unwrap()),
        ] {
            let p = cartesian_product(&g, &h);
            assert_eq!(
                p.edge_count(),
                g.n() * h.edge_count() + h.n() * g.edge_count()
            );
        }
    }

    #[test]
    fn bipartite_family_invariant() {
        assert!(gen_s(2, 3, 4).unwrap().is_bipartite());
        assert!(gen_m(3, 1, 2).unwrap().is_bipartite());
        assert!(gen_hertz(3, 3).unwrap().is_bipartite());
        let k4 = gen_complete(4).unwrap();
        assert!(subdivide(&k4).is_bipartite());
        assert!(hat(&k4).is_bipartite());
        // tilde of a tree with even pendant distances is bipartite
        let spider = Graph::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(tilde(&spider).unwrap().is_bipartite());
    }

    #[test]
    fn petersen_shape() {
        let p = gen_petersen();
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.edge_count(), 15);
        assert!(!p.is_bipartite());
        assert!(p.is_connected());
    }
}
