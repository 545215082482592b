//! Seeded random graphs.

use rand::Rng;
use wrdom_core::Graph;

/// A uniformly random labelled tree on `n ≥ 1` vertices, decoded from a Prüfer sequence.
pub fn tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edges(n, edges).expect("order within the cap");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a Prüfer step always has a leaf");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("order within the cap")
}

/// `G(n, p)`: each pair joined independently with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, &edges).expect("order within the cap")
}

/// A connected graph on `n ≥ 3` vertices that is not complete: a random tree
/// plus each remaining pair with probability `p`, resampled if complete.
pub fn connected_noncomplete<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 3, "every connected graph on fewer than 3 vertices is complete");
    loop {
        let t = tree(n, rng);
        let mut edges: Vec<(usize, usize)> = t.edges().collect();
        for u in 0..n {
            for v in u + 1..n {
                if !t.has_edge(u, v) && rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("order within the cap");
        if !g.is_complete() {
            return g;
        }
    }
}
