//! Immutable simple undirected graphs over `0..n` with one adjacency word per vertex.
//!
//! Every constructor enforces symmetry, the absence of loops and the
//! [`MAX_VERTICES`] cap, so downstream code can index rows freely.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;
use crate::set::{full_mask, VertexSet};
use crate::MAX_VERTICES;

/// Named graph families with their canonical numbering.
///
/// * `Path(t)` and `Cycle(t)` are numbered along the walk `0, 1, …, t-1`.
/// * `Star(t)` is `K_{1,t-1}` on `t` vertices with centre `0`.
/// * `Hamming(k, t)` is the `k`-fold Cartesian power of `K_t`, built as
///   `((K_t □ K_t) □ K_t) …` with the product numbering, so `Hamming(2, t)`
///   is exactly `cartesian_product(K_t, K_t)`.
/// * `Hypercube(d)` is `Hamming(d, 2)`: vertices are bit strings and adjacent
///   iff they differ in one bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Empty(usize),
    Hypercube(usize),
    Hamming(usize, usize),
}

#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<String>,
}

impl PartialEq for Graph {
    /// Structural equality; labels are informational and ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices { n })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph `N_n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n], labels: Vec::new() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Validates raw adjacency rows: symmetric, loop-free, no bits at or above `n`.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let w = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop { v });
            }
            for u in VertexSet::from_bits(row, n) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::InvalidParameter("adjacency rows are not symmetric"));
                }
            }
        }
        Ok(Graph { adj: rows, labels: Vec::new() })
    }

    pub fn generate(family: FamilySpec) -> Result<Self, GraphError> {
        match family {
            FamilySpec::Path(t) => {
                positive(t)?;
                let edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
                Self::from_edges(t, &edges)
            }
            FamilySpec::Cycle(t) => {
                if t < 3 {
                    return Err(GraphError::CycleTooShort { t });
                }
                let edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
                Self::from_edges(t, &edges)
            }
            FamilySpec::Complete(t) => {
                positive(t)?;
                check_order(t)?;
                let full = full_mask(t);
                Self::from_adjacency((0..t).map(|v| full & !(1 << v)).collect())
            }
            FamilySpec::Star(t) => {
                if t < 2 {
                    return Err(GraphError::InvalidParameter("a star needs at least 2 vertices"));
                }
                let edges: Vec<_> = (1..t).map(|i| (0, i)).collect();
                Self::from_edges(t, &edges)
            }
            FamilySpec::Empty(t) => {
                positive(t)?;
                Self::empty(t)
            }
            FamilySpec::Hypercube(d) => Self::generate(FamilySpec::Hamming(d, 2)),
            FamilySpec::Hamming(k, t) => {
                positive(k)?;
                positive(t)?;
                let order = (t as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
                if order > MAX_VERTICES as u128 {
                    return Err(GraphError::TooManyVertices { n: order.min(usize::MAX as u128) as usize });
                }
                let kt = Self::generate(FamilySpec::Complete(t))?;
                let mut g = kt.clone();
                for _ in 1..k {
                    g = g.cartesian_product(&kt)?;
                }
                Ok(g)
            }
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Attaches per-vertex provenance tags. Extra or missing tags are rejected.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::InvalidParameter("label count differs from graph order"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        (!self.labels.is_empty()).then_some(self.labels.as_slice())
    }

    fn label(&self, v: usize) -> String {
        match self.labels() {
            Some(l) => l[v].clone(),
            None => format!("{v}"),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Raw adjacency word of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed-neighbourhood word `N[v]`.
    #[inline]
    pub fn closed_row(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v], self.order())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.closed_row(v), self.order())
    }

    /// Union of closed neighbourhoods of the members of `s`.
    pub fn dominated_by(&self, s: VertexSet) -> VertexSet {
        let mut bits = 0;
        for v in s {
            bits |= self.closed_row(v);
        }
        VertexSet::from_bits(bits, self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| {
            VertexSet::from_bits(row & !full_mask(u + 1), self.order()).iter().map(move |v| (u, v))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `δ(G)`; zero for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Δ(G)`; zero for the graph with no vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.order()).filter(|&v| self.degree(v) == 1), self.order())
    }

    /// `ℓ(G)`, the number of degree-one vertices.
    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.order()).filter(|&v| self.adj[v] == 0), self.order())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn reach(&self, v: usize, within: VertexSet) -> VertexSet {
        let allowed = within.bits();
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in VertexSet::from_bits(frontier, self.order()) {
                next |= self.adj[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet::from_bits(seen, self.order())
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// True for the order-0 and order-1 graphs as well.
    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.reach(0, self.vertices()).len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.edge_count() == self.order() - 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order()).all(|v| self.degree(v) == self.order() - 1)
    }

    /// Whether `s` induces a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.bits() & !self.closed_row(v) == 0)
    }

    /// Whether ANY connected component induces a complete graph; an isolated vertex counts as `K_1`.
    pub fn component_is_complete(&self) -> bool {
        self.components().into_iter().any(|c| self.is_clique(c))
    }

    /// `G □ H` with `(x, y)` numbered `x·n(H) + y`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph, GraphError> {
        let (ng, nh) = (self.order(), h.order());
        let n = ng.saturating_mul(nh);
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for x in 0..ng {
            for y in 0..nh {
                let mut row = h.adj[y] << (x * nh);
                for x2 in VertexSet::from_bits(self.adj[x], ng) {
                    row |= 1 << (x2 * nh + y);
                }
                adj[x * nh + y] = row;
            }
        }
        let mut labels = Vec::with_capacity(n);
        for x in 0..ng {
            for y in 0..nh {
                labels.push(format!("({},{})", self.label(x), h.label(y)));
            }
        }
        Ok(Graph { adj, labels })
    }

    /// `G ⊙ N_t`: vertex `v` keeps its index and its pendants are `n + v·t .. n + v·t + t`.
    pub fn corona(&self, t: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        let order = n.saturating_mul(t + 1);
        check_order(order)?;
        let mut g = Graph { adj: self.adj.clone(), labels: Vec::new() };
        g.adj.resize(order, 0);
        let mut labels: Vec<String> = (0..n).map(|v| self.label(v)).collect();
        for v in 0..n {
            for j in 0..t {
                g.insert_edge(v, n + v * t + j)?;
                labels.push(format!("{}.{j}", self.label(v)));
            }
        }
        g.labels = labels;
        Ok(g)
    }

    /// Disjoint union with `h` shifted to `n(G)..n(G)+n(H)`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph, GraphError> {
        let ng = self.order();
        check_order(ng + h.order())?;
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|&r| r << ng));
        Ok(Graph { adj, labels: Vec::new() })
    }

    /// `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Result<Graph, GraphError> {
        let (ng, nh) = (self.order(), h.order());
        let mut g = self.disjoint_union(h)?;
        let left = full_mask(ng);
        let right = full_mask(nh) << ng;
        for v in 0..ng {
            g.adj[v] |= right;
        }
        for v in ng..ng + nh {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.order());
        let adj = self.adj.iter().enumerate().map(|(v, &r)| !r & full & !(1 << v)).collect();
        Graph { adj, labels: self.labels.clone() }
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent { u, v });
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// The subgraph induced by `keep`, on the same vertex numbering (other vertices become isolated).
    pub fn restrict(&self, keep: VertexSet) -> Graph {
        let mask = keep.bits();
        let adj = self.adj.iter().enumerate().map(|(v, &r)| if mask >> v & 1 == 1 { r & mask } else { 0 }).collect();
        Graph { adj, labels: self.labels.clone() }
    }

    /// Breadth-first spanning tree from `root`, neighbours explored in ascending order.
    pub fn spanning_tree(&self, root: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        if root >= n {
            return Err(GraphError::VertexOutOfRange { v: root, n });
        }
        let mut tree = Graph { adj: vec![0; n], labels: self.labels.clone() };
        let mut seen = 1u64 << root;
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in VertexSet::from_bits(self.adj[u] & !seen, n) {
                seen |= 1 << w;
                tree.adj[u] |= 1 << w;
                tree.adj[w] |= 1 << u;
                queue.push_back(w);
            }
        }
        if seen != full_mask(n) {
            return Err(GraphError::Disconnected);
        }
        Ok(tree)
    }

    /// Whether every edge of `self` is an edge of `other`, on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.order() == other.order() && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Exhaustive backtracking search for a Hamiltonian cycle; refuses orders above `limit`.
    pub fn has_hamiltonian_cycle(&self, limit: usize) -> Result<bool, GraphError> {
        let n = self.order();
        if n > limit {
            return Err(GraphError::TooLarge { n, limit });
        }
        if n < 3 || self.min_degree() < 2 || !self.is_connected() {
            return Ok(false);
        }
        Ok(self.extend_cycle(0, 1, 1))
    }

    fn extend_cycle(&self, end: usize, visited: u64, count: usize) -> bool {
        let n = self.order();
        if count == n {
            return self.adj[end] & 1 == 1;
        }
        let full = full_mask(n);
        let mut candidates = self.adj[end] & !visited;
        while candidates != 0 {
            let next = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let visited2 = visited | 1 << next;
            let open = full & !visited2;
            // Every unvisited vertex still needs two usable cycle neighbours.
            let usable = open | 1 << next | 1;
            let dead = VertexSet::from_bits(open, n).iter().any(|w| (self.adj[w] & usable).count_ones() < 2);
            if dead {
                continue;
            }
            if self.extend_cycle(next, visited2, count + 1) {
                return true;
            }
        }
        false
    }
}

fn positive(t: usize) -> Result<(), GraphError> {
    if t == 0 {
        Err(GraphError::InvalidParameter("family parameters must be positive"))
    } else {
        check_order(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn path_and_star_numbering() {
        let p4 = Graph::generate(FamilySpec::Path(4)).unwrap();
        assert_eq!(edges(&p4), [(0, 1), (1, 2), (2, 3)]);
        let s5 = Graph::generate(FamilySpec::Star(5)).unwrap();
        assert_eq!(edges(&s5), [(0, 1), (0, 2), (0, 3), (0, 4)]);
    }

    #[test]
    fn family_errors() {
        assert_eq!(Graph::generate(FamilySpec::Cycle(2)), Err(GraphError::CycleTooShort { t: 2 }));
        assert!(matches!(Graph::generate(FamilySpec::Path(65)), Err(GraphError::TooManyVertices { n: 65 })));
        assert!(matches!(Graph::generate(FamilySpec::Hamming(3, 5)), Err(GraphError::TooManyVertices { .. })));
        assert!(Graph::generate(FamilySpec::Star(1)).is_err());
        assert!(Graph::generate(FamilySpec::Path(0)).is_err());
    }

    #[test]
    fn hamming_is_power_of_complete() {
        let h = Graph::generate(FamilySpec::Hamming(2, 3)).unwrap();
        assert_eq!(h.order(), 9);
        assert!((0..9).all(|v| h.degree(v) == 4));
        let k3 = Graph::generate(FamilySpec::Complete(3)).unwrap();
        assert_eq!(h, k3.cartesian_product(&k3).unwrap());
        let q3 = Graph::generate(FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.edges().all(|(u, v)| (u ^ v).count_ones() == 1));
    }

    #[test]
    fn k2_square_is_c4() {
        let k2 = Graph::generate(FamilySpec::Complete(2)).unwrap();
        let c4 = k2.cartesian_product(&k2).unwrap();
        // walk 0-1-3-2-0
        assert_eq!(edges(&c4), [(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn grid_and_identity_factor() {
        let p3 = Graph::generate(FamilySpec::Path(3)).unwrap();
        let grid = p3.cartesian_product(&p3).unwrap();
        assert_eq!((grid.order(), grid.edge_count()), (9, 12));
        let k1 = Graph::empty(1).unwrap();
        let c5 = Graph::generate(FamilySpec::Cycle(5)).unwrap();
        assert_eq!(c5.cartesian_product(&k1).unwrap(), c5);
    }

    #[test]
    fn corona_layout() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(edges(&k1.corona(2).unwrap()), [(0, 1), (0, 2)]);
        let p2 = Graph::generate(FamilySpec::Path(2)).unwrap();
        assert_eq!(edges(&p2.corona(1).unwrap()), [(0, 1), (0, 2), (1, 3)]);
        let p3 = Graph::generate(FamilySpec::Path(3)).unwrap();
        let c = p3.corona(4).unwrap();
        assert_eq!(c.order(), 3 * 5);
        assert_eq!(c.neighbors(1).to_vec(), [0, 2, 7, 8, 9, 10]);
        assert_eq!(c.labels().unwrap()[7], "1.0");
    }

    #[test]
    fn join_examples() {
        let k3 = Graph::generate(FamilySpec::Complete(3)).unwrap();
        let n2 = Graph::generate(FamilySpec::Empty(2)).unwrap();
        let j = k3.join(&n2).unwrap();
        let k5e = Graph::generate(FamilySpec::Complete(5)).unwrap().remove_edge(3, 4).unwrap();
        assert_eq!(j, k5e);
        let n1 = Graph::empty(1).unwrap();
        assert_eq!(n1.join(&n1).unwrap(), Graph::generate(FamilySpec::Complete(2)).unwrap());
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        let c5 = Graph::generate(FamilySpec::Cycle(5)).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2) && cc.is_connected());
        assert_eq!(cc.complement(), c5);
    }

    #[test]
    fn remove_edge_errors_and_splits() {
        let p3 = Graph::generate(FamilySpec::Path(3)).unwrap();
        let g = p3.remove_edge(1, 2).unwrap();
        assert_eq!(edges(&g), [(0, 1)]);
        assert_eq!(g.components().len(), 2);
        assert_eq!(p3.remove_edge(0, 2), Err(GraphError::EdgeAbsent { u: 0, v: 2 }));
    }

    #[test]
    fn bfs_spanning_trees() {
        let c4 = Graph::generate(FamilySpec::Cycle(4)).unwrap();
        assert_eq!(edges(&c4.spanning_tree(0).unwrap()), [(0, 1), (0, 3), (1, 2)]);
        let k3 = Graph::generate(FamilySpec::Complete(3)).unwrap();
        assert_eq!(edges(&k3.spanning_tree(0).unwrap()), [(0, 1), (0, 2)]);
        let t = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(t.spanning_tree(2).unwrap(), t);
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(split.spanning_tree(0), Err(GraphError::Disconnected));
    }

    #[test]
    fn structural_queries() {
        let spider = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(spider.leaf_count(), 3);
        assert_eq!(Graph::generate(FamilySpec::Cycle(7)).unwrap().min_degree(), 2);
        let k3 = Graph::generate(FamilySpec::Complete(3)).unwrap();
        let p3 = Graph::generate(FamilySpec::Path(3)).unwrap();
        assert!(k3.disjoint_union(&p3).unwrap().component_is_complete());
        assert!(!p3.component_is_complete());
        assert!(Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap().component_is_complete());
    }

    #[test]
    fn hamiltonicity() {
        let c7 = Graph::generate(FamilySpec::Cycle(7)).unwrap();
        assert_eq!(c7.has_hamiltonian_cycle(24), Ok(true));
        let s5 = Graph::generate(FamilySpec::Star(5)).unwrap();
        assert_eq!(s5.has_hamiltonian_cycle(24), Ok(false));
        let p3 = Graph::generate(FamilySpec::Path(3)).unwrap();
        let grid = p3.cartesian_product(&p3).unwrap();
        assert_eq!(grid.has_hamiltonian_cycle(24), Ok(false));
        let q3 = Graph::generate(FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(q3.has_hamiltonian_cycle(24), Ok(true));
        let big = Graph::generate(FamilySpec::Cycle(25)).unwrap();
        assert_eq!(big.has_hamiltonian_cycle(24), Err(GraphError::TooLarge { n: 25, limit: 24 }));
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert_eq!(Graph::from_adjacency(vec![0b1]), Err(GraphError::SelfLoop { v: 0 }));
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { v: 2, n: 2 }));
    }
}
