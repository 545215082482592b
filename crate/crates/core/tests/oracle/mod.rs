//! Plain exhaustive definitions of every invariant, written against an
//! adjacency matrix and independent of the library's predicates and search.
#![allow(dead_code)]

use wrdom_core::Graph;

pub struct Oracle {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Oracle { n, adj }
    }

    fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    fn subsets(&self) -> impl Iterator<Item = u64> {
        0..(1u64 << self.n)
    }

    /// All `3^n` guard assignments.
    fn functions(&self) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|f| {
                    (0..3u8).map(move |x| {
                        let mut g = f.clone();
                        g.push(x);
                        g
                    })
                })
                .collect();
        }
        out
    }

    pub fn dominates(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| s[v] || (0..self.n).any(|u| self.adj[v][u] && s[u]))
    }

    fn as_flags(&self, mask: u64) -> Vec<bool> {
        (0..self.n).map(|v| mask >> v & 1 == 1).collect()
    }

    pub fn is_secure(&self, s: &[bool]) -> bool {
        self.dominates(s)
            && (0..self.n).filter(|&v| !s[v]).all(|v| {
                (0..self.n).filter(|&u| s[u] && self.adj[u][v]).any(|u| {
                    let mut t = s.to_vec();
                    t[u] = false;
                    t[v] = true;
                    self.dominates(&t)
                })
            })
    }

    fn undefended_free(&self, f: &[u8]) -> bool {
        (0..self.n).all(|v| f[v] > 0 || (0..self.n).any(|u| self.adj[v][u] && f[u] > 0))
    }

    pub fn is_wrdf(&self, f: &[u8]) -> bool {
        (0..self.n).filter(|&v| f[v] == 0).all(|v| {
            (0..self.n).filter(|&u| self.adj[u][v] && f[u] > 0).any(|u| {
                let mut g = f.to_vec();
                g[u] -= 1;
                g[v] = 1;
                self.undefended_free(&g)
            })
        })
    }

    pub fn is_rdf(&self, f: &[u8]) -> bool {
        (0..self.n).filter(|&v| f[v] == 0).all(|v| (0..self.n).any(|u| self.adj[v][u] && f[u] == 2))
    }

    pub fn is_k_dominating(&self, s: &[bool], k: usize) -> bool {
        (0..self.n).filter(|&v| !s[v]).all(|v| (0..self.n).filter(|&u| self.adj[v][u] && s[u]).count() >= k)
    }

    fn min_set(&self, ok: impl Fn(&[bool]) -> bool) -> usize {
        self.subsets().filter(|&m| ok(&self.as_flags(m))).map(|m| m.count_ones() as usize).min().unwrap()
    }

    pub fn gamma(&self) -> usize {
        self.min_set(|s| self.dominates(s))
    }

    pub fn gamma_k(&self, k: usize) -> usize {
        self.min_set(|s| self.is_k_dominating(s, k))
    }

    pub fn gamma_secure(&self) -> usize {
        self.min_set(|s| self.is_secure(s))
    }

    fn min_function(&self, ok: impl Fn(&[u8]) -> bool) -> usize {
        self.functions().iter().filter(|f| ok(f)).map(|f| f.iter().map(|&x| x as usize).sum()).min().unwrap()
    }

    pub fn gamma_roman(&self) -> usize {
        self.min_function(|f| self.is_rdf(f))
    }

    pub fn gamma_weak_roman(&self) -> usize {
        self.min_function(|f| self.is_wrdf(f))
    }

    pub fn matching(&self) -> usize {
        let edges: Vec<(usize, usize)> =
            (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).filter(|&(u, v)| self.adj[u][v]).collect();
        (0..1u64 << edges.len())
            .filter(|&m| {
                let mut used = vec![false; self.n];
                (0..edges.len()).filter(|&i| m >> i & 1 == 1).all(|i| {
                    let (u, v) = edges[i];
                    let free = !used[u] && !used[v];
                    used[u] = true;
                    used[v] = true;
                    free
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn closed(&self, v: usize) -> Vec<bool> {
        (0..self.n).map(|u| u == v || self.adj[u][v]).collect()
    }

    pub fn rho(&self) -> usize {
        self.subsets()
            .filter(|&m| {
                let vs = self.members(m);
                vs.iter().enumerate().all(|(i, &a)| {
                    vs[i + 1..].iter().all(|&b| {
                        let (na, nb) = (self.closed(a), self.closed(b));
                        !(0..self.n).any(|x| na[x] && nb[x])
                    })
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    /// Fewest classes in a labelling where each class is independent (or a clique).
    fn min_classes(&self, cliques: bool) -> usize {
        if self.n == 0 {
            return 0;
        }
        for k in 1..=self.n {
            let mut label = vec![0usize; self.n];
            loop {
                let ok =
                    (0..self.n).all(|u| (u + 1..self.n).all(|v| label[u] != label[v] || self.adj[u][v] == cliques));
                if ok {
                    return k;
                }
                let mut i = 0;
                while i < self.n && label[i] == k - 1 {
                    label[i] = 0;
                    i += 1;
                }
                if i == self.n {
                    break;
                }
                label[i] += 1;
            }
        }
        unreachable!()
    }

    pub fn chi(&self) -> usize {
        self.min_classes(false)
    }

    pub fn theta(&self) -> usize {
        self.min_classes(true)
    }

    /// Every minimum dominating set as a sorted vertex list, in lexicographic order.
    pub fn gamma_sets(&self) -> Vec<Vec<usize>> {
        let g = self.gamma();
        let mut sets: Vec<Vec<usize>> = self
            .subsets()
            .filter(|&m| m.count_ones() as usize == g && self.dominates(&self.as_flags(m)))
            .map(|m| self.members(m))
            .collect();
        sets.sort();
        sets
    }

    pub fn tau(&self) -> usize {
        self.gamma_sets()
            .iter()
            .map(|s| {
                (0..self.n)
                    .filter(|v| !s.contains(v))
                    .filter(|&v| s.iter().any(|&u| self.closed(u) == self.closed(v)))
                    .count()
            })
            .max()
            .unwrap()
    }
}
