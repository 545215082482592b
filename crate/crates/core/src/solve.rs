//! Exact solvers for every invariant the bound registry reads.
//!
//! All searches visit vertices in ascending index order, and every reported
//! witness is the first optimum in that order: for vertex sets, the
//! lexicographically least sorted vertex list; for guard functions, the first
//! assignment when each vertex tries 2, then 1, then 0.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graph::Graph;
use crate::guard::{is_secure_dominating, is_wrdf, GuardFunction};
use crate::search::{Local, OrderedSearch};
use crate::set::{full_mask, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    /// `γ(G)`
    Domination,
    /// `γ_k(G)`
    KDomination(usize),
    /// `γ_R(G)`
    Roman,
    /// `γ_r(G)`
    WeakRoman,
    /// `γ_s(G)`
    Secure,
    /// `α′(G)`
    Matching,
    /// `ρ(G)`
    TwoPacking,
    /// `θ(G)`
    CliqueCover,
    /// `χ(G)`
    Chromatic,
    /// `τ(G)`
    Tau,
}

impl Invariant {
    /// Stable identifier used in reports and on the command line.
    pub fn id(&self) -> String {
        match self {
            Invariant::Domination => "gamma".into(),
            Invariant::KDomination(k) => format!("gamma_{k}"),
            Invariant::Roman => "gamma_R".into(),
            Invariant::WeakRoman => "gamma_r".into(),
            Invariant::Secure => "gamma_s".into(),
            Invariant::Matching => "matching".into(),
            Invariant::TwoPacking => "rho".into(),
            Invariant::CliqueCover => "theta".into(),
            Invariant::Chromatic => "chi".into(),
            Invariant::Tau => "tau".into(),
        }
    }

    /// Inverse of [`Invariant::id`].
    pub fn from_id(id: &str) -> Option<Invariant> {
        Some(match id {
            "gamma" => Invariant::Domination,
            "gamma_R" => Invariant::Roman,
            "gamma_r" => Invariant::WeakRoman,
            "gamma_s" => Invariant::Secure,
            "matching" => Invariant::Matching,
            "rho" => Invariant::TwoPacking,
            "theta" => Invariant::CliqueCover,
            "chi" => Invariant::Chromatic,
            "tau" => Invariant::Tau,
            _ => {
                let k: usize = id.strip_prefix("gamma_")?.parse().ok()?;
                if k == 0 {
                    return None;
                }
                Invariant::KDomination(k)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Set(VertexSet),
    Function(GuardFunction),
    /// Colour classes or cliques, ordered by smallest vertex.
    Partition(Vec<VertexSet>),
    /// Matching edges `(u, v)` with `u < v`.
    Edges(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
}

/// Largest graph order each solver family accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    /// Subset and guard-assignment searches (`γ`, `γ_k`, `γ_R`, `γ_r`, `γ_s`, `α′`, `ρ`).
    pub search: usize,
    /// Enumeration of all minimum dominating sets (`𝒟(G)`, `τ`).
    pub enumeration: usize,
    /// Colouring branch and bound (`χ`, `θ`).
    pub coloring: usize,
    /// Hamiltonian cycle backtracking.
    pub hamiltonian: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { search: 32, enumeration: 20, coloring: 20, hamiltonian: 24 }
    }
}

impl SolverLimits {
    /// Caps every limit at `n`.
    pub fn capped(self, n: usize) -> Self {
        SolverLimits {
            search: self.search.min(n),
            enumeration: self.enumeration.min(n),
            coloring: self.coloring.min(n),
            hamiltonian: self.hamiltonian.min(n),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub limits: SolverLimits,
}

impl Solver {
    pub fn new(limits: SolverLimits) -> Self {
        Solver { limits }
    }

    fn guard(&self, what: &'static str, g: &Graph, limit: usize) -> Result<(), SolveError> {
        if g.order() > limit {
            Err(SolveError::TooLarge { what, n: g.order(), limit })
        } else {
            Ok(())
        }
    }

    pub fn solve(&self, g: &Graph, invariant: Invariant) -> Result<SolveResult, SolveError> {
        match invariant {
            Invariant::Domination => self.gamma(g),
            Invariant::KDomination(k) => self.gamma_k(g, k),
            Invariant::Roman => self.gamma_roman(g),
            Invariant::WeakRoman => self.gamma_weak_roman(g),
            Invariant::Secure => self.gamma_secure(g),
            Invariant::Matching => self.matching_number(g),
            Invariant::TwoPacking => self.two_packing(g),
            Invariant::CliqueCover => self.clique_cover(g),
            Invariant::Chromatic => self.chromatic_number(g),
            Invariant::Tau => self.tau(g),
        }
    }

    /// `γ(G)` by branching on the closed neighbourhood of the lowest undominated vertex.
    pub fn gamma(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("gamma", g, self.limits.search)?;
        let mut bb = DominationBranch { g, best: greedy_domination(g), nodes: 0 };
        bb.descend(0, 0, 0);
        let value = bb.best;
        let mut search = OrderedSearch::new(g, 1, Local::Dominate);
        let f = search.run(value, |_| true).expect("a dominating set of optimal size exists");
        Ok(SolveResult {
            invariant: Invariant::Domination,
            value,
            witness: Witness::Set(f.support()),
            nodes_explored: bb.nodes + search.nodes,
        })
    }

    /// `γ_k(G)`: fewest vertices such that every other vertex has `k` neighbours among them.
    pub fn gamma_k(&self, g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
        if k == 0 {
            return Err(SolveError::InvalidK);
        }
        self.guard("gamma_k", g, self.limits.search)?;
        let n = g.order();
        let mut search = OrderedSearch::new(g, 1, Local::KDominate(k.min(64) as u32));
        let f = search.minimum(k.min(n), n, |_| true).expect("the full vertex set is k-dominating");
        Ok(SolveResult {
            invariant: Invariant::KDomination(k),
            value: f.weight(),
            witness: Witness::Set(f.support()),
            nodes_explored: search.nodes,
        })
    }

    /// `γ_R(G)`, searched in weight order inside `γ ≤ γ_R ≤ 2γ`.
    pub fn gamma_roman(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        let gamma = self.gamma(g)?;
        let mut search = OrderedSearch::new(g, 2, Local::Roman);
        let f =
            search.minimum(gamma.value, 2 * gamma.value, |_| true).expect("doubling a minimum dominating set is Roman");
        Ok(SolveResult {
            invariant: Invariant::Roman,
            value: f.weight(),
            witness: Witness::Function(f),
            nodes_explored: gamma.nodes_explored + search.nodes,
        })
    }

    /// `γ_r(G)`, searched in weight order inside `γ ≤ γ_r ≤ 2γ`.
    pub fn gamma_weak_roman(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        let gamma = self.gamma(g)?;
        let mut search = OrderedSearch::new(g, 2, Local::Dominate);
        let f = search
            .minimum(gamma.value, 2 * gamma.value, |f| is_wrdf(g, f))
            .expect("doubling a minimum dominating set is weak Roman");
        Ok(SolveResult {
            invariant: Invariant::WeakRoman,
            value: f.weight(),
            witness: Witness::Function(f),
            nodes_explored: gamma.nodes_explored + search.nodes,
        })
    }

    /// The first `γ_r(G)`-function placing at least one double guard, if any exists.
    pub fn weak_roman_with_twos(&self, g: &Graph) -> Result<Option<GuardFunction>, SolveError> {
        let value = self.gamma_weak_roman(g)?.value;
        let mut search = OrderedSearch::new(g, 2, Local::Dominate);
        Ok(search.run(value, |f| !f.v2().is_empty() && is_wrdf(g, f)))
    }

    /// `γ_s(G)`, dominating sets by increasing cardinality from `γ`.
    pub fn gamma_secure(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        let gamma = self.gamma(g)?;
        let mut search = OrderedSearch::new(g, 1, Local::Dominate);
        let f = search
            .minimum(gamma.value, g.order(), |f| is_secure_dominating(g, f.support()))
            .expect("the full vertex set is secure dominating");
        Ok(SolveResult {
            invariant: Invariant::Secure,
            value: f.weight(),
            witness: Witness::Set(f.support()),
            nodes_explored: gamma.nodes_explored + search.nodes,
        })
    }

    /// `α′(G)` by include/skip branching on the lowest unprocessed vertex.
    pub fn matching_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("matching", g, self.limits.search)?;
        let mut m = MatchingBranch { g, best: Vec::new(), current: Vec::new(), nodes: 0, ceiling: g.order() / 2 };
        m.descend(full_mask(g.order()));
        Ok(SolveResult {
            invariant: Invariant::Matching,
            value: m.best.len(),
            witness: Witness::Edges(m.best),
            nodes_explored: m.nodes,
        })
    }

    /// `ρ(G)` as a maximum independent set of the graph joining vertices at distance at most two.
    pub fn two_packing(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("rho", g, self.limits.search)?;
        let n = g.order();
        let conflict: Vec<u64> = (0..n)
            .map(|u| {
                let mut row = 0u64;
                for v in 0..n {
                    if v != u && g.closed_row(u) & g.closed_row(v) != 0 {
                        row |= 1 << v;
                    }
                }
                row
            })
            .collect();
        let (set, nodes) = max_independent(&conflict);
        Ok(SolveResult {
            invariant: Invariant::TwoPacking,
            value: set.count_ones() as usize,
            witness: Witness::Set(VertexSet::from_bits(set, n)),
            nodes_explored: nodes,
        })
    }

    /// `χ(G)` by sequential colouring seeded with a maximum clique.
    pub fn chromatic_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("chi", g, self.limits.coloring)?;
        let (classes, nodes) = color(g);
        Ok(SolveResult {
            invariant: Invariant::Chromatic,
            value: classes.len(),
            witness: Witness::Partition(classes),
            nodes_explored: nodes,
        })
    }

    /// `θ(G) = χ(Ḡ)`; the witness partitions `V(G)` into cliques.
    pub fn clique_cover(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("theta", g, self.limits.coloring)?;
        let (classes, nodes) = color(&g.complement());
        Ok(SolveResult {
            invariant: Invariant::CliqueCover,
            value: classes.len(),
            witness: Witness::Partition(classes),
            nodes_explored: nodes,
        })
    }

    /// Every minimum dominating set, in lexicographic order of sorted vertex lists.
    pub fn enumerate_gamma_sets(&self, g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
        self.guard("gamma sets", g, self.limits.enumeration)?;
        let gamma = self.gamma(g)?.value;
        let mut out = Vec::new();
        OrderedSearch::new(g, 1, Local::Dominate).run(gamma, |f| {
            out.push(f.support());
            false
        });
        Ok(out)
    }

    /// `τ(G)`, with the first maximising minimum dominating set as witness.
    pub fn tau(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.guard("tau", g, self.limits.enumeration)?;
        let sets = self.enumerate_gamma_sets(g)?;
        let count = sets.len() as u64;
        let (best, value) = sets
            .into_iter()
            .map(|s| (s, twins_outside(g, s).len()))
            .fold(None, |acc: Option<(VertexSet, usize)>, (s, t)| match acc {
                Some((_, bt)) if bt >= t => acc,
                _ => Some((s, t)),
            })
            .expect("every graph has a minimum dominating set");
        Ok(SolveResult { invariant: Invariant::Tau, value, witness: Witness::Set(best), nodes_explored: count })
    }
}

/// `T(S)`: vertices outside `s` with a true twin (`N[v] = N[u]`) in `s`.
pub fn twins_outside(g: &Graph, s: VertexSet) -> VertexSet {
    let members: Vec<u64> = s.iter().map(|u| g.closed_row(u)).collect();
    VertexSet::from_vertices(s.complement().iter().filter(|&v| members.contains(&g.closed_row(v))), g.order())
}

fn greedy_domination(g: &Graph) -> usize {
    let full = full_mask(g.order());
    let mut dom = 0u64;
    let mut count = 0;
    while dom != full {
        let u = (0..g.order())
            .max_by_key(|&u| ((g.closed_row(u) & !dom).count_ones(), core::cmp::Reverse(u)))
            .expect("nonempty graph");
        dom |= g.closed_row(u);
        count += 1;
    }
    count
}

struct DominationBranch<'g> {
    g: &'g Graph,
    best: usize,
    nodes: u64,
}

impl DominationBranch<'_> {
    fn descend(&mut self, dom: u64, count: usize, forbidden: u64) {
        self.nodes += 1;
        let n = self.g.order();
        let open = !dom & full_mask(n);
        if open == 0 {
            self.best = self.best.min(count);
            return;
        }
        let allowed = full_mask(n) & !forbidden;
        let mut cover = 0u32;
        for u in VertexSet::from_bits(allowed, n) {
            cover = cover.max((self.g.closed_row(u) & open).count_ones());
        }
        if cover == 0 {
            return;
        }
        let lb = (open.count_ones() as usize).div_ceil(cover as usize);
        if count + lb >= self.best {
            return;
        }
        let v = open.trailing_zeros() as usize;
        let mut forbid = forbidden;
        for u in VertexSet::from_bits(self.g.closed_row(v) & allowed, n) {
            self.descend(dom | self.g.closed_row(u), count + 1, forbid);
            forbid |= 1 << u;
        }
    }
}

struct MatchingBranch<'g> {
    g: &'g Graph,
    best: Vec<(usize, usize)>,
    current: Vec<(usize, usize)>,
    nodes: u64,
    ceiling: usize,
}

impl MatchingBranch<'_> {
    /// Returns true once a matching meeting the `⌊n/2⌋` ceiling is found.
    fn descend(&mut self, remaining: u64) -> bool {
        self.nodes += 1;
        let live = VertexSet::from_bits(remaining, self.g.order())
            .iter()
            .filter(|&v| self.g.row(v) & remaining != 0)
            .fold(0u64, |m, v| m | 1 << v);
        if live == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return self.best.len() == self.ceiling;
        }
        if self.current.len() + live.count_ones() as usize / 2 <= self.best.len() {
            return false;
        }
        let v = live.trailing_zeros() as usize;
        let without_v = live & !(1 << v);
        for u in VertexSet::from_bits(self.g.row(v) & live, self.g.order()) {
            self.current.push((v, u));
            let done = self.descend(without_v & !(1 << u));
            self.current.pop();
            if done {
                return true;
            }
        }
        self.descend(without_v)
    }
}

/// Maximum independent set over adjacency `rows`; the first maximum in include-first order.
fn max_independent(rows: &[u64]) -> (u64, u64) {
    fn descend(rows: &[u64], cands: u64, chosen: u64, best: &mut u64, nodes: &mut u64) {
        *nodes += 1;
        if cands == 0 {
            if chosen.count_ones() > best.count_ones() {
                *best = chosen;
            }
            return;
        }
        if chosen.count_ones() + cands.count_ones() <= best.count_ones() {
            return;
        }
        let v = cands.trailing_zeros() as usize;
        descend(rows, cands & !rows[v] & !(1 << v), chosen | 1 << v, best, nodes);
        descend(rows, cands & !(1 << v), chosen, best, nodes);
    }
    let mut best = 0;
    let mut nodes = 0;
    // The empty set beats nothing; seed so that a zero-vertex graph still reports.
    descend(rows, full_mask(rows.len()), 0, &mut best, &mut nodes);
    (best, nodes)
}

/// Minimum colouring: colour classes sorted by smallest vertex, plus node count.
fn color(g: &Graph) -> (Vec<VertexSet>, u64) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), 0);
    }
    // A maximum clique of G is a maximum independent set of its complement.
    let comp: Vec<u64> = g.complement().rows().to_vec();
    let (clique, mut nodes) = max_independent(&comp);
    let mut order: Vec<usize> = VertexSet::from_bits(clique, n).to_vec();
    order.extend((0..n).filter(|&v| clique >> v & 1 == 0));

    let mut coloring = Coloring {
        g,
        order: &order,
        classes: vec![0u64; n],
        best: Vec::new(),
        best_count: n + 1,
        lower: clique.count_ones() as usize,
        nodes: 0,
    };
    let seeded = coloring.lower;
    for (c, &v) in order[..seeded].iter().enumerate() {
        coloring.classes[c] = 1 << v;
    }
    coloring.descend(seeded, seeded);
    nodes += coloring.nodes;
    let mut classes: Vec<VertexSet> = coloring.best.iter().map(|&b| VertexSet::from_bits(b, n)).collect();
    classes.sort_by_key(|c| c.first());
    (classes, nodes)
}

struct Coloring<'a> {
    g: &'a Graph,
    order: &'a [usize],
    classes: Vec<u64>,
    best: Vec<u64>,
    best_count: usize,
    lower: usize,
    nodes: u64,
}

impl Coloring<'_> {
    fn descend(&mut self, idx: usize, used: usize) -> bool {
        self.nodes += 1;
        if used >= self.best_count {
            return false;
        }
        if idx == self.order.len() {
            self.best_count = used;
            self.best = self.classes[..used].to_vec();
            return used == self.lower;
        }
        let v = self.order[idx];
        let row = self.g.row(v);
        for c in 0..used {
            if self.classes[c] & row == 0 {
                self.classes[c] |= 1 << v;
                let done = self.descend(idx + 1, used);
                self.classes[c] &= !(1 << v);
                if done {
                    return true;
                }
            }
        }
        if used + 1 < self.best_count {
            self.classes[used] = 1 << v;
            let done = self.descend(idx + 1, used + 1);
            self.classes[used] = 0;
            if done {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(f: FamilySpec) -> Graph {
        Graph::generate(f).unwrap()
    }

    fn spider() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)]).unwrap()
    }

    fn k5_minus_e() -> Graph {
        gen(FamilySpec::Complete(5)).remove_edge(3, 4).unwrap()
    }

    fn value(g: &Graph, inv: Invariant) -> usize {
        Solver::default().solve(g, inv).unwrap().value
    }

    #[test]
    fn invariant_ids_round_trip() {
        for inv in [
            Invariant::Domination,
            Invariant::KDomination(3),
            Invariant::Roman,
            Invariant::WeakRoman,
            Invariant::Secure,
            Invariant::Matching,
            Invariant::TwoPacking,
            Invariant::CliqueCover,
            Invariant::Chromatic,
            Invariant::Tau,
        ] {
            assert_eq!(Invariant::from_id(&inv.id()), Some(inv));
        }
        assert_eq!(Invariant::from_id("gamma_0"), None);
        assert_eq!(Invariant::from_id("bogus"), None);
    }

    #[test]
    fn spider_chain() {
        let g = spider();
        assert_eq!(value(&g, Invariant::Domination), 2);
        assert_eq!(value(&g, Invariant::WeakRoman), 3);
        assert_eq!(value(&g, Invariant::Secure), 4);
        let r = Solver::default().gamma_weak_roman(&g).unwrap();
        assert_eq!(r.witness, Witness::Function(GuardFunction::parse("2,0,1,0,0,0", 6).unwrap()));
    }

    #[test]
    fn degenerate_graphs() {
        let empty = Graph::empty(0).unwrap();
        for inv in [
            Invariant::Domination,
            Invariant::WeakRoman,
            Invariant::Secure,
            Invariant::Chromatic,
            Invariant::CliqueCover,
            Invariant::Tau,
        ] {
            assert_eq!(value(&empty, inv), 0, "{inv:?}");
        }
        let k1 = Graph::empty(1).unwrap();
        for inv in [Invariant::Domination, Invariant::WeakRoman, Invariant::Secure, Invariant::Roman] {
            assert_eq!(value(&k1, inv), 1, "{inv:?}");
        }
        let n3 = Graph::empty(3).unwrap();
        assert_eq!(value(&n3, Invariant::Domination), 3);
        assert_eq!(value(&n3, Invariant::Roman), 3);
    }

    #[test]
    fn complete_graphs() {
        for t in 2..7 {
            let k = gen(FamilySpec::Complete(t));
            assert_eq!(value(&k, Invariant::Domination), 1);
            assert_eq!(value(&k, Invariant::Roman), 2);
            assert_eq!(value(&k, Invariant::WeakRoman), 1);
            assert_eq!(value(&k, Invariant::KDomination(2)), 2);
            assert_eq!(value(&k, Invariant::TwoPacking), 1);
            assert_eq!(value(&k, Invariant::CliqueCover), 1);
            assert_eq!(value(&k, Invariant::Chromatic), t);
        }
    }

    #[test]
    fn k5_minus_edge() {
        let g = k5_minus_e();
        assert_eq!(value(&g, Invariant::Secure), 2);
        assert_eq!(value(&g, Invariant::Matching), 2);
        assert_eq!(value(&g, Invariant::Tau), 2);
        for n in 4..9 {
            let g = gen(FamilySpec::Complete(n)).remove_edge(0, 1).unwrap();
            assert_eq!(value(&g, Invariant::Tau), n - 3);
        }
    }

    #[test]
    fn cube_two_domination() {
        let q3 = gen(FamilySpec::Hypercube(3));
        assert_eq!(value(&q3, Invariant::KDomination(2)), 4);
        assert_eq!(value(&q3, Invariant::Secure), 4);
        assert_eq!(value(&gen(FamilySpec::Cycle(4)), Invariant::KDomination(2)), 2);
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(value(&gen(FamilySpec::Path(7)), Invariant::Domination), 3);
        assert_eq!(value(&gen(FamilySpec::Path(7)), Invariant::TwoPacking), 3);
        assert_eq!(value(&gen(FamilySpec::Path(4)), Invariant::Matching), 2);
        assert_eq!(value(&gen(FamilySpec::Cycle(7)), Invariant::Matching), 3);
        assert_eq!(value(&gen(FamilySpec::Cycle(5)), Invariant::CliqueCover), 3);
        let c5 = gen(FamilySpec::Cycle(5));
        assert_eq!(value(&c5, Invariant::Chromatic) + value(&c5.complement(), Invariant::Chromatic), 6);
        assert_eq!(value(&gen(FamilySpec::Cycle(4)), Invariant::Tau), 0);
    }

    #[test]
    fn roman_on_ladders() {
        let k2 = gen(FamilySpec::Complete(2));
        for t in 2..=6 {
            let ladder = gen(FamilySpec::Path(t)).cartesian_product(&k2).unwrap();
            assert_eq!(value(&ladder, Invariant::Roman), t + 1, "t={t}");
        }
    }

    #[test]
    fn gamma_set_enumeration() {
        let c4 = gen(FamilySpec::Cycle(4));
        let sets = Solver::default().enumerate_gamma_sets(&c4).unwrap();
        assert_eq!(sets.len(), 6);
        assert_eq!(sets[0].to_vec(), [0, 1]);
        let k3 = gen(FamilySpec::Complete(3));
        let sets: Vec<_> = Solver::default().enumerate_gamma_sets(&k3).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(sets, [[0], [1], [2]]);
        let spider_sets = Solver::default().enumerate_gamma_sets(&spider()).unwrap();
        assert!(spider_sets.contains(&VertexSet::from_vertices([0, 2], 6)));
    }

    #[test]
    fn corona_packing() {
        let p3 = gen(FamilySpec::Path(3));
        assert_eq!(value(&p3.corona(2).unwrap(), Invariant::TwoPacking), 3);
        let c4 = gen(FamilySpec::Cycle(4));
        assert_eq!(value(&c4.corona(1).unwrap(), Invariant::TwoPacking), 4);
    }

    #[test]
    fn limits_are_enforced() {
        let solver = Solver::new(SolverLimits::default().capped(5));
        let c6 = gen(FamilySpec::Cycle(6));
        assert!(matches!(solver.gamma(&c6), Err(SolveError::TooLarge { n: 6, limit: 5, .. })));
        assert!(matches!(solver.chromatic_number(&c6), Err(SolveError::TooLarge { .. })));
        assert_eq!(Solver::default().gamma_k(&c6, 0), Err(SolveError::InvalidK));
    }
}
