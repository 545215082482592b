//! Constructive upper bounds. Each operation builds a guard function or a
//! vertex set, re-verifies it with the predicates in [`crate::guard`], and
//! returns it inside a [`Certificate`] together with the bound it attains.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{ConstructionError, GraphError};
use crate::graph::Graph;
use crate::guard::{is_secure_dominating, is_wrdf, GuardFunction};
use crate::set::VertexSet;
use crate::solve::{twins_outside, Solver, Witness};

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Weak Roman function of weight at most `⌊2n/3⌋` from a peeled spanning tree.
    TwoThirds,
    /// Secure set made of every peel leaf plus one remainder vertex.
    TreeSecure,
    /// `V ∖ (S ∪ T(S))` for a τ-maximising minimum dominating set `S`.
    ComplementSecure,
    /// One representative per clique of a minimum clique cover.
    CliqueCoverSecure,
    /// `g(x, y) = f(x)` on `G □ H`.
    ProductLift,
    /// `(S_1 × S_2′) ∪ (S̄_1 × S_2)` on `G □ H`.
    ProductSecure,
    /// Double guards on `V(G) × V_2`, a copy of a `γ_r(G)`-function on the rows `Y` left undominated.
    ProductTwoRows,
    /// A minimum 2-dominating set.
    TwoDominating,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::TwoThirds,
        Construction::TreeSecure,
        Construction::ComplementSecure,
        Construction::CliqueCoverSecure,
        Construction::ProductLift,
        Construction::ProductSecure,
        Construction::ProductTwoRows,
        Construction::TwoDominating,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Construction::TwoThirds => "two-thirds",
            Construction::TreeSecure => "tree-secure",
            Construction::ComplementSecure => "complement-secure",
            Construction::CliqueCoverSecure => "clique-cover-secure",
            Construction::ProductLift => "product-lift",
            Construction::ProductSecure => "product-secure",
            Construction::ProductTwoRows => "product-two-rows",
            Construction::TwoDominating => "two-dominating",
        }
    }

    pub fn from_id(id: &str) -> Option<Construction> {
        Construction::ALL.into_iter().find(|c| c.id() == id)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertObject {
    Function(GuardFunction),
    Set(VertexSet),
}

impl CertObject {
    /// Weight of a function, cardinality of a set.
    pub fn size(&self) -> usize {
        match self {
            CertObject::Function(f) => f.weight(),
            CertObject::Set(s) => s.len(),
        }
    }
}

impl fmt::Display for CertObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertObject::Function(g) => g.fmt(f),
            CertObject::Set(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub object: CertObject,
    pub claimed_bound: usize,
    pub construction: Construction,
    /// Always true on a returned certificate; failures become errors instead.
    pub valid: bool,
    /// Set when part of the input could not be checked for optimality.
    pub trusted_input: bool,
}

impl Certificate {
    fn verified(
        object: CertObject,
        claimed_bound: usize,
        construction: Construction,
    ) -> Result<Self, ConstructionError> {
        if object.size() > claimed_bound {
            return Err(ConstructionError::Verification("object exceeds its claimed bound"));
        }
        Ok(Certificate { object, claimed_bound, construction, valid: true, trusted_input: false })
    }
}

/// One round of peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelLevel {
    /// `V(T_i)`.
    pub vertices: VertexSet,
    /// `S(T_i)`: supports `v` with `deg(v) ≤ |L(v)| + 1` in `T_i`.
    pub supports: VertexSet,
    /// `X(T_i)`: the supports together with their leaves.
    pub removed: VertexSet,
    /// `(v, L_{T_i}(v))` for each support, ascending by `v`.
    pub leaves: Vec<(usize, VertexSet)>,
}

impl PeelLevel {
    /// `T_i` on the original numbering.
    pub fn subtree(&self, tree: &Graph) -> Graph {
        tree.restrict(self.vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelDecomposition {
    pub levels: Vec<PeelLevel>,
    /// `V(T_k) ∖ X(T_k)`, at most two vertices.
    pub remainder: VertexSet,
}

impl PeelDecomposition {
    /// `ϱ(T)`: 0 when the last level removes everything, else 1.
    pub fn rho(&self) -> usize {
        usize::from(!self.remainder.is_empty())
    }

    /// `Σ_i Σ_{v ∈ S(T_i)} |L_{T_i}(v)|`.
    pub fn leaf_total(&self) -> usize {
        self.levels.iter().flat_map(|l| &l.leaves).map(|(_, l)| l.len()).sum()
    }

    pub fn support_count(&self) -> usize {
        self.levels.iter().map(|l| l.supports.len()).sum()
    }

    /// The tree secure-domination bound `Σ|L| + ϱ`.
    pub fn secure_bound(&self) -> usize {
        self.leaf_total() + self.rho()
    }
}

/// Peels `tree` level by level while the surviving subtree has at least three vertices.
pub fn peel(tree: &Graph) -> Result<PeelDecomposition, GraphError> {
    let n = tree.order();
    if n < 3 {
        return Err(GraphError::TooSmall { n, min: 3 });
    }
    if !tree.is_tree() {
        return Err(GraphError::NotATree);
    }
    let mut alive = tree.vertices();
    let mut levels = Vec::new();
    while alive.len() >= 3 {
        let live = alive.bits();
        let deg = |v: usize| (tree.row(v) & live).count_ones() as usize;
        let leaf_mask = alive.iter().filter(|&v| deg(v) == 1).fold(0u64, |m, v| m | 1 << v);
        let mut supports = VertexSet::empty(n);
        let mut removed = VertexSet::empty(n);
        let mut leaves = Vec::new();
        for v in alive {
            let l = VertexSet::from_bits(tree.row(v) & leaf_mask, n);
            if !l.is_empty() && deg(v) <= l.len() + 1 {
                supports = supports.with(v);
                removed = removed.with(v) | l;
                leaves.push((v, l));
            }
        }
        // Every tree of order at least three has a qualifying support.
        debug_assert!(!supports.is_empty());
        levels.push(PeelLevel { vertices: alive, supports, removed, leaves });
        alive = alive - removed;
    }
    Ok(PeelDecomposition { levels, remainder: alive })
}

fn pick_tree(g: &Graph, tree: Option<&Graph>) -> Result<Graph, ConstructionError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    match tree {
        Some(t) if t.is_tree() && t.is_spanning_subgraph_of(g) => Ok(t.clone()),
        Some(_) => Err(ConstructionError::Inapplicable("the supplied tree is not a spanning tree of the graph")),
        None => Ok(g.spanning_tree(0)?),
    }
}

/// A weak Roman dominating function of weight at most `⌊2n/3⌋` for a connected graph of order at least 2.
///
/// `tree` selects the spanning tree to peel; the default is the breadth-first tree from vertex 0.
pub fn tree_wrdf_two_thirds(g: &Graph, tree: Option<&Graph>) -> Result<Certificate, ConstructionError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall { n, min: 2 }.into());
    }
    let t = pick_tree(g, tree)?;
    let bound = 2 * n / 3;
    if n == 2 {
        let f = GuardFunction::zeros(2).with(0, 1);
        return finish_function(g, f, bound, Construction::TwoThirds);
    }
    let peeled = peel(&t)?;
    let mut f = GuardFunction::zeros(n);
    for (v, l) in peeled.levels.iter().flat_map(|l| &l.leaves) {
        f = f.with(*v, if l.len() >= 2 { 2 } else { 1 });
    }
    let rem = peeled.remainder.to_vec();
    match rem[..] {
        [] => {}
        [x] => {
            let near_two = !(t.neighbors(x) & f.v2()).is_empty();
            f = f.with(x, if near_two { 0 } else { 1 });
        }
        [a, b] => {
            let first = f.with(a, 0).with(b, 1);
            f = if is_wrdf(&t, &first) { first } else { f.with(a, 1).with(b, 0) };
        }
        _ => return Err(ConstructionError::Verification("peel remainder has more than two vertices")),
    }
    if !is_wrdf(&t, &f) {
        return Err(ConstructionError::Verification("two-thirds function is not weak Roman on the tree"));
    }
    finish_function(g, f, bound, Construction::TwoThirds)
}

/// A secure dominating set of size at most `Σ|L| + ϱ` read off the peel of a spanning tree.
pub fn tree_secure_set(g: &Graph, tree: Option<&Graph>) -> Result<Certificate, ConstructionError> {
    let n = g.order();
    if n < 3 {
        return Err(GraphError::TooSmall { n, min: 3 }.into());
    }
    let t = pick_tree(g, tree)?;
    let peeled = peel(&t)?;
    let mut w = peeled.levels.iter().flat_map(|l| &l.leaves).fold(VertexSet::empty(n), |acc, (_, l)| acc | *l);
    if let Some(x) = peeled.remainder.first() {
        w = w.with(x);
    }
    if !is_secure_dominating(&t, w) {
        return Err(ConstructionError::Verification("peel leaf set is not secure on the tree"));
    }
    finish_set(g, w, peeled.secure_bound(), Construction::TreeSecure)
}

/// `V ∖ (S ∪ T(S))` for the first τ-maximising minimum dominating set `S`; size `n − γ − τ`.
pub fn complement_secure_set(g: &Graph, solver: &Solver) -> Result<Certificate, ConstructionError> {
    if g.component_is_complete() {
        return Err(ConstructionError::Inapplicable("some component is a complete graph"));
    }
    let (s, tau) = tau_set(g, solver)?;
    let w = (s | tau).complement();
    let bound = g.order() - s.len() - tau.len();
    finish_set(g, w, bound, Construction::ComplementSecure)
}

/// The lowest vertex of each clique in a minimum clique cover; size `θ(G)`.
pub fn clique_cover_secure_set(g: &Graph, solver: &Solver) -> Result<Certificate, ConstructionError> {
    let cover = solver.clique_cover(g)?;
    let Witness::Partition(cliques) = cover.witness else {
        return Err(ConstructionError::Verification("clique cover solver returned no partition"));
    };
    let reps = VertexSet::from_vertices(cliques.iter().filter_map(|c| c.first()), g.order());
    finish_set(g, reps, cover.value, Construction::CliqueCoverSecure)
}

/// Lifts a weak Roman dominating function `f` of `g` to `g □ h` by `(x, y) ↦ f(x)`.
pub fn product_wrdf_lift(g: &Graph, f: &GuardFunction, h: &Graph) -> Result<Certificate, ConstructionError> {
    if f.order() != g.order() || !is_wrdf(g, f) {
        return Err(ConstructionError::NotWeakRoman);
    }
    let p = g.cartesian_product(h)?;
    let nh = h.order();
    let values: Vec<u8> = (0..p.order()).map(|v| f.get(v / nh)).collect();
    let lifted = GuardFunction::from_values(&values).expect("guard values stay in 0..=2");
    finish_function(&p, lifted, nh * f.weight(), Construction::ProductLift)
}

/// `(S_1 × S_2′) ∪ (S̄_1 × S_2)` on `g □ h`, with `S_1` a minimum dominating set of `g`,
/// `S_2` a τ-maximising one of `h` and `S_2′ = V(h) ∖ (S_2 ∪ T(S_2))`.
pub fn product_secure_set(g: &Graph, h: &Graph, solver: &Solver) -> Result<Certificate, ConstructionError> {
    if h.component_is_complete() {
        return Err(ConstructionError::Inapplicable("some component of the second factor is a complete graph"));
    }
    if g.order() < 2 {
        return Err(ConstructionError::Inapplicable("the first factor is trivial"));
    }
    let p = g.cartesian_product(h)?;
    let Witness::Set(s1) = solver.gamma(g)?.witness else {
        return Err(ConstructionError::Verification("domination solver returned no set"));
    };
    let (s2, tau) = tau_set(h, solver)?;
    let s2_prime = (s2 | tau).complement();
    let nh = h.order();
    let mut w = VertexSet::empty(p.order());
    for x in 0..g.order() {
        let row = if s1.contains(x) { s2_prime } else { s2 };
        for y in row {
            w = w.with(x * nh + y);
        }
    }
    let (ng, gg, gh, th) = (g.order(), s1.len(), s2.len(), tau.len());
    let bound = ng * gh + nh * gg - 2 * gg * gh - gg * th;
    finish_set(&p, w, bound, Construction::ProductSecure)
}

/// Given a `γ_r(h)`-function `hf` with `V_2 ≠ ∅`, the weak Roman function on `g □ h` with
/// two guards on `V(g) × V_2` and a `γ_r(g)`-function copied onto every row of `Y = V(h) ∖ N[V_2]`.
/// Its weight is at most `2n(g)|V_2| + |Y|γ_r(g)`.
///
/// Optimality of `hf` is checked when `h` fits the search limit; otherwise the
/// certificate is marked `trusted_input`.
pub fn product_wrdf_two_rows(
    g: &Graph,
    h: &Graph,
    hf: &GuardFunction,
    solver: &Solver,
) -> Result<Certificate, ConstructionError> {
    if hf.order() != h.order() || !is_wrdf(h, hf) {
        return Err(ConstructionError::NotWeakRoman);
    }
    let v2 = hf.v2();
    if v2.is_empty() {
        return Err(ConstructionError::Inapplicable("the supplied function places no double guard"));
    }
    let trusted = h.order() > solver.limits.search;
    if !trusted {
        let optimum = solver.gamma_weak_roman(h)?.value;
        if hf.weight() != optimum {
            return Err(ConstructionError::NotOptimal { weight: hf.weight(), optimum });
        }
    }
    let p = g.cartesian_product(h)?;
    let gr = solver.gamma_weak_roman(g)?;
    let Witness::Function(fg) = gr.witness else {
        return Err(ConstructionError::Verification("weak Roman solver returned no function"));
    };
    let y = h.dominated_by(v2).complement();
    let nh = h.order();
    let mut values = alloc::vec![0u8; p.order()];
    for x in 0..g.order() {
        for v in v2 {
            values[x * nh + v] = 2;
        }
        for v in y {
            values[x * nh + v] = fg.get(x);
        }
    }
    let f = GuardFunction::from_values(&values).expect("guard values stay in 0..=2");
    let bound = 2 * g.order() * v2.len() + y.len() * gr.value;
    let mut cert = finish_function(&p, f, bound, Construction::ProductTwoRows)?;
    cert.trusted_input = trusted;
    Ok(cert)
}

/// A minimum 2-dominating set, which is always secure dominating; size `γ_2(G)`.
pub fn two_dominating_as_secure(g: &Graph, solver: &Solver) -> Result<Certificate, ConstructionError> {
    let r = solver.gamma_k(g, 2)?;
    let Witness::Set(s) = r.witness else {
        return Err(ConstructionError::Verification("2-domination solver returned no set"));
    };
    finish_set(g, s, r.value, Construction::TwoDominating)
}

/// The τ-maximising minimum dominating set and its outside true twins.
fn tau_set(g: &Graph, solver: &Solver) -> Result<(VertexSet, VertexSet), ConstructionError> {
    let Witness::Set(s) = solver.tau(g)?.witness else {
        return Err(ConstructionError::Verification("tau solver returned no set"));
    };
    Ok((s, twins_outside(g, s)))
}

fn finish_function(
    g: &Graph,
    f: GuardFunction,
    bound: usize,
    c: Construction,
) -> Result<Certificate, ConstructionError> {
    if !is_wrdf(g, &f) {
        return Err(ConstructionError::Verification("constructed function is not weak Roman"));
    }
    Certificate::verified(CertObject::Function(f), bound, c)
}

fn finish_set(g: &Graph, s: VertexSet, bound: usize, c: Construction) -> Result<Certificate, ConstructionError> {
    if !is_secure_dominating(g, s) {
        return Err(ConstructionError::Verification("constructed set is not secure dominating"));
    }
    Certificate::verified(CertObject::Set(s), bound, c)
}
