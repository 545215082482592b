//! Registry of inequalities between the invariants, and the audit that
//! checks every applicable entry against exact values.

use alloc::vec::Vec;

use crate::construct::peel;
use crate::graph::Graph;
use crate::solve::Solver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `actual ≤ claimed`.
    Upper,
    /// `actual ≥ claimed`.
    Lower,
    /// Both sides must agree (an equality or a biconditional).
    Equality,
}

impl BoundKind {
    pub fn id(self) -> &'static str {
        match self {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
            BoundKind::Equality => "equality",
        }
    }
}

/// Whether an entry is stated for one graph or for a Cartesian product `G □ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Graph,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    Inapplicable(&'static str),
    /// A hypothesis or a required value could not be computed within the limits.
    Undecided(&'static str),
}

impl Applicability {
    pub fn is_applicable(self) -> bool {
        self == Applicability::Applicable
    }
}

#[derive(Debug, Clone, Copy)]
enum Eval {
    Graph(fn(&Profile) -> Evaluation),
    Product(fn(&ProductProfile) -> Evaluation),
}

#[derive(Debug, Clone, Copy)]
pub struct BoundSpec {
    pub id: &'static str,
    pub kind: BoundKind,
    /// Invariant on the `actual` side.
    pub target: &'static str,
    /// The inequality in formula form.
    pub statement: &'static str,
    /// Hypotheses, empty when the entry holds for every graph.
    pub hypotheses: &'static str,
    pub scope: Scope,
    eval: Eval,
}

/// The outcome of one registry entry before it is tagged with its id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub applicability: Applicability,
    pub claimed: Option<i64>,
    pub actual: Option<i64>,
    pub holds: Option<bool>,
}

impl Evaluation {
    fn inapplicable(reason: &'static str) -> Self {
        Evaluation { applicability: Applicability::Inapplicable(reason), claimed: None, actual: None, holds: None }
    }

    fn undecided(reason: &'static str) -> Self {
        Evaluation { applicability: Applicability::Undecided(reason), claimed: None, actual: None, holds: None }
    }

    fn upper(claimed: i64, actual: i64) -> Self {
        Evaluation {
            applicability: Applicability::Applicable,
            claimed: Some(claimed),
            actual: Some(actual),
            holds: Some(actual <= claimed),
        }
    }

    fn lower(claimed: i64, actual: i64) -> Self {
        Evaluation {
            applicability: Applicability::Applicable,
            claimed: Some(claimed),
            actual: Some(actual),
            holds: Some(actual >= claimed),
        }
    }

    fn equality(claimed: i64, actual: i64, holds: bool) -> Self {
        Evaluation {
            applicability: Applicability::Applicable,
            claimed: Some(claimed),
            actual: Some(actual),
            holds: Some(holds),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub id: &'static str,
    pub kind: BoundKind,
    pub applicability: Applicability,
    pub claimed: Option<i64>,
    pub actual: Option<i64>,
    /// For inapplicable entries this may still be filled in, for information only.
    pub holds: Option<bool>,
    pub slack: Option<i64>,
}

impl BoundResult {
    fn new(spec: &BoundSpec, e: Evaluation) -> Self {
        let slack = match (e.claimed, e.actual, spec.kind) {
            (Some(c), Some(a), BoundKind::Upper) => Some(c - a),
            (Some(c), Some(a), BoundKind::Lower) => Some(a - c),
            (Some(c), Some(a), BoundKind::Equality) => Some((c - a).abs()),
            _ => None,
        };
        BoundResult {
            id: spec.id,
            kind: spec.kind,
            applicability: e.applicability,
            claimed: e.claimed,
            actual: e.actual,
            holds: e.holds,
            slack,
        }
    }

    /// An applicable entry that does not hold.
    pub fn is_violation(&self) -> bool {
        self.applicability.is_applicable() && self.holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Exact values computed for the audit, in a fixed order.
    pub invariants: Vec<(&'static str, usize)>,
    pub results: Vec<BoundResult>,
    /// False when some value needed by an entry exceeded the solver limits.
    pub complete: bool,
}

impl BoundReport {
    pub fn pass(&self) -> bool {
        !self.results.iter().any(BoundResult::is_violation)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundResult> {
        self.results.iter().filter(|r| r.is_violation())
    }

    pub fn result(&self, id: &str) -> Option<&BoundResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

/// Structural facts and exact invariants of a graph and its complement.
/// An invariant is `None` when its solver refused the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub order: usize,
    pub connected: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub leaves: usize,
    pub has_isolated: bool,
    pub complete_component: bool,
    /// Some component is a single edge.
    pub k2_component: bool,
    pub is_c5: bool,
    pub hamiltonian: Option<bool>,
    /// `Σ|L| + ϱ` for the breadth-first spanning tree from vertex 0.
    pub peel_bound: Option<usize>,
    pub gamma: Option<usize>,
    pub gamma_2: Option<usize>,
    pub gamma_roman: Option<usize>,
    pub gamma_weak_roman: Option<usize>,
    pub gamma_secure: Option<usize>,
    pub matching: Option<usize>,
    pub rho: Option<usize>,
    pub theta: Option<usize>,
    pub chi: Option<usize>,
    pub tau: Option<usize>,
    pub complement: ComplementProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementProfile {
    pub connected: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_c5: bool,
    pub gamma_weak_roman: Option<usize>,
    pub gamma_secure: Option<usize>,
    pub chi: Option<usize>,
}

fn is_c5(g: &Graph) -> bool {
    g.order() == 5 && g.is_connected() && (0..5).all(|v| g.degree(v) == 2)
}

impl Profile {
    pub fn compute(g: &Graph, solver: &Solver) -> Profile {
        let n = g.order();
        let value = |inv| solver.solve(g, inv).ok().map(|r| r.value);
        use crate::solve::Invariant as I;
        let connected = g.is_connected();
        let peel_bound = if connected && n >= 3 {
            g.spanning_tree(0).ok().and_then(|t| peel(&t).ok()).map(|p| p.secure_bound())
        } else {
            None
        };
        let c = g.complement();
        let cvalue = |inv| solver.solve(&c, inv).ok().map(|r| r.value);
        Profile {
            order: n,
            connected,
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            leaves: g.leaf_count(),
            has_isolated: g.has_isolated_vertex(),
            complete_component: g.component_is_complete(),
            k2_component: g.edges().any(|(u, v)| g.degree(u) == 1 && g.degree(v) == 1),
            is_c5: is_c5(g),
            hamiltonian: if n < 4 { Some(false) } else { g.has_hamiltonian_cycle(solver.limits.hamiltonian).ok() },
            peel_bound,
            gamma: value(I::Domination),
            gamma_2: value(I::KDomination(2)),
            gamma_roman: value(I::Roman),
            gamma_weak_roman: value(I::WeakRoman),
            gamma_secure: value(I::Secure),
            matching: value(I::Matching),
            rho: value(I::TwoPacking),
            theta: value(I::CliqueCover),
            chi: value(I::Chromatic),
            tau: value(I::Tau),
            complement: ComplementProfile {
                connected: c.is_connected(),
                min_degree: c.min_degree(),
                max_degree: c.max_degree(),
                is_c5: is_c5(&c),
                gamma_weak_roman: cvalue(I::WeakRoman),
                gamma_secure: cvalue(I::Secure),
                chi: cvalue(I::Chromatic),
            },
        }
    }

    /// Every computed invariant, by report name.
    pub fn invariants(&self) -> Vec<(&'static str, usize)> {
        [
            ("gamma", self.gamma),
            ("gamma_2", self.gamma_2),
            ("gamma_R", self.gamma_roman),
            ("gamma_r", self.gamma_weak_roman),
            ("gamma_s", self.gamma_secure),
            ("matching", self.matching),
            ("rho", self.rho),
            ("theta", self.theta),
            ("chi", self.chi),
            ("tau", self.tau),
            ("complement.gamma_r", self.complement.gamma_weak_roman),
            ("complement.gamma_s", self.complement.gamma_secure),
            ("complement.chi", self.complement.chi),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }

    /// Whether the refined sum and product hypotheses hold for this side: connected,
    /// not `C_5`, `δ ≥ 2` and `Δ ≤ n − 3`.
    fn refined_hypotheses(&self) -> bool {
        self.connected && !self.is_c5 && self.min_degree >= 2 && self.max_degree + 3 <= self.order
    }

    fn complement_refined_hypotheses(&self) -> bool {
        let c = &self.complement;
        c.connected && !c.is_c5 && c.min_degree >= 2 && c.max_degree + 3 <= self.order
    }
}

/// Values for the product-scope entries of `G □ H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductProfile {
    pub order_g: usize,
    pub order_h: usize,
    pub g_isolated: bool,
    pub h_isolated: bool,
    pub h_complete_component: bool,
    pub gamma_g: Option<usize>,
    pub gamma_h: Option<usize>,
    pub gamma_r_g: Option<usize>,
    pub gamma_r_h: Option<usize>,
    pub gamma_s_g: Option<usize>,
    pub gamma_s_h: Option<usize>,
    pub tau_h: Option<usize>,
    /// `(|V_2|, |Y|)` for the first `γ_r(H)`-function with double guards; the
    /// inner `None` means no such function exists.
    pub two_rows_h: Option<Option<(usize, usize)>>,
    pub gamma_product: Option<usize>,
    pub gamma_r_product: Option<usize>,
    pub gamma_s_product: Option<usize>,
}

impl ProductProfile {
    pub fn compute(g: &Graph, h: &Graph, solver: &Solver) -> ProductProfile {
        use crate::solve::Invariant as I;
        let value = |x: &Graph, inv| solver.solve(x, inv).ok().map(|r| r.value);
        let product = g.cartesian_product(h).ok();
        let pvalue = |inv| product.as_ref().and_then(|p| value(p, inv));
        let two_rows_h = solver
            .weak_roman_with_twos(h)
            .ok()
            .map(|f| f.map(|f| (f.v2().len(), h.dominated_by(f.v2()).complement().len())));
        ProductProfile {
            order_g: g.order(),
            order_h: h.order(),
            g_isolated: g.has_isolated_vertex(),
            h_isolated: h.has_isolated_vertex(),
            h_complete_component: h.component_is_complete(),
            gamma_g: value(g, I::Domination),
            gamma_h: value(h, I::Domination),
            gamma_r_g: value(g, I::WeakRoman),
            gamma_r_h: value(h, I::WeakRoman),
            gamma_s_g: value(g, I::Secure),
            gamma_s_h: value(h, I::Secure),
            tau_h: value(h, I::Tau),
            two_rows_h,
            gamma_product: pvalue(I::Domination),
            gamma_r_product: pvalue(I::WeakRoman),
            gamma_s_product: pvalue(I::Secure),
        }
    }

    pub fn invariants(&self) -> Vec<(&'static str, usize)> {
        [
            ("G.gamma", self.gamma_g),
            ("G.gamma_r", self.gamma_r_g),
            ("G.gamma_s", self.gamma_s_g),
            ("H.gamma", self.gamma_h),
            ("H.gamma_r", self.gamma_r_h),
            ("H.gamma_s", self.gamma_s_h),
            ("H.tau", self.tau_h),
            ("product.gamma", self.gamma_product),
            ("product.gamma_r", self.gamma_r_product),
            ("product.gamma_s", self.gamma_s_product),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }
}

/// Reads an optional exact value or gives up on the entry.
macro_rules! need {
    ($e:expr) => {
        match $e {
            Some(v) => v as i64,
            None => return Evaluation::undecided("a required exact value exceeds the solver limits"),
        }
    };
}

const NO_ISOLATED: &str = "graph has an isolated vertex";
const COMPLETE_COMPONENT: &str = "some component is a complete graph";
const K2_COMPONENT: &str = "some component is a single edge";

fn spec(
    id: &'static str,
    kind: BoundKind,
    target: &'static str,
    statement: &'static str,
    hypotheses: &'static str,
    f: fn(&Profile) -> Evaluation,
) -> BoundSpec {
    BoundSpec { id, kind, target, statement, hypotheses, scope: Scope::Graph, eval: Eval::Graph(f) }
}

fn product_spec(
    id: &'static str,
    kind: BoundKind,
    target: &'static str,
    statement: &'static str,
    hypotheses: &'static str,
    f: fn(&ProductProfile) -> Evaluation,
) -> BoundSpec {
    BoundSpec { id, kind, target, statement, hypotheses, scope: Scope::Product, eval: Eval::Product(f) }
}

fn refined_sum_cap(n: i64) -> i64 {
    if n % 2 == 1 {
        n - 1
    } else {
        n
    }
}

fn refined_product_cap(n: i64) -> i64 {
    if n % 2 == 1 {
        (n - 1) * (n - 1) / 4
    } else {
        n * n / 4
    }
}

/// Refined complement bounds: evaluated even when neither side meets the
/// hypotheses, so that the report shows whether the inequality held anyway.
fn refined(p: &Profile, claimed: i64, actual: i64) -> Evaluation {
    let mut e = Evaluation::upper(claimed, actual);
    if !p.refined_hypotheses() && !p.complement_refined_hypotheses() {
        e.applicability = Applicability::Inapplicable(
            "neither the graph nor its complement is connected, not C_5, with δ ≥ 2 and Δ ≤ n − 3",
        );
    }
    e
}

/// Every entry, in a fixed order with distinct ids.
pub fn registry() -> Vec<BoundSpec> {
    use BoundKind::{Equality, Lower, Upper};
    alloc::vec![
        spec("chain.gamma-le-weak-roman", Lower, "gamma_r", "γ ≤ γ_r", "", |p| {
            Evaluation::lower(need!(p.gamma), need!(p.gamma_weak_roman))
        }),
        spec("chain.weak-roman-le-roman", Upper, "gamma_r", "γ_r ≤ γ_R", "", |p| {
            Evaluation::upper(need!(p.gamma_roman), need!(p.gamma_weak_roman))
        }),
        spec("chain.roman-le-twice-gamma", Upper, "gamma_R", "γ_R ≤ 2γ", "", |p| {
            Evaluation::upper(2 * need!(p.gamma), need!(p.gamma_roman))
        }),
        spec("chain.weak-roman-le-secure", Upper, "gamma_r", "γ_r ≤ γ_s", "", |p| {
            Evaluation::upper(need!(p.gamma_secure), need!(p.gamma_weak_roman))
        }),
        spec("equiv.weak-roman-secure-at-gamma", Equality, "gamma_s", "γ_r = γ ⟺ γ_s = γ", "", |p| {
            let g = need!(p.gamma);
            let r = need!(p.gamma_weak_roman);
            let s = need!(p.gamma_secure);
            Evaluation::equality(i64::from(r == g), i64::from(s == g), (r == g) == (s == g))
        }),
        spec("hamiltonian.secure-le-3n-over-7", Upper, "gamma_s", "γ_s ≤ ⌈3n/7⌉", "Hamiltonian, n ≥ 4", |p| {
            if p.order < 4 {
                return Evaluation::inapplicable("order below 4");
            }
            match p.hamiltonian {
                None => Evaluation::undecided("Hamiltonicity not decided within the limit"),
                Some(false) => Evaluation::inapplicable("not Hamiltonian"),
                Some(true) => Evaluation::upper((3 * p.order as i64 + 6) / 7, need!(p.gamma_secure)),
            }
        }),
        spec("secure-le-two-domination", Upper, "gamma_s", "γ_s ≤ γ_2", "", |p| {
            Evaluation::upper(need!(p.gamma_2), need!(p.gamma_secure))
        }),
        spec("secure-le-half-order", Upper, "gamma_s", "γ_s ≤ ⌊n/2⌋", "connected, δ ≥ 2, not C_5", |p| {
            match half_order_hypotheses(p) {
                Some(reason) => Evaluation::inapplicable(reason),
                None => Evaluation::upper(p.order as i64 / 2, need!(p.gamma_secure)),
            }
        }),
        spec("weak-roman-le-half-order", Upper, "gamma_r", "γ_r ≤ ⌊n/2⌋", "connected, δ ≥ 2, not C_5", |p| {
            match half_order_hypotheses(p) {
                Some(reason) => Evaluation::inapplicable(reason),
                None => Evaluation::upper(p.order as i64 / 2, need!(p.gamma_weak_roman)),
            }
        }),
        spec("weak-roman-le-two-thirds-order", Upper, "gamma_r", "γ_r ≤ ⌊2n/3⌋", "connected, n ≥ 2", |p| {
            if !p.connected || p.order < 2 {
                return Evaluation::inapplicable("not a connected graph of order at least 2");
            }
            Evaluation::upper(2 * p.order as i64 / 3, need!(p.gamma_weak_roman))
        }),
        spec("tree-peel.secure", Upper, "gamma_s", "γ_s ≤ Σ|L_{T_i}(v)| + ϱ(T)", "connected, n ≥ 3", |p| {
            match p.peel_bound {
                None => Evaluation::inapplicable("not a connected graph of order at least 3"),
                Some(b) => Evaluation::upper(b as i64, need!(p.gamma_secure)),
            }
        }),
        // Both ends of a lone edge are leaves, yet one guard defends the pair.
        spec("secure-ge-leaves", Lower, "gamma_s", "γ_s ≥ ℓ", "no component is a single edge", |p| {
            if p.k2_component {
                return Evaluation::inapplicable(K2_COMPONENT);
            }
            Evaluation::lower(p.leaves as i64, need!(p.gamma_secure))
        }),
        spec("secure-le-order-minus-matching", Upper, "gamma_s", "γ_s ≤ n − α′", "no isolated vertex", |p| {
            if p.has_isolated {
                return Evaluation::inapplicable(NO_ISOLATED);
            }
            Evaluation::upper(p.order as i64 - need!(p.matching), need!(p.gamma_secure))
        }),
        spec("secure-le-order-minus-gamma", Upper, "gamma_s", "γ_s ≤ n − γ", "no isolated vertex", |p| {
            if p.has_isolated {
                return Evaluation::inapplicable(NO_ISOLATED);
            }
            Evaluation::upper(p.order as i64 - need!(p.gamma), need!(p.gamma_secure))
        }),
        spec(
            "half-order.equality",
            Equality,
            "gamma_s",
            "γ = n/2 ⟹ γ_r = γ_s = n/2",
            "no isolated vertex, γ = n/2",
            |p| {
                if p.has_isolated {
                    return Evaluation::inapplicable(NO_ISOLATED);
                }
                let g = need!(p.gamma);
                if 2 * g != p.order as i64 {
                    return Evaluation::inapplicable("γ differs from n/2");
                }
                let r = need!(p.gamma_weak_roman);
                let s = need!(p.gamma_secure);
                Evaluation::equality(g, s, r == g && s == g)
            }
        ),
        spec(
            "tau.secure-le-order-minus-gamma-tau",
            Upper,
            "gamma_s",
            "γ_s ≤ n − γ − τ",
            "no complete component",
            |p| {
                if p.complete_component {
                    return Evaluation::inapplicable(COMPLETE_COMPONENT);
                }
                Evaluation::upper(p.order as i64 - need!(p.gamma) - need!(p.tau), need!(p.gamma_secure))
            }
        ),
        spec(
            "tau.secure-le-order-minus-rho-tau",
            Upper,
            "gamma_s",
            "γ_s ≤ n − ρ − τ",
            "no complete component",
            |p| {
                if p.complete_component {
                    return Evaluation::inapplicable(COMPLETE_COMPONENT);
                }
                Evaluation::upper(p.order as i64 - need!(p.rho) - need!(p.tau), need!(p.gamma_secure))
            }
        ),
        spec(
            "tau.secure-le-degree-form",
            Upper,
            "gamma_s",
            "γ_s ≤ ⌊nΔ/(Δ+1)⌋ − τ",
            "no complete component",
            |p| {
                if p.complete_component {
                    return Evaluation::inapplicable(COMPLETE_COMPONENT);
                }
                let (n, d) = (p.order as i64, p.max_degree as i64);
                Evaluation::upper(n * d / (d + 1) - need!(p.tau), need!(p.gamma_secure))
            }
        ),
        spec(
            "tau.weak-roman-le-half-order-gamma-tau",
            Upper,
            "gamma_r",
            "γ_r ≤ ⌊(n + γ − τ)/2⌋",
            "no complete component",
            |p| {
                if p.complete_component {
                    return Evaluation::inapplicable(COMPLETE_COMPONENT);
                }
                Evaluation::upper(
                    (p.order as i64 + need!(p.gamma) - need!(p.tau)).div_euclid(2),
                    need!(p.gamma_weak_roman),
                )
            }
        ),
        spec(
            "tau.weak-roman-le-twice-gamma-minus-tau",
            Upper,
            "gamma_r",
            "γ ≥ n/3 ⟹ γ_r ≤ 2γ − τ",
            "no complete component, 3γ ≥ n",
            |p| {
                if p.complete_component {
                    return Evaluation::inapplicable(COMPLETE_COMPONENT);
                }
                let g = need!(p.gamma);
                if 3 * g < p.order as i64 {
                    return Evaluation::inapplicable("γ below n/3");
                }
                Evaluation::upper(2 * g - need!(p.tau), need!(p.gamma_weak_roman))
            }
        ),
        spec("secure-le-clique-cover", Upper, "gamma_s", "γ_s ≤ θ", "", |p| {
            Evaluation::upper(need!(p.theta), need!(p.gamma_secure))
        }),
        spec(
            "complement.weak-roman-sum-le-secure-sum",
            Upper,
            "gamma_r + complement",
            "γ_r(G) + γ_r(Ḡ) ≤ γ_s(G) + γ_s(Ḡ)",
            "",
            |p| {
                let c = &p.complement;
                Evaluation::upper(
                    need!(p.gamma_secure) + need!(c.gamma_secure),
                    need!(p.gamma_weak_roman) + need!(c.gamma_weak_roman),
                )
            }
        ),
        spec("complement.secure-sum", Upper, "gamma_s + complement", "γ_s(G) + γ_s(Ḡ) ≤ n + 1", "", |p| {
            Evaluation::upper(p.order as i64 + 1, need!(p.gamma_secure) + need!(p.complement.gamma_secure))
        }),
        spec(
            "complement.weak-roman-product-le-secure-product",
            Upper,
            "gamma_r * complement",
            "γ_r(G)γ_r(Ḡ) ≤ γ_s(G)γ_s(Ḡ)",
            "",
            |p| {
                let c = &p.complement;
                Evaluation::upper(
                    need!(p.gamma_secure) * need!(c.gamma_secure),
                    need!(p.gamma_weak_roman) * need!(c.gamma_weak_roman),
                )
            }
        ),
        spec(
            "complement.secure-product",
            Upper,
            "gamma_s * complement",
            "γ_s(G)γ_s(Ḡ) ≤ ⌊(n+1)²/4⌋",
            "",
            |p| {
                let n = p.order as i64;
                Evaluation::upper((n + 1) * (n + 1) / 4, need!(p.gamma_secure) * need!(p.complement.gamma_secure))
            }
        ),
        spec(
            "complement.refined-secure-sum",
            Upper,
            "gamma_s + complement",
            "γ_s(G) + γ_s(Ḡ) ≤ n − 1 (n odd), ≤ n (n even)",
            "G or Ḡ connected, not C_5, δ ≥ 2, Δ ≤ n − 3",
            |p| {
                let actual = need!(p.gamma_secure) + need!(p.complement.gamma_secure);
                refined(p, refined_sum_cap(p.order as i64), actual)
            },
        ),
        spec(
            "complement.refined-secure-product",
            Upper,
            "gamma_s * complement",
            "γ_s(G)γ_s(Ḡ) ≤ ⌊(n−1)²/4⌋ (n odd), ≤ n²/4 (n even)",
            "G or Ḡ connected, not C_5, δ ≥ 2, Δ ≤ n − 3",
            |p| {
                let actual = need!(p.gamma_secure) * need!(p.complement.gamma_secure);
                refined(p, refined_product_cap(p.order as i64), actual)
            },
        ),
        spec("complement.chromatic-sum", Upper, "chi + complement", "χ(G) + χ(Ḡ) ≤ n + 1", "", |p| {
            Evaluation::upper(p.order as i64 + 1, need!(p.chi) + need!(p.complement.chi))
        }),
        spec("complement.chromatic-product", Upper, "chi * complement", "χ(G)χ(Ḡ) ≤ ⌊(n+1)²/4⌋", "", |p| {
            let n = p.order as i64;
            Evaluation::upper((n + 1) * (n + 1) / 4, need!(p.chi) * need!(p.complement.chi))
        }),
        spec("packing-le-gamma", Upper, "rho", "ρ ≤ γ", "", |p| {
            Evaluation::upper(need!(p.gamma), need!(p.rho))
        }),
        spec("matching-ge-gamma", Lower, "matching", "α′ ≥ γ", "no isolated vertex", |p| {
            if p.has_isolated {
                return Evaluation::inapplicable(NO_ISOLATED);
            }
            Evaluation::lower(need!(p.gamma), need!(p.matching))
        }),
        product_spec("product.gamma-ge-min-order", Lower, "gamma(GxH)", "γ(G□H) ≥ min{n(G), n(H)}", "", |q| {
            Evaluation::lower(q.order_g.min(q.order_h) as i64, need!(q.gamma_product))
        }),
        product_spec(
            "product.weak-roman-ge-min-order",
            Lower,
            "gamma_r(GxH)",
            "γ_r(G□H) ≥ min{n(G), n(H)}",
            "",
            |q| { Evaluation::lower(q.order_g.min(q.order_h) as i64, need!(q.gamma_r_product)) }
        ),
        product_spec(
            "product.weak-roman-le-lift",
            Upper,
            "gamma_r(GxH)",
            "γ_r(G□H) ≤ min{n(G)γ_r(H), n(H)γ_r(G)}",
            "",
            |q| {
                let claimed = (q.order_g as i64 * need!(q.gamma_r_h)).min(q.order_h as i64 * need!(q.gamma_r_g));
                Evaluation::upper(claimed, need!(q.gamma_r_product))
            }
        ),
        product_spec(
            "product.secure-ge-min-order",
            Lower,
            "gamma_s(GxH)",
            "γ_s(G□H) ≥ min{n(G), n(H)}",
            "",
            |q| { Evaluation::lower(q.order_g.min(q.order_h) as i64, need!(q.gamma_s_product)) }
        ),
        product_spec(
            "product.secure-le-lift",
            Upper,
            "gamma_s(GxH)",
            "γ_s(G□H) ≤ min{n(G)γ_s(H), n(H)γ_s(G)}",
            "",
            |q| {
                let claimed = (q.order_g as i64 * need!(q.gamma_s_h)).min(q.order_h as i64 * need!(q.gamma_s_g));
                Evaluation::upper(claimed, need!(q.gamma_s_product))
            }
        ),
        product_spec(
            "product.secure-le-cartesian-formula",
            Upper,
            "gamma_s(GxH)",
            "γ_s(G□H) ≤ n(G)γ(H) + n(H)γ(G) − 2γ(G)γ(H) − γ(G)τ(H)",
            "H has no complete component, n(G) ≥ 2",
            |q| {
                if q.h_complete_component {
                    return Evaluation::inapplicable("some component of H is a complete graph");
                }
                if q.order_g < 2 {
                    return Evaluation::inapplicable("G is trivial");
                }
                let (ng, nh) = (q.order_g as i64, q.order_h as i64);
                let (gg, gh, th) = (need!(q.gamma_g), need!(q.gamma_h), need!(q.tau_h));
                Evaluation::upper(ng * gh + nh * gg - 2 * gg * gh - gg * th, need!(q.gamma_s_product))
            },
        ),
        product_spec(
            "product.cartesian-formula-le-half",
            Upper,
            "formula",
            "n(G)γ(H) + n(H)γ(G) − 2γ(G)γ(H) ≤ ⌊n(G)n(H)/2⌋",
            "no isolated vertex in G or H",
            |q| {
                if q.g_isolated || q.h_isolated {
                    return Evaluation::inapplicable("G or H has an isolated vertex");
                }
                let (ng, nh) = (q.order_g as i64, q.order_h as i64);
                let (gg, gh) = (need!(q.gamma_g), need!(q.gamma_h));
                Evaluation::upper(ng * nh / 2, ng * gh + nh * gg - 2 * gg * gh)
            },
        ),
        product_spec(
            "product.weak-roman-le-two-rows",
            Upper,
            "gamma_r(GxH)",
            "γ_r(G□H) ≤ 2n(G)|V_2| + |Y|γ_r(G)",
            "H has a γ_r(H)-function with V_2 ≠ ∅",
            |q| match q.two_rows_h {
                None => Evaluation::undecided("a required exact value exceeds the solver limits"),
                Some(None) => Evaluation::inapplicable("no γ_r(H)-function places a double guard"),
                Some(Some((v2, y))) => {
                    let claimed = 2 * q.order_g as i64 * v2 as i64 + y as i64 * need!(q.gamma_r_g);
                    Evaluation::upper(claimed, need!(q.gamma_r_product))
                }
            },
        ),
    ]
}

fn half_order_hypotheses(p: &Profile) -> Option<&'static str> {
    if !p.connected {
        Some("not connected")
    } else if p.min_degree < 2 {
        Some("minimum degree below 2")
    } else if p.is_c5 {
        Some("graph is C_5")
    } else {
        None
    }
}

fn report(
    specs: &[BoundSpec],
    invariants: Vec<(&'static str, usize)>,
    mut run: impl FnMut(&Eval) -> Option<Evaluation>,
) -> BoundReport {
    let results: Vec<BoundResult> = specs.iter().filter_map(|s| run(&s.eval).map(|e| BoundResult::new(s, e))).collect();
    let complete = !results.iter().any(|r| matches!(r.applicability, Applicability::Undecided(_)));
    BoundReport { invariants, results, complete }
}

/// Evaluates every single-graph entry on `g`.
pub fn audit(g: &Graph, solver: &Solver) -> BoundReport {
    audit_profile(&Profile::compute(g, solver))
}

pub fn audit_profile(p: &Profile) -> BoundReport {
    report(&registry(), p.invariants(), |e| match e {
        Eval::Graph(f) => Some(f(p)),
        Eval::Product(_) => None,
    })
}

/// Evaluates every product entry on `g □ h`.
pub fn audit_product(g: &Graph, h: &Graph, solver: &Solver) -> BoundReport {
    let q = ProductProfile::compute(g, h, solver);
    report(&registry(), q.invariants(), |e| match e {
        Eval::Graph(_) => None,
        Eval::Product(f) => Some(f(&q)),
    })
}

/// Weak Roman and secure domination of a graph next to its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NordhausGaddum {
    pub order: usize,
    pub gamma_r: usize,
    pub gamma_r_complement: usize,
    pub gamma_s: usize,
    pub gamma_s_complement: usize,
    /// Which side met the refined hypotheses: `"graph"`, `"complement"`, `"both"` or `None`.
    pub refined_side: Option<&'static str>,
    /// The complement entries of the registry.
    pub checks: Vec<BoundResult>,
}

impl NordhausGaddum {
    pub fn secure_sum(&self) -> usize {
        self.gamma_s + self.gamma_s_complement
    }

    pub fn secure_product(&self) -> usize {
        self.gamma_s * self.gamma_s_complement
    }

    pub fn weak_roman_sum(&self) -> usize {
        self.gamma_r + self.gamma_r_complement
    }

    pub fn weak_roman_product(&self) -> usize {
        self.gamma_r * self.gamma_r_complement
    }
}

pub fn nordhaus_gaddum(g: &Graph, solver: &Solver) -> Result<NordhausGaddum, crate::error::SolveError> {
    let c = g.complement();
    let gamma_r = solver.gamma_weak_roman(g)?.value;
    let gamma_s = solver.gamma_secure(g)?.value;
    let gamma_r_complement = solver.gamma_weak_roman(&c)?.value;
    let gamma_s_complement = solver.gamma_secure(&c)?.value;
    let p = Profile::compute(g, solver);
    let refined_side = match (p.refined_hypotheses(), p.complement_refined_hypotheses()) {
        (true, true) => Some("both"),
        (true, false) => Some("graph"),
        (false, true) => Some("complement"),
        (false, false) => None,
    };
    let checks = audit_profile(&p).results.into_iter().filter(|r| r.id.starts_with("complement.")).collect();
    Ok(NordhausGaddum {
        order: g.order(),
        gamma_r,
        gamma_r_complement,
        gamma_s,
        gamma_s_complement,
        refined_side,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use alloc::collections::BTreeSet;

    fn gen(f: FamilySpec) -> Graph {
        Graph::generate(f).unwrap()
    }

    #[test]
    fn registry_ids_are_distinct() {
        let r = registry();
        assert!(r.len() >= 20);
        let ids: BTreeSet<_> = r.iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), r.len());
    }

    #[test]
    fn c5_audit() {
        let rep = audit(&gen(FamilySpec::Cycle(5)), &Solver::default());
        assert!(rep.pass() && rep.complete);
        let half = rep.result("secure-le-half-order").unwrap();
        assert!(matches!(half.applicability, Applicability::Inapplicable(_)));
        let ham = rep.result("hamiltonian.secure-le-3n-over-7").unwrap();
        assert_eq!((ham.applicability, ham.slack), (Applicability::Applicable, Some(0)));
    }

    #[test]
    fn k5_minus_edge_tau_tight() {
        let g = gen(FamilySpec::Complete(5)).remove_edge(3, 4).unwrap();
        let rep = audit(&g, &Solver::default());
        let tau = rep.result("tau.secure-le-order-minus-gamma-tau").unwrap();
        assert_eq!((tau.claimed, tau.actual, tau.slack), (Some(2), Some(2), Some(0)));
        assert!(rep.pass());
    }

    #[test]
    fn tau_bounds_skip_complete_components() {
        let g = gen(FamilySpec::Complete(3)).disjoint_union(&gen(FamilySpec::Path(3))).unwrap();
        let rep = audit(&g, &Solver::default());
        for r in rep.results.iter().filter(|r| r.id.starts_with("tau.")) {
            assert!(matches!(r.applicability, Applicability::Inapplicable(_)), "{}", r.id);
        }
    }

    #[test]
    fn half_order_equality_on_corona() {
        let g = gen(FamilySpec::Cycle(3)).corona(1).unwrap();
        let rep = audit(&g, &Solver::default());
        let r = rep.result("half-order.equality").unwrap();
        assert_eq!((r.applicability, r.holds, r.actual), (Applicability::Applicable, Some(true), Some(3)));
    }

    #[test]
    fn half_order_equality_needs_no_isolated_vertex() {
        // γ = 2 = n/2 but γ_s = 3 because the isolated vertex must be guarded.
        let g = Graph::empty(1).unwrap().disjoint_union(&gen(FamilySpec::Path(3))).unwrap();
        let rep = audit(&g, &Solver::default());
        let r = rep.result("half-order.equality").unwrap();
        assert!(matches!(r.applicability, Applicability::Inapplicable(_)));
        assert!(rep.pass());
    }

    #[test]
    fn leaf_bound_skips_single_edge_components() {
        // ℓ(K_2) = 2 but γ_s(K_2) = 1.
        let k2 = gen(FamilySpec::Path(2));
        let rep = audit(&k2, &Solver::default());
        let r = rep.result("secure-ge-leaves").unwrap();
        assert!(matches!(r.applicability, Applicability::Inapplicable(_)));
        assert!(rep.pass());
        let corona = audit(&gen(FamilySpec::Path(3)).corona(2).unwrap(), &Solver::default());
        let r = corona.result("secure-ge-leaves").unwrap();
        assert_eq!((r.applicability, r.slack), (Applicability::Applicable, Some(0)));
    }

    #[test]
    fn self_complementary_tightness() {
        let bull = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let ng = nordhaus_gaddum(&bull, &Solver::default()).unwrap();
        assert_eq!((ng.secure_sum(), ng.secure_product()), (6, 9));
        let c5 = nordhaus_gaddum(&gen(FamilySpec::Cycle(5)), &Solver::default()).unwrap();
        assert_eq!(c5.secure_sum(), 6);
        let k1 = nordhaus_gaddum(&Graph::empty(1).unwrap(), &Solver::default()).unwrap();
        assert_eq!(k1.secure_sum(), 2);
    }

    #[test]
    fn product_audit_examples() {
        let solver = Solver::default();
        let p3 = gen(FamilySpec::Path(3));
        let rep = audit_product(&p3, &p3, &solver);
        assert!(rep.pass() && rep.complete);
        let r = rep.result("product.secure-le-cartesian-formula").unwrap();
        assert_eq!(r.claimed, Some(4));

        let broom = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8)]).unwrap();
        let rep = audit_product(&gen(FamilySpec::Complete(3)), &broom, &solver);
        let r = rep.result("product.weak-roman-le-two-rows").unwrap();
        assert_eq!((r.claimed, r.actual), (Some(8), Some(8)));
    }
}
