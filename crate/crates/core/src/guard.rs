//! Guard functions `f: V → {0,1,2}` and the protection predicates built on them.
//!
//! A vertex is *undefended* under `f` when its closed neighbourhood holds no
//! guard. Every verifier here reduces to that predicate plus, for the weak
//! Roman and secure classes, the single-guard slide `u → v`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{ParseError, ProtectionError};
use crate::graph::Graph;
use crate::set::{full_mask, VertexSet};

/// Guard counts per vertex, stored as the two masks `V_1` and `V_2`.
///
/// Values are capped at 2: every protection class handled here uses at most two
/// guards per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GuardFunction {
    ones: u64,
    twos: u64,
    n: u8,
}

impl GuardFunction {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= 64);
        GuardFunction { ones: 0, twos: 0, n: n as u8 }
    }

    /// The function that places one guard on each member of `s`.
    pub fn from_set(s: VertexSet) -> Self {
        GuardFunction { ones: s.bits(), twos: 0, n: s.universe() as u8 }
    }

    pub fn from_masks(ones: VertexSet, twos: VertexSet) -> Self {
        assert!(ones.is_disjoint(twos), "a vertex cannot hold both one and two guards");
        GuardFunction { ones: ones.bits(), twos: twos.bits(), n: ones.universe().max(twos.universe()) as u8 }
    }

    pub fn from_values(values: &[u8]) -> Result<Self, ParseError> {
        if values.len() > 64 {
            return Err(ParseError::WrongLength { expected: 64, found: values.len() });
        }
        let mut f = Self::zeros(values.len());
        for (v, &x) in values.iter().enumerate() {
            if x > 2 {
                return Err(ParseError::BadGuardValue { offset: v, value: x as usize });
            }
            f = f.with(v, x);
        }
        Ok(f)
    }

    /// Parses `"2,0,1,0"`; `n` is the order the function must cover.
    pub fn parse(text: &str, n: usize) -> Result<Self, ParseError> {
        let mut values = Vec::with_capacity(n);
        let mut offset = 0;
        let text = text.trim();
        if !text.is_empty() {
            for token in text.split(',') {
                let t = token.trim();
                let x: usize = t.parse().map_err(|_| ParseError::BadToken { offset, token: t.into() })?;
                if x > 2 {
                    return Err(ParseError::BadGuardValue { offset, value: x });
                }
                values.push(x as u8);
                offset += token.len() + 1;
            }
        }
        if values.len() != n {
            return Err(ParseError::WrongLength { expected: n, found: values.len() });
        }
        Self::from_values(&values)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, v: usize) -> u8 {
        ((self.ones >> v & 1) + 2 * (self.twos >> v & 1)) as u8
    }

    /// Copy of `self` with `f(v) = value`.
    pub fn with(self, v: usize, value: u8) -> Self {
        assert!(v < self.order() && value <= 2);
        let bit = 1u64 << v;
        let (mut ones, mut twos) = (self.ones & !bit, self.twos & !bit);
        match value {
            1 => ones |= bit,
            2 => twos |= bit,
            _ => {}
        }
        GuardFunction { ones, twos, ..self }
    }

    /// `w(f) = |V_1| + 2|V_2|`.
    pub fn weight(&self) -> usize {
        self.ones.count_ones() as usize + 2 * self.twos.count_ones() as usize
    }

    pub fn v0(&self) -> VertexSet {
        VertexSet::from_bits(!(self.ones | self.twos) & full_mask(self.order()), self.order())
    }

    pub fn v1(&self) -> VertexSet {
        VertexSet::from_bits(self.ones, self.order())
    }

    pub fn v2(&self) -> VertexSet {
        VertexSet::from_bits(self.twos, self.order())
    }

    /// `V_1 ∪ V_2`.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_bits(self.ones | self.twos, self.order())
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.order()).map(|v| self.get(v)).collect()
    }

    /// The function after one guard slides from `from` to `to`.
    pub fn slide(self, from: usize, to: usize) -> Self {
        let f = self.with(from, self.get(from) - 1);
        f.with(to, f.get(to) + 1)
    }
}

impl fmt::Display for GuardFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.order() {
            if v > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(v))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GuardFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GuardFunction[{self}]")
    }
}

/// One candidate defence of an attacked vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveWitness {
    pub attacked: usize,
    pub defender: usize,
    /// Whether the slide `defender → attacked` leaves no vertex undefended.
    pub valid: bool,
}

#[inline]
fn undefended_bits(g: &Graph, guarded: u64) -> u64 {
    let mut covered = 0u64;
    let mut rest = guarded;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        covered |= g.closed_row(v);
    }
    !covered & full_mask(g.order())
}

fn check_order(g: &Graph, n: usize) {
    assert_eq!(g.order(), n, "object covers {n} vertices but the graph has {}", g.order());
}

/// Vertices with no guard in their closed neighbourhood.
pub fn undefended(g: &Graph, f: &GuardFunction) -> VertexSet {
    check_order(g, f.order());
    VertexSet::from_bits(undefended_bits(g, f.ones | f.twos), g.order())
}

/// Whether `s` is a dominating set, i.e. `f(V∖s, s)` is a dominating function.
pub fn is_df(g: &Graph, s: VertexSet) -> bool {
    check_order(g, s.universe());
    undefended_bits(g, s.bits()) == 0
}

/// Every vertex with no guard has a neighbour holding two.
pub fn is_rdf(g: &Graph, f: &GuardFunction) -> bool {
    check_order(g, f.order());
    let mut covered = f.ones | f.twos;
    for v in f.v2() {
        covered |= g.row(v);
    }
    covered & full_mask(g.order()) == full_mask(g.order())
}

/// Whether sliding one guard `u → v` leaves no undefended vertex.
#[inline]
fn slide_ok(g: &Graph, f: &GuardFunction, u: usize, v: usize) -> bool {
    let mut guarded = f.ones | f.twos | 1 << v;
    if f.twos >> u & 1 == 0 {
        guarded &= !(1 << u);
    }
    undefended_bits(g, guarded) == 0
}

/// Weak Roman domination: no undefended vertex, and every unguarded vertex has a
/// guarded neighbour whose guard can slide to it without leaving a vertex undefended.
pub fn is_wrdf(g: &Graph, f: &GuardFunction) -> bool {
    check_order(g, f.order());
    let guarded = f.ones | f.twos;
    if undefended_bits(g, guarded) != 0 {
        return false;
    }
    f.v0().iter().all(|v| VertexSet::from_bits(g.row(v) & guarded, g.order()).iter().any(|u| slide_ok(g, f, u, v)))
}

/// `s` dominates and every outside vertex `v` has a neighbour `u ∈ s` such that
/// `(s ∖ {u}) ∪ {v}` dominates.
pub fn is_secure_dominating(g: &Graph, s: VertexSet) -> bool {
    if !is_df(g, s) {
        return false;
    }
    s.complement()
        .iter()
        .all(|v| VertexSet::from_bits(g.row(v) & s.bits(), g.order()).iter().any(|u| is_df(g, s.without(u).with(v))))
}

/// Every vertex outside `s` has at least `k` neighbours in `s`.
pub fn is_k_dominating(g: &Graph, s: VertexSet, k: usize) -> bool {
    check_order(g, s.universe());
    s.complement().iter().all(|v| (g.row(v) & s.bits()).count_ones() as usize >= k)
}

/// Every guarded neighbour of `attacked`, each marked with whether its slide is safe.
pub fn defense_moves(g: &Graph, f: &GuardFunction, attacked: usize) -> Result<Vec<MoveWitness>, ProtectionError> {
    check_order(g, f.order());
    if attacked >= g.order() {
        return Err(ProtectionError::VertexOutOfRange { v: attacked, n: g.order() });
    }
    if f.get(attacked) != 0 {
        return Err(ProtectionError::AttackedVertexGuarded { v: attacked });
    }
    let defenders = VertexSet::from_bits(g.row(attacked) & (f.ones | f.twos), g.order());
    Ok(defenders.iter().map(|u| MoveWitness { attacked, defender: u, valid: slide_ok(g, f, u, attacked) }).collect())
}
