use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use alloc::vec::Vec;

use crate::error::ParseError;

/// A subset of the vertices `0..universe` of some graph, stored as one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        VertexSet { bits: 0, universe: universe as u8 }
    }

    pub fn full(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        VertexSet { bits: full_mask(universe), universe: universe as u8 }
    }

    /// Builds a set from a raw mask; bits at or above `universe` are dropped.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        debug_assert!(universe <= 64);
        VertexSet { bits: bits & full_mask(universe), universe: universe as u8 }
    }

    pub fn singleton(v: usize, universe: usize) -> Self {
        assert!(v < universe, "vertex {v} outside universe {universe}");
        VertexSet { bits: 1 << v, universe: universe as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I, universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s = s.with(v);
        }
        s
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe);
        VertexSet { bits: self.bits | 1 << v, ..self }
    }

    pub fn without(self, v: usize) -> Self {
        if v >= 64 {
            return self;
        }
        VertexSet { bits: self.bits & !(1 << v), ..self }
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet { bits: self.bits | other.bits, universe: self.universe.max(other.universe) }
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet { bits: self.bits & other.bits, ..self }
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet { bits: self.bits & !other.bits, ..self }
    }

    pub fn complement(self) -> Self {
        VertexSet { bits: !self.bits & full_mask(self.universe()), ..self }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Parses the comma-separated index form, e.g. `"0,2,5"`. The empty string is the empty set.
    pub fn parse(text: &str, universe: usize) -> Result<Self, ParseError> {
        let mut set = Self::empty(universe);
        let text = text.trim();
        if text.is_empty() {
            return Ok(set);
        }
        let mut offset = 0;
        for token in text.split(',') {
            let trimmed = token.trim();
            let v: usize = trimmed.parse().map_err(|_| ParseError::BadToken { offset, token: trimmed.into() })?;
            if v >= universe {
                return Err(ParseError::VertexOutOfRange { offset, vertex: v, n: universe });
            }
            set = set.with(v);
            offset += token.len() + 1;
        }
        Ok(set)
    }
}

/// Iterator over the members of a [`VertexSet`] in ascending order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}/{}", self.universe)
    }
}
