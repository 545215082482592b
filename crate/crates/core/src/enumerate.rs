//! One graph per isomorphism class, for small orders.
//!
//! Candidates are the labelled graphs whose degrees are non-increasing in
//! vertex order. Any isomorphism between two such graphs maps each block of
//! equal-degree positions onto itself, so the canonical form is the largest
//! edge code over block-preserving permutations, and a candidate is kept when
//! it already has that code.

use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;

/// Orders above this take too long to enumerate edge subsets.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Pair list `(0,1), (0,2), …, (n−2,n−1)`; bit `i` of an edge code is pair `i`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every graph of order `n` up to isomorphism, optionally only the connected ones.
pub fn graphs_up_to_isomorphism(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::TooLarge { n, limit: MAX_ENUMERATION_ORDER });
    }
    let pairs = pairs(n);
    let m = pairs.len();
    let mut out = Vec::new();
    let mut adj = alloc::vec![0u64; n];
    for code in 0u64..(1u64 << m) {
        adj.iter_mut().for_each(|r| *r = 0);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
        if deg.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        if !is_canonical(&adj, &deg, &pairs, code) {
            continue;
        }
        let g = Graph::from_adjacency(adj.clone())?;
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

fn is_canonical(adj: &[u64], deg: &[u32], pairs: &[(usize, usize)], code: u64) -> bool {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    // Blocks of equal degree: [start, end).
    let mut blocks = Vec::new();
    let mut start = 0;
    for v in 1..=n {
        if v == n || deg[v] != deg[start] {
            blocks.push((start, v));
            start = v;
        }
    }
    !any_larger(adj, pairs, code, &blocks, 0, &mut perm)
}

/// Whether some block-preserving relabelling gives a larger edge code.
fn any_larger(
    adj: &[u64],
    pairs: &[(usize, usize)],
    code: u64,
    blocks: &[(usize, usize)],
    block: usize,
    perm: &mut Vec<usize>,
) -> bool {
    if block == blocks.len() {
        let mut relabelled = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if adj[perm[u]] >> perm[v] & 1 == 1 {
                relabelled |= 1 << i;
            }
        }
        return relabelled > code;
    }
    let (lo, hi) = blocks[block];
    permute(adj, pairs, code, blocks, block, perm, lo, hi)
}

#[allow(clippy::too_many_arguments)]
fn permute(
    adj: &[u64],
    pairs: &[(usize, usize)],
    code: u64,
    blocks: &[(usize, usize)],
    block: usize,
    perm: &mut Vec<usize>,
    k: usize,
    hi: usize,
) -> bool {
    if k == hi {
        return any_larger(adj, pairs, code, blocks, block + 1, perm);
    }
    for i in k..hi {
        perm.swap(k, i);
        let found = permute(adj, pairs, code, blocks, block, perm, k + 1, hi);
        perm.swap(k, i);
        if found {
            return true;
        }
    }
    false
}
