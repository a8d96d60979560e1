//! Named families, exhaustive enumerators and a seeded random generator.

use std::ops::{Range, RangeInclusive};
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::{Graph, GraphError, MAX_VERTICES};
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
    Hypercube,
    Petersen,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" | "k" => Family::Complete,
            "cycle" | "c" => Family::Cycle,
            "path" | "p" => Family::Path,
            "star" | "s" => Family::Star,
            "hypercube" | "cube" | "q" => Family::Hypercube,
            "petersen" => Family::Petersen,
            other => return Err(format!("unknown graph family {other:?}")),
        })
    }
}

/// Builds a standard graph. `size` is the vertex count, except for
/// `Hypercube` where it is the dimension; `Petersen` ignores it.
///
/// Labeling: paths and cycles run `0, 1, 2, ...`; the star centre is `0`;
/// hypercube vertices are the integers whose binary strings differ in one bit;
/// the Petersen graph has outer cycle `0..5`, spokes `i -- i+5` and inner
/// pentagram `5+i -- 5+(i+2)%5`.
pub fn named_graph(family: Family, size: usize) -> Result<Graph, GraphError> {
    let min = match family {
        Family::Complete | Family::Path | Family::Star => 1,
        Family::Cycle => 3,
        Family::Hypercube => 1,
        Family::Petersen => 0,
    };
    if size < min {
        return Err(GraphError::BelowMinimum { family: family.name(), size, min });
    }
    match family {
        Family::Complete => {
            Graph::from_edges(size, (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))))
        }
        Family::Cycle => Graph::from_edges(size, (0..size).map(|v| (v, (v + 1) % size))),
        Family::Path => Graph::from_edges(size, (1..size).map(|v| (v - 1, v))),
        Family::Star => Graph::from_edges(size, (1..size).map(|v| (0, v))),
        Family::Hypercube => {
            if size > 6 {
                return Err(GraphError::BadOrder(1usize.checked_shl(size as u32).unwrap_or(usize::MAX)));
            }
            let n = 1usize << size;
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| (0..size).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v),
            )
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
    }
}

pub const MAX_TREE_ORDER: usize = 10;

/// Number of labeled trees on `n` vertices (Cayley).
pub fn tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Every labeled tree on `n` vertices, once each, via Prüfer decoding.
pub fn all_trees(n: usize) -> Result<TreeIter, GraphError> {
    TreeIter::with_range(n, 0..tree_count(n))
}

/// Prüfer sequences in lexicographic order, decoded on the fly. The sequence
/// with index `i` has base-`n` digits of `i` (most significant first).
#[derive(Debug, Clone)]
pub struct TreeIter {
    n: usize,
    next: u64,
    end: u64,
    seq: [u8; MAX_TREE_ORDER],
}

impl TreeIter {
    /// Trees whose Prüfer index falls in `range` (clamped to the count).
    pub fn with_range(n: usize, range: Range<u64>) -> Result<Self, GraphError> {
        if !(1..=MAX_TREE_ORDER).contains(&n) {
            return Err(GraphError::EnumerationRange { n, min: 1, max: MAX_TREE_ORDER });
        }
        let end = range.end.min(tree_count(n));
        let mut it = TreeIter { n, next: range.start, end, seq: [0; MAX_TREE_ORDER] };
        if n > 2 {
            let mut idx = range.start;
            for k in (0..n - 2).rev() {
                it.seq[k] = (idx % n as u64) as u8;
                idx /= n as u64;
            }
        }
        Ok(it)
    }

    /// Decodes the current sequence into `out` and advances. Returns false
    /// when exhausted. Reuses `out`'s storage.
    pub fn next_into(&mut self, out: &mut Graph) -> bool {
        if self.next >= self.end {
            return false;
        }
        let n = self.n;
        out.clear(n);
        if n == 2 {
            out.add_edge_unchecked(0, 1);
        } else if n > 2 {
            let seq = &self.seq[..n - 2];
            let mut deg = [1u8; MAX_TREE_ORDER];
            for &a in seq {
                deg[a as usize] += 1;
            }
            let mut leaves = 0u64;
            for (v, &d) in deg[..n].iter().enumerate() {
                if d == 1 {
                    leaves |= 1 << v;
                }
            }
            for &a in seq {
                let leaf = leaves.trailing_zeros() as usize;
                leaves &= leaves - 1;
                let a = a as usize;
                out.add_edge_unchecked(leaf, a);
                deg[a] -= 1;
                if deg[a] == 1 {
                    leaves |= 1 << a;
                }
            }
            let u = leaves.trailing_zeros() as usize;
            leaves &= leaves - 1;
            out.add_edge_unchecked(u, leaves.trailing_zeros() as usize);
            // odometer increment
            for k in (0..n - 2).rev() {
                self.seq[k] += 1;
                if (self.seq[k] as usize) < n {
                    break;
                }
                self.seq[k] = 0;
            }
        }
        self.next += 1;
        true
    }
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut g = Graph::empty(self.n).expect("order validated");
        self.next_into(&mut g).then_some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end.saturating_sub(self.next)) as usize;
        (left, Some(left))
    }
}

pub const MAX_ENUMERATED_GRAPH_ORDER: usize = 7;

/// Number of labeled graphs on `n` vertices.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `n` vertices. Graph `i` contains pair `k` (pairs
/// ordered `(0,1), (0,2), (1,2), (0,3), ...`) iff bit `k` of `i` is set.
pub fn all_graphs(n: usize) -> Result<GraphIter, GraphError> {
    GraphIter::with_range(n, 0..graph_count(n), false)
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<GraphIter, GraphError> {
    GraphIter::with_range(n, 0..graph_count(n), true)
}

#[derive(Debug, Clone)]
pub struct GraphIter {
    n: usize,
    next: u64,
    end: u64,
    connected_only: bool,
    pairs: Vec<(u8, u8)>,
}

impl GraphIter {
    pub fn with_range(n: usize, range: Range<u64>, connected_only: bool) -> Result<Self, GraphError> {
        if !(1..=MAX_ENUMERATED_GRAPH_ORDER).contains(&n) {
            return Err(GraphError::EnumerationRange { n, min: 1, max: MAX_ENUMERATED_GRAPH_ORDER });
        }
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i as u8, j as u8))).collect();
        Ok(GraphIter { n, next: range.start, end: range.end.min(graph_count(n)), connected_only, pairs })
    }
}

impl Iterator for GraphIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let mut g = Graph::empty(self.n).expect("order validated");
            for (k, &(i, j)) in self.pairs.iter().enumerate() {
                if code >> k & 1 == 1 {
                    g.add_edge_unchecked(i as usize, j as usize);
                }
            }
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Consecutive disconnected samples tolerated before giving up.
pub const RANDOM_ATTEMPTS: u32 = 100_000;

/// Erdős–Rényi sample conditioned on connectivity.
///
/// The generator is SplitMix64 with its state initialised to `seed`. For each
/// attempt, pairs `(i, j)` with `i < j` are visited with `i` outer and `j`
/// inner; one 64-bit output `r` is drawn per pair and the edge is kept iff
/// `r / 2^64 < p`, evaluated exactly as `r * den < num * 2^64`. A disconnected
/// sample is discarded and the stream continues.
pub fn random_connected_graph(n: usize, edge_prob: &Rational, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::BadOrder(n));
    }
    if !edge_prob.is_positive() || *edge_prob > Rational::one() {
        return Err(GraphError::BadProbability);
    }
    let num = edge_prob.numer().to_u64().ok_or(GraphError::BadProbability)? as u128;
    let den = edge_prob.denom().to_u64().ok_or(GraphError::BadProbability)? as u128;
    debug_assert!(!edge_prob.denom().is_zero());
    let threshold = num << 64;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for _ in 0..RANDOM_ATTEMPTS {
        g.clear(n);
        for i in 0..n {
            for j in i + 1..n {
                if (rng.next_u64() as u128) * den < threshold {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::RandomGiveUp(RANDOM_ATTEMPTS))
}

/// Edge probabilities cycled through by [`random_sample`].
pub const SAMPLE_PROBABILITIES: [(i64, i64); 3] = [(1, 4), (1, 2), (3, 4)];

/// A reproducible batch of `count` random connected graphs with orders in
/// `orders`. Graph `i` has order `orders.start + i mod len`, edge probability
/// `SAMPLE_PROBABILITIES[(i / len) mod 3]` and seed `seed + i`.
pub fn random_sample(count: usize, seed: u64, orders: RangeInclusive<usize>) -> Result<Vec<Graph>, GraphError> {
    let lo = *orders.start();
    let len = orders.end().saturating_sub(lo) + 1;
    (0..count)
        .map(|i| {
            let (num, den) = SAMPLE_PROBABILITIES[(i / len) % SAMPLE_PROBABILITIES.len()];
            random_connected_graph(lo + i % len, &rat(num, den), seed.wrapping_add(i as u64))
        })
        .collect()
}
