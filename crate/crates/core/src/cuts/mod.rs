//! Exact cut invariants: the l1-Fiedler value `b(G)`, isoperimetric number,
//! Cheeger constant, minimum relative cut-size and edge connectivity.
//!
//! All values are exact rationals. Subset scans break ties by the smallest
//! bitmask, so serial and parallel runs report the same witness.

mod flow;
mod scan;

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;
use crate::graph::{bits, Graph, GraphError, VertexSet};
use crate::rational::{rat, serde_pq, Rational};
use scan::{scan_min, Best, Objective, Visit};

pub use flow::{edge_connectivity, max_flow};

/// Largest order accepted by the exhaustive subset scans.
pub const ENUMERATION_LIMIT: usize = 32;
/// Largest order accepted by the unrestricted brute-force oracle.
pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("need at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("order {n} exceeds the enumeration limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("a cut needs a nonempty proper vertex subset")]
    DegenerateSet,
    #[error("b(G) = {b} differs from the edge-connectivity bound {bound}")]
    NotEqualityCase { b: String, bound: String },
}

/// A vertex subset together with its cut statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    #[serde(serialize_with = "ser_set")]
    pub set: VertexSet,
    pub boundary: usize,
    /// `|∂S| / (|S| |S^c|)`
    #[serde(with = "serde_pq")]
    pub rho: Rational,
    /// `|∂S| / |S|`
    #[serde(with = "serde_pq")]
    pub xi: Rational,
}

fn ser_set<S: serde::Serializer>(set: &VertexSet, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(set.bits())
}

impl Cut {
    pub fn new(g: &Graph, set: VertexSet) -> Result<Self, CutError> {
        let n = g.n();
        if set.universe() != n {
            return Err(GraphError::VertexOutOfRange { vertex: set.universe(), n }.into());
        }
        let s = set.len();
        if s == 0 || s == n {
            return Err(CutError::DegenerateSet);
        }
        let boundary = boundary_of(g, set.bits()) as usize;
        Ok(Cut {
            set,
            boundary,
            rho: rat(boundary as i64, (s * (n - s)) as i64),
            xi: rat(boundary as i64, s as i64),
        })
    }

    pub(crate) fn from_mask(g: &Graph, mask: u64) -> Self {
        Cut::new(g, VertexSet::new(mask, g.n()).expect("mask within universe")).expect("proper subset")
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// Result of an exact invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    #[serde(with = "serde_pq")]
    pub value: Rational,
    /// A subset attaining `value`; absent when the graph is disconnected.
    pub witness: Option<Cut>,
    pub subsets_scanned: u64,
    /// Set when the input is disconnected; `value` is then 0.
    pub disconnected: bool,
}

impl InvariantResult {
    fn disconnected() -> Self {
        InvariantResult { value: rat(0, 1), witness: None, subsets_scanned: 0, disconnected: true }
    }
}

#[inline]
pub(crate) fn boundary_of(g: &Graph, mask: u64) -> u32 {
    bits(mask).map(|u| (g.neighbors(u) & !mask).count_ones()).sum()
}

/// `|∂S|`: edges with exactly one endpoint in `S`.
pub fn boundary_size(g: &Graph, set: VertexSet) -> Result<usize, CutError> {
    if set.universe() != g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: set.universe(), n: g.n() }.into());
    }
    if set.is_empty() || set.len() == g.n() {
        return Err(CutError::DegenerateSet);
    }
    Ok(boundary_of(g, set.bits()) as usize)
}

fn check_order(g: &Graph, max: usize) -> Result<(), CutError> {
    match g.n() {
        n if n < 2 => Err(CutError::TooSmall(n)),
        n if n > max => Err(CutError::TooLarge { n, max }),
        _ => Ok(()),
    }
}

struct Sparsest<'a> {
    g: &'a Graph,
    n: u64,
}

impl Objective for Sparsest<'_> {
    #[inline]
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)> {
        let s = v.size as u64;
        (s > 0).then(|| (v.boundary as u64, s * (self.n - s)))
    }

    fn admissible(&self, mask: u64) -> bool {
        self.g.induces_connected(mask) && self.g.induces_connected(!mask & self.g.vertex_mask())
    }
}

/// `b(G) = (n/2) min ρ(S)` over nonempty proper `S` with both `S` and `S^c`
/// inducing connected subgraphs. Vertex 0 is kept in `S^c`.
pub fn b_exact(g: &Graph) -> Result<InvariantResult, CutError> {
    b_exact_with(g, Exec::default())
}

pub fn b_exact_with(g: &Graph, exec: Exec) -> Result<InvariantResult, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Ok(InvariantResult::disconnected());
    }
    let n = g.n();
    let free: Vec<usize> = (1..n).collect();
    let best = scan_min(exec, g, &free, 0, &Sparsest { g, n: n as u64 });
    Ok(b_from_best(g, best))
}

/// `b(G)` as an unreduced fraction `num / den` together with the witness
/// mask, without any big-integer allocation. `None` for disconnected graphs.
/// Intended for exhaustive sweeps.
pub fn b_exact_fraction(g: &Graph, exec: Exec) -> Result<Option<Fraction>, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Ok(None);
    }
    let n = g.n();
    let free: Vec<usize> = (1..n).collect();
    let best = scan_min(exec, g, &free, 0, &Sparsest { g, n: n as u64 });
    Ok(Some(Fraction { num: n as u64 * best.num, den: 2 * best.den, mask: best.mask }))
}

/// An unreduced nonnegative fraction with the subset that attains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
    pub mask: u64,
}

impl Fraction {
    /// Exact equality of values by cross-multiplication.
    pub fn same_value(&self, num: u64, den: u64) -> bool {
        self.num as u128 * den as u128 == num as u128 * self.den as u128
    }

    pub fn to_rational(&self) -> Rational {
        rat(self.num as i64, self.den as i64)
    }
}

fn b_from_best(g: &Graph, best: Best) -> InvariantResult {
    debug_assert!(best.found, "connected graphs always have an edge cut");
    let n = g.n() as i64;
    InvariantResult {
        value: rat(n * best.num as i64, 2 * best.den as i64),
        witness: Some(Cut::from_mask(g, best.mask)),
        subsets_scanned: best.scanned,
        disconnected: false,
    }
}

/// Brute force over every nonempty proper subset, with no connectivity
/// filter and no incremental bookkeeping.
pub fn b_oracle_all_subsets(g: &Graph) -> Result<InvariantResult, CutError> {
    check_order(g, ORACLE_LIMIT)?;
    let n = g.n();
    let full = g.vertex_mask();
    let mut best: Option<(u64, u64, u64)> = None;
    let mut scanned = 0u64;
    for mask in 1..full {
        scanned += 1;
        let s = mask.count_ones() as u64;
        let mut boundary = 0u64;
        for u in 0..n {
            if mask >> u & 1 == 1 {
                for v in 0..n {
                    if mask >> v & 1 == 0 && g.has_edge(u, v) {
                        boundary += 1;
                    }
                }
            }
        }
        let den = s * (n as u64 - s);
        let better = match best {
            None => true,
            Some((bn, bd, _)) => boundary * bd < bn * den,
        };
        if better {
            best = Some((boundary, den, mask));
        }
    }
    let (num, den, mask) = best.expect("n >= 2 has proper subsets");
    Ok(InvariantResult {
        value: rat(n as i64 * num as i64, 2 * den as i64),
        witness: Some(Cut::from_mask(g, mask)),
        subsets_scanned: scanned,
        disconnected: !g.is_connected(),
    })
}

struct Isoperimetric {
    half: u32,
}

impl Objective for Isoperimetric {
    #[inline]
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)> {
        (v.size > 0 && v.size <= self.half).then_some((v.boundary as u64, v.size as u64))
    }
}

/// `iso(G) = min |∂S|/|S|` over `1 <= |S| <= floor(n/2)`.
pub fn iso_exact(g: &Graph) -> Result<InvariantResult, CutError> {
    iso_exact_with(g, Exec::default())
}

pub fn iso_exact_with(g: &Graph, exec: Exec) -> Result<InvariantResult, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Ok(InvariantResult::disconnected());
    }
    let free: Vec<usize> = (0..g.n()).collect();
    let best = scan_min(exec, g, &free, 0, &Isoperimetric { half: g.n() as u32 / 2 });
    Ok(ratio_result(g, best))
}

fn ratio_result(g: &Graph, best: Best) -> InvariantResult {
    InvariantResult {
        value: rat(best.num as i64, best.den as i64),
        witness: Some(Cut::from_mask(g, best.mask)),
        subsets_scanned: best.scanned,
        disconnected: false,
    }
}

struct Cheeger {
    total_volume: u32,
}

impl Objective for Cheeger {
    #[inline]
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)> {
        (v.size > 0).then(|| (v.boundary as u64, v.volume.min(self.total_volume - v.volume) as u64))
    }
}

/// `h(G) = min |∂S| / min(vol S, vol S^c)`. The ratio is symmetric in `S`
/// and `S^c`, so the witness is taken with vertex 0 outside `S`.
pub fn cheeger_exact(g: &Graph) -> Result<InvariantResult, CutError> {
    cheeger_exact_with(g, Exec::default())
}

pub fn cheeger_exact_with(g: &Graph, exec: Exec) -> Result<InvariantResult, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Ok(InvariantResult::disconnected());
    }
    let free: Vec<usize> = (1..g.n()).collect();
    let best = scan_min(exec, g, &free, 0, &Cheeger { total_volume: 2 * g.m() as u32 });
    Ok(ratio_result(g, best))
}

struct RelativeCut {
    n: u32,
}

impl Objective for RelativeCut {
    #[inline]
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)> {
        (v.size > 0 && v.size < self.n).then_some((v.boundary as u64, v.size as u64))
    }
}

/// `min |∂S|/|S|` over every nonempty proper subset.
pub fn min_relative_cut(g: &Graph) -> Result<InvariantResult, CutError> {
    min_relative_cut_with(g, Exec::default())
}

pub fn min_relative_cut_with(g: &Graph, exec: Exec) -> Result<InvariantResult, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Ok(InvariantResult::disconnected());
    }
    let free: Vec<usize> = (0..g.n()).collect();
    let best = scan_min(exec, g, &free, 0, &RelativeCut { n: g.n() as u32 });
    Ok(ratio_result(g, best))
}

struct FixedSize {
    n: u64,
    size: u32,
}

impl Objective for FixedSize {
    #[inline]
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)> {
        (v.size == self.size).then(|| (v.boundary as u64, v.size as u64 * (self.n - v.size as u64)))
    }
}

/// The sparsest cut among subsets of exactly `size` vertices, with no
/// connectivity restriction. `None` if `size` is not in `1..n`.
pub fn sparsest_cut_of_size(g: &Graph, size: usize) -> Result<Option<Cut>, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if size == 0 || size >= g.n() {
        return Ok(None);
    }
    let free: Vec<usize> = (0..g.n()).collect();
    let best = scan_min(Exec::Serial, g, &free, 0, &FixedSize { n: g.n() as u64, size: size as u32 });
    Ok(best.found.then(|| Cut::from_mask(g, best.mask)))
}

/// `b(G)` expressed through a single cut: `(n/2) ρ(S)`.
pub fn b_of_cut(g: &Graph, cut: &Cut) -> Rational {
    &cut.rho * rat(g.n() as i64, 2)
}

/// Vertex and edge order certifying the edge-connectivity equality case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityWitness {
    pub vertex: usize,
    /// Edges of `vertex` in the order they are re-added.
    pub edge_order: Vec<(usize, usize)>,
}

/// For a graph with `b(G) = nλ/(2(n-1))`, searches for a vertex `v` of degree
/// `λ` such that, starting from `G` with all of `v`'s edges removed and adding
/// them back one at a time, `{v}` induces a sparsest cut after every step.
///
/// The ascending-neighbor order is tried first; other orders are explored by
/// depth-first search over the set of edges already added.
pub fn equality_structure_check(g: &Graph) -> Result<Option<EqualityWitness>, CutError> {
    check_order(g, ENUMERATION_LIMIT)?;
    if !g.is_connected() {
        return Err(CutError::NotEqualityCase { b: "0/1".into(), bound: "undefined".into() });
    }
    let n = g.n() as i64;
    let lambda = edge_connectivity(g)?;
    let b = b_exact(g)?.value;
    let bound = rat(n * lambda as i64, 2 * (n - 1));
    if b != bound {
        return Err(CutError::NotEqualityCase {
            b: crate::rational::to_pq(&b),
            bound: crate::rational::to_pq(&bound),
        });
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) == lambda) {
        let mut base = g.clone();
        for u in bits(g.neighbors(v)) {
            base.remove_edge_unchecked(v, u);
        }
        let mut failed = HashSet::new();
        let mut order = Vec::with_capacity(lambda);
        if extend_order(&base, v, g.neighbors(v), 0, &mut order, &mut failed)? {
            return Ok(Some(EqualityWitness {
                vertex: v,
                edge_order: order.into_iter().map(|u| (v, u)).collect(),
            }));
        }
    }
    Ok(None)
}

fn extend_order(
    base: &Graph,
    v: usize,
    all: u64,
    added: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> Result<bool, CutError> {
    if added == all {
        return Ok(true);
    }
    for u in bits(all & !added) {
        let next = added | 1 << u;
        if failed.contains(&next) {
            continue;
        }
        let mut h = base.clone();
        for w in bits(next) {
            h.add_edge_unchecked(v, w);
        }
        let n = h.n() as i64;
        let singleton = rat(n * next.count_ones() as i64, 2 * (n - 1));
        if b_exact_with(&h, Exec::Serial)?.value == singleton {
            order.push(u);
            if extend_order(base, v, all, next, order, failed)? {
                return Ok(true);
            }
            order.pop();
        }
        failed.insert(next);
    }
    Ok(false)
}
