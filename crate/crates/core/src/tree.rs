//! Linear-time tree algorithms: subtree sizes, centre edges, the closed form
//! `b(T) = (1/2)(1/|V_u| + 1/|V_v|)` and star-root vertices.
//!
//! For a tree edge `uv`, `V_u` is the vertex set of the component of `T - uv`
//! containing `u`. A centre edge minimises `||V_u| - |V_v||`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph, VertexSet};
use crate::rational::{rat, serde_pq, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is not a tree (n = {n}, m = {m})")]
    NotATree { n: usize, m: usize },
    #[error("need at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("root {root} outside 0..{n}")]
    RootOutOfRange { root: usize, n: usize },
}

fn require_tree(t: &Graph) -> Result<(), TreeError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(TreeError::NotATree { n: t.n(), m: t.m() })
    }
}

/// Parents and a preorder of a tree rooted at `root`. `parent[root] = root`.
struct Rooted {
    parent: [u8; 64],
    order: [u8; 64],
    size: [u8; 64],
}

impl Rooted {
    fn new(t: &Graph, root: usize) -> Self {
        let n = t.n();
        let mut r = Rooted { parent: [0; 64], order: [0; 64], size: [1; 64] };
        r.parent[root] = root as u8;
        r.order[0] = root as u8;
        let mut seen = 1u64 << root;
        let mut head = 0;
        let mut tail = 1;
        while head < tail {
            let u = r.order[head] as usize;
            head += 1;
            for v in bits(t.neighbors(u) & !seen) {
                seen |= 1 << v;
                r.parent[v] = u as u8;
                r.order[tail] = v as u8;
                tail += 1;
            }
        }
        debug_assert_eq!(tail, n);
        for &v in r.order[1..n].iter().rev() {
            let p = r.parent[v as usize] as usize;
            r.size[p] += r.size[v as usize];
        }
        r
    }
}

/// Number of vertices in each vertex's subtree when `t` is rooted at `root`.
pub fn subtree_sizes(t: &Graph, root: usize) -> Result<Vec<usize>, TreeError> {
    require_tree(t)?;
    if root >= t.n() {
        return Err(TreeError::RootOutOfRange { root, n: t.n() });
    }
    let r = Rooted::new(t, root);
    Ok(r.size[..t.n()].iter().map(|&s| s as usize).collect())
}

/// One tree edge `(u, v)` with `u < v` and the sizes `(|V_u|, |V_v|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeSplit {
    pub edge: (usize, usize),
    pub sizes: (usize, usize),
}

impl EdgeSplit {
    pub fn imbalance(&self) -> usize {
        self.sizes.0.abs_diff(self.sizes.1)
    }

    /// `(n/2) · 1/(|V_u||V_v|)`, the value of `b` on this edge's cut.
    pub fn cut_value(&self) -> Rational {
        let (a, b) = self.sizes;
        rat((a + b) as i64, 2 * (a * b) as i64)
    }
}

/// Splits of every edge, ordered by edge.
pub fn edge_splits(t: &Graph) -> Result<Vec<EdgeSplit>, TreeError> {
    require_tree(t)?;
    let n = t.n();
    let r = Rooted::new(t, 0);
    let mut out: Vec<EdgeSplit> = (1..n)
        .map(|c| {
            let p = r.parent[c] as usize;
            let sc = r.size[c] as usize;
            let (u, v, su, sv) = if p < c { (p, c, n - sc, sc) } else { (c, p, sc, n - sc) };
            EdgeSplit { edge: (u, v), sizes: (su, sv) }
        })
        .collect();
    out.sort_unstable_by_key(|s| s.edge);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentreEdgeReport {
    pub centre_edges: Vec<(usize, usize)>,
    /// `(|V_u|, |V_v|)` for each listed edge `(u, v)`.
    pub split_sizes: Vec<(usize, usize)>,
    #[serde(with = "serde_pq")]
    pub b_value: Rational,
}

/// All edges of minimum imbalance, and `b(T)` from any of them.
pub fn centre_edges(t: &Graph) -> Result<CentreEdgeReport, TreeError> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(TreeError::TooSmall(t.n()));
    }
    let splits = edge_splits(t)?;
    let best = splits.iter().map(EdgeSplit::imbalance).min().expect("n >= 2");
    let centre: Vec<&EdgeSplit> = splits.iter().filter(|s| s.imbalance() == best).collect();
    Ok(CentreEdgeReport {
        centre_edges: centre.iter().map(|s| s.edge).collect(),
        split_sizes: centre.iter().map(|s| s.sizes).collect(),
        b_value: centre[0].cut_value(),
    })
}

/// Smaller and larger side of a centre edge, without allocating.
/// The caller guarantees `t` is a tree with `n >= 2`.
pub fn centre_split_unchecked(t: &Graph) -> (usize, usize) {
    let n = t.n();
    let r = Rooted::new(t, 0);
    let small = (1..n).map(|c| (r.size[c] as usize).min(n - r.size[c] as usize)).max().expect("n >= 2");
    (small, n - small)
}

/// `b(T)` by the centre-edge formula.
pub fn b_tree(t: &Graph) -> Result<Rational, TreeError> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(TreeError::TooSmall(t.n()));
    }
    let (a, b) = centre_split_unchecked(t);
    Ok(rat((a + b) as i64, 2 * (a * b) as i64))
}

/// `b(T)` with a sparsest cut: among centre edges, the side away from vertex 0
/// with the smallest bitmask. This is the cut an exhaustive scan that keeps
/// vertex 0 outside `S` and breaks ties by bitmask would report.
pub fn tree_sparsest_cut(t: &Graph) -> Result<(Rational, VertexSet), TreeError> {
    require_tree(t)?;
    let n = t.n();
    if n < 2 {
        return Err(TreeError::TooSmall(n));
    }
    let r = Rooted::new(t, 0);
    let mut below = [0u64; 64];
    for &v in r.order[..n].iter().rev() {
        let v = v as usize;
        below[v] |= 1 << v;
        if v != 0 {
            below[r.parent[v] as usize] |= below[v];
        }
    }
    let best = (1..n)
        .map(|c| {
            let s = r.size[c] as usize;
            (s.abs_diff(n - s), below[c], s)
        })
        .min()
        .expect("n >= 2");
    let (_, mask, s) = best;
    Ok((rat(n as i64, 2 * (s * (n - s)) as i64), VertexSet::new(mask, n).expect("vertices of t")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubstarReport {
    pub is_substar: bool,
    /// The vertex shared by all centre edges. For a single centre edge both
    /// endpoints qualify and the smaller index is reported.
    pub centre: Option<usize>,
}

/// Whether the centre edges all share a vertex.
pub fn substar_check(t: &Graph) -> Result<SubstarReport, TreeError> {
    let report = centre_edges(t)?;
    let common = report
        .centre_edges
        .iter()
        .fold(t.vertex_mask(), |acc, &(u, v)| acc & (1 << u | 1 << v));
    let centre = (common != 0).then(|| common.trailing_zeros() as usize);
    Ok(SubstarReport { is_substar: centre.is_some(), centre })
}

/// The common centre of two or more centre edges; for a unique centre edge
/// `uv`, the endpoint on the larger side (both when the split is even).
pub fn star_root_vertices(t: &Graph) -> Result<VertexSet, TreeError> {
    let report = centre_edges(t)?;
    let n = t.n();
    let mask = if let [(u, v)] = report.centre_edges[..] {
        let (su, sv) = report.split_sizes[0];
        match su.cmp(&sv) {
            std::cmp::Ordering::Greater => 1 << u,
            std::cmp::Ordering::Less => 1 << v,
            std::cmp::Ordering::Equal => 1 << u | 1 << v,
        }
    } else {
        let common = report.centre_edges.iter().fold(t.vertex_mask(), |acc, &(u, v)| acc & (1 << u | 1 << v));
        common & common.wrapping_neg()
    };
    Ok(VertexSet::new(mask, n).expect("vertices of t"))
}

/// `|V_u|` for the edge `uv`: the size of `u`'s side after deleting `uv`.
pub fn side_size(t: &Graph, u: usize, v: usize) -> Result<usize, TreeError> {
    require_tree(t)?;
    let sizes = subtree_sizes(t, v)?;
    Ok(sizes[u])
}
