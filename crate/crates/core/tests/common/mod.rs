//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's cut or tree code; only `Graph` accessors are used.

#![allow(dead_code)]

use l1f_core::rational::{rat, Rational};
use l1f_core::Graph;

/// Vertices reachable from the lowest vertex of `within`, restricted to it.
pub fn reach(g: &Graph, within: u64) -> u64 {
    if within == 0 {
        return 0;
    }
    let start = within.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..g.n() {
            if within >> v & 1 == 1 && seen >> v & 1 == 0 && g.has_edge(u, v) {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen
}

pub fn connected_within(g: &Graph, within: u64) -> bool {
    within != 0 && reach(g, within) == within
}

pub fn cut_edges(g: &Graph, s: u64) -> usize {
    g.edges().filter(|&(u, v)| (s >> u & 1) != (s >> v & 1)).count()
}

/// `(n/2) min |∂S|/(|S||S^c|)` over every proper nonempty `S` whose two sides
/// are both connected, by plain enumeration. `None` when no such `S` exists.
pub fn b_brute(g: &Graph) -> Option<Rational> {
    let n = g.n();
    let full = (1u64 << n) - 1;
    let mut best: Option<Rational> = None;
    for s in 1..full {
        let t = full & !s;
        if !connected_within(g, s) || !connected_within(g, t) {
            continue;
        }
        let k = s.count_ones() as i64;
        let r = rat(n as i64 * cut_edges(g, s) as i64, 2 * k * (n as i64 - k));
        if best.as_ref().map_or(true, |b| r < *b) {
            best = Some(r);
        }
    }
    best
}

/// The same minimum without the connectivity restriction.
pub fn b_unrestricted(g: &Graph) -> Rational {
    let n = g.n() as i64;
    let full = (1u64 << n) - 1;
    (1..full)
        .map(|s| {
            let k = s.count_ones() as i64;
            rat(n * cut_edges(g, s) as i64, 2 * k * (n - k))
        })
        .min()
        .expect("n >= 2")
}

/// `min |∂S|/|S|` over `1 <= |S| <= n/2`.
pub fn iso_brute(g: &Graph) -> Rational {
    let n = g.n();
    let full = (1u64 << n) - 1;
    (1..full)
        .filter(|s| s.count_ones() as usize <= n / 2)
        .map(|s| rat(cut_edges(g, s) as i64, s.count_ones() as i64))
        .min()
        .expect("n >= 2")
}

/// For each tree edge `(u, v)` with `u < v`: `(|V_u|, |V_v|)`, by deleting
/// the edge and searching from `u`.
pub fn tree_splits(t: &Graph) -> Vec<((usize, usize), (usize, usize))> {
    let n = t.n();
    t.edges()
        .map(|(u, v)| {
            let mut seen = 1u64 << u;
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if t.has_edge(x, y) && (x, y) != (u, v) && (x, y) != (v, u) && seen >> y & 1 == 0 {
                        seen |= 1 << y;
                        stack.push(y);
                    }
                }
            }
            let a = seen.count_ones() as usize;
            ((u, v), (a, n - a))
        })
        .collect()
}

/// `|V_x|` for the tree edge `xy`: the component of `T - xy` containing `x`.
pub fn side(t: &Graph, x: usize, y: usize) -> usize {
    let (u, v) = (x.min(y), x.max(y));
    let (_, (a, b)) = tree_splits(t).into_iter().find(|&(e, _)| e == (u, v)).expect("edge of t");
    if x == u {
        a
    } else {
        b
    }
}

/// Smallest imbalance over all edges, and the edges attaining it.
pub fn centre_edges_naive(t: &Graph) -> (usize, Vec<(usize, usize)>) {
    let splits = tree_splits(t);
    let best = splits.iter().map(|&(_, (a, b))| a.abs_diff(b)).min().expect("n >= 2");
    (best, splits.into_iter().filter(|&(_, (a, b))| a.abs_diff(b) == best).map(|(e, _)| e).collect())
}

/// Grid resolution for the γ oracle: coordinates are multiples of 1/STEPS.
pub const STEPS: i64 = 50;

/// Grid search for γ: the least `max_{uv ∈ E} |k_u - k_v|` over integer
/// vectors `k ∈ [-STEPS, STEPS]^n` with some `|k_i| = STEPS` and
/// `|Σ k| <= n/2` (that is, `x = k/STEPS` with `|Σ x| <= n/100`).
///
/// Exhaustive branch and bound: by symmetry one coordinate is fixed at
/// `+STEPS`, every anchor is tried, and a branch is cut when an edge
/// difference or the reachable range of the sum rules it out. Only values
/// `<= limit` are searched for; `None` means the grid optimum exceeds it.
pub fn gamma_grid(g: &Graph, limit: i64) -> Option<i64> {
    let n = g.n();
    if g.m() == 0 {
        return Some(0);
    }
    let dist = all_pairs(g);
    let slack = n as i64 / 2;
    let mut bound = limit;
    let mut found = None;
    for anchor in 0..n {
        let order = bfs_order(g, anchor);
        let mut k = vec![0i64; n];
        k[anchor] = STEPS;
        search(g, &dist, &order, 1, &mut k, STEPS, slack, &mut bound, &mut found);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    dist: &[Vec<i64>],
    order: &[usize],
    depth: usize,
    k: &mut [i64],
    sum: i64,
    slack: i64,
    bound: &mut i64,
    found: &mut Option<i64>,
) {
    let n = order.len();
    if depth == n {
        if sum.abs() <= slack {
            let d = g.edges().map(|(u, v)| (k[u] - k[v]).abs()).max().unwrap_or(0);
            if d <= *bound {
                *found = Some(d);
                *bound = d - 1;
            }
        }
        return;
    }
    // Range of each unassigned vertex implied by the assigned ones.
    let range = |v: usize, k: &[i64], b: i64| {
        let mut lo = -STEPS;
        let mut hi = STEPS;
        for &u in &order[..depth] {
            let d = dist[u][v];
            if d > 0 {
                lo = lo.max(k[u] - b * d);
                hi = hi.min(k[u] + b * d);
            }
        }
        (lo, hi)
    };
    let v = order[depth];
    let (lo, hi) = range(v, k, *bound);
    for x in lo..=hi {
        if x > hi.min(range(v, k, *bound).1) {
            break;
        }
        k[v] = x;
        let mut rest_lo = 0;
        let mut rest_hi = 0;
        let mut empty = false;
        for &w in &order[depth + 1..] {
            let (a, b) = range(w, k, *bound);
            empty |= a > b;
            rest_lo += a;
            rest_hi += b;
        }
        let s = sum + x;
        if !empty && s + rest_lo <= slack && s + rest_hi >= -slack {
            search(g, dist, order, depth + 1, k, s, slack, bound, found);
        }
    }
    k[v] = 0;
}

fn bfs_order(g: &Graph, root: usize) -> Vec<usize> {
    let n = g.n();
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    // Isolated parts come last, in index order.
    order.extend((0..n).filter(|&v| !seen[v]));
    order
}

/// Hop distances; unreachable pairs get 0, which imposes no constraint.
fn all_pairs(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    (0..n)
        .map(|s| {
            let mut d = vec![-1i64; n];
            d[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for v in 0..n {
                    if g.has_edge(u, v) && d[v] < 0 {
                        d[v] = d[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            d.into_iter().map(|x| x.max(0)).collect()
        })
        .collect()
}

/// Closed forms for standard families.
pub fn b_complete(n: usize) -> Rational {
    rat(n as i64, 2)
}

pub fn b_cycle(n: usize) -> Rational {
    let n = n as i64;
    if n % 2 == 0 {
        rat(4, n)
    } else {
        rat(n, (n / 2) * (n / 2 + 1))
    }
}

pub fn b_path(n: usize) -> Rational {
    let n = n as i64;
    if n % 2 == 0 {
        rat(2, n)
    } else {
        rat(2 * n, n * n - 1)
    }
}

pub fn b_star(n: usize) -> Rational {
    rat(1, 2) + rat(1, 2 * (n as i64 - 1))
}
