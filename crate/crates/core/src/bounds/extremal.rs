//! Trees that attain the smallest and largest `b(T)` when the diameter, the
//! maximum degree or the number of pendant vertices is fixed, with the
//! closed-form values they attain.

use std::str::FromStr;

use serde::Serialize;

use super::BoundsError;
use crate::graph::Graph;
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Min,
    Max,
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(Which::Min),
            "max" => Ok(Which::Max),
            other => Err(format!("expected `min` or `max`, got {other:?}")),
        }
    }
}

/// `n / (2 a (n - a))`: the value of `b` on a tree whose centre edge splits
/// off `a` vertices.
pub fn split_value(n: usize, a: usize) -> Rational {
    rat(n as i64, 2 * (a * (n - a)) as i64)
}

/// `b(P_n) = n / (2 ceil(n/2) floor(n/2))`, the least `b` of any tree.
pub fn balanced_value(n: usize) -> Rational {
    split_value(n, n / 2)
}

/// `[lower, upper]` for trees of order `n` and diameter `d`.
pub fn diameter_bounds(n: usize, d: usize) -> (Rational, Rational) {
    (balanced_value(n), split_value(n, d.div_ceil(2)))
}

/// `[lower, upper]` for trees of order `n` and maximum degree `dmax`.
pub fn max_degree_bounds(n: usize, dmax: usize) -> (Rational, Rational) {
    let lower = if dmax <= n.div_ceil(2) { balanced_value(n) } else { split_value(n, dmax) };
    (lower, spider_value(n, dmax))
}

/// `[lower, upper]` for trees of order `n` with `p` pendant vertices.
/// The lower end is only attained when `p <= n - 2` or `n <= 3`.
pub fn pendant_bounds(n: usize, p: usize) -> (Rational, Rational) {
    (balanced_value(n), spider_value(n, p))
}

/// `b` of the balanced spider with `legs` legs: with `n - 1 = k·legs + r`,
/// `n/(2k(n-k))` if `r = 0`, else `n/(2(k+1)(n-k-1))`.
pub fn spider_value(n: usize, legs: usize) -> Rational {
    let k = (n - 1) / legs;
    let r = (n - 1) % legs;
    if r == 0 {
        split_value(n, k)
    } else {
        split_value(n, k + 1)
    }
}

fn path_graph(vertices: usize, order: usize) -> Graph {
    let mut g = Graph::empty(order).expect("order checked by caller");
    for v in 1..vertices {
        g.add_edge_unchecked(v - 1, v);
    }
    g
}

/// Attaches `count` fresh pendants to `u` and `v` alternately, starting at
/// `u`, using labels from `next` upward.
fn alternate_pendants(g: &mut Graph, u: usize, v: usize, next: usize, count: usize) {
    for i in 0..count {
        g.add_edge_unchecked(if i % 2 == 0 { u } else { v }, next + i);
    }
}

/// Endpoints `(u, v)` of the path centre edge used by the alternating
/// construction: the unique centre edge when `len` is even, otherwise the
/// one with `|V_u| = |V_v| - 1`.
fn path_centre(len: usize) -> (usize, usize) {
    if len % 2 == 0 {
        (len / 2 - 1, len / 2)
    } else {
        ((len - 1) / 2 - 1, (len - 1) / 2)
    }
}

fn check_order(n: usize) -> Result<(), BoundsError> {
    if !(2..=crate::graph::MAX_VERTICES).contains(&n) {
        return Err(BoundsError::OrderOutOfRange { n, min: 2, max: crate::graph::MAX_VERTICES });
    }
    Ok(())
}

/// Trees of diameter `d` on `n` vertices. `Min` balances pendants around the
/// centre edge of `P_{d+1}`; `Max` puts all of them on one central vertex.
pub fn extremal_tree_diameter(n: usize, d: usize, which: Which) -> Result<Graph, BoundsError> {
    check_order(n)?;
    if d < 3 || d > n - 1 {
        return Err(BoundsError::Infeasible { constraint: "diameter", n, value: d });
    }
    let mut g = path_graph(d + 1, n);
    let rest = n - d - 1;
    match which {
        Which::Min => {
            let (u, v) = path_centre(d + 1);
            alternate_pendants(&mut g, u, v, d + 1, rest);
        }
        Which::Max => {
            let hub = if d % 2 == 0 { d / 2 } else { (d - 1) / 2 };
            for w in d + 1..n {
                g.add_edge_unchecked(hub, w);
            }
        }
    }
    Ok(g)
}

/// Spider with `legs` legs whose sizes differ by at most one, longer legs
/// at lower-indexed neighbours of the hub `0`.
fn spider(n: usize, legs: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order checked by caller");
    let k = (n - 1) / legs;
    let r = (n - 1) % legs;
    for leg in 1..=legs {
        g.add_edge_unchecked(0, leg);
    }
    let mut next = legs + 1;
    for leg in 1..=legs {
        let size = if leg <= r { k + 1 } else { k };
        let mut tip = leg;
        for _ in 1..size {
            g.add_edge_unchecked(tip, next);
            tip = next;
            next += 1;
        }
    }
    g
}

/// Trees of maximum degree `dmax` on `n` vertices. `Min` is a broom (a hub
/// with `dmax` neighbours and the remaining vertices as a path hung off
/// neighbour 1); `Max` is a balanced spider.
pub fn extremal_tree_maxdeg(n: usize, dmax: usize, which: Which) -> Result<Graph, BoundsError> {
    check_order(n)?;
    if dmax < 2 || dmax > n - 1 {
        return Err(BoundsError::Infeasible { constraint: "max degree", n, value: dmax });
    }
    Ok(match which {
        Which::Min => {
            let mut g = Graph::empty(n)?;
            for leaf in 1..=dmax {
                g.add_edge_unchecked(0, leaf);
            }
            let mut tip = 1;
            for w in dmax + 1..n {
                g.add_edge_unchecked(tip, w);
                tip = w;
            }
            g
        }
        Which::Max => spider(n, dmax),
    })
}

/// Trees with `p` pendant vertices on `n` vertices. `Min` starts from a path
/// on `n - p + 2` vertices and adds the other `p - 2` pendants alternately at
/// the centre edge; `Max` is the balanced spider with `p` legs.
///
/// For `p = n - 1` and `n >= 4` the only tree is the star, which is returned
/// for both ends.
pub fn extremal_tree_pendants(n: usize, p: usize, which: Which) -> Result<Graph, BoundsError> {
    check_order(n)?;
    if p < 2 || p > n - 1 {
        return Err(BoundsError::Infeasible { constraint: "pendant count", n, value: p });
    }
    Ok(match which {
        Which::Min if p + 1 == n => spider(n, p),
        Which::Min => {
            let len = n - p + 2;
            let mut g = path_graph(len, n);
            let (u, v) = path_centre(len);
            alternate_pendants(&mut g, u, v, len, p - 2);
            g
        }
        Which::Max => spider(n, p),
    })
}

/// The value the constructor is meant to attain.
pub fn diameter_target(n: usize, d: usize, which: Which) -> Rational {
    let (lo, hi) = diameter_bounds(n, d);
    match which {
        Which::Min => lo,
        Which::Max => hi,
    }
}

pub fn max_degree_target(n: usize, dmax: usize, which: Which) -> Rational {
    let (lo, hi) = max_degree_bounds(n, dmax);
    match which {
        Which::Min => lo,
        Which::Max => hi,
    }
}

/// `None` where no tree attains the lower end (`p = n - 1`, `n >= 4`).
pub fn pendant_target(n: usize, p: usize, which: Which) -> Option<Rational> {
    let (lo, hi) = pendant_bounds(n, p);
    match which {
        Which::Min if p + 1 == n && n >= 4 => None,
        Which::Min => Some(lo),
        Which::Max => Some(hi),
    }
}
