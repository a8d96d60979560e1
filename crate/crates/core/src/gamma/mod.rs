//! `γ(G) = min { max_{uv ∈ E} |x_u - x_v| : Σ x = 0, ||x||_∞ = 1 }`.
//!
//! Some coordinate of an optimal `x` equals ±1 and `x -> -x` preserves the
//! constraints, so `γ` is the minimum over `i` of the linear program with
//! `x_i = 1` and `-1 <= x_j <= 1`.

mod simplex;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exec::{map_slice, Exec};
use crate::graph::Graph;
use crate::rational::{int, Rational};

pub use simplex::{simplex_solve, Bounds, Constraint, LinearProgram, LpError, LpOutcome, Sense};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("anchored program for vertex {anchor} ended as {status}")]
    Construction { anchor: usize, status: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    #[serde(with = "crate::rational::serde_pq")]
    pub value: Rational,
    #[serde(serialize_with = "ser_vec")]
    pub optimal_vector: Vec<Rational>,
    pub anchored_vertex: usize,
    /// Set for edgeless graphs, where the value is 0 by convention.
    pub degenerate: bool,
}

fn ser_vec<S: serde::Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(crate::rational::to_pq))
}

/// The program for one anchor: variables `x_0..x_{n-1}, t`.
pub fn anchored_program(g: &Graph, anchor: usize) -> LinearProgram {
    let n = g.n();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = Rational::one();
    let mut bounds: Vec<Bounds> = (0..n).map(|_| Bounds::between(int(-1), int(1))).collect();
    bounds[anchor] = Bounds::between(int(1), int(1));
    bounds.push(Bounds::nonnegative());
    let mut sum = vec![Rational::one(); n + 1];
    sum[n] = Rational::zero();
    let mut constraints = vec![Constraint { coeffs: sum, sense: Sense::Eq, rhs: Rational::zero() }];
    for (u, v) in g.edges() {
        for sign in [1, -1] {
            let mut coeffs = vec![Rational::zero(); n + 1];
            coeffs[u] = int(sign);
            coeffs[v] = int(-sign);
            coeffs[n] = int(-1);
            constraints.push(Constraint { coeffs, sense: Sense::Le, rhs: Rational::zero() });
        }
    }
    LinearProgram { objective, constraints, bounds }
}

pub fn gamma_exact(g: &Graph) -> Result<GammaResult, GammaError> {
    gamma_exact_with(g, Exec::default())
}

pub fn gamma_exact_with(g: &Graph, exec: Exec) -> Result<GammaResult, GammaError> {
    let n = g.n();
    if g.m() == 0 {
        let mut x = vec![Rational::zero(); n];
        if n >= 2 {
            x[0] = int(1);
            x[1] = int(-1);
        }
        return Ok(GammaResult { value: Rational::zero(), optimal_vector: x, anchored_vertex: 0, degenerate: true });
    }
    let anchors: Vec<usize> = (0..n).collect();
    let solved = map_slice(exec, &anchors, |&i| match simplex_solve(&anchored_program(g, i))? {
        LpOutcome::Optimal { value, mut solution } => {
            solution.truncate(n);
            Ok((value, solution))
        }
        LpOutcome::Infeasible => Err(GammaError::Construction { anchor: i, status: "infeasible" }),
        LpOutcome::Unbounded => Err(GammaError::Construction { anchor: i, status: "unbounded" }),
    });
    let mut best: Option<GammaResult> = None;
    for (i, r) in solved.into_iter().enumerate() {
        let (value, x) = r?;
        if best.as_ref().map_or(true, |b| value < b.value) {
            best = Some(GammaResult { value, optimal_vector: x, anchored_vertex: i, degenerate: false });
        }
    }
    Ok(best.expect("n >= 2 when there is an edge"))
}

/// `max_{uv ∈ E} |x_u - x_v|` for a given vector.
pub fn max_edge_difference(g: &Graph, x: &[Rational]) -> Rational {
    g.edges().map(|(u, v)| (&x[u] - &x[v]).abs()).max().unwrap_or_else(Rational::zero)
}
