//! Inequalities relating `b(G)` to other invariants, evaluated on concrete
//! graphs, plus the extremal-tree constructors.

mod extremal;
mod trees;

use num_traits::One;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cuts::{
    b_exact, b_exact_with, cheeger_exact, edge_connectivity, equality_structure_check, iso_exact, min_relative_cut,
    sparsest_cut_of_size, Cut, CutError, EqualityWitness, ENUMERATION_LIMIT,
};
use crate::exec::Exec;
use crate::graph::{to_graph6, Graph, GraphError, MAX_VERTICES};
use crate::rational::{int, rat, to_f64, to_pq, Rational};
use crate::spectral::{laplacian_spectrum, SpectralError};
use crate::tree::{b_tree, TreeError};

pub use extremal::{
    balanced_value, diameter_bounds, diameter_target, extremal_tree_diameter, extremal_tree_maxdeg,
    extremal_tree_pendants, max_degree_bounds, max_degree_target, pendant_bounds, pendant_target, spider_value,
    split_value, Which,
};
pub use trees::{verify_tree_extremals, verify_tree_extremals_with, ClassReport, TreeExtremalReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("order {n} outside {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("{constraint} {value} is outside the admissible range for trees on {n} vertices")]
    Infeasible { constraint: &'static str, n: usize, value: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{n} + {k} vertices exceed the limit {max}")]
    Overflow { n: usize, k: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// One side of a recorded comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Exact(Rational),
    Approx(f64),
    Flag(bool),
}

impl Quantity {
    fn as_f64(&self) -> f64 {
        match self {
            Quantity::Exact(r) => to_f64(r),
            Quantity::Approx(x) => *x,
            Quantity::Flag(b) => *b as u8 as f64,
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Quantity::Exact(r) => s.serialize_str(&to_pq(r)),
            Quantity::Approx(x) => s.serialize_f64(*x),
            Quantity::Flag(b) => s.serialize_bool(*b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "==")]
    Eq,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Cut { set: Vec<usize> },
    Vertex { vertex: usize },
    EdgeOrder { vertex: usize, edges: Vec<(usize, usize)> },
}

impl From<&Cut> for Witness {
    fn from(c: &Cut) -> Self {
        Witness::Cut { set: c.set.iter().collect() }
    }
}

impl From<&EqualityWitness> for Witness {
    fn from(w: &EqualityWitness) -> Self {
        Witness::EdgeOrder { vertex: w.vertex, edges: w.edge_order.clone() }
    }
}

/// A single inequality evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem_id: &'static str,
    /// graph6 encoding of the graph.
    pub graph: String,
    pub lhs: Quantity,
    pub relation: Relation,
    pub rhs: Quantity,
    pub holds: bool,
    /// Both sides exact and equal.
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl BoundReport {
    /// Evaluates `lhs relation rhs`. Exact sides compare exactly; when either
    /// side is approximate the comparison allows `tol` of slack.
    pub fn new(theorem_id: &'static str, graph: &str, lhs: Quantity, relation: Relation, rhs: Quantity, tol: f64) -> Self {
        let (holds, equality) = match (&lhs, &rhs) {
            (Quantity::Exact(a), Quantity::Exact(b)) => (
                match relation {
                    Relation::Le => a <= b,
                    Relation::Lt => a < b,
                    Relation::Ge => a >= b,
                    Relation::Gt => a > b,
                    Relation::Eq => a == b,
                },
                a == b,
            ),
            (Quantity::Flag(a), Quantity::Flag(b)) => (relation == Relation::Eq && a == b, false),
            _ => {
                let (a, b) = (lhs.as_f64(), rhs.as_f64());
                (
                    match relation {
                        Relation::Le => a <= b + tol,
                        Relation::Lt => a < b + tol,
                        Relation::Ge => a + tol >= b,
                        Relation::Gt => a + tol > b,
                        Relation::Eq => (a - b).abs() <= tol,
                    },
                    false,
                )
            }
        };
        BoundReport { theorem_id, graph: graph.to_string(), lhs, relation, rhs, holds, equality, witness: None }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }
}

/// graph6 where possible, otherwise the order and edge count.
pub fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("n{}m{}", g.n(), g.m()))
}

/// `b(P_n)`: `2/n` for even `n`, `2n/(n^2 - 1)` for odd `n`.
pub fn path_value(n: usize) -> Rational {
    let n = n as i64;
    if n % 2 == 0 {
        rat(2, n)
    } else {
        rat(2 * n, n * n - 1)
    }
}

/// `b(G) + b(G^c)` against `(1/2, n/2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NordhausGaddum {
    #[serde(with = "crate::rational::serde_pq")]
    pub b: Rational,
    #[serde(with = "crate::rational::serde_pq")]
    pub b_complement: Rational,
    pub complement_disconnected: bool,
    #[serde(with = "crate::rational::serde_pq")]
    pub sum: Rational,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub equality: bool,
    pub is_complete: bool,
}

impl NordhausGaddum {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds && self.equality == self.is_complete
    }

    pub fn reports(&self, g: &Graph, id: &str) -> Vec<BoundReport> {
        let half_n = rat(g.n() as i64, 2);
        vec![
            BoundReport::new(
                "complement-sum-lower",
                id,
                Quantity::Exact(self.sum.clone()),
                Relation::Gt,
                Quantity::Exact(rat(1, 2)),
                0.0,
            ),
            BoundReport::new(
                "complement-sum-upper",
                id,
                Quantity::Exact(self.sum.clone()),
                Relation::Le,
                Quantity::Exact(half_n),
                0.0,
            ),
            BoundReport::new(
                "complement-sum-equality-iff-complete",
                id,
                Quantity::Flag(self.equality),
                Relation::Eq,
                Quantity::Flag(self.is_complete),
                0.0,
            ),
        ]
    }
}

fn require_connected(g: &Graph) -> Result<(), BoundsError> {
    if g.n() < 2 {
        return Err(CutError::TooSmall(g.n()).into());
    }
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    Ok(())
}

pub fn nordhaus_gaddum_check(g: &Graph) -> Result<NordhausGaddum, BoundsError> {
    require_connected(g)?;
    let b = b_exact(g)?.value;
    let comp = b_exact(&g.complement())?;
    let sum = &b + &comp.value;
    let half_n = rat(g.n() as i64, 2);
    Ok(NordhausGaddum {
        lower_holds: sum > rat(1, 2),
        upper_holds: sum <= half_n,
        equality: sum == half_n,
        is_complete: g.is_complete(),
        complement_disconnected: comp.disconnected,
        b_complement: comp.value,
        b,
        sum,
    })
}

/// `b(G) Π_{i<k} (1 - 1/(n+i)^2)` and, for stars, whether adding the `k`
/// pendants at the centre attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantBound {
    #[serde(with = "crate::rational::serde_pq")]
    pub bound: Rational,
    pub attained_by_star: bool,
}

pub fn pendant_factor(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        let m = (n + i) as i64;
        acc * rat(m * m - 1, m * m)
    })
}

pub fn pendant_addition_bound(g: &Graph, k: usize) -> Result<PendantBound, BoundsError> {
    require_connected(g)?;
    let n = g.n();
    if n + k > MAX_VERTICES {
        return Err(BoundsError::Overflow { n, k, max: MAX_VERTICES });
    }
    let bound = b_exact(g)?.value * pendant_factor(n, k);
    let centre = (0..n).find(|&v| g.degree(v) == n - 1);
    let attained_by_star = match centre {
        Some(c) if g.is_tree() => b_tree(&g.attach_pendants(c, k)?)? == bound,
        _ => false,
    };
    Ok(PendantBound { bound, attained_by_star })
}

fn sqrt_f64(x: f64) -> f64 {
    x.max(0.0).sqrt()
}

/// Evaluates every inequality that applies to the connected graph `g`.
/// Exact comparisons use rationals; spectral ones allow `tol` of slack.
/// Reports are sorted by theorem id.
pub fn verify_suite(g: &Graph, tol: f64) -> Result<Vec<BoundReport>, BoundsError> {
    require_connected(g)?;
    let n = g.n();
    let m = g.m();
    let id = graph_id(g);
    let ni = n as i64;
    let mut out = Vec::with_capacity(24);
    let exact = |r: &Rational| Quantity::Exact(r.clone());
    let approx = Quantity::Approx;

    let bres = b_exact(g)?;
    let b = bres.value.clone();
    let sparsest = bres.witness.expect("connected graph has a sparsest cut");
    let spec = laplacian_spectrum(g)?;
    let a = spec.second_smallest();
    let lambda1 = spec.largest();
    let bf = to_f64(&b);

    out.push(BoundReport::new("spectral-gap-lower", &id, approx(a / 2.0), Relation::Le, exact(&b), tol));
    out.push(BoundReport::new("spectral-radius-upper", &id, exact(&b), Relation::Le, approx(lambda1 / 2.0), tol));
    let xi = min_relative_cut(g)?;
    out.push(
        BoundReport::new("relative-cut-lower", &id, exact(&xi.value), Relation::Le, exact(&b), 0.0)
            .with_witness((&xi.witness.expect("connected")).into()),
    );
    let dmin_bound = rat(ni * g.min_degree() as i64, 2 * (ni - 1));
    out.push(BoundReport::new("min-degree-upper", &id, exact(&b), Relation::Le, exact(&dmin_bound), 0.0));
    out.push(BoundReport::new("edge-spectral-upper", &id, approx(bf), Relation::Le, approx(sqrt_f64(m as f64 * a)), tol));

    let density = rat(m as i64, ni - 1);
    out.push(
        BoundReport::new("edge-density-upper", &id, exact(&b), Relation::Le, exact(&density), 0.0)
            .with_witness((&sparsest).into()),
    );
    out.push(BoundReport::new(
        "edge-density-equality-iff-complete",
        &id,
        Quantity::Flag(b == density),
        Relation::Eq,
        Quantity::Flag(g.is_complete()),
        0.0,
    ));
    out.push(BoundReport::new("path-lower", &id, exact(&b), Relation::Ge, exact(&path_value(n)), 0.0));
    out.extend(nordhaus_gaddum_check(g)?.reports(g, &id));

    let lambda = edge_connectivity(g)?;
    let conn_bound = rat(ni * lambda as i64, 2 * (ni - 1));
    let conn = BoundReport::new("edge-connectivity-upper", &id, exact(&b), Relation::Le, exact(&conn_bound), 0.0);
    if conn.equality {
        let w = equality_structure_check(g)?;
        let mut r = BoundReport::new(
            "edge-connectivity-equality-structure",
            &id,
            Quantity::Flag(w.is_some()),
            Relation::Eq,
            Quantity::Flag(true),
            0.0,
        );
        r.witness = w.as_ref().map(Witness::from);
        out.push(r);
    }
    out.push(conn);

    if n < ENUMERATION_LIMIT {
        let bound = &b * pendant_factor(n, 1);
        let mut worst: Option<(Rational, usize)> = None;
        for v in 0..n {
            let value = b_exact_with(&g.attach_pendants(v, 1)?, Exec::Serial)?.value;
            if worst.as_ref().map_or(true, |(w, _)| value > *w) {
                worst = Some((value, v));
            }
        }
        let (value, v) = worst.expect("n >= 2");
        out.push(
            BoundReport::new("pendant-addition-upper", &id, exact(&value), Relation::Le, exact(&bound), 0.0)
                .with_witness(Witness::Vertex { vertex: v }),
        );
    }

    let iso = iso_exact(g)?;
    let iso_value = iso.value.clone();
    let iso_cut = iso.witness.expect("connected");
    out.push(
        BoundReport::new("isoperimetric-upper", &id, exact(&b), Relation::Le, exact(&iso_value), 0.0)
            .with_witness((&iso_cut).into()),
    );
    if n >= 4 {
        let dmax = g.max_degree() as f64;
        out.push(BoundReport::new(
            "spectral-degree-upper",
            &id,
            approx(bf),
            Relation::Le,
            approx(sqrt_f64(a * (2.0 * dmax - a))),
            tol,
        ));
    }
    if let Some(r) = g.regular_degree() {
        out.push(BoundReport::new(
            "regular-isoperimetric-lower",
            &id,
            exact(&b),
            Relation::Ge,
            exact(&(&iso_value / int(2))),
            0.0,
        ));
        if r > 0 {
            let h = cheeger_exact(g)?.value;
            out.push(BoundReport::new(
                "regular-cheeger-identity",
                &id,
                exact(&h),
                Relation::Eq,
                exact(&(&iso_value / int(r as i64))),
                0.0,
            ));
        }
        if n >= 4 {
            let rf = r as f64;
            out.push(BoundReport::new(
                "regular-spectral-comparison",
                &id,
                approx(a * (2.0 * rf - a)),
                Relation::Lt,
                approx(m as f64 * a),
                tol,
            ));
        }
    }

    let min_rho = &b * rat(2, ni);
    let half = n / 2;
    if let Some(c) = sparsest_cut_of_size(g, half)? {
        if c.rho == min_rho {
            out.push(
                BoundReport::new("half-sparsest-cut-isoperimetric", &id, exact(&c.xi), Relation::Eq, exact(&iso_value), 0.0)
                    .with_witness((&c).into()),
            );
            if n % 2 == 0 {
                out.push(
                    BoundReport::new("balanced-sparsest-cut-iso-equals-b", &id, exact(&iso_value), Relation::Eq, exact(&b), 0.0)
                        .with_witness((&c).into()),
                );
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| int(g.degree(v) as i64) == iso_value) {
        let singleton = rat(ni * g.degree(v) as i64, 2 * (ni - 1));
        out.push(
            BoundReport::new("singleton-isoperimetric-sparsest", &id, exact(&singleton), Relation::Eq, exact(&b), 0.0)
                .with_witness(Witness::Vertex { vertex: v }),
        );
    }

    out.sort_by_key(|r| r.theorem_id);
    Ok(out)
}

/// Convenience: true when every report holds.
pub fn all_hold(reports: &[BoundReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// Number of reports that fail.
pub fn violations(reports: &[BoundReport]) -> usize {
    reports.iter().filter(|r| !r.holds).count()
}
