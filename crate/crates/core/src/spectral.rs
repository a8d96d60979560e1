//! Laplacian matrices, a cyclic Jacobi eigensolver, algebraic connectivity
//! and the two-valued l1-Fiedler vector with its exact Laplacian identities.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cuts::{b_exact, Cut, CutError};
use crate::graph::{bits, Graph};
use crate::rational::{rat, serde_pq, Rational};

/// Absolute tolerance used when comparing floating-point spectral quantities
/// with exact rationals.
pub const SPECTRAL_TOL: f64 = 1e-9;
/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("cut is over {cut} vertices but the graph has {graph}")]
    CutMismatch { cut: usize, graph: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Cut(#[from] CutError),
}

/// Dense symmetric matrix with exact integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SymMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self, SpectralError> {
        assert_eq!(entries.len(), n * n, "entries must be n*n");
        for i in 0..n {
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// `M x` in exact arithmetic.
    pub fn mul_exact(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(&a, _)| a != 0)
                    .fold(Rational::zero(), |acc, (&a, xi)| acc + xi * Rational::from_integer(a.into()))
            })
            .collect()
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for u in 0..n {
        entries[u * n + u] = g.degree(u) as i64;
        for v in bits(g.neighbors(u)) {
            entries[u * n + v] = -1;
        }
    }
    SymMatrix { n, entries }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` is a unit eigenvector for `eigenvalues[i]`.
    #[serde(skip)]
    pub eigenvectors: Vec<Vec<f64>>,
    /// Unit eigenvector of the second smallest eigenvalue; absent when `n = 1`.
    pub fiedler_vector: Option<Vec<f64>>,
    /// `max_i ||M v_i - λ_i v_i||_inf`.
    pub residual: f64,
    pub sweeps: usize,
}

impl SpectrumResult {
    pub fn second_smallest(&self) -> f64 {
        self.eigenvalues.get(1).copied().unwrap_or(0.0)
    }

    pub fn largest(&self) -> f64 {
        *self.eigenvalues.last().expect("n >= 1")
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// All eigenpairs by cyclic-by-row Jacobi rotations.
pub fn eigen_sym(m: &SymMatrix, tol: f64) -> Result<SpectrumResult, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::BadTolerance(tol));
    }
    let n = m.n;
    let mut a = m.to_f64();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| {
            let mut x: Vec<f64> = (0..n).map(|k| v[k * n + col]).collect();
            let norm = x.iter().map(|y| y * y).sum::<f64>().sqrt();
            // first clearly nonzero entry positive
            let sign = x.iter().find(|y| y.abs() > 1e-12).map_or(1.0, |y| y.signum());
            x.iter_mut().for_each(|y| *y *= sign / norm);
            x
        })
        .collect();
    let mf = m.to_f64();
    let residual = eigenvalues
        .iter()
        .zip(&eigenvectors)
        .map(|(&lambda, x)| {
            (0..n)
                .map(|i| {
                    let mx: f64 = (0..n).map(|j| mf[i * n + j] * x[j]).sum();
                    (mx - lambda * x[i]).abs()
                })
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    Ok(SpectrumResult {
        fiedler_vector: eigenvectors.get(1).cloned(),
        eigenvalues,
        eigenvectors,
        residual,
        sweeps,
    })
}

/// Laplacian spectrum of `g`.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectrumResult, SpectralError> {
    eigen_sym(&laplacian(g), JACOBI_TOL)
}

/// `a(G)`, the second smallest Laplacian eigenvalue (0 for `n = 1`).
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, SpectralError> {
    Ok(laplacian_spectrum(g)?.second_smallest())
}

/// `λ_1(G)`, the largest Laplacian eigenvalue.
pub fn largest_eigenvalue(g: &Graph) -> Result<f64, SpectralError> {
    Ok(laplacian_spectrum(g)?.largest())
}

/// The two-valued vector `x_v = 1/(2|S|)` on `S`, `-1/(2|S^c|)` on `S^c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L1FiedlerVector {
    #[serde(serialize_with = "ser_entries")]
    pub entries: Vec<Rational>,
    pub source_cut: Cut,
}

fn ser_entries<S: serde::Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(crate::rational::to_pq))
}

impl L1FiedlerVector {
    pub fn sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    pub fn l1_norm(&self) -> Rational {
        self.entries.iter().map(|x| x.abs()).sum()
    }
}

pub fn l1_fiedler_vector(g: &Graph, cut: &Cut) -> Result<L1FiedlerVector, SpectralError> {
    let n = g.n();
    if cut.set.universe() != n {
        return Err(SpectralError::CutMismatch { cut: cut.set.universe(), graph: n });
    }
    let s = cut.size() as i64;
    let inside = rat(1, 2 * s);
    let outside = rat(-1, 2 * (n as i64 - s));
    let entries = (0..n).map(|v| if cut.set.contains(v) { inside.clone() } else { outside.clone() }).collect();
    Ok(L1FiedlerVector { entries, source_cut: cut.clone() })
}

/// Outcome of the exact Laplacian identities for a sparsest cut `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(with = "serde_pq")]
    pub b: Rational,
    pub cut: Cut,
    /// `sum over S of (Lx)_u`
    #[serde(with = "serde_pq")]
    pub sum_inside: Rational,
    /// `sum over S^c of (Lx)_u`
    #[serde(with = "serde_pq")]
    pub sum_outside: Rational,
    pub sums_hold: bool,
    /// First vertex whose `(Lx)_u` differs from the predicted value.
    pub mismatch: Option<usize>,
    pub holds: bool,
}

/// Builds `x` from the sparsest-cut witness of `b_exact` and checks, exactly,
/// that `(Lx)` sums to `b` on `S` and `-b` on `S^c`, and that each entry is
/// `b |N_{S^c}(u)| / |∂S|` for `u ∈ S` and `-b |N_S(u)| / |∂S|` otherwise.
pub fn laplacian_identity_check(g: &Graph) -> Result<IdentityReport, SpectralError> {
    let r = b_exact(g)?;
    let cut = r.witness.ok_or(SpectralError::Disconnected)?;
    identity_for_cut(g, &cut, &r.value)
}

/// The same identities for a given cut and value `b`.
pub fn identity_for_cut(g: &Graph, cut: &Cut, b: &Rational) -> Result<IdentityReport, SpectralError> {
    let x = l1_fiedler_vector(g, cut)?;
    let lx = laplacian(g).mul_exact(&x.entries);
    let inside_mask = cut.set.bits();
    let mut sum_inside = Rational::zero();
    let mut sum_outside = Rational::zero();
    let mut mismatch = None;
    for (u, value) in lx.iter().enumerate() {
        let in_s = inside_mask >> u & 1 == 1;
        let across = if in_s {
            g.neighbors(u) & !inside_mask
        } else {
            g.neighbors(u) & inside_mask
        }
        .count_ones() as i64;
        let mut predicted = b * rat(across, cut.boundary as i64);
        if in_s {
            sum_inside += value;
        } else {
            predicted = -predicted;
            sum_outside += value;
        }
        if mismatch.is_none() && *value != predicted {
            mismatch = Some(u);
        }
    }
    let sums_hold = sum_inside == *b && sum_outside == -b.clone();
    Ok(IdentityReport {
        b: b.clone(),
        cut: cut.clone(),
        sum_inside,
        sum_outside,
        sums_hold,
        holds: sums_hold && mismatch.is_none(),
        mismatch,
    })
}
