//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// Variable bounds; `None` means unbounded on that side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Bounds {
    pub fn free() -> Self {
        Bounds::default()
    }

    pub fn nonnegative() -> Self {
        Bounds { lower: Some(Rational::zero()), upper: None }
    }

    pub fn between(lower: Rational, upper: Rational) -> Self {
        Bounds { lower: Some(lower), upper: Some(upper) }
    }
}

/// Minimise `objective · x` subject to `constraints` and `bounds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<Bounds>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, solution: Vec<Rational> },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("constraint {row} has {got} coefficients, expected {expected}")]
    RowLength { row: usize, got: usize, expected: usize },
    #[error("{got} bounds given for {expected} variables")]
    BoundsLength { got: usize, expected: usize },
    #[error("variable {0} has lower bound above upper bound")]
    BadBounds(usize),
}

/// How an original variable is expressed through nonnegative columns.
enum Subst {
    /// `x = lower + y`
    Shift(Rational, usize),
    /// `x = upper - y`
    Mirror(Rational, usize),
    /// `x = y+ - y-`
    Split(usize, usize),
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced-cost row; the last entry is minus the objective value.
    z: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &pivot_row, c);
            }
        }
        eliminate(&mut self.z, &pivot_row, c);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        self.z = costs.to_vec();
        self.z.push(Rational::zero());
        for r in 0..self.rows.len() {
            let cb = &costs[self.basis[r]];
            if !cb.is_zero() {
                let row = &self.rows[r];
                for (zj, a) in self.z.iter_mut().zip(row) {
                    if !a.is_zero() {
                        *zj -= cb * a;
                    }
                }
            }
        }
    }

    /// Runs Bland's rule over the columns in `allowed`. Returns false if unbounded.
    fn optimise(&mut self, allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| allowed[j] && self.z[j].is_negative());
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if a.is_positive() {
                    let ratio = self.rhs(r) / a;
                    let better = match &leave {
                        None => true,
                        Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

fn eliminate(row: &mut [Rational], pivot_row: &[Rational], c: usize) {
    let f = row[c].clone();
    if f.is_zero() {
        return;
    }
    for (v, p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *v -= &f * p;
        }
    }
}

/// Solves `lp` exactly. Infeasibility and unboundedness are reported as
/// outcomes; malformed input is an error.
pub fn simplex_solve(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    let nvars = lp.objective.len();
    if lp.bounds.len() != nvars {
        return Err(LpError::BoundsLength { got: lp.bounds.len(), expected: nvars });
    }
    for (row, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != nvars {
            return Err(LpError::RowLength { row, got: c.coeffs.len(), expected: nvars });
        }
    }

    // Substitute every variable by nonnegative columns.
    let mut subst = Vec::with_capacity(nvars);
    let mut ncols = 0usize;
    let mut extra: Vec<(usize, Rational)> = Vec::new(); // y_col <= range
    for (k, b) in lp.bounds.iter().enumerate() {
        match (&b.lower, &b.upper) {
            (Some(lo), up) => {
                if let Some(up) = up {
                    if up < lo {
                        return Err(LpError::BadBounds(k));
                    }
                    extra.push((ncols, up - lo));
                }
                subst.push(Subst::Shift(lo.clone(), ncols));
                ncols += 1;
            }
            (None, Some(up)) => {
                subst.push(Subst::Mirror(up.clone(), ncols));
                ncols += 1;
            }
            (None, None) => {
                subst.push(Subst::Split(ncols, ncols + 1));
                ncols += 2;
            }
        }
    }

    // Rows over the structural columns: (coeffs, sense, rhs).
    let mut rows: Vec<(Vec<Rational>, Sense, Rational)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![Rational::zero(); ncols];
        let mut rhs = c.rhs.clone();
        for (a, s) in c.coeffs.iter().zip(&subst) {
            if a.is_zero() {
                continue;
            }
            match s {
                Subst::Shift(lo, j) => {
                    rhs -= a * lo;
                    coeffs[*j] += a;
                }
                Subst::Mirror(up, j) => {
                    rhs -= a * up;
                    coeffs[*j] -= a;
                }
                Subst::Split(p, q) => {
                    coeffs[*p] += a;
                    coeffs[*q] -= a;
                }
            }
        }
        rows.push((coeffs, c.sense, rhs));
    }
    for (j, range) in extra {
        let mut coeffs = vec![Rational::zero(); ncols];
        coeffs[j] = Rational::from_integer(1.into());
        rows.push((coeffs, Sense::Le, range));
    }
    let mut costs = vec![Rational::zero(); ncols];
    let mut offset = Rational::zero();
    for (c, s) in lp.objective.iter().zip(&subst) {
        match s {
            Subst::Shift(lo, j) => {
                offset += c * lo;
                costs[*j] += c;
            }
            Subst::Mirror(up, j) => {
                offset += c * up;
                costs[*j] -= c;
            }
            Subst::Split(p, q) => {
                costs[*p] += c;
                costs[*q] -= c;
            }
        }
    }

    // Normalise to nonnegative right-hand sides.
    for (coeffs, sense, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            coeffs.iter_mut().for_each(|a| *a = -a.clone());
            *rhs = -rhs.clone();
            *sense = match *sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
        }
    }

    // Columns: structural | slack/surplus | artificial.
    let nslack = rows.iter().filter(|r| r.1 != Sense::Eq).count();
    let nart = rows.iter().filter(|r| r.1 != Sense::Le).count();
    let width = ncols + nslack + nart;
    let first_art = ncols + nslack;
    let one = Rational::from_integer(1.into());
    let mut tab = Tableau { rows: Vec::with_capacity(rows.len()), basis: Vec::new(), z: Vec::new(), width };
    let (mut next_slack, mut next_art) = (ncols, first_art);
    for (coeffs, sense, rhs) in rows {
        let mut row = coeffs;
        row.resize(width + 1, Rational::zero());
        row[width] = rhs;
        match sense {
            Sense::Le => {
                row[next_slack] = one.clone();
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Sense::Ge => {
                row[next_slack] = -one.clone();
                next_slack += 1;
                row[next_art] = one.clone();
                tab.basis.push(next_art);
                next_art += 1;
            }
            Sense::Eq => {
                row[next_art] = one.clone();
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(row);
    }

    // Phase 1: minimise the sum of artificials.
    let mut all = vec![true; width];
    if nart > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        phase1[first_art..].iter_mut().for_each(|c| *c = one.clone());
        tab.set_costs(&phase1);
        tab.optimise(&all);
        if !tab.z[width].is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= first_art {
                match (0..first_art).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(j) => tab.pivot(r, j),
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        all[first_art..].iter_mut().for_each(|a| *a = false);
    }

    // Phase 2.
    costs.resize(width, Rational::zero());
    tab.set_costs(&costs);
    if !tab.optimise(&all) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut y = vec![Rational::zero(); width];
    for (r, &b) in tab.basis.iter().enumerate() {
        y[b] = tab.rhs(r).clone();
    }
    let solution = subst
        .iter()
        .map(|s| match s {
            Subst::Shift(lo, j) => lo + &y[*j],
            Subst::Mirror(up, j) => up - &y[*j],
            Subst::Split(p, q) => &y[*p] - &y[*q],
        })
        .collect();
    Ok(LpOutcome::Optimal { value: -tab.z[width].clone() + offset, solution })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn optimum(lp: &LinearProgram) -> (Rational, Vec<Rational>) {
        match simplex_solve(lp).unwrap() {
            LpOutcome::Optimal { value, solution } => (value, solution),
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn single_lower_bound() {
        let lp = LinearProgram {
            objective: ints(&[1]),
            constraints: vec![Constraint { coeffs: ints(&[1]), sense: Sense::Ge, rhs: int(3) }],
            bounds: vec![Bounds::free()],
        };
        assert_eq!(optimum(&lp), (int(3), ints(&[3])));
    }

    #[test]
    fn two_lower_bounds() {
        let lp = LinearProgram {
            objective: ints(&[1, 1]),
            constraints: vec![
                Constraint { coeffs: ints(&[1, 0]), sense: Sense::Ge, rhs: int(1) },
                Constraint { coeffs: ints(&[0, 1]), sense: Sense::Ge, rhs: int(2) },
            ],
            bounds: vec![Bounds::nonnegative(), Bounds::nonnegative()],
        };
        assert_eq!(optimum(&lp).0, int(3));
    }

    #[test]
    fn textbook_maximisation() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let lp = LinearProgram {
            objective: ints(&[-3, -5]),
            constraints: vec![
                Constraint { coeffs: ints(&[1, 0]), sense: Sense::Le, rhs: int(4) },
                Constraint { coeffs: ints(&[0, 2]), sense: Sense::Le, rhs: int(12) },
                Constraint { coeffs: ints(&[3, 2]), sense: Sense::Le, rhs: int(18) },
            ],
            bounds: vec![Bounds::nonnegative(), Bounds::nonnegative()],
        };
        assert_eq!(optimum(&lp), (int(-36), ints(&[2, 6])));
    }

    #[test]
    fn fractional_optimum_and_mirrored_bounds() {
        // min -x - y, x + 2y <= 4 (as -x - 2y >= -4), 3x + y <= 5, x <= 10 only
        let lp = LinearProgram {
            objective: ints(&[-1, -1]),
            constraints: vec![
                Constraint { coeffs: ints(&[-1, -2]), sense: Sense::Ge, rhs: int(-4) },
                Constraint { coeffs: ints(&[3, 1]), sense: Sense::Le, rhs: int(5) },
                Constraint { coeffs: ints(&[1, 0]), sense: Sense::Ge, rhs: int(0) },
                Constraint { coeffs: ints(&[0, 1]), sense: Sense::Ge, rhs: int(0) },
            ],
            bounds: vec![Bounds { lower: None, upper: Some(int(10)) }, Bounds::free()],
        };
        let (v, x) = optimum(&lp);
        assert_eq!(v, rat(-13, 5));
        assert_eq!(x, vec![rat(6, 5), rat(7, 5)]);
    }

    #[test]
    fn statuses() {
        let infeasible = LinearProgram {
            objective: ints(&[1]),
            constraints: vec![
                Constraint { coeffs: ints(&[1]), sense: Sense::Ge, rhs: int(2) },
                Constraint { coeffs: ints(&[1]), sense: Sense::Le, rhs: int(1) },
            ],
            bounds: vec![Bounds::free()],
        };
        assert_eq!(simplex_solve(&infeasible).unwrap(), LpOutcome::Infeasible);
        let unbounded = LinearProgram {
            objective: ints(&[-1]),
            constraints: vec![],
            bounds: vec![Bounds::nonnegative()],
        };
        assert_eq!(simplex_solve(&unbounded).unwrap(), LpOutcome::Unbounded);
        let bad = LinearProgram {
            objective: ints(&[1]),
            constraints: vec![],
            bounds: vec![Bounds::between(int(2), int(1))],
        };
        assert_eq!(simplex_solve(&bad), Err(LpError::BadBounds(0)));
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 2 stated twice, min x with y <= 1 -> x = 1
        let row = Constraint { coeffs: ints(&[1, 1]), sense: Sense::Eq, rhs: int(2) };
        let lp = LinearProgram {
            objective: ints(&[1, 0]),
            constraints: vec![row.clone(), row],
            bounds: vec![Bounds::nonnegative(), Bounds::between(int(0), int(1))],
        };
        assert_eq!(optimum(&lp), (int(1), ints(&[1, 1])));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let lp = LinearProgram {
            objective: vec![rat(-3, 4), int(150), rat(-1, 50), int(6)],
            constraints: vec![
                Constraint { coeffs: vec![rat(1, 4), int(-60), rat(-1, 25), int(9)], sense: Sense::Le, rhs: int(0) },
                Constraint { coeffs: vec![rat(1, 2), int(-90), rat(-1, 50), int(3)], sense: Sense::Le, rhs: int(0) },
                Constraint { coeffs: ints(&[0, 0, 1, 0]), sense: Sense::Le, rhs: int(1) },
            ],
            bounds: vec![Bounds::nonnegative(); 4],
        };
        assert_eq!(optimum(&lp).0, rat(-1, 20));
    }
}
