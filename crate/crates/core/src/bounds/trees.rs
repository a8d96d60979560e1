//! Exhaustive check of the tree extremal results over all labeled trees of
//! one order.

use serde::Serialize;

use super::extremal::{
    balanced_value, diameter_bounds, extremal_tree_diameter, extremal_tree_maxdeg, extremal_tree_pendants,
    max_degree_bounds, pendant_bounds, pendant_target, split_value, Which,
};
use super::BoundsError;
use crate::cuts::b_exact;
use crate::exec::{fold_chunks, Exec};
use crate::graph::{tree_count, Graph, TreeIter, MAX_TREE_ORDER};
use crate::rational::{serde_pq, Rational};
use crate::tree::centre_split_unchecked;

/// Trees per work unit in the parallel sweep.
const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy)]
struct Range {
    count: u64,
    /// smallest and largest centre-edge small side
    min_a: usize,
    max_a: usize,
}

impl Range {
    const EMPTY: Range = Range { count: 0, min_a: usize::MAX, max_a: 0 };

    fn add(&mut self, a: usize) {
        self.count += 1;
        self.min_a = self.min_a.min(a);
        self.max_a = self.max_a.max(a);
    }

    fn merge(self, o: Range) -> Range {
        Range { count: self.count + o.count, min_a: self.min_a.min(o.min_a), max_a: self.max_a.max(o.max_a) }
    }
}

#[derive(Debug, Clone)]
struct Acc {
    all: Range,
    max_b_trees: u64,
    max_b_stars: u64,
    diameter: Vec<Range>,
    degree: Vec<Range>,
    pendants: Vec<Range>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc {
            all: Range::EMPTY,
            max_b_trees: 0,
            max_b_stars: 0,
            diameter: vec![Range::EMPTY; n],
            degree: vec![Range::EMPTY; n],
            pendants: vec![Range::EMPTY; n + 1],
        }
    }

    fn merge(mut self, o: Acc) -> Acc {
        self.all = self.all.merge(o.all);
        self.max_b_trees += o.max_b_trees;
        self.max_b_stars += o.max_b_stars;
        for (a, b) in [(&mut self.diameter, &o.diameter), (&mut self.degree, &o.degree), (&mut self.pendants, &o.pendants)] {
            for (x, y) in a.iter_mut().zip(b) {
                *x = x.merge(*y);
            }
        }
        self
    }
}

/// Diameter of a tree by two sweeps.
fn tree_diameter(t: &Graph) -> usize {
    let far = |start: usize| {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        let mut last = start;
        let mut depth = 0;
        loop {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= t.neighbors(v);
            }
            next &= !seen;
            if next == 0 {
                return (last, depth);
            }
            seen |= next;
            frontier = next;
            last = next.trailing_zeros() as usize;
            depth += 1;
        }
    };
    far(far(0).0).1
}

/// Extremes of `b` in one constrained class against the closed-form range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub constraint: &'static str,
    pub value: usize,
    pub trees: u64,
    #[serde(with = "serde_pq")]
    pub min_b: Rational,
    #[serde(with = "serde_pq")]
    pub max_b: Rational,
    #[serde(with = "serde_pq")]
    pub lower_bound: Rational,
    #[serde(with = "serde_pq")]
    pub upper_bound: Rational,
    pub within_bounds: bool,
    /// Constructor output satisfies the constraint, attains the lower bound
    /// and ties the class minimum. `None` where the bound is not attainable.
    pub lower_sharp: Option<bool>,
    pub upper_sharp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeExtremalReport {
    pub n: usize,
    pub trees: u64,
    #[serde(with = "serde_pq")]
    pub min_b: Rational,
    #[serde(with = "serde_pq")]
    pub max_b: Rational,
    #[serde(with = "serde_pq")]
    pub path_b: Rational,
    #[serde(with = "serde_pq")]
    pub star_b: Rational,
    /// Every tree attaining the maximum is a star.
    pub max_only_stars: bool,
    pub classes: Vec<ClassReport>,
    pub holds: bool,
}

pub fn verify_tree_extremals(n: usize) -> Result<TreeExtremalReport, BoundsError> {
    verify_tree_extremals_with(n, Exec::default())
}

/// Sweeps all labeled trees of order `n`: the global minimum of `b` must be
/// `b(P_n)`, the maximum `b(S_n)` attained by stars only, and every class
/// with fixed diameter, maximum degree or pendant count must stay within its
/// closed-form range, with both ends attained by the constructors.
pub fn verify_tree_extremals_with(n: usize, exec: Exec) -> Result<TreeExtremalReport, BoundsError> {
    if !(2..=MAX_TREE_ORDER).contains(&n) {
        return Err(BoundsError::OrderOutOfRange { n, min: 2, max: MAX_TREE_ORDER });
    }
    let total = tree_count(n);
    let sweep = |range: std::ops::Range<u64>| {
        let mut acc = Acc::new(n);
        let mut it = TreeIter::with_range(n, range).expect("range within tree count");
        let mut t = Graph::empty(n).expect("n >= 2");
        while it.next_into(&mut t) {
            let (a, _) = centre_split_unchecked(&t);
            acc.all.add(a);
            let dmax = t.max_degree();
            if a == 1 {
                acc.max_b_trees += 1;
                acc.max_b_stars += (dmax == n - 1) as u64;
            }
            acc.diameter[tree_diameter(&t)].add(a);
            acc.degree[dmax].add(a);
            acc.pendants[t.pendant_count()].add(a);
        }
        acc
    };
    let acc = fold_chunks(exec, total, CHUNK, Acc::new(n), sweep, Acc::merge);

    let mut classes = Vec::new();
    let class = |constraint, value, r: &Range, bounds: (Rational, Rational), lower_target: Option<Rational>, build: &dyn Fn(Which) -> Result<Graph, BoundsError>, fits: &dyn Fn(&Graph) -> bool| -> Result<ClassReport, BoundsError> {
        let min_b = split_value(n, r.max_a);
        let max_b = split_value(n, r.min_a);
        let (lower_bound, upper_bound) = bounds;
        let attains = |w: Which, target: &Rational, extreme: &Rational| -> Result<bool, BoundsError> {
            let t = build(w)?;
            Ok(t.is_tree() && fits(&t) && b_exact(&t)?.value == *target && extreme == target)
        };
        let lower_sharp = match lower_target {
            Some(target) => Some(attains(Which::Min, &target, &min_b)?),
            None => None,
        };
        let upper_sharp = attains(Which::Max, &upper_bound, &max_b)?;
        Ok(ClassReport {
            constraint,
            value,
            trees: r.count,
            within_bounds: lower_bound <= min_b && max_b <= upper_bound,
            min_b,
            max_b,
            lower_bound,
            upper_bound,
            lower_sharp,
            upper_sharp,
        })
    };
    for d in 3..n {
        let r = &acc.diameter[d];
        let bounds = diameter_bounds(n, d);
        let lower = Some(bounds.0.clone());
        classes.push(class("diameter", d, r, bounds, lower, &|w| extremal_tree_diameter(n, d, w), &|t| {
            tree_diameter(t) == d
        })?);
    }
    for dmax in 2..n {
        let r = &acc.degree[dmax];
        let bounds = max_degree_bounds(n, dmax);
        let lower = Some(bounds.0.clone());
        classes.push(class("max_degree", dmax, r, bounds, lower, &|w| extremal_tree_maxdeg(n, dmax, w), &|t| {
            t.max_degree() == dmax
        })?);
    }
    for p in 2..n {
        let r = &acc.pendants[p];
        let lower = pendant_target(n, p, Which::Min);
        classes.push(class("pendants", p, r, pendant_bounds(n, p), lower, &|w| extremal_tree_pendants(n, p, w), &|t| {
            t.pendant_count() == p
        })?);
    }

    let min_b = split_value(n, acc.all.max_a);
    let max_b = split_value(n, acc.all.min_a);
    let path_b = balanced_value(n);
    let star_b = split_value(n, 1);
    let max_only_stars = acc.max_b_trees > 0 && acc.max_b_trees == acc.max_b_stars;
    let holds = min_b == path_b
        && max_b == star_b
        && max_only_stars
        && classes.iter().all(|c| c.within_bounds && c.upper_sharp && c.lower_sharp != Some(false));
    Ok(TreeExtremalReport { n, trees: acc.all.count, min_b, max_b, path_b, star_b, max_only_stars, classes, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};
    use crate::rational::rat;

    #[test]
    fn diameter_by_sweeps() {
        assert_eq!(tree_diameter(&named_graph(Family::Path, 7).unwrap()), 6);
        assert_eq!(tree_diameter(&named_graph(Family::Star, 5).unwrap()), 2);
        assert_eq!(tree_diameter(&named_graph(Family::Path, 1).unwrap()), 0);
    }

    #[test]
    fn small_orders() {
        let r = verify_tree_extremals(5).unwrap();
        assert!(r.holds, "{r:#?}");
        assert_eq!((r.max_b.clone(), r.min_b.clone()), (rat(5, 8), rat(5, 12)));
        assert_eq!(r.trees, 125);

        let r = verify_tree_extremals(6).unwrap();
        assert!(r.holds);
        assert_eq!((r.max_b.clone(), r.min_b.clone()), (rat(3, 5), rat(1, 3)));

        let r = verify_tree_extremals(7).unwrap();
        let d4 = r.classes.iter().find(|c| c.constraint == "diameter" && c.value == 4).unwrap();
        assert_eq!(d4.max_b, rat(7, 20));
        assert!(d4.upper_sharp);
        let star_pendants = r.classes.iter().find(|c| c.constraint == "pendants" && c.value == 6).unwrap();
        assert_eq!(star_pendants.lower_sharp, None);
        assert!(r.holds);

        assert!(verify_tree_extremals(2).unwrap().holds);
        assert!(verify_tree_extremals(11).is_err());
    }

    #[test]
    fn serial_matches_parallel() {
        assert_eq!(
            verify_tree_extremals_with(7, Exec::Serial).unwrap(),
            verify_tree_extremals_with(7, Exec::Parallel).unwrap()
        );
    }
}
