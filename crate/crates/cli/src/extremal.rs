//! `l1f extremal`: the trees attaining the ends of each constrained range.

use std::io::Write;

use clap::{Args, ValueEnum};
use l1f_core::bounds::{
    diameter_target, extremal_tree_diameter, extremal_tree_maxdeg, extremal_tree_pendants, max_degree_target,
    pendant_target, Which,
};
use l1f_core::graph::to_graph6;
use l1f_core::rational::to_pq;
use l1f_core::tree::b_tree;
use serde::Serialize;

use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Diameter,
    Maxdeg,
    Pendants,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(value_enum)]
    class: Class,
    #[arg(long)]
    n: usize,
    /// The diameter, maximum degree or pendant count.
    #[arg(long)]
    param: usize,
    /// `min` or `max`.
    #[arg(long)]
    which: Which,
    /// Also print the tree in Graphviz DOT.
    #[arg(long)]
    dot: bool,
}

#[derive(Serialize)]
struct ExtremalReport {
    class: &'static str,
    n: usize,
    param: usize,
    which: Which,
    graph: String,
    b: String,
    /// The closed-form end of the range; `null` where no tree attains it.
    target: Option<String>,
}

pub fn run(args: ExtremalArgs, out: &mut dyn Write) -> Result<Status, String> {
    let (n, p, w) = (args.n, args.param, args.which);
    let (class, tree, target) = match args.class {
        Class::Diameter => ("diameter", extremal_tree_diameter(n, p, w), Some(diameter_target(n, p, w))),
        Class::Maxdeg => ("maxdeg", extremal_tree_maxdeg(n, p, w), Some(max_degree_target(n, p, w))),
        Class::Pendants => ("pendants", extremal_tree_pendants(n, p, w), None),
    };
    let tree = tree.map_err(|e| e.to_string())?;
    let target = if args.class == Class::Pendants { pendant_target(n, p, w) } else { target };
    let report = ExtremalReport {
        class,
        n,
        param: p,
        which: w,
        graph: to_graph6(&tree).map_err(|e| e.to_string())?,
        b: to_pq(&b_tree(&tree).map_err(|e| e.to_string())?),
        target: target.as_ref().map(to_pq),
    };
    let line = serde_json::to_string(&report).map_err(|e| e.to_string())?;
    writeln!(out, "{line}").map_err(|e| e.to_string())?;
    if args.dot {
        write!(out, "{}", tree.to_dot()).map_err(|e| e.to_string())?;
    }
    Ok(Status::Ok)
}
