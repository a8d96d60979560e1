//! `l1f verify`: runs the inequality suite over a family of graphs and
//! reports counts per theorem.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Subcommand};
use l1f_core::cuts::ENUMERATION_LIMIT;
use l1f_core::bounds::{graph_id, verify_suite, verify_tree_extremals, BoundReport};
use l1f_core::graph::{graph_count, random_sample, GraphIter, MAX_ENUMERATED_GRAPH_ORDER, MAX_TREE_ORDER};
use l1f_core::rational::to_pq;
use l1f_core::Graph;
use serde::Serialize;

use crate::input::{read_source, records, ErrorObject, Format};
use crate::pool::Pool;
use crate::Status;

/// Labeled graphs per batch in the exhaustive scope.
const BATCH: u64 = 1 << 14;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    scope: Scope,
    /// Print every report, not only the failing ones.
    #[arg(long, global = true)]
    all: bool,
}

#[derive(Debug, Subcommand)]
enum Scope {
    /// Every connected labeled graph on exactly N vertices (2 <= N <= 7).
    Exhaustive {
        #[arg(long)]
        n: usize,
    },
    /// Every labeled tree on exactly N vertices (2 <= N <= 10) against the
    /// extremal ranges for diameter, maximum degree and pendant count.
    Trees {
        #[arg(long)]
        n: usize,
    },
    /// A reproducible sample of random connected graphs.
    Random {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        min_order: usize,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Graphs read from a file (`-` for standard input).
    File {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Debug, Default, Clone, Serialize)]
struct Counts {
    checked: u64,
    held: u64,
    equality: u64,
}

#[derive(Debug, Serialize)]
struct Summary {
    scope: &'static str,
    graphs: u64,
    reports: u64,
    failures: u64,
    theorems: BTreeMap<&'static str, Counts>,
}

#[derive(Serialize)]
struct TreeGlobal {
    theorem_id: &'static str,
    n: usize,
    trees: u64,
    min_b: String,
    max_b: String,
    path_b: String,
    star_b: String,
    max_only_stars: bool,
    holds: bool,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

struct Tally<'a> {
    all: bool,
    out: &'a mut dyn Write,
    summary: Summary,
}

impl Tally<'_> {
    fn count(&mut self, id: &'static str, holds: bool, equality: bool) {
        let c = self.summary.theorems.entry(id).or_default();
        c.checked += 1;
        c.held += holds as u64;
        c.equality += equality as u64;
        self.summary.reports += 1;
        self.summary.failures += !holds as u64;
    }

    fn emit<T: Serialize>(&mut self, show: bool, item: &T) -> Result<(), String> {
        if show || self.all {
            let line = serde_json::to_string(item).map_err(|e| e.to_string())?;
            writeln!(self.out, "{line}").map_err(|e| e.to_string())?;
        }
        Ok(())
    }

    fn suite(&mut self, g: &Graph, reports: Result<Vec<BoundReport>, String>) -> Result<(), String> {
        self.summary.graphs += 1;
        let reports = match reports {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error on {}: {e}", graph_id(g));
                self.summary.failures += 1;
                return Ok(());
            }
        };
        for r in &reports {
            self.count(r.theorem_id, r.holds, r.equality);
            if !r.holds {
                eprintln!("violation {} {}", r.theorem_id, r.graph);
            }
            self.emit(!r.holds, r)?;
        }
        Ok(())
    }

    fn finish(self) -> Result<Status, String> {
        let line = serde_json::to_string(&SummaryLine { summary: &self.summary }).map_err(|e| e.to_string())?;
        writeln!(self.out, "{line}").map_err(|e| e.to_string())?;
        Ok(if self.summary.failures == 0 { Status::Ok } else { Status::VerifyFailed })
    }
}

fn suite_batch(pool: &Pool, graphs: &[Graph], tol: f64, tally: &mut Tally) -> Result<(), String> {
    let results = pool.map(graphs, |g| verify_suite(g, tol).map_err(|e| e.to_string()));
    for (g, r) in graphs.iter().zip(results) {
        tally.suite(g, r)?;
    }
    Ok(())
}

pub fn run(args: VerifyArgs, pool: &Pool, tol: f64, out: &mut dyn Write) -> Result<Status, String> {
    let scope = match &args.scope {
        Scope::Exhaustive { .. } => "exhaustive",
        Scope::Trees { .. } => "trees",
        Scope::Random { .. } => "random",
        Scope::File { .. } => "file",
    };
    let mut tally =
        Tally { all: args.all, out, summary: Summary { scope, graphs: 0, reports: 0, failures: 0, theorems: BTreeMap::new() } };
    match args.scope {
        Scope::Exhaustive { n } => {
            if !(2..=MAX_ENUMERATED_GRAPH_ORDER).contains(&n) {
                return Err(format!("exhaustive scope needs 2 <= n <= {MAX_ENUMERATED_GRAPH_ORDER}, got {n}"));
            }
            let total = graph_count(n);
            let mut start = 0;
            while start < total {
                let end = (start + BATCH).min(total);
                let graphs: Vec<Graph> =
                    GraphIter::with_range(n, start..end, true).map_err(|e| e.to_string())?.collect();
                suite_batch(pool, &graphs, tol, &mut tally)?;
                start = end;
            }
        }
        Scope::Trees { n } => {
            if !(2..=MAX_TREE_ORDER).contains(&n) {
                return Err(format!("tree scope needs 2 <= n <= {MAX_TREE_ORDER}, got {n}"));
            }
            let report = pool.install(|| verify_tree_extremals(n)).map_err(|e| e.to_string())?;
            tally.summary.graphs = report.trees;
            let global_ok = report.min_b == report.path_b && report.max_b == report.star_b && report.max_only_stars;
            tally.count("tree-global-extremes", global_ok, false);
            if !global_ok {
                eprintln!("violation tree-global-extremes n={n}");
            }
            for c in &report.classes {
                let id = match c.constraint {
                    "diameter" => "tree-diameter-range",
                    "max_degree" => "tree-max-degree-range",
                    _ => "tree-pendant-range",
                };
                let ok = c.within_bounds && c.upper_sharp && c.lower_sharp != Some(false);
                tally.count(id, ok, false);
                if !ok {
                    eprintln!("violation {id} n={n} {}={}", c.constraint, c.value);
                }
                tally.emit(!ok, c)?;
            }
            let global = TreeGlobal {
                theorem_id: "tree-global-extremes",
                n,
                trees: report.trees,
                min_b: to_pq(&report.min_b),
                max_b: to_pq(&report.max_b),
                path_b: to_pq(&report.path_b),
                star_b: to_pq(&report.star_b),
                max_only_stars: report.max_only_stars,
                holds: global_ok,
            };
            tally.emit(!global_ok, &global)?;
        }
        Scope::Random { count, seed, min_order, max_order } => {
            if min_order < 2 || min_order > max_order || max_order > ENUMERATION_LIMIT {
                return Err(format!(
                    "random scope needs 2 <= min-order <= max-order <= {}",
                    ENUMERATION_LIMIT
                ));
            }
            let graphs = random_sample(count, seed, min_order..=max_order).map_err(|e| e.to_string())?;
            suite_batch(pool, &graphs, tol, &mut tally)?;
        }
        Scope::File { path, format } => {
            let text = read_source(Some(&path))?;
            let recs = records(&text, format);
            let mut bad = false;
            for (i, r) in recs.iter().enumerate() {
                let error = match &r.parsed {
                    Err(e) => e.clone(),
                    Ok(g) if !g.is_connected() => "graph is disconnected".to_string(),
                    Ok(g) if g.n() > ENUMERATION_LIMIT => {
                        format!("order {} is beyond the enumeration limit", g.n())
                    }
                    Ok(_) => continue,
                };
                bad = true;
                let obj = ErrorObject { record: i, line: r.line, input: &r.label, error: &error };
                eprintln!("{}", serde_json::to_string(&obj).map_err(|e| e.to_string())?);
            }
            if bad {
                return Ok(Status::InputError);
            }
            let graphs: Vec<Graph> = recs.into_iter().filter_map(|r| r.parsed.ok()).collect();
            suite_batch(pool, &graphs, tol, &mut tally)?;
        }
    }
    tally.finish()
}
