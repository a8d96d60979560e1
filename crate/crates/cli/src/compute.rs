//! `l1f compute`: every invariant of every input graph, one JSON line each.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use l1f_core::cuts::{
    b_exact, cheeger_exact, edge_connectivity, iso_exact, min_relative_cut, InvariantResult, ENUMERATION_LIMIT,
};
use l1f_core::gamma::gamma_exact;
use l1f_core::rational::to_pq;
use l1f_core::spectral::laplacian_spectrum;
use l1f_core::tree::tree_sparsest_cut;
use l1f_core::{Graph, Rational};
use serde::Serialize;

use crate::input::{parse_named, read_source, records, ErrorObject, Format, Record};
use crate::pool::Pool;
use crate::Status;

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Input file; `-` or no argument reads standard input (skipped when only
    /// `--named` graphs are given).
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// A standard graph, `family:n` with family one of complete, cycle, path,
    /// star, hypercube (n is the dimension) or petersen. Repeatable.
    #[arg(long, value_name = "FAMILY:N")]
    named: Vec<String>,
    /// Also solve for γ(G) exactly.
    #[arg(long)]
    gamma: bool,
    /// Skip the Laplacian eigenvalues.
    #[arg(long)]
    no_spectral: bool,
    /// Add per-invariant wall-clock milliseconds to each record.
    #[arg(long)]
    timing: bool,
    /// Enumerate cuts even for trees.
    #[arg(long, hide = true)]
    force_enumeration: bool,
}

/// Output record. Rationals are `"p/q"` strings; only the two eigenvalues are
/// floats. Cut invariants other than `b` are `null` above the enumeration
/// limit.
#[derive(Debug, Serialize)]
struct ComputeReport {
    record: usize,
    graph: String,
    n: usize,
    m: usize,
    connected: bool,
    /// `"tree"` for the centre-edge formula, `"enumeration"` otherwise.
    method: &'static str,
    b: String,
    /// Vertices of a set `S` attaining `b`, with vertex 0 outside `S`.
    witness: Option<Vec<usize>>,
    iso: Option<String>,
    cheeger: Option<String>,
    min_relative_cut: Option<String>,
    edge_connectivity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebraic_connectivity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    largest_eigenvalue: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_vector: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<BTreeMap<&'static str, f64>>,
}

struct Options {
    gamma: bool,
    spectral: bool,
    timing: bool,
    force_enumeration: bool,
}

struct Clock {
    on: bool,
    laps: BTreeMap<&'static str, f64>,
}

impl Clock {
    fn time<R>(&mut self, name: &'static str, f: impl FnOnce() -> R) -> R {
        if !self.on {
            return f();
        }
        let start = Instant::now();
        let r = f();
        self.laps.insert(name, start.elapsed().as_secs_f64() * 1e3);
        r
    }
}

fn value_of(r: Result<InvariantResult, l1f_core::CutError>) -> Result<String, String> {
    r.map(|r| to_pq(&r.value)).map_err(|e| e.to_string())
}

fn compute_one(g: &Graph, opt: &Options) -> Result<ComputeReport, String> {
    let n = g.n();
    if n < 2 {
        return Err("need at least 2 vertices".into());
    }
    let mut clock = Clock { on: opt.timing, laps: BTreeMap::new() };
    let tree_path = g.is_tree() && !opt.force_enumeration;
    let (b, witness): (Rational, Option<Vec<usize>>) = clock.time("b", || -> Result<_, String> {
        if tree_path {
            let (b, set) = tree_sparsest_cut(g).map_err(|e| e.to_string())?;
            Ok((b, Some(set.iter().collect())))
        } else {
            let r = b_exact(g).map_err(|e| e.to_string())?;
            Ok((r.value, r.witness.map(|c| c.set.iter().collect())))
        }
    })?;
    let enumerable = n <= ENUMERATION_LIMIT;
    let iso = enumerable.then(|| clock.time("iso", || value_of(iso_exact(g)))).transpose()?;
    let cheeger = enumerable.then(|| clock.time("cheeger", || value_of(cheeger_exact(g)))).transpose()?;
    let min_xi = enumerable.then(|| clock.time("min_relative_cut", || value_of(min_relative_cut(g)))).transpose()?;
    let lambda = clock.time("edge_connectivity", || edge_connectivity(g)).map_err(|e| e.to_string())?;
    let spectrum = if opt.spectral {
        Some(clock.time("spectrum", || laplacian_spectrum(g)).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let gamma = if opt.gamma { Some(clock.time("gamma", || gamma_exact(g)).map_err(|e| e.to_string())?) } else { None };
    Ok(ComputeReport {
        record: 0,
        graph: l1f_core::bounds::graph_id(g),
        n,
        m: g.m(),
        connected: g.is_connected(),
        method: if tree_path { "tree" } else { "enumeration" },
        b: to_pq(&b),
        witness,
        iso,
        cheeger,
        min_relative_cut: min_xi,
        edge_connectivity: lambda,
        algebraic_connectivity: spectrum.as_ref().map(|s| s.second_smallest()),
        largest_eigenvalue: spectrum.as_ref().map(|s| s.largest()),
        gamma: gamma.as_ref().map(|r| to_pq(&r.value)),
        gamma_vector: gamma.as_ref().map(|r| r.optimal_vector.iter().map(to_pq).collect()),
        timing_ms: opt.timing.then_some(clock.laps),
    })
}

pub fn run(args: ComputeArgs, pool: &Pool, out: &mut dyn Write) -> Result<Status, String> {
    let mut recs: Vec<Record> = args
        .named
        .iter()
        .map(|s| Record { line: 0, label: s.clone(), parsed: parse_named(s) })
        .collect();
    if args.named.is_empty() || args.input.is_some() {
        let text = read_source(args.input.as_deref())?;
        recs.extend(records(&text, args.format));
    }
    let opt = Options {
        gamma: args.gamma,
        spectral: !args.no_spectral,
        timing: args.timing,
        force_enumeration: args.force_enumeration,
    };
    let results = pool.map(&recs, |r| match &r.parsed {
        Ok(g) => compute_one(g, &opt),
        Err(e) => Err(e.clone()),
    });
    let mut status = Status::Ok;
    for (i, (rec, res)) in recs.iter().zip(results).enumerate() {
        let line = match res {
            Ok(mut report) => {
                report.record = i;
                serde_json::to_string(&report)
            }
            Err(e) => {
                status = Status::InputError;
                serde_json::to_string(&ErrorObject { record: i, line: rec.line, input: &rec.label, error: &e })
            }
        }
        .map_err(|e| e.to_string())?;
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(status)
}
