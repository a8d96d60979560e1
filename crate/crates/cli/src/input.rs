//! Reading graphs from files, standard input and `--named` specs.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use l1f_core::graph::{named_graph, parse_edge_list, parse_graph6, Family};
use l1f_core::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One graph6 string per line.
    Graph6,
    /// `u v` lines, records separated by blank lines.
    Edgelist,
}

/// One input record: where it started and what it parsed to.
#[derive(Debug)]
pub struct Record {
    pub line: usize,
    pub label: String,
    pub parsed: Result<Graph, String>,
}

#[derive(Serialize)]
pub struct ErrorObject<'a> {
    pub record: usize,
    pub line: usize,
    pub input: &'a str,
    pub error: &'a str,
}

/// Reads `path`, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(s)
        }
    }
}

pub fn records(text: &str, format: Format) -> Vec<Record> {
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let l = l.trim();
                Record { line: i + 1, label: l.to_string(), parsed: parse_graph6(l).map_err(|e| e.to_string()) }
            })
            .collect(),
        Format::Edgelist => {
            let mut out = Vec::new();
            let mut start = 0;
            let mut block: Vec<&str> = Vec::new();
            let mut flush = |start: usize, block: &mut Vec<&str>| {
                let content = block.iter().any(|l| !l.trim_start().starts_with('#'));
                if content {
                    let body = block.join("\n");
                    let parsed = parse_edge_list(&body).map_err(|e| e.to_string());
                    out.push(Record { line: start, label: format!("edgelist@{start}"), parsed });
                }
                block.clear();
            };
            for (i, l) in text.lines().enumerate() {
                if l.trim().is_empty() {
                    flush(start, &mut block);
                } else {
                    if block.is_empty() {
                        start = i + 1;
                    }
                    block.push(l);
                }
            }
            flush(start, &mut block);
            out
        }
    }
}

/// `family:n`, e.g. `petersen`, `cycle:7`, `hypercube:4` (the dimension).
pub fn parse_named(spec: &str) -> Result<Graph, String> {
    let (name, size) = match spec.split_once(':') {
        Some((f, n)) => (f, n.parse::<usize>().map_err(|_| format!("bad size in {spec:?}"))?),
        None => (spec, 0),
    };
    let family: Family = name.parse()?;
    if spec.split_once(':').is_none() && family != Family::Petersen {
        return Err(format!("{spec:?} needs a size, as in {}:5", family.name()));
    }
    named_graph(family, size).map_err(|e| e.to_string())
}
