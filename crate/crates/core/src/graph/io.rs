//! Edge-list text and graph6 encodings.

use super::{Graph, GraphError, MAX_VERTICES};

/// Parses lines of `u v` (0-based). An optional first line `n <count>` fixes
/// the order; otherwise it is one more than the largest index. Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(format!("expected two tokens, got {}", tokens.len())));
        }
        if tokens[0] == "n" {
            if seen_content {
                return Err(err("header `n <count>` must come first".into()));
            }
            let n: usize =
                tokens[1].parse().map_err(|_| err(format!("bad vertex count {:?}", tokens[1])))?;
            if n == 0 || n > MAX_VERTICES {
                return Err(GraphError::BadOrder(n));
            }
            order = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let parse = |t: &str| -> Result<usize, GraphError> {
            let v: usize = t.parse().map_err(|_| err(format!("non-integer token {t:?}")))?;
            if v >= MAX_VERTICES {
                return Err(err(format!("vertex index {v} exceeds {}", MAX_VERTICES - 1)));
            }
            Ok(v)
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if let Some(n) = order {
            if u.max(v) >= n {
                return Err(err(format!("vertex {} outside declared order {n}", u.max(v))));
            }
        }
        edges.push((u, v));
    }
    let n = match order {
        Some(n) => n,
        None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
            Some(max) => max + 1,
            None => return Err(GraphError::Parse { line: 0, msg: "no vertices".into() }),
        },
    };
    Graph::from_edges(n, edges)
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
/// Padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let bad = |msg: String| GraphError::Graph6(msg);
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!("byte {:#04x} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let (n, header) = match bytes {
        [] => return Err(bad("empty input".into())),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(bad("truncated size field".into()));
            }
            let n = bytes[2..8].iter().fold(0usize, |acc, b| acc << 6 | (b - 63) as usize);
            (n, 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(bad("truncated size field".into()));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::BadOrder(n));
    }
    let data = &bytes[header..];
    if data.len() != data_len(n) {
        return Err(bad(format!(
            "expected {} data bytes for n = {n}, got {}",
            data_len(n),
            data.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[k / 6] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encodes with the single-byte size form, so `n <= 62`.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > 62 {
        return Err(GraphError::Graph6Size(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
