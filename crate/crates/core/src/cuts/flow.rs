//! Edge connectivity by unit-capacity max flow (Edmonds–Karp).

use std::collections::VecDeque;

use super::CutError;
use crate::graph::{bits, Graph};

/// Maximum number of edge-disjoint `s`-`t` paths.
pub fn max_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    // residual[u][v] for an undirected unit edge starts at 1 in both directions
    let mut residual = vec![vec![0i8; n]; n];
    for (u, v) in g.edges() {
        residual[u][v] = 1;
        residual[v][u] = 1;
    }
    let mut flow = 0;
    let mut parent = vec![usize::MAX; n];
    loop {
        parent.fill(usize::MAX);
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in bits(g.neighbors(u)) {
                if parent[v] == usize::MAX && residual[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[u][v] -= 1;
            residual[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// `λ(G)`: the minimum number of edges whose removal disconnects `G`.
/// Zero for disconnected graphs.
pub fn edge_connectivity(g: &Graph) -> Result<usize, CutError> {
    if g.n() < 2 {
        return Err(CutError::TooSmall(g.n()));
    }
    Ok((1..g.n()).map(|t| max_flow(g, 0, t)).min().expect("n >= 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};

    #[test]
    fn named_families() {
        let cases = [
            (Family::Complete, 6, 5),
            (Family::Cycle, 7, 2),
            (Family::Path, 5, 1),
            (Family::Star, 5, 1),
            (Family::Hypercube, 4, 4),
            (Family::Petersen, 0, 3),
        ];
        for (f, n, want) in cases {
            assert_eq!(edge_connectivity(&named_graph(f, n).unwrap()).unwrap(), want, "{f:?}");
        }
    }

    #[test]
    fn bridge_between_cliques() {
        let k4 = named_graph(Family::Complete, 4).unwrap();
        let mut g = k4.disjoint_union(&k4).unwrap();
        g.add_edge_unchecked(3, 4);
        assert_eq!(edge_connectivity(&g).unwrap(), 1);
        assert_eq!(max_flow(&g, 0, 1), 3);
        g.remove_edge_unchecked(3, 4);
        assert_eq!(edge_connectivity(&g).unwrap(), 0);
        assert_eq!(edge_connectivity(&Graph::empty(1).unwrap()), Err(CutError::TooSmall(1)));
    }
}
