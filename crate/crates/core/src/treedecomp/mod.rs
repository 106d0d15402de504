//! Tree decompositions: construction by min-fill elimination, exact width
//! for small graphs, validation, nice form, and the PACE `.td` format.

mod exact;
mod nice;
mod pace;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

pub use exact::{exact_treewidth, optimal_elimination_order};
pub use nice::{make_nice, NiceDecomposition, NiceKind, NiceNode};
pub use pace::{parse_td, write_td};

/// Bags over a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Tree edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one; `-1` is reported as 0 for an empty
    /// decomposition.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Number of fill edges eliminating `v` would add.
fn fill_in(adj: &[Vec<bool>], alive: &[bool], v: usize) -> usize {
    let nb: Vec<usize> = (0..adj.len()).filter(|&u| alive[u] && adj[v][u]).collect();
    let mut fill = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[a][b] {
                fill += 1;
            }
        }
    }
    fill
}

/// Min-fill elimination order, ties broken by lower degree then lower id.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let deg = (0..n).filter(|&u| alive[u] && adj[v][u]).count();
                (fill_in(&adj, &alive, v), deg, v)
            })
            .expect("a live vertex remains");
        let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Decomposition induced by an elimination order: one bag per vertex,
/// holding it and its later neighbors in the filled graph, hung below the
/// bag of the earliest-eliminated such neighbor. Trees of different
/// components are chained into one tree.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![VertexSet::new()],
            edges: Vec::new(),
        };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut higher: Vec<VertexSet> = vec![VertexSet::new(); n];
    let mut adj: Vec<std::collections::BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    for &v in order {
        let later: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        higher[v] = later.into_iter().collect();
    }
    let bags: Vec<VertexSet> = order.iter().map(|&v| higher[v].with(v)).collect();
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        match higher[v].iter().map(|&u| pos[u]).min() {
            Some(parent) => edges.push((i, parent)),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, edges }
}

/// Min-fill decomposition; for graphs with at most 12 vertices whose
/// heuristic width exceeds `n/2`, an exact elimination order replaces it.
pub fn decompose(g: &Graph) -> TreeDecomposition {
    let heuristic = decomposition_from_order(g, &min_fill_order(g));
    let n = g.n();
    if n <= 12 && heuristic.width() * 2 > n {
        let exact = decomposition_from_order(g, &optimal_elimination_order(g));
        if exact.width() < heuristic.width() {
            return exact;
        }
    }
    heuristic
}

/// Checks the three decomposition axioms plus that the bag graph is a tree
/// and bags only mention vertices of `g`.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> bool {
    let nb = td.bags.len();
    if nb == 0 || td.edges.len() + 1 != nb {
        return false;
    }
    if td.edges.iter().any(|&(a, b)| a >= nb || b >= nb || a == b) {
        return false;
    }
    if td.bags.iter().any(|bag| bag.iter().any(|&v| v >= g.n())) {
        return false;
    }
    let adj = td.adjacency();
    // connected with nb - 1 edges => tree
    let mut seen = vec![false; nb];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    for v in g.vertices() {
        let holding: Vec<bool> = td.bags.iter().map(|b| b.contains(v)).collect();
        let count = holding.iter().filter(|&&h| h).count();
        if count == 0 {
            return false;
        }
        let start = holding.iter().position(|&h| h).unwrap();
        let mut reached = 1;
        let mut seen = vec![false; nb];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if holding[y] && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != count {
            return false;
        }
    }
    g.edges()
        .all(|(u, v)| td.bags.iter().any(|b| b.contains(u) && b.contains(v)))
}
