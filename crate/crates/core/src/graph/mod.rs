//! Simple undirected graphs and the elementary operations everything else
//! is built from.
//!
//! Graphs are immutable once built. Neighbor lists are kept sorted so that
//! every traversal visits vertices in ascending order, which makes all
//! downstream results reproducible byte for byte.

mod format;
mod parity;

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use format::{
    decode_graph6, encode_graph6, parse_graph, parse_pair_list, parse_vertex_list, write_graph,
};
pub use parity::{shortest_odd_cycle, two_coloring};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Collects the members of a boolean mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn with(&self, v: usize) -> VertexSet {
        self.0.iter().copied().chain(std::iter::once(v)).collect()
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// Boolean membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    /// Members shifted to 1-based ids, for output.
    pub fn to_external(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are domain errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] for edge lists known to be valid.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("edge list is valid by construction")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Same vertex ids, with every edge incident to `removed` dropped.
    pub fn isolate(&self, removed: &[usize]) -> Graph {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                if gone[u] {
                    Vec::new()
                } else {
                    list.iter().copied().filter(|&v| !gone[v]).collect()
                }
            })
            .collect();
        Graph { adj }
    }

    /// Set of vertices in `0..n` as a [`VertexSet`].
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }

    pub(crate) fn check_set(&self, x: &[usize], what: &str) -> Result<()> {
        match x.iter().find(|&&v| v >= self.n()) {
            Some(v) => Err(Error::domain(format!(
                "{what} contains vertex {v}, graph has {} vertices",
                self.n()
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize, what: &str) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{what} {v} out of range for {} vertices",
                self.n()
            )))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// `δ(X)`: vertices outside `x` with at least one neighbor in `x`.
pub fn boundary(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    g.check_set(x, "X")?;
    Ok(boundary_of_mask(g, &x.mask(g.n())))
}

pub(crate) fn boundary_of_mask(g: &Graph, inside: &[bool]) -> VertexSet {
    g.vertices()
        .filter(|&v| !inside[v] && g.neighbors(v).iter().any(|&u| inside[u]))
        .collect()
}

/// Connected components of `g - removed`, each sorted, listed by minimum
/// element.
pub fn components(g: &Graph, removed: &VertexSet) -> Result<Vec<VertexSet>> {
    g.check_set(removed, "removed set")?;
    Ok(components_masked(g, &removed.mask(g.n())))
}

pub(crate) fn components_masked(g: &Graph, removed: &[bool]) -> Vec<VertexSet> {
    let labels = component_labels(g, removed);
    let count = labels.iter().flatten().max().map_or(0, |&c| c + 1);
    let mut out = vec![Vec::new(); count];
    for (v, label) in labels.iter().enumerate() {
        if let Some(c) = label {
            out[*c].push(v);
        }
    }
    out.into_iter().map(VertexSet::from_sorted).collect()
}

/// Component index per vertex of `g - removed` (`None` for removed
/// vertices). Components are numbered by their minimum vertex.
pub(crate) fn component_labels(g: &Graph, removed: &[bool]) -> Vec<Option<usize>> {
    let mut label = vec![None; g.n()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if removed[root] || label[root].is_some() {
            continue;
        }
        label[root] = Some(next);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !removed[w] && label[w].is_none() {
                    label[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Vertices reachable from any of `sources` in `g - removed`.
pub(crate) fn reachable(g: &Graph, sources: &[usize], removed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if !removed[s] && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// `G[X]` relabeled to `0..|X|` in ascending original order, with the
/// mapping from new ids to original ids.
pub fn induced_subgraph(g: &Graph, x: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.check_set(x, "X")?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in x.iter().enumerate() {
        index[v] = i;
    }
    let edges = x.iter().flat_map(|&u| {
        let index = &index;
        g.neighbors(u)
            .iter()
            .filter(move |&&w| u < w && index[w] != usize::MAX)
            .map(move |&w| (index[u], index[w]))
    });
    let sub = Graph::from_edges_unchecked(x.len(), edges.collect::<Vec<_>>());
    Ok((sub, x.to_vec()))
}

/// Result of [`contract_terminal_sets`].
#[derive(Clone, Debug)]
pub struct Contracted {
    pub graph: Graph,
    /// Vertex standing for the contracted set `A`.
    pub a: usize,
    /// Vertex standing for the contracted set `B`.
    pub b: usize,
    /// Original id of every non-contracted vertex, by new id.
    pub origin: Vec<usize>,
}

/// Builds `G[keep ∪ A ∪ B]` with `A` contracted to a vertex `a` and `B` to a
/// vertex `b`. Keep-vertices take ids `0..|keep|` in ascending order, then
/// `a`, then `b`.
pub fn contract_terminal_sets(
    g: &Graph,
    keep: &VertexSet,
    a_set: &VertexSet,
    b_set: &VertexSet,
) -> Result<Contracted> {
    g.check_set(keep, "keep")?;
    g.check_set(a_set, "A")?;
    g.check_set(b_set, "B")?;
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::domain("contracted sets must be non-empty"));
    }
    if !a_set.is_disjoint(b_set) || !keep.is_disjoint(a_set) || !keep.is_disjoint(b_set) {
        return Err(Error::domain("keep, A and B must be pairwise disjoint"));
    }
    const NONE: usize = usize::MAX;
    let kn = keep.len();
    let (a, b) = (kn, kn + 1);
    let mut index = vec![NONE; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    for &v in a_set {
        index[v] = a;
    }
    for &v in b_set {
        index[v] = b;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let (iu, iv) = (index[u], index[v]);
        if iu != NONE && iv != NONE && iu != iv {
            edges.push((iu, iv));
        }
    }
    Ok(Contracted {
        graph: Graph::from_edges_unchecked(kn + 2, edges),
        a,
        b,
        origin: keep.to_vec(),
    })
}
