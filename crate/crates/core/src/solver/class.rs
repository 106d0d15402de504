//! Hereditary graph classes used as constraints on the deleted set.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{decode_graph6, encode_graph6, two_coloring, Graph};
use crate::problems::max_matching_size;

type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

/// A decidable graph class closed under induced subgraphs.
///
/// Heredity is a promise made by the caller for [`HereditaryClass::Custom`];
/// [`check_hereditary`] spot-checks it on small graphs.
#[derive(Clone)]
pub enum HereditaryClass {
    /// All graphs.
    Any,
    /// Graphs without edges (stable sets).
    Edgeless,
    /// Vertex count minus maximum matching size at most the bound.
    MatchDeficiency(usize),
    Forest,
    Bipartite,
    MaxDegree(usize),
    /// Graphs containing none of the listed graphs as an induced subgraph.
    ForbiddenInduced(Vec<Graph>),
    Custom {
        name: String,
        predicate: Predicate,
    },
}

impl HereditaryClass {
    pub fn custom<F>(name: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&Graph) -> bool + Send + Sync + 'static,
    {
        HereditaryClass::Custom {
            name: name.into(),
            predicate: Arc::new(predicate),
        }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        match self {
            HereditaryClass::Any => true,
            HereditaryClass::Edgeless => g.m() == 0,
            HereditaryClass::MatchDeficiency(k) => g.n() - max_matching_size(g) <= *k,
            HereditaryClass::Forest => g.m() + components(g) == g.n(),
            HereditaryClass::Bipartite => two_coloring(g).is_some(),
            HereditaryClass::MaxDegree(d) => g.vertices().all(|v| g.degree(v) <= *d),
            HereditaryClass::ForbiddenInduced(list) => list.iter().all(|h| !has_induced_copy(g, h)),
            HereditaryClass::Custom { predicate, .. } => predicate(g),
        }
    }

    /// Selector string, the inverse of [`HereditaryClass::parse`] for the
    /// built-in classes.
    pub fn selector(&self) -> String {
        match self {
            HereditaryClass::Any => "any".into(),
            HereditaryClass::Edgeless => "edgeless".into(),
            HereditaryClass::MatchDeficiency(k) => format!("matchdef:{k}"),
            HereditaryClass::Forest => "forest".into(),
            HereditaryClass::Bipartite => "bipartite".into(),
            HereditaryClass::MaxDegree(d) => format!("maxdeg:{d}"),
            HereditaryClass::ForbiddenInduced(list) => {
                format!("forbid:{}", list.iter().map(encode_graph6).join(","))
            }
            HereditaryClass::Custom { name, .. } => name.clone(),
        }
    }

    /// Parses `any`, `edgeless`, `matchdef:<k>`, `forest`, `bipartite`,
    /// `maxdeg:<d>` or `forbid:<graph6>[,<graph6>…]`.
    pub fn parse(selector: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse(0, msg);
        let (name, arg) = match selector.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (selector, None),
        };
        let number = |a: Option<&str>| -> Result<usize> {
            let a = a.ok_or_else(|| bad(format!("class '{name}' needs an argument")))?;
            a.parse()
                .map_err(|_| bad(format!("invalid class argument '{a}'")))
        };
        let class = match name {
            "any" | "edgeless" | "forest" | "bipartite" if arg.is_some() => {
                return Err(bad(format!("class '{name}' takes no argument")));
            }
            "any" => HereditaryClass::Any,
            "edgeless" => HereditaryClass::Edgeless,
            "forest" => HereditaryClass::Forest,
            "bipartite" => HereditaryClass::Bipartite,
            "matchdef" => HereditaryClass::MatchDeficiency(number(arg)?),
            "maxdeg" => HereditaryClass::MaxDegree(number(arg)?),
            "forbid" => {
                let list = arg.ok_or_else(|| bad("class 'forbid' needs graphs".into()))?;
                let graphs = list
                    .split(',')
                    .map(decode_graph6)
                    .collect::<Result<Vec<_>>>()?;
                if graphs.is_empty() || graphs.iter().any(|h| h.n() > 12) {
                    return Err(bad("forbidden graphs must have at most 12 vertices".into()));
                }
                HereditaryClass::ForbiddenInduced(graphs)
            }
            other => return Err(bad(format!("unknown class '{other}'"))),
        };
        Ok(class)
    }
}

impl fmt::Debug for HereditaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HereditaryClass({})", self.selector())
    }
}

fn components(g: &Graph) -> usize {
    crate::graph::components_masked(g, &vec![false; g.n()]).len()
}

/// Whether `h` is isomorphic to an induced subgraph of `g`.
pub fn has_induced_copy(g: &Graph, h: &Graph) -> bool {
    let k = h.n();
    if k > g.n() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    extend_embedding(g, h, 0, &mut image, &mut used)
}

fn extend_embedding(
    g: &Graph,
    h: &Graph,
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == h.n() {
        return true;
    }
    for v in g.vertices() {
        if used[v] {
            continue;
        }
        let consistent = (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, image[j]));
        if consistent {
            image[i] = v;
            used[v] = true;
            if extend_embedding(g, h, i + 1, image, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

/// Checks heredity of `class` on every labeled graph with at most
/// `max_n` vertices: whenever a graph is a member, so is every graph
/// obtained by deleting one vertex. Returns a counterexample if found.
pub fn check_hereditary(class: &HereditaryClass, max_n: usize) -> Option<Graph> {
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        for bits in 0u64..(1u64 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges_unchecked(n, edges.collect::<Vec<_>>());
            if !class.contains(&g) {
                continue;
            }
            for v in 0..n {
                let rest = (0..n).filter(|&u| u != v).collect();
                let (sub, _) = crate::graph::induced_subgraph(&g, &rest).unwrap();
                if !class.contains(&sub) {
                    return Some(g);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn membership() {
        let p3 = path(3);
        let c3 = cycle(3);
        assert!(HereditaryClass::Any.contains(&c3));
        assert!(!HereditaryClass::Edgeless.contains(&p3));
        assert!(HereditaryClass::Edgeless.contains(&Graph::empty(4)));
        assert!(HereditaryClass::Forest.contains(&p3));
        assert!(!HereditaryClass::Forest.contains(&c3));
        assert!(HereditaryClass::Bipartite.contains(&cycle(4)));
        assert!(!HereditaryClass::Bipartite.contains(&c3));
        assert!(HereditaryClass::MaxDegree(1).contains(&path(2)));
        assert!(!HereditaryClass::MaxDegree(1).contains(&p3));
        // P3: 3 vertices, matching 1 -> deficiency 2
        assert!(HereditaryClass::MatchDeficiency(2).contains(&p3));
        assert!(!HereditaryClass::MatchDeficiency(1).contains(&p3));
        let no_triangle = HereditaryClass::ForbiddenInduced(vec![c3.clone()]);
        assert!(no_triangle.contains(&cycle(5)));
        assert!(
            !no_triangle.contains(&Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap())
        );
    }

    #[test]
    fn induced_not_just_subgraph() {
        // C4 contains P3 as a subgraph but also as an induced subgraph;
        // K3 contains P3 only as a non-induced subgraph.
        assert!(has_induced_copy(&cycle(4), &path(3)));
        assert!(!has_induced_copy(&cycle(3), &path(3)));
    }

    #[test]
    fn selectors_round_trip() {
        for s in [
            "any",
            "edgeless",
            "matchdef:2",
            "forest",
            "bipartite",
            "maxdeg:1",
            "forbid:Bw,Bg",
        ] {
            assert_eq!(HereditaryClass::parse(s).unwrap().selector(), s);
        }
        for s in [
            "",
            "tree",
            "maxdeg",
            "maxdeg:x",
            "edgeless:1",
            "forbid:",
            "forbid:B",
        ] {
            assert!(HereditaryClass::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn builtins_are_hereditary() {
        for class in [
            HereditaryClass::Any,
            HereditaryClass::Edgeless,
            HereditaryClass::MatchDeficiency(1),
            HereditaryClass::MatchDeficiency(2),
            HereditaryClass::Forest,
            HereditaryClass::Bipartite,
            HereditaryClass::MaxDegree(1),
            HereditaryClass::MaxDegree(2),
            HereditaryClass::ForbiddenInduced(vec![path(3)]),
        ] {
            assert!(check_hereditary(&class, 5).is_none(), "{class:?}");
        }
    }

    #[test]
    fn heredity_checker_finds_violations() {
        // "exactly one edge" is not hereditary
        let bogus = HereditaryClass::custom("one-edge", |g| g.m() == 1);
        assert!(check_hereditary(&bogus, 3).is_some());
    }
}
