//! Named small graphs with documented ground truths.
//!
//! | name | shape | terminals |
//! |------|-------|-----------|
//! | P3 | `s - a - t` | s, t |
//! | C4 | `s - a - t - b - s` | s, t |
//! | D4 | C4 plus the chord `a - b` | s, t |
//! | PP | `s - a1 - a2 - t` and `s - b1 - b2 - t` | s, t |
//! | Q3 | 3-cube, vertex ids are bit patterns | 000, 111 |

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub s: usize,
    pub t: usize,
    pub names: Vec<&'static str>,
}

impl Fixture {
    /// Vertex id by name. Panics on an unknown name.
    pub fn id(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|&n| n == name)
            .unwrap_or_else(|| panic!("{} has no vertex named {name}", self.name))
    }

    pub fn set(&self, names: &[&str]) -> VertexSet {
        names.iter().map(|n| self.id(n)).collect()
    }
}

fn build(name: &'static str, names: Vec<&'static str>, edges: &[(&str, &str)]) -> Fixture {
    let pos = |x: &str| names.iter().position(|&n| n == x).unwrap();
    let graph = Graph::from_edges(names.len(), edges.iter().map(|&(u, v)| (pos(u), pos(v))))
        .expect("fixture edges are valid");
    Fixture {
        name,
        s: pos("s"),
        t: pos("t"),
        graph,
        names,
    }
}

pub fn p3() -> Fixture {
    build("P3", vec!["s", "a", "t"], &[("s", "a"), ("a", "t")])
}

pub fn c4() -> Fixture {
    build(
        "C4",
        vec!["s", "a", "t", "b"],
        &[("s", "a"), ("a", "t"), ("t", "b"), ("b", "s")],
    )
}

pub fn d4() -> Fixture {
    build(
        "D4",
        vec!["s", "a", "t", "b"],
        &[("s", "a"), ("a", "t"), ("t", "b"), ("b", "s"), ("a", "b")],
    )
}

pub fn pp() -> Fixture {
    build(
        "PP",
        vec!["s", "a1", "a2", "b1", "b2", "t"],
        &[
            ("s", "a1"),
            ("a1", "a2"),
            ("a2", "t"),
            ("s", "b1"),
            ("b1", "b2"),
            ("b2", "t"),
        ],
    )
}

pub fn q3() -> Fixture {
    let edges = (0..8usize).flat_map(|v| {
        (0..3)
            .map(move |bit| (v, v ^ (1 << bit)))
            .filter(|&(u, w)| u < w)
    });
    let mut names = vec!["v"; 8];
    names[0] = "s";
    names[7] = "t";
    Fixture {
        name: "Q3",
        graph: Graph::from_edges(8, edges).expect("cube edges are valid"),
        s: 0,
        t: 7,
        names,
    }
}

pub fn all() -> Vec<Fixture> {
    vec![p3(), c4(), d4(), pp(), q3()]
}
