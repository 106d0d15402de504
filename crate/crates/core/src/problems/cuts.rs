//! Separation problems built on the constrained cut solver.

use serde::Serialize;

use super::matching::maximum_matching;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::separation::{is_separator, min_st_separator, SeparatorResult};
use crate::solver::{g_mincut, g_multicut_uncut, CutConstraints, HereditaryClass};

/// A stable `s-t` separator of at most `k` vertices.
pub fn stable_st_cut(g: &Graph, s: usize, t: usize, k: usize) -> Result<Option<VertexSet>> {
    Ok(g_mincut(g, s, t, k, &HereditaryClass::Edgeless)?.map(|w| w.deletion_set))
}

/// Edges whose endpoints, apart from `s` and `t`, separate `s` from `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCutWitness {
    pub edges: Vec<(usize, usize)>,
    /// Endpoints of `edges` other than the terminals.
    pub deleted: VertexSet,
}

impl EdgeCutWitness {
    pub fn from_edges(edges: Vec<(usize, usize)>, s: usize, t: usize) -> Self {
        let deleted = edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|&v| v != s && v != t)
            .collect();
        EdgeCutWitness { edges, deleted }
    }
}

/// At most `k` edges `F` such that `V(F) \ {s, t}` separates `s` from `t`.
///
/// Solved as a cut of at most `2k` vertices whose induced graph has
/// matching deficiency at most `k`; the edges are a maximum matching of
/// the cut plus one incident edge for every unmatched cut vertex.
pub fn edge_induced_vertex_cut(
    g: &Graph,
    s: usize,
    t: usize,
    k: usize,
) -> Result<Option<EdgeCutWitness>> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    if s == t {
        return Err(Error::domain("s and t must differ"));
    }
    let Some(w) = g_mincut(g, s, t, 2 * k, &HereditaryClass::MatchDeficiency(k))? else {
        return Ok(None);
    };
    let cut = w.deletion_set;
    let (h, ids) = induced_subgraph(g, &cut)?;
    let matching = maximum_matching(&h);
    let mut matched = vec![false; g.n()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &matching {
        let (a, b) = (ids[a], ids[b]);
        matched[a] = true;
        matched[b] = true;
        edges.push((a.min(b), a.max(b)));
    }
    for &v in &cut {
        if matched[v] {
            continue;
        }
        // a partner inside the cut adds no new endpoint, a non-terminal
        // outside one at least keeps the terminals untouched
        let nb = g.neighbors(v);
        let partner = nb
            .iter()
            .find(|&&u| cut.contains(u))
            .or_else(|| nb.iter().find(|&&u| u != s && u != t))
            .or_else(|| nb.first())
            .copied()
            .ok_or_else(|| Error::domain("isolated vertex in a minimal separator"))?;
        edges.push((v.min(partner), v.max(partner)));
    }
    edges.sort_unstable();
    edges.dedup();
    let witness = EdgeCutWitness::from_edges(edges, s, t);
    let ok = witness.edges.len() <= k
        && witness.edges.iter().all(|&(a, b)| g.has_edge(a, b))
        && is_separator(
            g,
            &witness.deleted,
            &VertexSet::singleton(s),
            &VertexSet::singleton(t),
        );
    if !ok {
        return Err(Error::domain(format!(
            "edge cut witness failed verification: {:?}",
            witness.edges
        )));
    }
    Ok(Some(witness))
}

/// Every vertex lying on some minimal `s-t` separator of at most `k`
/// vertices.
///
/// `v` qualifies iff for some neighbours `v1`, `v2` of `v` (or `s`, `t`
/// themselves) a set of at most `k - 1` vertices separates `s` from `t` in
/// `G - v` while leaving `s` connected to `v1` and `t` to `v2`.
pub fn exact_separator_union(g: &Graph, s: usize, t: usize, k: usize) -> Result<VertexSet> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    if s == t || g.has_edge(s, t) {
        return Err(Error::domain("terminals must be distinct and non-adjacent"));
    }
    let mut out = Vec::new();
    if k == 0 {
        return Ok(VertexSet::new());
    }
    for v in g.vertices() {
        if v == s || v == t {
            continue;
        }
        let without = g.isolate(&[v]);
        // cheap necessary condition: G - v needs a small s-t separator
        if let SeparatorResult::ExceedsCap(_) | SeparatorResult::Infinite =
            min_st_separator(&without, s, t, Some(k - 1))?
        {
            continue;
        }
        if on_small_minimal_separator(g, &without, s, t, v, k)? {
            out.push(v);
        }
    }
    Ok(out.into_iter().collect())
}

fn on_small_minimal_separator(
    g: &Graph,
    without: &Graph,
    s: usize,
    t: usize,
    v: usize,
    k: usize,
) -> Result<bool> {
    let nb = g.neighbors(v);
    for &v1 in nb {
        if v1 == t {
            continue;
        }
        for &v2 in nb {
            if v2 == s || v2 == v1 {
                continue;
            }
            let cons = CutConstraints {
                cut_pairs: vec![(s, t)],
                uncut_pairs: vec![(s, v1), (t, v2)],
            };
            if g_multicut_uncut(without, &cons, k - 1, &HereditaryClass::Any)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn stable_cut_examples() {
        let c4 = fixtures::c4();
        assert_eq!(
            stable_st_cut(&c4.graph, c4.s, c4.t, 2).unwrap(),
            Some(c4.set(&["a", "b"]))
        );
        let d4 = fixtures::d4();
        assert_eq!(stable_st_cut(&d4.graph, d4.s, d4.t, 2).unwrap(), None);
        let apart = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            stable_st_cut(&apart, 0, 2, 0).unwrap(),
            Some(VertexSet::new())
        );
    }

    #[test]
    fn eivc_examples() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = edge_induced_vertex_cut(&path, 0, 3, 1).unwrap().unwrap();
        assert_eq!(w.edges.len(), 1);
        let c4 = fixtures::c4();
        assert_eq!(
            edge_induced_vertex_cut(&c4.graph, c4.s, c4.t, 1).unwrap(),
            None
        );
        let w = edge_induced_vertex_cut(&c4.graph, c4.s, c4.t, 2)
            .unwrap()
            .unwrap();
        assert_eq!(w.deleted, c4.set(&["a", "b"]));
        assert_eq!(w.edges, vec![(0, 1), (0, 3)]);
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        for k in 0..3 {
            assert_eq!(edge_induced_vertex_cut(&edge, 0, 1, k).unwrap(), None);
        }
    }

    #[test]
    fn separator_union_examples() {
        let p3 = fixtures::p3();
        assert_eq!(
            exact_separator_union(&p3.graph, p3.s, p3.t, 1).unwrap(),
            p3.set(&["a"])
        );
        let pp = fixtures::pp();
        assert_eq!(
            exact_separator_union(&pp.graph, pp.s, pp.t, 2).unwrap(),
            pp.set(&["a1", "a2", "b1", "b2"])
        );
        let c4 = fixtures::c4();
        assert_eq!(
            exact_separator_union(&c4.graph, c4.s, c4.t, 1).unwrap(),
            VertexSet::new()
        );
        assert!(exact_separator_union(&c4.graph, 0, 1, 2).is_err());
    }
}
