//! Treewidth reduction.
//!
//! [`cover_set`] computes a superset of every vertex lying on a minimal
//! `s-t` separator of size at most `k` whose torso has bounded treewidth.
//! It layers the graph between consecutive separators of a
//! [`SeparatorChain`](crate::chain::SeparatorChain) and recurses into each
//! layer with the two sides contracted, lowering the excess by one per
//! level. [`reduce_instance`] unions the covers over all terminal pairs,
//! takes the torso, and replaces each edge the torso invented by `k + 1`
//! parallel undeletable paths of length two.

use std::collections::BTreeSet;

use log::warn;
use serde::Serialize;

use crate::chain::build_chain;
use crate::error::{Error, Result};
use crate::graph::{components_masked, contract_terminal_sets, Graph, VertexSet};
use crate::separation::{min_st_separator, SeparatorResult};

/// Torso of `g` on `c`: vertices of `c` (relabeled `0..|c|` in ascending
/// order), adjacent when adjacent in `g` or joined by a path whose inner
/// vertices avoid `c`.
#[derive(Clone, Debug)]
pub struct Torso {
    pub graph: Graph,
    /// Original id of each torso vertex.
    pub origin: Vec<usize>,
    /// Torso edges absent from `g`, in original ids, sorted.
    pub added: Vec<(usize, usize)>,
}

pub fn torso(g: &Graph, c: &VertexSet) -> Result<Torso> {
    g.check_set(c, "C")?;
    let n = g.n();
    let in_c = c.mask(n);
    let mut index = vec![usize::MAX; n];
    for (i, &v) in c.iter().enumerate() {
        index[v] = i;
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        if in_c[u] && in_c[v] {
            edges.insert((u, v));
        }
    }
    let mut added = BTreeSet::new();
    for comp in components_masked(g, &in_c) {
        let attach: VertexSet = comp
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().copied())
            .filter(|&w| in_c[w])
            .collect();
        for (i, &u) in attach.iter().enumerate() {
            for &v in &attach[i + 1..] {
                if edges.insert((u, v)) {
                    added.insert((u, v));
                }
            }
        }
    }
    let graph =
        Graph::from_edges_unchecked(c.len(), edges.iter().map(|&(u, v)| (index[u], index[v])));
    Ok(Torso {
        graph,
        origin: c.to_vec(),
        added: added.into_iter().collect(),
    })
}

/// Values of the width and running-time recurrences for given `ℓ` and
/// excess `e`:
/// `g(ℓ,0) = 6ℓ`, `g(ℓ,e) = 3(2ℓ + 9^ℓ (g(ℓ,e-1) + 1))`,
/// `f(ℓ,0) = 1`, `f(ℓ,e) = f(ℓ,e-1) 9^ℓ + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreewidthBounds {
    pub ell: u64,
    pub excess: u64,
    pub g_value: u64,
    pub f_value: u64,
    /// Set when a value overflowed `u64` and was clamped to `u64::MAX`.
    pub saturated: bool,
}

pub fn tw_bound(ell: u64, excess: u64) -> Result<TreewidthBounds> {
    if ell == 0 {
        return Err(Error::domain("tw_bound needs ell >= 1"));
    }
    let mut saturated = false;
    let mut sat = |x: Option<u64>| {
        x.unwrap_or_else(|| {
            saturated = true;
            u64::MAX
        })
    };
    let pow = sat(u32::try_from(2 * ell)
        .ok()
        .and_then(|p| 3u64.checked_pow(p)));
    let mut g = sat(ell.checked_mul(6));
    let mut f = 1u64;
    for _ in 0..excess {
        let inner = pow.checked_mul(g.saturating_add(1));
        let inner = sat(inner.and_then(|x| x.checked_add(2 * ell)));
        g = sat(inner.checked_mul(3));
        f = sat(f.checked_mul(pow).and_then(|x| x.checked_add(1)));
    }
    if saturated {
        warn!("tw_bound({ell}, {excess}) overflowed and was saturated");
    }
    Ok(TreewidthBounds {
        ell,
        excess,
        g_value: g,
        f_value: f,
        saturated,
    })
}

/// Superset of `{s, t}` and of every vertex on a minimal `s-t` separator of
/// size at most `k`. Adjacent terminals or a minimum separator above `k`
/// yield just `{s, t}`.
pub fn cover_set(g: &Graph, s: usize, t: usize, k: usize) -> Result<VertexSet> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    if s == t {
        return Err(Error::domain("cover_set needs distinct terminals"));
    }
    Ok(cover_rec(g, s, t, k))
}

fn cover_rec(g: &Graph, s: usize, t: usize, k: usize) -> VertexSet {
    let terminals = VertexSet::from([s, t]);
    if g.has_edge(s, t) {
        return terminals;
    }
    let ell = match min_st_separator(g, s, t, Some(k)).expect("valid terminals") {
        SeparatorResult::Found(sep) => sep.size(),
        _ => return terminals,
    };
    if ell == 0 {
        // Only the empty set separates.
        return terminals;
    }
    let excess = k - ell;
    let chain = build_chain(g, s, t).expect("terminals are non-adjacent");
    let mut cover = chain.boundary_union();
    if excess == 0 {
        return cover;
    }

    let q = chain.q();
    let n = g.n();
    for i in 1..=q + 1 {
        let inner = chain.set(i);
        let outer = chain.set(i - 1).union(&chain.boundary(i - 1));
        let layer = inner.difference(&outer);
        if layer.is_empty() {
            continue;
        }
        let pool = chain.boundary(i).union(&chain.boundary(i - 1));
        for (a_set, b_set) in disjoint_pairs(&pool) {
            let contracted = contract_terminal_sets(g, &layer, &a_set, &b_set)
                .expect("layer and pool are disjoint");
            let sub = &contracted.graph;
            if sub.has_edge(contracted.a, contracted.b) {
                continue;
            }
            let sub_ell = match min_st_separator(sub, contracted.a, contracted.b, Some(k))
                .expect("valid terminals")
            {
                SeparatorResult::Found(sep) => sep.size(),
                _ => continue,
            };
            let budget = k.min(sub_ell + excess - 1);
            let sub_cover = cover_rec(sub, contracted.a, contracted.b, budget);
            cover = cover.union(
                &sub_cover
                    .iter()
                    .filter(|&&v| v != contracted.a && v != contracted.b)
                    .map(|&v| contracted.origin[v])
                    .collect(),
            );
        }
    }
    debug_assert!(cover.iter().all(|&v| v < n));
    cover
}

/// All ordered pairs `(A, B)` of disjoint non-empty subsets of `pool`, in
/// base-3 counting order.
fn disjoint_pairs(pool: &VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let p = pool.len();
    let total = 3usize.pow(p as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for &v in pool.iter() {
            match c % 3 {
                1 => a.push(v),
                2 => b.push(v),
                _ => {}
            }
            c /= 3;
        }
        if !a.is_empty() && !b.is_empty() {
            out.push((VertexSet::from_sorted(a), VertexSet::from_sorted(b)));
        }
    }
    out
}

/// What a vertex of the reduced graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Origin {
    /// An original vertex (0-based id).
    Original { id: usize },
    /// Copy `copy` of the subdivision vertex replacing torso edge `{u, v}`.
    Gadget { u: usize, v: usize, copy: usize },
}

/// Reduced graph together with its relation to the input.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub gstar: Graph,
    /// Cover set in original ids, terminals included.
    pub cover: VertexSet,
    /// Terminals in original ids.
    pub terminals: VertexSet,
    pub k: usize,
    /// Per reduced vertex.
    pub origin: Vec<Origin>,
    /// Gadget vertices (reduced ids); never part of a solution.
    pub undeletable: VertexSet,
    /// Terminal pairs whose cover contributed (separable within `k`).
    pub contributing_pairs: Vec<(usize, usize)>,
    pub width_bound: u64,
    /// Minimum separator size per contributing pair, parallel to
    /// `contributing_pairs`.
    pub pair_ells: Vec<usize>,
}

impl ReducedInstance {
    /// Reduced id of an original vertex in the cover.
    pub fn reduced_id(&self, original: usize) -> Option<usize> {
        self.cover.as_slice().binary_search(&original).ok()
    }

    /// Original id of a reduced vertex, `None` for gadgets.
    pub fn original_id(&self, reduced: usize) -> Option<usize> {
        match self.origin[reduced] {
            Origin::Original { id } => Some(id),
            Origin::Gadget { .. } => None,
        }
    }

    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|&v| self.original_id(v)).collect()
    }

    pub fn to_reduced(&self, set: &VertexSet) -> Option<VertexSet> {
        set.iter()
            .map(|&v| self.reduced_id(v))
            .collect::<Option<Vec<_>>>()
            .map(Into::into)
    }

    /// JSON view with 1-based ids.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.gstar.edges().map(|(u, v)| [u + 1, v + 1]).collect();
        let origin: Vec<serde_json::Value> = self
            .origin
            .iter()
            .map(|o| match *o {
                Origin::Original { id } => serde_json::json!({"kind": "original", "id": id + 1}),
                Origin::Gadget { u, v, copy } => {
                    serde_json::json!({"kind": "gadget", "u": u + 1, "v": v + 1, "copy": copy + 1})
                }
            })
            .collect();
        serde_json::json!({
            "n": self.gstar.n(),
            "edges": edges,
            "cover": self.cover.to_external(),
            "terminals": self.terminals.to_external(),
            "k": self.k,
            "origin": origin,
            "width_bound": self.width_bound,
        })
    }
}

/// Builds the reduced graph for a terminal set and budget `k`.
pub fn reduce_instance(g: &Graph, terminals: &VertexSet, k: usize) -> Result<ReducedInstance> {
    g.check_set(terminals, "terminals")?;
    if terminals.len() < 2 {
        return Err(Error::domain("at least two terminals are required"));
    }
    let mut cover = terminals.clone();
    let mut contributing = Vec::new();
    let mut pair_ells = Vec::new();
    for (i, &s) in terminals.iter().enumerate() {
        for &t in &terminals[i + 1..] {
            if g.has_edge(s, t) {
                continue;
            }
            if let SeparatorResult::Found(sep) = min_st_separator(g, s, t, Some(k))? {
                cover = cover.union(&cover_rec(g, s, t, k));
                contributing.push((s, t));
                pair_ells.push(sep.size());
            }
        }
    }

    let tor = torso(g, &cover)?;
    let base = cover.len();
    let mut origin: Vec<Origin> = cover.iter().map(|&id| Origin::Original { id }).collect();
    let mut edges: Vec<(usize, usize)> = tor
        .graph
        .edges()
        .filter(|&(u, v)| g.has_edge(tor.origin[u], tor.origin[v]))
        .collect();
    for &(u, v) in &tor.added {
        let (ru, rv) = (
            cover.as_slice().binary_search(&u).unwrap(),
            cover.as_slice().binary_search(&v).unwrap(),
        );
        for copy in 0..=k {
            let w = origin.len();
            origin.push(Origin::Gadget { u, v, copy });
            edges.push((ru, w));
            edges.push((rv, w));
        }
    }
    let gstar = Graph::from_edges_unchecked(origin.len(), edges);
    let undeletable = (base..origin.len()).collect();

    let g_max = contributing
        .iter()
        .zip(&pair_ells)
        .filter(|(_, &ell)| ell > 0)
        .map(|(_, &ell)| tw_bound(ell as u64, (k - ell) as u64).map(|b| b.g_value))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let r = contributing.len() as u64;
    let width_bound = 3u64
        .saturating_mul(r)
        .saturating_mul(g_max.saturating_add(1))
        .saturating_add(1);

    Ok(ReducedInstance {
        gstar,
        cover,
        terminals: terminals.clone(),
        k,
        origin,
        undeletable,
        contributing_pairs: contributing,
        width_bound,
        pair_ells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_minimal_separators, fixtures};

    #[test]
    fn torso_examples() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = torso(&path, &[0, 2].into()).unwrap();
        assert_eq!(t.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(t.added, vec![(0, 2)]);

        let c4 = fixtures::c4();
        let t = torso(&c4.graph, &[0, 2].into()).unwrap();
        assert_eq!(t.graph.m(), 1);
        assert_eq!(t.added, vec![(0, 2)]);

        let pp = fixtures::pp();
        let c = pp.set(&["s", "a1", "t"]);
        let t = torso(&pp.graph, &c).unwrap();
        // torso ids: s=0, a1=1, t=2
        assert_eq!(
            t.graph.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(t.added.len(), 2);
        assert!(torso(&pp.graph, &[17].into()).is_err());
    }

    #[test]
    fn bound_values() {
        let b = tw_bound(1, 0).unwrap();
        assert_eq!((b.g_value, b.f_value), (6, 1));
        let b = tw_bound(1, 1).unwrap();
        assert_eq!((b.g_value, b.f_value), (195, 10));
        let b = tw_bound(2, 0).unwrap();
        assert_eq!((b.g_value, b.f_value), (12, 1));
        assert!(!b.saturated);
        assert!(tw_bound(6, 5).unwrap().saturated);
        assert!(tw_bound(0, 1).is_err());
    }

    #[test]
    fn cover_examples() {
        let p3 = fixtures::p3();
        assert_eq!(cover_set(&p3.graph, 0, 2, 1).unwrap(), [0, 1, 2].into());
        let pp = fixtures::pp();
        assert_eq!(
            cover_set(&pp.graph, pp.s, pp.t, 2).unwrap(),
            pp.graph.all_vertices()
        );
        let q3 = fixtures::q3();
        assert_eq!(cover_set(&q3.graph, q3.s, q3.t, 6).unwrap().len(), 8);
        // over budget and adjacent terminals degrade to {s, t}
        assert_eq!(
            cover_set(&pp.graph, pp.s, pp.t, 1).unwrap(),
            [pp.s, pp.t].into()
        );
        let d4 = fixtures::d4();
        assert_eq!(cover_set(&d4.graph, 0, 1, 3).unwrap(), [0, 1].into());
    }

    #[test]
    fn cover_reaches_into_layers() {
        // 3x3 grid, opposite corners; ell = 2 and the size-3 minimal
        // separators run through the middle vertex, which lies strictly
        // inside a layer of the chain.
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c < 2 {
                    edges.push((v, v + 1));
                }
                if r < 2 {
                    edges.push((v, v + 3));
                }
            }
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let c = cover_set(&g, 0, 8, 3).unwrap();
        let seps = enumerate_minimal_separators(&g, 0, 8, 3);
        assert!(seps.iter().any(|s| s.contains(4)));
        for sep in seps {
            assert!(sep.is_subset(&c), "{sep:?} not in {c:?}");
        }
    }

    #[test]
    fn reduce_examples() {
        let p3 = fixtures::p3();
        let r = reduce_instance(&p3.graph, &[0, 2].into(), 1).unwrap();
        assert_eq!(r.gstar, p3.graph);
        assert!(r.undeletable.is_empty());

        let pp = fixtures::pp();
        let r = reduce_instance(&pp.graph, &[pp.s, pp.t].into(), 1).unwrap();
        assert_eq!(r.cover, [pp.s, pp.t].into());
        assert_eq!(r.gstar.n(), 4);
        assert_eq!(r.undeletable, [2, 3].into());
        for w in [2, 3] {
            assert_eq!(r.gstar.neighbors(w), &[0, 1]);
        }
        assert!(enumerate_minimal_separators(&r.gstar, 0, 1, 1).is_empty());

        let c4 = fixtures::c4();
        let r = reduce_instance(&c4.graph, &[0, 2].into(), 2).unwrap();
        assert_eq!(r.gstar, c4.graph);

        assert!(reduce_instance(&c4.graph, &[0].into(), 2).is_err());
    }

    #[test]
    fn reduced_json_is_one_based() {
        let pp = fixtures::pp();
        let r = reduce_instance(&pp.graph, &[pp.s, pp.t].into(), 1).unwrap();
        let j = r.to_json();
        assert_eq!(j["cover"], serde_json::json!([1, 6]));
        assert_eq!(j["origin"][2]["kind"], "gadget");
        assert_eq!(j["edges"][0], serde_json::json!([1, 3]));
    }

    #[test]
    fn disjoint_pair_count() {
        let pool = VertexSet::from([0, 1, 2]);
        // 3^3 - 2*2^3 + 1
        assert_eq!(disjoint_pairs(&pool).len(), 12);
    }
}
