//! Odd cycle transversal and its stable and exact-size variants.

use serde::Serialize;

use super::matching::bipartite_max_independent_set;
use crate::error::Result;
use crate::graph::{shortest_odd_cycle, two_coloring, Graph, VertexSet};
use crate::separation::{min_st_separator, SeparatorResult};
use crate::solver::{g_mincut, HereditaryClass};

/// One way of treating an initial transversal: vertices removed, forced
/// black or forced white, and the separation instance it leads to.
#[derive(Clone, Debug, Serialize)]
pub struct BipartizationBranch {
    pub s0: VertexSet,
    pub r: VertexSet,
    pub b0: VertexSet,
    pub w0: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
    /// `G` minus `B0 ∪ W0` (kept as isolated ids) plus `s = n`, `t = n + 1`.
    #[serde(skip)]
    pub gprime: Graph,
}

impl BipartizationBranch {
    pub fn s(&self) -> usize {
        self.gprime.n() - 2
    }

    pub fn t(&self) -> usize {
        self.gprime.n() - 1
    }
}

pub(crate) fn is_independent(g: &Graph, set: &VertexSet) -> bool {
    set.iter()
        .all(|&a| g.neighbors(a).iter().all(|&b| !set.contains(b)))
}

pub(crate) fn bipartite_after(g: &Graph, removed: &VertexSet) -> bool {
    two_coloring(&g.isolate(removed)).is_some()
}

/// All branches `(R, B0, W0)` over `s0` with `B0` and `W0` independent, in
/// order (remove < black < white, first vertex most significant). `g`
/// minus `s0` must be bipartite.
pub fn branches(g: &Graph, s0: &VertexSet) -> Vec<BipartizationBranch> {
    let n = g.n();
    let (bp, _) = two_coloring(&g.isolate(s0)).expect("s0 is a transversal");
    let black_side = bp.mask(n);
    let in_s0 = s0.mask(n);
    let m = s0.len();
    let mut out = Vec::new();
    for code in 0..3usize.pow(m as u32) {
        let (mut r, mut b0, mut w0) = (Vec::new(), Vec::new(), Vec::new());
        for (i, &v) in s0.iter().enumerate() {
            match code / 3usize.pow((m - 1 - i) as u32) % 3 {
                0 => r.push(v),
                1 => b0.push(v),
                _ => w0.push(v),
            }
        }
        let (r, b0, w0) = (
            VertexSet::from_sorted(r),
            VertexSet::from_sorted(b0),
            VertexSet::from_sorted(w0),
        );
        if !is_independent(g, &b0) || !is_independent(g, &w0) {
            continue;
        }
        let nbrs = |set: &VertexSet| -> Vec<bool> {
            let mut mask = vec![false; n];
            for &v in set {
                for &u in g.neighbors(v) {
                    mask[u] = !in_s0[u];
                }
            }
            mask
        };
        let forced_black = nbrs(&w0);
        let forced_white = nbrs(&b0);
        let x: VertexSet = (0..n)
            .filter(|&v| (forced_black[v] && black_side[v]) || (forced_white[v] && !black_side[v]))
            .collect();
        let y: VertexSet = (0..n)
            .filter(|&v| (forced_black[v] && !black_side[v]) || (forced_white[v] && black_side[v]))
            .collect();
        let (s, t) = (n, n + 1);
        let kept = g.isolate(&b0.union(&w0));
        let mut edges: Vec<(usize, usize)> = kept.edges().collect();
        edges.extend(x.union(&r).iter().map(|&v| (s, v)));
        edges.extend(y.union(&r).iter().map(|&v| (v, t)));
        let gprime = Graph::from_edges_unchecked(n + 2, edges);
        out.push(BipartizationBranch {
            s0: s0.clone(),
            r,
            b0,
            w0,
            x,
            y,
            gprime,
        });
    }
    out
}

/// Compresses a transversal `s0` of `g` to one of size at most `k`.
fn compress(g: &Graph, s0: &VertexSet, k: usize) -> Option<VertexSet> {
    for br in branches(g, s0) {
        if br.r.len() > k {
            continue;
        }
        match min_st_separator(&br.gprime, br.s(), br.t(), Some(k)).ok()? {
            SeparatorResult::Found(sep) => {
                debug_assert!(br.r.is_subset(&sep.witness));
                return Some(sep.witness);
            }
            SeparatorResult::Infinite | SeparatorResult::ExceedsCap(_) => {}
        }
    }
    None
}

fn oct_at_most(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut s = VertexSet::new();
    for i in 0..n {
        // g restricted to vertices 0..=i
        let prefix = g.isolate(&(i + 1..n).collect::<VertexSet>());
        let grown = s.with(i);
        s = if grown.len() <= k {
            grown
        } else {
            compress(&prefix, &grown, k)?
        };
    }
    debug_assert!(bipartite_after(g, &s));
    Some(s)
}

/// A minimum set of at most `k` vertices meeting every odd cycle, by
/// iterative compression over vertices in ascending order.
pub fn odd_cycle_transversal(g: &Graph, k: usize) -> Option<VertexSet> {
    if two_coloring(g).is_some() {
        return Some(VertexSet::new());
    }
    (1..=k).find_map(|j| oct_at_most(g, j))
}

/// An independent set of at most `k` vertices whose removal makes `g`
/// bipartite.
pub fn stable_bipartization(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    let Some(s0) = odd_cycle_transversal(g, k) else {
        return Ok(None);
    };
    if s0.is_empty() {
        return Ok(Some(s0));
    }
    for br in branches(g, &s0) {
        let Some(w) = g_mincut(&br.gprime, br.s(), br.t(), k, &HereditaryClass::Edgeless)? else {
            continue;
        };
        let set = w.deletion_set;
        if is_independent(g, &set) && bipartite_after(g, &set) {
            debug_assert!(br.r.is_subset(&set));
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// An independent set of exactly `k` vertices whose removal makes `g`
/// bipartite.
pub fn exact_stable_bipartization(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    exact_stable_bipartization_within(g, &g.all_vertices(), k)
}

/// As [`exact_stable_bipartization`], with the deleted set restricted to
/// `allowed`.
pub fn exact_stable_bipartization_within(
    g: &Graph,
    allowed: &VertexSet,
    k: usize,
) -> Result<Option<VertexSet>> {
    g.check_set(allowed, "allowed")?;
    let found = exact_rec(g, allowed, k)?;
    if let Some(s) = &found {
        assert!(
            s.len() == k && s.is_subset(allowed) && is_independent(g, s) && bipartite_after(g, s),
            "exact stable bipartization produced an invalid set"
        );
    }
    Ok(found)
}

fn exact_rec(g: &Graph, d: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
    let Some(cycle) = shortest_odd_cycle(g) else {
        let ind = bipartite_max_independent_set(g, d).expect("bipartite");
        return Ok((ind.len() >= k).then(|| ind.iter().copied().take(k).collect()));
    };
    if k == 0 {
        return Ok(None);
    }
    let on_cycle: VertexSet = cycle.iter().copied().filter(|&v| d.contains(v)).collect();
    if on_cycle.is_empty() {
        return Ok(None);
    }
    if on_cycle.len() <= 3 * k + 1 {
        for &v in &on_cycle {
            let next_d: VertexSet = d
                .iter()
                .copied()
                .filter(|&u| u != v && !g.has_edge(u, v))
                .collect();
            if let Some(s) = exact_rec(&g.isolate(&[v]), &next_d, k - 1)? {
                return Ok(Some(s.with(v)));
            }
        }
        return Ok(None);
    }

    // Long chordless cycle: solve with at most k deletions inside d, then
    // pad with independent cycle vertices.
    let split = split_outside(g, d, k);
    let Some(s) = stable_bipartization(&split, k)? else {
        return Ok(None);
    };
    // copies are twins of a surviving copy, so dropping them keeps the
    // rest bipartite
    let s: VertexSet = s
        .iter()
        .copied()
        .filter(|&v| v < g.n() && d.contains(v))
        .collect();
    debug_assert!(bipartite_after(g, &s));
    let mut chosen = s.clone();
    for &v in &cycle {
        if chosen.len() == k {
            break;
        }
        let free = d.contains(v)
            && !chosen.contains(v)
            && g.neighbors(v).iter().all(|&u| !chosen.contains(u));
        if free {
            chosen = chosen.with(v);
        }
    }
    assert_eq!(chosen.len(), k, "cycle too short to pad the solution");
    Ok(Some(chosen))
}

/// Every vertex outside `d` becomes `k + 1` pairwise non-adjacent copies
/// with the same neighbourhood. Original ids are kept; extra copies are
/// appended.
fn split_outside(g: &Graph, d: &VertexSet, k: usize) -> Graph {
    let n = g.n();
    let outside: Vec<usize> = g.vertices().filter(|&v| !d.contains(v)).collect();
    // copies[v] = ids standing for v
    let mut copies: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut next = n;
    for &v in &outside {
        for _ in 0..k {
            copies[v].push(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for &a in &copies[u] {
            for &b in &copies[v] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_unchecked(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn oct_examples() {
        assert_eq!(odd_cycle_transversal(&cycle(4), 0), Some(VertexSet::new()));
        assert_eq!(
            odd_cycle_transversal(&cycle(5), 1).map(|s| s.len()),
            Some(1)
        );
        assert_eq!(odd_cycle_transversal(&cycle(5), 0), None);
        assert_eq!(odd_cycle_transversal(&complete(4), 1), None);
        let s = odd_cycle_transversal(&complete(4), 2).unwrap();
        assert_eq!(s.len(), 2);
        assert!(bipartite_after(&complete(4), &s));
    }

    #[test]
    fn stable_examples() {
        assert_eq!(
            stable_bipartization(&complete(3), 1)
                .unwrap()
                .map(|s| s.len()),
            Some(1)
        );
        for k in 0..=4 {
            assert_eq!(stable_bipartization(&complete(4), k).unwrap(), None);
        }
        assert_eq!(
            stable_bipartization(&cycle(6), 0).unwrap(),
            Some(VertexSet::new())
        );
    }

    #[test]
    fn exact_examples() {
        let s = exact_stable_bipartization(&cycle(5), 2).unwrap().unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(exact_stable_bipartization(&complete(3), 2).unwrap(), None);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            exact_stable_bipartization(&p3, 1).unwrap().map(|s| s.len()),
            Some(1)
        );
        // only the middle vertex may go
        assert_eq!(
            exact_stable_bipartization_within(&p3, &[1].into(), 2).unwrap(),
            None
        );
    }

    #[test]
    fn long_cycle_uses_the_padding_step() {
        // C9: one odd cycle with 9 > 3*2+1 allowed vertices
        let s = exact_stable_bipartization(&cycle(9), 2).unwrap().unwrap();
        assert_eq!(s.len(), 2);
        let s = exact_stable_bipartization(&cycle(11), 3).unwrap().unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn branch_structure() {
        let k3 = complete(3);
        let brs = branches(&k3, &[0].into());
        assert_eq!(brs.len(), 3);
        for br in &brs {
            // R is adjacent to both new terminals
            for &v in &br.r {
                assert!(br.gprime.has_edge(br.s(), v) && br.gprime.has_edge(br.t(), v));
            }
        }
    }
}
