//! Nested chains of minimum separators.
//!
//! For terminals `s, t` with minimum separator size `ℓ`, [`build_chain`]
//! produces sets `X_1 ⊂ … ⊂ X_q` containing `s`, each with a boundary of
//! exactly `ℓ` vertices, such that every minimum `s-t` separator lies in the
//! union of the boundaries. Start from the source side of one minimum
//! separator through each eligible vertex, then uncross: any two crossing
//! sets are replaced by their intersection and union. Boundary size is
//! submodular, so both replacements are again minimum, and their
//! boundaries cover the same vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{boundary_of_mask, Graph, VertexSet};
use crate::separation::{min_separator_containing, min_st_separator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorChain {
    pub s: usize,
    pub t: usize,
    pub ell: usize,
    /// `X_1 ⊂ … ⊂ X_q`.
    pub sets: Vec<VertexSet>,
    /// `δ(X_i)`, parallel to `sets`.
    pub boundaries: Vec<VertexSet>,
    /// `X_{q+1} = V \ {t}`; `X_0` is empty.
    pub last_set: VertexSet,
}

impl SeparatorChain {
    pub fn q(&self) -> usize {
        self.sets.len()
    }

    /// `X_i` for `0 ≤ i ≤ q+1`, sentinels included.
    pub fn set(&self, i: usize) -> VertexSet {
        match i {
            0 => VertexSet::new(),
            i if i == self.q() + 1 => self.last_set.clone(),
            i => self.sets[i - 1].clone(),
        }
    }

    /// `S_i` for `0 ≤ i ≤ q+1`, with `S_0 = {s}` and `S_{q+1} = {t}`.
    pub fn boundary(&self, i: usize) -> VertexSet {
        match i {
            0 => VertexSet::singleton(self.s),
            i if i == self.q() + 1 => VertexSet::singleton(self.t),
            i => self.boundaries[i - 1].clone(),
        }
    }

    /// Union of all boundaries `S_0 ∪ … ∪ S_{q+1}`.
    pub fn boundary_union(&self) -> VertexSet {
        (0..=self.q() + 1)
            .flat_map(|i| self.boundary(i).into_vec())
            .collect()
    }
}

fn delta(g: &Graph, x: &VertexSet) -> VertexSet {
    boundary_of_mask(g, &x.mask(g.n()))
}

fn nested(a: &VertexSet, b: &VertexSet) -> bool {
    a.is_subset(b) || b.is_subset(a)
}

/// Builds the chain for non-adjacent `s`, `t`.
pub fn build_chain(g: &Graph, s: usize, t: usize) -> Result<SeparatorChain> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    if s == t || g.has_edge(s, t) {
        return Err(Error::domain(
            "chain needs distinct, non-adjacent terminals",
        ));
    }
    let ell = min_st_separator(g, s, t, None)?
        .size()
        .expect("non-adjacent terminals have a finite separator");

    let mut initial: BTreeSet<VertexSet> = BTreeSet::new();
    for v in g.vertices().filter(|&v| v != s && v != t) {
        if let Some(sep) = min_separator_containing(g, s, t, v)? {
            initial.insert(sep.source_side);
        }
    }
    let mut sets: Vec<VertexSet> = initial.into_iter().collect();
    let step_limit = g.n().max(1) * sets.len() * sets.len();
    let mut steps = 0;

    while let Some((i, j)) = first_crossing_pair(&sets) {
        steps += 1;
        assert!(
            steps <= step_limit,
            "uncrossing exceeded {step_limit} steps"
        );
        let (xi, xj) = (sets[i].clone(), sets[j].clone());
        let meet = xi.intersection(&xj);
        let join = xi.union(&xj);
        let (d_meet, d_join) = (delta(g, &meet), delta(g, &join));
        assert_eq!(d_meet.len(), ell, "intersection boundary not minimum");
        assert_eq!(d_join.len(), ell, "union boundary not minimum");
        assert_eq!(
            d_meet.union(&d_join),
            delta(g, &xi).union(&delta(g, &xj)),
            "uncrossing lost boundary coverage"
        );
        sets.remove(j);
        sets.remove(i);
        for x in [meet, join] {
            if !sets.contains(&x) {
                sets.push(x);
            }
        }
        sets.sort();
    }

    sets.sort_by_key(VertexSet::len);
    let boundaries = sets.iter().map(|x| delta(g, x)).collect();
    let last_set = g.vertices().filter(|&v| v != t).collect();
    Ok(SeparatorChain {
        s,
        t,
        ell,
        sets,
        boundaries,
        last_set,
    })
}

fn first_crossing_pair(sets: &[VertexSet]) -> Option<(usize, usize)> {
    (0..sets.len())
        .flat_map(|i| (i + 1..sets.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !nested(&sets[i], &sets[j]))
}

/// Checks the chain properties against the full list of minimum
/// separators: strict nesting, boundary sizes, the containment
/// `{s} ⊆ X_i ⊆ V \ ({t} ∪ N(t))`, recorded boundaries, and coverage.
pub fn validate_chain(
    g: &Graph,
    s: usize,
    t: usize,
    chain: &SeparatorChain,
    min_separators: &[VertexSet],
) -> bool {
    if chain.s != s || chain.t != t || chain.sets.len() != chain.boundaries.len() {
        return false;
    }
    let strictly_nested = chain
        .sets
        .windows(2)
        .all(|w| w[0].is_subset(&w[1]) && w[0].len() < w[1].len());
    let forbidden: VertexSet = g.neighbors(t).iter().copied().chain([t]).collect();
    let shapes_ok = chain.sets.iter().zip(&chain.boundaries).all(|(x, b)| {
        let d = delta(g, x);
        x.contains(s) && x.is_disjoint(&forbidden) && d.len() == chain.ell && &d == b
    });
    let covered = chain.boundary_union();
    let coverage = min_separators.iter().all(|sep| sep.is_subset(&covered));
    strictly_nested && shapes_ok && coverage
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_minimal_separators, fixtures};

    fn minimum_separators(g: &Graph, s: usize, t: usize) -> Vec<VertexSet> {
        let all = enumerate_minimal_separators(g, s, t, g.n());
        let ell = all.iter().map(VertexSet::len).min().unwrap_or(0);
        all.into_iter().filter(|x| x.len() == ell).collect()
    }

    #[test]
    fn chain_examples() {
        let p3 = fixtures::p3();
        let c = build_chain(&p3.graph, 0, 2).unwrap();
        assert_eq!(c.sets, vec![VertexSet::from([0])]);
        assert_eq!(c.boundaries, vec![VertexSet::from([1])]);

        let c4 = fixtures::c4();
        let c = build_chain(&c4.graph, 0, 2).unwrap();
        assert_eq!(c.sets, vec![VertexSet::from([0])]);
        assert_eq!(c.boundaries, vec![VertexSet::from([1, 3])]);

        let pp = fixtures::pp();
        let c = build_chain(&pp.graph, pp.s, pp.t).unwrap();
        assert_eq!(c.ell, 2);
        assert_eq!(c.sets, vec![pp.set(&["s"]), pp.set(&["s", "a1", "b1"])]);
        assert_eq!(
            c.boundaries,
            vec![pp.set(&["a1", "b1"]), pp.set(&["a2", "b2"])]
        );
        assert_eq!(c.boundary(0), pp.set(&["s"]));
        assert_eq!(c.boundary(3), pp.set(&["t"]));
    }

    #[test]
    fn validation_examples() {
        let p3 = fixtures::p3();
        let c = build_chain(&p3.graph, 0, 2).unwrap();
        assert!(validate_chain(
            &p3.graph,
            0,
            2,
            &c,
            &minimum_separators(&p3.graph, 0, 2)
        ));

        let pp = fixtures::pp();
        let seps = minimum_separators(&pp.graph, pp.s, pp.t);
        assert_eq!(seps.len(), 4);
        let full = build_chain(&pp.graph, pp.s, pp.t).unwrap();
        assert!(validate_chain(&pp.graph, pp.s, pp.t, &full, &seps));

        let mut truncated = full.clone();
        truncated.sets.pop();
        truncated.boundaries.pop();
        assert!(!validate_chain(&pp.graph, pp.s, pp.t, &truncated, &seps));

        let mut crossing = full.clone();
        let x = pp.set(&["s", "a1"]);
        crossing.boundaries.insert(1, delta(&pp.graph, &x));
        crossing.sets.insert(1, x);
        let y = pp.set(&["s", "b1"]);
        crossing.boundaries.insert(2, delta(&pp.graph, &y));
        crossing.sets.insert(2, y);
        assert!(!validate_chain(&pp.graph, pp.s, pp.t, &crossing, &seps));
    }

    #[test]
    fn rejects_adjacent_terminals() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(build_chain(&g, 0, 1).is_err());
    }

    #[test]
    fn disconnected_terminals_give_empty_chain() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = build_chain(&g, 0, 3).unwrap();
        assert_eq!((c.ell, c.q()), (0, 0));
    }

    #[test]
    fn cube_chain() {
        let q3 = fixtures::q3();
        let c = build_chain(&q3.graph, q3.s, q3.t).unwrap();
        assert_eq!(c.ell, 3);
        assert_eq!(c.q(), 2);
        let seps = minimum_separators(&q3.graph, q3.s, q3.t);
        assert!(validate_chain(&q3.graph, q3.s, q3.t, &c, &seps));
    }
}
