//! Minimum vertex separators via unit-capacity augmenting paths.
//!
//! Every vertex `v` is split into an arc `v_in -> v_out`; the arc has
//! capacity one unless `v` is a terminal. Graph edges become infinite arcs
//! `u_out -> v_in` in both directions. The canonical minimum separator is
//! the one closest to the source side: vertices whose in-copy is residual
//! reachable from the source and whose out-copy is not.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{reachable, Graph, VertexSet};

/// A finite separator with its source side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub witness: VertexSet,
    /// Vertices connected to the source set in `G - witness`.
    pub source_side: VertexSet,
}

impl Separator {
    pub fn size(&self) -> usize {
        self.witness.len()
    }
}

/// Outcome of a minimum separator computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorResult {
    Found(Separator),
    /// The terminal sets touch, so no separator avoiding them exists.
    Infinite,
    /// More than `cap` disjoint paths exist; the search stopped early.
    ExceedsCap(usize),
}

impl SeparatorResult {
    pub fn found(&self) -> Option<&Separator> {
        match self {
            SeparatorResult::Found(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<Separator> {
        match self {
            SeparatorResult::Found(s) => Some(s),
            _ => None,
        }
    }

    /// Separator size, `None` for the infinite and over-cap outcomes.
    pub fn size(&self) -> Option<usize> {
        self.found().map(Separator::size)
    }
}

const INF: u32 = u32::MAX / 2;

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn with_nodes(n: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// One BFS augmentation of a single unit; false when the sink is cut off.
    fn augment(&mut self, source: usize, sink: usize, pred: &mut [usize]) -> bool {
        pred.fill(usize::MAX);
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = e;
                    if w == sink {
                        let mut node = sink;
                        while node != source {
                            let e = pred[node];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            node = self.head[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Minimum set `S ⊆ V \ (A ∪ B)` separating `A` from `B`.
///
/// With `cap = Some(c)` at most `c + 1` augmentations run and
/// [`SeparatorResult::ExceedsCap`] reports a minimum above `c`.
pub fn min_vertex_separator(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    cap: Option<usize>,
) -> Result<SeparatorResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::domain("terminal sets must be non-empty"));
    }
    g.check_set(a, "A")?;
    g.check_set(b, "B")?;
    let n = g.n();
    let in_a = a.mask(n);
    let in_b = b.mask(n);
    let touching = (0..n)
        .any(|v| (in_a[v] && in_b[v]) || (in_a[v] && g.neighbors(v).iter().any(|&w| in_b[w])));
    if touching {
        return Ok(SeparatorResult::Infinite);
    }

    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = Network::with_nodes(2 * n + 2);
    for v in 0..n {
        let c = if in_a[v] || in_b[v] { INF } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
        for &w in g.neighbors(v) {
            net.arc(2 * v + 1, 2 * w, INF);
        }
        if in_a[v] {
            net.arc(source, 2 * v, INF);
        }
        if in_b[v] {
            net.arc(2 * v + 1, sink, INF);
        }
    }

    let mut pred = vec![usize::MAX; 2 * n + 2];
    let mut flow = 0;
    while net.augment(source, sink, &mut pred) {
        flow += 1;
        if cap.is_some_and(|c| flow > c) {
            return Ok(SeparatorResult::ExceedsCap(cap.unwrap()));
        }
    }

    let seen = net.residual_reachable(source);
    let witness: VertexSet = (0..n)
        .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
        .collect();
    debug_assert_eq!(witness.len(), flow);
    let removed = witness.mask(n);
    let side = reachable(g, a, &removed);
    Ok(SeparatorResult::Found(Separator {
        witness,
        source_side: VertexSet::from_mask(&side),
    }))
}

/// Minimum `s-t` separator for single vertices.
pub fn min_st_separator(
    g: &Graph,
    s: usize,
    t: usize,
    cap: Option<usize>,
) -> Result<SeparatorResult> {
    min_vertex_separator(g, &VertexSet::singleton(s), &VertexSet::singleton(t), cap)
}

/// True iff no component of `G - S` meets both `A \ S` and `B \ S`.
pub fn is_separator(g: &Graph, s: &VertexSet, a: &VertexSet, b: &VertexSet) -> bool {
    let n = g.n();
    if [s, a, b].iter().any(|x| x.iter().any(|&v| v >= n)) {
        return false;
    }
    let removed = s.mask(n);
    let sources: Vec<usize> = a.iter().copied().filter(|&v| !removed[v]).collect();
    let side = reachable(g, &sources, &removed);
    !b.iter().any(|&v| side[v])
}

/// Drops vertices of a separator in ascending order while it still
/// separates, giving an inclusion-minimal subset.
pub fn minimalize_separator(
    g: &Graph,
    s: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<VertexSet> {
    if !is_separator(g, s, a, b) {
        return Err(Error::domain("set does not separate A from B"));
    }
    let mut current = s.clone();
    for &v in s {
        let candidate = current.without(v);
        if is_separator(g, &candidate, a, b) {
            current = candidate;
        }
    }
    Ok(current)
}

/// A minimum `s-t` separator containing `v`, if one exists.
///
/// `v` lies on a minimum separator iff deleting it lowers the minimum by
/// exactly one; the witness is then the smaller separator plus `v`.
pub fn min_separator_containing(
    g: &Graph,
    s: usize,
    t: usize,
    v: usize,
) -> Result<Option<Separator>> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    g.check_vertex(v, "v")?;
    if v == s || v == t {
        return Err(Error::domain("v must differ from the terminals"));
    }
    if s == t || g.has_edge(s, t) {
        return Err(Error::domain("terminals must be distinct and non-adjacent"));
    }
    let ell = min_st_separator(g, s, t, None)?
        .size()
        .expect("non-adjacent terminals have a finite separator");
    if ell == 0 {
        return Ok(None);
    }
    let without_v = g.isolate(&[v]);
    let smaller = min_st_separator(&without_v, s, t, Some(ell - 1))?;
    match smaller {
        SeparatorResult::Found(sep) if sep.size() == ell - 1 => {
            let witness = sep.witness.with(v);
            let side = reachable(g, &[s], &witness.mask(g.n()));
            Ok(Some(Separator {
                witness,
                source_side: VertexSet::from_mask(&side),
            }))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    fn single(v: usize) -> VertexSet {
        VertexSet::singleton(v)
    }

    #[test]
    fn min_separator_examples() {
        let p3 = fixtures::p3();
        let r = min_st_separator(&p3.graph, 0, 2, None).unwrap();
        let sep = r.found().unwrap();
        assert_eq!(sep.witness, [1].into());
        assert_eq!(sep.source_side, [0].into());

        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            min_st_separator(&edge, 0, 1, None).unwrap(),
            SeparatorResult::Infinite
        );

        let pp = fixtures::pp();
        let r = min_st_separator(&pp.graph, pp.s, pp.t, None).unwrap();
        assert_eq!(r.found().unwrap().witness, pp.set(&["a1", "b1"]));
    }

    #[test]
    fn cap_is_a_distinct_outcome() {
        let pp = fixtures::pp();
        assert_eq!(
            min_st_separator(&pp.graph, pp.s, pp.t, Some(1)).unwrap(),
            SeparatorResult::ExceedsCap(1)
        );
        assert_eq!(
            min_st_separator(&pp.graph, pp.s, pp.t, Some(2))
                .unwrap()
                .size(),
            Some(2)
        );
    }

    #[test]
    fn set_terminals_and_errors() {
        let pp = fixtures::pp();
        let r =
            min_vertex_separator(&pp.graph, &pp.set(&["s", "a1"]), &pp.set(&["t"]), None).unwrap();
        assert_eq!(r.size(), Some(2));
        assert!(min_vertex_separator(&pp.graph, &VertexSet::new(), &single(0), None).is_err());
        // overlapping terminal sets
        assert_eq!(
            min_vertex_separator(&pp.graph, &single(0), &single(0), None).unwrap(),
            SeparatorResult::Infinite
        );
    }

    #[test]
    fn disconnected_terminals_have_empty_separator() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let r = min_st_separator(&g, 0, 2, None).unwrap();
        assert_eq!(r.size(), Some(0));
    }

    #[test]
    fn is_separator_examples() {
        let p3 = fixtures::p3();
        assert!(is_separator(&p3.graph, &single(1), &single(0), &single(2)));
        let c4 = fixtures::c4();
        assert!(!is_separator(&c4.graph, &single(1), &single(0), &single(2)));
        assert!(!is_separator(
            &c4.graph,
            &VertexSet::new(),
            &single(1),
            &single(1)
        ));
        assert!(is_separator(&c4.graph, &single(1), &single(1), &single(1)));
    }

    #[test]
    fn minimalize_examples() {
        let p3 = fixtures::p3();
        assert_eq!(
            minimalize_separator(&p3.graph, &single(1), &single(0), &single(2)).unwrap(),
            single(1)
        );
        let c4 = fixtures::c4();
        assert_eq!(
            minimalize_separator(&c4.graph, &[1, 3].into(), &single(0), &single(2)).unwrap(),
            [1, 3].into()
        );
        let pp = fixtures::pp();
        let s = pp.set(&["a1", "a2", "b1"]);
        assert_eq!(
            minimalize_separator(&pp.graph, &s, &single(pp.s), &single(pp.t)).unwrap(),
            pp.set(&["a2", "b1"])
        );
        assert!(minimalize_separator(&c4.graph, &single(1), &single(0), &single(2)).is_err());
    }

    #[test]
    fn containing_examples() {
        let p3 = fixtures::p3();
        let sep = min_separator_containing(&p3.graph, 0, 2, 1)
            .unwrap()
            .unwrap();
        assert_eq!(sep.witness, single(1));

        let pp = fixtures::pp();
        let a2 = pp.id("a2");
        let sep = min_separator_containing(&pp.graph, pp.s, pp.t, a2)
            .unwrap()
            .unwrap();
        assert_eq!(sep.witness, pp.set(&["a2", "b1"]));

        let d4 = fixtures::d4();
        let sep = min_separator_containing(&d4.graph, 0, 2, 1)
            .unwrap()
            .unwrap();
        assert_eq!(sep.witness, [1, 3].into());

        let edge = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(min_separator_containing(&edge, 0, 2, 1).is_err());
    }

    #[test]
    fn vertex_off_every_minimum_separator() {
        // s - x - t plus a longer path s - y - z - t: min separator {x, y} or {x, z}
        // and a pendant w on y is on no minimum separator.
        let g = Graph::from_edges(6, [(0, 1), (1, 5), (0, 2), (2, 3), (3, 5), (2, 4)]).unwrap();
        assert!(min_separator_containing(&g, 0, 5, 4).unwrap().is_none());
        assert!(min_separator_containing(&g, 0, 5, 3).unwrap().is_some());
    }
}
