use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// Proper 2-coloring `(black, white)` if `g` is bipartite. In every
/// component the minimum vertex is black.
pub fn two_coloring(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let black = g.vertices().filter(|&v| color[v] == Some(false)).collect();
    let white = g.vertices().filter(|&v| color[v] == Some(true)).collect();
    Some((black, white))
}

/// A minimum-length odd cycle as a vertex sequence, or `None` when `g` is
/// bipartite.
///
/// From every vertex `v` (ascending) a breadth-first search on the bipartite
/// double cover finds the shortest closed odd walk through `v`; the overall
/// shortest such walk is a simple cycle. Ties go to the smallest start
/// vertex.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    // (vertex, parity) -> index 2v + parity
    let mut dist = vec![usize::MAX; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        dist.fill(usize::MAX);
        queue.clear();
        dist[2 * start] = 0;
        queue.push_back(2 * start);
        let target = 2 * start + 1;
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        while let Some(node) = queue.pop_front() {
            if node == target || dist[node] + 1 >= limit {
                break;
            }
            let (v, p) = (node / 2, node % 2);
            for &w in g.neighbors(v) {
                let next = 2 * w + (1 - p);
                if dist[next] == usize::MAX {
                    dist[next] = dist[node] + 1;
                    parent[next] = node;
                    queue.push_back(next);
                }
            }
        }
        if dist[target] < limit {
            let mut walk = Vec::with_capacity(dist[target]);
            let mut node = target;
            while node != 2 * start {
                walk.push(node / 2);
                node = parent[node];
            }
            walk.reverse();
            best = Some(walk);
        }
    }
    if let Some(cycle) = &best {
        debug_assert!(is_short_cycle_shaped(g, cycle));
    }
    best
}

/// The structure a shortest odd cycle must have: simple, and unless it is a
/// triangle, chordless with every outside vertex seeing at most two of its
/// vertices.
fn is_short_cycle_shaped(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let mut on = vec![false; g.n()];
    for &v in cycle {
        if on[v] {
            return false;
        }
        on[v] = true;
    }
    if len.is_multiple_of(2) || (0..len).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % len])) {
        return false;
    }
    if len == 3 {
        return true;
    }
    let chordless = cycle
        .iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&w| on[w]).count() == 2);
    let outside_ok = g
        .vertices()
        .filter(|&v| !on[v])
        .all(|v| g.neighbors(v).iter().filter(|&&w| on[w]).count() <= 2);
    chordless && outside_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn coloring_examples() {
        let (b, w) = two_coloring(&fixtures::p3().graph).unwrap();
        assert_eq!((b, w), ([0, 2].into(), [1].into()));
        assert!(two_coloring(&cycle(3)).is_none());
        let (b, w) = two_coloring(&fixtures::c4().graph).unwrap();
        assert_eq!((b, w), ([0, 2].into(), [1, 3].into()));
    }

    #[test]
    fn coloring_per_component_starts_black() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let (b, w) = two_coloring(&g).unwrap();
        assert_eq!((b, w), ([0, 2].into(), [1, 3].into()));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(shortest_odd_cycle(&cycle(3)).unwrap().len(), 3);
        assert_eq!(shortest_odd_cycle(&cycle(5)).unwrap().len(), 5);
        let chorded =
            Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)).chain([(0, 2)])).unwrap();
        let c = shortest_odd_cycle(&chorded).unwrap();
        assert_eq!(c.len(), 3);
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2]);
        assert!(shortest_odd_cycle(&fixtures::c4().graph).is_none());
        assert!(shortest_odd_cycle(&fixtures::q3().graph).is_none());
    }

    #[test]
    fn odd_cycle_prefers_shorter_later_cycle() {
        // A 7-cycle on 0..7 and a disjoint triangle on 7..10.
        let edges = (0..7)
            .map(|i| (i, (i + 1) % 7))
            .chain([(7, 8), (8, 9), (7, 9)]);
        let g = Graph::from_edges(10, edges).unwrap();
        let c = shortest_odd_cycle(&g).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|&v| v >= 7));
    }
}
