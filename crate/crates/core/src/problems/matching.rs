//! Matchings on small graphs.

use std::collections::HashMap;

use crate::graph::{two_coloring, Graph, VertexSet};

/// A maximum matching by exhaustive branching on the lowest unmatched
/// vertex, memoized on the set of remaining vertices. Exponential; meant
/// for graphs with a few dozen vertices at most.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let words = g.n().div_ceil(64).max(1);
    let mut alive = vec![0u64; words];
    for v in g.vertices() {
        alive[v / 64] |= 1 << (v % 64);
    }
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    build(g, alive, &mut memo, &mut out);
    out
}

pub fn max_matching_size(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let words = g.n().div_ceil(64).max(1);
    let mut alive = vec![0u64; words];
    for v in g.vertices() {
        alive[v / 64] |= 1 << (v % 64);
    }
    size(g, &alive, &mut HashMap::new())
}

fn is_alive(alive: &[u64], v: usize) -> bool {
    alive[v / 64] >> (v % 64) & 1 == 1
}

fn lowest(alive: &[u64]) -> Option<usize> {
    alive
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn size(g: &Graph, alive: &[u64], memo: &mut HashMap<Vec<u64>, usize>) -> usize {
    let Some(v) = lowest(alive) else {
        return 0;
    };
    if let Some(&s) = memo.get(alive) {
        return s;
    }
    let mut rest = alive.to_vec();
    rest[v / 64] &= !(1 << (v % 64));
    let mut best = size(g, &rest, memo);
    for &u in g.neighbors(v) {
        if is_alive(&rest, u) {
            let mut next = rest.clone();
            next[u / 64] &= !(1 << (u % 64));
            best = best.max(1 + size(g, &next, memo));
        }
    }
    memo.insert(alive.to_vec(), best);
    best
}

fn build(
    g: &Graph,
    alive: Vec<u64>,
    memo: &mut HashMap<Vec<u64>, usize>,
    out: &mut Vec<(usize, usize)>,
) {
    let Some(v) = lowest(&alive) else {
        return;
    };
    let target = size(g, &alive, memo);
    let mut rest = alive.clone();
    rest[v / 64] &= !(1 << (v % 64));
    for &u in g.neighbors(v) {
        if is_alive(&rest, u) {
            let mut next = rest.clone();
            next[u / 64] &= !(1 << (u % 64));
            if 1 + size(g, &next, memo) == target {
                out.push((v, u));
                return build(g, next, memo, out);
            }
        }
    }
    build(g, rest, memo, out);
}

/// Maximum matching of a bipartite graph by augmenting paths. `left` marks
/// one side; returns the mate of every vertex.
pub fn bipartite_matching(g: &Graph, left: &[bool], within: &[bool]) -> Vec<Option<usize>> {
    let mut mate = vec![None; g.n()];
    for v in g.vertices() {
        if left[v] && within[v] {
            let mut seen = vec![false; g.n()];
            augment(g, v, within, &mut mate, &mut seen);
        }
    }
    mate
}

fn augment(
    g: &Graph,
    v: usize,
    within: &[bool],
    mate: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &u in g.neighbors(v) {
        if !within[u] || seen[u] {
            continue;
        }
        seen[u] = true;
        let free = match mate[u] {
            None => true,
            Some(w) => augment(g, w, within, mate, seen),
        };
        if free {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    false
}

/// Maximum independent set of `G[D]` for bipartite `G`, built from a
/// maximum matching through König's theorem. `None` if `G` is not
/// bipartite.
pub fn bipartite_max_independent_set(g: &Graph, d: &VertexSet) -> Option<VertexSet> {
    let (black, _) = two_coloring(g)?;
    let left = black.mask(g.n());
    let within = d.mask(g.n());
    let mate = bipartite_matching(g, &left, &within);
    // alternating reachability from unmatched left vertices
    let mut z = vec![false; g.n()];
    let mut stack: Vec<usize> = d
        .iter()
        .copied()
        .filter(|&v| left[v] && mate[v].is_none())
        .collect();
    for &v in &stack {
        z[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !within[u] || z[u] || mate[v] == Some(u) {
                continue;
            }
            z[u] = true;
            if let Some(w) = mate[u] {
                if !z[w] {
                    z[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Some(
        d.iter()
            .copied()
            .filter(|&v| if left[v] { z[v] } else { !z[v] })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{random_graph, RandomModel};

    fn brute_independence(g: &Graph, d: &[usize]) -> usize {
        (0u32..1 << d.len())
            .filter(|&mask| {
                let set: Vec<usize> = (0..d.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| d[i])
                    .collect();
                set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matching_sizes() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(max_matching_size(&p4), 2);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_matching_size(&star), 1);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(max_matching_size(&c5), 2);
        let m = maximum_matching(&p4);
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|&(a, b)| p4.has_edge(a, b)));
    }

    #[test]
    fn konig_matches_brute_force() {
        let mut tested = 0;
        for seed in 0..200 {
            let g = random_graph(&RandomModel {
                n: 2 + seed as usize % 9,
                p: 0.3,
                seed,
            });
            if two_coloring(&g).is_none() {
                continue;
            }
            tested += 1;
            let d: VertexSet = g
                .vertices()
                .filter(|v| (v + seed as usize) % 3 != 0)
                .collect();
            let set = bipartite_max_independent_set(&g, &d).unwrap();
            assert!(set.is_subset(&d));
            assert!(set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b))));
            assert_eq!(set.len(), brute_independence(&g, &d), "seed {seed}");
        }
        assert!(tested > 20);
    }

    #[test]
    fn random_matchings_are_valid() {
        for seed in 0..50 {
            let g = random_graph(&RandomModel {
                n: 1 + seed as usize % 12,
                p: 0.4,
                seed,
            });
            let m = maximum_matching(&g);
            let mut used = vec![false; g.n()];
            for &(a, b) in &m {
                assert!(g.has_edge(a, b) && !used[a] && !used[b]);
                used[a] = true;
                used[b] = true;
            }
            assert_eq!(m.len(), max_matching_size(&g));
        }
    }
}
