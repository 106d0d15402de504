//! Exact treewidth by dynamic programming over vertex subsets.
//!
//! `TW(S)` is the best width of eliminating the set `S` first; eliminating
//! `v` last within `S` costs `|Q(S \ v, v)|`, the number of vertices outside
//! `S` reachable from `v` through `S \ v`. Exponential in `n`; meant for
//! graphs with at most about twenty vertices.

use std::collections::VecDeque;

use crate::graph::Graph;

const MAX_EXACT: usize = 24;

fn q_size(g: &Graph, set: u32, v: usize) -> usize {
    let n = g.n();
    let mut seen: u32 = 1 << v;
    let mut queue = VecDeque::from([v]);
    let mut count = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let bit = 1u32 << w;
            if seen & bit != 0 {
                continue;
            }
            seen |= bit;
            if set & bit != 0 {
                queue.push_back(w);
            } else {
                count += 1;
            }
        }
    }
    debug_assert!(count < n);
    count
}

fn table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(
        n <= MAX_EXACT,
        "exact treewidth limited to {MAX_EXACT} vertices"
    );
    let full = 1usize << n;
    let mut tw = vec![u8::MAX; full];
    tw[0] = 0;
    for set in 1..full {
        let mut best = u8::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = set & !(1 << v);
            let cost = tw[prev].max(q_size(g, prev as u32, v) as u8);
            best = best.min(cost);
        }
        tw[set] = best;
    }
    tw
}

/// Treewidth of `g` (0 for graphs with no edges).
pub fn exact_treewidth(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    table(g)[(1usize << g.n()) - 1] as usize
}

/// An elimination order achieving the exact treewidth.
pub fn optimal_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let tw = table(g);
    let mut order = Vec::with_capacity(n);
    let mut set = (1usize << n) - 1;
    while set != 0 {
        let target = tw[set];
        let v = (0..n)
            .filter(|&v| set & (1 << v) != 0)
            .find(|&v| {
                let prev = set & !(1 << v);
                tw[prev].max(q_size(g, prev as u32, v) as u8) == target
            })
            .expect("some vertex realizes the optimum");
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    order
}
