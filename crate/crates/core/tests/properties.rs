use twred::graph::shortest_odd_cycle;
use twred::oracle::{brute_min_separator_size, random_graph, random_st_instance, RandomModel};
use twred::reduction::reduce_instance;
use twred::separation::min_st_separator;
use twred::solver::{
    dp_constrained_cut, g_mincut_with_stats, CutConstraints, DpOptions, HereditaryClass,
};
use twred::treedecomp::{decompose, make_nice};
use twred::{Graph, VertexSet};

fn model(n: usize, p: f64, seed: u64) -> RandomModel {
    RandomModel { n, p, seed }
}

/// Length of a shortest odd cycle by trying every simple cycle.
fn brute_odd_girth(g: &Graph) -> Option<usize> {
    fn walk(
        g: &Graph,
        start: usize,
        v: usize,
        len: usize,
        seen: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        for &u in g.neighbors(v) {
            if u == start && len >= 3 && len % 2 == 1 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            }
            // only cycles whose smallest vertex is `start`
            if u > start && !seen[u] {
                seen[u] = true;
                walk(g, start, u, len + 1, seen, best);
                seen[u] = false;
            }
        }
    }
    let mut best = None;
    for start in g.vertices() {
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        walk(g, start, start, 1, &mut seen, &mut best);
    }
    best
}

#[test]
fn flow_value_matches_brute_force() {
    for seed in 0..150 {
        let n = 4 + seed as usize % 7;
        let (g, s, t) = random_st_instance(&model(n, 0.35, 300 + seed));
        let fast = min_st_separator(&g, s, t, None).unwrap().size();
        assert_eq!(
            fast,
            brute_min_separator_size(&g, s, t),
            "seed {}",
            300 + seed
        );
    }
}

#[test]
fn shortest_odd_cycle_matches_enumeration() {
    for seed in 0..150 {
        let n = 3 + seed as usize % 7;
        let g = random_graph(&model(n, 0.3, 500 + seed));
        let cycle = shortest_odd_cycle(&g);
        assert_eq!(
            cycle.as_ref().map(|c| c.len()),
            brute_odd_girth(&g),
            "seed {}",
            500 + seed
        );
        if let Some(c) = cycle {
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }
}

#[test]
fn heredity_pruning_never_changes_decisions() {
    let classes = [
        HereditaryClass::Edgeless,
        HereditaryClass::Forest,
        HereditaryClass::MaxDegree(1),
        HereditaryClass::Bipartite,
    ];
    let off = DpOptions {
        prune_heredity: false,
    };
    for seed in 0..120u64 {
        let n = 5 + seed as usize % 6;
        let k = 1 + seed as usize % 3;
        let cls = &classes[seed as usize % classes.len()];
        let (g, s, t) = random_st_instance(&model(n, 0.4, 700 + seed));
        let pruned = g_mincut_with_stats(&g, s, t, k, cls, DpOptions::default()).unwrap();
        let unpruned = g_mincut_with_stats(&g, s, t, k, cls, off).unwrap();
        assert_eq!(
            pruned.witness.is_some(),
            unpruned.witness.is_some(),
            "seed {} k={k} {cls:?}",
            700 + seed
        );
    }
}

#[test]
fn witnesses_avoid_gadget_vertices() {
    for seed in 0..80u64 {
        let n = 6 + seed as usize % 5;
        let k = 2 + seed as usize % 2;
        let (g, s, t) = random_st_instance(&model(n, 0.45, 900 + seed));
        let red = reduce_instance(&g, &VertexSet::from([s, t]), k).unwrap();
        let td = decompose(&red.gstar);
        let nice = make_nice(&red.gstar, &td, red.reduced_id(s)).unwrap();
        let cons = CutConstraints::cut(red.reduced_id(s).unwrap(), red.reduced_id(t).unwrap());
        let out = dp_constrained_cut(
            &red.gstar,
            &nice,
            &cons,
            k,
            &HereditaryClass::Any,
            &red.undeletable,
            DpOptions::default(),
        )
        .unwrap();
        if let Some(w) = out.witness {
            assert!(
                w.deletion_set.is_disjoint(&red.undeletable),
                "seed {}",
                900 + seed
            );
            assert!(w.deletion_set.iter().all(|&v| red.original_id(v).is_some()));
        }
    }
}
