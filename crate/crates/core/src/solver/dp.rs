//! Dynamic program over a nice tree decomposition for deletion sets that
//! satisfy cut/uncut constraints and induce a graph of a hereditary class.
//!
//! A state at a node records, for every bag vertex, whether it is deleted
//! or which connectivity block of the kept part it belongs to; the set of
//! terminals already reached by every block; and the graph induced by all
//! deleted vertices seen so far. Deleted bag vertices are labeled in the
//! accumulated graph, forgotten ones are anonymous and kept in a canonical
//! order. A block is dropped as soon as its last bag vertex is forgotten,
//! after checking that it holds both or neither endpoint of every uncut
//! pair.

use std::collections::HashMap;

use serde::Serialize;

use super::class::HereditaryClass;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::treedecomp::{validate_decomposition, NiceDecomposition, NiceKind};

/// Pairs that must end up in different components (`cut_pairs`) or in the
/// same component (`uncut_pairs`) once the deletion set is removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CutConstraints {
    pub cut_pairs: Vec<(usize, usize)>,
    pub uncut_pairs: Vec<(usize, usize)>,
}

impl CutConstraints {
    pub fn cut(s: usize, t: usize) -> Self {
        CutConstraints {
            cut_pairs: vec![(s, t)],
            uncut_pairs: Vec::new(),
        }
    }

    /// Every pair endpoint.
    pub fn terminals(&self) -> VertexSet {
        self.cut_pairs
            .iter()
            .chain(&self.uncut_pairs)
            .flat_map(|&(a, b)| [a, b])
            .collect()
    }

    /// Whether removing `deleted` from `g` satisfies every pair.
    pub fn satisfied_by(&self, g: &Graph, deleted: &VertexSet) -> bool {
        let labels = crate::graph::component_labels(g, &deleted.mask(g.n()));
        let same = |a: usize, b: usize| labels[a].is_some() && labels[a] == labels[b];
        self.cut_pairs.iter().all(|&(a, b)| !same(a, b))
            && self.uncut_pairs.iter().all(|&(a, b)| same(a, b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DpOptions {
    /// Drop states whose accumulated graph leaves the class. When off, the
    /// class is checked only at the root.
    pub prune_heredity: bool,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            prune_heredity: true,
        }
    }
}

/// Counters reported by the solvers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Distinct states over all nodes.
    pub dp_states: usize,
    /// Largest single table.
    pub peak_table: usize,
    /// Width of the decomposition the DP ran on.
    pub width: Option<usize>,
    pub cover_size: Option<usize>,
    pub reduced_n: Option<usize>,
    pub width_bound: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct DpWitness {
    pub deletion_set: VertexSet,
    /// The graph induced by `deletion_set`.
    pub induced_graph: Graph,
    pub stats: SolveStats,
}

#[derive(Clone, Debug)]
pub struct DpOutcome {
    pub witness: Option<DpWitness>,
    pub stats: SolveStats,
}

const DEL: u8 = u8::MAX;
const MAX_TRACKED: usize = 32;
const MAX_CANON_PERMS: usize = 720;

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    /// Per bag position: `DEL` or a block id, ids numbered by first use.
    slots: Vec<u8>,
    /// Terminal mask per block.
    terms: Vec<u64>,
    /// Accumulated deleted graph: labeled vertices first, in bag order of
    /// the deleted slots, then the anonymous ones.
    rows: Vec<u32>,
}

impl State {
    fn labeled(&self) -> usize {
        self.slots.iter().filter(|&&s| s == DEL).count()
    }

    fn labeled_before(&self, p: usize) -> usize {
        self.slots[..p].iter().filter(|&&s| s == DEL).count()
    }
}

#[derive(Clone, Copy)]
enum Back {
    Leaf,
    Intro { child: u32, deleted: bool },
    Forget { child: u32 },
    Join { left: u32, right: u32 },
}

#[derive(Default)]
struct Table {
    states: Vec<State>,
    back: Vec<Back>,
    index: HashMap<State, u32>,
}

impl Table {
    fn insert(&mut self, state: State, back: Back) {
        if !self.index.contains_key(&state) {
            self.index.insert(state.clone(), self.states.len() as u32);
            self.states.push(state);
            self.back.push(back);
        }
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    k: usize,
    cls: &'a HereditaryClass,
    forbidden: Vec<bool>,
    term_bit: Vec<u64>,
    cut_masks: Vec<u64>,
    uncut_masks: Vec<u64>,
    track: bool,
    prune: bool,
    memo: HashMap<Vec<u32>, bool>,
}

impl Ctx<'_> {
    fn member(&mut self, rows: &[u32]) -> bool {
        if !self.track {
            return true;
        }
        if let Some(&ans) = self.memo.get(rows) {
            return ans;
        }
        let d = rows.len();
        let edges = (0..d).flat_map(|i| {
            (i + 1..d)
                .filter(move |&j| rows[i] >> j & 1 == 1)
                .map(move |j| (i, j))
        });
        let h = Graph::from_edges_unchecked(d, edges.collect::<Vec<_>>());
        let ans = self.cls.contains(&h);
        self.memo.insert(rows.to_vec(), ans);
        ans
    }

    fn cut_violated(&self, terms: &[u64]) -> bool {
        terms
            .iter()
            .any(|&m| self.cut_masks.iter().any(|&p| m & p == p))
    }

    fn uncut_violated(&self, closed: u64) -> bool {
        self.uncut_masks
            .iter()
            .any(|&p| closed & p != 0 && closed & p != p)
    }
}

/// Renumbers block ids by first appearance and drops unused blocks.
fn normalize(slots: &mut [u8], terms: &[u64]) -> Vec<u64> {
    let mut map = vec![u8::MAX; terms.len()];
    let mut out = Vec::new();
    for s in slots.iter_mut() {
        if *s == DEL {
            continue;
        }
        let b = *s as usize;
        if map[b] == u8::MAX {
            map[b] = out.len() as u8;
            out.push(terms[b]);
        }
        *s = map[b];
    }
    out
}

/// Relabels the accumulated graph: new vertex `i` is old vertex `order[i]`.
fn permute(rows: &[u32], order: &[usize]) -> Vec<u32> {
    let mut inv = vec![0; rows.len()];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    order
        .iter()
        .map(|&old| {
            let mut r = 0u32;
            let mut bits = rows[old];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                r |= 1 << inv[j];
            }
            r
        })
        .collect()
}

/// Canonical order of the anonymous vertices (those from index `labeled`
/// on). Vertices are sorted by an invariant; ties are resolved by trying
/// every order within tied groups when that is cheap. Equal outputs always
/// mean isomorphic graphs with the same labeled part.
fn canonicalize(rows: Vec<u32>, labeled: usize) -> Vec<u32> {
    let d = rows.len();
    if d - labeled <= 1 {
        return rows;
    }
    let lab_mask = if labeled == 0 {
        0
    } else {
        u32::MAX >> (32 - labeled)
    };
    let key = |v: usize| (rows[v] & lab_mask, (rows[v] & !lab_mask).count_ones());
    let mut anon: Vec<usize> = (labeled..d).collect();
    anon.sort_by_key(|&v| key(v));
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=anon.len() {
        if i == anon.len() || key(anon[i]) != key(anon[start]) {
            groups.push((start, i));
            start = i;
        }
    }
    let mut perms = 1usize;
    for &(a, b) in &groups {
        for f in 1..=(b - a) {
            perms = perms.saturating_mul(f);
        }
    }
    let base: Vec<usize> = (0..labeled).chain(anon.iter().copied()).collect();
    if perms == 1 || perms > MAX_CANON_PERMS {
        return permute(&rows, &base);
    }
    let mut best: Option<Vec<u32>> = None;
    let mut order = base.clone();
    search_orders(&rows, &groups, labeled, 0, &mut order, &base, &mut best);
    best.expect("at least one order")
}

fn search_orders(
    rows: &[u32],
    groups: &[(usize, usize)],
    labeled: usize,
    gi: usize,
    order: &mut Vec<usize>,
    base: &[usize],
    best: &mut Option<Vec<u32>>,
) {
    if gi == groups.len() {
        let cand = permute(rows, order);
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    }
    let (a, b) = groups[gi];
    let members: Vec<usize> = base[labeled + a..labeled + b].to_vec();
    for p in itertools::Itertools::permutations(members.iter().copied(), members.len()) {
        order[labeled + a..labeled + b].copy_from_slice(&p);
        search_orders(rows, groups, labeled, gi + 1, order, base, best);
    }
}

/// Inserts an isolated vertex at index `at`.
fn insert_vertex(rows: &[u32], at: usize) -> Vec<u32> {
    let low = (1u32 << at) - 1;
    let mut out: Vec<u32> = rows
        .iter()
        .map(|&r| (r & low) | ((r & !low) << 1))
        .collect();
    out.insert(at, 0);
    out
}

/// Finds a deletion set `S` with `|S| <= k` avoiding every constraint
/// endpoint and `undeletable`, such that `cls` contains `G[S]`, every cut
/// pair is separated and every uncut pair stays connected in `G - S`.
pub fn dp_constrained_cut(
    g: &Graph,
    nice: &NiceDecomposition,
    cons: &CutConstraints,
    k: usize,
    cls: &HereditaryClass,
    undeletable: &VertexSet,
    options: DpOptions,
) -> Result<DpOutcome> {
    let n = g.n();
    if !nice.is_well_formed() || !validate_decomposition(g, &nice.to_tree_decomposition()) {
        return Err(Error::InvalidDecomposition(
            "not a nice decomposition of the graph".into(),
        ));
    }
    if nice.width() + 1 >= DEL as usize {
        return Err(Error::domain("decomposition too wide for the solver"));
    }
    let terminals = cons.terminals();
    g.check_set(&terminals, "terminals")?;
    g.check_set(undeletable, "undeletable")?;
    if terminals.len() > 64 {
        return Err(Error::domain("at most 64 distinct terminals are supported"));
    }
    let track = !matches!(cls, HereditaryClass::Any);
    if track && k > MAX_TRACKED {
        return Err(Error::domain(format!(
            "budget above {MAX_TRACKED} is not supported with a graph class"
        )));
    }

    let mut term_bit = vec![0u64; n];
    for (i, &v) in terminals.iter().enumerate() {
        term_bit[v] = 1 << i;
    }
    let pair_mask = |&(a, b): &(usize, usize)| term_bit[a] | term_bit[b];
    let mut forbidden = undeletable.mask(n);
    for &v in &terminals {
        forbidden[v] = true;
    }
    let mut ctx = Ctx {
        g,
        k,
        cls,
        forbidden,
        cut_masks: cons.cut_pairs.iter().map(pair_mask).collect(),
        uncut_masks: cons
            .uncut_pairs
            .iter()
            .filter(|(a, b)| a != b)
            .map(pair_mask)
            .collect(),
        term_bit,
        track,
        prune: options.prune_heredity,
        memo: HashMap::new(),
    };
    if cons.cut_pairs.iter().any(|&(a, b)| a == b) {
        return Ok(DpOutcome {
            witness: None,
            stats: SolveStats::default(),
        });
    }

    let mut stats = SolveStats {
        width: Some(nice.width()),
        ..SolveStats::default()
    };
    let mut states: Vec<Option<Vec<State>>> = vec![None; nice.nodes.len()];
    let mut backs: Vec<Vec<Back>> = Vec::with_capacity(nice.nodes.len());
    for (x, node) in nice.nodes.iter().enumerate() {
        let mut table = Table::default();
        match node.kind {
            NiceKind::Leaf => table.insert(
                State {
                    slots: vec![],
                    terms: vec![],
                    rows: vec![],
                },
                Back::Leaf,
            ),
            NiceKind::Introduce(v) => {
                let child = states[node.children[0]].take().expect("child processed");
                let p = node.bag.as_slice().binary_search(&v).unwrap();
                for (ci, st) in child.iter().enumerate() {
                    introduce(&mut ctx, &node.bag, p, v, st, ci as u32, &mut table);
                }
            }
            NiceKind::Forget(v) => {
                let c = node.children[0];
                let child = states[c].take().expect("child processed");
                let p = nice.nodes[c].bag.as_slice().binary_search(&v).unwrap();
                for (ci, st) in child.iter().enumerate() {
                    if let Some(next) = forget(&ctx, p, st) {
                        table.insert(next, Back::Forget { child: ci as u32 });
                    }
                }
            }
            NiceKind::Join => {
                let left = states[node.children[0]].take().expect("child processed");
                let right = states[node.children[1]].take().expect("child processed");
                join(&mut ctx, &left, &right, &mut table);
            }
        }
        stats.dp_states += table.states.len();
        stats.peak_table = stats.peak_table.max(table.states.len());
        log::trace!("node {x}: {} states", table.states.len());
        states[x] = Some(table.states);
        backs.push(table.back);
    }

    let root = nice.root();
    let root_states = states[root].take().expect("root processed");
    let accepted = root_states.iter().position(|st| {
        let closed_ok = st.terms.iter().all(|&m| !ctx.uncut_violated(m));
        closed_ok && ctx.member(&st.rows)
    });
    let witness = match accepted {
        None => None,
        Some(idx) => {
            let deleted = reconstruct(nice, &backs, idx as u32);
            let (induced_graph, _) = induced_subgraph(g, &deleted)?;
            Some(DpWitness {
                deletion_set: deleted,
                induced_graph,
                stats: stats.clone(),
            })
        }
    };
    Ok(DpOutcome { witness, stats })
}

fn introduce(
    ctx: &mut Ctx<'_>,
    bag: &VertexSet,
    p: usize,
    v: usize,
    st: &State,
    ci: u32,
    table: &mut Table,
) {
    // keep v
    let mut slots = st.slots.clone();
    let nb = st.terms.len();
    slots.insert(p, nb as u8);
    let mut terms = st.terms.clone();
    terms.push(ctx.term_bit[v]);
    for (q, &u) in bag.iter().enumerate() {
        let b = slots[q];
        if q == p || b == DEL || b as usize == nb || !ctx.g.has_edge(u, v) {
            continue;
        }
        terms[nb] |= terms[b as usize];
        for s in slots.iter_mut() {
            if *s == b {
                *s = nb as u8;
            }
        }
    }
    let terms = normalize(&mut slots, &terms);
    if !ctx.cut_violated(&terms) {
        table.insert(
            State {
                slots,
                terms,
                rows: st.rows.clone(),
            },
            Back::Intro {
                child: ci,
                deleted: false,
            },
        );
    }

    // delete v
    if ctx.forbidden[v] || st.rows.len() + 1 > ctx.k {
        return;
    }
    let mut slots = st.slots.clone();
    slots.insert(p, DEL);
    let li = st.labeled_before(p);
    let mut rows = if ctx.track {
        insert_vertex(&st.rows, li)
    } else {
        vec![0; st.rows.len() + 1]
    };
    if ctx.track {
        let mut lab = 0;
        for (q, &u) in bag.iter().enumerate() {
            if slots[q] != DEL {
                continue;
            }
            if q != p && ctx.g.has_edge(u, v) {
                rows[li] |= 1 << lab;
                rows[lab] |= 1 << li;
            }
            lab += 1;
        }
    }
    if ctx.prune && !ctx.member(&rows) {
        return;
    }
    table.insert(
        State {
            slots,
            terms: st.terms.clone(),
            rows,
        },
        Back::Intro {
            child: ci,
            deleted: true,
        },
    );
}

fn forget(ctx: &Ctx<'_>, p: usize, st: &State) -> Option<State> {
    let mut slots = st.slots.clone();
    let gone = slots.remove(p);
    if gone == DEL {
        let labeled = st.labeled();
        let li = st.labeled_before(p);
        let rows = if ctx.track {
            let order: Vec<usize> = (0..labeled)
                .filter(|&i| i != li)
                .chain([li])
                .chain(labeled..st.rows.len())
                .collect();
            canonicalize(permute(&st.rows, &order), labeled - 1)
        } else {
            st.rows.clone()
        };
        return Some(State {
            slots,
            terms: st.terms.clone(),
            rows,
        });
    }
    if !slots.contains(&gone) && ctx.uncut_violated(st.terms[gone as usize]) {
        return None;
    }
    let terms = normalize(&mut slots, &st.terms);
    Some(State {
        slots,
        terms,
        rows: st.rows.clone(),
    })
}

fn join(ctx: &mut Ctx<'_>, left: &[State], right: &[State], table: &mut Table) {
    let pattern = |st: &State| -> Vec<bool> { st.slots.iter().map(|&s| s == DEL).collect() };
    let mut by_pattern: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
    for (ri, st) in right.iter().enumerate() {
        by_pattern.entry(pattern(st)).or_default().push(ri);
    }
    for (li, l) in left.iter().enumerate() {
        let Some(partners) = by_pattern.get(&pattern(l)) else {
            continue;
        };
        let labeled = l.labeled();
        for &ri in partners {
            let r = &right[ri];
            let d = l.rows.len() + r.rows.len() - labeled;
            if d > ctx.k {
                continue;
            }
            // union of blocks: left ids first, right ids shifted
            let nl = l.terms.len();
            let mut parent: Vec<usize> = (0..nl + r.terms.len()).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for (&a, &b) in l.slots.iter().zip(&r.slots) {
                if a != DEL {
                    let (ra, rb) = (
                        find(&mut parent, a as usize),
                        find(&mut parent, nl + b as usize),
                    );
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
            let mut terms = vec![0u64; parent.len()];
            for (i, &m) in l.terms.iter().chain(&r.terms).enumerate() {
                let root = find(&mut parent, i);
                terms[root] |= m;
            }
            let mut slots: Vec<u8> = l
                .slots
                .iter()
                .map(|&a| {
                    if a == DEL {
                        DEL
                    } else {
                        find(&mut parent, a as usize) as u8
                    }
                })
                .collect();
            let terms = normalize(&mut slots, &terms);
            if ctx.cut_violated(&terms) {
                continue;
            }
            let rows = if ctx.track {
                let al = l.rows.len() - labeled;
                let mut rows = vec![0u32; d];
                let map_r = |j: usize| if j < labeled { j } else { j + al };
                for i in 0..l.rows.len() {
                    rows[i] |= l.rows[i];
                }
                for i in 0..r.rows.len() {
                    let mut bits = r.rows[i];
                    while bits != 0 {
                        let j = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        rows[map_r(i)] |= 1 << map_r(j);
                    }
                }
                canonicalize(rows, labeled)
            } else {
                vec![0; d]
            };
            if ctx.prune && !ctx.member(&rows) {
                continue;
            }
            table.insert(
                State { slots, terms, rows },
                Back::Join {
                    left: li as u32,
                    right: ri as u32,
                },
            );
        }
    }
}

fn reconstruct(nice: &NiceDecomposition, backs: &[Vec<Back>], root_state: u32) -> VertexSet {
    let mut deleted = Vec::new();
    let mut stack = vec![(nice.root(), root_state)];
    while let Some((x, idx)) = stack.pop() {
        let node = &nice.nodes[x];
        match backs[x][idx as usize] {
            Back::Leaf => {}
            Back::Intro {
                child,
                deleted: del,
            } => {
                if del {
                    if let NiceKind::Introduce(v) = node.kind {
                        deleted.push(v);
                    }
                }
                stack.push((node.children[0], child));
            }
            Back::Forget { child } => stack.push((node.children[0], child)),
            Back::Join { left, right } => {
                stack.push((node.children[0], left));
                stack.push((node.children[1], right));
            }
        }
    }
    deleted.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;
    use crate::treedecomp::{decompose, make_nice};

    fn run(g: &Graph, cons: &CutConstraints, k: usize, cls: &HereditaryClass) -> Option<VertexSet> {
        let nice = make_nice(g, &decompose(g), Some(0)).unwrap();
        dp_constrained_cut(
            g,
            &nice,
            cons,
            k,
            cls,
            &VertexSet::new(),
            DpOptions::default(),
        )
        .unwrap()
        .witness
        .map(|w| w.deletion_set)
    }

    #[test]
    fn fixture_examples() {
        let p3 = fixtures::p3();
        let cut = CutConstraints::cut(p3.s, p3.t);
        assert_eq!(
            run(&p3.graph, &cut, 1, &HereditaryClass::Edgeless),
            Some(p3.set(&["a"]))
        );

        let c4 = fixtures::c4();
        let cut = CutConstraints::cut(c4.s, c4.t);
        assert_eq!(
            run(&c4.graph, &cut, 2, &HereditaryClass::Edgeless),
            Some(c4.set(&["a", "b"]))
        );
        assert_eq!(run(&c4.graph, &cut, 1, &HereditaryClass::Edgeless), None);

        let d4 = fixtures::d4();
        let cut = CutConstraints::cut(d4.s, d4.t);
        assert_eq!(run(&d4.graph, &cut, 2, &HereditaryClass::Edgeless), None);
        assert_eq!(
            run(&d4.graph, &cut, 2, &HereditaryClass::Any),
            Some(d4.set(&["a", "b"]))
        );
    }

    #[test]
    fn uncut_pairs() {
        // star centre 0, leaves u=1, v=2, w=3, plus edge u-w
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3)]).unwrap();
        let cons = CutConstraints {
            cut_pairs: vec![(1, 2)],
            uncut_pairs: vec![(1, 3)],
        };
        assert_eq!(
            run(&g, &cons, 1, &HereditaryClass::Edgeless),
            Some([0].into())
        );
        // uncut only
        let cons = CutConstraints {
            cut_pairs: vec![],
            uncut_pairs: vec![(1, 2)],
        };
        assert_eq!(
            run(&g, &cons, 0, &HereditaryClass::Any),
            Some(VertexSet::new())
        );
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(run(&split, &cons, 2, &HereditaryClass::Any), None);
    }

    #[test]
    fn canonical_form_identifies_isomorphic_anonymous_parts() {
        // one labeled vertex 0; anonymous 1,2 where only 2 touches 0
        let a = canonicalize(vec![0b100, 0b000, 0b001], 1);
        // same with anonymous vertices swapped
        let b = canonicalize(vec![0b010, 0b001, 0b000], 1);
        assert_eq!(a, b);
        // a path on three anonymous vertices in two labelings
        let p = canonicalize(vec![0b010, 0b101, 0b010], 0);
        let q = canonicalize(vec![0b100, 0b100, 0b011], 0);
        assert_eq!(p, q);
    }

    #[test]
    fn insert_vertex_shifts_bits() {
        // edge 0-1, insert at 1 -> edge 0-2
        assert_eq!(insert_vertex(&[0b10, 0b01], 1), vec![0b100, 0, 0b001]);
    }
}
