//! Brute-force reference answers, random instances and the differential
//! harness comparing them with the fast solvers.
//!
//! Everything here is exhaustive search written against the graph type
//! alone; it does not call the flow, reduction or solver code it checks.

pub mod fixtures;

use std::collections::VecDeque;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{write_graph, Graph, VertexSet};
use crate::solver::HereditaryClass;

/// Erdős–Rényi model: every pair `u < v` is an edge with probability `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RandomModel {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

pub fn random_graph(model: &RandomModel) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    let p = model.p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..model.n {
        for v in u + 1..model.n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_unchecked(model.n, edges)
}

/// Random graph with terminals `s = 0`, `t = n - 1` made non-adjacent.
pub fn random_st_instance(model: &RandomModel) -> (Graph, usize, usize) {
    let g = random_graph(model);
    let t = model.n - 1;
    let edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (0, t)).collect();
    (Graph::from_edges_unchecked(model.n, edges), 0, t)
}

/// Vertices reachable from `from` avoiding `removed`.
fn reach(g: &Graph, from: usize, removed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    if removed[from] {
        return seen;
    }
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !removed[u] && !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    seen
}

fn mask_of(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn separates(g: &Graph, set: &[usize], a: usize, b: usize) -> bool {
    let removed = mask_of(g.n(), set);
    !removed[a] && !removed[b] && !reach(g, a, &removed)[b]
}

fn connected(g: &Graph, set: &[usize], a: usize, b: usize) -> bool {
    let removed = mask_of(g.n(), set);
    !removed[a] && reach(g, a, &removed)[b]
}

/// Subsets of `pool` with at most `k` elements, by size then
/// lexicographically.
fn subsets(pool: Vec<usize>, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=k.min(pool.len())).flat_map(move |size| pool.clone().into_iter().combinations(size))
}

fn induced(g: &Graph, set: &[usize]) -> Graph {
    let edges = set
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            set[i + 1..]
                .iter()
                .enumerate()
                .filter(move |(_, &b)| g.has_edge(a, b))
                .map(move |(j, _)| (i, i + 1 + j))
        })
        .collect::<Vec<_>>();
    Graph::from_edges_unchecked(set.len(), edges)
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .tuple_combinations()
        .all(|(&a, &b)| !g.has_edge(a, b))
}

fn bipartite_without(g: &Graph, set: &[usize]) -> bool {
    let removed = mask_of(g.n(), set);
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in g.vertices() {
        if removed[start] || color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &u in g.neighbors(v) {
                if removed[u] {
                    continue;
                }
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Class membership computed independently for the built-in classes.
pub fn oracle_member(cls: &HereditaryClass, h: &Graph) -> bool {
    match cls {
        HereditaryClass::Any => true,
        HereditaryClass::Edgeless => h.m() == 0,
        HereditaryClass::MaxDegree(d) => h.vertices().all(|v| h.degree(v) <= *d),
        HereditaryClass::Bipartite => bipartite_without(h, &[]),
        HereditaryClass::Forest => {
            let mut parent: Vec<usize> = h.vertices().collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            h.edges().all(|(u, v)| {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
                a != b
            })
        }
        HereditaryClass::MatchDeficiency(k) => {
            // largest set of pairwise disjoint edges, by trying all
            let edges: Vec<(usize, usize)> = h.edges().collect();
            let nu = (0..=edges.len())
                .rev()
                .find(|&size| {
                    edges.iter().combinations(size).any(|es| {
                        let ends: Vec<usize> = es.iter().flat_map(|&&(a, b)| [a, b]).collect();
                        ends.iter().all_unique()
                    })
                })
                .unwrap_or(0);
            h.n() - nu <= *k
        }
        other => other.contains(h),
    }
}

/// All inclusion-minimal `s-t` separators with at most `k` vertices.
pub fn enumerate_minimal_separators(g: &Graph, s: usize, t: usize, k: usize) -> Vec<VertexSet> {
    if s == t || g.has_edge(s, t) {
        return Vec::new();
    }
    let pool: Vec<usize> = g.vertices().filter(|&v| v != s && v != t).collect();
    subsets(pool.clone(), k)
        .filter(|set| {
            separates(g, set, s, t)
                && (0..set.len()).all(|i| {
                    let mut smaller = set.clone();
                    smaller.remove(i);
                    !separates(g, &smaller, s, t)
                })
        })
        .map(VertexSet::from_sorted)
        .collect()
}

/// Minimum `s-t` separator size by exhaustive search, `None` if adjacent.
pub fn brute_min_separator_size(g: &Graph, s: usize, t: usize) -> Option<usize> {
    if g.has_edge(s, t) || s == t {
        return None;
    }
    let pool: Vec<usize> = g.vertices().filter(|&v| v != s && v != t).collect();
    subsets(pool.clone(), pool.len())
        .find(|set| separates(g, set, s, t))
        .map(|set| set.len())
}

/// A problem instance for [`brute_force_solve`].
#[derive(Clone, Debug)]
pub enum Problem {
    GMincut {
        g: Graph,
        s: usize,
        t: usize,
        k: usize,
        cls: HereditaryClass,
    },
    MulticutUncut {
        g: Graph,
        cut: Vec<(usize, usize)>,
        uncut: Vec<(usize, usize)>,
        k: usize,
        cls: HereditaryClass,
    },
    StableCut {
        g: Graph,
        s: usize,
        t: usize,
        k: usize,
    },
    EdgeInducedCut {
        g: Graph,
        s: usize,
        t: usize,
        k: usize,
    },
    /// Minimum odd cycle transversal of size at most `k`.
    Oct {
        g: Graph,
        k: usize,
    },
    StableBipartization {
        g: Graph,
        k: usize,
    },
    ExactStableBipartization {
        g: Graph,
        k: usize,
    },
    SeparatorUnion {
        g: Graph,
        s: usize,
        t: usize,
        k: usize,
    },
}

impl Problem {
    pub fn graph(&self) -> &Graph {
        match self {
            Problem::GMincut { g, .. }
            | Problem::MulticutUncut { g, .. }
            | Problem::StableCut { g, .. }
            | Problem::EdgeInducedCut { g, .. }
            | Problem::Oct { g, .. }
            | Problem::StableBipartization { g, .. }
            | Problem::ExactStableBipartization { g, .. }
            | Problem::SeparatorUnion { g, .. } => g,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Answer {
    /// YES with a vertex witness, or NO.
    Vertices(Option<VertexSet>),
    Edges(Option<Vec<(usize, usize)>>),
    Set(VertexSet),
}

impl Answer {
    pub fn is_yes(&self) -> bool {
        match self {
            Answer::Vertices(w) => w.is_some(),
            Answer::Edges(w) => w.is_some(),
            Answer::Set(_) => true,
        }
    }
}

pub const DEFAULT_CAP: usize = 14;

pub fn brute_force_solve(problem: &Problem) -> Result<Answer> {
    brute_force_solve_capped(problem, DEFAULT_CAP)
}

/// Exhaustive answer; refuses graphs with more than `cap` vertices.
pub fn brute_force_solve_capped(problem: &Problem, cap: usize) -> Result<Answer> {
    let n = problem.graph().n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let all: Vec<usize> = problem.graph().vertices().collect();
    let answer = match problem {
        Problem::GMincut { g, s, t, k, cls } => {
            let pool: Vec<usize> = all.iter().copied().filter(|v| v != s && v != t).collect();
            Answer::Vertices(
                subsets(pool.clone(), *k)
                    .find(|set| separates(g, set, *s, *t) && oracle_member(cls, &induced(g, set)))
                    .map(VertexSet::from_sorted),
            )
        }
        Problem::MulticutUncut {
            g,
            cut,
            uncut,
            k,
            cls,
        } => {
            let ends: Vec<usize> = cut.iter().chain(uncut).flat_map(|&(a, b)| [a, b]).collect();
            let pool: Vec<usize> = all.iter().copied().filter(|v| !ends.contains(v)).collect();
            let ok = |set: &Vec<usize>| {
                cut.iter().all(|&(a, b)| a != b && separates(g, set, a, b))
                    && uncut.iter().all(|&(a, b)| connected(g, set, a, b))
                    && oracle_member(cls, &induced(g, set))
            };
            Answer::Vertices(
                subsets(pool.clone(), *k)
                    .find(ok)
                    .map(VertexSet::from_sorted),
            )
        }
        Problem::StableCut { g, s, t, k } => brute_force_solve_capped(
            &Problem::GMincut {
                g: g.clone(),
                s: *s,
                t: *t,
                k: *k,
                cls: HereditaryClass::Edgeless,
            },
            cap,
        )?,
        Problem::EdgeInducedCut { g, s, t, k } => {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let found = (0..=*k).find_map(|size| {
                edges.iter().copied().combinations(size).find(|es| {
                    let set: Vec<usize> = es
                        .iter()
                        .flat_map(|&(a, b)| [a, b])
                        .filter(|v| v != s && v != t)
                        .sorted()
                        .dedup()
                        .collect();
                    separates(g, &set, *s, *t)
                })
            });
            Answer::Edges(found)
        }
        Problem::Oct { g, k } => Answer::Vertices(
            subsets(all.clone(), *k)
                .find(|set| bipartite_without(g, set))
                .map(VertexSet::from_sorted),
        ),
        Problem::StableBipartization { g, k } => Answer::Vertices(
            subsets(all.clone(), *k)
                .find(|set| independent(g, set) && bipartite_without(g, set))
                .map(VertexSet::from_sorted),
        ),
        Problem::ExactStableBipartization { g, k } => Answer::Vertices(
            all.iter()
                .copied()
                .combinations(*k)
                .find(|set| independent(g, set) && bipartite_without(g, set))
                .map(VertexSet::from_sorted),
        ),
        Problem::SeparatorUnion { g, s, t, k } => Answer::Set(
            enumerate_minimal_separators(g, *s, *t, *k)
                .iter()
                .fold(VertexSet::new(), |acc, sep| acc.union(sep)),
        ),
    };
    Ok(answer)
}

/// Which fast/oracle pairs [`cross_check`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Separator,
    Chain,
    Cover,
    GMincut,
    Multicut,
    Oct,
    StableBipartization,
    ExactStableBipartization,
    EdgeInducedCut,
    SeparatorUnion,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Separator,
        Suite::Chain,
        Suite::Cover,
        Suite::GMincut,
        Suite::Multicut,
        Suite::Oct,
        Suite::StableBipartization,
        Suite::ExactStableBipartization,
        Suite::EdgeInducedCut,
        Suite::SeparatorUnion,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckConfig {
    pub suites: Vec<Suite>,
    /// Random instances per suite, on top of the fixtures.
    pub trials: usize,
    pub seed: u64,
    /// Largest random graph.
    pub max_n: usize,
    pub include_fixtures: bool,
    /// Record wall-clock time per suite (makes reports non-reproducible).
    pub timing: bool,
    /// Test hook: negate the fast answer of the first instance of the
    /// first suite.
    pub inject_fault: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            suites: Suite::ALL.to_vec(),
            trials: 20,
            seed: 1,
            max_n: 9,
            include_fixtures: true,
            timing: false,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub suite: Suite,
    /// Seed of the random instance, absent for fixtures.
    pub seed: Option<u64>,
    pub params: String,
    /// The instance in the graph file format, for replay.
    pub instance: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhaseReport {
    pub suite: Suite,
    pub trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub trials: usize,
    pub mismatches: Vec<Mismatch>,
    pub phases: Vec<PhaseReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Instance {
    g: Graph,
    s: usize,
    t: usize,
    k: usize,
    seed: Option<u64>,
}

fn instances(config: &CheckConfig, suite_index: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    if config.include_fixtures && config.trials > 0 {
        for f in fixtures::all() {
            for k in 1..=3 {
                out.push(Instance {
                    g: f.graph.clone(),
                    s: f.s,
                    t: f.t,
                    k,
                    seed: None,
                });
            }
        }
    }
    let min_n = 3.min(config.max_n.max(2));
    for trial in 0..config.trials {
        // per-trial seed from a counter keeps every trial replayable
        let seed = config
            .seed
            .wrapping_mul(1_000_003)
            .wrapping_add((suite_index * 1_000_000 + trial) as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(min_n..=config.max_n.max(min_n));
        let p = [0.2, 0.3, 0.4][rng.gen_range(0..3)];
        let k = rng.gen_range(1..=3);
        let (g, s, t) = random_st_instance(&RandomModel { n, p, seed });
        out.push(Instance {
            g,
            s,
            t,
            k,
            seed: Some(seed),
        });
    }
    out
}

/// Runs every selected fast/oracle pair and collects disagreements.
pub fn cross_check(config: &CheckConfig) -> Result<CheckReport> {
    let mut report = CheckReport {
        trials: 0,
        mismatches: Vec::new(),
        phases: Vec::new(),
    };
    let mut fault_pending = config.inject_fault;
    for (si, &suite) in config.suites.iter().enumerate() {
        let start = Instant::now();
        let list = instances(config, si);
        for inst in &list {
            let (params, mut fast, oracle) = run_suite(suite, inst)?;
            if fault_pending {
                fast = format!("not {fast}");
                fault_pending = false;
            }
            if fast != oracle {
                report.mismatches.push(Mismatch {
                    suite,
                    seed: inst.seed,
                    params,
                    instance: write_graph(&inst.g),
                    fast,
                    oracle,
                });
            }
        }
        report.trials += list.len();
        report.phases.push(PhaseReport {
            suite,
            trials: list.len(),
            elapsed_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
        });
    }
    Ok(report)
}

fn yes_no(b: bool) -> String {
    if b { "YES" } else { "NO" }.to_string()
}

/// Returns (parameters, fast verdict, oracle verdict) for one instance.
/// Fast witnesses are re-verified here; a bad witness shows up as a
/// mismatch.
fn run_suite(suite: Suite, inst: &Instance) -> Result<(String, String, String)> {
    use crate::{chain, problems, reduction, separation, solver};
    let Instance { g, s, t, k, .. } = inst;
    let (s, t, k) = (*s, *t, *k);
    let params = format!("s={} t={} k={k}", s + 1, t + 1);
    let out = match suite {
        Suite::Separator => {
            let fast = separation::min_st_separator(g, s, t, None)?;
            let ok = fast
                .found()
                .is_none_or(|sep| separates(g, &sep.witness, s, t));
            (
                params,
                format!("{:?} {}", fast.size(), ok),
                format!("{:?} true", brute_min_separator_size(g, s, t)),
            )
        }
        Suite::Chain => {
            let seps = enumerate_minimal_separators(g, s, t, g.n());
            let ell = seps.iter().map(VertexSet::len).min();
            let minimum: Vec<VertexSet> =
                seps.into_iter().filter(|x| Some(x.len()) == ell).collect();
            let verdict = match ell {
                None | Some(0) => "trivial".to_string(),
                Some(_) => {
                    let c = chain::build_chain(g, s, t)?;
                    yes_no(chain::validate_chain(g, s, t, &c, &minimum))
                }
            };
            let expected = if matches!(ell, None | Some(0)) {
                "trivial"
            } else {
                "YES"
            };
            (params, verdict, expected.to_string())
        }
        Suite::Cover => {
            let cover = reduction::cover_set(g, s, t, k)?;
            let needed = enumerate_minimal_separators(g, s, t, k)
                .iter()
                .fold(VertexSet::from([s, t]), |acc, x| acc.union(x));
            (params, yes_no(needed.is_subset(&cover)), yes_no(true))
        }
        Suite::GMincut => {
            let mut fast = Vec::new();
            let mut oracle = Vec::new();
            for cls in [
                HereditaryClass::Edgeless,
                HereditaryClass::Forest,
                HereditaryClass::MaxDegree(1),
            ] {
                let w = solver::g_mincut(g, s, t, k, &cls)?;
                let ok = w.as_ref().is_none_or(|w| {
                    w.deletion_set.len() <= k
                        && separates(g, &w.deletion_set, s, t)
                        && oracle_member(&cls, &induced(g, &w.deletion_set))
                });
                fast.push(format!(
                    "{}{}",
                    yes_no(w.is_some()),
                    if ok { "" } else { "!" }
                ));
                let b = brute_force_solve(&Problem::GMincut {
                    g: g.clone(),
                    s,
                    t,
                    k,
                    cls,
                })?;
                oracle.push(yes_no(b.is_yes()));
            }
            (params, fast.join(","), oracle.join(","))
        }
        Suite::Multicut => {
            let n = g.n();
            let cut = vec![(s, t)];
            let uncut = if n >= 4 { vec![(1, n - 2)] } else { vec![] };
            let cons = solver::CutConstraints {
                cut_pairs: cut.clone(),
                uncut_pairs: uncut.clone(),
            };
            let w = solver::g_multicut_uncut(g, &cons, k, &HereditaryClass::Any)?;
            let ok = w.as_ref().is_none_or(|w| {
                w.deletion_set.len() <= k
                    && separates(g, &w.deletion_set, s, t)
                    && uncut
                        .iter()
                        .all(|&(a, b)| connected(g, &w.deletion_set, a, b))
            });
            let b = brute_force_solve(&Problem::MulticutUncut {
                g: g.clone(),
                cut,
                uncut,
                k,
                cls: HereditaryClass::Any,
            })?;
            (
                format!("{params} uncut=2:{}", n.saturating_sub(1)),
                format!("{}{}", yes_no(w.is_some()), if ok { "" } else { "!" }),
                yes_no(b.is_yes()),
            )
        }
        Suite::Oct => {
            let fast = problems::odd_cycle_transversal(g, k);
            let ok = fast.as_ref().is_none_or(|x| bipartite_without(g, x));
            let b = brute_force_solve(&Problem::Oct { g: g.clone(), k })?;
            let size = |a: &Answer| match a {
                Answer::Vertices(Some(x)) => Some(x.len()),
                _ => None,
            };
            (
                params,
                format!("{:?} {ok}", fast.map(|x| x.len())),
                format!("{:?} true", size(&b)),
            )
        }
        Suite::StableBipartization | Suite::ExactStableBipartization => {
            let exact = suite == Suite::ExactStableBipartization;
            let fast = if exact {
                problems::exact_stable_bipartization(g, k)?
            } else {
                problems::stable_bipartization(g, k)?
            };
            let ok = fast.as_ref().is_none_or(|x| {
                independent(g, x)
                    && bipartite_without(g, x)
                    && (x.len() == k || !exact && x.len() <= k)
            });
            let problem = if exact {
                Problem::ExactStableBipartization { g: g.clone(), k }
            } else {
                Problem::StableBipartization { g: g.clone(), k }
            };
            let b = brute_force_solve(&problem)?;
            (
                params,
                format!("{}{}", yes_no(fast.is_some()), if ok { "" } else { "!" }),
                yes_no(b.is_yes()),
            )
        }
        Suite::EdgeInducedCut => {
            let fast = problems::edge_induced_vertex_cut(g, s, t, k)?;
            let b = brute_force_solve(&Problem::EdgeInducedCut {
                g: g.clone(),
                s,
                t,
                k,
            })?;
            (params, yes_no(fast.is_some()), yes_no(b.is_yes()))
        }
        Suite::SeparatorUnion => {
            let fast = problems::exact_separator_union(g, s, t, k)?;
            let b = brute_force_solve(&Problem::SeparatorUnion {
                g: g.clone(),
                s,
                t,
                k,
            })?;
            let Answer::Set(expected) = b else {
                unreachable!("separator union answers with a set")
            };
            (
                params,
                format!("{:?}", fast.to_external()),
                format!("{:?}", expected.to_external()),
            )
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let p3 = fixtures::p3();
        assert_eq!(
            enumerate_minimal_separators(&p3.graph, p3.s, p3.t, 1),
            vec![p3.set(&["a"])]
        );
        let pp = fixtures::pp();
        let seps = enumerate_minimal_separators(&pp.graph, pp.s, pp.t, 2);
        assert_eq!(
            seps,
            vec![
                pp.set(&["a1", "b1"]),
                pp.set(&["a1", "b2"]),
                pp.set(&["a2", "b1"]),
                pp.set(&["a2", "b2"])
            ]
        );
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(enumerate_minimal_separators(&edge, 0, 1, 3).is_empty());
    }

    #[test]
    fn enumeration_is_closed() {
        // nothing passing the filter is missing from the output
        for seed in 0..20 {
            let (g, s, t) = random_st_instance(&RandomModel { n: 7, p: 0.4, seed });
            let seps = enumerate_minimal_separators(&g, s, t, 3);
            let pool: Vec<usize> = g.vertices().filter(|&v| v != s && v != t).collect();
            for set in subsets(pool.clone(), 3) {
                let minimal = separates(&g, &set, s, t)
                    && (0..set.len()).all(|i| {
                        let mut x = set.clone();
                        x.remove(i);
                        !separates(&g, &x, s, t)
                    });
                assert_eq!(minimal, seps.contains(&VertexSet::from_sorted(set)));
            }
        }
    }

    #[test]
    fn random_graph_examples() {
        assert_eq!(
            random_graph(&RandomModel {
                n: 5,
                p: 0.0,
                seed: 1
            })
            .m(),
            0
        );
        assert_eq!(
            random_graph(&RandomModel {
                n: 5,
                p: 1.0,
                seed: 1
            })
            .m(),
            10
        );
        let model = RandomModel {
            n: 12,
            p: 0.3,
            seed: 99,
        };
        assert_eq!(
            random_graph(&model).edges().collect::<Vec<_>>(),
            random_graph(&model).edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn brute_force_examples() {
        let c4 = fixtures::c4();
        let ans = brute_force_solve(&Problem::StableCut {
            g: c4.graph.clone(),
            s: c4.s,
            t: c4.t,
            k: 2,
        })
        .unwrap();
        assert!(ans.is_yes());
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let ans = brute_force_solve(&Problem::ExactStableBipartization { g: k3, k: 2 }).unwrap();
        assert!(!ans.is_yes());
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let ans = brute_force_solve(&Problem::EdgeInducedCut {
            g: path,
            s: 0,
            t: 3,
            k: 1,
        })
        .unwrap();
        assert!(ans.is_yes());
        let big = Graph::empty(20);
        assert!(matches!(
            brute_force_solve(&Problem::Oct { g: big, k: 1 }),
            Err(Error::CapExceeded { n: 20, cap: 14 })
        ));
    }

    #[test]
    fn oracle_membership_agrees_with_class() {
        for seed in 0..60 {
            let g = random_graph(&RandomModel {
                n: 1 + seed as usize % 7,
                p: 0.4,
                seed,
            });
            for cls in [
                HereditaryClass::Edgeless,
                HereditaryClass::Forest,
                HereditaryClass::Bipartite,
                HereditaryClass::MaxDegree(1),
                HereditaryClass::MatchDeficiency(1),
                HereditaryClass::MatchDeficiency(2),
            ] {
                assert_eq!(
                    oracle_member(&cls, &g),
                    cls.contains(&g),
                    "{cls:?} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn harness_self_test() {
        let zero = CheckConfig {
            trials: 0,
            ..CheckConfig::default()
        };
        let report = cross_check(&zero).unwrap();
        assert_eq!(report.trials, 0);
        assert!(report.mismatches.is_empty());

        let faulty = CheckConfig {
            suites: vec![Suite::GMincut],
            trials: 2,
            inject_fault: true,
            ..CheckConfig::default()
        };
        let report = cross_check(&faulty).unwrap();
        assert_eq!(report.mismatches.len(), 1);
    }

    #[test]
    fn fixtures_pass_every_suite() {
        let config = CheckConfig {
            trials: 1,
            max_n: 6,
            ..CheckConfig::default()
        };
        let report = cross_check(&config).unwrap();
        assert!(report.passed(), "{:#?}", report.mismatches);
    }
}
