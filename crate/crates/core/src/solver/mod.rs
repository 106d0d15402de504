//! Hereditary-class constrained cut problems, solved by reducing to a graph
//! of bounded treewidth and running a dynamic program over a nice tree
//! decomposition of it.

mod class;
mod dp;

pub use class::{check_hereditary, has_induced_copy, HereditaryClass};
pub use dp::{dp_constrained_cut, CutConstraints, DpOptions, DpOutcome, DpWitness, SolveStats};

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::reduction::reduce_instance;
use crate::separation::{min_st_separator, minimalize_separator, SeparatorResult};
use crate::treedecomp::{decompose, make_nice};

/// Result of a pipeline run, with statistics for NO answers too.
#[derive(Clone, Debug)]
pub struct Solve {
    pub witness: Option<DpWitness>,
    pub stats: SolveStats,
    /// Minimum separator size between the first cut pair, when computed.
    pub ell: Option<usize>,
}

/// A set of at most `k` vertices, avoiding `s` and `t`, separating them and
/// inducing a member of `cls`.
pub fn g_mincut(
    g: &Graph,
    s: usize,
    t: usize,
    k: usize,
    cls: &HereditaryClass,
) -> Result<Option<DpWitness>> {
    Ok(g_mincut_with_stats(g, s, t, k, cls, DpOptions::default())?.witness)
}

pub fn g_mincut_with_stats(
    g: &Graph,
    s: usize,
    t: usize,
    k: usize,
    cls: &HereditaryClass,
    options: DpOptions,
) -> Result<Solve> {
    g.check_vertex(s, "s")?;
    g.check_vertex(t, "t")?;
    if s == t {
        return Err(Error::domain("s and t must differ"));
    }
    let no = |ell| Solve {
        witness: None,
        stats: SolveStats::default(),
        ell,
    };
    let ell = match min_st_separator(g, s, t, Some(k))? {
        SeparatorResult::Infinite => return Ok(no(None)),
        SeparatorResult::ExceedsCap(_) => return Ok(no(None)),
        SeparatorResult::Found(sep) => sep.size(),
    };
    if ell == 0 {
        return Ok(Solve {
            witness: Some(verified(g, VertexSet::new(), SolveStats::default())?),
            stats: SolveStats::default(),
            ell: Some(0),
        });
    }
    let cons = CutConstraints::cut(s, t);
    let mut solve = run_pipeline(g, &cons, k, cls, options)?;
    solve.ell = Some(ell);
    if let Some(w) = solve.witness.take() {
        let a = VertexSet::singleton(s);
        let b = VertexSet::singleton(t);
        let minimal = minimalize_separator(g, &w.deletion_set, &a, &b)?;
        let w = verified(g, minimal, w.stats)?;
        check_witness(g, &w, &cons, k, cls)?;
        solve.witness = Some(w);
    }
    Ok(solve)
}

/// Deletion set of at most `k` non-terminal vertices separating every cut
/// pair, keeping every uncut pair connected, inducing a member of `cls`.
pub fn g_multicut_uncut(
    g: &Graph,
    cons: &CutConstraints,
    k: usize,
    cls: &HereditaryClass,
) -> Result<Option<DpWitness>> {
    Ok(g_multicut_uncut_with_stats(g, cons, k, cls, DpOptions::default())?.witness)
}

pub fn g_multicut_uncut_with_stats(
    g: &Graph,
    cons: &CutConstraints,
    k: usize,
    cls: &HereditaryClass,
    options: DpOptions,
) -> Result<Solve> {
    g.check_set(&cons.terminals(), "pair endpoints")?;
    let no = Solve {
        witness: None,
        stats: SolveStats::default(),
        ell: None,
    };
    if cons
        .cut_pairs
        .iter()
        .any(|&(a, b)| a == b || g.has_edge(a, b))
    {
        return Ok(no);
    }
    let cons = CutConstraints {
        cut_pairs: cons.cut_pairs.clone(),
        uncut_pairs: cons
            .uncut_pairs
            .iter()
            .copied()
            .filter(|(a, b)| a != b)
            .collect(),
    };
    if cons.satisfied_by(g, &VertexSet::new()) {
        return Ok(Solve {
            witness: Some(verified(g, VertexSet::new(), SolveStats::default())?),
            ..no
        });
    }
    if k == 0 || cons.cut_pairs.is_empty() {
        // deleting vertices never reconnects a pair
        return Ok(no);
    }
    let mut solve = run_pipeline(g, &cons, k, cls, options)?;
    if let Some(w) = solve.witness.take() {
        let minimal = minimalize_constraints(g, &w.deletion_set, &cons);
        let w = verified(g, minimal, w.stats)?;
        check_witness(g, &w, &cons, k, cls)?;
        solve.witness = Some(w);
    }
    Ok(solve)
}

fn run_pipeline(
    g: &Graph,
    cons: &CutConstraints,
    k: usize,
    cls: &HereditaryClass,
    options: DpOptions,
) -> Result<Solve> {
    let terminals = cons.terminals();
    let red = reduce_instance(g, &terminals, k)?;
    let td = decompose(&red.gstar);
    let root = red.reduced_id(terminals[0]);
    let nice = make_nice(&red.gstar, &td, root)?;
    let map = |&(a, b): &(usize, usize)| -> (usize, usize) {
        (
            red.reduced_id(a).expect("terminal in cover"),
            red.reduced_id(b).expect("terminal in cover"),
        )
    };
    let reduced_cons = CutConstraints {
        cut_pairs: cons.cut_pairs.iter().map(map).collect(),
        uncut_pairs: cons.uncut_pairs.iter().map(map).collect(),
    };
    let outcome = dp_constrained_cut(
        &red.gstar,
        &nice,
        &reduced_cons,
        k,
        cls,
        &red.undeletable,
        options,
    )?;
    let mut stats = outcome.stats;
    stats.cover_size = Some(red.cover.len());
    stats.reduced_n = Some(red.gstar.n());
    stats.width_bound = Some(red.width_bound);
    log::debug!(
        "cover {} of {}, reduced graph {} vertices, width {:?}, {} states",
        red.cover.len(),
        g.n(),
        red.gstar.n(),
        stats.width,
        stats.dp_states
    );
    let witness = match outcome.witness {
        None => None,
        Some(w) => {
            debug_assert!(w.deletion_set.is_disjoint(&red.undeletable));
            Some(verified(
                g,
                red.to_original(&w.deletion_set),
                stats.clone(),
            )?)
        }
    };
    Ok(Solve {
        witness,
        stats,
        ell: None,
    })
}

/// Drops vertices in ascending order while every pair stays satisfied.
fn minimalize_constraints(g: &Graph, set: &VertexSet, cons: &CutConstraints) -> VertexSet {
    let mut current = set.clone();
    for &v in set {
        let candidate = current.without(v);
        if cons.satisfied_by(g, &candidate) {
            current = candidate;
        }
    }
    current
}

fn verified(g: &Graph, set: VertexSet, stats: SolveStats) -> Result<DpWitness> {
    let (induced_graph, _) = induced_subgraph(g, &set)?;
    Ok(DpWitness {
        deletion_set: set,
        induced_graph,
        stats,
    })
}

fn check_witness(
    g: &Graph,
    w: &DpWitness,
    cons: &CutConstraints,
    k: usize,
    cls: &HereditaryClass,
) -> Result<()> {
    let ok = w.deletion_set.len() <= k
        && w.deletion_set.is_disjoint(&cons.terminals())
        && cls.contains(&w.induced_graph)
        && cons.satisfied_by(g, &w.deletion_set);
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "solver produced an invalid witness {:?}",
            w.deletion_set
        )))
    }
}
