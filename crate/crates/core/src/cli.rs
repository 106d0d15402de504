//! The `twred` command line: one subcommand per operation, JSON on stdout,
//! a one-line summary on stderr.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::chain::build_chain;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, parse_pair_list, parse_vertex_list, Graph, VertexSet};
use crate::oracle::{cross_check, CheckConfig, Suite};
use crate::problems;
use crate::reduction::{cover_set, reduce_instance, tw_bound};
use crate::separation::{min_st_separator, SeparatorResult};
use crate::solver::{
    g_mincut_with_stats, g_multicut_uncut_with_stats, CutConstraints, DpOptions, HereditaryClass,
    Solve,
};
use crate::treedecomp::{decompose, write_td};

#[derive(Debug, Parser)]
#[command(
    name = "twred",
    version,
    about = "Treewidth reduction for constrained separation problems"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report wall-clock time in `stats.time_ms` (otherwise null).
    #[arg(long, global = true)]
    pub timing: bool,
    /// More log output on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file (`p <n> <m>` / `e <u> <v>`, 1-based ids).
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct Terminals {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum s-t vertex separator.
    Minsep {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        /// Give up once the separator is known to exceed this size.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Nested chain of minimum separators.
    Chain {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
    },
    /// Vertex set covering every minimal s-t separator of size at most k.
    Cover {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
    },
    /// Bounded-treewidth replacement graph for a terminal set.
    Reduce {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
        /// Extra terminals, `v[,v…]`.
        #[arg(long)]
        terminals: Option<String>,
        /// Write a decomposition of the reduced graph in PACE format.
        #[arg(long)]
        td_out: Option<PathBuf>,
    },
    /// Tree decomposition of the input graph.
    Decompose {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        td_out: Option<PathBuf>,
    },
    /// s-t separator of size at most k inducing a graph of a class.
    Gmincut {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
        /// edgeless | any | matchdef:<k> | forest | bipartite | maxdeg:<d> | forbid:<g6>,…
        #[arg(long, default_value = "edgeless")]
        class: String,
    },
    /// Deletion set cutting some pairs and keeping others connected.
    Multicut {
        #[command(flatten)]
        graph: GraphArg,
        /// Pairs to separate, `u:v[,u:v…]`.
        #[arg(long, default_value = "")]
        cut: String,
        /// Pairs to keep connected, `u:v[,u:v…]`.
        #[arg(long, default_value = "")]
        uncut: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "any")]
        class: String,
    },
    /// Independent s-t separator of size at most k.
    StableCut {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
    },
    /// At most k edges whose non-terminal endpoints separate s and t.
    Eivc {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
    },
    /// Minimum odd cycle transversal of size at most k.
    Oct {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
    },
    /// Independent set of at most k vertices whose removal leaves a bipartite graph.
    StableBip {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
    },
    /// Independent set of exactly k vertices whose removal leaves a bipartite graph.
    ExactStableBip {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
        /// Restrict deletions to these vertices, `v[,v…]`.
        #[arg(long)]
        allowed: Option<String>,
    },
    /// Exact union of all minimal s-t separators of size at most k.
    ExactC {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        st: Terminals,
        #[arg(long)]
        k: usize,
    },
    /// Compare every solver with brute force on fixtures and random graphs.
    Selfcheck {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest random graph.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Comma-separated suite names; all by default.
        #[arg(long)]
        suites: Option<String>,
    },
}

/// Exit code and the text for both streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    run_config(&config)
}

pub fn run_config(config: &CommandConfig) -> CommandOutput {
    let start = Instant::now();
    match execute(&config.command) {
        Ok(mut report) => {
            let time = config.timing.then(|| start.elapsed().as_millis() as u64);
            report.stats.time_ms = time;
            let summary = report.summary();
            CommandOutput {
                code: 0,
                stdout: report.to_json_string(),
                stderr: summary,
            }
        }
        Err(e) => {
            let code = match e {
                Error::Parse { .. } | Error::Io(_) => 2,
                _ => 1,
            };
            CommandOutput {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

#[derive(Debug, Default)]
struct Stats {
    ell: Option<usize>,
    excess: Option<usize>,
    cover_size: Option<usize>,
    width: Option<usize>,
    width_bound: Option<u64>,
    dp_states: Option<usize>,
    time_ms: Option<u64>,
}

#[derive(Debug)]
struct Report {
    command: &'static str,
    answer: Value,
    witness: Value,
    stats: Stats,
    notes: Vec<String>,
    details: Value,
}

impl Report {
    fn new(command: &'static str, answer: Value) -> Self {
        Report {
            command,
            answer,
            witness: Value::Null,
            stats: Stats::default(),
            notes: Vec::new(),
            details: Value::Null,
        }
    }

    fn to_json_string(&self) -> String {
        let s = &self.stats;
        let doc = json!({
            "command": self.command,
            "answer": self.answer,
            "witness": self.witness,
            "stats": {
                "ell": s.ell,
                "excess": s.excess,
                "cover_size": s.cover_size,
                "width": s.width,
                "width_bound": s.width_bound,
                "dp_states": s.dp_states,
                "time_ms": s.time_ms,
            },
            "notes": self.notes,
            "details": self.details,
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("JSON value serializes");
        out.push('\n');
        out
    }

    fn summary(&self) -> String {
        let answer = match &self.answer {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        if self.witness.is_null() {
            format!("{}: {answer}\n", self.command)
        } else {
            format!("{}: {answer}, witness {}\n", self.command, self.witness)
        }
    }
}

fn load(arg: &GraphArg) -> Result<Graph> {
    let text = std::fs::read_to_string(&arg.graph)?;
    parse_graph(&text)
}

/// Converts a 1-based id from a flag into a 0-based id.
fn vertex(g: &Graph, v: usize, flag: &str) -> Result<usize> {
    if v == 0 || v > g.n() {
        return Err(Error::domain(format!(
            "--{flag} {v} is not a vertex (graph has {} vertices)",
            g.n()
        )));
    }
    Ok(v - 1)
}

fn st(g: &Graph, t: &Terminals) -> Result<(usize, usize)> {
    let (s, tt) = (vertex(g, t.s, "s")?, vertex(g, t.t, "t")?);
    if s == tt {
        return Err(Error::domain("--s and --t must differ"));
    }
    Ok((s, tt))
}

fn ext(set: &VertexSet) -> Value {
    json!(set.to_external())
}

fn yes_no(b: bool) -> Value {
    json!(if b { "YES" } else { "NO" })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn solve_report(command: &'static str, solve: &Solve, k: usize) -> Report {
    let mut r = Report::new(command, yes_no(solve.witness.is_some()));
    if let Some(w) = &solve.witness {
        r.witness = ext(&w.deletion_set);
    }
    r.stats.ell = solve.ell;
    r.stats.excess = solve.ell.map(|l| k.saturating_sub(l));
    r.stats.cover_size = solve.stats.cover_size;
    r.stats.width = solve.stats.width;
    r.stats.width_bound = solve.stats.width_bound;
    r.stats.dp_states = Some(solve.stats.dp_states);
    r
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Minsep { graph, st: t, k } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let res = min_st_separator(&g, s, t, *k)?;
            let mut r = match &res {
                SeparatorResult::Found(sep) => {
                    let mut r = Report::new("minsep", json!(sep.size()));
                    r.witness = ext(&sep.witness);
                    r.stats.ell = Some(sep.size());
                    r.details = json!({ "source_side": ext(&sep.source_side) });
                    r
                }
                SeparatorResult::Infinite => Report::new("minsep", json!("INFINITE")),
                SeparatorResult::ExceedsCap(c) => {
                    let mut r = Report::new("minsep", json!("EXCEEDS_CAP"));
                    r.details = json!({ "cap": c });
                    r
                }
            };
            if matches!(res, SeparatorResult::Infinite) {
                r.notes
                    .push("s and t are adjacent; no vertex separator exists".into());
            }
            Ok(r)
        }
        Command::Chain { graph, st: t } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let chain = build_chain(&g, s, t)?;
            let mut r = Report::new("chain", json!(chain.q()));
            r.stats.ell = Some(chain.ell);
            let sets: Vec<Value> = chain.sets.iter().map(ext).collect();
            let boundaries: Vec<Value> = chain.boundaries.iter().map(ext).collect();
            r.details = json!({ "sets": sets, "boundaries": boundaries });
            Ok(r)
        }
        Command::Cover { graph, st: t, k } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let cover = cover_set(&g, s, t, *k)?;
            let mut r = Report::new("cover", json!(cover.len()));
            r.witness = ext(&cover);
            r.stats.cover_size = Some(cover.len());
            if !g.has_edge(s, t) {
                if let Some(ell) = min_st_separator(&g, s, t, None)?.size() {
                    r.stats.ell = Some(ell);
                    if ell <= *k {
                        r.stats.excess = Some(k - ell);
                        if ell > 0 {
                            let b = tw_bound(ell as u64, (k - ell) as u64)?;
                            r.stats.width_bound = Some(b.g_value);
                            if b.saturated {
                                r.notes.push("width bound saturated at u64::MAX".into());
                            }
                        }
                    }
                }
            }
            Ok(r)
        }
        Command::Reduce {
            graph,
            st: t,
            k,
            terminals,
            td_out,
        } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let mut terms = VertexSet::from([s, t]);
            if let Some(list) = terminals {
                terms = terms.union(&parse_vertex_list(list, g.n())?.into());
            }
            let red = reduce_instance(&g, &terms, *k)?;
            let td = decompose(&red.gstar);
            if let Some(path) = td_out {
                write_file(path, &write_td(&td, red.gstar.n()))?;
            }
            let mut r = Report::new("reduce", json!(red.gstar.n()));
            r.stats.cover_size = Some(red.cover.len());
            r.stats.width = Some(td.width());
            r.stats.width_bound = Some(red.width_bound);
            r.details = red.to_json();
            Ok(r)
        }
        Command::Decompose { graph, td_out } => {
            let g = load(graph)?;
            let td = decompose(&g);
            if let Some(path) = td_out {
                write_file(path, &write_td(&td, g.n()))?;
            }
            let mut r = Report::new("decompose", json!(td.width()));
            r.stats.width = Some(td.width());
            let bags: Vec<Value> = td.bags.iter().map(ext).collect();
            let edges: Vec<[usize; 2]> = td.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            r.details = json!({ "bags": bags, "tree_edges": edges });
            Ok(r)
        }
        Command::Gmincut {
            graph,
            st: t,
            k,
            class,
        } => {
            let cls = HereditaryClass::parse(class)?;
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let solve = g_mincut_with_stats(&g, s, t, *k, &cls, DpOptions::default())?;
            let mut r = solve_report("gmincut", &solve, *k);
            r.details = json!({ "class": cls.selector() });
            Ok(r)
        }
        Command::Multicut {
            graph,
            cut,
            uncut,
            k,
            class,
        } => {
            let cls = HereditaryClass::parse(class)?;
            let g = load(graph)?;
            let cons = CutConstraints {
                cut_pairs: parse_pair_list(cut, g.n())?,
                uncut_pairs: parse_pair_list(uncut, g.n())?,
            };
            let solve = g_multicut_uncut_with_stats(&g, &cons, *k, &cls, DpOptions::default())?;
            let mut r = solve_report("multicut", &solve, *k);
            r.notes.push(
                "cut and uncut pairs may share endpoints; each pair is checked on its own".into(),
            );
            r.details = json!({ "class": cls.selector() });
            Ok(r)
        }
        Command::StableCut { graph, st: t, k } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let solve = g_mincut_with_stats(
                &g,
                s,
                t,
                *k,
                &HereditaryClass::Edgeless,
                DpOptions::default(),
            )?;
            Ok(solve_report("stable-cut", &solve, *k))
        }
        Command::Eivc { graph, st: t, k } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let found = problems::edge_induced_vertex_cut(&g, s, t, *k)?;
            let mut r = Report::new("eivc", yes_no(found.is_some()));
            if let Some(w) = &found {
                let edges: Vec<[usize; 2]> = w.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
                r.witness = json!(edges);
                r.details = json!({ "deleted": ext(&w.deleted) });
            }
            r.notes.push(
                "semantics: the endpoints of the chosen edges other than s and t must separate s from t; edges may touch s or t".into(),
            );
            Ok(r)
        }
        Command::Oct { graph, k } => {
            let g = load(graph)?;
            let found = problems::odd_cycle_transversal(&g, *k);
            let mut r = Report::new("oct", yes_no(found.is_some()));
            if let Some(set) = &found {
                r.witness = ext(set);
            }
            Ok(r)
        }
        Command::StableBip { graph, k } => {
            let g = load(graph)?;
            let found = problems::stable_bipartization(&g, *k)?;
            let mut r = Report::new("stable-bip", yes_no(found.is_some()));
            if let Some(set) = &found {
                r.witness = ext(set);
            }
            Ok(r)
        }
        Command::ExactStableBip { graph, k, allowed } => {
            let g = load(graph)?;
            let found = match allowed {
                Some(list) => {
                    let d: VertexSet = parse_vertex_list(list, g.n())?.into();
                    problems::exact_stable_bipartization_within(&g, &d, *k)?
                }
                None => problems::exact_stable_bipartization(&g, *k)?,
            };
            let mut r = Report::new("exact-stable-bip", yes_no(found.is_some()));
            if let Some(set) = &found {
                r.witness = ext(set);
            }
            if allowed.is_some() {
                r.notes.push("deletions restricted to --allowed".into());
            }
            Ok(r)
        }
        Command::ExactC { graph, st: t, k } => {
            let g = load(graph)?;
            let (s, t) = st(&g, t)?;
            let c = problems::exact_separator_union(&g, s, t, *k)?;
            let mut r = Report::new("exact-c", json!(c.len()));
            r.witness = ext(&c);
            Ok(r)
        }
        Command::Selfcheck {
            trials,
            seed,
            max_n,
            suites,
        } => {
            let suites = match suites {
                None => Suite::ALL.to_vec(),
                Some(list) => list
                    .split(',')
                    .map(|name| {
                        serde_json::from_value::<Suite>(json!(name.trim()))
                            .map_err(|_| Error::parse(0, format!("unknown suite '{name}'")))
                    })
                    .collect::<Result<_>>()?,
            };
            if *max_n < 2 || *max_n > crate::oracle::DEFAULT_CAP {
                return Err(Error::domain(format!(
                    "--max-n must lie in 2..={}",
                    crate::oracle::DEFAULT_CAP
                )));
            }
            let config = CheckConfig {
                suites,
                trials: *trials,
                seed: *seed,
                max_n: *max_n,
                ..CheckConfig::default()
            };
            let report = cross_check(&config)?;
            let mut r = Report::new(
                "selfcheck",
                json!(if report.passed() { "PASS" } else { "FAIL" }),
            );
            r.details = json!({
                "trials": report.trials,
                "mismatches": report.mismatches.len(),
                "report": report,
            });
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::write_graph;
    use crate::oracle::fixtures;

    fn graph_file(dir: &tempfile::TempDir, name: &str, g: &Graph) -> String {
        let path = dir.path().join(name);
        std::fs::write(&path, write_graph(g)).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn run(args: &[&str]) -> CommandOutput {
        run_command(std::iter::once("twred").chain(args.iter().copied()))
    }

    #[test]
    fn stable_cut_on_c4() {
        let dir = tempfile::tempdir().unwrap();
        let c4 = graph_file(&dir, "c4.gr", &fixtures::c4().graph);
        let out = run(&[
            "stable-cut",
            "--graph",
            &c4,
            "--s",
            "1",
            "--t",
            "3",
            "--k",
            "2",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["answer"], "YES");
        assert_eq!(v["witness"], json!([2, 4]));
        assert!(v["stats"]["time_ms"].is_null());
    }

    #[test]
    fn cover_on_q3() {
        let dir = tempfile::tempdir().unwrap();
        let q3 = graph_file(&dir, "q3.gr", &fixtures::q3().graph);
        let out = run(&["cover", "--graph", &q3, "--s", "1", "--t", "8", "--k", "6"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["stats"]["cover_size"], 8);
        assert_eq!(v["stats"]["ell"], 3);
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(run(&["frobnicate"]).code, 1);
        assert_eq!(run(&["oct", "--k", "1"]).code, 1);
        let bad = dir.path().join("bad.gr");
        std::fs::write(&bad, "p 2 1\ne 1 1\n").unwrap();
        let out = run(&["oct", "--graph", bad.to_str().unwrap(), "--k", "1"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("line 2"));
        let missing = dir.path().join("missing.gr");
        assert_eq!(
            run(&["oct", "--graph", missing.to_str().unwrap(), "--k", "1"]).code,
            2
        );
        let c4 = graph_file(&dir, "c4.gr", &fixtures::c4().graph);
        let out = run(&[
            "gmincut", "--graph", &c4, "--s", "1", "--t", "3", "--k", "1", "--class", "tree",
        ]);
        assert_eq!(out.code, 2);
        let out = run(&[
            "stable-cut",
            "--graph",
            &c4,
            "--s",
            "1",
            "--t",
            "9",
            "--k",
            "1",
        ]);
        assert_eq!(out.code, 1);
        // a NO answer is still a computed answer
        let out = run(&[
            "stable-cut",
            "--graph",
            &c4,
            "--s",
            "1",
            "--t",
            "3",
            "--k",
            "1",
        ]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("\"NO\""));
    }

    #[test]
    fn td_out_writes_pace() {
        let dir = tempfile::tempdir().unwrap();
        let c4 = graph_file(&dir, "c4.gr", &fixtures::c4().graph);
        let td = dir.path().join("c4.td");
        let out = run(&[
            "decompose",
            "--graph",
            &c4,
            "--td-out",
            td.to_str().unwrap(),
        ]);
        assert_eq!(out.code, 0);
        let text = std::fs::read_to_string(td).unwrap();
        let (parsed, n) = crate::treedecomp::parse_td(&text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(parsed.width(), 2);
    }
}
