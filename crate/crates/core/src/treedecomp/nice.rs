use serde::Serialize;

use super::{validate_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NiceKind {
    /// Empty bag, no children.
    Leaf,
    Introduce(usize),
    Forget(usize),
    /// Two children with the same bag.
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: VertexSet,
    pub children: Vec<usize>,
}

/// Nice decomposition stored in post-order: children precede parents and
/// the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Structural check of every node against its children.
    pub fn is_well_formed(&self) -> bool {
        self.nodes.iter().enumerate().all(|(i, node)| {
            if node.children.iter().any(|&c| c >= i) {
                return false;
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            match (node.kind, node.children.len()) {
                (NiceKind::Leaf, 0) => node.bag.is_empty(),
                (NiceKind::Introduce(v), 1) => {
                    !child_bag(0).contains(v) && child_bag(0).with(v) == node.bag
                }
                (NiceKind::Forget(v), 1) => {
                    child_bag(0).contains(v) && child_bag(0).without(v) == node.bag
                }
                (NiceKind::Join, 2) => child_bag(0) == &node.bag && child_bag(1) == &node.bag,
                _ => false,
            }
        })
    }

    /// Flattens back into a plain decomposition (one bag per node).
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition { bags, edges }
    }
}

/// Converts a valid decomposition of `g` into nice form rooted at the bag
/// holding `root_vertex` (the lowest-indexed such bag), or at bag 0. The
/// root keeps its bag; width is preserved.
pub fn make_nice(
    g: &Graph,
    td: &TreeDecomposition,
    root_vertex: Option<usize>,
) -> Result<NiceDecomposition> {
    if !validate_decomposition(g, td) {
        return Err(Error::InvalidDecomposition(
            "decomposition axioms violated".into(),
        ));
    }
    let root = root_vertex
        .and_then(|v| td.bags.iter().position(|b| b.contains(v)))
        .unwrap_or(0);
    let adj = td.adjacency();
    let mut builder = Builder { nodes: Vec::new() };
    // Iterative post-order over the bag tree.
    let mut parent = vec![usize::MAX; td.bags.len()];
    let mut order = Vec::with_capacity(td.bags.len());
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in adj[x].iter().rev() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut built = vec![usize::MAX; td.bags.len()];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let children: Vec<usize> = adj[x]
            .iter()
            .copied()
            .filter(|&y| parent[y] == x && y != x)
            .collect();
        let mut tops: Vec<usize> = children
            .iter()
            .map(|&c| builder.transition(built[c], bag))
            .collect();
        if tops.is_empty() {
            let leaf = builder.push(NiceKind::Leaf, VertexSet::new(), vec![]);
            tops.push(builder.transition(leaf, bag));
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = builder.push(NiceKind::Join, bag.clone(), vec![acc, other]);
        }
        built[x] = acc;
    }
    let nice = NiceDecomposition {
        nodes: builder.nodes,
    };
    debug_assert!(nice.is_well_formed());
    debug_assert_eq!(nice.root(), built[root]);
    Ok(nice)
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: VertexSet, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Chain of forgets then introduces from node `from` up to `target`.
    fn transition(&mut self, from: usize, target: &VertexSet) -> usize {
        let mut cur = from;
        let start = self.nodes[from].bag.clone();
        for &v in start.difference(target).iter() {
            let bag = self.nodes[cur].bag.without(v);
            cur = self.push(NiceKind::Forget(v), bag, vec![cur]);
        }
        for &v in target.difference(&start).iter() {
            let bag = self.nodes[cur].bag.with(v);
            cur = self.push(NiceKind::Introduce(v), bag, vec![cur]);
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{random_graph, RandomModel};
    use crate::treedecomp::decompose;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn single_bag_clique() {
        let k4 = complete(4);
        let td = TreeDecomposition {
            bags: vec![[0, 1, 2, 3].into()],
            edges: vec![],
        };
        let nice = make_nice(&k4, &td, None).unwrap();
        let kinds: Vec<NiceKind> = nice.nodes.iter().map(|n| n.kind).collect();
        assert_eq!(
            kinds,
            vec![
                NiceKind::Leaf,
                NiceKind::Introduce(0),
                NiceKind::Introduce(1),
                NiceKind::Introduce(2),
                NiceKind::Introduce(3)
            ]
        );
        assert_eq!(nice.width(), 3);
    }

    #[test]
    fn path_of_bags() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let td = TreeDecomposition {
            bags: vec![[0, 1].into(), [1, 2].into(), [2, 3].into()],
            edges: vec![(0, 1), (1, 2)],
        };
        let nice = make_nice(&path, &td, Some(0)).unwrap();
        assert!(nice.is_well_formed());
        assert_eq!(nice.width(), 1);
        assert!(nice.nodes.iter().all(|n| n.kind != NiceKind::Join));
        assert!(nice
            .nodes
            .iter()
            .any(|n| matches!(n.kind, NiceKind::Forget(_))));
    }

    #[test]
    fn branching_bag_needs_join() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let td = TreeDecomposition {
            bags: vec![[0].into(), [0, 1].into(), [0, 2].into(), [0, 3].into()],
            edges: vec![(0, 1), (0, 2), (0, 3)],
        };
        let nice = make_nice(&star, &td, Some(0)).unwrap();
        assert!(
            nice.nodes
                .iter()
                .filter(|n| n.kind == NiceKind::Join)
                .count()
                >= 1
        );
        assert!(nice.is_well_formed());
    }

    #[test]
    fn rejects_invalid_input() {
        let k3 = complete(3);
        let td = TreeDecomposition {
            bags: vec![[0, 1].into()],
            edges: vec![],
        };
        assert!(make_nice(&k3, &td, None).is_err());
    }

    #[test]
    fn preserves_width_and_coverage() {
        for seed in 0..30 {
            let g = random_graph(&RandomModel {
                n: 3 + seed as usize % 10,
                p: 0.35,
                seed,
            });
            let td = decompose(&g);
            let nice = make_nice(&g, &td, Some(0)).unwrap();
            assert_eq!(nice.width(), td.width());
            assert!(nice.is_well_formed());
            assert!(validate_decomposition(&g, &nice.to_tree_decomposition()));
            assert!(nice.nodes.len() <= (td.width() + 2) * (g.n() + 1) * 4);
        }
    }
}
