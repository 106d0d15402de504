//! The end-user problems: stable and edge-induced cuts, the exact union of
//! small minimal separators, odd cycle transversal and stable
//! bipartization.

mod bipartization;
mod cuts;
mod matching;

pub use bipartization::{
    branches, exact_stable_bipartization, exact_stable_bipartization_within, odd_cycle_transversal,
    stable_bipartization, BipartizationBranch,
};
pub use cuts::{edge_induced_vertex_cut, exact_separator_union, stable_st_cut, EdgeCutWitness};
pub use matching::{
    bipartite_matching, bipartite_max_independent_set, max_matching_size, maximum_matching,
};
