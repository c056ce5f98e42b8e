//! Branching algorithms parameterised by the solution size.

mod eed2;
mod evd2;
mod leaf;
mod revd;

pub use eed2::solve_2eed;
pub use evd2::solve_2evd;
pub use leaf::{cluster_leaf_eed_cost, cluster_leaf_evd_cost, eed_leaf_deletions, evd_leaf_deletions, LeafCost};
pub use revd::{solve_revd, RevdConfig};

use crate::problem::Outcome;
use serde::Serialize;

/// Search-tree statistics. Only internal (branching) nodes are counted in
/// `nodes_visited`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchStats {
    pub nodes_visited: u64,
    pub max_depth: usize,
    pub leaf_count: u64,
}

impl BranchStats {
    pub(crate) fn enter(&mut self, depth: usize) {
        self.nodes_visited += 1;
        self.max_depth = self.max_depth.max(depth);
    }

    pub(crate) fn leaf(&mut self, depth: usize) {
        self.leaf_count += 1;
        self.max_depth = self.max_depth.max(depth);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Search {
    pub outcome: Outcome,
    pub stats: BranchStats,
}
