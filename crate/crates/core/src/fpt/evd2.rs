use super::leaf::{cluster_leaf_evd_cost, evd_leaf_deletions};
use super::{BranchStats, Search};
use crate::graph::Graph;
use crate::problem::{Outcome, Solution};

/// Minimum vertex deletion to a uniform cluster graph, if at most `k`.
///
/// Branches on the first induced `P_3` into three children; at cluster
/// graphs the closed-form leaf cost finishes the job. The incumbent bounds
/// the remaining budget, so the first solution of least size in branch
/// order is returned.
pub fn solve_2evd(g: &Graph, k: usize) -> Search {
    let mut st = State {
        k,
        best: None,
        stats: BranchStats::default(),
    };
    let map: Vec<usize> = (0..g.n()).collect();
    st.search(g, &map, &mut Vec::new());
    Search {
        outcome: Outcome::from_option(st.best.map(Solution::vertices)),
        stats: st.stats,
    }
}

struct State {
    k: usize,
    best: Option<Vec<usize>>,
    stats: BranchStats,
}

impl State {
    fn allowed(&self) -> Option<usize> {
        match &self.best {
            Some(b) => b.len().checked_sub(1).map(|c| c.min(self.k)),
            None => Some(self.k),
        }
    }

    fn search(&mut self, g: &Graph, map: &[usize], chosen: &mut Vec<usize>) {
        let Some(allowed) = self.allowed() else {
            return;
        };
        let depth = chosen.len();
        match g.find_induced_p3() {
            Some((a, b, c)) => {
                if depth >= allowed {
                    return;
                }
                self.stats.enter(depth);
                for v in [a, b, c] {
                    let (h, sub) = g.without_vertices(&[v]);
                    let sub: Vec<usize> = sub.iter().map(|&i| map[i]).collect();
                    chosen.push(map[v]);
                    self.search(&h, &sub, chosen);
                    chosen.pop();
                }
            }
            None => {
                self.stats.leaf(depth);
                let cliques = g.cluster_components().expect("no induced P3 means cluster graph");
                let profile = g.cluster_profile().unwrap();
                let leaf = cluster_leaf_evd_cost(&profile);
                if depth + leaf.cost <= allowed {
                    let mut sol = chosen.clone();
                    sol.extend(evd_leaf_deletions(&cliques, leaf.x).into_iter().map(|v| map[v]));
                    self.best = Some(sol);
                }
            }
        }
    }
}
