use super::leaf::{cluster_leaf_eed_cost, eed_leaf_deletions};
use super::{BranchStats, Search};
use crate::graph::Graph;
use crate::problem::{Outcome, Solution};

/// Minimum edge deletion to a uniform cluster graph, if at most `k`.
///
/// Every solution removes one of the two edges of an induced `P_3`, which
/// gives a binary search tree; cluster graphs are closed with the gcd
/// formula.
pub fn solve_2eed(g: &Graph, k: usize) -> Search {
    let mut st = State {
        k,
        best: None,
        stats: BranchStats::default(),
    };
    st.search(&mut g.clone(), &mut Vec::new());
    Search {
        outcome: Outcome::from_option(st.best.map(Solution::deletions)),
        stats: st.stats,
    }
}

struct State {
    k: usize,
    best: Option<Vec<(usize, usize)>>,
    stats: BranchStats,
}

impl State {
    fn search(&mut self, g: &mut Graph, chosen: &mut Vec<(usize, usize)>) {
        let allowed = match &self.best {
            Some(b) if b.is_empty() => return,
            Some(b) => (b.len() - 1).min(self.k),
            None => self.k,
        };
        let depth = chosen.len();
        match g.find_induced_p3() {
            Some((a, b, c)) => {
                if depth >= allowed {
                    return;
                }
                self.stats.enter(depth);
                for (u, v) in [(a, b), (b, c)] {
                    g.remove_edge(u, v);
                    chosen.push((u.min(v), u.max(v)));
                    self.search(g, chosen);
                    chosen.pop();
                    g.add_edge(u, v);
                }
            }
            None => {
                self.stats.leaf(depth);
                let cliques = g.cluster_components().expect("no induced P3 means cluster graph");
                let leaf = cluster_leaf_eed_cost(&g.cluster_profile().unwrap());
                if depth + leaf.cost <= allowed {
                    let mut sol = chosen.clone();
                    sol.extend(eed_leaf_deletions(&cliques, leaf.x.max(1)));
                    self.best = Some(sol);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::{solve_exhaustive, verify};
    use crate::problem::{Instance, Kind};

    fn check(g: Graph, k: usize, expect_yes: bool) {
        let res = solve_2eed(&g, k);
        assert!(res.stats.nodes_visited <= 2u64.pow(k as u32));
        let inst = Instance::new(Kind::Eed, 2, k, g).unwrap();
        let oracle = solve_exhaustive(&inst).unwrap();
        assert_eq!(res.outcome.is_yes(), expect_yes);
        assert_eq!(oracle.is_some(), expect_yes);
        if let Outcome::Yes(sol) = &res.outcome {
            assert!(verify(&inst, sol).unwrap().accepted);
            assert_eq!(sol.len(), oracle.unwrap().len());
        }
    }

    #[test]
    fn examples() {
        check(complete(3), 0, true);
        check(path(3), 1, false);
        check(path(3), 2, true);
        check(cluster(&[4, 2]), 4, true);
        check(cluster(&[4, 2]), 3, false);
        check(cycle(4), 2, true);
    }

    #[test]
    fn empty_solution_for_uniform_input() {
        assert_eq!(
            solve_2eed(&complete(3), 0).outcome,
            Outcome::Yes(Solution::Edits(vec![]))
        );
    }
}
