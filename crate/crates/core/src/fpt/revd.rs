use super::{BranchStats, Search};
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::{Outcome, Solution};
use crate::spectral::{component_polys, distinct_eigenvalue_count, SpectrumLedger};

#[derive(Clone, Copy, Debug, Default)]
pub struct RevdConfig {
    /// Stop after this many branching nodes and report `Indeterminate`
    /// unless a solution was already found.
    pub node_limit: Option<u64>,
}

/// Vertex deletion to at most `r >= 3` distinct eigenvalues.
///
/// Phases per node:
/// 1. at the root, more than `(r+1) 2^k` eigenvalues is hopeless, since one
///    deletion at most halves the count (interlacing);
/// 2. a geodesic with `r` edges must lose a vertex, so branch over it;
/// 3. otherwise take components in order of size until together they carry
///    at least `r + 1` distinct eigenvalues. Untouched components survive
///    as components, so some deleted vertex lies in their union.
pub fn solve_revd(g: &Graph, r: usize, k: usize, cfg: RevdConfig) -> Result<Search> {
    if r < 3 {
        return Err(contract(format!("r-EVD branching needs r >= 3, got {r}")));
    }
    let mut st = State {
        r,
        k,
        cfg,
        best: None,
        aborted: false,
        stats: BranchStats::default(),
    };
    let count = distinct_eigenvalue_count(g);
    if count <= capacity(r, k) {
        let map: Vec<usize> = (0..g.n()).collect();
        st.search(g, &map, &mut Vec::new());
    }
    let outcome = match st.best {
        Some(sol) => Outcome::Yes(Solution::vertices(sol)),
        None if st.aborted => Outcome::Indeterminate,
        None => Outcome::No,
    };
    Ok(Search {
        outcome,
        stats: st.stats,
    })
}

/// `(r + 1) * 2^k`, saturating.
fn capacity(r: usize, k: usize) -> usize {
    let pow = if k >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1usize << k
    };
    (r + 1).saturating_mul(pow)
}

struct State {
    r: usize,
    k: usize,
    cfg: RevdConfig,
    best: Option<Vec<usize>>,
    aborted: bool,
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
        if self.aborted {
            return;
        }
        let Some(allowed) = self.allowed() else {
            return;
        };
        let depth = chosen.len();
        let branch_set = if let Some(path) = g.geodesic_with_edges(self.r) {
            if depth >= allowed {
                return;
            }
            path
        } else {
            let count = distinct_eigenvalue_count(g);
            if count <= self.r {
                self.stats.leaf(depth);
                self.best = Some(chosen.clone());
                return;
            }
            if depth >= allowed || count > capacity(self.r, allowed - depth) {
                return;
            }
            self.designated_vertices(g)
        };
        if self.cfg.node_limit.is_some_and(|lim| self.stats.nodes_visited >= lim) {
            self.aborted = true;
            return;
        }
        self.stats.enter(depth);
        for v in branch_set {
            let (h, sub) = g.without_vertices(&[v]);
            let sub: Vec<usize> = sub.iter().map(|&i| map[i]).collect();
            chosen.push(map[v]);
            self.search(&h, &sub, chosen);
            chosen.pop();
        }
    }

    /// Smallest-first components whose union has more than `r` eigenvalues.
    fn designated_vertices(&self, g: &Graph) -> Vec<usize> {
        let comps = g.connected_components();
        let polys = component_polys(g);
        let mut order: Vec<usize> = (0..comps.len()).collect();
        order.sort_by_key(|&i| (comps[i].len(), comps[i][0]));
        let mut ledger = SpectrumLedger::new();
        let mut out = Vec::new();
        for i in order {
            if ledger.absorb(&polys[i]) > 0 {
                out.extend_from_slice(&comps[i]);
            }
            if ledger.count() > self.r {
                break;
            }
        }
        debug_assert!(ledger.count() > self.r);
        out.sort_unstable();
        out
    }
}
