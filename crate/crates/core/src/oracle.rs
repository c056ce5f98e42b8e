//! Brute-force ground truth: verification and exhaustive minimum solutions.

use crate::error::{Error, Result};
use crate::graph::{ClusterProfile, Graph};
use crate::problem::{Edit, EditOp, Instance, Kind, Solution};
use crate::spectral::distinct_eigenvalue_count;
use itertools::Itertools;
use rayon::prelude::*;

/// Largest number of candidate subsets [`solve_exhaustive`] will visit.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

const CHUNK: usize = 4096;

/// Structure certifying a count of at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// No vertices left.
    Empty,
    /// No edges; the only eigenvalue is 0.
    Edgeless,
    /// Disjoint union of equal cliques.
    UniformCluster(ClusterProfile),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub accepted: bool,
    pub size: usize,
    pub within_budget: bool,
    /// Exact count of the modified graph.
    pub distinct_count: usize,
    /// Set for `r <= 2` when the modified graph has the matching structure.
    pub witness: Option<Witness>,
}

fn witness(g: &Graph, r: usize) -> Option<Witness> {
    if g.n() == 0 {
        return Some(Witness::Empty);
    }
    if r == 1 {
        return (g.m() == 0).then_some(Witness::Edgeless);
    }
    g.cluster_profile()
        .filter(ClusterProfile::is_uniform)
        .map(Witness::UniformCluster)
}

/// Checks a claimed solution against the definition.
pub fn verify(inst: &Instance, sol: &Solution) -> Result<Verification> {
    let h = inst.apply(sol)?.graph;
    let distinct_count = distinct_eigenvalue_count(&h);
    let size = sol.len();
    let within_budget = size <= inst.k;
    let witness = if inst.r <= 2 { witness(&h, inst.r) } else { None };
    if inst.r <= 2 {
        debug_assert_eq!(
            witness.is_some(),
            distinct_count <= inst.r,
            "structural and spectral tests disagree"
        );
    }
    Ok(Verification {
        accepted: within_budget && distinct_count <= inst.r,
        size,
        within_budget,
        distinct_count,
        witness,
    })
}

/// Whether `g` has at most `r` distinct eigenvalues.
///
/// Uses the structural characterisation for `r <= 2`. For larger `r` a
/// component of diameter `d` already forces `d + 1` values, which rejects
/// most graphs before any polynomial arithmetic.
pub fn within_r(g: &Graph, r: usize) -> bool {
    match r {
        0 => g.n() == 0,
        1 => g.m() == 0,
        2 => g.cluster_profile().is_some_and(|p| p.is_uniform()),
        _ => g.component_diameters().iter().all(|&d| d < r) && distinct_eigenvalue_count(g) <= r,
    }
}

/// `sum_{i <= k} C(pool, i)`, saturating.
pub fn subsets_up_to(pool: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(pool) {
        total = total.saturating_add(c);
        c = c.saturating_mul((pool - i) as u128) / (i as u128 + 1);
    }
    total
}

enum Pool {
    Vertices(usize),
    Pairs(Vec<(usize, usize)>),
}

fn pool(inst: &Instance) -> Pool {
    let g = &inst.graph;
    let n = g.n();
    match inst.kind {
        Kind::Evd => Pool::Vertices(n),
        Kind::Eed => Pool::Pairs(g.edges().collect()),
        Kind::Eea => Pool::Pairs(g.non_edges().collect()),
        Kind::Eee => Pool::Pairs((0..n).tuple_combinations().collect()),
    }
}

/// Minimum-size solution of size at most `k`, or `None`.
///
/// Candidates are visited by increasing size and lexicographically within
/// a size, so the result is deterministic. Refuses with
/// [`Error::Capacity`] when the search space exceeds [`ENUMERATION_LIMIT`].
pub fn solve_exhaustive(inst: &Instance) -> Result<Option<Solution>> {
    let pool = pool(inst);
    let size = match &pool {
        Pool::Vertices(n) => *n,
        Pool::Pairs(p) => p.len(),
    };
    let combinations = subsets_up_to(size, inst.k);
    if combinations > ENUMERATION_LIMIT {
        return Err(Error::Capacity {
            what: format!("exhaustive {} search with k={}", inst.kind, inst.k),
            pool: size,
            combinations,
            limit: ENUMERATION_LIMIT,
        });
    }
    let g = &inst.graph;
    let r = inst.r;
    let works = |subset: &[usize]| -> bool {
        match &pool {
            Pool::Vertices(_) => within_r(&g.without_vertices(subset).0, r),
            Pool::Pairs(pairs) => {
                let mut h = g.clone();
                for &i in subset {
                    let (u, v) = pairs[i];
                    if !h.remove_edge(u, v) {
                        h.add_edge(u, v);
                    }
                }
                within_r(&h, r)
            }
        }
    };
    for s in 0..=inst.k.min(size) {
        let mut combos = (0..size).combinations(s);
        loop {
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            if let Some(found) = chunk.into_par_iter().find_first(|c| works(c)) {
                return Ok(Some(materialize(inst, &pool, &found)));
            }
        }
    }
    Ok(None)
}

fn materialize(inst: &Instance, pool: &Pool, subset: &[usize]) -> Solution {
    match pool {
        Pool::Vertices(_) => Solution::vertices(subset.to_vec()),
        Pool::Pairs(pairs) => Solution::edits(
            subset
                .iter()
                .map(|&i| {
                    let (u, v) = pairs[i];
                    let op = if inst.graph.has_edge(u, v) {
                        EditOp::Delete
                    } else {
                        EditOp::Add
                    };
                    Edit::new(u, v, op)
                })
                .collect(),
        ),
    }
}

/// Exact 2-EED by searching vertex partitions into equal cliques of `g`.
///
/// Edge deletion keeps every vertex, so the result is `n/x` disjoint
/// `K_x`'s drawn from `g`; the fewest deletions come from the largest
/// feasible `x`. Returns the minimum deletion set, whatever its size.
pub fn min_2eed_by_partition(g: &Graph) -> Solution {
    let n = g.n();
    for x in (1..=n.max(1)).rev() {
        if !n.is_multiple_of(x) {
            continue;
        }
        if let Some(blocks) = partition_into_cliques(g, x) {
            let mut block_of = vec![0; n];
            for (b, block) in blocks.iter().enumerate() {
                for &v in block {
                    block_of[v] = b;
                }
            }
            return Solution::deletions(g.edges().filter(|&(u, v)| block_of[u] != block_of[v]));
        }
    }
    Solution::Edits(Vec::new())
}

/// Partition of all vertices into cliques of `g` of order `x`, if any.
pub fn partition_into_cliques(g: &Graph, x: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if x == 0 || !n.is_multiple_of(x) {
        return None;
    }
    if (0..n).any(|v| g.degree(v) + 1 < x) {
        return None;
    }
    let mut used = vec![false; n];
    let mut blocks = Vec::new();
    fill(g, x, &mut used, &mut blocks).then_some(blocks)
}

fn fill(g: &Graph, x: usize, used: &mut [bool], blocks: &mut Vec<Vec<usize>>) -> bool {
    let Some(v) = used.iter().position(|u| !u) else {
        return true;
    };
    let cand: Vec<usize> = g.neighbors(v).iter().filter(|&w| !used[w]).collect();
    let mut block = vec![v];
    extend_clique(g, x, &cand, 0, &mut block, used, blocks)
}

fn extend_clique(
    g: &Graph,
    x: usize,
    cand: &[usize],
    from: usize,
    block: &mut Vec<usize>,
    used: &mut [bool],
    blocks: &mut Vec<Vec<usize>>,
) -> bool {
    if block.len() == x {
        for &w in block.iter() {
            used[w] = true;
        }
        blocks.push(block.clone());
        if fill(g, x, used, blocks) {
            return true;
        }
        blocks.pop();
        for &w in block.iter() {
            used[w] = false;
        }
        return false;
    }
    for i in from..cand.len() {
        if cand.len() - i < x - block.len() {
            break;
        }
        let w = cand[i];
        if block.iter().all(|&b| g.has_edge(b, w)) {
            block.push(w);
            if extend_clique(g, x, cand, i + 1, block, used, blocks) {
                return true;
            }
            block.pop();
        }
    }
    false
}
