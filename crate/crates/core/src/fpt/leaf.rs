//! Closed-form optima on cluster graphs.

use crate::graph::ClusterProfile;
use num_integer::Integer;

/// Minimum modification count together with the target clique order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeafCost {
    pub cost: usize,
    pub x: usize,
}

/// Fewest vertex deletions turning the cluster graph into equal cliques.
///
/// Keeping cliques of order `x` retains `x * mu(x)` vertices, where `mu(x)`
/// counts cliques of order at least `x`. Only existing sizes can be optimal.
/// Ties go to the smaller `x`. An empty profile costs nothing with `x = 0`.
pub fn cluster_leaf_evd_cost(profile: &ClusterProfile) -> LeafCost {
    let total = profile.total();
    let mut best = LeafCost { cost: total, x: 0 };
    let mut sizes = profile.sizes().to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    for &x in &sizes {
        let cost = total - x * profile.count_at_least(x);
        if cost < best.cost || best.x == 0 {
            best = LeafCost { cost, x };
        }
    }
    best
}

/// Fewest edge deletions turning the cluster graph into equal cliques.
///
/// The target order must divide every clique, and splitting a `K_s` into
/// `K_x` blocks deletes `s(s-x)/2` edges, so the gcd is optimal.
pub fn cluster_leaf_eed_cost(profile: &ClusterProfile) -> LeafCost {
    let x = profile.sizes().iter().fold(0, |g, &s| g.gcd(&s));
    let cost = profile.sizes().iter().map(|&s| s * (s - x) / 2).sum();
    LeafCost { cost, x }
}

/// Vertices to delete for target `x`: all of every clique smaller than `x`,
/// and the lowest-index `s - x` of every larger one. Cliques are ascending
/// vertex lists.
pub fn evd_leaf_deletions(cliques: &[Vec<usize>], x: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for c in cliques {
        if c.len() < x {
            out.extend_from_slice(c);
        } else {
            out.extend_from_slice(&c[..c.len() - x]);
        }
    }
    out.sort_unstable();
    out
}

/// Edges to delete for target `x`: cut each clique into consecutive blocks
/// of `x` vertices and drop every edge between blocks.
pub fn eed_leaf_deletions(cliques: &[Vec<usize>], x: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in cliques {
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if i / x != j / x {
                    out.push((c[i].min(c[j]), c[i].max(c[j])));
                }
            }
        }
    }
    out.sort_unstable();
    out
}
