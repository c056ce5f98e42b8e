use super::{Construction, Layout, ReducedInstance, SourceInstance};
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::{Instance, Kind};

fn require_order_divisible_by_3(g: &Graph) -> Result<()> {
    if !g.n().is_multiple_of(3) {
        return Err(contract(format!("source has {} vertices, not a multiple of 3", g.n())));
    }
    Ok(())
}

/// `K_4`-free: no edge has two adjacent common neighbours.
fn has_k4(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let common: Vec<usize> = g.neighbors(u).intersection(g.neighbors(v)).collect();
        common.iter().any(|&x| {
            g.neighbors(x)
                .intersection(g.neighbors(u))
                .any(|y| y != v && common.contains(&y))
        })
    })
}

/// `g` plus `m - n + 1` dummy cliques of every size `3..=r+1`. Budget
/// `m - n`.
pub fn gen_reed_from_triangle_partition(g: &Graph, r: usize) -> Result<ReducedInstance> {
    require_order_divisible_by_3(g)?;
    if r < 3 {
        return Err(contract(format!("construction needs r >= 3, got {r}")));
    }
    if g.find_triangle().is_none() || has_k4(g) {
        return Err(contract("source clique number is not 3"));
    }
    let (n, m) = (g.n(), g.m());
    let budget = m
        .checked_sub(n)
        .ok_or_else(|| contract(format!("source has fewer edges ({m}) than vertices ({n})")))?;
    let copies = budget + 1;
    let mut h = g.clone();
    for size in 3..=r + 1 {
        for _ in 0..copies {
            let first = h.add_vertices(size);
            h.add_clique(&(first..first + size).collect::<Vec<_>>());
        }
    }
    Ok(ReducedInstance {
        construction: Construction::ReedFromTriangles,
        source: SourceInstance::TrianglePartition { graph: g.clone() },
        instance: Instance::new(Kind::Eed, r, budget, h)?,
        mapper: "delete the source edges outside the partition's triangles",
        notes: Vec::new(),
        layout: Layout::Identity,
    })
}

/// Every vertex `v` gets two pendant triangles, each attached by a single
/// dummy edge from `v`. Budget `m + n`.
///
/// Layout: source vertices `0..n`, then per vertex six gadget vertices; the
/// first of each triple is the one joined to `v`.
pub fn gen_2eee_from_triangle_partition(g: &Graph) -> Result<ReducedInstance> {
    require_order_divisible_by_3(g)?;
    let (n, m) = (g.n(), g.m());
    let mut h = g.clone();
    let mut dummies = Vec::with_capacity(n);
    for v in 0..n {
        let mut pair = [(0, 0); 2];
        for slot in pair.iter_mut() {
            let a = h.add_vertices(3);
            h.add_clique(&[a, a + 1, a + 2]);
            h.add_edge(v, a);
            *slot = (v, a);
        }
        dummies.push(pair);
    }
    assert_eq!(h.n(), 7 * n);
    assert_eq!(h.m(), m + 8 * n);
    assert_eq!(
        (n..h.n()).filter(|&x| h.degree(x) == 2).count(),
        4 * n,
        "saviour vertices"
    );
    Ok(ReducedInstance {
        construction: Construction::EeeFromTriangles,
        source: SourceInstance::TrianglePartition { graph: g.clone() },
        instance: Instance::new(Kind::Eee, 2, m + n, h)?,
        mapper: "delete all 2n dummy edges and the source edges outside the partition's triangles",
        notes: Vec::new(),
        layout: Layout::DummyEdges { dummies },
    })
}
