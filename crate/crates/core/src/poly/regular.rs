use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::Solution;

/// Target reached by the 2-regular solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleTarget {
    /// Keep the triangles, delete every longer cycle.
    Triangles,
    /// Cut every cycle into disjoint edges.
    Edges,
    /// Delete a vertex cover of every cycle.
    Isolated,
}

/// Vertices of each cycle in traversal order, starting at its smallest
/// vertex and moving to the smaller neighbour.
fn cycles(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components()
        .into_iter()
        .map(|comp| {
            let start = comp[0];
            let mut cyc = vec![start];
            let mut prev = start;
            let mut cur = g.neighbors(start).first().unwrap();
            while cur != start {
                cyc.push(cur);
                let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
            cyc
        })
        .collect()
}

/// Optimal 2-EVD on a disjoint union of cycles. Compares the three possible
/// uniform targets and breaks ties in the order triangles, edges, isolated.
pub fn two_regular_2evd_optimum(g: &Graph) -> Result<(Solution, CycleTarget)> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 2) {
        return Err(contract(format!("vertex {v} has degree {}, expected 2", g.degree(v))));
    }
    let cycles = cycles(g);
    let mut plans: Vec<(CycleTarget, Vec<usize>)> = Vec::new();

    let tri: Vec<usize> = cycles.iter().filter(|c| c.len() != 3).flatten().copied().collect();
    plans.push((CycleTarget::Triangles, tri));

    let mut edges = Vec::new();
    for c in &cycles {
        let l = c.len();
        let pairs = l / 3;
        // keep (3j, 3j+1) for j < pairs
        edges.extend((0..l).filter(|&i| !(i / 3 < pairs && i % 3 < 2)).map(|i| c[i]));
    }
    plans.push((CycleTarget::Edges, edges));

    let mut cover = Vec::new();
    for c in &cycles {
        let l = c.len();
        cover.extend(
            (0..l)
                .filter(|&i| i % 2 == 1 || (l % 2 == 1 && i == l - 1))
                .map(|i| c[i]),
        );
    }
    plans.push((CycleTarget::Isolated, cover));

    let (target, del) = plans.into_iter().min_by_key(|(_, d)| d.len()).unwrap();
    Ok((Solution::vertices(del), target))
}

pub fn solve_2evd_2regular(g: &Graph, k: usize) -> Result<Option<Solution>> {
    let (sol, _) = two_regular_2evd_optimum(g)?;
    Ok((sol.len() <= k).then_some(sol))
}
