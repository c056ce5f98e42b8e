use super::matching::Matching;
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::Solution;

/// Rooted orientation of a forest: every component rooted at its smallest
/// vertex, vertices listed parents-before-children.
struct Rooted {
    order: Vec<usize>,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
}

fn root_forest(g: &Graph) -> Result<Rooted> {
    if !g.is_forest() {
        return Err(contract("input graph is not a forest"));
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for w in g.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    children[v].push(w);
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    Ok(Rooted {
        order,
        parent,
        children,
    })
}

/// Minimum vertex cover of a forest.
pub fn tree_min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    let t = root_forest(g)?;
    let n = g.n();
    // take[v]: v in the cover; skip[v]: v not in the cover
    let mut take = vec![0usize; n];
    let mut skip = vec![0usize; n];
    for &v in t.order.iter().rev() {
        take[v] = 1 + t.children[v].iter().map(|&c| take[c].min(skip[c])).sum::<usize>();
        skip[v] = t.children[v].iter().map(|&c| take[c]).sum();
    }
    let mut in_cover = vec![false; n];
    for &v in &t.order {
        let p = t.parent[v];
        // an uncovered parent forces v into the cover; otherwise take the
        // cheaper state, preferring to leave v out
        in_cover[v] = (p != usize::MAX && !in_cover[p]) || take[v] < skip[v];
    }
    Ok((0..n).filter(|&v| in_cover[v]).collect())
}

/// Maximum induced matching of a forest.
///
/// States per vertex `v` of its rooted subtree:
/// `free[v]`: `v` unmatched;
/// `down[v]`: `v` matched to one of its children;
/// `alone[v]`: `v` unmatched and all its children unmatched, which is what a
/// vertex matched to its parent requires below it.
pub fn tree_max_induced_matching(g: &Graph) -> Result<Matching> {
    let t = root_forest(g)?;
    let n = g.n();
    const NEG: i64 = i64::MIN / 4;
    let mut free = vec![0i64; n];
    let mut down = vec![NEG; n];
    let mut alone = vec![0i64; n];
    let mut pick = vec![usize::MAX; n];
    for &v in t.order.iter().rev() {
        let ch = &t.children[v];
        free[v] = ch.iter().map(|&c| free[c].max(down[c])).sum();
        alone[v] = ch.iter().map(|&c| free[c]).sum();
        let base: i64 = ch.iter().map(|&c| free[c]).sum();
        for &c in ch {
            let val = 1 + base - free[c] + alone[c];
            if val > down[v] {
                down[v] = val;
                pick[v] = c;
            }
        }
    }
    // Walk down choosing states; `want` is the state demanded of each vertex.
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Best,
        Free,
        Alone,
        Matched,
    }
    let mut want = vec![State::Best; n];
    let mut pairs = Vec::new();
    for &v in &t.order {
        let state = match want[v] {
            State::Best if down[v] > free[v] => State::Matched,
            State::Best => State::Free,
            s => s,
        };
        match state {
            State::Matched => {
                let c = pick[v];
                pairs.push((v, c));
                for &w in &t.children[v] {
                    want[w] = if w == c { State::Alone } else { State::Free };
                }
            }
            State::Free => {
                for &w in &t.children[v] {
                    want[w] = State::Best;
                }
            }
            State::Alone => {
                // v is matched to its parent; children stay unmatched
                for &w in &t.children[v] {
                    want[w] = State::Free;
                }
            }
            State::Best => unreachable!(),
        }
    }
    Ok(Matching::from_pairs(pairs))
}

/// Which uniform target a forest solution keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestTarget {
    Isolated,
    Edges,
}

/// Optimal 2-EVD on a forest: either delete a vertex cover (all `K_1`) or
/// keep a maximum induced matching (all `K_2`). Larger cliques need
/// triangles.
pub fn forest_2evd_optimum(g: &Graph) -> Result<(Solution, ForestTarget)> {
    let cover = tree_min_vertex_cover(g)?;
    let im = tree_max_induced_matching(g)?;
    if cover.len() <= g.n() - 2 * im.len() {
        return Ok((Solution::vertices(cover), ForestTarget::Isolated));
    }
    let mut keep = vec![false; g.n()];
    for &(u, v) in &im.pairs {
        keep[u] = true;
        keep[v] = true;
    }
    Ok((
        Solution::vertices((0..g.n()).filter(|&v| !keep[v]).collect()),
        ForestTarget::Edges,
    ))
}

pub fn solve_2evd_forest(g: &Graph, k: usize) -> Result<Option<Solution>> {
    let (sol, _) = forest_2evd_optimum(g)?;
    Ok((sol.len() <= k).then_some(sol))
}
