use super::matching::max_matching;
use crate::error::{contract, Result};
use crate::fpt::{cluster_leaf_eed_cost, eed_leaf_deletions};
use crate::graph::Graph;
use crate::problem::Solution;

/// Optimal 2-EED on a triangle-free graph. Only `K_1` and `K_2` targets
/// exist, so the optimum keeps a perfect matching when there is one and
/// deletes every edge otherwise.
pub fn trianglefree_2eed_optimum(g: &Graph) -> Result<Solution> {
    if let Some((a, b, c)) = g.find_triangle() {
        return Err(contract(format!("graph has triangle ({a},{b},{c})")));
    }
    let m = max_matching(g);
    if m.is_perfect(g.n()) {
        Ok(Solution::deletions(
            g.edges().filter(|e| m.pairs.binary_search(e).is_err()),
        ))
    } else {
        Ok(Solution::deletions(g.edges()))
    }
}

pub fn solve_2eed_trianglefree(g: &Graph, k: usize) -> Result<Option<Solution>> {
    let sol = trianglefree_2eed_optimum(g)?;
    Ok((sol.len() <= k).then_some(sol))
}

/// Optimal 2-EED on a cluster graph via the gcd of its clique sizes.
pub fn cluster_2eed_optimum(g: &Graph) -> Result<Solution> {
    let cliques = g
        .cluster_components()
        .ok_or_else(|| contract("input graph is not a cluster graph"))?;
    let profile = g.cluster_profile().unwrap();
    let leaf = cluster_leaf_eed_cost(&profile);
    Ok(Solution::deletions(eed_leaf_deletions(&cliques, leaf.x.max(1))))
}

pub fn solve_2eed_cluster(g: &Graph, k: usize) -> Result<Option<Solution>> {
    let sol = cluster_2eed_optimum(g)?;
    Ok((sol.len() <= k).then_some(sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::families::*;

    #[test]
    fn triangle_free_examples() {
        assert_eq!(solve_2eed_trianglefree(&cycle(4), 2).unwrap().unwrap().len(), 2);
        assert_eq!(solve_2eed_trianglefree(&star(3), 2).unwrap(), None);
        assert_eq!(trianglefree_2eed_optimum(&star(3)).unwrap().len(), 3);
        assert_eq!(
            solve_2eed_trianglefree(&path(2), 0).unwrap(),
            Some(Solution::Edits(vec![]))
        );
        match solve_2eed_trianglefree(&complete(3), 5) {
            Err(Error::Contract(msg)) => assert!(msg.contains("(0,1,2)")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cluster_examples() {
        assert_eq!(cluster_2eed_optimum(&cluster(&[4, 2])).unwrap().len(), 4);
        assert_eq!(cluster_2eed_optimum(&cluster(&[3, 3])).unwrap().len(), 0);
        assert_eq!(cluster_2eed_optimum(&cluster(&[3, 2])).unwrap().len(), 4);
        assert!(solve_2eed_cluster(&path(3), 3).is_err());
    }
}
