use super::{Construction, Layout, ReducedInstance, SourceInstance};
use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::problem::{Instance, Kind};
use std::ops::Range;

/// Largest r-EEA instance the generator will build.
pub const REEA_VERTEX_LIMIT: usize = 1_000_000;

/// Graph used for each item's block of `s` vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ItemShape {
    #[default]
    Clique,
    Path,
    /// Needs every item to be at least 3.
    Cycle,
}

impl ItemShape {
    fn edges(self, s: usize) -> usize {
        match self {
            ItemShape::Clique => s * (s - 1) / 2,
            ItemShape::Path => s - 1,
            ItemShape::Cycle => s,
        }
    }

    fn build(self, g: &mut Graph, block: Range<usize>) {
        let vs: Vec<usize> = block.collect();
        match self {
            ItemShape::Clique => g.add_clique(&vs),
            ItemShape::Path | ItemShape::Cycle => {
                for w in vs.windows(2) {
                    g.add_edge(w[0], w[1]);
                }
                if self == ItemShape::Cycle {
                    g.add_edge(vs[0], vs[vs.len() - 1]);
                }
            }
        }
    }
}

/// Checks `b/4 < s < b/2` for every item and `sum = nb`; returns `n`.
fn validate(items: &[usize], b: usize) -> Result<usize> {
    if items.is_empty() || !items.len().is_multiple_of(3) {
        return Err(contract(format!(
            "need a positive multiple of 3 items, got {}",
            items.len()
        )));
    }
    let n = items.len() / 3;
    if let Some(&s) = items.iter().find(|&&s| 4 * s <= b || 2 * s >= b) {
        return Err(contract(format!(
            "item {s} is outside the open interval (b/4, b/2) for b={b}"
        )));
    }
    let total: usize = items.iter().sum();
    if total != n * b {
        return Err(contract(format!("items sum to {total}, expected n*b = {}", n * b)));
    }
    Ok(n)
}

/// Appends the item blocks, returning their ranges.
fn add_items(g: &mut Graph, items: &[usize], shape: ItemShape) -> Vec<Range<usize>> {
    items
        .iter()
        .map(|&s| {
            let first = g.add_vertices(s);
            shape.build(g, first..first + s);
            first..first + s
        })
        .collect()
}

fn add_cliques(g: &mut Graph, count: usize, size: usize) {
    for _ in 0..count {
        let first = g.add_vertices(size);
        g.add_clique(&(first..first + size).collect::<Vec<_>>());
    }
}

/// Items as blocks of the given shape, then `3nb` dummy `b`-cliques.
/// Budget `nb^2` plus the edges the item shapes leave out of a clique.
pub fn gen_2eea_from_3partition(items: &[usize], b: usize, shape: ItemShape) -> Result<ReducedInstance> {
    let n = validate(items, b)?;
    if shape == ItemShape::Cycle && items.iter().any(|&s| s < 3) {
        return Err(contract("cycle-shaped items need every item to be at least 3"));
    }
    let missing: usize = items.iter().map(|&s| s * (s - 1) / 2 - shape.edges(s)).sum();
    let mut g = Graph::empty(0);
    let blocks = add_items(&mut g, items, shape);
    add_cliques(&mut g, 3 * n * b, b);
    let mapper = match shape {
        ItemShape::Clique => "merge the three item cliques of each triple into one clique",
        _ => "complete each item block and merge the three blocks of each triple into one clique",
    };
    Ok(ReducedInstance {
        construction: Construction::EeaFrom3Partition,
        source: SourceInstance::ThreePartition {
            items: items.to_vec(),
            b,
        },
        instance: Instance::new(Kind::Eea, 2, n * b * b + missing, g)?,
        mapper,
        notes: Vec::new(),
        layout: Layout::Items { blocks },
    })
}

/// Item cliques, `2nb^2 + 1` cliques of size `b`, and `2nb^2 + 1` cliques
/// of each size `L, L+1, ..., L+r-3` with `L = 6nb^3`. Budget `nb^2`.
///
/// Refuses with [`Error::Capacity`] above [`REEA_VERTEX_LIMIT`] vertices.
pub fn gen_reea_from_3partition(items: &[usize], b: usize, r: usize) -> Result<ReducedInstance> {
    let n = validate(items, b)?;
    if r < 3 {
        return Err(contract(format!("construction needs r >= 3, got {r}")));
    }
    let too_big = |total: u128| Error::Capacity {
        what: "r-EEA gadget vertices".into(),
        pool: usize::try_from(total).unwrap_or(usize::MAX),
        combinations: total,
        limit: REEA_VERTEX_LIMIT as u128,
    };
    let (n128, b128) = (n as u128, b as u128);
    let copies = 2 * n128 * b128 * b128 + 1;
    let l = 6 * n128 * b128 * b128 * b128;
    let levels = (r - 2) as u128;
    let big = copies * (levels * l + levels * (levels - 1) / 2);
    let total = n128 * b128 + copies * b128 + big;
    if total > REEA_VERTEX_LIMIT as u128 {
        return Err(too_big(total));
    }
    let (copies, l) = (copies as usize, l as usize);
    let mut g = Graph::empty(0);
    let blocks = add_items(&mut g, items, ItemShape::Clique);
    add_cliques(&mut g, copies, b);
    for i in 0..=r - 3 {
        add_cliques(&mut g, copies, l + i);
    }
    debug_assert_eq!(g.n() as u128, total);
    Ok(ReducedInstance {
        construction: Construction::ReeaFrom3Partition,
        source: SourceInstance::ThreePartition {
            items: items.to_vec(),
            b,
        },
        instance: Instance::new(Kind::Eea, r, n * b * b, g)?,
        mapper: "merge the three item cliques of each triple into one clique",
        notes: Vec::new(),
        layout: Layout::Items { blocks },
    })
}

#[cfg(test)]
mod tests {
    use super::super::{map_forward_solution, SourceSolution};
    use super::*;
    use crate::oracle::verify;
    use crate::spectral::distinct_eigenvalue_count;

    #[test]
    fn six_ones() {
        let items = [1; 6];
        let red = gen_2eea_from_3partition(&items, 3, ItemShape::Clique).unwrap();
        assert_eq!(red.instance.graph.n(), 6 + 18 * 3);
        assert_eq!(red.instance.graph.cluster_profile().unwrap().len(), 24);
        assert_eq!(red.budget(), 18);
        let sol = map_forward_solution(&red, &SourceSolution::Triples(vec![[0, 1, 2], [3, 4, 5]])).unwrap();
        let v = verify(&red.instance, &sol).unwrap();
        assert!(v.accepted);
        assert_eq!(v.size, 6);
    }

    #[test]
    fn validation() {
        assert!(gen_2eea_from_3partition(&[1, 1, 2], 3, ItemShape::Clique).is_err());
        assert!(gen_2eea_from_3partition(&[1, 1], 2, ItemShape::Clique).is_err());
        assert!(gen_2eea_from_3partition(&[2, 2, 3], 7, ItemShape::Cycle).is_err());
        assert!(gen_2eea_from_3partition(&[3, 3, 4], 10, ItemShape::Cycle).is_ok());
        assert!(gen_2eea_from_3partition(&[], 3, ItemShape::Clique).is_err());
        // 3 is not above 12/4
        assert!(gen_2eea_from_3partition(&[3, 4, 5], 12, ItemShape::Clique).is_err());
    }

    #[test]
    fn path_and_cycle_budgets() {
        let red = gen_2eea_from_3partition(&[3, 3, 4], 10, ItemShape::Path).unwrap();
        // missing: 1 + 1 + 3
        assert_eq!(red.budget(), 100 + 5);
        let red = gen_2eea_from_3partition(&[3, 3, 4], 10, ItemShape::Cycle).unwrap();
        assert_eq!(red.budget(), 100 + 2);
        let sol = map_forward_solution(&red, &SourceSolution::Triples(vec![[0, 1, 2]])).unwrap();
        assert_eq!(sol.len(), 45 - 10);
        assert!(verify(&red.instance, &sol).unwrap().accepted);
    }

    #[test]
    fn reea_six_ones() {
        let red = gen_reea_from_3partition(&[1; 6], 3, 3).unwrap();
        let g = &red.instance.graph;
        assert_eq!(g.n(), 6 + 37 * 3 + 37 * 324);
        assert_eq!(red.budget(), 18);
        let sol = map_forward_solution(&red, &SourceSolution::Triples(vec![[0, 1, 2], [3, 4, 5]])).unwrap();
        let v = verify(&red.instance, &sol).unwrap();
        assert!(v.accepted);
        assert_eq!(v.distinct_count, 3);
        assert_eq!(distinct_eigenvalue_count(g), 4);
    }

    #[test]
    fn reea_refuses_huge() {
        match gen_reea_from_3partition(&[4, 4, 5, 4, 4, 5], 13, 3) {
            Err(Error::Capacity { combinations, .. }) => assert!(combinations > 1_000_000),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }
}
