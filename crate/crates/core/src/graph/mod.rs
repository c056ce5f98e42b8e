//! Simple undirected graphs on dense vertex indices `0..n`.

mod algo;
mod bits;
pub mod families;
pub(crate) mod io;

pub use algo::{apply_modification, ClusterProfile, Diameter, Modified};
pub use bits::NeighborSet;
pub use io::{parse_graph, serialize_graph};

use crate::error::{contract, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Simple undirected graph with symmetric bitset adjacency rows.
///
/// Mutation is through `&mut self` only; a shared `&Graph` is immutable and
/// can be handed to any number of threads.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<NeighborSet>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![NeighborSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(contract(format!("edge ({u},{v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(contract(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &NeighborSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Inserts `{u, v}`; returns `false` if it was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    /// Removes `{u, v}`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    /// Adds every missing edge among `vertices`.
    pub fn add_clique(&mut self, vertices: &[usize]) {
        let all: NeighborSet = vertices.iter().copied().collect();
        let mut added = 0;
        for u in all.iter() {
            let before = self.adj[u].len();
            self.adj[u].union_with(&all);
            self.adj[u].remove(u);
            added += self.adj[u].len() - before;
        }
        self.m += added / 2;
    }

    /// Appends `count` isolated vertices and returns the index of the first.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.n();
        self.adj.resize(first + count, NeighborSet::new());
        first
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Subgraph induced by `keep` (ascending, distinct); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            let row: NeighborSet = self.adj[v]
                .iter()
                .map(|w| index[w])
                .filter(|&w| w != usize::MAX)
                .collect();
            g.m += row.len();
            g.adj[i] = row;
        }
        g.m /= 2;
        g
    }

    /// Deletes `removed` and relabels; the returned map sends new indices to old.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n()).filter(|v| !gone.contains(v)).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Vertex `v` of `other` becomes `self.n() + v`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = self.clone();
        g.add_vertices(other.n());
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Pairs `{u, v}`, `u < v`, that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }
}

/// Set of unordered vertex pairs, stored canonically as `(min, max)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `{u, v}`; returns `false` if already present. Panics on `u == v`.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop pair ({u},{u})");
        self.0.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn induced_and_removal() {
        let g = families::path(4);
        let (h, map) = g.without_vertices(&[1]);
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(h.m(), 1);
    }

    #[test]
    fn complement_of_path() {
        let g = families::path(3).complement();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(families::path(3).non_edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn union_offsets() {
        let g = families::complete(3).disjoint_union(&families::complete(2));
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(3, 4));
    }
}
