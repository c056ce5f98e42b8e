use super::{EdgeSet, Graph};
use crate::error::{contract, Result};
use std::collections::{BTreeSet, VecDeque};

/// Multiset of clique orders of a cluster graph, in component order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClusterProfile {
    sizes: Vec<usize>,
}

impl ClusterProfile {
    /// Panics if any size is zero.
    pub fn new(sizes: Vec<usize>) -> Self {
        assert!(sizes.iter().all(|&s| s > 0), "clique sizes must be positive");
        ClusterProfile { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Total vertex count.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// All cliques share one size. The empty profile counts as uniform.
    pub fn is_uniform(&self) -> bool {
        self.sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of cliques of order at least `x`.
    pub fn count_at_least(&self, x: usize) -> usize {
        self.sizes.iter().filter(|&&s| s >= x).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Graph {
    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.neighbors(u).iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Lexicographically smallest induced path `a - b - c` (ordered by `b`,
    /// then `a`, then `c`, with `a < c`), or `None` iff the graph is a
    /// cluster graph.
    pub fn find_induced_p3(&self) -> Option<(usize, usize, usize)> {
        for b in 0..self.n() {
            let nb = self.neighbors(b);
            for a in nb.iter() {
                // c in N(b) \ N(a), c > a, c != a
                let na = self.neighbors(a);
                if let Some(c) = nb.difference(na).find(|&c| c > a) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Components as vertex lists when every component is a clique.
    pub fn cluster_components(&self) -> Option<Vec<Vec<usize>>> {
        let comps = self.connected_components();
        for c in &comps {
            if c.iter().any(|&v| self.degree(v) != c.len() - 1) {
                return None;
            }
        }
        Some(comps)
    }

    pub fn cluster_profile(&self) -> Option<ClusterProfile> {
        self.cluster_components()
            .map(|comps| ClusterProfile::new(comps.iter().map(Vec::len).collect()))
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        self.bfs(s).0
    }

    fn bfs(&self, s: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Eccentricity maximum per component, in component order.
    pub fn component_diameters(&self) -> Vec<usize> {
        self.connected_components()
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&s| {
                        let dist = self.bfs_distances(s);
                        comp.iter().map(|&t| dist[t]).max().unwrap_or(0)
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Largest distance between two vertices; infinite when disconnected.
    /// The empty graph and `K_1` have diameter 0.
    pub fn diameter(&self) -> Diameter {
        let n = self.n();
        let mut best = 0;
        for s in 0..n {
            let d = self.bfs_distances(s);
            for &x in &d {
                if x == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(x);
            }
        }
        Diameter::Finite(best)
    }

    /// A shortest path with exactly `len` edges, as its `len + 1` vertices.
    ///
    /// Sources are scanned in ascending order, BFS visits neighbours in
    /// ascending order, and the first vertex reached at distance `len` wins,
    /// so the result is deterministic. Any such path is a geodesic.
    pub fn geodesic_with_edges(&self, len: usize) -> Option<Vec<usize>> {
        for s in 0..self.n() {
            let (dist, parent) = self.bfs(s);
            if let Some(t) = (0..self.n()).find(|&t| dist[t] == len) {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
        }
        None
    }

    /// Some triangle `(a, b, c)` with `a < b < c`, lexicographically first.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.edges() {
            if let Some(c) = self.neighbors(a).intersection(self.neighbors(b)).find(|&c| c > b) {
                return Some((a, b, c));
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(a, b)| !self.neighbors(a).intersects(self.neighbors(b)))
    }

    /// Common degree if the graph is regular. The empty graph is 0-regular.
    pub fn is_d_regular(&self) -> Option<usize> {
        let d = if self.n() == 0 { 0 } else { self.degree(0) };
        (0..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.connected_components().len() == self.n()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u).iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Result of [`apply_modification`]: the modified graph and, for each of its
/// vertices, the original index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modified {
    pub graph: Graph,
    pub map: Vec<usize>,
}

/// Deletes `del_e`, adds `add_e`, then removes `del_v` and relabels in order.
pub fn apply_modification(g: &Graph, del_v: &[usize], del_e: &EdgeSet, add_e: &EdgeSet) -> Result<Modified> {
    let n = g.n();
    let mut gone = BTreeSet::new();
    for &v in del_v {
        if v >= n {
            return Err(contract(format!("deleted vertex {v} is outside 0..{n}")));
        }
        if !gone.insert(v) {
            return Err(contract(format!("vertex {v} deleted twice")));
        }
    }
    let mut h = g.clone();
    for (u, v) in del_e.iter() {
        if v >= n {
            return Err(contract(format!("deleted edge ({u},{v}) is outside 0..{n}")));
        }
        if gone.contains(&u) || gone.contains(&v) {
            return Err(contract(format!("deleted edge ({u},{v}) touches a deleted vertex")));
        }
        if !h.remove_edge(u, v) {
            return Err(contract(format!("deleted edge ({u},{v}) is not an edge")));
        }
    }
    for (u, v) in add_e.iter() {
        if v >= n {
            return Err(contract(format!("added edge ({u},{v}) is outside 0..{n}")));
        }
        if gone.contains(&u) || gone.contains(&v) {
            return Err(contract(format!("added edge ({u},{v}) touches a deleted vertex")));
        }
        if g.has_edge(u, v) {
            return Err(contract(format!("added edge ({u},{v}) is already an edge")));
        }
        h.add_edge(u, v);
    }
    let del: Vec<usize> = gone.into_iter().collect();
    let (graph, map) = h.without_vertices(&del);
    Ok(Modified { graph, map })
}
