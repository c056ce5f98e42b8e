//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n^3)).

use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Vertex-disjoint edges, each stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        for p in pairs.iter_mut() {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.pairs.len() == n
    }

    /// Edges of `g`, no shared endpoints.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.pairs.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex at
    /// the end of an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(w) = g.neighbors(v).iter().find(|&w| b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching::from_pairs(
        (0..n)
            .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
            .map(|v| (v, b.mate[v]))
            .collect(),
    )
}
