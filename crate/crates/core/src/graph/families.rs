//! Named graph families used across tests, examples, and generators.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    let all: Vec<usize> = (0..n).collect();
    g.add_clique(&all);
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Disjoint union of cliques of the given sizes, in order.
pub fn cluster(sizes: &[usize]) -> Graph {
    let mut g = Graph::empty(sizes.iter().sum());
    let mut start = 0;
    for &s in sizes {
        let members: Vec<usize> = (start..start + s).collect();
        g.add_clique(&members);
        start += s;
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// The 3-dimensional hypercube `Q_3`.
pub fn cube() -> Graph {
    let mut g = Graph::empty(8);
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    g
}

/// Triangular prism `K_3 □ K_2`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("static edge list")
}

/// Octahedron `K_{2,2,2}`.
pub fn octahedron() -> Graph {
    let mut g = complete(6);
    for i in 0..3 {
        g.remove_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Möbius–Kantor graph, the generalized Petersen graph `GP(8, 3)`.
pub fn mobius_kantor() -> Graph {
    let mut g = Graph::empty(16);
    for i in 0..8 {
        g.add_edge(i, (i + 1) % 8);
        g.add_edge(i, i + 8);
        g.add_edge(8 + i, 8 + (i + 3) % 8);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(cycle(6).m(), 6);
        assert_eq!(petersen().m(), 15);
        assert_eq!(cube().m(), 12);
        assert_eq!(mobius_kantor().m(), 24);
        assert_eq!(octahedron().m(), 12);
        for g in [petersen(), cube(), prism(), mobius_kantor(), complete_bipartite(3, 3)] {
            assert_eq!(g.is_d_regular(), Some(3));
        }
    }
}
