use super::{Construction, Layout, ReducedInstance, SourceInstance};
use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::{Instance, Kind};

fn require_cubic(g: &Graph) -> Result<()> {
    if g.n() > 0 && g.is_d_regular() != Some(3) {
        return Err(contract("source graph is not cubic"));
    }
    Ok(())
}

fn require_cubic_triangle_free(g: &Graph) -> Result<()> {
    require_cubic(g)?;
    if let Some((a, b, c)) = g.find_triangle() {
        return Err(contract(format!("source graph has the triangle ({a},{b},{c})")));
    }
    Ok(())
}

fn deficit(n: usize, z: usize) -> Result<usize> {
    n.checked_sub(z)
        .ok_or_else(|| contract(format!("target z={z} exceeds the {n} source vertices")))
}

/// `d` copies of every vertex; copies of adjacent vertices are completely
/// joined. Budget `d(n - z)`.
pub fn gen_2evd_from_is_copies(g: &Graph, z: usize, d: usize) -> Result<ReducedInstance> {
    require_cubic_triangle_free(g)?;
    if d < 2 {
        return Err(contract(format!("need at least two copies per vertex, got {d}")));
    }
    let budget = d * deficit(g.n(), z)?;
    let mut h = Graph::empty(g.n() * d);
    for (u, v) in g.edges() {
        for i in 0..d {
            for j in 0..d {
                h.add_edge(u * d + i, v * d + j);
            }
        }
    }
    assert!(
        g.n() == 0 || h.is_d_regular() == Some(3 * d),
        "blow-up must be 3d-regular"
    );
    assert!(h.is_triangle_free(), "blow-up must stay triangle-free");
    Ok(ReducedInstance {
        construction: Construction::IsCopies,
        source: SourceInstance::IndependentSet { graph: g.clone(), z },
        instance: Instance::new(Kind::Evd, 2, budget, h)?,
        mapper: "keep every copy of the independent set's vertices, delete all other vertices",
        notes: Vec::new(),
        layout: Layout::Copies { copies: d },
    })
}

/// A `K_6` per vertex and a perfect matching between same-index copies of
/// adjacent vertices. Budget `6(n - z)`.
///
/// Planarity of the source is not checked.
pub fn gen_2evd_from_is_cliques(g: &Graph, z: usize) -> Result<ReducedInstance> {
    require_cubic_triangle_free(g)?;
    const C: usize = 6;
    let budget = C * deficit(g.n(), z)?;
    let mut h = Graph::empty(g.n() * C);
    for v in 0..g.n() {
        let block: Vec<usize> = (v * C..(v + 1) * C).collect();
        h.add_clique(&block);
    }
    for (u, v) in g.edges() {
        for i in 0..C {
            h.add_edge(u * C + i, v * C + i);
        }
    }
    assert!(
        g.n() == 0 || h.is_d_regular() == Some(8),
        "clique gadget must be 8-regular"
    );
    Ok(ReducedInstance {
        construction: Construction::IsCliques,
        source: SourceInstance::IndependentSet { graph: g.clone(), z },
        instance: Instance::new(Kind::Evd, 2, budget, h)?,
        mapper: "keep the six copies of each independent-set vertex, delete all other vertices",
        notes: vec!["source planarity not checked: equivalence unproven for this source unless it is planar".into()],
        layout: Layout::Copies { copies: C },
    })
}

/// Pendant path of `l = floor((r-1)/2)` vertices on every vertex, every
/// edge subdivided with a pendant path of `l - 1` vertices on the
/// subdivision vertex. Budget `k`.
///
/// Layout: source vertices `0..n`, then the vertex paths in vertex order,
/// then per edge (sorted) its subdivision vertex followed by its path.
pub fn gen_revd_from_vc(g: &Graph, k: usize, r: usize) -> Result<ReducedInstance> {
    require_cubic(g)?;
    if r < 3 {
        return Err(contract(format!("construction needs r >= 3, got {r}")));
    }
    let l = (r - 1) / 2;
    let mut h = Graph::empty(g.n());
    let pendant = |h: &mut Graph, anchor: usize, len: usize| {
        let mut prev = anchor;
        for _ in 0..len {
            let x = h.add_vertices(1);
            h.add_edge(prev, x);
            prev = x;
        }
    };
    for v in 0..g.n() {
        pendant(&mut h, v, l);
    }
    for (u, v) in g.edges() {
        let s = h.add_vertices(1);
        h.add_edge(u, s);
        h.add_edge(s, v);
        pendant(&mut h, s, l - 1);
    }
    assert!(h.is_bipartite(), "subdivided gadget must be bipartite");
    assert!(h.max_degree() <= 4, "gadget degree must stay at most 4");
    Ok(ReducedInstance {
        construction: Construction::RevdFromVc,
        source: SourceInstance::VertexCover { graph: g.clone(), k },
        instance: Instance::new(Kind::Evd, r, k, h)?,
        mapper: "delete the cover vertices themselves",
        notes: Vec::new(),
        layout: Layout::Identity,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{map_forward_solution, SourceSolution};
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::{solve_exhaustive, verify};

    #[test]
    fn copies_on_k33() {
        let red = gen_2evd_from_is_copies(&complete_bipartite(3, 3), 3, 2).unwrap();
        assert_eq!(red.instance.graph.n(), 12);
        assert_eq!(red.instance.graph.is_d_regular(), Some(6));
        assert_eq!(red.budget(), 6);
        assert!(solve_exhaustive(&red.instance).unwrap().is_some());
        let sol = map_forward_solution(&red, &SourceSolution::IndependentSet(vec![0, 1, 2])).unwrap();
        assert_eq!(sol.len(), 6);
        assert!(verify(&red.instance, &sol).unwrap().accepted);

        let red = gen_2evd_from_is_copies(&complete_bipartite(3, 3), 4, 2).unwrap();
        assert_eq!(red.budget(), 4);
        assert!(solve_exhaustive(&red.instance).unwrap().is_none());

        let red = gen_2evd_from_is_copies(&cube(), 0, 2).unwrap();
        assert_eq!(red.budget(), 16);
    }

    #[test]
    fn copies_reject_bad_sources() {
        assert!(gen_2evd_from_is_copies(&prism(), 2, 2).is_err());
        assert!(gen_2evd_from_is_copies(&cycle(6), 2, 2).is_err());
        assert!(gen_2evd_from_is_copies(&cube(), 2, 1).is_err());
        assert!(gen_2evd_from_is_copies(&cube(), 9, 2).is_err());
    }

    #[test]
    fn cliques_on_cube() {
        let red = gen_2evd_from_is_cliques(&cube(), 4).unwrap();
        assert_eq!(red.instance.graph.n(), 48);
        assert_eq!(red.budget(), 24);
        let sol = map_forward_solution(&red, &SourceSolution::IndependentSet(vec![0, 3, 5, 6])).unwrap();
        let v = verify(&red.instance, &sol).unwrap();
        assert!(v.accepted && v.size == 24);
        assert!(red.sidecar(Some(true)).contains("equivalence unproven"));
    }

    #[test]
    fn vc_gadget_on_k4() {
        let red = gen_revd_from_vc(&complete(4), 3, 3).unwrap();
        assert_eq!(red.instance.graph.n(), 14);
        assert_eq!(red.budget(), 3);
        assert!(solve_exhaustive(&red.instance).unwrap().is_some());
        let sol = map_forward_solution(&red, &SourceSolution::VertexCover(vec![0, 1, 2])).unwrap();
        assert!(verify(&red.instance, &sol).unwrap().accepted);

        let red = gen_revd_from_vc(&complete(4), 2, 3).unwrap();
        assert!(solve_exhaustive(&red.instance).unwrap().is_none());
    }

    #[test]
    fn vc_gadget_sizes() {
        // n + l*n + l*m vertices
        let red = gen_revd_from_vc(&complete(4), 3, 5).unwrap();
        assert_eq!(red.instance.graph.n(), 4 + 8 + 12);
        let red = gen_revd_from_vc(&petersen(), 6, 7).unwrap();
        assert_eq!(red.instance.graph.n(), 10 + 30 + 15 * 3);
        assert!(gen_revd_from_vc(&complete(4), 3, 2).is_err());
        assert!(gen_revd_from_vc(&cycle(4), 3, 3).is_err());
    }
}
