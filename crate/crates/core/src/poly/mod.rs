//! Polynomial-time solvers for special graph classes.

mod eed;
mod forest;
mod matching;
mod regular;

pub use eed::{cluster_2eed_optimum, solve_2eed_cluster, solve_2eed_trianglefree, trianglefree_2eed_optimum};
pub use forest::{
    forest_2evd_optimum, solve_2evd_forest, tree_max_induced_matching, tree_min_vertex_cover, ForestTarget,
};
pub use matching::{max_matching, Matching};
pub use regular::{solve_2evd_2regular, two_regular_2evd_optimum, CycleTarget};

use crate::error::{Error, Result};
use crate::problem::{Instance, Kind, Solution};

/// Graph classes with a polynomial algorithm for the given problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyClass {
    Forest,
    TwoRegular,
    Cluster,
    TriangleFree,
}

impl PolyClass {
    pub fn name(self) -> &'static str {
        match self {
            PolyClass::Forest => "forest",
            PolyClass::TwoRegular => "2-regular",
            PolyClass::Cluster => "cluster",
            PolyClass::TriangleFree => "triangle-free",
        }
    }
}

/// The first class recogniser that applies to `inst`, if any.
pub fn recognize(inst: &Instance) -> Option<PolyClass> {
    let g = &inst.graph;
    match (inst.kind, inst.r) {
        (Kind::Evd, 2) if g.is_forest() => Some(PolyClass::Forest),
        (Kind::Evd, 2) if g.n() > 0 && g.is_d_regular() == Some(2) => Some(PolyClass::TwoRegular),
        (Kind::Eed, 2) if g.cluster_profile().is_some() => Some(PolyClass::Cluster),
        (Kind::Eed, 2) if g.is_triangle_free() => Some(PolyClass::TriangleFree),
        _ => None,
    }
}

/// Solves `inst` with the polynomial algorithm for its class.
pub fn solve_poly(inst: &Instance) -> Result<Option<Solution>> {
    let g = &inst.graph;
    let k = inst.k;
    match recognize(inst) {
        Some(PolyClass::Forest) => solve_2evd_forest(g, k),
        Some(PolyClass::TwoRegular) => solve_2evd_2regular(g, k),
        Some(PolyClass::Cluster) => solve_2eed_cluster(g, k),
        Some(PolyClass::TriangleFree) => solve_2eed_trianglefree(g, k),
        None => Err(Error::Unsupported(format!(
            "no polynomial algorithm for {} r={} on this graph; supported: EVD r=2 on forests or 2-regular graphs, EED r=2 on cluster or triangle-free graphs",
            inst.kind, inst.r
        ))),
    }
}
