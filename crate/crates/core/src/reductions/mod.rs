//! Hardness gadgets as instance generators.
//!
//! Every generator validates its source, builds the target instance with a
//! deterministic vertex layout (original vertices first, gadgets appended in
//! construction order) and remembers enough of that layout to push a source
//! certificate forward with [`map_forward_solution`].

mod addition;
mod source;
mod triangles;
mod vertex;

pub use addition::{gen_2eea_from_3partition, gen_reea_from_3partition, ItemShape, REEA_VERTEX_LIMIT};
pub use source::{
    clique_number, max_independent_set, min_vertex_cover, three_partition, triangle_partition, MAX_SOURCE_VERTICES,
};
pub use triangles::{gen_2eee_from_triangle_partition, gen_reed_from_triangle_partition};
pub use vertex::{gen_2evd_from_is_cliques, gen_2evd_from_is_copies, gen_revd_from_vc};

use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::problem::{Instance, Solution};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

/// The seven constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// 2-EVD from independent set: `d` twin copies per vertex.
    IsCopies,
    /// 2-EVD from independent set: a `K_6` per vertex.
    IsCliques,
    /// r-EVD from vertex cover: pendant paths and subdivisions.
    RevdFromVc,
    /// 2-EEA from 3-Partition.
    EeaFrom3Partition,
    /// r-EEA from 3-Partition.
    ReeaFrom3Partition,
    /// r-EED from partition into triangles.
    ReedFromTriangles,
    /// 2-EEE from partition into triangles.
    EeeFromTriangles,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::IsCopies,
        Construction::IsCliques,
        Construction::RevdFromVc,
        Construction::EeaFrom3Partition,
        Construction::ReeaFrom3Partition,
        Construction::ReedFromTriangles,
        Construction::EeeFromTriangles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::IsCopies => "is-copies",
            Construction::IsCliques => "is-cliques",
            Construction::RevdFromVc => "revd-vc",
            Construction::EeaFrom3Partition => "eea-3partition",
            Construction::ReeaFrom3Partition => "reea-3partition",
            Construction::ReedFromTriangles => "reed-triangles",
            Construction::EeeFromTriangles => "eee-triangles",
        }
    }

    /// Budget formula in the source parameters, for sidecars.
    pub fn budget_formula(self) -> &'static str {
        match self {
            Construction::IsCopies => "d(n-z)",
            Construction::IsCliques => "6(n-z)",
            Construction::RevdFromVc => "k",
            Construction::EeaFrom3Partition => "nb^2 + missing item edges",
            Construction::ReeaFrom3Partition => "nb^2",
            Construction::ReedFromTriangles => "m-n",
            Construction::EeeFromTriangles => "m+n",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = Construction::ALL.iter().map(|c| c.name()).collect();
            contract(format!(
                "unknown construction '{s}' (expected one of {})",
                names.join(", ")
            ))
        })
    }
}

/// Input to a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceInstance {
    /// Is there an independent set of size `z`?
    IndependentSet { graph: Graph, z: usize },
    /// Is there a vertex cover of size at most `k`?
    VertexCover { graph: Graph, k: usize },
    /// Can `items` be split into triples each summing to `b`?
    ThreePartition { items: Vec<usize>, b: usize },
    /// Can the vertex set be split into triangles?
    TrianglePartition { graph: Graph },
}

/// Certificate for a YES source instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceSolution {
    IndependentSet(Vec<usize>),
    VertexCover(Vec<usize>),
    /// Item indices for 3-Partition, vertices for triangle partitions.
    Triples(Vec<[usize; 3]>),
}

impl SourceInstance {
    /// Exact answer by brute force, with a certificate on YES.
    pub fn solve(&self) -> Result<Option<SourceSolution>> {
        Ok(match self {
            SourceInstance::IndependentSet { graph, z } => {
                let mut set = max_independent_set(graph)?;
                set.truncate(*z);
                (set.len() == *z).then_some(SourceSolution::IndependentSet(set))
            }
            SourceInstance::VertexCover { graph, k } => {
                let cover = min_vertex_cover(graph)?;
                (cover.len() <= *k).then_some(SourceSolution::VertexCover(cover))
            }
            SourceInstance::ThreePartition { items, b } => three_partition(items, *b).map(SourceSolution::Triples),
            SourceInstance::TrianglePartition { graph } => triangle_partition(graph)?.map(SourceSolution::Triples),
        })
    }

    /// Checks `sol` certifies YES for this source.
    pub fn check(&self, sol: &SourceSolution) -> Result<()> {
        match (self, sol) {
            (SourceInstance::IndependentSet { graph, z }, SourceSolution::IndependentSet(set)) => {
                check_vertices(graph, set)?;
                if set.len() < *z {
                    return Err(contract(format!(
                        "independent set has {} vertices, need {z}",
                        set.len()
                    )));
                }
                if let Some((u, v)) = set
                    .iter()
                    .flat_map(|&u| set.iter().map(move |&v| (u, v)))
                    .find(|&(u, v)| graph.has_edge(u, v))
                {
                    return Err(contract(format!("vertices {u} and {v} are adjacent")));
                }
                Ok(())
            }
            (SourceInstance::VertexCover { graph, k }, SourceSolution::VertexCover(cover)) => {
                check_vertices(graph, cover)?;
                if cover.len() > *k {
                    return Err(contract(format!("cover has {} vertices, budget {k}", cover.len())));
                }
                match graph.edges().find(|&(u, v)| !cover.contains(&u) && !cover.contains(&v)) {
                    Some((u, v)) => Err(contract(format!("edge ({u},{v}) is not covered"))),
                    None => Ok(()),
                }
            }
            (SourceInstance::ThreePartition { items, b }, SourceSolution::Triples(ts)) => {
                check_triples(items.len(), ts)?;
                match ts.iter().find(|t| t.iter().map(|&i| items[i]).sum::<usize>() != *b) {
                    Some(t) => Err(contract(format!("triple {t:?} does not sum to {b}"))),
                    None => Ok(()),
                }
            }
            (SourceInstance::TrianglePartition { graph }, SourceSolution::Triples(ts)) => {
                check_triples(graph.n(), ts)?;
                match ts
                    .iter()
                    .find(|&&[a, b, c]| !(graph.has_edge(a, b) && graph.has_edge(b, c) && graph.has_edge(a, c)))
                {
                    Some(t) => Err(contract(format!("{t:?} is not a triangle"))),
                    None => Ok(()),
                }
            }
            _ => Err(contract("source solution does not match the source problem")),
        }
    }
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(contract(format!("vertex {v} is out of range or repeated")));
        }
    }
    Ok(())
}

fn check_triples(n: usize, ts: &[[usize; 3]]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in ts.iter().flatten() {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(contract(format!("element {v} is out of range or used twice")));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(contract("triples do not cover every element"));
    }
    Ok(())
}

/// Where each part of the source ended up in the target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Layout {
    /// Copy `i` of source vertex `v` is `v * copies + i`.
    Copies { copies: usize },
    /// Source vertices keep their indices.
    Identity,
    /// Vertex block of each item.
    Items { blocks: Vec<Range<usize>> },
    /// Source vertices keep their indices; the two dummy edges of `v`.
    DummyEdges { dummies: Vec<[(usize, usize); 2]> },
}

/// A generated target instance together with its provenance.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub construction: Construction,
    pub source: SourceInstance,
    pub instance: Instance,
    /// How a source certificate becomes a target solution.
    pub mapper: &'static str,
    /// Caveats about this particular instance.
    pub notes: Vec<String>,
    pub(crate) layout: Layout,
}

impl ReducedInstance {
    pub fn budget(&self) -> usize {
        self.instance.k
    }

    /// Human-readable description written next to generated instances.
    /// `expected` is the source answer when known.
    pub fn sidecar(&self, expected: Option<bool>) -> String {
        let mut out = String::new();
        out.push_str(&format!("construction={}\n", self.construction));
        out.push_str(&format!(
            "target={} r={} k={}\n",
            self.instance.kind, self.instance.r, self.instance.k
        ));
        out.push_str(&format!(
            "vertices={} edges={}\n",
            self.instance.graph.n(),
            self.instance.graph.m()
        ));
        out.push_str(&format!("budget_formula={}\n", self.construction.budget_formula()));
        out.push_str(&format!("source={}\n", describe_source(&self.source)));
        out.push_str(&format!("mapper={}\n", self.mapper));
        let expected = match expected {
            Some(true) => "YES",
            Some(false) => "NO",
            None => "unknown",
        };
        out.push_str(&format!("expected={expected}\n"));
        for note in &self.notes {
            out.push_str(&format!("note={note}\n"));
        }
        out
    }
}

fn describe_source(s: &SourceInstance) -> String {
    match s {
        SourceInstance::IndependentSet { graph, z } => {
            format!("independent-set n={} m={} z={z}", graph.n(), graph.m())
        }
        SourceInstance::VertexCover { graph, k } => format!("vertex-cover n={} m={} k={k}", graph.n(), graph.m()),
        SourceInstance::ThreePartition { items, b } => {
            let list: Vec<String> = items.iter().map(usize::to_string).collect();
            format!("3-partition b={b} items={}", list.join(","))
        }
        SourceInstance::TrianglePartition { graph } => {
            format!("triangle-partition n={} m={}", graph.n(), graph.m())
        }
    }
}

/// Pushes a source certificate through the construction.
///
/// The source solution is validated first; the result is a target
/// solution within the construction's budget.
pub fn map_forward_solution(red: &ReducedInstance, sol: &SourceSolution) -> Result<Solution> {
    red.source.check(sol)?;
    let out = match (&red.layout, sol) {
        (Layout::Copies { copies }, SourceSolution::IndependentSet(set)) => {
            let n = red.instance.graph.n() / copies;
            let keep: Vec<bool> = (0..n).map(|v| set.contains(&v)).collect();
            Solution::vertices((0..n * copies).filter(|&x| !keep[x / copies]).collect())
        }
        (Layout::Identity, SourceSolution::VertexCover(cover)) => Solution::vertices(cover.clone()),
        (Layout::Identity, SourceSolution::Triples(ts)) => {
            let SourceInstance::TrianglePartition { graph } = &red.source else {
                return Err(contract("layout does not match the source"));
            };
            Solution::deletions(non_triangle_edges(graph, ts))
        }
        (Layout::Items { blocks }, SourceSolution::Triples(ts)) => {
            let g = &red.instance.graph;
            let mut pairs = Vec::new();
            for t in ts {
                let members: Vec<usize> = t.iter().flat_map(|&i| blocks[i].clone()).collect();
                for (i, &u) in members.iter().enumerate() {
                    pairs.extend(members[i + 1..].iter().filter(|&&v| !g.has_edge(u, v)).map(|&v| (u, v)));
                }
            }
            Solution::additions(pairs)
        }
        (Layout::DummyEdges { dummies }, SourceSolution::Triples(ts)) => {
            let SourceInstance::TrianglePartition { graph } = &red.source else {
                return Err(contract("layout does not match the source"));
            };
            let mut pairs = non_triangle_edges(graph, ts);
            pairs.extend(dummies.iter().flatten().copied());
            Solution::deletions(pairs)
        }
        _ => return Err(contract("source solution does not match the construction")),
    };
    Ok(out)
}

/// Edges of `g` not inside any of the triangles `ts`.
fn non_triangle_edges(g: &Graph, ts: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let mut part = vec![usize::MAX; g.n()];
    for (i, t) in ts.iter().enumerate() {
        for &v in t {
            part[v] = i;
        }
    }
    g.edges().filter(|&(u, v)| part[u] != part[v]).collect()
}
