//! Problem instances and candidate solutions.

use crate::error::{contract, Error, Result};
use crate::graph::{apply_modification, EdgeSet, Graph, Modified};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Which modification the budget pays for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Kind {
    /// Vertex deletion.
    Evd,
    /// Edge deletion.
    Eed,
    /// Edge addition.
    Eea,
    /// Edge editing (symmetric difference).
    Eee,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Evd, Kind::Eed, Kind::Eea, Kind::Eee];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Evd => "EVD",
            Kind::Eed => "EED",
            Kind::Eea => "EEA",
            Kind::Eee => "EEE",
        }
    }

    pub fn is_edge_kind(self) -> bool {
        self != Kind::Evd
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "EVD" => Ok(Kind::Evd),
            "EED" => Ok(Kind::Eed),
            "EEA" => Ok(Kind::Eea),
            "EEE" => Ok(Kind::Eee),
            _ => Err(contract(format!(
                "unknown problem kind '{s}' (expected EVD, EED, EEA or EEE)"
            ))),
        }
    }
}

/// "Can `graph` be brought to at most `r` distinct eigenvalues with at most
/// `k` modifications of type `kind`?"
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: Kind,
    pub r: usize,
    pub k: usize,
    pub graph: Graph,
}

impl Instance {
    pub fn new(kind: Kind, r: usize, k: usize, graph: Graph) -> Result<Self> {
        if r == 0 {
            return Err(contract("r must be at least 1"));
        }
        Ok(Instance { kind, r, k, graph })
    }

    /// Applies `sol` after checking it has the right shape for this kind.
    pub fn apply(&self, sol: &Solution) -> Result<Modified> {
        let g = &self.graph;
        match (self.kind, sol) {
            (Kind::Evd, Solution::Vertices(vs)) => apply_modification(g, vs, &EdgeSet::new(), &EdgeSet::new()),
            (Kind::Evd, Solution::Edits(_)) => Err(contract("EVD expects a vertex set, got edge edits")),
            (kind, Solution::Vertices(_)) => Err(contract(format!("{kind} expects edge edits, got a vertex set"))),
            (kind, Solution::Edits(edits)) => {
                let mut del = EdgeSet::new();
                let mut add = EdgeSet::new();
                let mut seen = BTreeSet::new();
                for e in edits {
                    if e.u == e.v {
                        return Err(contract(format!("edit ({},{}) is a self-loop", e.u, e.v)));
                    }
                    if !seen.insert(e.key()) {
                        return Err(contract(format!("pair ({},{}) edited twice", e.u, e.v)));
                    }
                    let allowed = matches!(
                        (kind, e.op),
                        (Kind::Eed, EditOp::Delete) | (Kind::Eea, EditOp::Add) | (Kind::Eee, _)
                    );
                    if !allowed {
                        return Err(contract(format!("{kind} does not allow {} of ({},{})", e.op, e.u, e.v)));
                    }
                    match e.op {
                        EditOp::Delete => del.insert(e.u, e.v),
                        EditOp::Add => add.insert(e.u, e.v),
                    };
                }
                apply_modification(g, &[], &del, &add)
            }
        }
    }

    /// Number of elements a solution may touch: vertices, edges, non-edges
    /// or vertex pairs.
    pub fn pool_size(&self) -> usize {
        let n = self.graph.n();
        let pairs = n * n.saturating_sub(1) / 2;
        match self.kind {
            Kind::Evd => n,
            Kind::Eed => self.graph.m(),
            Kind::Eea => pairs - self.graph.m(),
            Kind::Eee => pairs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EditOp {
    Delete,
    Add,
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EditOp::Delete => "deletion",
            EditOp::Add => "addition",
        })
    }
}

/// One edge edit; `u < v` after [`Edit::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edit {
    pub u: usize,
    pub v: usize,
    pub op: EditOp,
}

impl Edit {
    pub fn new(u: usize, v: usize, op: EditOp) -> Self {
        Edit {
            u: u.min(v),
            v: u.max(v),
            op,
        }
    }

    pub fn delete(u: usize, v: usize) -> Self {
        Edit::new(u, v, EditOp::Delete)
    }

    pub fn add(u: usize, v: usize) -> Self {
        Edit::new(u, v, EditOp::Add)
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Solution {
    Vertices(Vec<usize>),
    Edits(Vec<Edit>),
}

impl Solution {
    /// Sorted vertex set.
    pub fn vertices(mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        Solution::Vertices(vs)
    }

    /// Edits sorted by pair.
    pub fn edits(mut es: Vec<Edit>) -> Self {
        es.sort_unstable_by_key(|e| (e.u, e.v, e.op));
        Solution::Edits(es)
    }

    pub fn deletions(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Solution::edits(pairs.into_iter().map(|(u, v)| Edit::delete(u, v)).collect())
    }

    pub fn additions(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Solution::edits(pairs.into_iter().map(|(u, v)| Edit::add(u, v)).collect())
    }

    pub fn empty_for(kind: Kind) -> Self {
        match kind {
            Kind::Evd => Solution::Vertices(Vec::new()),
            _ => Solution::Edits(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Solution::Vertices(v) => v.len(),
            Solution::Edits(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Result of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes(Solution),
    No,
    /// The search stopped before reaching a verdict (node limit).
    Indeterminate,
}

impl Outcome {
    pub fn from_option(sol: Option<Solution>) -> Self {
        sol.map_or(Outcome::No, Outcome::Yes)
    }

    pub fn solution(&self) -> Option<&Solution> {
        match self {
            Outcome::Yes(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Yes(_) => "YES",
            Outcome::No => "NO",
            Outcome::Indeterminate => "INDETERMINATE",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn kind_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.as_str().parse::<Kind>().unwrap(), k);
        }
        assert!("XYZ".parse::<Kind>().is_err());
    }

    #[test]
    fn shape_checks() {
        let inst = Instance::new(Kind::Eed, 2, 1, path(3)).unwrap();
        assert!(inst.apply(&Solution::Vertices(vec![1])).is_err());
        assert!(inst.apply(&Solution::additions([(0, 2)])).is_err());
        assert!(inst.apply(&Solution::deletions([(0, 2)])).is_err());
        assert!(inst
            .apply(&Solution::Edits(vec![Edit::delete(0, 1), Edit::delete(1, 0)]))
            .is_err());
        let h = inst.apply(&Solution::deletions([(0, 1)])).unwrap();
        assert_eq!(h.graph.m(), 1);
        let evd = Instance::new(Kind::Evd, 2, 1, path(3)).unwrap();
        assert!(evd.apply(&Solution::deletions([(0, 1)])).is_err());
        assert!(Instance::new(Kind::Evd, 0, 1, path(3)).is_err());
    }

    #[test]
    fn editing_allows_both() {
        let inst = Instance::new(Kind::Eee, 2, 2, path(3)).unwrap();
        let h = inst
            .apply(&Solution::edits(vec![Edit::delete(1, 2), Edit::add(0, 2)]))
            .unwrap();
        assert!(h.graph.has_edge(0, 2) && !h.graph.has_edge(1, 2));
    }

    #[test]
    fn pools() {
        let g = path(4);
        assert_eq!(Instance::new(Kind::Evd, 2, 0, g.clone()).unwrap().pool_size(), 4);
        assert_eq!(Instance::new(Kind::Eed, 2, 0, g.clone()).unwrap().pool_size(), 3);
        assert_eq!(Instance::new(Kind::Eea, 2, 0, g.clone()).unwrap().pool_size(), 3);
        assert_eq!(Instance::new(Kind::Eee, 2, 0, g).unwrap().pool_size(), 6);
    }
}
