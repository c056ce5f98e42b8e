//! Engine dispatch, run records and the benchmark harness.

use crate::error::{contract, Error, Result};
use crate::fpt::{solve_2eed, solve_2evd, solve_revd, BranchStats, RevdConfig};
use crate::graph::Graph;
use crate::io::{parse_instance, serialize_instance};
use crate::kernel::{solve_2eea_via_kernel, KernelEngine};
use crate::oracle::{solve_exhaustive, verify};
use crate::poly::{recognize, solve_poly};
use crate::problem::{Instance, Kind, Outcome, Solution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Oracle,
    Fpt,
    Poly,
    Kernel,
    KernelOracle,
    Auto,
}

const SUPPORTED: &str = "oracle: any kind and r; fpt: EVD r>=2, EED r=2; \
poly: EVD r=2 on forests and 2-regular graphs, EED r=2 on cluster and triangle-free graphs; \
kernel, kernel+oracle: EEA r=2";

impl Engine {
    pub const ALL: [Engine; 6] = [
        Engine::Oracle,
        Engine::Fpt,
        Engine::Poly,
        Engine::Kernel,
        Engine::KernelOracle,
        Engine::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Fpt => "fpt",
            Engine::Poly => "poly",
            Engine::Kernel => "kernel",
            Engine::KernelOracle => "kernel+oracle",
            Engine::Auto => "auto",
        }
    }

    /// Whether this engine has an algorithm for `inst`.
    pub fn supports(self, inst: &Instance) -> bool {
        match self {
            Engine::Oracle | Engine::Auto => true,
            Engine::Fpt => {
                matches!((inst.kind, inst.r), (Kind::Evd, r) if r >= 2) || (inst.kind, inst.r) == (Kind::Eed, 2)
            }
            Engine::Poly => recognize(inst).is_some(),
            Engine::Kernel | Engine::KernelOracle => (inst.kind, inst.r) == (Kind::Eea, 2),
        }
    }

    /// The concrete engine `auto` picks: a polynomial algorithm when the
    /// class is recognised, else branching or the kernel, else the oracle.
    pub fn resolve(self, inst: &Instance) -> Result<Engine> {
        if self != Engine::Auto {
            return if self.supports(inst) {
                Ok(self)
            } else {
                Err(Error::Unsupported(format!(
                    "engine {} cannot solve {} r={}{}; supported: {SUPPORTED}",
                    self.name(),
                    inst.kind,
                    inst.r,
                    if self == Engine::Poly { " on this graph" } else { "" }
                )))
            };
        }
        Ok([Engine::Poly, Engine::Fpt, Engine::Kernel]
            .into_iter()
            .find(|e| e.supports(inst))
            .unwrap_or(Engine::Oracle))
    }
}

impl Serialize for Engine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL.into_iter().find(|e| e.name() == s).ok_or_else(|| {
            contract(format!(
                "unknown engine '{s}' (expected oracle, fpt, poly, kernel, kernel+oracle or auto)"
            ))
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveConfig {
    /// Branch-node cap for r-EVD branching.
    pub node_limit: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct EngineRun {
    pub outcome: Outcome,
    /// The engine that actually ran.
    pub engine: Engine,
    pub stats: Option<BranchStats>,
}

/// Runs `engine` on `inst` without verifying the answer.
pub fn run_engine(inst: &Instance, engine: Engine, cfg: SolveConfig) -> Result<EngineRun> {
    let engine = engine.resolve(inst)?;
    let g = &inst.graph;
    let mut stats = None;
    let outcome = match engine {
        Engine::Oracle => Outcome::from_option(solve_exhaustive(inst)?),
        Engine::Poly => Outcome::from_option(solve_poly(inst)?),
        Engine::Fpt => {
            let search = match (inst.kind, inst.r) {
                (Kind::Evd, 2) => solve_2evd(g, inst.k),
                (Kind::Eed, 2) => solve_2eed(g, inst.k),
                _ => solve_revd(
                    g,
                    inst.r,
                    inst.k,
                    RevdConfig {
                        node_limit: cfg.node_limit,
                    },
                )?,
            };
            stats = Some(search.stats);
            search.outcome
        }
        Engine::Kernel => solve_2eea_via_kernel(g, inst.k, KernelEngine::Exact)?.0,
        Engine::KernelOracle => solve_2eea_via_kernel(g, inst.k, KernelEngine::Oracle)?.0,
        Engine::Auto => unreachable!("resolved above"),
    };
    Ok(EngineRun { outcome, engine, stats })
}

/// One solver run, as printed by the CLI and collected by the bench.
#[derive(Clone, Debug, Serialize)]
pub struct RunRecord {
    pub id: String,
    pub engine: Engine,
    pub resolved: Option<Engine>,
    pub kind: Kind,
    pub r: usize,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// `YES`, `NO`, `INDETERMINATE` or `ERROR`.
    pub answer: String,
    pub size: Option<usize>,
    pub wall_ms: f64,
    pub stats: Option<BranchStats>,
    /// `passed` for every YES; `n/a` otherwise.
    pub verification: String,
    /// Exact count after applying the solution.
    pub distinct_count: Option<usize>,
    pub solution: Option<Solution>,
    pub error: Option<String>,
}

impl RunRecord {
    /// `key=value` fields on one line, timing last.
    pub fn to_line(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let mut fields = vec![
            format!("id={}", self.id),
            format!("engine={}", self.engine),
            format!("resolved={}", opt(self.resolved.map(|e| e.to_string()))),
            format!("kind={}", self.kind),
            format!("r={}", self.r),
            format!("k={}", self.k),
            format!("n={}", self.n),
            format!("m={}", self.m),
            format!("answer={}", self.answer),
            format!("size={}", opt(self.size.map(|s| s.to_string()))),
            format!("verification={}", self.verification),
            format!("distinct={}", opt(self.distinct_count.map(|s| s.to_string()))),
        ];
        if let Some(s) = &self.stats {
            fields.push(format!("nodes={}", s.nodes_visited));
            fields.push(format!("depth={}", s.max_depth));
            fields.push(format!("leaves={}", s.leaf_count));
        }
        if let Some(e) = &self.error {
            fields.push(format!("error={:?}", e));
        }
        fields.push(format!("wall_ms={:.3}", self.wall_ms));
        fields.join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    fn blank(id: &str, inst: &Instance, engine: Engine) -> Self {
        RunRecord {
            id: id.to_string(),
            engine,
            resolved: None,
            kind: inst.kind,
            r: inst.r,
            k: inst.k,
            n: inst.graph.n(),
            m: inst.graph.m(),
            answer: "ERROR".into(),
            size: None,
            wall_ms: 0.0,
            stats: None,
            verification: "n/a".into(),
            distinct_count: None,
            solution: None,
            error: None,
        }
    }
}

/// Solves and re-verifies. A YES whose solution fails verification is an
/// error, never a record.
pub fn solve_verified(id: &str, inst: &Instance, engine: Engine, cfg: SolveConfig) -> Result<RunRecord> {
    let start = Instant::now();
    let run = run_engine(inst, engine, cfg)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut rec = RunRecord::blank(id, inst, engine);
    rec.resolved = Some(run.engine);
    rec.wall_ms = wall_ms;
    rec.stats = run.stats;
    rec.answer = run.outcome.label().to_string();
    if let Outcome::Yes(sol) = &run.outcome {
        let v = verify(inst, sol)?;
        if !v.accepted {
            return Err(contract(format!(
                "engine {} returned a solution of size {} leaving {} eigenvalues; refusing to report it",
                run.engine, v.size, v.distinct_count
            )));
        }
        rec.verification = "passed".into();
        rec.size = Some(v.size);
        rec.distinct_count = Some(v.distinct_count);
        rec.solution = Some(sol.clone());
    }
    Ok(rec)
}

/// Like [`solve_verified`] but folds errors into the record.
pub fn run_record(id: &str, inst: &Instance, engine: Engine, cfg: SolveConfig) -> RunRecord {
    solve_verified(id, inst, engine, cfg).unwrap_or_else(|e| {
        let mut rec = RunRecord::blank(id, inst, engine);
        rec.error = Some(e.to_string());
        rec
    })
}

/// Two engines that answered the same instance differently.
#[derive(Clone, Debug)]
pub struct Disagreement {
    pub id: String,
    pub instance: String,
    pub first: RunRecord,
    pub second: RunRecord,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "disagreement on {}:", self.id)?;
        writeln!(f, "  {}", self.first.to_line())?;
        writeln!(f, "  {}", self.second.to_line())?;
        write!(f, "{}", self.instance)
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    /// Ordered by instance id, then engine order as requested.
    pub records: Vec<RunRecord>,
    pub disagreements: Vec<Disagreement>,
}

/// Runs every engine on every instance in parallel and cross-checks
/// YES/NO answers.
pub fn bench(corpus: &[(String, Instance)], engines: &[Engine], cfg: SolveConfig) -> BenchReport {
    let mut sorted: Vec<&(String, Instance)> = corpus.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let per_instance: Vec<Vec<RunRecord>> = sorted
        .par_iter()
        .map(|(id, inst)| engines.iter().map(|&e| run_record(id, inst, e, cfg)).collect())
        .collect();
    let mut report = BenchReport::default();
    for ((id, inst), recs) in sorted.iter().zip(per_instance) {
        let decided: Vec<&RunRecord> = recs.iter().filter(|r| r.answer == "YES" || r.answer == "NO").collect();
        if let Some(other) = decided.iter().find(|r| r.answer != decided[0].answer) {
            report.disagreements.push(Disagreement {
                id: id.clone(),
                instance: serialize_instance(inst, &[]),
                first: decided[0].clone(),
                second: (*other).clone(),
            });
        }
        report.records.extend(recs);
    }
    report
}

/// Reads every `*.inst` file of `dir`; ids are file stems.
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, Instance)>> {
    let read_err = |e: std::io::Error| contract(format!("cannot read {}: {e}", dir.display()));
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(read_err)? {
        let path = entry.map_err(read_err)?.path();
        if path.extension().is_some_and(|e| e == "inst") {
            let text = std::fs::read_to_string(&path).map_err(read_err)?;
            let inst = parse_instance(&text).map_err(|e| contract(format!("{}: {e}", path.display())))?;
            let id = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            out.push((id, inst));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `G(n, p)` from the given generator.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Seeded random instance; the same arguments always give the same graph.
pub fn random_instance(kind: Kind, r: usize, k: usize, n: usize, p: f64, seed: u64) -> Result<Instance> {
    if !(0.0..=1.0).contains(&p) {
        return Err(contract(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Instance::new(kind, r, k, random_graph(n, p, &mut rng))
}
