use clap::{Args, Parser, Subcommand, ValueEnum};
use eigenmod::bench::{bench, load_corpus, random_instance, solve_verified, Engine, RunRecord, SolveConfig};
use eigenmod::graph::{families, parse_graph};
use eigenmod::io::{parse_instance, parse_solution, serialize_instance, serialize_solution};
use eigenmod::kernel::kernelize_2eea;
use eigenmod::oracle::verify;
use eigenmod::reductions::{
    gen_2eea_from_3partition, gen_2eee_from_triangle_partition, gen_2evd_from_is_cliques, gen_2evd_from_is_copies,
    gen_reea_from_3partition, gen_reed_from_triangle_partition, gen_revd_from_vc, map_forward_solution, Construction,
    ItemShape, ReducedInstance,
};
use eigenmod::spectral::{char_poly, distinct_eigenvalue_count, float_spectrum, DEFAULT_TOL};
use eigenmod::{Error, Graph, Instance, Kind};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_INDETERMINATE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "eigenmod",
    version,
    about = "Graph modification toward few distinct adjacency eigenvalues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and print a verified run record.
    Solve {
        instance: PathBuf,
        /// oracle, fpt, poly, kernel, kernel+oracle or auto.
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Give up r-EVD branching after this many nodes.
        #[arg(long)]
        node_limit: Option<u64>,
        /// Also write the solution here on YES.
        #[arg(long)]
        solution_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a solution file against an instance file.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply the 2-EEA reduction rules and print the trace.
    Kernelize {
        instance: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write generated instances.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Exact and floating spectrum of a graph or instance file.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run engines over every `*.inst` file in a directory.
    Bench {
        corpus: PathBuf,
        /// Comma-separated engine list.
        #[arg(long, default_value = "oracle,fpt")]
        engines: String,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// A hardness construction applied to a source instance.
    Reduction(ReductionArgs),
    /// Seeded G(n, p) instances.
    Random {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Clique,
    Path,
    Cycle,
}

#[derive(Args)]
struct ReductionArgs {
    /// is-copies, is-cliques, revd-vc, eea-3partition, reea-3partition,
    /// reed-triangles or eee-triangles.
    #[arg(long)]
    construction: String,
    /// Source graph file (`n m` edge list).
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Named source graph: k4, k33, prism, cube, petersen, mobius-kantor,
    /// or complete:N, cycle:N, path:N, empty:N.
    #[arg(long)]
    family: Option<String>,
    /// Independent-set target.
    #[arg(long)]
    z: Option<usize>,
    /// Copies per vertex for is-copies.
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Vertex-cover budget for revd-vc.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Comma-separated 3-Partition items.
    #[arg(long)]
    items: Option<String>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, value_enum, default_value = "clique")]
    shape: Shape,
    /// Instance path; the sidecar goes to `<out>.sidecar` and, when the
    /// source is YES, the mapped solution to `<out>.sol`.
    #[arg(long)]
    out: PathBuf,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Solve {
            instance,
            engine,
            node_limit,
            solution_out,
            json,
        } => solve(&instance, &engine, node_limit, solution_out.as_deref(), json),
        Command::Verify {
            instance,
            solution,
            json,
        } => verify_cmd(&instance, &solution, json),
        Command::Kernelize { instance, json } => kernelize(&instance, json),
        Command::Generate { what } => match what {
            Generate::Reduction(args) => generate_reduction(&args),
            Generate::Random {
                kind,
                r,
                k,
                n,
                p,
                seed,
                count,
                out_dir,
            } => generate_random(&kind, r, k, n, p, seed, count, &out_dir),
        },
        Command::Spectrum { file, json } => spectrum(&file, json),
        Command::Bench {
            corpus,
            engines,
            node_limit,
            json,
        } => bench_cmd(&corpus, &engines, node_limit, json),
    }
}

fn print_record(rec: &RunRecord, json: bool) {
    if json {
        println!("{}", rec.to_json());
    } else {
        println!("{}", rec.to_line());
    }
}

fn solve(path: &Path, engine: &str, node_limit: Option<u64>, out: Option<&Path>, json: bool) -> Result<u8, Failure> {
    let inst = load_instance(path)?;
    let engine: Engine = engine.parse()?;
    let id = path.file_stem().unwrap_or_default().to_string_lossy();
    let rec = solve_verified(&id, &inst, engine, SolveConfig { node_limit })?;
    print_record(&rec, json);
    if let (Some(out), Some(sol)) = (out, &rec.solution) {
        write(out, &serialize_solution(sol))?;
    }
    Ok(match rec.answer.as_str() {
        "YES" => 0,
        "NO" => EXIT_NO,
        _ => EXIT_INDETERMINATE,
    })
}

fn verify_cmd(inst_path: &Path, sol_path: &Path, json: bool) -> Result<u8, Failure> {
    let inst = load_instance(inst_path)?;
    let sol = parse_solution(&read(sol_path)?, inst.kind).map_err(|e| usage(format!("{}: {e}", sol_path.display())))?;
    let v = verify(&inst, &sol)?;
    let verdict = if v.accepted { "accept" } else { "reject" };
    if json {
        println!(
            "{}",
            json!({
                "verdict": verdict,
                "size": v.size,
                "budget": inst.k,
                "within_budget": v.within_budget,
                "distinct_count": v.distinct_count,
                "r": inst.r,
            })
        );
    } else {
        println!(
            "verdict={verdict} size={} budget={} within_budget={} distinct={} r={}",
            v.size, inst.k, v.within_budget, v.distinct_count, inst.r
        );
    }
    Ok(if v.accepted { 0 } else { EXIT_NO })
}

fn kernelize(path: &Path, json: bool) -> Result<u8, Failure> {
    let inst = load_instance(path)?;
    if (inst.kind, inst.r) != (Kind::Eea, 2) {
        return Err(usage(format!(
            "kernelize needs an EEA r=2 instance, got {} r={}",
            inst.kind, inst.r
        )));
    }
    let t = kernelize_2eea(&inst.graph, inst.k);
    let final_text = t.final_instance.as_ref().map(|i| serialize_instance(i, &[]));
    if json {
        println!(
            "{}",
            json!({
                "rules": t.rules_applied,
                "verdict": t.verdict,
                "final_budget": t.final_budget,
                "kernel_vertices": t.kernel_vertices(),
                "size_bound": t.size_bound(),
                "within_bound": t.within_bound(),
                "final_instance": final_text,
            })
        );
    } else {
        for a in &t.rules_applied {
            println!("rule={} delta={} detail={:?}", a.rule, a.budget_delta, a.detail);
        }
        println!(
            "verdict={:?} final_budget={} kernel_vertices={} size_bound={} within_bound={}",
            t.verdict,
            t.final_budget,
            t.kernel_vertices(),
            t.size_bound(),
            t.within_bound()
        );
        if let Some(text) = final_text {
            print!("{text}");
        }
    }
    Ok(match t.verdict {
        eigenmod::kernel::Verdict::No => EXIT_NO,
        _ => 0,
    })
}

fn named_family(name: &str) -> Result<Graph, Failure> {
    let sized = |f: fn(usize) -> Graph, arg: &str| {
        arg.parse::<usize>()
            .map(f)
            .map_err(|_| usage(format!("invalid size in family '{name}'")))
    };
    match name.split_once(':') {
        Some(("complete", n)) => sized(families::complete, n),
        Some(("cycle", n)) => sized(families::cycle, n),
        Some(("path", n)) => sized(families::path, n),
        Some(("empty", n)) => sized(Graph::empty, n),
        None => match name {
            "k4" => Ok(families::complete(4)),
            "k33" => Ok(families::complete_bipartite(3, 3)),
            "prism" => Ok(families::prism()),
            "cube" => Ok(families::cube()),
            "petersen" => Ok(families::petersen()),
            "mobius-kantor" => Ok(families::mobius_kantor()),
            _ => Err(usage(format!("unknown family '{name}'"))),
        },
        _ => Err(usage(format!("unknown family '{name}'"))),
    }
}

fn generate_reduction(a: &ReductionArgs) -> Result<u8, Failure> {
    let construction: Construction = a.construction.parse()?;
    let graph = || -> Result<Graph, Failure> {
        match (&a.graph, &a.family) {
            (Some(p), _) => parse_graph(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display()))),
            (None, Some(f)) => named_family(f),
            (None, None) => Err(usage(format!("{construction} needs --graph or --family"))),
        }
    };
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("{construction} needs --{flag}")));
    let items = || -> Result<Vec<usize>, Failure> {
        let text = a
            .items
            .as_deref()
            .ok_or_else(|| usage(format!("{construction} needs --items")))?;
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| usage(format!("invalid item '{t}'")))
            })
            .collect()
    };
    let shape = match a.shape {
        Shape::Clique => ItemShape::Clique,
        Shape::Path => ItemShape::Path,
        Shape::Cycle => ItemShape::Cycle,
    };
    let red: ReducedInstance = match construction {
        Construction::IsCopies => gen_2evd_from_is_copies(&graph()?, need(a.z, "z")?, a.d)?,
        Construction::IsCliques => gen_2evd_from_is_cliques(&graph()?, need(a.z, "z")?)?,
        Construction::RevdFromVc => gen_revd_from_vc(&graph()?, need(a.k, "k")?, a.r)?,
        Construction::EeaFrom3Partition => gen_2eea_from_3partition(&items()?, need(a.b, "b")?, shape)?,
        Construction::ReeaFrom3Partition => gen_reea_from_3partition(&items()?, need(a.b, "b")?, a.r)?,
        Construction::ReedFromTriangles => gen_reed_from_triangle_partition(&graph()?, a.r)?,
        Construction::EeeFromTriangles => gen_2eee_from_triangle_partition(&graph()?)?,
    };
    // small sources are solved outright so the sidecar can state the answer
    let answer = red.source.solve().ok();
    let expected = answer.as_ref().map(Option::is_some);
    let comments = vec![format!("construction={construction}")];
    write(&a.out, &serialize_instance(&red.instance, &comments))?;
    write(&sidecar_path(&a.out, "sidecar"), &red.sidecar(expected))?;
    if let Some(Some(src)) = &answer {
        let sol = map_forward_solution(&red, src)?;
        write(&sidecar_path(&a.out, "sol"), &serialize_solution(&sol))?;
    }
    println!(
        "construction={construction} vertices={} edges={} k={} expected={}",
        red.instance.graph.n(),
        red.instance.graph.m(),
        red.instance.k,
        match expected {
            Some(true) => "YES",
            Some(false) => "NO",
            None => "unknown",
        }
    );
    Ok(0)
}

fn sidecar_path(out: &Path, ext: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

#[allow(clippy::too_many_arguments)]
fn generate_random(
    kind: &str,
    r: usize,
    k: usize,
    n: usize,
    p: f64,
    seed: u64,
    count: u64,
    dir: &Path,
) -> Result<u8, Failure> {
    let kind: Kind = kind.parse()?;
    std::fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
    for i in 0..count {
        let s = seed + i;
        let inst = random_instance(kind, r, k, n, p, s)?;
        let comments = vec![format!("seed={s} n={n} p={p}")];
        let name = format!("{}-r{r}-k{k}-n{n}-s{s:06}.inst", kind.as_str().to_ascii_lowercase());
        write(&dir.join(name), &serialize_instance(&inst, &comments))?;
    }
    println!("wrote {count} instances to {}", dir.display());
    Ok(0)
}

fn spectrum(path: &Path, json: bool) -> Result<u8, Failure> {
    let text = read(path)?;
    // accept either an instance or a bare graph
    let g = match parse_instance(&text) {
        Ok(inst) => inst.graph,
        Err(_) => parse_graph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
    };
    let poly = char_poly(&g);
    let distinct = distinct_eigenvalue_count(&g);
    let fs = float_spectrum(&g, DEFAULT_TOL)?;
    if json {
        println!(
            "{}",
            json!({
                "n": g.n(),
                "m": g.m(),
                "char_poly": poly.to_coefficient_string(),
                "distinct": distinct,
                "eigenvalues": fs.values,
            })
        );
    } else {
        println!("n={} m={}", g.n(), g.m());
        println!("char_poly={}", poly.to_coefficient_string());
        println!("distinct={distinct}");
        // print values that round to zero without a sign
        let vals: Vec<String> = fs
            .values
            .iter()
            .map(|&x| format!("{:.6}", if x.abs() < 5e-7 { 0.0 } else { x }))
            .collect();
        println!("eigenvalues={}", vals.join(","));
    }
    Ok(0)
}

fn bench_cmd(dir: &Path, engines: &str, node_limit: Option<u64>, json: bool) -> Result<u8, Failure> {
    let engines: Vec<Engine> = engines
        .split(',')
        .map(|e| e.trim().parse::<Engine>())
        .collect::<Result<_, _>>()?;
    let corpus = load_corpus(dir)?;
    let report = bench(&corpus, &engines, SolveConfig { node_limit });
    for rec in &report.records {
        print_record(rec, json);
    }
    if report.disagreements.is_empty() {
        return Ok(0);
    }
    for d in &report.disagreements {
        eprintln!("{d}");
    }
    Err(Failure {
        code: EXIT_NO,
        message: format!("{} instance(s) with disagreeing engines", report.disagreements.len()),
    })
}
