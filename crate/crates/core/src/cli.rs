//! Command-line surface. `run` returns the process exit code:
//! 0 = YES, 1 = NO, 2 = error, 3 = oracle mismatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dp::{RepsetMode, SolverConfig};
use crate::error::{Error, Result};
use crate::format::{
    parse_instance, parse_solution, resolve_solution, serialize_instance, serialize_solution,
    Instance,
};
use crate::graph::EdgeSet;
use crate::oracle::{brute_force, gen_yes_instance, DEFAULT_BRUTE_FORCE_MAX_EDGES};
use crate::problem::Problem;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eulerdel", version, about = "Exact Eulerian edge deletion")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether at most k deletions reach the target property
    Solve(RunConfig),
    /// Check a solution file against an instance
    Verify(VerifyArgs),
    /// Write a planted YES instance and its planted-set sidecar
    Gen(GenArgs),
    /// Brute-force minimum solution size up to k
    Oracle(OracleArgs),
    /// Solve a seeded grid of generated instances and write CSV
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ueed,
    Ucoed,
    Deed,
}

impl From<Mode> for Problem {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Ueed => Problem::Ueed,
            Mode::Ucoed => Problem::Ucoed,
            Mode::Deed => Problem::Deed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Truncate {
    Random,
    Off,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Truncate::Random)]
    pub truncate: Truncate,
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(8..=32))]
    pub field_bits: u32,
    #[arg(long)]
    pub json: bool,
    /// Cross-check the verdict against brute force when m <= 22
    #[arg(long)]
    pub oracle_check: bool,
}

impl RunConfig {
    pub fn solver_config(&self) -> SolverConfig {
        solver_config(self.truncate, self.field_bits, self.seed)
    }
}

fn solver_config(truncate: Truncate, field_bits: u32, seed: u64) -> SolverConfig {
    SolverConfig {
        repset: match truncate {
            Truncate::Random => RepsetMode::Random,
            Truncate::Off => RepsetMode::Off,
        },
        field_bits,
        seed,
        ..SolverConfig::default()
    }
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub input: PathBuf,
    /// Lines `e u v` or `a u v`
    #[arg(long)]
    pub solution: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub extra: usize,
    /// Approximate size of the Eulerian base (default n)
    #[arg(long)]
    pub base_edges: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Instance path; the planted set goes to `<output>.planted`
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_MAX_EDGES)]
    pub max_edges: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Vertex counts, comma separated
    #[arg(long, value_delimiter = ',', default_value = "20")]
    pub n: Vec<usize>,
    /// Planted sizes, comma separated; each is also the budget
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    pub k: Vec<usize>,
    /// Seeds 0..seeds per grid point
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    /// Eulerian base size as a multiple of n
    #[arg(long, default_value_t = 2.0)]
    pub edge_factor: f64,
    #[arg(long, value_enum, default_value_t = Truncate::Random)]
    pub truncate: Truncate,
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(8..=32))]
    pub field_bits: u32,
    /// CSV path (default stdout)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Machine-readable result of one solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub verdict: &'static str,
    pub size: Option<usize>,
    /// 1-based endpoint pairs.
    pub edges: Vec<(usize, usize)>,
    pub rounds: usize,
    pub cells: usize,
    pub repset_sizes: Vec<usize>,
    pub seed: u64,
    pub wall_ms: u64,
    #[serde(skip)]
    pub deletion: Option<EdgeSet>,
    #[serde(skip)]
    pub max_cell: usize,
}

impl SolveReport {
    pub fn is_yes(&self) -> bool {
        self.deletion.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self, instance: &Instance) -> String {
        match &self.deletion {
            Some(s) => format!("YES {}\n{}", s.len(), serialize_solution(instance, s)),
            None => "NO\n".to_string(),
        }
    }
}

fn endpoints(instance: &Instance, s: &EdgeSet) -> Vec<(usize, usize)> {
    s.iter()
        .map(|id| {
            let (u, v) = match instance {
                Instance::Undirected(g) => g.edge(id),
                Instance::Directed(d) => d.arc(id),
            };
            (u + 1, v + 1)
        })
        .collect()
}

/// Runs the solver and packages its outcome.
pub fn solve_report(
    problem: Problem,
    instance: &Instance,
    k: usize,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    let start = Instant::now();
    let outcome = problem.solve(instance, k, cfg)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    let stats = outcome.stats;
    Ok(SolveReport {
        verdict: if outcome.deletion.is_some() {
            "YES"
        } else {
            "NO"
        },
        size: outcome.deletion.as_ref().map(EdgeSet::len),
        edges: outcome
            .deletion
            .as_ref()
            .map(|s| endpoints(instance, s))
            .unwrap_or_default(),
        rounds: stats.rounds,
        cells: stats.cells,
        repset_sizes: stats.repset_sizes.clone(),
        seed: stats.seed,
        wall_ms,
        max_cell: stats.max_cell,
        deletion: outcome.deletion,
    })
}

fn read_instance(path: &Path) -> Result<Instance> {
    Ok(parse_instance(&fs::read_to_string(path)?)?)
}

/// Parses arguments and runs; the return value is the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve(cfg) => cmd_solve(&cfg, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Oracle(args) => cmd_oracle(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

pub fn cmd_solve(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let instance = read_instance(&cfg.input)?;
    let problem = Problem::from(cfg.mode);
    let report = solve_report(problem, &instance, cfg.k, &cfg.solver_config())?;
    if cfg.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{}", report.to_text(&instance))?;
    }
    if cfg.oracle_check && instance.m() <= DEFAULT_BRUTE_FORCE_MAX_EDGES {
        let truth = brute_force(problem, &instance, cfg.k, DEFAULT_BRUTE_FORCE_MAX_EDGES)?;
        if truth.min_size != report.size {
            eprintln!(
                "oracle mismatch: solver {:?}, brute force {:?}",
                report.size, truth.min_size
            );
            return Ok(EXIT_MISMATCH);
        }
    }
    Ok(if report.is_yes() { EXIT_YES } else { EXIT_NO })
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let instance = read_instance(&args.input)?;
    let problem = Problem::from(args.mode);
    let pairs = parse_solution(&fs::read_to_string(&args.solution)?, problem.is_directed())?;
    let Some(set) = resolve_solution(&instance, &pairs) else {
        writeln!(out, "INVALID: solution lists a missing or repeated edge")?;
        return Ok(EXIT_NO);
    };
    if problem.verify(&instance, &set)? {
        writeln!(out, "OK")?;
        Ok(EXIT_YES)
    } else {
        writeln!(out, "FAIL")?;
        Ok(EXIT_NO)
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".planted");
    PathBuf::from(name)
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let g = gen_yes_instance(
        args.mode.into(),
        args.n,
        args.extra,
        args.base_edges,
        args.seed,
    )?;
    fs::write(&args.output, serialize_instance(&g.instance))?;
    let planted = sidecar(&args.output);
    fs::write(&planted, serialize_solution(&g.instance, &g.planted))?;
    writeln!(
        out,
        "wrote {} (n={}, m={}, k={}) and {}",
        args.output.display(),
        g.instance.n(),
        g.instance.m(),
        g.k,
        planted.display()
    )?;
    Ok(EXIT_YES)
}

#[derive(Serialize)]
struct OracleReport {
    min_size: Option<usize>,
    witness: Option<Vec<(usize, usize)>>,
}

pub fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let instance = read_instance(&args.input)?;
    let verdict = brute_force(args.mode.into(), &instance, args.k, args.max_edges)?;
    if args.json {
        let report = OracleReport {
            min_size: verdict.min_size,
            witness: verdict.witness.as_ref().map(|s| endpoints(&instance, s)),
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        )?;
    } else {
        match (&verdict.min_size, &verdict.witness) {
            (Some(size), Some(s)) => {
                write!(out, "MIN {size}\n{}", serialize_solution(&instance, s))?
            }
            _ => writeln!(out, "NONE within k={}", args.k)?,
        }
    }
    Ok(if verdict.min_size.is_some() {
        EXIT_YES
    } else {
        EXIT_NO
    })
}

pub const BENCH_HEADER: &str = "n,m,k,mode,verdict,size,wall_ms,max_cell,repset_max";

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.edge_factor.is_nan() || args.edge_factor < 1.0 {
        return Err(Error::InvalidArgument(
            "--edge-factor must be at least 1".into(),
        ));
    }
    let problem = Problem::from(args.mode);
    // the generator plants Eulerian bases; ucoed runs reuse the undirected ones
    let gen_mode = if problem.is_directed() {
        Problem::Deed
    } else {
        Problem::Ueed
    };
    let mut csv = String::new();
    csv.push_str(BENCH_HEADER);
    csv.push('\n');
    for &n in &args.n {
        let base = (args.edge_factor * n as f64).round() as usize;
        for &k in &args.k {
            for seed in 0..args.seeds {
                let g = gen_yes_instance(gen_mode, n, k, Some(base), seed)?;
                let cfg = solver_config(args.truncate, args.field_bits, seed);
                let r = solve_report(problem, &g.instance, k, &cfg)?;
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    g.instance.n(),
                    g.instance.m(),
                    k,
                    problem,
                    r.verdict,
                    r.size.map(|s| s.to_string()).unwrap_or_default(),
                    r.wall_ms,
                    r.max_cell,
                    r.repset_sizes.iter().copied().max().unwrap_or(0),
                ));
            }
        }
    }
    match &args.output {
        Some(path) => fs::write(path, csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(EXIT_YES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_repeat_up_to_timing() {
        for seed in 0..5 {
            let g = gen_yes_instance(Problem::Ueed, 20, 3, Some(40), seed).unwrap();
            let cfg = solver_config(Truncate::Random, 16, seed);
            let mut a = solve_report(Problem::Ueed, &g.instance, 3, &cfg).unwrap();
            let mut b = solve_report(Problem::Ueed, &g.instance, 3, &cfg).unwrap();
            a.wall_ms = 0;
            b.wall_ms = 0;
            assert_eq!(a.to_json(), b.to_json());
            assert_eq!(a.to_text(&g.instance), b.to_text(&g.instance));
        }
    }

    #[test]
    fn cli_parses_flags() {
        let cli = Cli::try_parse_from([
            "eulerdel",
            "solve",
            "--mode",
            "deed",
            "--k",
            "3",
            "--input",
            "x",
            "--truncate",
            "off",
            "--field-bits",
            "8",
            "--json",
            "--seed",
            "9",
        ])
        .unwrap();
        let Command::Solve(cfg) = cli.command else {
            panic!("expected solve")
        };
        assert_eq!(cfg.mode, Mode::Deed);
        let solver = cfg.solver_config();
        assert_eq!(
            (solver.repset, solver.field_bits, solver.seed),
            (RepsetMode::Off, 8, 9)
        );
        assert!(Cli::try_parse_from([
            "eulerdel",
            "solve",
            "--mode",
            "ueed",
            "--k",
            "1",
            "--input",
            "x",
            "--field-bits",
            "33"
        ])
        .is_err());
    }
}
