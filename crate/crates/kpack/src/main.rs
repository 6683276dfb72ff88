use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kpack_core::bounds::bounds_report;
use kpack_core::matrix::{DEFAULT_TU_CAP, Theorem2Outcome, check_theorem2};
use kpack_core::{
    Error, Family, Graph, IntMatrix, SolverConfig, branch_and_bound_lk, brute_force_lk, determinant,
    is_totally_unimodular, make_family, solve_relaxation, verify_certificate,
};

use kpack::formats::{read_graph, Format};
use kpack::report::{render_bounds, render_relaxation, render_solve, render_tu, OutputFormat};
use kpack::verify::{self, VerifyError, VerifyOptions};

/// Exact solvers for {k}-packing functions of graphs.
#[derive(Parser)]
#[command(name = "kpack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute L{k}(G) with a witness function.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Solve the LP relaxation exactly and certify it with its dual.
    Relax {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Evaluate the diameter, degree and LP bounds.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: u64,
        /// Also compute L{k} and mark which bounds are tight.
        #[arg(long)]
        with_exact: bool,
    },
    /// Check total unimodularity of A+I and the equality L{k} = kL{1} = kZ*.
    TuCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Compare a named family against its closed formula.
    Family {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, value_enum, default_value_t = OutArg::Text)]
        out: OutArg,
    },
    /// Run the acceptance checks and print one line per check.
    VerifyPaper {
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))]
        fixtures: PathBuf,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long, default_value = "edges")]
    format: Format,
    #[arg(long, requires = "n")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutArg::Text)]
    out: OutArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Bnb,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutArg {
    Text,
    Kv,
}

impl From<OutArg> for OutputFormat {
    fn from(o: OutArg) -> OutputFormat {
        match o {
            OutArg::Text => OutputFormat::Text,
            OutArg::Kv => OutputFormat::Kv,
        }
    }
}

/// `auto` uses brute force up to this many vertices.
const AUTO_BRUTE_MAX: usize = 12;

enum Failure {
    Input(String),
    Cap(String),
    /// Report so far, and what went wrong.
    Internal(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::EmptyGraph
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop { .. }
            | Error::Disconnected
            | Error::InvalidParameter(_) => Failure::Input(e.to_string()),
            Error::NotSquare { .. } | Error::DimensionMismatch { .. } => Failure::Internal(String::new(), e.to_string()),
        }
    }
}

fn env_cap(name: &str, default: usize) -> Result<usize, Failure> {
    match std::env::var(name) {
        Err(_) => Ok(default),
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Input(format!("{} must be a non-negative integer, got `{}`", name, v))),
    }
}

fn config() -> Result<SolverConfig, Failure> {
    let mut cfg = SolverConfig::default();
    let cap = env_cap("KPACK_BRUTE_CAP", cfg.brute_max_vertices)?;
    cfg.brute_max_vertices = cap;
    cfg.limited_max_vertices = cap;
    Ok(cfg)
}

fn load(input: &Input) -> Result<Graph, Failure> {
    match (&input.graph, input.family, input.n) {
        (Some(path), _, _) => read_graph(path, input.format).map_err(|e| Failure::Input(e.to_string())),
        (None, Some(family), Some(n)) => Ok(make_family(family, n)?),
        _ => Err(Failure::Input("give either --graph PATH or --family NAME --n N".into())),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Solve { input, k, method } => {
            let g = load(&input)?;
            let cfg = config()?;
            let r = match method {
                MethodArg::Brute => brute_force_lk(&g, k, &cfg)?,
                MethodArg::Bnb => branch_and_bound_lk(&g, k, &cfg)?,
                MethodArg::Auto if g.n() <= AUTO_BRUTE_MAX => brute_force_lk(&g, k, &cfg)?,
                MethodArg::Auto => branch_and_bound_lk(&g, k, &cfg)?,
            };
            if !r.function().is_some_and(|f| f.is_feasible(&g, k) && f.total() == r.optimum) {
                return Err(Failure::Internal(String::new(), "solver returned an infeasible witness".into()));
            }
            Ok(render_solve(&r, k, input.out.into()))
        }
        Command::Relax { input, k } => {
            let g = load(&input)?;
            let lp = solve_relaxation(&g, k)?;
            let certified = verify_certificate(&g, k, &lp)?;
            let text = render_relaxation(&lp, certified, input.out.into());
            if certified {
                Ok(text)
            } else {
                Err(Failure::Internal(text, "dual certificate rejected".into()))
            }
        }
        Command::Bounds { input, k, with_exact } => {
            let g = load(&input)?;
            let r = bounds_report(&g, k, with_exact, &config()?)?;
            let text = render_bounds(&r, input.out.into());
            if r.is_consistent() {
                Ok(text)
            } else {
                Err(Failure::Internal(text, "bounds do not bracket the exact value".into()))
            }
        }
        Command::TuCheck { input, k } => {
            let g = load(&input)?;
            let cap = env_cap("KPACK_TU_CAP", DEFAULT_TU_CAP)?;
            let a = IntMatrix::from(&g.neighborhood_matrix());
            let det = determinant(&a)?;
            let verdict = is_totally_unimodular(&a, cap)?;
            let thm = check_theorem2(&g, k, cap, &config()?)?;
            let text = render_tu(&det, &verdict, &thm, input.out.into());
            if thm.outcome == Theorem2Outcome::Violated {
                Err(Failure::Internal(text, "TU matrix without the equality".into()))
            } else {
                Ok(text)
            }
        }
        Command::Family { family, n, k, out } => {
            let g = make_family(family, n)?;
            let cfg = config()?;
            let r = if g.n() <= AUTO_BRUTE_MAX {
                brute_force_lk(&g, k, &cfg)?
            } else {
                branch_and_bound_lk(&g, k, &cfg)?
            };
            let formula = kpack_core::bounds::family_formula(family, n, k).ok();
            let mut text = render_solve(&r, k, out.into());
            let sep = match out {
                OutArg::Text => " ",
                OutArg::Kv => "=",
            };
            let shown = formula.map_or("none".to_string(), |f| f.to_string());
            text.push_str(&format!("formula{}{}\n", sep, shown));
            match formula {
                Some(f) if f != r.optimum => Err(Failure::Internal(text, "formula disagrees".into())),
                _ => Ok(text),
            }
        }
        Command::VerifyPaper {
            fixtures,
            seed,
            only,
            mutate,
        } => {
            if let Some(bad) = only.iter().find(|id| !verify::criterion_ids().any(|c| c == **id)) {
                return Err(Failure::Input(format!("no criterion {}", bad)));
            }
            let mut opts = VerifyOptions::new(fixtures);
            opts.seed = seed;
            opts.mutate = mutate;
            opts.config = config()?;
            let results = verify::run(&opts, &only).map_err(|e| match e {
                VerifyError::Solver(e) => Failure::from(e),
                other => Failure::Input(other.to_string()),
            })?;
            let text = verify::render(&results);
            if results.iter().all(|r| r.pass()) {
                Ok(text)
            } else {
                Err(Failure::Internal(text, "some checks failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{}", text);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
        Err(Failure::Internal(report, msg)) => {
            // failed checks still print their report on stdout
            print!("{}", report);
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}
