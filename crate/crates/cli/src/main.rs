//! `exotic`: command-line front end. Data in and out as JSON; DOT for the
//! poset under `--dot`. Exit 0 on success, 1 on bad input or a cap, 2 on an
//! internal inconsistency.

mod config;
mod io;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use exotic::bipartitions::{collapse, emit_dot, filtration_dims, hasse, is_c_distinguished, phi_c};
use exotic::characters::{all_weights, weyl_dim};
use exotic::exoticlin::{adapted_filtration, orbit_of, representative, verify_adapted};
use exotic::kostant::{self, Kind};
use exotic::rootdata::{bwb, Bwb};
use exotic::sections::{h0_mult, h0_mult_subsets};
use serde_json::{json, Value};

use config::{Config, Overrides};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Internal(String),
}

impl From<exotic::Error> for CliError {
    fn from(e: exotic::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "exotic", version, about = "Exact combinatorics of the exotic nilpotent cone of Sp(2n)")]
struct Cli {
    /// key=value config file; defaults to $EXOTIC_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    rank_cap: Option<usize>,
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    #[arg(long, global = true)]
    closure_depth: Option<usize>,
    #[arg(long, global = true)]
    cache_bytes: Option<usize>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    A,
    B,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "p")]
    P,
    #[value(name = "p'")]
    PPrime,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicity of V_μ in global sections of O(λ).
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "both")]
        route: Route,
    },
    /// Kostant partition function p or p′.
    Kostant {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Borel–Weil–Bott regularization of λ.
    Bwb {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Weight multiplicities of V_μ.
    Weights {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Closure order on bipartitions of n.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dot: bool,
    },
    /// The partition Φ^C(μ,ν).
    Phic {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// The C-distinguished bipartition Φ̂^C(Φ^C(μ,ν)).
    Collapse {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// dim V_{≥a} of a (μ,ν)-filtration.
    FiltrationDims {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Orbit of a pair (v,x) read from JSON.
    OrbitIdentify {
        #[arg(long)]
        file: PathBuf,
    },
    /// A pair (v,x) in the orbit (μ,ν).
    Representative {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// The C-adapted filtration of a pair read from JSON.
    Adapted {
        #[arg(long)]
        file: PathBuf,
    },
    /// Route agreement, nonnegativity and support over a grid of dominant (μ,λ).
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: usize,
    },
}

enum Output {
    Json(Value),
    Text(String),
    /// Printed, then exit 2.
    Failed(Value),
}

fn degree(w: &exotic::rootdata::Weight) -> usize {
    w.l1().unsigned_abs() as usize
}

fn execute(cmd: Command, cfg: &Config) -> Result<Output, CliError> {
    let out = match cmd {
        Command::Mult { n, mu, lambda, route } => {
            cfg.check_rank(n)?;
            let mu = io::parse_weight("--mu", &mu, Some(n))?;
            let lambda = io::parse_weight("--lambda", &lambda, Some(n))?;
            cfg.check_degree(degree(&mu).max(degree(&lambda)))?;
            match route {
                Route::A => json!({"a": io::count(&h0_mult(&mu, &lambda)?.value)}),
                Route::B => json!({"b": io::count(&h0_mult_subsets(&mu, &lambda)?)}),
                Route::Both => {
                    let a = h0_mult(&mu, &lambda)?.value;
                    let b = h0_mult_subsets(&mu, &lambda)?;
                    let v = json!({"a": io::count(&a), "b": io::count(&b), "agree": a == b});
                    if a != b {
                        return Ok(Output::Failed(v));
                    }
                    v
                }
            }
        }
        Command::Kostant { kind, n, mu } => {
            cfg.check_rank(n)?;
            let mu = io::parse_weight("--mu", &mu, Some(n))?;
            cfg.check_degree(degree(&mu))?;
            let (kind, name) = match kind {
                KindArg::P => (Kind::Roots, "p"),
                KindArg::PPrime => (Kind::Exotic, "p'"),
            };
            json!({"kind": name, "mu": io::weight(&mu), "value": io::count(&kostant::kostant(kind, &mu).0)})
        }
        Command::Bwb { n, lambda } => {
            cfg.check_rank(n)?;
            let lambda = io::parse_weight("--lambda", &lambda, Some(n))?;
            match bwb(&lambda) {
                Bwb::Zero => json!({"zero": true}),
                Bwb::Regular { sign, weight } => json!({"zero": false, "sign": sign, "weight": io::weight(&weight)}),
            }
        }
        Command::Weights { n, mu } => {
            cfg.check_rank(n)?;
            let mu = io::parse_weight("--mu", &mu, Some(n))?;
            cfg.check_degree(degree(&mu))?;
            let table = all_weights(&mu)?;
            let dim = weyl_dim(&mu)?;
            if table.total() != dim {
                return Err(CliError::Internal(format!(
                    "weight multiplicities of V_{mu} sum to {}, Weyl dimension is {dim}",
                    table.total()
                )));
            }
            let weights: Vec<Value> = table
                .entries
                .iter()
                .map(|(w, m)| json!({"weight": io::weight(w), "mult": io::count(m)}))
                .collect();
            json!({"mu": io::weight(&mu), "dim": io::count(&dim), "weights": weights})
        }
        Command::Poset { n, dot } => {
            cfg.check_rank(n)?;
            if dot {
                return Ok(Output::Text(emit_dot(n)?));
            }
            let (nodes, edges) = hasse(n)?;
            let nodes: Vec<Value> = nodes
                .iter()
                .map(|b| {
                    let mut v = io::bipartition(b);
                    v["distinguished"] = json!(is_c_distinguished(b));
                    v
                })
                .collect();
            json!({"n": n, "nodes": nodes, "edges": edges})
        }
        Command::Phic { mu, nu } => {
            let b = io::parse_bipartition(&mu, &nu)?;
            cfg.check_rank(b.size())?;
            json!({"lambda": io::partition(&phi_c(&b)?)})
        }
        Command::Collapse { mu, nu } => {
            let b = io::parse_bipartition(&mu, &nu)?;
            cfg.check_rank(b.size())?;
            io::bipartition(&collapse(&b)?)
        }
        Command::FiltrationDims { mu, nu } => {
            let b = io::parse_bipartition(&mu, &nu)?;
            cfg.check_rank(b.size())?;
            let profile = filtration_dims(&b)?;
            let dims: Vec<Value> = profile.dims.iter().rev().map(|(a, d)| json!({"a": a, "dim": d})).collect();
            json!({"total": profile.total, "dims": dims})
        }
        Command::OrbitIdentify { file } => {
            let pair = io::read_pair(&file)?;
            cfg.check_rank(pair.rank())?;
            io::bipartition(&orbit_of(&pair)?)
        }
        Command::Representative { mu, nu } => {
            let b = io::parse_bipartition(&mu, &nu)?;
            cfg.check_rank(b.size())?;
            io::pair(&representative(&b)?)
        }
        Command::Adapted { file } => {
            let pair = io::read_pair(&file)?;
            cfg.check_rank(pair.rank())?;
            let orbit = orbit_of(&pair)?;
            let filt = adapted_filtration(&pair, cfg.closure_depth)?;
            let verified = verify_adapted(&filt, &pair, &orbit)?;
            let levels: Vec<Value> = filt
                .subspaces
                .iter()
                .rev()
                .map(|(a, s)| {
                    let basis: Vec<Value> = s.basis().iter().map(|v| io::vector(v)).collect();
                    json!({"a": a, "dim": s.dim(), "basis": basis})
                })
                .collect();
            let v = json!({
                "orbit": io::bipartition(&orbit),
                "verified": verified,
                "omega": io::matrix(filt.space.omega()),
                "filtration": levels,
            });
            if !verified {
                return Ok(Output::Failed(v));
            }
            v
        }
        Command::Sweep { n, bound } => {
            cfg.check_rank(n)?;
            cfg.check_degree(bound)?;
            let cells = sweep::run(n, bound, cfg.threads).map_err(|e| CliError::Domain(e.to_string()))?;
            let report = sweep::report(n, bound, &cells);
            if report["ok"] != json!(true) {
                return Ok(Output::Failed(report));
            }
            report
        }
    };
    Ok(Output::Json(out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let overrides = Overrides {
        rank_cap: cli.rank_cap,
        degree_cap: cli.degree_cap,
        closure_depth: cli.closure_depth,
        cache_bytes: cli.cache_bytes,
        threads: cli.threads,
    };
    let result = Config::load(cli.config.as_deref(), &overrides).and_then(|cfg| {
        kostant::set_cache_bytes(cfg.cache_bytes);
        execute(cli.command, &cfg)
    });
    match result {
        Ok(Output::Json(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(v)) => {
            println!("{v}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
