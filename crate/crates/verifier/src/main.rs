use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorel_core::equivariant::{character_a, gr_components_bivariate, Variant};
use minorel_core::linalg::RankMethod;
use minorel_core::rees::{rees_ideal, ReesMethod};
use minorel_core::symfunc::{bivariate_wedge_power, DEFAULT_DEGREE_CAP};
use minorel_core::{BiRep, Partition};
use minorel_verifier::report::emit;
use minorel_verifier::store::Store;
use minorel_verifier::suite::{exit_code, run_all, run_profile, Profile};
use minorel_verifier::{resolve, Config, Format, Request, VerifierError};

#[derive(Parser)]
#[command(name = "minorel", version, about = "Relations among 2x2 minors and permanents: predictions against witnesses")]
struct Cli {
    /// key = value config file (caps, primes, seed, workers, timings)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Table)]
    format: OutFormat,
    /// Recompute even when a stored report exists.
    #[arg(long, global = true)]
    fresh: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Minors,
    Permanents,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Minors => Variant::Minors,
            VariantArg::Permanents => Variant::Permanents,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RankArg {
    Exact,
    Modular,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
    Long,
}

#[derive(Clone, Copy, ValueEnum)]
enum Piece {
    /// the algebra A_d
    A,
    /// Λ^k W
    Wedge,
    /// gr table of F_{λ,μ}
    Gr,
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct RankOpts {
    #[arg(long, value_enum)]
    rank: Option<RankArg>,
    #[arg(long)]
    seed: Option<u64>,
}

impl RankOpts {
    fn method(&self) -> Option<RankMethod> {
        self.rank.map(|r| match r {
            RankArg::Exact => RankMethod::Exact,
            RankArg::Modular => RankMethod::Modular,
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print characters: A_d, Λ^k W, or gr tables.
    Decompose {
        #[arg(value_enum)]
        piece: Piece,
        /// degree d of A_d, or k of Λ^k W
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Minors)]
        variant: VariantArg,
        /// truncate to GL_m × GL_n
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// λ for gr tables, e.g. "1,1,1"
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        /// largest |α| listed in a gr table
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
    /// Verify one statement.
    Verify {
        statement: String,
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[command(flatten)]
        rank: RankOpts,
    },
    /// First Koszul homology, checked against the predicted characters.
    Koszul {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = VariantArg::Minors)]
        variant: VariantArg,
        #[command(flatten)]
        rank: RankOpts,
    },
    /// Minimal generators of the Rees ideal by bidegree.
    Rees {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        rank: RankOpts,
    },
    /// Decide whether the Rees algebra is of fiber type.
    FiberType {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        rank: RankOpts,
    },
    /// Run a fixed set of tasks.
    Suite {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: Option<&str>, what: &str) -> Result<Partition, VerifierError> {
    let s = s.ok_or_else(|| VerifierError::Usage(format!("--{what} is required")))?;
    Ok(s.parse::<Partition>()?)
}

fn show(rep: BiRep, m: Option<usize>, n: Option<usize>) -> String {
    match (m, n) {
        (Some(m), Some(n)) => format!("{}   (dim {})", rep.truncate(m, n), rep.dim_at(m, n)),
        _ => rep.to_string(),
    }
}

fn real_main(cli: Cli) -> Result<i32, VerifierError> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let format = match cli.format {
        OutFormat::Table => Format::Table,
        OutFormat::Json => Format::Json,
    };
    let store = Store::from_env();
    let run_requests = |reqs: Vec<Request>| -> Result<i32, VerifierError> {
        let tasks = reqs.iter().map(|r| resolve(r, &cfg)).collect::<Result<Vec<_>, _>>()?;
        let reports = run_all(&tasks, &cfg, store.as_ref(), cli.fresh)?;
        for r in &reports {
            println!("{}", emit(r, format));
        }
        Ok(exit_code(&reports))
    };
    match cli.cmd {
        Cmd::Decompose { piece, d, variant, m, n, lambda, mu, cap } => {
            let variant = Variant::from(variant);
            match piece {
                Piece::A => println!("A_{d} = {}", show(character_a(d, variant), m, n)),
                Piece::Wedge => {
                    let w = variant.apply(BiRep::single(Partition::column(2), Partition::column(2)));
                    let rep = bivariate_wedge_power(&w, d, DEFAULT_DEGREE_CAP.max(2 * d))?;
                    println!("Λ^{d} W = {}", show(rep, m, n));
                }
                Piece::Gr => {
                    let l = parse_partition(lambda.as_deref(), "lambda")?;
                    let u = parse_partition(mu.as_deref(), "mu")?;
                    let table = gr_components_bivariate(&l, &u, cap)?;
                    for ((s, t), labels) in &table.entries {
                        let row: Vec<String> = labels.iter().map(|(a, b)| format!("S[{a}]⊠S[{b}]")).collect();
                        println!("({s},{t})  {}", row.join(" + "));
                    }
                }
            }
            Ok(0)
        }
        Cmd::Verify { statement, shape, dmax, r, variant, rank } => run_requests(vec![Request {
            statement,
            m: shape.m,
            n: shape.n,
            dmax,
            r,
            variant: variant.map(Variant::from),
            rank: rank.method(),
            seed: rank.seed,
        }]),
        Cmd::Koszul { shape, dmax, variant, rank } => {
            let variant = Variant::from(variant);
            let id = if variant == Variant::Minors { "thm-3.1" } else { "thm-3.2" };
            run_requests(vec![Request {
                statement: id.into(),
                m: shape.m,
                n: shape.n,
                dmax,
                r: None,
                variant: Some(variant),
                rank: rank.method(),
                seed: rank.seed,
            }])
        }
        Cmd::Rees { shape, rank } => {
            let rc = cfg.rank_config(rank.method().unwrap_or(cfg.rank), rank.seed.unwrap_or(cfg.seed));
            let report = rees_ideal(shape.m, shape.n, ReesMethod::Groebner, &rc)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Table => {
                    println!("Rees ideal of the 2x2 minors, m={} n={}  (bidegree (d, e), e = 2·T-degree)", shape.m, shape.n);
                    for ((d, e), c) in &report.minimal {
                        println!("  ({d},{e})  {c}");
                    }
                    println!("fiber type: {}", report.is_fiber_type());
                }
            }
            Ok(0)
        }
        Cmd::FiberType { shape, rank } => run_requests(vec![Request {
            statement: "que-7.1".into(),
            m: shape.m,
            n: shape.n,
            rank: rank.method(),
            seed: rank.seed,
            ..Default::default()
        }]),
        Cmd::Suite { profile } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
                ProfileArg::Long => Profile::Long,
            };
            let reports = run_profile(profile, &cfg, store.as_ref(), cli.fresh)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
                Format::Table => {
                    for r in &reports {
                        let t = &r.task;
                        println!(
                            "{:<16} {:<11} m={} n={} dmax={} r={} {}",
                            r.verdict.to_string().to_uppercase(),
                            t.statement,
                            t.m,
                            t.n,
                            t.dmax,
                            t.r,
                            t.variant
                        );
                    }
                }
            }
            Ok(exit_code(&reports))
        }
    }
}
