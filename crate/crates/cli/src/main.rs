mod cache;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tutte_dfs_core::dfs::{classify_all, Classification};
use tutte_dfs_core::graph::{brute_tutte, ContractedGraph};
use tutte_dfs_core::harness::verify_classification;
use tutte_dfs_core::parallel::EnumConfig;
use tutte_dfs_core::recurrence::TutteTable;
use tutte_dfs_core::{Error, DEFAULT_BIT_LIMIT, HARD_BIT_CAP};

/// Tutte polynomials of complete graphs with a contracted vertex set, and
/// the depth-first-search classification of their connected subgraphs.
///
/// Every global flag can also be set through an environment variable
/// prefixed with TUTTE_DFS_ (for example TUTTE_DFS_THREADS=4).
#[derive(Parser, Debug)]
#[command(name = "tutte-dfs", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads for enumeration [default: available parallelism]
    #[arg(long, global = true, env = "TUTTE_DFS_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Output format
    #[arg(long, global = true, env = "TUTTE_DFS_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Refuse enumerations over more than 2^N edge masks
    #[arg(long, global = true, env = "TUTTE_DFS_BIT_LIMIT", default_value_t = DEFAULT_BIT_LIMIT,
          value_parser = clap::value_parser!(u32).range(1..=HARD_BIT_CAP as i64))]
    bit_limit: u32,
    /// Directory for cached classification results
    #[arg(long, global = true, env = "TUTTE_DFS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache directory for this run
    #[arg(long, global = true, env = "TUTTE_DFS_NO_CACHE")]
    no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tutte polynomial T_n^(r) of K_n with r vertices contracted
    Tutte {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Also expand over every edge subset and compare
        #[arg(long)]
        brute: bool,
    },
    /// Triangular table of T_n^(r) for 1 <= r <= n <= n-max
    Table {
        #[arg(long)]
        n_max: usize,
    },
    /// J_n^(r)(q) = T_n^(r)(1, q)
    Jpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Connected-subgraph edge enumerator C_n^(r)(t)
    Cpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Enumerator P_n^(s)(t) of connected subgraphs of K_{n+1} whose root has degree s
    Ppoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// Classify the connected subgraphs of K_{n+1} by their DFS partition
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Check the classification against the partition-indexed polynomials
    Verify {
        #[arg(long)]
        n: usize,
    },
}

struct Ctx {
    cfg: EnumConfig,
    format: Format,
    cache: Option<cache::Cache>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let g = &cli.global;
    let mut cfg = EnumConfig { bit_limit: g.bit_limit, ..EnumConfig::default() };
    if let Some(t) = g.threads {
        cfg.workers = t as usize;
    }
    let cache = match (&g.cache_dir, g.no_cache) {
        (Some(dir), false) => Some(cache::Cache::new(dir.clone())),
        _ => None,
    };
    let ctx = Ctx { cfg, format: g.format, cache };

    match run(&ctx, &cli.command) {
        Ok((doc, code)) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(doc.as_bytes()).and_then(|_| out.flush()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(
                    Error::InvalidArgument(_) | Error::EnumerationLimit { .. } | Error::PartitionParse { .. },
                ) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(ctx: &Ctx, cmd: &Command) -> anyhow::Result<(String, u8)> {
    let f = ctx.format;
    let doc = match *cmd {
        Command::Tutte { n, r, brute } => {
            check_pair(n, r, "r")?;
            let table = TutteTable::new(n)?;
            let t = table.get(n, r)?;
            if brute {
                let b = brute_tutte(&ContractedGraph::build(n, r)?, &ctx.cfg)?;
                let agree = &b == t;
                let doc = render::tutte_with_brute(f, n, r, t, &b)?;
                return Ok((doc, if agree { 0 } else { 1 }));
            }
            render::tutte(f, n, r, t)?
        }
        Command::Table { n_max } => {
            if n_max < 1 {
                return Err(Error::InvalidArgument("--n-max must be at least 1".into()).into());
            }
            render::table(f, &TutteTable::new(n_max)?)?
        }
        Command::Jpoly { n, r } => {
            check_pair(n, r, "r")?;
            let p = TutteTable::new(n)?.j_poly(n, r)?;
            render::uni(f, &[("n", n), ("r", r)], "q", &p)?
        }
        Command::Cpoly { n, r } => {
            check_pair(n, r, "r")?;
            let p = TutteTable::new(n)?.c_poly(n, r)?;
            render::uni(f, &[("n", n), ("r", r)], "t", &p)?
        }
        Command::Ppoly { n, s } => {
            check_pair(n, s, "s")?;
            let p = TutteTable::new(n + 1)?.p_poly_ns(n, s)?;
            render::uni(f, &[("n", n), ("s", s)], "t", &p)?
        }
        Command::Classify { n } => {
            let cls = classification(ctx, n)?;
            render::classification(f, &cls)?
        }
        Command::Verify { n } => {
            let cls = classification(ctx, n)?;
            let report = verify_classification(&cls)?;
            let code = report.verdict.exit_code() as u8;
            return Ok((render::verification(f, &report)?, code));
        }
    };
    Ok((doc, 0))
}

fn check_pair(n: usize, k: usize, name: &str) -> Result<(), Error> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= {name} <= n, got n={n}, {name}={k}")));
    }
    Ok(())
}

fn classification(ctx: &Ctx, n: usize) -> anyhow::Result<Classification> {
    if n < 1 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()).into());
    }
    if let Some(cls) = ctx.cache.as_ref().and_then(|c| c.load(n)) {
        return Ok(cls);
    }
    let cls = classify_all(n, &ctx.cfg)?;
    if let Some(c) = &ctx.cache {
        c.store(&cls);
    }
    Ok(cls)
}
