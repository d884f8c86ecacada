//! `lamod`: generate universal λ-ring polynomials and run the verification
//! suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lamod_core::suite::{self, ModuleSpec, RingSpec, RunConfig, Suite};
use lamod_core::universal::{Caps, Generator, Kind, PolyCache, UniversalError, UniversalId};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "lamod", version)]
#[command(about = "Universal polynomials of λ-rings and verification of λ-ring and λ-module axioms")]
struct Cli {
    /// Directory for cached universal polynomials. Without it nothing is
    /// cached on disk.
    #[arg(long, global = true, env = "LAMOD_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Seed for sampled pairs and elements.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest n for P_n.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    product_cap: u32,

    /// Largest n·m for P_{n,m}.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    composition_cap: u32,

    /// Largest n for Q_n.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    newton_cap: u32,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Generate beyond the caps.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Q_n, P_n or P_{n,m} in the elementary bases.
    Gen {
        #[arg(value_enum)]
        kind: KindArg,
        /// n for q and p; n m for pnm.
        #[arg(required = true, num_args = 1..=2, value_parser = clap::value_parser!(u32).range(1..))]
        params: Vec<u32>,
    },
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Ring instance, e.g. `binomial-int` or `line-group-ring:Z/2xZ/3`.
        /// Repeatable; replaces the default roster.
        #[arg(long = "ring")]
        rings: Vec<RingSpec>,
        /// Module over each ring; only `adams` is known.
        #[arg(long = "module")]
        modules: Vec<ModuleSpec>,
    },
    /// Inspect or empty the cache directory.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Q,
    P,
    Pnm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Universal,
    Lambda,
    Module,
    All,
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    List,
    Clear,
}

impl Cli {
    fn caps(&self) -> Caps {
        Caps { product: self.product_cap, composition: self.composition_cap, newton: self.newton_cap }
    }

    fn cache(&self) -> Option<PolyCache> {
        self.cache_dir.as_ref().map(PolyCache::new)
    }
}

fn error_exit(e: &UniversalError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        UniversalError::RouteMismatch { .. } | UniversalError::WeightViolation { .. } => ExitCode::from(EXIT_FAIL),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn gen(cli: &Cli, kind: KindArg, params: &[u32]) -> ExitCode {
    let kind = match kind {
        KindArg::Q => Kind::Q,
        KindArg::P => Kind::P,
        KindArg::Pnm => Kind::Pnm,
    };
    let Some(id) = UniversalId::from_parts(kind, params) else {
        eprintln!("error: {} takes {} parameter(s)", kind.as_str(), if kind == Kind::Pnm { 2 } else { 1 });
        return ExitCode::from(EXIT_USAGE);
    };
    let caps = if cli.force { Caps::unbounded() } else { cli.caps() };
    let poly = match Generator::new(caps, cli.cache()).get(id) {
        Ok(p) => p,
        Err(e) => return error_exit(&e),
    };
    match cli.output {
        Output::Text => println!("{}", poly.body),
        Output::Json => {
            let doc = json!({
                "poly": id.to_string(),
                "kind": kind,
                "params": id.params(),
                "route": poly.route,
                "text": poly.body.to_string(),
                "terms": poly.body,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    ExitCode::SUCCESS
}

fn check(cli: &Cli, which: SuiteArg, rings: &[RingSpec], modules: &[ModuleSpec]) -> ExitCode {
    let which = match which {
        SuiteArg::Universal => Suite::Universal,
        SuiteArg::Lambda => Suite::Lambda,
        SuiteArg::Module => Suite::Module,
        SuiteArg::All => Suite::All,
    };
    let mut config = RunConfig { seed: cli.seed, ..RunConfig::default() };
    if !rings.is_empty() {
        config.rings = rings.to_vec();
    }
    if !modules.is_empty() {
        config.modules = modules.to_vec();
    }
    let generator = Generator::new(cli.caps(), cli.cache());
    let report = match suite::run(which, &config, &generator) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    match cli.output {
        Output::Text => println!("{report}"),
        Output::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cache(cli: &Cli, action: &CacheAction) -> ExitCode {
    let Some(cache) = cli.cache() else {
        eprintln!("error: no cache directory (pass --cache-dir or set LAMOD_CACHE_DIR)");
        return ExitCode::from(EXIT_USAGE);
    };
    let result = match action {
        CacheAction::List => cache.list().map(|ids| match cli.output {
            Output::Text => ids.iter().for_each(|id| println!("{}\t{id}", id.cache_key())),
            Output::Json => {
                let keys: Vec<String> = ids.iter().map(|id| id.cache_key()).collect();
                println!("{}", serde_json::to_string_pretty(&keys).expect("serializable"));
            }
        }),
        CacheAction::Clear => cache.clear().map(|n| match cli.output {
            Output::Text => println!("removed {n} entries from {}", cache.dir().display()),
            Output::Json => println!("{}", json!({ "removed": n })),
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => error_exit(&e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Gen { kind, params } => gen(&cli, *kind, params),
        Command::Check { suite, rings, modules } => check(&cli, *suite, rings, modules),
        Command::Cache { action } => cache(&cli, action),
    }
}
