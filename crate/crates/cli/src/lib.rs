//! Command-line front end: `verify`, `sweep`, `oracle`, `search`, `export`.
//!
//! Exit codes: 0 success, 1 verification or search failure, 2 usage error.
//! The oracle seed defaults to 42 and can be overridden by `--seed` or the
//! `AHTORIC_SEED` environment variable.

pub mod commands;
pub mod config;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use commands::{ExportWhat, Outcome, SearchArgs};
use config::{Format, RunConfig, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(name = "ahtoric", version, about = "Toric degeneration certificates for secant varieties of Veronese threefolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Prime modulus for oracle computations.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Sampling seed.
    #[arg(long, env = "AHTORIC_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Independent samples per rank computation.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build, verify and classify the certificate for one degree.
    Verify {
        #[arg(long)]
        d: i64,
        /// Verify this certificate file instead of building one.
        #[arg(long)]
        certificate: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every degree from 5 up to `--dmax` and check the identities.
    Sweep {
        #[arg(long = "dmax")]
        d_max: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Interpolation rank of double points on `V_{n,d}`.
    Oracle {
        #[arg(long, requires_all = ["d"], conflicts_with = "exceptional")]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Secant index (k + 1 double points).
        #[arg(long, conflicts_with = "points")]
        k: Option<usize>,
        /// Number of double points, as in the classical exception table.
        #[arg(long)]
        points: Option<usize>,
        /// Run the five exceptional rows and their neighbours.
        #[arg(long)]
        exceptional: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a packing of units in a region.
    Search {
        #[arg(long)]
        region: String,
        /// Comma-separated unit kinds (tangent, limit-cube, limit-sigma, limit-semicube, cube).
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<String>,
        #[arg(long)]
        target: u32,
        #[arg(long)]
        max_uncovered: Option<usize>,
        #[arg(long)]
        max_limit: Option<u32>,
        #[arg(long, default_value_t = ahtoric::packing::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Write a subdivision or certificate as JSON or OFF.
    Export {
        #[arg(long, conflicts_with = "region")]
        d: Option<i64>,
        /// Region or block name, e.g. `P_7`, `S1_8`, `T*_9`.
        #[arg(long)]
        region: Option<String>,
        /// Export the certificate instead of the subdivision.
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn base(command: &'static str, c: &Common) -> RunConfig {
    RunConfig {
        prime: c.prime,
        seed: c.seed,
        trials: c.trials,
        format: c.format,
        output: c.output.clone(),
        ..RunConfig::new(command)
    }
}

fn dispatch(cmd: Command) -> (Outcome, Option<String>) {
    match cmd {
        Command::Verify { d, certificate, common } => {
            let cfg = RunConfig { d: Some(d), ..base("verify", &common) };
            (commands::verify(d, certificate.as_deref(), &cfg), common.output)
        }
        Command::Sweep { d_max, common } => {
            let cfg = RunConfig { d_max: Some(d_max), ..base("sweep", &common) };
            (commands::sweep(d_max, &cfg), common.output)
        }
        Command::Oracle { n, d, k, points, exceptional, common } => {
            let cfg = base("oracle", &common);
            if exceptional {
                return (commands::oracle_exceptional(&cfg), common.output);
            }
            let k = match (k, points) {
                (Some(k), _) => k,
                (None, Some(s)) if s > 0 => s - 1,
                _ => return (Outcome::usage("give --k, --points or --exceptional"), None),
            };
            let (Some(n), Some(d)) = (n, d) else {
                return (Outcome::usage("--n and --d are required"), None);
            };
            let cfg = RunConfig { n: Some(n), d: Some(d as i64), k: Some(k), ..cfg };
            (commands::oracle_single(n, d, k, &cfg), common.output)
        }
        Command::Search { region, kinds, target, max_uncovered, max_limit, budget, common } => {
            let cfg = RunConfig { region: Some(region.clone()), budget, ..base("search", &common) };
            let a = SearchArgs { region: &region, kinds: &kinds, target, max_uncovered, max_limit };
            (commands::search(&a, &cfg), common.output)
        }
        Command::Export { d, region, certificate, common } => {
            let cfg = RunConfig { d, region: region.clone(), ..base("export", &common) };
            let target = match (d, region.as_deref()) {
                (Some(d), _) => Ok(d),
                (None, Some(r)) => Err(r),
                (None, None) => return (Outcome::usage("give --d or --region"), None),
            };
            let what = if certificate { ExportWhat::Certificate } else { ExportWhat::Subdivision };
            (commands::export(target, what, &cfg), common.output)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { report: e.render().to_string(), code };
        }
    };
    let (out, path) = dispatch(cli.command);
    match path {
        Some(p) if out.code != 2 => match std::fs::write(&p, &out.report) {
            Ok(()) => Outcome { report: format!("wrote {p}\n"), code: out.code },
            Err(e) => Outcome::usage(format!("cannot write {p}: {e}")),
        },
        _ => out,
    }
}
