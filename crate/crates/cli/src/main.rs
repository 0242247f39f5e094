mod compute;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fubini_core::verifier::{self, Bounds, Context, Profile};
use fubini_core::Rat;

use compute::{Object, TableObject};

#[derive(Parser)]
#[command(
    name = "fubini",
    version,
    about = "Exact Fubini, Stirling, Bernoulli and Apostol-Bernoulli computations with an identity verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single value, polynomial or rational function.
    Compute(ComputeArgs),
    /// Stream a table of values.
    Table(TableArgs),
    /// Check one registry identity over its parameter grid.
    Verify(VerifyArgs),
    /// Check every registry identity with a preset profile.
    VerifyAll(VerifyAllArgs),
    /// Print the identity registry.
    ListIdentities {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub object: Object,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    /// Rational evaluation point, e.g. -3/7.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    pub at: Option<Rat>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub object: TableObject,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub p_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    identity: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    p_max: Option<usize>,
    /// Number of rational sample points for pointwise identities.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Deliberately corrupt a value, e.g. `bernoulli=4`.
    #[arg(long, value_parser = parse_fault)]
    inject_fault: Option<Context>,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long, value_parser = parse_profile)]
    profile: Profile,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_parser = parse_fault)]
    inject_fault: Option<Context>,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e: fubini_core::Error| e.to_string())
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse().map_err(|e: fubini_core::Error| e.to_string())
}

fn parse_fault(s: &str) -> Result<Context, String> {
    let n = s
        .strip_prefix("bernoulli=")
        .ok_or_else(|| "expected bernoulli=N".to_string())?;
    let n = n.parse().map_err(|_| format!("invalid index {n:?}"))?;
    Ok(Context {
        bernoulli_fault: Some(n),
    })
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn verdict(all_passed: bool) -> ExitCode {
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => match compute::compute(&args) {
            Ok(value) => {
                output::emit_value(&args, &value);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Table(args) => match compute::table(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(e),
        },
        Command::Verify(args) => {
            let overrides = Bounds {
                n_max: args.n_max,
                m_max: args.m_max,
                k_max: args.k_max,
                p_max: args.p_max,
                samples: args.samples,
            };
            let ctx = args.inject_fault.unwrap_or_default();
            match verifier::verify_report(&args.identity, &overrides, &ctx) {
                Ok(run) => {
                    output::emit_run(&run, args.format);
                    verdict(run.summary.all_passed())
                }
                Err(e) => usage_error(e),
            }
        }
        Command::VerifyAll(args) => {
            let ctx = args.inject_fault.unwrap_or_default();
            let run = verifier::verify_all_with(args.profile, &ctx);
            output::emit_run(&run, args.format);
            verdict(run.summary.all_passed())
        }
        Command::ListIdentities { format } => {
            output::emit_registry(verifier::list_identities(), format);
            ExitCode::SUCCESS
        }
    }
}
