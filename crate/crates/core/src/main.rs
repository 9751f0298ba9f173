use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use strongcurv::commands::{cmd_certify, cmd_fatness, cmd_sweep, exit_code, resolve_space};
use strongcurv::report::Report;
use strongcurv::Config;

/// Certify strongly positive curvature of homogeneous curvature operators.
#[derive(Parser)]
#[command(name = "strongcurv", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceArgs {
    /// Built-in space: sphere, cpn, hpn, w6, w12, w7, b7, b13, berger7;
    /// or "custom" with --split-json.
    #[arg(long)]
    space: String,
    /// Dimension parameter for sphere/cpn/hpn.
    #[arg(long)]
    n: Option<usize>,
    /// First parameter of w7.
    #[arg(long)]
    k: Option<i64>,
    /// Second parameter of w7.
    #[arg(long)]
    l: Option<i64>,
    /// Load a custom split from this JSON file.
    #[arg(long)]
    split_json: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Search the full 4-form space instead of the invariant subspace.
    #[arg(long)]
    full_lambda4: bool,
    /// RNG seed override.
    #[arg(long)]
    seed: Option<u64>,
    /// Record wall-clock timings (reports stop being byte-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the curvature operator at one parameter value and certify it.
    Certify {
        #[command(flatten)]
        space: SpaceArgs,
        /// Fiber scale: t of g_t, or the round-metric fiber scale λ for
        /// berger7. Defaults to 0.5 for fibration spaces.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Scan a parameter range, bracketing every predicate transition.
    Sweep {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        min: f64,
        #[arg(long)]
        max: f64,
        #[arg(long, default_value_t = 15)]
        steps: usize,
    },
    /// Fatness kernel and strong-fatness certificate of a fibration.
    Fatness {
        #[command(flatten)]
        space: SpaceArgs,
    },
}

const EX_USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EX_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                strongcurv::Error::InvalidSpace(_)
                | strongcurv::Error::InvalidParameter(_)
                | strongcurv::Error::Io(_)
                | strongcurv::Error::Json(_)
                | strongcurv::Error::Schema { .. } => EX_USAGE,
                _ => 1,
            })
        }
    }
}

fn config_for(args: &SpaceArgs) -> strongcurv::Result<Config> {
    let mut cfg = Config::from_env()?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if args.full_lambda4 {
        cfg.full_lambda4 = true;
    }
    if args.timings {
        cfg.timings = true;
    }
    Ok(cfg)
}

fn emit(report: &Report, out: Option<&PathBuf>) -> strongcurv::Result<()> {
    let text = report.to_json_string()?;
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> strongcurv::Result<ExitCode> {
    match cli.command {
        Command::Certify { space, t } => {
            let cfg = config_for(&space)?;
            let resolved = resolve_space(
                &space.space,
                space.n,
                space.k,
                space.l,
                space.split_json.as_deref(),
            )?;
            let param = t.unwrap_or(0.5);
            if param <= 0.0 || param.is_nan() {
                return Err(strongcurv::Error::InvalidParameter(
                    "--t must be positive".into(),
                ));
            }
            let report = cmd_certify(&resolved, param, &cfg)?;
            emit(&report, space.out.as_ref())?;
            Ok(ExitCode::from(exit_code(&report) as u8))
        }
        Command::Sweep {
            space,
            min,
            max,
            steps,
        } => {
            let cfg = config_for(&space)?;
            let resolved = resolve_space(
                &space.space,
                space.n,
                space.k,
                space.l,
                space.split_json.as_deref(),
            )?;
            let report = cmd_sweep(&resolved, min, max, steps, &cfg)?;
            emit(&report, space.out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fatness { space } => {
            let cfg = config_for(&space)?;
            let resolved = resolve_space(
                &space.space,
                space.n,
                space.k,
                space.l,
                space.split_json.as_deref(),
            )?;
            let report = cmd_fatness(&resolved, &cfg)?;
            emit(&report, space.out.as_ref())?;
            Ok(ExitCode::from(exit_code(&report) as u8))
        }
    }
}
