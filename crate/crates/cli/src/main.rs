//! `jack`: command-line front end for the `superjack` library.
//!
//! Exit status: 0 success, 1 a verification found a counterexample, 2 usage
//! or input error, 3 internal inconsistency such as an unexpected pole.
//! Errors are printed to stderr as one JSON object.

mod cache;
mod cli;
mod commands;
mod config;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::cache::Cache;
use crate::cli::{Cli, Command, OpAction, OutFormat};
use crate::commands::{Context, Report};
use crate::config::Config;
use crate::error::CliError;

fn run(cli: &Cli, config: &Config) -> Result<Report, CliError> {
    if let (Some(t), None) = (config.threads, std::env::var_os("RAYON_NUM_THREADS")) {
        std::env::set_var("RAYON_NUM_THREADS", t.to_string());
    }
    let use_cache = !cli.no_cache && config.cache.unwrap_or(true);
    let cache = if use_cache {
        Cache::resolve_dir(cli.cache_dir.as_deref(), config.cache_dir.as_deref()).map(Cache::new)
    } else {
        None
    };
    let ctx = Context { cache };
    match &cli.command {
        Command::Compute { spart, nvars, alpha, basis } => ctx.compute(spart, *nvars, alpha, *basis),
        Command::Pieri { op, spart, nvars, check } => ctx.pieri(op, spart, *nvars, *check),
        Command::Op { action: OpAction::Apply { name, alpha, input, nvars } } => {
            ctx.op_apply(name, alpha, input, *nvars)
        }
        Command::Characters { space, k, r, nvars, nmax } => ctx.characters(*space, *k, *r, *nvars, *nmax),
        Command::Verify(v) => ctx.verify(v),
        Command::Enumerate { n, m, nvars, k, r } => ctx.enumerate(*n, *m, *nvars, k.zip(*r)),
        Command::Cluster { spart, k, r, nvars, cluster, primed } => {
            ctx.cluster(spart, *k, *r, *nvars, cluster, *primed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(err.exit_code());
        }
    };
    let result = Config::discover(cli.config.as_deref()).and_then(|config| {
        let format = cli.out.or(config.out).unwrap_or(OutFormat::Pretty);
        run(&cli, &config).map(|r| (r, format))
    });
    match result {
        Ok((report, format)) => {
            let text = match format {
                OutFormat::Json => serde_json::to_string_pretty(&report.json).expect("json") + "\n",
                OutFormat::Pretty => report.pretty,
            };
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code())
        }
    }
}
