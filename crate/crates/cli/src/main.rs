mod args;
mod commands;
mod config;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use config::Config;
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let config = Config::load(cli.common.config.as_deref())?;
    if let Some(n) = config.pick(cli.common.jobs, "jobs")? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {n} worker threads: {e}")))?;
    }
    let c = &cli.common;
    let output = match &cli.command {
        Command::BlockInfo(a) => commands::block_info(c, &config, a)?,
        Command::Crystal(a) => commands::crystal(c, &config, a)?,
        Command::Branch(a) => commands::branch(c, &config, a)?,
        Command::Scopes(a) => commands::scopes(c, &config, a)?,
        Command::Abacus(a) => commands::abacus(c, &config, a)?,
    };
    let out = c.out.clone().or_else(|| config.raw("out").map(Into::into));
    match out {
        Some(path) => std::fs::write(path, output)?,
        None => std::io::stdout().lock().write_all(output.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
