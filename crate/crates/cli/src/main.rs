//! `ossmax`: generate instances, run solvers, verify smoothness claims and
//! benchmark suites.
//!
//! Exit status: 0 success, 1 invalid input, 2 runtime failure,
//! 3 verification failed.

mod args;
mod commands;
mod failure;
mod record;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(a) => commands::generate::run(&a, &cli.out_dir),
        Command::Solve(a) => commands::solve::run(&a, &cli.out_dir),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Bench(a) => commands::bench::run(&a, &cli.out_dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message() {
                eprintln!("error: {msg:#}");
            }
            ExitCode::from(f.code())
        }
    }
}
