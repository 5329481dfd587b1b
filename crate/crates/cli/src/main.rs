mod algebra;
mod args;
mod combinatorics;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use report::{CliResult, Report};

fn dispatch(cli: Cli) -> CliResult<Report> {
    match cli.command {
        Command::Macaulay(c) => combinatorics::macaulay(c),
        Command::Osequence(c) => combinatorics::osequence(c),
        Command::Gorenstein(c) => combinatorics::gorenstein(c),
        Command::Ideal(c) => algebra::ideal(c),
        Command::Pfaffian(c) => algebra::pfaffian(c, cli.modulus),
        Command::Paper(c) => algebra::paper(c, cli.modulus),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("error[E_USAGE]: {}", e.render().to_string().trim_start_matches("error: "));
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let written = if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json"))
            } else {
                out.write_all(report.text.as_bytes())
            };
            if written.is_err() {
                return ExitCode::from(1);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error[E_CHECK]: one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}
