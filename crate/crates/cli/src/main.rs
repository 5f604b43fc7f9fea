mod args;
mod commands;
mod descriptor;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use pinlift_core::repcalc::DEFAULT_FREUDENTHAL_CAP;
use pinlift_core::Error;

use args::{Cli, Command};

const EXIT_DOMAIN: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

fn cap_from_env() -> Result<u64, Error> {
    match std::env::var("PINLIFT_FREUDENTHAL_CAP") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("PINLIFT_FREUDENTHAL_CAP must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_FREUDENTHAL_CAP),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_DOMAIN),
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { EXIT_INTERNAL } else { EXIT_DOMAIN })
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let cap = cap_from_env()?;
    let fmt = cli.format;
    let mut out = std::io::stdout().lock();
    let mut emit = |s: String| {
        // a closed pipe is not worth a panic
        let _ = writeln!(out, "{s}");
    };
    match &cli.command {
        Command::Check(a) => emit(commands::check(a)?.render(fmt)),
        Command::Sw(a) => emit(commands::sw(a, cap)?.render(fmt)),
        Command::TwistedChar(a) => emit(commands::twisted_char(a)?.render(fmt)),
        Command::Fold(a) => emit(commands::fold_cmd(a)?.render(fmt)),
        Command::CharCriterion(a) => emit(commands::char_criterion_cmd(a, cap)?.render(fmt)),
        Command::Table(a) => {
            for r in commands::table(a)? {
                emit(r.render_line(fmt));
            }
        }
        Command::Validate(a) => {
            let (report, ok) = commands::validate_cmd(a, cap)?;
            emit(report.render(fmt));
            if !ok {
                return Ok(ExitCode::from(EXIT_VALIDATION));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
