use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use ps_cli::args::Cli;
use ps_cli::{failure_record, run, CliError};

fn main() -> ExitCode {
    if let Err(e) = Cli::try_parse() {
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                let _ = e.print();
                return ExitCode::from(if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 1 } else { 0 });
            }
            _ => {
                let _ = e.print();
                return ExitCode::from(1);
            }
        }
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(std::env::args_os(), &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            if let CliError::Usage(m) = &e {
                eprintln!("error: {m}");
            }
            eprintln!("{}", failure_record(&e));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
