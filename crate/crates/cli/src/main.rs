use std::process::ExitCode;

use braidlab::Error;
use braidlab_cli::commands::{self, CommandError};
use braidlab_cli::Cli;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("braidlab: {e}");
            ExitCode::from(match e {
                CommandError::Usage(_) => 2,
                CommandError::Compute(
                    Error::InvalidArgument(_) | Error::Refused(_) | Error::Unsupported(_),
                ) => 2,
                CommandError::Compute(_) | CommandError::Internal(_) => 3,
            })
        }
    }
}
