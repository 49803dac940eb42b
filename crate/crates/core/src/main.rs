use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = wsnga::cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match wsnga::cli::run(cli, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(wsnga::cli::exit_code(&error))
        }
    }
}
