use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = cwl::Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match cwl::run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
