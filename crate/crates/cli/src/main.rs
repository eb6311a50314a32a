use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use igf_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(()) => exit::SUCCESS,
        Err(err) => {
            let _ = out.flush();
            eprintln!("igf: {err}");
            err.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
