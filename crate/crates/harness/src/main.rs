use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monopos_harness::cli::{run, Cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(move || {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        let r = run(cli, &mut lock);
        let _ = lock.flush();
        r
    });
    let code = match result {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("monopos: {e}");
            e.exit_code()
        }
        Err(_) => EXIT_INTERNAL,
    };
    ExitCode::from(code as u8)
}
