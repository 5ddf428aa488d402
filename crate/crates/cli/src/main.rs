use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hcchar_cli::cache::Cache;
use hcchar_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli, &Cache::from_env()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(4);
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hcchar: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
