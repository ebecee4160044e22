use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use ptg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var("PTG_BUDGET").ok();
    let out = run(&cli, env.as_deref());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
