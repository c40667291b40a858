use std::io;
use std::process::ExitCode;

use rational_forest::cli;

fn main() -> ExitCode {
    let cap = match cli::depth_cap_from_env() {
        Ok(cap) => cap,
        Err(f) => {
            eprintln!("error: {f:?}");
            return ExitCode::from(f.status() as u8);
        }
    };
    let status = cli::run(
        std::env::args_os(),
        cap,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(status as u8)
}
