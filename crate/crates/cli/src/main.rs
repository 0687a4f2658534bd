use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;
use gray_avoid_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            drop(out);
            eprintln!("gray-avoid: {e}");
            ExitCode::from(e.code)
        }
    }
}
