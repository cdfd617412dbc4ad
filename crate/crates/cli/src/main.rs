use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use defperm_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = run(&cli, &mut out);
    let _ = out.flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("dpx: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
