use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hcx::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.command.common().out.clone();
    let result = run(&cli.command).and_then(|text| {
        match out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hcx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
