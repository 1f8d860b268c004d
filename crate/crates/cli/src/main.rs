use std::process::ExitCode;

use clap::Parser;
use schur2d_cli::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (code, report) = schur2d_cli::run(&cli);
    let text = schur2d_cli::render(&report);
    let written = match &cli.job.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("schur2d: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
