use std::io::Write;
use std::process::ExitCode;

use afspec::cli::{run, QueryRequest};
use clap::Parser;

fn main() -> ExitCode {
    let q = match QueryRequest::try_parse() {
        Ok(q) => q,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let outcome = run(&q);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
