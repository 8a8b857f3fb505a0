use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = palper::cli::run(std::env::args_os());
    let body = outcome.json.as_deref().unwrap_or(&outcome.stdout);
    // Ignore a closed pipe (e.g. `| head`).
    let _ = std::io::stdout().write_all(body.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
