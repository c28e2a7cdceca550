use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = weilmin::cli::configure_threads() {
        eprintln!("weilmin: {e}");
        return ExitCode::from(weilmin::cli::EXIT_INVALID as u8);
    }
    let code = weilmin::cli::run(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
