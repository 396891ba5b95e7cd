use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qnewton::cli::run(std::env::args_os()))
}
