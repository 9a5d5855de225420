use std::process::ExitCode;

fn main() -> ExitCode {
    kalman_degree::cli::main_with(std::env::args_os())
}
