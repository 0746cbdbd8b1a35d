use std::process::ExitCode;

fn main() -> ExitCode {
    hardy_shift::cli::run(std::env::args_os())
}
