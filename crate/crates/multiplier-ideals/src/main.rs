use std::process::ExitCode;

fn main() -> ExitCode {
    let output = multiplier_ideals::cli::run(std::env::args());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    ExitCode::from(output.exit_code as u8)
}
