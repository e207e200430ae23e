use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let verdict = wildclass::cli::run(&argv);
    verdict.emit();
    ExitCode::from(verdict.code as u8)
}
