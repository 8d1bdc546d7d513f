use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = dialgebra_cli::run_command(std::env::args_os());
    let mut out: Box<dyn Write> = if result.exit_code == dialgebra_cli::EXIT_USAGE {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = out.write_all(result.output.as_bytes());
    ExitCode::from(result.exit_code as u8)
}
