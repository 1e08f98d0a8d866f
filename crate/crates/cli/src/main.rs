use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = mis_extremal::cli::run(std::env::args_os(), &mut stdin, &mut out, &mut err);
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
