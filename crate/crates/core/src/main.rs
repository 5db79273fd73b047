use std::io::Write;

fn main() {
    let r = silt::cli::run(std::env::args_os());
    let _ = if r.code == silt::cli::EXIT_USAGE {
        std::io::stderr().write_all(r.report.as_bytes())
    } else {
        std::io::stdout().write_all(r.report.as_bytes())
    };
    std::process::exit(r.code);
}
