//! Binary entry point for the `flawless` command line.

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = flawless::cli::cli_dispatch(&args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
