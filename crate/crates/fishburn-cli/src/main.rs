//! Command-line surface for the Fishburn congruence laboratory.
//!
//! Exit codes: 0 when everything requested verifies (including conjecture
//! refutations, which are findings, not failures), 1 when a proven claim is
//! refuted, 2 on usage errors.

mod commands;

use clap::Parser;

fn main() {
    let cli = commands::Cli::parse();
    let code = match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
