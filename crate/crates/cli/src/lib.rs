//! The `o2sim` command-line front end: argument handling, serialization, and the
//! figure-reproduction recipes.

pub mod cli;
pub mod commands;
pub mod error;
pub mod output;
pub mod parse;
pub mod reproduce;

use clap::Parser;

pub use error::CliError;

/// Parses `args` (including the program name) and runs the command, returning the
/// process exit code. Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match cli::Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let result = match &parsed.command {
        cli::Command::Levels(a) => commands::levels(a),
        cli::Command::Distribution(a) => commands::distribution(a),
        cli::Command::Scan(a) => commands::scan(a),
        cli::Command::Raman(a) => commands::raman(a),
        cli::Command::Reproduce(a) => commands::reproduce(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("o2sim: {e}");
            e.exit_code()
        }
    }
}
