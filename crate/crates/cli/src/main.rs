use std::process::ExitCode;

use clap::Parser;
use tamil_spell_cli::Args;

fn main() -> ExitCode {
    tamil_spell_cli::run(Args::parse())
}
