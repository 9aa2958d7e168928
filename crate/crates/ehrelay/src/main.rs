use clap::Parser;
use ehrelay::cli::{run, CliArgs};

fn main() {
    let args = CliArgs::parse();
    if let Err(err) = run(&args.command) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
