use clap::Parser;
use pfq_cli::cli::{run, Cli};
use pfq_cli::exit_code_for;

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}
