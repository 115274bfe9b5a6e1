use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use orthohaar::report::{
    cmd_catalog, cmd_eval, cmd_verify, render_record, render_table, OutputRecord, EXIT_USAGE,
};
use orthohaar::McConfig;

#[derive(Parser)]
#[command(
    name = "orthohaar",
    version,
    about = "Haar integrals of monomials over O(N)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact value of a monomial integral.
    Eval {
        monomial: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        json: bool,
        /// Also attach a Monte Carlo estimate with this many samples.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact value checked against a Monte Carlo estimate.
    Verify {
        monomial: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Table of closed-form values at one dimension.
    Catalog {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        json: bool,
        /// Keep only entries whose label contains this text (e.g. 5a, F1, Z).
        #[arg(long)]
        shape: Option<String>,
    },
}

fn print_one(record: &OutputRecord, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(record).expect("serializable record")
        );
    } else {
        print!("{}", render_record(record));
    }
}

fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Eval {
            monomial,
            n,
            json,
            samples,
            seed,
        } => cmd_eval(&monomial, n, samples.map(|s| McConfig::new(s, seed))).map(|(r, code)| {
            print_one(&r, json);
            code
        }),
        Command::Verify {
            monomial,
            n,
            samples,
            seed,
            json,
        } => cmd_verify(&monomial, n, McConfig::new(samples, seed)).map(|(r, code)| {
            print_one(&r, json);
            code
        }),
        Command::Catalog { n, json, shape } => cmd_catalog(n, shape.as_deref()).map(|records| {
            if json {
                for r in &records {
                    println!("{}", serde_json::to_string(r).expect("serializable record"));
                }
            } else {
                print!("{}", render_table(&records));
            }
            0
        }),
    };
    outcome.unwrap_or_else(|err| {
        eprintln!("error: {err}");
        EXIT_USAGE
    })
}

fn main() -> ExitCode {
    let code = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(err) => {
            let _ = err.print();
            match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            }
        }
    };
    ExitCode::from(code as u8)
}
