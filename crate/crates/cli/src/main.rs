use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inscribed_cli::{
    run_find, run_knot, run_verify_corpus, FindArgs, KnotArgs, VerifyArgs, EXIT_OK,
};

#[derive(Parser)]
#[command(
    name = "inscribed",
    version,
    about = "Inscribed rectangles of aspect ratio tan(πk/2n) in smooth Jordan curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search one curve for rectangles of every family of n.
    Find(FindArgs),
    /// Run the search over a seeded random corpus and a range of n.
    VerifyCorpus(VerifyArgs),
    /// Trace the boundary loop near the diagonal and report its windings.
    Knot(KnotArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Find(args) => run_find(&args).map(|o| o.exit_code),
        Command::VerifyCorpus(args) => run_verify_corpus(&args).map(|o| {
            if args.out.is_none() {
                print!("{}", inscribed_cli::report::to_json(&o.report));
            }
            eprint!("{}", o.table);
            o.exit_code
        }),
        Command::Knot(args) => run_knot(&args).map(|r| {
            eprintln!(
                "windings ({}, {}), T({}, {}), bound {}",
                r.windings[0], r.windings[1], r.torus_knot.p, r.torus_knot.q, r.batson_bound
            );
            EXIT_OK
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
