//! `ybx`: build and verify set-theoretic Yang-Baxter structures from the shell.

mod context;
mod report;
mod structures;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use context::{CliError, CliResult, Ctx, Outcome, EXIT_CHECK_FAILED, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "ybx", version, about = "Set-theoretic Yang-Baxter toolkit")]
struct Cli {
    /// Emit reports as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Leave timings out of reports so output is reproducible
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shelves, racks and quandles
    #[command(subcommand)]
    Magma(structures::MagmaCmd),
    /// Skew braces
    #[command(subcommand)]
    Brace(structures::BraceCmd),
    /// Set-theoretic solutions
    #[command(subcommand)]
    Sol(structures::SolCmd),
    /// Matrices of linearized solutions
    #[command(subcommand)]
    Mat(structures::MatCmd),
    /// Spectral-parameter solutions
    #[command(subcommand)]
    Baxter(verify::BaxterCmd),
    /// Drinfeld twists
    #[command(subcommand)]
    Twist(verify::TwistCmd),
    /// Algebra representations
    #[command(subcommand)]
    Rep(verify::RepCmd),
    /// Integrable spin chains
    #[command(subcommand)]
    Chain(verify::ChainCmd),
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Magma(c) => structures::magma(ctx, c),
        Command::Brace(c) => structures::brace(ctx, c),
        Command::Sol(c) => structures::sol(ctx, c),
        Command::Mat(c) => structures::mat(ctx, c),
        Command::Baxter(c) => verify::baxter(ctx, c),
        Command::Twist(c) => verify::twist(ctx, c),
        Command::Rep(c) => verify::rep(ctx, c),
        Command::Chain(c) => verify::chain_cmd(ctx, c),
    }
}

fn run(cli: Cli, argv: Vec<String>) -> CliResult<u8> {
    let mut ctx = Ctx::new(cli.json, !cli.no_timings, argv)?;
    let mut out = std::io::stdout().lock();
    let written = match dispatch(&mut ctx, cli.cmd)? {
        Outcome::Artifact(text) => out.write_all(text.as_bytes()).map(|_| 0),
        Outcome::Report(mut r) => {
            r.finish();
            let text = if ctx.json { r.to_json() } else { r.to_text() };
            let code = if r.passed() { 0 } else { EXIT_CHECK_FAILED };
            out.write_all(text.as_bytes()).map(|_| code)
        }
    };
    written.map_err(|e| CliError::usage(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let argv = std::iter::once("ybx".to_owned()).chain(args.into_iter().skip(1)).collect();
    match run(cli, argv) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ybx: {e}");
            ExitCode::from(e.code)
        }
    }
}
