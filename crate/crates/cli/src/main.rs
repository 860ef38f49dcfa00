mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::seeds::Family;

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Verify (2,3,7)-generators of G2(q), J1 and J2")]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a generator triple and check the conditions on r.
    Seed(GroupArgs),
    /// Run a theorem-level verification flow.
    Verify(VerifyArgs),
    /// Scott dimension reports for induced actions.
    Scott(ScottArgs),
    /// Invariant bilinear, quadratic and trilinear forms.
    Forms(FormsArgs),
    /// Exact group order through a certified stabilizer chain.
    Order(OrderArgs),
    /// First admissible r over GF(q).
    #[command(name = "search-r")]
    SearchR(SearchArgs),
    /// Orders, invariants, irreducibility and Scott slack over many (q, r).
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    #[arg(long)]
    pub q: Option<u64>,
    /// auto, primitive, an integer or a coefficient list [c0,c1,...]
    #[arg(long, default_value = "auto")]
    pub r: String,
    /// Matrix file holding x and y.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Theorem {
    P7,
    Main,
    #[value(name = "symp-i")]
    SympI,
    #[value(name = "symp-ii")]
    SympIi,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub q: u64,
    #[arg(long, default_value = "auto")]
    pub r: String,
    /// Also compute and identify the group order.
    #[arg(long)]
    pub orders: bool,
    /// Lift the orbit-size cap (needed for G2(8) and larger).
    #[arg(long)]
    pub large: bool,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Zero the top row of the lift (negative control).
    #[arg(long)]
    pub corrupt_lift: bool,
}

#[derive(Args, Debug)]
pub struct ScottArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// conj, sym2, ext2, ext3dual or all
    #[arg(long, default_value = "all")]
    pub functor: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormKind {
    Bilinear,
    Quadratic,
    Trilinear,
    All,
}

#[derive(Args, Debug)]
pub struct FormsArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub kind: FormKind,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long)]
    pub large: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub q: u64,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Field orders, comma separated or repeated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub q: Vec<u64>,
    /// Every admissible r instead of the first one.
    #[arg(long)]
    pub sweep_r: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = commands::run(&cli.command);
    let elapsed = start.elapsed();
    let (report, code) = match outcome {
        Ok(out) => {
            let code = out.exit_code();
            (Report::from_outcome(echo, out, cli.timings.then_some(elapsed)), code)
        }
        Err(e) => {
            let code = e.exit_code();
            (Report::from_error(echo, &e, cli.timings.then_some(elapsed)), code)
        }
    };
    let text = report.to_json();
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{text}");
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(CliError::USAGE);
        }
    }
    if let Err(e) = &report.error {
        eprintln!("{e}");
    }
    ExitCode::from(code)
}
