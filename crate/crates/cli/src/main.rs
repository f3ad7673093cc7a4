//! `lrfaces` command-line front end.
//!
//! Exit codes: 0 success, 2 unparsable input, 3 precondition violation,
//! 4 failed identity check.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Envelope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lrfaces",
    version,
    about = "Exact type-A branching coefficients"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^nu_{lambda mu}.
    Lr(LrArgs),
    /// dim(V_lambda ⊗ V_mu ⊗ V_nu)^{GL_n}.
    Triple(TripleArgs),
    /// Schubert calculus on Gr(r, n).
    #[command(subcommand)]
    Schubert(SchubertCommand),
    /// Horn/Belkale membership certificate.
    Horn(HornArgs),
    /// Factorization report along a face, or a sweep over faces.
    Reduce(ReduceArgs),
    /// Symmetric-group characters and Kronecker coefficients.
    #[command(subcommand)]
    Kron(KronCommand),
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
}

#[derive(Debug, Args)]
pub struct WeightTriple {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[command(flatten)]
    pub weights: WeightTriple,
    /// Also evaluate the character-theoretic oracle and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Subcommand)]
pub enum SchubertCommand {
    /// Degree d with sigma_I . sigma_J . sigma_K = d[pt].
    Degree {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "K")]
        k: String,
    },
    /// sigma_I . sigma_J in the Schubert basis.
    Expand {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// All triples with sigma_I . sigma_J . sigma_K = d[pt].
    Faces {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u64,
    },
}

#[derive(Debug, Args)]
pub struct HornArgs {
    #[command(flatten)]
    pub weights: WeightTriple,
    /// Use every triple with d >= 1 instead of d = 1.
    #[arg(long = "d-variant")]
    pub d_variant: bool,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub nu: Option<String>,
    #[arg(long = "I", required_unless_present = "sweep")]
    pub i: Option<String>,
    #[arg(long = "J", required_unless_present = "sweep")]
    pub j: Option<String>,
    #[arg(long = "K", required_unless_present = "sweep")]
    pub k: Option<String>,
    /// Sweep every face and every bounded weight triple on it.
    #[arg(long, conflicts_with_all = ["lambda", "mu", "nu", "i", "j", "k"])]
    pub sweep: bool,
    /// Entry bound for --sweep.
    #[arg(long, default_value_t = 2, requires = "sweep")]
    pub bound: i64,
    /// Restrict --sweep to Gr(r, n); otherwise checked against |I|.
    #[arg(long)]
    pub r: Option<usize>,
    /// Sweep faces of every degree d >= 1.
    #[arg(long = "d-variant", requires = "sweep")]
    pub d_variant: bool,
}

#[derive(Debug, Subcommand)]
pub enum KronCommand {
    /// Kronecker coefficient k_{alpha beta gamma}.
    Coeff(PartitionTriple),
    /// Character table of S_n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Murnaghan-Littlewood depth inequality and equality-case check.
    MlCheck(PartitionTriple),
}

#[derive(Debug, Args)]
pub struct PartitionTriple {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
    #[arg(long)]
    pub gamma: String,
}

fn run(cli: &Cli) -> Result<Envelope, commands::Failure> {
    match &cli.command {
        Command::Lr(args) => commands::lr(args),
        Command::Triple(args) => commands::triple(args),
        Command::Schubert(cmd) => commands::schubert(cmd),
        Command::Horn(args) => commands::horn(args),
        Command::Reduce(args) => commands::reduce(args),
        Command::Kron(cmd) => commands::kron(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(envelope) => {
            let rendered = envelope.render(cli.format);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
