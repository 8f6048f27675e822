//! `levixi`: Schubert expansions, ξ-images, products, memberships and the
//! verification suites from the command line.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use levixi::Error;

#[derive(Parser, Debug)]
#[command(
    name = "levixi",
    version,
    about = "Exact Schubert calculus and the map ξ for classical groups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Group and parabolic shared by most subcommands.
#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Root system family: A, B, C or D.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
    /// `borel`, `full`, `maximal:r`, `levi:1,3` or a bare list `1,3`.
    #[arg(long, default_value = "borel")]
    pub parabolic: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schubert expansion of a W_L-invariant polynomial in x1..xN.
    Expand {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        poly: String,
    },
    /// ξ-image of a λ-polynomial character in t1..tN.
    Xi {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "char")]
        character: String,
    },
    /// Cup product of two Schubert combinations such as `2·[s1] + [s2 s1]`.
    Product {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = ProductMethod::Both)]
        method: ProductMethod,
    },
    /// Polynomial membership of a character, with its preimage or witness.
    Membership {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "char")]
        character: String,
    },
    /// Character of an irreducible representation.
    Character {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Highest weight as fundamental-weight coefficients, e.g. `1,0`.
        #[arg(long)]
        weight: String,
    },
    /// Tensor product multiplicities of two irreducibles.
    Tensor {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Torus restriction of the Springer morphism for V(λ).
    Springer {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        weight: String,
        /// Type A only: restrict to the torus of SL.
        #[arg(long)]
        sl: bool,
    },
    /// Run a verification suite.
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductMethod {
    /// Lift to polynomials and expand with divided differences.
    DividedDifference,
    /// Iterate the Chevalley formula.
    Chevalley,
    /// Both, failing if they disagree.
    Both,
}

/// Why a command stopped.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    /// A verification claim failed; the report has been printed.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::NotLeviInvariant => 3,
        Error::NotPolynomialCharacter { .. } => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(5),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
