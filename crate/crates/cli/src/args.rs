use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact continued-fraction solver for truncated two-dimensional moment problems.
#[derive(Parser, Debug, Clone)]
#[command(name = "schur2d", version)]
pub struct Cli {
    #[command(subcommand)]
    pub pipeline: Pipeline,

    #[command(flatten)]
    pub job: JobArgs,
}

/// One subcommand per pipeline stage. Every stage writes a JSON report
/// whose `artifact` can be fed to the next stage.
#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    /// Moment table of an atomic measure.
    Moments,
    /// Associated sequence of a table or measure.
    Associate,
    /// Hankel regularity report.
    Hankel,
    /// J-fraction atoms.
    Jfrac,
    /// S-fraction atoms.
    Sfrac,
    /// Convergent numerator and denominator, or the solution at a tail.
    Convergent,
    /// Check the truncated contract.
    Verify,
    /// Evaluate at a point, with the convergence test.
    Eval,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Moments => "moments",
            Pipeline::Associate => "associate",
            Pipeline::Hankel => "hankel",
            Pipeline::Jfrac => "jfrac",
            Pipeline::Sfrac => "sfrac",
            Pipeline::Convergent => "convergent",
            Pipeline::Verify => "verify",
            Pipeline::Eval => "eval",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Sym,
    Nonsym,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormArg {
    #[value(name = "J", alias = "j")]
    J,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verbosity {
    /// Only failing coefficients in `match`.
    Brief,
    #[default]
    Full,
}

#[derive(clap::Args, Debug, Clone)]
pub struct JobArgs {
    /// Input JSON file, `-` for stdin.
    #[arg(long, short, global = true, default_value = "-")]
    pub input: PathBuf,

    /// Report destination; stdout when omitted.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Symmetric (X = z*zeta) or nonsymmetric (X = z). Defaults to the
    /// mode recorded in the input, else sym.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,

    /// Number of atoms.
    #[arg(long, short = 'n', global = true, default_value_t = 1)]
    pub depth: usize,

    #[arg(long, global = true, value_enum, default_value = "J")]
    pub form: FormArg,

    /// Evaluation point `z0,zeta0`; entries are rational literals such as `1/2` or `1+2i`.
    #[arg(long, global = true)]
    pub point: Option<String>,

    /// Strictly proper tail in the main variable `X`, e.g. `1/(X - 3)`.
    #[arg(long, global = true)]
    pub tail: Option<String>,

    /// Highest ray coefficient compared by the bivariate diagnostic
    /// (default `2n`).
    #[arg(long, global = true)]
    pub window: Option<usize>,

    /// Merge atoms at the same point instead of rejecting the measure.
    #[arg(long, global = true)]
    pub merge_duplicates: bool,

    #[arg(long, global = true, value_enum, default_value_t = Verbosity::Full)]
    pub verbosity: Verbosity,
}
