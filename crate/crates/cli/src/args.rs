use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "hermpos", version, about = "Complex positivity of hermitian symmetric spaces")]
pub struct Cli {
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Suppress normal output; the exit code still reports the outcome
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog of space families
    Spaces {
        #[command(subcommand)]
        action: SpacesAction,
    },
    /// Dimension, complex positivity and |Ψ'_α| for every α in Ψ
    Positivity {
        /// gr:p,q | quadric:p | lagr:r | spinor:r | e6 | e7
        space: String,
    },
    /// Bisectional curvature form H_X of one tangent vector
    Form(FormArgs),
    /// Barth-Lefschetz connectivity ranges
    Range(RangeArgs),
    /// Reproduce the complex positivity table and the closed-form ranges
    Table,
    /// Run the full invariant suite
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum SpacesAction {
    /// List the families with their parameter bounds
    List,
}

#[derive(Debug, Args)]
pub struct FormArgs {
    pub space: String,

    /// Comma-separated `root=rational` pairs, e.g. `e1-e3=1,e2-e4=1/2`;
    /// exceptional roots are written as coordinate lists `(1/2,...)`
    #[arg(long, allow_hyphen_values = true)]
    pub vector: String,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    pub space: String,

    /// Complex dimension of M
    #[arg(short = 'm')]
    pub m: usize,

    /// Complex dimension of N
    #[arg(short = 'n')]
    pub n: usize,

    /// Replace ℓ by a larger cone dimension ℓ₀
    #[arg(long = "ell0", conflicts_with = "rank")]
    pub ell0: Option<usize>,

    /// Grassmannians only: assume every normal vector has rank at least r
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Restrict to one space; default is the whole verification catalog
    #[arg(long)]
    pub space: Option<String>,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Random tangent vectors per space
    #[arg(long, default_value_t = 500)]
    pub samples: usize,

    /// Flip the sign of one structure constant before verifying
    #[arg(long, hide = true)]
    pub corrupt_constant: bool,
}
