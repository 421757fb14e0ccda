use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "modecert", version, about = "Exact certification of mode stability for the wave-map blowup profile")]
struct Cli {
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Selection {
    /// All case families.
    #[arg(long)]
    pub all: bool,
    /// Case selector such as `l=1,m=minus,d=4`.
    #[arg(long)]
    pub case: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Positivity, Hurwitz and contraction certificates per case family.
    Certify {
        #[command(flatten)]
        sel: Selection,
        /// Also write the machine report `certificates.txt` here.
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
    /// One `{l}_{m}_{d}.csv` file per case family.
    EmitCsv {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, default_value = "csv")]
        outdir: PathBuf,
        /// Add a description column.
        #[arg(long)]
        with_descriptions: bool,
    },
    /// `r_{nmax}(lambda)` over a grid in the closed right half-plane.
    Sweep {
        /// Concrete selector `l=..,m=..,d=..`.
        #[arg(long)]
        case: String,
        /// `re_max,im_max,step`.
        #[arg(long, default_value = "5,5,0.5")]
        grid: String,
        #[arg(long, default_value_t = 5000)]
        nmax: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Eigenvalues of K on vector-valued harmonics and the Casimir identity.
    Casimir {
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// The grid d = 3..7, l = 1..4.
        #[arg(long)]
        all: bool,
    },
    /// Symbolic checks of the mode equations and their transformations.
    OdeVerify {
        /// Only the symmetry-mode residuals.
        #[arg(long)]
        symmetry_modes: bool,
    },
    /// Wall's continued fraction of a univariate polynomial.
    Wall {
        #[arg(long, conflicts_with = "file")]
        poly: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 || rayon::ThreadPoolBuilder::new().num_threads(j).build_global().is_err() {
            eprintln!("error: invalid --jobs");
            return ExitCode::from(2);
        }
    }
    let outcome = match cli.command {
        Command::Certify { sel, outdir } => commands::certify(&sel, outdir.as_deref()),
        Command::EmitCsv {
            sel,
            outdir,
            with_descriptions,
        } => commands::emit_csv(&sel, &outdir, with_descriptions),
        Command::Sweep { case, grid, nmax, tol } => commands::sweep(&case, &grid, nmax, tol),
        Command::Casimir { d, l, all } => commands::casimir(d, l, all),
        Command::OdeVerify { symmetry_modes } => commands::ode_verify(symmetry_modes),
        Command::Wall { poly, file } => commands::wall(poly, file),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
