use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jacobi_core::sampling::DEFAULT_SEED;
use jacobi_tool::commands::{
    cmd_catalog, cmd_check, cmd_classify_ii_r, cmd_compat, cmd_darboux, cmd_poissonize, cmd_system,
};
use jacobi_tool::{Format, Report, StructureFile, ToolError};

/// Exact checks for Jacobi structures on three-dimensional Lie groups,
/// their Poissonizations and the integrable systems they carry.
#[derive(Parser)]
#[command(name = "jacobi", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for sampled rank checks and random tests.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check the structure file supports.
    Check { file: PathBuf },
    /// Poissonize the Jacobi pair and check the result.
    Poissonize { file: PathBuf },
    /// Verify the Darboux map against the Poisson structure.
    Darboux { file: PathBuf },
    /// Build the integrable system from the Darboux map and realization.
    System {
        file: PathBuf,
        /// 1-based index of the symmetry used as Hamiltonian.
        #[arg(long, default_value_t = 1)]
        hamiltonian: usize,
    },
    /// Pairwise compatibility of the Poisson structures of several files.
    Compat {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Classify constant Poisson structures on II+R.
    ClassifyIiR,
    /// Reproduce a built-in example: 3.1..3.5, 4.1..4.5 or appendix.
    Catalog {
        #[arg(long = "paper-example")]
        example: String,
    },
}

fn run(cli: &Cli) -> Result<Report, ToolError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Check { file } => cmd_check(&StructureFile::read(file)?, seed),
        Command::Poissonize { file } => cmd_poissonize(&StructureFile::read(file)?),
        Command::Darboux { file } => cmd_darboux(&StructureFile::read(file)?, seed),
        Command::System { file, hamiltonian } => {
            cmd_system(&StructureFile::read(file)?, *hamiltonian, seed)
        }
        Command::Compat { files } => {
            let parsed = files
                .iter()
                .map(|f| StructureFile::read(f))
                .collect::<Result<Vec<_>, _>>()?;
            cmd_compat(&parsed)
        }
        Command::ClassifyIiR => cmd_classify_ii_r(seed),
        Command::Catalog { example } => cmd_catalog(example, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
