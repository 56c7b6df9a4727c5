use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfideal_cli::{
    commands, AnnMethod, CliError, DatumConfig, Format, IdealsAction, ModuleSelector, Options,
    Report, ShowWhat,
};
use hopfideal_core::ideals::DEFAULT_CAP;

#[derive(Parser)]
#[command(
    name = "hopfideal",
    version,
    about = "Ideals and annihilators of pointed Hopf algebras of rank one"
)]
struct Cli {
    /// TOML datum file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// seed for sampled computations
    #[arg(long, global = true, default_value_t = hopfideal_cli::DEFAULT_SEED)]
    seed: u64,
    /// largest number of enumeration candidates to try
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the datum and print its invariants
    Validate,
    /// Print idempotents, tau, the index partition, simple modules or the Hopf axiom audit
    Show {
        #[arg(value_enum)]
        what: ShowWhat,
    },
    /// Annihilator of M(k,i) or P_j
    Ann {
        /// `M:k,i` or `P:j`
        module: String,
        #[arg(long, value_enum, default_value_t = AnnMethod::Both)]
        method: AnnMethod,
    },
    /// Enumerate or classify the ideals
    Ideals {
        #[arg(value_enum)]
        action: IdealsAction,
        /// draws for `sample`
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Parse("--config PATH is required".into()))?;
    let datum = DatumConfig::load(path)?.build()?;
    let mut opts = Options {
        seed: cli.seed,
        cap: cli.cap,
        ..Options::default()
    };
    match &cli.command {
        Command::Validate => Ok(commands::validate(&datum, &opts)),
        Command::Show { what } => commands::show(&datum, *what, &opts),
        Command::Ann { module, method } => {
            let sel: ModuleSelector = module.parse()?;
            commands::ann(&datum, sel, *method, &opts)
        }
        Command::Ideals { action, count } => {
            opts.count = *count;
            commands::ideals(&datum, *action, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
