use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bchkit::output::{Basis, OutputDocument};
use bchkit::{bench, verify, CliError};
use bchkit_core::{bch_direct_result, bch_recurrence, BchResult};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "bchkit",
    version,
    about = "Exact Baker-Campbell-Hausdorff components and their Lie certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute C_1..C_N and print them.
    Compute {
        #[arg(short = 'n', long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = BasisArg::Words)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the randomized identity checks and certify the recurrence output.
    Verify {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time both computation routes per degree (CSV).
    Bench {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Recurrence,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Words,
    Rightnormed,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Words => Basis::Words,
            BasisArg::Rightnormed => Basis::Rightnormed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn compute(
    degree: usize,
    method: MethodArg,
    basis: Basis,
    format: Format,
    output: Option<&PathBuf>,
) -> Result<ExitCode, CliError> {
    let (result, label): (BchResult, &str) = match method {
        MethodArg::Direct => (bch_direct_result(degree)?, "direct"),
        MethodArg::Recurrence => (bch_recurrence(degree)?, "recurrence"),
        MethodArg::Both => {
            let direct = bch_direct_result(degree)?;
            let rec = bch_recurrence(degree)?;
            if let Some(n) = (1..=degree).find(|&n| direct.component(n) != rec.component(n)) {
                eprintln!("error: direct and recurrence results differ at degree {n}");
                return Ok(ExitCode::from(EXIT_FAILURE));
            }
            (rec, "both")
        }
    };
    let doc = OutputDocument::from_result(&result, label, basis);
    let text = match format {
        Format::Text => doc.to_text()?,
        Format::Json => doc.to_json()?,
        Format::Csv => doc.to_csv()?,
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Compute {
            degree,
            method,
            basis,
            format,
            output,
        } => compute(degree as usize, method, basis.into(), format, output.as_ref()),
        Command::Verify {
            max_degree,
            trials,
            seed,
            output,
        } => {
            let report = verify::run(&verify::VerifyConfig::new(max_degree as usize, trials, seed));
            emit(output.as_ref(), &report.render())?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            })
        }
        Command::Bench { max_degree, output } => {
            let rows = bench::run(max_degree as usize)?;
            emit(output.as_ref(), &bench::to_csv(&rows)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
