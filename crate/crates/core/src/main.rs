use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use xmodhopf::cli::{emit_report, exit_code, parse_field, parse_spec, run_pipeline, ReportFormat, Stage, DEFAULT_CAP};
use xmodhopf::exactlin::Field;

#[derive(Parser)]
#[command(
    name = "xmodhopf",
    version,
    about = "Verify crossed modules, 2-groups and their Hopf-algebraic shadows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ground field: `rational` or `fp:<p>`. Overrides the instance file.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report: Format,

    /// Largest group order accepted anywhere in the run.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    max_order: usize,

    /// Append per-stage wall-clock times to the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the crossed-module axioms.
    Validate { spec: PathBuf },
    /// Build the 2-group and check the internal-category laws.
    #[command(name = "build-2group")]
    Build2Group { spec: PathBuf },
    /// Build k[G] as a trialgebra and check its laws.
    Trialgebra { spec: PathBuf },
    /// Build k(G) as a cotrialgebra and check its laws and duality.
    Cotrialgebra { spec: PathBuf },
    /// Compare pullbacks and pushouts of Hopf algebras with group pullbacks.
    #[command(name = "limits-check")]
    LimitsCheck { spec: PathBuf },
    /// Decompose k(G) over F_p into matrix-coalgebra blocks.
    #[command(name = "peter-weyl")]
    PeterWeyl { spec: PathBuf },
    /// Reconstruct k(G) from comodules and run the representation-level checks.
    #[command(name = "coend-check")]
    CoendCheck { spec: PathBuf },
    /// Run the stages listed in the instance file (all of them by default).
    Full { spec: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (path, stages) = match &cli.command {
        Command::Validate { spec } => (spec, Some(Stage::Validate)),
        Command::Build2Group { spec } => (spec, Some(Stage::Build2Group)),
        Command::Trialgebra { spec } => (spec, Some(Stage::Trialgebra)),
        Command::Cotrialgebra { spec } => (spec, Some(Stage::Cotrialgebra)),
        Command::LimitsCheck { spec } => (spec, Some(Stage::LimitsCheck)),
        Command::PeterWeyl { spec } => (spec, Some(Stage::PeterWeyl)),
        Command::CoendCheck { spec } => (spec, Some(Stage::CoendCheck)),
        Command::Full { spec } => (spec, None),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let mut spec = match parse_spec(&text, cli.max_order) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    if let Some(f) = cli.field {
        spec = spec.with_field(f);
    }
    let stages = match stages {
        Some(s) => vec![s],
        None => spec.stages.clone(),
    };
    let out = match run_pipeline(&spec, &stages) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    };
    let format = match cli.report {
        Format::Json => ReportFormat::Json,
        Format::Text => ReportFormat::Text,
    };
    let timings = cli.timings.then_some(out.timings.as_slice());
    print!("{}", emit_report(&out.report, format, timings));
    ExitCode::from(exit_code(&out.report) as u8)
}
