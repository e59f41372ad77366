mod graph;
mod json;
mod text;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kdirac_core::dirac4::run_property_suite;
use kdirac_core::{build_bgg, build_complex, build_hasse, canonical_seed, direct_images, Error, Weight};

#[derive(Parser)]
#[command(name = "kdirac", version, about = "Relative BGG diagrams, direct images and the k-Dirac complex in dimension 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
    Tikz,
}

#[derive(Args)]
struct Common {
    /// Number of Clifford variables.
    #[arg(long)]
    k: usize,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Print weights as half-integers instead of omitting the factor 1/2.
    #[arg(long)]
    half: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Relative Hasse diagram with root-labelled edges.
    Hasse(Common),
    /// Weights of the relative BGG diagram.
    Bgg {
        #[command(flatten)]
        common: Common,
        /// Initial weight as comma-separated doubled coordinates (default: the canonical seed).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seed: Option<Vec<i64>>,
    },
    /// Direct image of every BGG weight, with its degree.
    Pushdown(Common),
    /// The pushed-down complex: modules, dimensions and operator orders.
    Complex(Common),
    /// Dimension table of the modules in the complex.
    Dims(Common),
    /// Exact property checks for the Dirac operator in k variables.
    CheckDirac {
        #[arg(long)]
        k: usize,
        /// Maximum total degree of the random fields.
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seedrng: u64,
    },
}

enum Failure {
    Core(Error),
    Properties(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::InvalidParameter(_) | Error::UnsupportedRank { .. } | Error::RankMismatch { .. }) => 2,
            Failure::Core(Error::DominanceViolation { .. }) => 3,
            Failure::Core(Error::Structural(_) | Error::Overflow(_)) | Failure::Properties(_) => 4,
        }
    }
}

fn unsupported_format(command: &str, format: OutputFormat) -> Failure {
    Failure::Core(Error::InvalidParameter(format!(
        "{command} does not support --format {}",
        format.to_possible_value().expect("no skipped variants").get_name()
    )))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Hasse(c) => {
            let d = build_hasse(c.k)?;
            Ok(match c.format {
                OutputFormat::Text => text::hasse(&d),
                OutputFormat::Json => json::to_string(&json::HasseRecord::new(&d)),
                OutputFormat::Dot => graph::Graph::hasse(&d).to_dot("hasse"),
                OutputFormat::Tikz => graph::Graph::hasse(&d).to_tikz(),
            })
        }
        Command::Bgg { common: c, seed } => {
            let seed = match seed {
                Some(coords) => Weight::from_doubled(c.k, coords)?,
                None => canonical_seed(c.k)?,
            };
            let d = build_bgg(c.k, &seed)?;
            Ok(match c.format {
                OutputFormat::Text => text::bgg(&d, c.half),
                OutputFormat::Json => json::to_string(&json::Report::bgg(&d)),
                OutputFormat::Dot => graph::Graph::bgg(&d, c.half).to_dot("bgg"),
                OutputFormat::Tikz => graph::Graph::bgg(&d, c.half).to_tikz(),
            })
        }
        Command::Pushdown(c) => {
            let d = build_bgg(c.k, &canonical_seed(c.k)?)?;
            let images = direct_images(&d)?;
            Ok(match c.format {
                OutputFormat::Text => text::pushdown(&d, &images, c.half),
                OutputFormat::Json => json::to_string(&json::Report::full(&d, &images, &build_complex(c.k)?)),
                OutputFormat::Dot => graph::Graph::pushdown(&d, &images, c.half).to_dot("pushdown"),
                OutputFormat::Tikz => graph::Graph::pushdown(&d, &images, c.half).to_tikz(),
            })
        }
        Command::Complex(c) => {
            let complex = build_complex(c.k)?;
            Ok(match c.format {
                OutputFormat::Text => text::complex(&complex, c.half),
                OutputFormat::Json => {
                    let d = build_bgg(c.k, &canonical_seed(c.k)?)?;
                    json::to_string(&json::Report::full(&d, &direct_images(&d)?, &complex))
                }
                OutputFormat::Dot => graph::Graph::complex(&complex).to_dot("complex"),
                OutputFormat::Tikz => graph::Graph::complex(&complex).to_tikz(),
            })
        }
        Command::Dims(c) => {
            let complex = build_complex(c.k)?;
            match c.format {
                OutputFormat::Text => Ok(text::dims(&complex)),
                OutputFormat::Json => Ok(json::to_string(&json::ComplexRecord::new(&complex))),
                other => Err(unsupported_format("dims", other)),
            }
        }
        Command::CheckDirac { k, degree, trials, seedrng } => {
            let report = run_property_suite(k, degree, trials, seedrng)?;
            let out = text::check_dirac(k, degree, trials, seedrng, &report);
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Properties(out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Properties(report) => {
                    print!("{report}");
                    eprintln!("error: Dirac property checks failed");
                }
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
