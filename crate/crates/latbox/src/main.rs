//! Thin command-line front end over the library. Every subcommand is a
//! direct call into one public function plus serialization.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use latbox::{
    boundedness_study, discrepancy_study, dispersion, find_t_for_n, scaling_study, selftest,
    studies, Error, Lattice, PointSet,
};

#[derive(Parser)]
#[command(
    name = "latbox",
    version,
    about = "Admissible lattices, exact point counting, and dispersion"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a lattice and write an exactly-N-point set in the unit cube
    Generate {
        /// golden | frolov | integer | custom:<lattice.json>
        #[arg(long)]
        lattice: String,
        /// Dimension for frolov/integer lattices
        #[arg(long)]
        dim: Option<usize>,
        /// Target number of points
        #[arg(long)]
        n: usize,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the dispersion of a point set file
    Dispersion {
        /// Point set in the text format written by generate
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dispersion of exactly-N-point sets across cardinalities
    Scaling {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        dim: Option<usize>,
        /// Comma-separated cardinalities, e.g. 16,32,64
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest empty box among lattice points in growing centered windows
    Bounded {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        dim: Option<usize>,
        /// Comma-separated window half-widths, e.g. 8,16,32
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counting discrepancy over randomly shifted cubes
    Counting {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        dim: Option<usize>,
        /// Comma-separated cube volumes, e.g. 10,100,1000
        #[arg(long, value_delimiter = ',', required = true)]
        volumes: Vec<f64>,
        /// Random shifts per volume
        #[arg(long, default_value_t = 50)]
        shifts: usize,
        #[arg(long, default_value_t = latbox::config::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suite
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Generate {
            lattice,
            dim,
            n,
            out,
        } => {
            let lat = build_lattice(&lattice, dim)?;
            let ps = find_t_for_n(&lat, n)?;
            emit(out.as_deref(), ps.to_text())
        }
        Cmd::Dispersion { input, out } => {
            let ps = PointSet::read_from(&input)?;
            let result = dispersion(&ps)?;
            emit(
                out.as_deref(),
                serde_json::to_string_pretty(&result)? + "\n",
            )
        }
        Cmd::Scaling {
            lattice,
            dim,
            n,
            format,
            out,
        } => {
            let lat = build_lattice(&lattice, dim)?;
            let rows = scaling_study(&lat, &n)?;
            let text = match format {
                Format::Csv => studies::scaling_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            emit(out.as_deref(), text)
        }
        Cmd::Bounded {
            lattice,
            dim,
            m,
            format,
            out,
        } => {
            let lat = build_lattice(&lattice, dim)?;
            let rows = boundedness_study(&lat, &m)?;
            let text = match format {
                Format::Csv => studies::boundedness_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            emit(out.as_deref(), text)
        }
        Cmd::Counting {
            lattice,
            dim,
            volumes,
            shifts,
            seed,
            format,
            out,
        } => {
            let lat = build_lattice(&lattice, dim)?;
            let rows = discrepancy_study(&lat, &volumes, shifts, seed)?;
            let text = match format {
                Format::Csv => studies::discrepancy_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            emit(out.as_deref(), text)
        }
        Cmd::Selftest => {
            let stdout = std::io::stdout();
            selftest::run(&mut stdout.lock())
        }
    }
}

fn build_lattice(name: &str, dim: Option<usize>) -> Result<Lattice, Error> {
    match name {
        "golden" => {
            if let Some(d) = dim {
                if d != 2 {
                    return Err(Error::InvalidInput(format!(
                        "the golden lattice is two-dimensional, got --dim {d}"
                    )));
                }
            }
            Ok(Lattice::golden())
        }
        "frolov" => Lattice::frolov(dim.unwrap_or(2)),
        "integer" => Lattice::integer(dim.unwrap_or(2)),
        other => match other.strip_prefix("custom:") {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                let lat: Lattice = serde_json::from_str(&text)?;
                if let Some(d) = dim {
                    if d != lat.dim() {
                        return Err(Error::InvalidInput(format!(
                            "--dim {d} does not match the custom lattice dimension {}",
                            lat.dim()
                        )));
                    }
                }
                Ok(lat)
            }
            None => Err(Error::InvalidInput(format!(
                "unknown lattice '{other}'; expected golden, frolov, integer, or custom:<file>"
            ))),
        },
    }
}

fn emit(out: Option<&Path>, text: String) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
