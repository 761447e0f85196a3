//! Command-line front end: every computation of the crate behind one binary
//! with machine-readable output.
//!
//! Commands: `series`, `degdelta`, `census`, `pencil`, `models`. Global
//! flags `--format {plain,json,csv}` and `--output <path>`. Exit codes:
//! 0 success, 1 internal error, 2 user/input error. All output is
//! deterministic: identical inputs produce byte-identical output. JSON
//! documents carry a `schema_version` field (currently 1); exact rationals
//! appear in JSON as strings in `p/q` form.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::char_classes::{
    ahat_series, characteristic_number, sqrt_ahat_series, zero_odd_chern, CharacteristicSeries,
    ChernNumbers, Genus,
};
use crate::error::{Error, Result};
use crate::fibration::{
    deg_delta_polarized, degeneration_models, known_example_polarization, known_example_sqrt_ahat,
    master_equation_solve, Family, FujikiData, PolarizationType,
};
use crate::fourfold::{bounds_summary, census, census_to_csv, census_to_json};
use crate::pencil::{pencil_degree, SurfaceData};
use crate::rational::{parse_rational, Rational};

/// JSON schema version stamped on every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "lagfib",
    version,
    about = "Exact invariants of Lagrangian fibrations: characteristic-class series, \
             discriminant degrees, degeneration models, and the four-fold census"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenusArg {
    Ahat,
    #[value(name = "sqrt-ahat")]
    SqrtAhat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SurfaceArg {
    K3,
    Abelian,
}

#[derive(Subcommand)]
enum Command {
    /// Print a characteristic-class series in Chern classes.
    Series {
        /// Which genus to expand.
        #[arg(long, value_enum)]
        genus: GenusArg,
        /// Truncation weight (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        upto: u32,
        /// Set the odd Chern classes to zero (holomorphic symplectic case).
        #[arg(long = "c-odd-zero")]
        c_odd_zero: bool,
    },
    /// Degree of the discriminant locus from n, the polarization type, and
    /// sqrt-A-roof (a rational literal or a Chern-number record path).
    Degdelta {
        /// Half-dimension n of the total space.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Polarization type as a comma list with divisibility chain,
        /// e.g. 1,3.
        #[arg(long)]
        polarization: String,
        /// sqrt-A-roof of the total space: a rational literal like 25/32, or
        /// a path to a Chern-number JSON record.
        #[arg(long = "sqrt-ahat")]
        sqrt_ahat: String,
        /// Multiple by which the divisor restricts to the fibre polarization
        /// (cancels from the degree).
        #[arg(long = "theta-multiple", default_value_t = 1)]
        theta_multiple: u64,
    },
    /// Enumerate the admissible four-fold census (b2, b3, d, deg Delta).
    Census {
        /// Keep every divisor row, not only those with an integer degree.
        #[arg(long = "no-require-integer-degree")]
        no_require_integer_degree: bool,
    },
    /// Count singular pencil members on Surface x P1 and compare with the
    /// degree formula.
    Pencil {
        /// Surface type of the construction.
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        /// Half-dimension n of the fibration total space.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Enumerate degeneration models of a polarization type.
    Models {
        /// Polarization type as a comma list with divisibility chain.
        #[arg(long)]
        polarization: String,
    },
}

/// Parse the process arguments, run the selected command, and return the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let rendered = match dispatch(&cli) {
        Ok(rendered) => rendered,
        Err(err) => {
            eprintln!("error: {err}");
            return exit_code_of(&err);
        }
    };
    if let Some(path) = &cli.output {
        if let Err(err) = std::fs::write(path, rendered) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return 2;
        }
    } else {
        print!("{rendered}");
    }
    0
}

/// Exit code for an error: 2 for bad input, 1 for internal inconsistencies.
fn exit_code_of(err: &Error) -> i32 {
    match err {
        Error::NonIntegerResult(_)
        | Error::RingMismatch
        | Error::NonUnitConstantTerm(_)
        | Error::EmptyCensus => 1,
        _ => 2,
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Series {
            genus,
            upto,
            c_odd_zero,
        } => render_series(*genus, *upto, *c_odd_zero, cli.format),
        Command::Degdelta {
            n,
            polarization,
            sqrt_ahat,
            theta_multiple,
        } => render_degdelta(*n, polarization, sqrt_ahat, *theta_multiple, cli.format),
        Command::Census {
            no_require_integer_degree,
        } => render_census(!no_require_integer_degree, cli.format),
        Command::Pencil { surface, n } => render_pencil(*surface, *n, cli.format),
        Command::Models { polarization } => render_models(polarization, cli.format),
    }
}

fn unsupported_format(command: &str, format: OutputFormat) -> Error {
    Error::Parse(format!("{format:?} format is not supported by `{command}`").to_lowercase())
}

// ---- series ----

fn render_series(
    genus: GenusArg,
    upto: u32,
    c_odd_zero: bool,
    format: OutputFormat,
) -> Result<String> {
    let series: CharacteristicSeries = match genus {
        GenusArg::Ahat => ahat_series(upto),
        GenusArg::SqrtAhat => sqrt_ahat_series(upto),
    };
    let element = if c_odd_zero {
        zero_odd_chern(&series.element)
    } else {
        series.element.clone()
    };
    match format {
        OutputFormat::Plain => Ok(format!("{element}\n")),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct TermRecord {
                monomial: String,
                coefficient: String,
            }
            #[derive(Serialize)]
            struct Document {
                schema_version: u32,
                genus: String,
                upto: u32,
                c_odd_zero: bool,
                series: String,
                terms: Vec<TermRecord>,
            }
            let ring = element.ring();
            let terms = element
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermRecord {
                    monomial: ring.monomial_key(m),
                    coefficient: c.to_string(),
                })
                .collect();
            let genus_tag = match series.genus {
                Genus::AHat => "ahat",
                Genus::SqrtAHat => "sqrt-ahat",
            };
            to_json(&Document {
                schema_version: SCHEMA_VERSION,
                genus: genus_tag.to_string(),
                upto,
                c_odd_zero,
                series: element.to_string(),
                terms,
            })
        }
        OutputFormat::Csv => Err(unsupported_format("series", format)),
    }
}

// ---- degdelta ----

fn render_degdelta(
    n: u32,
    polarization: &str,
    sqrt_ahat_arg: &str,
    theta_multiple: u64,
    format: OutputFormat,
) -> Result<String> {
    let pol = parse_polarization(polarization)?;
    if pol.len() != n as usize {
        return Err(Error::InvalidPolarization(format!(
            "polarization has {} entries, expected n = {n}",
            pol.len()
        )));
    }
    let sqrt_ahat = resolve_sqrt_ahat(sqrt_ahat_arg, n)?;
    let product = pol.product();
    let data = FujikiData {
        n,
        polarization_product: u64::try_from(&product)
            .map_err(|_| Error::InvalidPolarization("polarization product overflows".into()))?,
        sqrt_ahat: sqrt_ahat.clone(),
        theta_multiple,
    };
    let result = master_equation_solve(&data)?;
    match format {
        OutputFormat::Plain => Ok(format!(
            "deg_delta = {}\nb_theta = {}\nc2_yl = {}\n",
            result.deg_delta, result.b_theta, result.c2_yl
        )),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document {
                schema_version: u32,
                n: u32,
                polarization: Vec<u64>,
                sqrt_ahat: String,
                theta_multiple: u64,
                deg_delta: String,
                b_theta: String,
                c2_yl: String,
            }
            to_json(&Document {
                schema_version: SCHEMA_VERSION,
                n,
                polarization: pol.entries().to_vec(),
                sqrt_ahat: sqrt_ahat.to_string(),
                theta_multiple,
                deg_delta: result.deg_delta.to_string(),
                b_theta: result.b_theta.to_string(),
                c2_yl: result.c2_yl.to_string(),
            })
        }
        OutputFormat::Csv => Err(unsupported_format("degdelta", format)),
    }
}

/// A `--sqrt-ahat` argument is either a rational literal or a path to a
/// Chern-number JSON record of complex dimension 2n.
fn resolve_sqrt_ahat(arg: &str, n: u32) -> Result<Rational> {
    if let Ok(value) = parse_rational(arg) {
        return Ok(value);
    }
    let json = std::fs::read_to_string(arg).map_err(|e| {
        Error::Parse(format!(
            "`{arg}` is neither a rational nor a readable file: {e}"
        ))
    })?;
    let record = ChernNumbers::from_json(&json)?;
    if record.complex_dimension != 2 * n {
        return Err(Error::WeightMismatch(format!(
            "record `{}` has complex dimension {}, expected 2n = {}",
            record.name,
            record.complex_dimension,
            2 * n
        )));
    }
    characteristic_number(&sqrt_ahat_series(record.complex_dimension), &record)
}

fn parse_polarization(arg: &str) -> Result<PolarizationType> {
    let entries: Vec<u64> = arg
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad polarization entry `{part}`")))
        })
        .collect::<Result<_>>()?;
    PolarizationType::new(&entries)
}

// ---- census ----

fn render_census(require_integer_degree: bool, format: OutputFormat) -> Result<String> {
    let rows = census(require_integer_degree);
    match format {
        OutputFormat::Csv => Ok(census_to_csv(&rows)),
        OutputFormat::Json => census_to_json(&rows, require_integer_degree),
        OutputFormat::Plain => {
            let bounds = bounds_summary(&rows)?;
            let mut out = String::from("b2 b3 b4 c4 c2sq rw d deg_delta\n");
            for row in &rows {
                let deg = row
                    .deg_delta
                    .map_or_else(|| "-".to_string(), |v| v.to_string());
                out.push_str(&format!(
                    "{} {} {} {} {} {} {} {}\n",
                    row.invariants.betti.b2,
                    row.invariants.betti.b3,
                    row.invariants.b4,
                    row.invariants.c4,
                    row.invariants.c2_squared,
                    row.invariants.rw,
                    row.d,
                    deg
                ));
            }
            out.push_str(&format!(
                "summary: rows={} max_rw={} max_d={} max_deg_delta={} (deg_delta <= 32, d <= 1036)\n",
                rows.len(),
                bounds.max_rw,
                bounds.max_d,
                bounds.max_deg
            ));
            Ok(out)
        }
    }
}

// ---- pencil ----

fn render_pencil(surface: SurfaceArg, n: u32, format: OutputFormat) -> Result<String> {
    let (surface_data, family) = match surface {
        SurfaceArg::K3 => (SurfaceData::k3(n), Family::HilbertScheme),
        SurfaceArg::Abelian => (SurfaceData::abelian(n), Family::GeneralizedKummer),
    };
    let counted = pencil_degree(&surface_data)?;
    let formula = deg_delta_polarized(
        n,
        &known_example_polarization(family, n),
        &known_example_sqrt_ahat(family, n),
    )?;
    if formula != Rational::from_integer(counted.into()) {
        // two independent routes disagree: internal error by contract
        return Err(Error::NonIntegerResult(formula));
    }
    match format {
        OutputFormat::Plain => Ok(format!(
            "pencil_degree = {counted}\nformula_degree = {formula}\n"
        )),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document {
                schema_version: u32,
                surface: String,
                n: u32,
                pencil_degree: i64,
                formula_degree: String,
            }
            let surface_tag = match surface {
                SurfaceArg::K3 => "k3",
                SurfaceArg::Abelian => "abelian",
            };
            to_json(&Document {
                schema_version: SCHEMA_VERSION,
                surface: surface_tag.to_string(),
                n,
                pencil_degree: counted,
                formula_degree: formula.to_string(),
            })
        }
        OutputFormat::Csv => Err(unsupported_format("pencil", format)),
    }
}

// ---- models ----

fn render_models(polarization: &str, format: OutputFormat) -> Result<String> {
    let pol = parse_polarization(polarization)?;
    let models = degeneration_models(&pol);
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for model in &models {
                let d_prime = model
                    .d_prime
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("k={} d_prime=({d_prime})\n", model.k));
            }
            out.push_str(&format!("total: {} models\n", models.len()));
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,d_prime\n");
            for model in &models {
                let d_prime = model
                    .d_prime
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(".");
                out.push_str(&format!("{},{d_prime}\n", model.k));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct ModelRecord {
                k: u64,
                d_prime: Vec<u64>,
            }
            #[derive(Serialize)]
            struct Document {
                schema_version: u32,
                polarization: Vec<u64>,
                models: Vec<ModelRecord>,
            }
            to_json(&Document {
                schema_version: SCHEMA_VERSION,
                polarization: pol.entries().to_vec(),
                models: models
                    .iter()
                    .map(|m| ModelRecord {
                        k: m.k,
                        d_prime: m.d_prime.clone(),
                    })
                    .collect(),
            })
        }
    }
}

fn to_json<T: Serialize>(document: &T) -> Result<String> {
    serde_json::to_string_pretty(document)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Parse(e.to_string()))
}
